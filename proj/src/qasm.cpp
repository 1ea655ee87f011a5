// Copyright 2026 hoboc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoboc/qasm.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hoboc {

namespace {

// "1.0" rather than "1" for whole numbers; shortest round-trip otherwise.
std::string format_angle(double value) {
    if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 1e15) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.1f", value);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace

std::string emit_qasm(const Circuit& c, double gamma, bool layer_barriers) {
    Circuit sorted = c;
    sorted.sort_layers();
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << sorted.qubit_count() << "];\n";
    bool first_layer = true;
    for (const auto& layer : sorted.layers()) {
        if (layer.empty()) continue;
        if (!first_layer && layer_barriers) out << "barrier q;\n";
        first_layer = false;
        for (const Gate& g : layer) {
            if (const auto* cx = std::get_if<Cnot>(&g)) {
                out << "cx q[" << cx->control << "],q[" << cx->target << "];\n";
            } else {
                const auto& r = std::get<Rotation>(g);
                out << "rz(" << format_angle(2.0 * gamma * r.alpha) << ") q[" << r.qubit
                    << "];\n";
            }
        }
    }
    return out.str();
}

nlohmann::json circuit_to_json(const Circuit& c) {
    Circuit sorted = c;
    sorted.sort_layers();
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& layer : sorted.layers()) {
        nlohmann::json jl = nlohmann::json::array();
        for (const Gate& g : layer) {
            if (const auto* cx = std::get_if<Cnot>(&g)) {
                jl.push_back({{"op", "cnot"}, {"ctrl", cx->control + 1}, {"tgt", cx->target + 1}});
            } else {
                const auto& r = std::get<Rotation>(g);
                jl.push_back({{"op", "rz"},
                              {"qubit", r.qubit + 1},
                              {"monomial", mask_to_indices(r.monomial)},
                              {"alpha", r.alpha}});
            }
        }
        layers.push_back(std::move(jl));
    }
    return {{"q", sorted.qubit_count()}, {"n", sorted.var_count()}, {"layers", std::move(layers)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
    Circuit c(j.at("q").get<int>(), j.at("n").get<int>());
    const auto& layers = j.at("layers");
    int k = 0;
    for (const auto& layer : layers) {
        for (const auto& jg : layer) {
            const std::string op = jg.at("op").get<std::string>();
            if (op == "cnot") {
                c.add(k, Cnot{jg.at("ctrl").get<int>() - 1, jg.at("tgt").get<int>() - 1});
            } else if (op == "rz") {
                Mask m = mask_from_indices(jg.at("monomial").get<std::vector<int>>());
                c.add(k, Rotation{jg.at("qubit").get<int>() - 1, m, jg.at("alpha").get<double>()});
            } else {
                throw std::invalid_argument("unknown gate op '" + op + "'");
            }
        }
        ++k;
    }
    c.ensure_layers(static_cast<int>(layers.size()));
    return c;
}

}  // namespace hoboc
