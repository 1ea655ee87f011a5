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

#include "hoboc/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hoboc {

std::vector<int> gate_qubits(const Gate& g) {
    if (const auto* c = std::get_if<Cnot>(&g)) return {c->control, c->target};
    return {std::get<Rotation>(g).qubit};
}

bool gate_equal(const Gate& a, const Gate& b, double tol) {
    if (a.index() != b.index()) return false;
    if (const auto* ca = std::get_if<Cnot>(&a)) {
        const auto& cb = std::get<Cnot>(b);
        return ca->control == cb.control && ca->target == cb.target;
    }
    const auto& ra = std::get<Rotation>(a);
    const auto& rb = std::get<Rotation>(b);
    return ra.qubit == rb.qubit && ra.monomial == rb.monomial &&
           std::fabs(ra.alpha - rb.alpha) <= tol;
}

namespace {

int min_qubit(const Gate& g) {
    auto qs = gate_qubits(g);
    return *std::min_element(qs.begin(), qs.end());
}

void validate_gate(const Gate& g, int q, int n) {
    for (int qubit : gate_qubits(g)) {
        if (qubit < 0 || qubit >= q)
            throw std::invalid_argument("gate qubit " + std::to_string(qubit + 1) +
                                        " outside 1.." + std::to_string(q));
    }
    if (const auto* c = std::get_if<Cnot>(&g)) {
        if (c->control == c->target)
            throw std::invalid_argument("a qubit may not control itself");
    } else {
        const auto& r = std::get<Rotation>(g);
        if (r.monomial == 0) throw std::invalid_argument("rotation monomial must be nonempty");
        if (n < 32 && (r.monomial >> n))
            throw std::invalid_argument("rotation monomial references a variable beyond n");
    }
}

}  // namespace

Circuit::Circuit(int qubit_count, int var_count) : q_(qubit_count), n_(var_count) {
    if (q_ < 0 || n_ < 0 || n_ > q_)
        throw std::invalid_argument("need 0 <= n <= q");
}

int Circuit::depth() const {
    int d = 0;
    for (const auto& layer : layers_)
        if (!layer.empty()) ++d;
    return d;
}

void Circuit::add(int layer, Gate gate) {
    if (layer < 0) throw std::invalid_argument("layer index must be non-negative");
    validate_gate(gate, q_, n_);
    if (layer >= static_cast<int>(layers_.size())) layers_.resize(layer + 1);
    for (const Gate& existing : layers_[layer]) {
        for (int qa : gate_qubits(existing))
            for (int qb : gate_qubits(gate))
                if (qa == qb)
                    throw std::invalid_argument("qubit " + std::to_string(qa + 1) +
                                                " already acted on in layer " +
                                                std::to_string(layer + 1));
    }
    layers_[layer].push_back(gate);
}

void Circuit::append_layer(std::vector<Gate> gates) {
    int layer = layer_count();
    if (gates.empty()) {
        layers_.emplace_back();
        return;
    }
    for (const Gate& g : gates) add(layer, g);
}

void Circuit::ensure_layers(int count) {
    if (count > layer_count()) layers_.resize(count);
}

int Circuit::cnot_count() const {
    int count = 0;
    for (const auto& layer : layers_)
        for (const Gate& g : layer)
            if (std::holds_alternative<Cnot>(g)) ++count;
    return count;
}

int Circuit::rotation_count() const {
    int count = 0;
    for (const auto& layer : layers_)
        for (const Gate& g : layer)
            if (std::holds_alternative<Rotation>(g)) ++count;
    return count;
}

void Circuit::sort_layers() {
    for (auto& layer : layers_)
        std::sort(layer.begin(), layer.end(),
                  [](const Gate& a, const Gate& b) { return min_qubit(a) < min_qubit(b); });
}

bool Circuit::operator==(const Circuit& other) const {
    return circuits_equal(*this, other);
}

ParityState::ParityState(int qubit_count, int var_count) {
    if (var_count > qubit_count) throw std::invalid_argument("need n <= q");
    table_.assign(qubit_count, 0);
    for (int i = 0; i < var_count; ++i) table_[i] = Mask{1} << i;
}

bool ParityState::is_initial(int var_count) const {
    for (int i = 0; i < qubit_count(); ++i) {
        Mask expected = i < var_count ? (Mask{1} << i) : 0;
        if (table_[i] != expected) return false;
    }
    return true;
}

ParityState apply_layer(const ParityState& state, std::span<const Gate> layer) {
    std::vector<bool> used(state.qubit_count(), false);
    for (const Gate& g : layer) {
        for (int qubit : gate_qubits(g)) {
            if (qubit < 0 || qubit >= state.qubit_count())
                throw std::invalid_argument("gate qubit outside the register");
            if (used[qubit])
                throw std::invalid_argument("qubit " + std::to_string(qubit + 1) +
                                            " acted on twice within one layer");
            used[qubit] = true;
        }
        if (const auto* c = std::get_if<Cnot>(&g)) {
            if (c->control == c->target)
                throw std::invalid_argument("a qubit may not control itself");
        }
    }
    // Gates within a layer touch disjoint qubits, so application order is
    // immaterial; sources are read from the pre-layer state regardless.
    std::vector<Mask> table(state.table().begin(), state.table().end());
    for (const Gate& g : layer) {
        if (const auto* c = std::get_if<Cnot>(&g)) {
            table[c->target] = state.at(c->target) ^ state.at(c->control);
        }
    }
    return ParityState::from_table(std::move(table));
}

ParityState ParityState::from_table(std::vector<Mask> table) {
    ParityState s;
    s.table_ = std::move(table);
    return s;
}

Circuit concatenate(const Circuit& a, const Circuit& b, const std::vector<int>& qubit_map) {
    if (static_cast<int>(qubit_map.size()) != b.qubit_count())
        throw std::invalid_argument("qubit map must cover every qubit of b");
    std::vector<bool> seen(a.qubit_count(), false);
    for (int target : qubit_map) {
        if (target < 0 || target >= a.qubit_count())
            throw std::invalid_argument("qubit map leaves the destination register");
        if (seen[target]) throw std::invalid_argument("qubit map must be injective");
        seen[target] = true;
    }
    Circuit out = a;
    int base = a.layer_count();
    for (int k = 0; k < b.layer_count(); ++k) {
        for (const Gate& g : b.layers()[k]) {
            if (const auto* c = std::get_if<Cnot>(&g)) {
                out.add(base + k, Cnot{qubit_map[c->control], qubit_map[c->target]});
            } else {
                Rotation r = std::get<Rotation>(g);
                Mask mapped = 0;
                Mask m = r.monomial;
                while (m) {
                    int bit = std::countr_zero(m);
                    m &= m - 1;
                    mapped |= Mask{1} << qubit_map[bit];
                }
                out.add(base + k, Rotation{qubit_map[r.qubit], mapped, r.alpha});
            }
        }
    }
    out.ensure_layers(base + b.layer_count());
    return out;
}

Circuit compact(const Circuit& c) {
    Circuit out(c.qubit_count(), c.var_count());
    std::vector<int> next_free(c.qubit_count(), 0);
    Circuit sorted = c;
    sorted.sort_layers();
    for (const auto& layer : sorted.layers()) {
        for (const Gate& g : layer) {
            int at = 0;
            for (int qubit : gate_qubits(g)) at = std::max(at, next_free[qubit]);
            out.add(at, g);
            for (int qubit : gate_qubits(g)) next_free[qubit] = at + 1;
        }
    }
    return out;
}

bool circuits_equal(const Circuit& a, const Circuit& b, double tol) {
    if (a.qubit_count() != b.qubit_count() || a.var_count() != b.var_count()) return false;
    Circuit sa = a;
    Circuit sb = b;
    sa.sort_layers();
    sb.sort_layers();
    // Trailing empty layers are irrelevant.
    int la = sa.layer_count();
    int lb = sb.layer_count();
    while (la > 0 && sa.layers()[la - 1].empty()) --la;
    while (lb > 0 && sb.layers()[lb - 1].empty()) --lb;
    if (la != lb) return false;
    for (int k = 0; k < la; ++k) {
        const auto& ga = sa.layers()[k];
        const auto& gb = sb.layers()[k];
        if (ga.size() != gb.size()) return false;
        for (std::size_t i = 0; i < ga.size(); ++i)
            if (!gate_equal(ga[i], gb[i], tol)) return false;
    }
    return true;
}

}  // namespace hoboc
