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

#include "hoboc/templates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hoboc {

namespace {

constexpr int kMaxTemplateDegree = 20;

// Unit-coefficient expansion value for a subset tag: (-1)^|I| / 2^degree.
double unit_angle(Mask tag, int degree) {
    const double magnitude = std::ldexp(1.0, -degree);
    return (std::popcount(tag) % 2 == 0) ? magnitude : -magnitude;
}

}  // namespace

Circuit base_template() {
    Circuit c(2, 2);
    c.add(0, Rotation{0, 0b01, unit_angle(0b01, 2)});
    c.add(0, Rotation{1, 0b10, unit_angle(0b10, 2)});
    c.add(1, Cnot{0, 1});
    c.add(2, Rotation{1, 0b11, unit_angle(0b11, 2)});
    c.add(3, Cnot{0, 1});
    return c;
}

Circuit grow_template(const Circuit& c_d, int degree) {
    if (degree < 2 || degree >= kMaxTemplateDegree)
        throw std::invalid_argument("template degree out of range");
    const int m = 1 << degree;  // input layer count
    if (c_d.qubit_count() != degree || c_d.layer_count() != m)
        throw std::invalid_argument("input template has the wrong shape for its degree");

    const int old_last = degree - 1;  // 0-based last qubit of the input
    const int new_last = degree;      // 0-based new qubit
    const Mask old_bit = Mask{1} << old_last;
    const Mask new_bit = Mask{1} << new_last;

    // The last-qubit track of the input: one incoming CNOT on every even
    // layer plus rotations (the singleton on layer 1, then odd layers).
    const int halves = m / 2;  // 2^(D-1)
    std::vector<int> flip_sources;
    std::vector<Mask> last_tags;
    for (int k = 0; k < m; ++k) {
        for (const Gate& g : c_d.layers()[k]) {
            if (const auto* cx = std::get_if<Cnot>(&g)) {
                if (cx->target == old_last) {
                    if (k % 2 != 1 || cx->control >= old_last)
                        throw std::invalid_argument(
                            "input template lacks the expected last-qubit walk");
                    flip_sources.push_back(cx->control);
                }
            } else {
                const auto& r = std::get<Rotation>(g);
                if (r.qubit == old_last) last_tags.push_back(r.monomial);
            }
        }
    }
    if (static_cast<int>(flip_sources.size()) != halves ||
        static_cast<int>(last_tags.size()) != halves || last_tags.front() != old_bit)
        throw std::invalid_argument("input template lacks the expected last-qubit walk");
    // The closing layer is replaced by the midpoint CNOT, so it must hold
    // nothing besides the walk-closing flip.
    if (c_d.layers().back().size() != 1 ||
        !std::holds_alternative<Cnot>(c_d.layers().back().front()))
        throw std::invalid_argument("input template must end with its closing CNOT alone");

    const int out_degree = degree + 1;
    Circuit out(out_degree, out_degree);

    auto relabel_mask = [&](Mask tag) -> Mask {
        return (tag & old_bit) ? ((tag & ~old_bit) | new_bit) : tag;
    };

    // First half: the input interior with its last qubit renamed, plus the
    // freed-up singleton, then the midpoint CNOT.
    out.add(0, Rotation{old_last, old_bit, unit_angle(old_bit, out_degree)});
    for (int k = 0; k + 1 < m; ++k) {
        for (const Gate& g : c_d.layers()[k]) {
            if (const auto* cx = std::get_if<Cnot>(&g)) {
                int ctrl = cx->control == old_last ? new_last : cx->control;
                int tgt = cx->target == old_last ? new_last : cx->target;
                out.add(k, Cnot{ctrl, tgt});
            } else {
                const auto& r = std::get<Rotation>(g);
                Mask tag = relabel_mask(r.monomial);
                int qubit = r.qubit == old_last ? new_last : r.qubit;
                out.add(k, Rotation{qubit, tag, unit_angle(tag, out_degree)});
            }
        }
    }
    out.add(m - 1, Cnot{old_last, new_last});

    // Second half, interleaved one layer apart:
    //  odd slots: old-last walk CNOTs + reversed-order rotations on the new
    //  qubit; even slots: replayed CNOTs into the new qubit + the old-last
    //  rotations. Both walks close on the final two layers.
    for (int t = 1; t <= halves; ++t) {
        const int odd_slot = m + 2 * (t - 1);  // 1-based layer 2^D + 2t - 1
        out.add(odd_slot, Cnot{flip_sources[t - 1], old_last});
        Mask tag = relabel_mask(last_tags[halves - t]) | old_bit;
        out.add(odd_slot, Rotation{new_last, tag, unit_angle(tag, out_degree)});

        const int even_slot = m + 2 * t - 1;  // 1-based layer 2^D + 2t
        if (t < halves) {
            out.add(even_slot, Cnot{flip_sources[t - 1], new_last});
            Mask old_tag = last_tags[t];
            out.add(even_slot, Rotation{old_last, old_tag, unit_angle(old_tag, out_degree)});
        } else {
            out.add(even_slot, Cnot{old_last, new_last});
        }
    }
    return out;
}

const Circuit& template_circuit(int degree) {
    if (degree < 2 || degree > kMaxTemplateDegree)
        throw std::invalid_argument("template degree out of range: " + std::to_string(degree));
    static std::map<int, Circuit> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
    if (cache.empty()) cache.emplace(2, base_template());
    int have = cache.rbegin()->first;
    while (have < degree) {
        Circuit next = grow_template(cache.at(have), have);
        ++have;
        cache.emplace(have, std::move(next));
    }
    return cache.at(degree);
}

Circuit compile_greedy(const HoboPolynomial& f, const IsingPolynomial& h) {
    if (f.var_count() != h.var_count())
        throw std::invalid_argument("polynomial and Hamiltonian disagree on n");
    const int n = f.var_count();
    Circuit out(n, n);

    struct Job {
        Mask monomial;
        double coefficient;
    };
    std::vector<Job> pending;
    for (const Term& t : f.terms())
        if (t.monomial != 0) pending.push_back({t.monomial, t.coefficient});
    std::sort(pending.begin(), pending.end(),
              [](const Job& a, const Job& b) { return mask_lex_less(a.monomial, b.monomial); });

    std::vector<int> next_free(n, 0);
    std::vector<bool> placed(pending.size(), false);

    for (std::size_t round = 0; round < pending.size(); ++round) {
        int best = -1;
        int best_start = 0;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (placed[i]) continue;
            int start = 0;
            Mask mask = pending[i].monomial;
            while (mask) {
                int bit = std::countr_zero(mask);
                mask &= mask - 1;
                start = std::max(start, next_free[bit]);
            }
            if (best < 0 || start < best_start) {  // lex order settles ties
                best = static_cast<int>(i);
                best_start = start;
            }
        }
        const Job& job = pending[best];
        placed[best] = true;

        const std::vector<int> vars = mask_to_indices(job.monomial);  // 1-based
        const int d = static_cast<int>(vars.size());
        int span = 1;
        if (d == 1) {
            Mask tag = job.monomial;
            out.add(best_start, Rotation{vars[0] - 1, tag, -0.5 * job.coefficient});
        } else {
            span = 1 << d;
            const Circuit& tmpl = template_circuit(d);
            for (int k = 0; k < tmpl.layer_count(); ++k) {
                for (const Gate& g : tmpl.layers()[k]) {
                    if (const auto* cx = std::get_if<Cnot>(&g)) {
                        out.add(best_start + k,
                                Cnot{vars[cx->control] - 1, vars[cx->target] - 1});
                    } else {
                        const auto& r = std::get<Rotation>(g);
                        Mask tag = 0;
                        Mask local = r.monomial;
                        while (local) {
                            int bit = std::countr_zero(local);
                            local &= local - 1;
                            tag |= Mask{1} << (vars[bit] - 1);
                        }
                        out.add(best_start + k,
                                Rotation{vars[r.qubit] - 1, tag, job.coefficient * r.alpha});
                    }
                }
            }
        }
        for (int v : vars) next_free[v - 1] = best_start + span;
    }
    return out;
}

}  // namespace hoboc
