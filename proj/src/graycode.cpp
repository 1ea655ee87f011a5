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

#include "hoboc/graycode.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hoboc {

std::vector<Mask> gray_walk(int degree) {
    if (degree < 1) throw std::invalid_argument("gray walk needs degree >= 1");
    if (degree > kMaxVars) throw std::invalid_argument("gray walk degree too large");
    std::vector<Mask> walk;
    walk.reserve((std::size_t{1} << degree) - 1);
    for (Mask t = 1; t < (Mask{1} << degree); ++t) walk.push_back(t ^ (t >> 1));
    return walk;
}

Circuit compile_gray(const HoboPolynomial& f, bool ancilla_degree_one) {
    const int n = f.var_count();
    const int ancilla = n;  // 0-based; starts by representing the constant 1
    Circuit out(n + 1, n);

    for (const Term& t : f.terms()) {
        const int d = mask_degree(t.monomial);
        if (d == 0) continue;  // global phase only
        const std::vector<int> vars = mask_to_indices(t.monomial);  // 1-based
        if (d == 1 && !ancilla_degree_one) {
            out.append_layer({Rotation{vars[0] - 1, t.monomial, -0.5 * t.coefficient}});
            continue;
        }

        const double magnitude = std::ldexp(t.coefficient, -d);
        auto angle = [&](Mask tag) {
            return (std::popcount(tag) % 2 == 0) ? magnitude : -magnitude;
        };
        auto global_mask = [&](Mask local) {
            Mask g = 0;
            while (local) {
                int bit = std::countr_zero(local);
                local &= local - 1;
                g |= Mask{1} << (vars[bit] - 1);
            }
            return g;
        };

        const std::vector<Mask> walk = gray_walk(d);
        Mask held = 0;
        for (const Mask local : walk) {
            const Mask target = global_mask(local);
            const Mask flip = held ^ target;  // exactly one variable
            out.append_layer({Cnot{std::countr_zero(flip), ancilla}});
            held = target;
            out.append_layer({Rotation{ancilla, target, angle(target)}});
        }
        // Exit: the walk ends on a singleton, one flip away from empty.
        out.append_layer({Cnot{std::countr_zero(held), ancilla}});
    }
    return out;
}

}  // namespace hoboc
