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

#include <doctest.h>

#include <set>

#include "hoboc/graycode.hpp"
#include "hoboc/polynomial.hpp"
#include "hoboc/verify.hpp"

using namespace hoboc;

TEST_CASE("gray walk basics") {
    CHECK(gray_walk(1) == std::vector<Mask>{0b1});
    CHECK(gray_walk(2) == std::vector<Mask>{0b01, 0b11, 0b10});
    CHECK_THROWS_AS(gray_walk(0), std::invalid_argument);
}

TEST_CASE("gray walk invariants for degrees 1..8") {
    for (int d = 1; d <= 8; ++d) {
        const auto walk = gray_walk(d);
        CHECK(walk.size() == (std::size_t{1} << d) - 1);
        std::set<Mask> seen(walk.begin(), walk.end());
        CHECK(seen.size() == walk.size());      // every nonempty subset once
        CHECK(mask_degree(walk.front()) == 1);  // singleton endpoints
        CHECK(mask_degree(walk.back()) == 1);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i)
            CHECK(mask_degree(walk[i] ^ walk[i + 1]) == 1);
    }
}

TEST_CASE("gray depth formula per block") {
    for (int d = 3; d <= 6; ++d) {
        std::string text;
        for (int i = 1; i <= d; ++i) text += "x" + std::to_string(i) + " ";
        Circuit c = compile_gray(HoboPolynomial::parse(text));
        CHECK(c.depth() == (1 << (d + 1)) - 1);
        CHECK(c.qubit_count() == d + 1);
    }
}

TEST_CASE("gray concatenation adds block depths") {
    auto f = HoboPolynomial::parse("x1 x2 x3 + x2 x3 x4");
    CHECK(compile_gray(f).depth() == 30);
    auto g = HoboPolynomial::parse("x1 x2 + x3 x4 x5");
    CHECK(compile_gray(g).depth() == 7 + 15);
}

TEST_CASE("gray circuits pass both oracles") {
    auto f = HoboPolynomial::parse("2 x1 x2 x3 - x2 x3 x4 + 0.5 x4");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c = compile_gray(f);
    CHECK(check_symbolic(c, h, CheckMode::AngleSum).passed);
    for (double gamma : sample_gammas(3, 17)) CHECK(check_statevector(c, h, gamma).passed);
}

TEST_CASE("the ancilla clears after every block") {
    auto f = HoboPolynomial::parse("x1 x2 x3 + x1 x4");
    Circuit c = compile_gray(f);
    const int ancilla = c.qubit_count() - 1;
    ParityState s(c.qubit_count(), c.var_count());
    int cnots_seen = 0;
    const int first_block_cnots = 1 << 3;  // 2^D CNOTs per block
    for (const auto& layer : c.layers()) {
        for (const Gate& g : layer)
            if (std::holds_alternative<Cnot>(g)) ++cnots_seen;
        s = apply_layer(s, layer);
        if (cnots_seen == first_block_cnots) CHECK(s.at(ancilla) == 0);
    }
    CHECK(s.is_initial(c.var_count()));
}

TEST_CASE("strict serialization: one rotation per layer, all on the ancilla") {
    auto f = HoboPolynomial::parse("x1 x2 x3 + x2 x3 x4");
    Circuit c = compile_gray(f);
    const int ancilla = c.qubit_count() - 1;
    for (const auto& layer : c.layers()) {
        CHECK(layer.size() == 1);
        if (const auto* r = std::get_if<Rotation>(&layer[0])) CHECK(r->qubit == ancilla);
    }
}

TEST_CASE("degree-1 handling: ancilla by default, bypass on request") {
    auto f = HoboPolynomial::parse("x1 + x2 x3");
    IsingPolynomial h = expand_to_ising(f);

    Circuit faithful = compile_gray(f, true);
    CHECK(faithful.depth() == 3 + 7);
    CHECK(check_symbolic(faithful, h, CheckMode::AngleSum).passed);

    Circuit bypass = compile_gray(f, false);
    CHECK(bypass.depth() == 1 + 7);
    CHECK(check_symbolic(bypass, h, CheckMode::AngleSum).passed);
}

TEST_CASE("constants are skipped") {
    auto f = HoboPolynomial::parse("vars 2; x1 x2 + 4");
    Circuit c = compile_gray(f);
    CHECK(c.depth() == 7);
}
