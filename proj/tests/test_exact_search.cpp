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

#include "hoboc/exact_search.hpp"
#include "hoboc/polynomial.hpp"
#include "hoboc/verify.hpp"

using namespace hoboc;

TEST_CASE("a single QUBO monomial needs depth 4") {
    auto f = HoboPolynomial::parse("x1 x2");
    IsingPolynomial h = expand_to_ising(f);
    CdpConfig cfg;
    cfg.layers = 8;
    auto c = exact_search(h, cfg);
    REQUIRE(c.has_value());
    CHECK(c->depth() == 4);
    CHECK(check_symbolic(*c, h, CheckMode::ExactlyOnce).passed);
}

TEST_CASE("a degree-3 monomial needs depth 8, with and without the downward cut") {
    auto f = HoboPolynomial::parse("x1 x2 x3");
    IsingPolynomial h = expand_to_ising(f);
    for (bool down : {false, true}) {
        CdpConfig cfg;
        cfg.layers = 8;
        cfg.downward_only = down;
        auto c = exact_search(h, cfg);
        REQUIRE(c.has_value());
        CHECK(c->depth() == 8);
        CHECK(check_symbolic(*c, h, CheckMode::ExactlyOnce).passed);
        if (down)
            for (const auto& layer : c->layers())
                for (const Gate& g : layer)
                    if (const auto* cx = std::get_if<Cnot>(&g)) CHECK(cx->control < cx->target);
    }
}

TEST_CASE("a lone singleton takes one rotation") {
    IsingPolynomial h(1, {{0b1, -0.5}}, 0.5);
    CdpConfig cfg;
    cfg.layers = 3;
    auto c = exact_search(h, cfg);
    REQUIRE(c.has_value());
    CHECK(c->depth() == 1);
    CHECK(c->rotation_count() == 1);
    CHECK(c->cnot_count() == 0);
}

TEST_CASE("too small a layer budget is infeasible") {
    auto f = HoboPolynomial::parse("x1 x2 x3");
    IsingPolynomial h = expand_to_ising(f);
    CdpConfig cfg;
    cfg.layers = 2;
    CHECK(!exact_search(h, cfg).has_value());
    cfg.layers = 7;
    CHECK(!exact_search(h, cfg).has_value());
}

TEST_CASE("an ancilla can host the pair rotation") {
    auto f = HoboPolynomial::parse("x1 x2");
    IsingPolynomial h = expand_to_ising(f);
    CdpConfig cfg;
    cfg.qubits = 3;  // q > n
    cfg.layers = 8;
    auto c = exact_search(h, cfg);
    REQUIRE(c.has_value());
    CHECK(c->depth() == 4);
    CHECK(check_symbolic(*c, h, CheckMode::ExactlyOnce).passed);
}

TEST_CASE("limits guard the state space") {
    auto f = HoboPolynomial::parse("x1 x2 x3 x4");
    IsingPolynomial h = expand_to_ising(f);
    CdpConfig cfg;
    cfg.layers = 8;
    CHECK_THROWS_AS(exact_search(h, cfg), std::invalid_argument);  // q=4, 15 monomials

    auto g = HoboPolynomial::parse("x1 x2");
    CdpConfig big;
    big.layers = 9;
    CHECK_THROWS_AS(exact_search(expand_to_ising(g), big), std::invalid_argument);
}
