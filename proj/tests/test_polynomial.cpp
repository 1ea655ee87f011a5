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

#include <cmath>
#include <random>

#include "hoboc/polynomial.hpp"

using namespace hoboc;

namespace {

std::vector<int> bits_of(unsigned value, int n) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = (value >> i) & 1;
    return x;
}

std::vector<int> spins_of(unsigned value, int n) {
    std::vector<int> z(n);
    for (int i = 0; i < n; ++i) z[i] = ((value >> i) & 1) ? -1 : 1;
    return z;
}

HoboPolynomial random_poly(std::mt19937& rng, int max_n, int max_degree) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> terms_dist(1, 8);
    std::uniform_real_distribution<double> coef_dist(-3.0, 3.0);
    std::vector<Term> terms;
    const int count = terms_dist(rng);
    for (int t = 0; t < count; ++t) {
        std::uniform_int_distribution<int> deg_dist(0, std::min(max_degree, n));
        int degree = deg_dist(rng);
        Mask m = 0;
        while (mask_degree(m) < degree) {
            std::uniform_int_distribution<int> var(0, n - 1);
            m |= Mask{1} << var(rng);
        }
        terms.push_back({m, coef_dist(rng)});
    }
    return HoboPolynomial(n, terms);
}

}  // namespace

TEST_CASE("parse: unit monomial") {
    auto f = HoboPolynomial::parse("x1 x2 x3");
    CHECK(f.var_count() == 3);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms()[0].monomial == 0b111);
    CHECK(f.terms()[0].coefficient == doctest::Approx(1.0));
}

TEST_CASE("parse: repeated variables collapse") {
    auto f = HoboPolynomial::parse("2 x1 x1 x2 - 0.5 x2");
    REQUIRE(f.terms().size() == 2);  // terms are kept sorted by mask
    CHECK(f.terms()[0].monomial == 0b10);
    CHECK(f.terms()[0].coefficient == doctest::Approx(-0.5));
    CHECK(f.terms()[1].monomial == 0b11);
    CHECK(f.terms()[1].coefficient == doctest::Approx(2.0));
}

TEST_CASE("parse: duplicate monomials merge") {
    auto f = HoboPolynomial::parse("x1 x2 + x1 x2");
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms()[0].coefficient == doctest::Approx(2.0));
}

TEST_CASE("parse: header fixes n, errors carry offsets") {
    auto f = HoboPolynomial::parse("vars 5; x1 + x2");
    CHECK(f.var_count() == 5);

    CHECK_THROWS_AS(HoboPolynomial::parse("x0"), ParseError);
    CHECK_THROWS_AS(HoboPolynomial::parse("vars 2; x3"), ParseError);
    CHECK_THROWS_AS(HoboPolynomial::parse("x1 & x2"), ParseError);
    CHECK_THROWS_AS(HoboPolynomial::parse("x1.5"), ParseError);
    CHECK_THROWS_AS(HoboPolynomial::parse("2 3 x1"), ParseError);
    try {
        HoboPolynomial::parse("x1 + x99999999");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);  // points at the offending index
    }
}

TEST_CASE("parse: signs, constants, tight spacing") {
    auto f = HoboPolynomial::parse("-x1+ 2.5x2 -1.5");
    REQUIRE(f.terms().size() == 3);
    CHECK(f.terms()[0].monomial == 0);
    CHECK(f.terms()[0].coefficient == doctest::Approx(-1.5));
    CHECK(f.terms()[1].coefficient == doctest::Approx(-1.0));
    CHECK(f.terms()[2].coefficient == doctest::Approx(2.5));
}

TEST_CASE("parse: coefficients may carry their own sign") {
    auto f = HoboPolynomial::parse("x1 + -1.8 x2 - -0.25 x1 x2");
    REQUIRE(f.terms().size() == 3);
    CHECK(f.terms()[0].coefficient == doctest::Approx(1.0));
    CHECK(f.terms()[1].coefficient == doctest::Approx(-1.8));
    CHECK(f.terms()[2].coefficient == doctest::Approx(0.25));
    CHECK(HoboPolynomial::parse("-2e-1 x1").terms()[0].coefficient == doctest::Approx(-0.2));
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        HoboPolynomial f = random_poly(rng, 8, 4);
        HoboPolynomial g = HoboPolynomial::parse(f.str());
        CHECK(f == g);
        CHECK(g.var_count() == f.var_count());
    }
}

TEST_CASE("evaluate_hobo basics") {
    auto f = HoboPolynomial::parse("x1 x2 x3");
    CHECK(evaluate_hobo(f, {1, 1, 1}) == doctest::Approx(1.0));
    CHECK(evaluate_hobo(f, {1, 0, 1}) == doctest::Approx(0.0));
    auto g = HoboPolynomial::parse("2 x1 x2 - 0.5 x2");
    CHECK(evaluate_hobo(g, {1, 1}) == doctest::Approx(1.5));
    CHECK_THROWS_AS(evaluate_hobo(f, {1, 1}), std::invalid_argument);
}

TEST_CASE("expansion of a degree-3 monomial") {
    auto f = HoboPolynomial::parse("x1 x2 x3");
    IsingPolynomial h = expand_to_ising(f);
    CHECK(h.constant() == doctest::Approx(0.125));
    CHECK(h.terms().size() == 7);  // 2^3 - 1 non-constant terms
    CHECK(h.coefficient(0b001) == doctest::Approx(-0.125));
    CHECK(h.coefficient(0b010) == doctest::Approx(-0.125));
    CHECK(h.coefficient(0b100) == doctest::Approx(-0.125));
    CHECK(h.coefficient(0b011) == doctest::Approx(0.125));
    CHECK(h.coefficient(0b101) == doctest::Approx(0.125));
    CHECK(h.coefficient(0b110) == doctest::Approx(0.125));
    CHECK(h.coefficient(0b111) == doctest::Approx(-0.125));
}

TEST_CASE("expansion merges across monomials") {
    auto f = HoboPolynomial::parse("x1 x2 x3 + x2 x3 x4");
    IsingPolynomial h = expand_to_ising(f);
    // {2,3} receives 1/8 from each owner.
    CHECK(h.coefficient(0b0110) == doctest::Approx(0.25));
    for (const Term& t : h.terms()) {
        bool sub1 = (t.monomial & ~Mask{0b0111}) == 0;
        bool sub2 = (t.monomial & ~Mask{0b1110}) == 0;
        CHECK((sub1 || sub2));
    }
}

TEST_CASE("empty polynomial expands to zero") {
    HoboPolynomial f;
    IsingPolynomial h = expand_to_ising(f);
    CHECK(h.terms().empty());
    CHECK(h.constant() == 0.0);
    CHECK(evaluate_ising(h, {}) == 0.0);
}

TEST_CASE("expansion term count and sign pattern for single monomials") {
    for (int d = 1; d <= 6; ++d) {
        std::vector<Term> terms{{(Mask{1} << d) - 1, 1.0}};
        HoboPolynomial f(d, terms);
        IsingPolynomial h = expand_to_ising(f);
        CHECK(static_cast<int>(h.terms().size()) == (1 << d) - 1);
        for (const Term& t : h.terms()) {
            const double expected = std::ldexp(1.0, -d) * (mask_degree(t.monomial) % 2 ? -1 : 1);
            CHECK(t.coefficient == doctest::Approx(expected));
        }
    }
}

TEST_CASE("change of variable: hobo and ising evaluations agree") {
    auto f = HoboPolynomial::parse("x1 x2 x3");
    IsingPolynomial h = expand_to_ising(f);
    CHECK(evaluate_ising(h, {-1, -1, -1}) == doctest::Approx(1.0));  // x = (1,1,1)
    CHECK(evaluate_ising(h, {1, 1, 1}) == doctest::Approx(0.0));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        HoboPolynomial g = random_poly(rng, 6, 4);
        IsingPolynomial gh = expand_to_ising(g);
        const int n = g.var_count();
        for (unsigned v = 0; v < (1u << n); ++v) {
            const double a = evaluate_hobo(g, bits_of(v, n));
            const double b = evaluate_ising(gh, spins_of(v, n));
            CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
        }
    }
}

TEST_CASE("ising evaluation validates spins") {
    auto f = HoboPolynomial::parse("x1 x2");
    IsingPolynomial h = expand_to_ising(f);
    CHECK_THROWS_AS(evaluate_ising(h, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_ising(h, {1}), std::invalid_argument);
}

TEST_CASE("expansion refuses degrees that would explode") {
    std::string text;
    for (int i = 1; i <= 22; ++i) text += "x" + std::to_string(i) + " ";
    auto f = HoboPolynomial::parse(text);
    CHECK_THROWS_AS(expand_to_ising(f), std::invalid_argument);
}

TEST_CASE("lexicographic monomial order") {
    CHECK(mask_lex_less(mask_from_indices({1, 2, 3}), mask_from_indices({1, 2, 4})));
    CHECK(mask_lex_less(mask_from_indices({1, 2, 4}), mask_from_indices({2, 3})));
    CHECK(mask_lex_less(mask_from_indices({1}), mask_from_indices({1, 2})));
    CHECK(!mask_lex_less(mask_from_indices({2}), mask_from_indices({1, 5})));
}
