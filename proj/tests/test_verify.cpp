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

#include <complex>
#include <random>

#include "hoboc/graycode.hpp"
#include "hoboc/polynomial.hpp"
#include "hoboc/templates.hpp"
#include "hoboc/verify.hpp"

using namespace hoboc;

TEST_CASE("template C_3 passes exactly-once with a full ledger") {
    auto f = HoboPolynomial::parse("x1 x2 x3");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c = compile_greedy(f, h);
    VerificationReport r = check_symbolic(c, h, CheckMode::ExactlyOnce);
    CHECK(r.passed);
    CHECK(r.rotation_ledger.size() == 7);
}

TEST_CASE("rotation on a mismatched parity fails with a located failure") {
    auto f = HoboPolynomial::parse("x1 x2");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c(2, 2);
    c.add(0, Cnot{0, 1});
    c.add(1, Rotation{1, 0b10, -0.25});  // qubit 2 now holds {1,2}, not {2}
    VerificationReport r = check_symbolic(c, h, CheckMode::AngleSum);
    CHECK(!r.passed);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->layer == 2);
    CHECK(r.first_failure->qubit == 2);
}

TEST_CASE("uncompute violations are caught") {
    auto f = HoboPolynomial::parse("x1 x2");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c = compile_greedy(f, h);
    Circuit truncated(2, 2);
    for (int k = 0; k + 1 < c.layer_count(); ++k)
        for (const Gate& g : c.layers()[k]) truncated.add(k, g);
    VerificationReport r = check_symbolic(truncated, h, CheckMode::AngleSum);
    CHECK(!r.passed);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->reason.find("uncompute") != std::string::npos);
}

TEST_CASE("angle-sum accepts duplicated rotations, exactly-once rejects them") {
    auto f = HoboPolynomial::parse("x1 x2 x3 + x2 x3 x4");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c = compile_greedy(f, h);
    VerificationReport sum = check_symbolic(c, h, CheckMode::AngleSum);
    CHECK(sum.passed);
    CHECK(sum.rotation_ledger.at(mask_from_indices({2, 3})) == doctest::Approx(0.25));
    VerificationReport once = check_symbolic(c, h, CheckMode::ExactlyOnce);
    CHECK(!once.passed);
}

TEST_CASE("missing coverage fails") {
    auto f = HoboPolynomial::parse("x1 + x2");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c(2, 2);
    c.add(0, Rotation{0, 0b01, -0.5});  // x2's rotation missing
    VerificationReport r = check_symbolic(c, h, CheckMode::AngleSum);
    CHECK(!r.passed);
}

TEST_CASE("statevector: empty circuit equals zero Hamiltonian") {
    IsingPolynomial h;
    Circuit c;
    VerificationReport r = check_statevector(c, h, 0.9);
    CHECK(r.passed);
}

TEST_CASE("statevector: ladder circuit for a single cubic term") {
    // CNOT(1->2), CNOT(2->3), rz on q3, then uncompute.
    const double alpha = 0.37;
    IsingPolynomial h(3, {{0b111, alpha}}, 0.0);
    Circuit c(3, 3);
    c.add(0, Cnot{0, 1});
    c.add(1, Cnot{1, 2});
    c.add(2, Rotation{2, 0b111, alpha});
    c.add(3, Cnot{1, 2});
    c.add(4, Cnot{0, 1});
    for (double gamma : sample_gammas(3, 99)) {
        VerificationReport r = check_statevector(c, h, gamma);
        CHECK(r.passed);
    }
}

TEST_CASE("statevector: constant term is global phase only") {
    auto f = HoboPolynomial::parse("x1 x2 + 5");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c = compile_greedy(f, h);
    CHECK(check_statevector(c, h, 1.1).passed);
}

TEST_CASE("statevector rejects oversized registers") {
    IsingPolynomial h(15, {{0b1, 1.0}}, 0.0);
    Circuit c(15, 15);
    c.add(0, Rotation{0, 0b1, 1.0});
    VerificationReport r = check_statevector(c, h, 1.0);
    CHECK(!r.passed);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->reason.find("too large") != std::string::npos);
}

TEST_CASE("oracle agreement on randomized small instances") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);  // 3..5
        std::vector<Term> terms;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < count; ++t) {
            Mask m = 1 + static_cast<Mask>(rng() % ((1u << n) - 1));
            terms.push_back({m, coef(rng)});
        }
        HoboPolynomial f(n, terms);
        IsingPolynomial h = expand_to_ising(f);
        if (h.terms().empty()) continue;
        Circuit gray = compile_gray(f);
        Circuit tmpl = compile_greedy(f, h);
        for (const Circuit& c : {gray, tmpl}) {
            const bool symbolic = check_symbolic(c, h, CheckMode::AngleSum).passed;
            bool sv = true;
            for (double gamma : sample_gammas(5, 61)) sv = sv && check_statevector(c, h, gamma).passed;
            CHECK(symbolic == sv);
            CHECK(symbolic);
        }
    }
}

TEST_CASE("the phase-tracking oracle matches a dense matrix product") {
    // Build the circuit unitary the pedestrian way: explicit 2^q x 2^q
    // complex matrices multiplied gate by gate, then compare the diagonal
    // against exp(-j*gamma*H(z)) directly.
    using Cplx = std::complex<double>;
    auto f = HoboPolynomial::parse("x1 x2 x3");
    IsingPolynomial h = expand_to_ising(f);
    const Circuit& c = compile_greedy(f, h);
    const int q = c.qubit_count();
    const std::size_t dim = std::size_t{1} << q;
    const double gamma = 0.83;

    std::vector<Cplx> column(dim);
    std::vector<Cplx> diag(dim);
    for (std::size_t basis = 0; basis < dim; ++basis) {
        std::fill(column.begin(), column.end(), Cplx{0, 0});
        column[basis] = 1.0;
        for (const auto& layer : c.layers()) {
            for (const Gate& g : layer) {
                std::vector<Cplx> next(dim, Cplx{0, 0});
                for (std::size_t s = 0; s < dim; ++s) {
                    if (column[s] == Cplx{0, 0}) continue;
                    if (const auto* cx = std::get_if<Cnot>(&g)) {
                        std::size_t t = s;
                        if ((s >> cx->control) & 1) t ^= std::size_t{1} << cx->target;
                        next[t] += column[s];
                    } else {
                        const auto& r = std::get<Rotation>(g);
                        const double theta = gamma * r.alpha;
                        const bool one = (s >> r.qubit) & 1;
                        next[s] += column[s] * std::polar(1.0, one ? theta : -theta);
                    }
                }
                column.swap(next);
            }
        }
        for (std::size_t s = 0; s < dim; ++s)
            if (s != basis) CHECK(std::abs(column[s]) < 1e-12);
        diag[basis] = column[basis];
    }

    for (std::size_t basis = 0; basis < dim; ++basis) {
        std::vector<int> z(c.var_count());
        for (int i = 0; i < c.var_count(); ++i) z[i] = ((basis >> i) & 1) ? -1 : 1;
        // The compiled circuit drops the constant, a global phase.
        const Cplx expected =
            std::polar(1.0, -gamma * (h.evaluate(z) - h.constant()));
        CHECK(std::abs(diag[basis] - expected) < 1e-9);
    }
    CHECK(check_statevector(c, h, gamma).passed);
}

TEST_CASE("oracles agree on a nine-qubit gray circuit") {
    // Four degree-6 monomials on 8 variables plus the ancilla.
    std::vector<Term> terms;
    for (int m = 0; m < 4; ++m) {
        Mask mask = 0;
        for (int offset = 0; offset < 6; ++offset) mask |= Mask{1} << ((m + offset) % 8);
        terms.push_back({mask, 1.0 + 0.25 * m});
    }
    HoboPolynomial f(8, terms);
    IsingPolynomial h = expand_to_ising(f);
    Circuit c = compile_gray(f);
    CHECK(c.qubit_count() == 9);
    CHECK(check_symbolic(c, h, CheckMode::AngleSum).passed);
    CHECK(check_statevector(c, h, sample_gammas(1, 3)[0]).passed);
}

TEST_CASE("report serializes to json") {
    auto f = HoboPolynomial::parse("x1 x2");
    IsingPolynomial h = expand_to_ising(f);
    Circuit c = compile_greedy(f, h);
    nlohmann::json j = check_symbolic(c, h, CheckMode::ExactlyOnce).to_json();
    CHECK(j["passed"] == true);
    CHECK(j["ledger"].size() == 3);
    CHECK(j["first_failure"].is_null());
}
