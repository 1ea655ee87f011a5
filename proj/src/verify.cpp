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

#include "hoboc/verify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <set>

namespace hoboc {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json ledger = nlohmann::json::array();
    for (const auto& [mask, angle] : rotation_ledger)
        ledger.push_back({{"monomial", mask_to_indices(mask)}, {"angle", angle}});
    nlohmann::json failure;
    if (first_failure) {
        failure = {{"layer", first_failure->layer},
                   {"qubit", first_failure->qubit},
                   {"reason", first_failure->reason}};
    } else {
        failure = nullptr;
    }
    return {{"passed", passed}, {"ledger", std::move(ledger)}, {"first_failure", std::move(failure)}};
}

namespace {

VerificationReport fail(VerificationReport report, int layer_1based, int qubit_1based,
                        std::string reason) {
    report.passed = false;
    if (!report.first_failure)
        report.first_failure = FailureSite{layer_1based, qubit_1based, std::move(reason)};
    return report;
}

}  // namespace

VerificationReport check_symbolic(const Circuit& c, const IsingPolynomial& h, CheckMode mode) {
    VerificationReport report;
    if (c.var_count() != h.var_count())
        return fail(std::move(report), 0, 0, "circuit and Hamiltonian disagree on n");

    std::map<Mask, int> rotation_counts;
    ParityState state(c.qubit_count(), c.var_count());
    const ParityState initial = state;

    int layer_no = 0;
    for (const auto& layer : c.layers()) {
        ++layer_no;
        // Rotation validity first: the tag must match the parity the qubit
        // holds entering the layer (no other gate may touch that qubit here,
        // so pre- and post-layer parities coincide).
        for (const Gate& g : layer) {
            if (const auto* r = std::get_if<Rotation>(&g)) {
                if (state.at(r->qubit) != r->monomial) {
                    return fail(std::move(report), layer_no, r->qubit + 1,
                                "rotation monomial is not represented on the qubit");
                }
                report.rotation_ledger[r->monomial] += r->alpha;
                rotation_counts[r->monomial] += 1;
            }
        }
        try {
            state = apply_layer(state, layer);
        } catch (const std::exception& e) {
            return fail(std::move(report), layer_no, 0, e.what());
        }
    }

    if (!(state == initial))
        return fail(std::move(report), c.layer_count(), 0,
                    "final parity state differs from the initial state (uncompute violated)");

    if (mode == CheckMode::ExactlyOnce) {
        for (const auto& [mask, count] : rotation_counts) {
            if (count != 1)
                return fail(std::move(report), 0, 0,
                            "monomial rotated " + std::to_string(count) + " times");
            if (h.coefficient(mask) == 0.0)
                return fail(std::move(report), 0, 0,
                            "rotation applied for a monomial absent from the Hamiltonian");
            if (std::fabs(report.rotation_ledger[mask] - h.coefficient(mask)) > kAngleTolerance)
                return fail(std::move(report), 0, 0, "rotation angle differs from coefficient");
        }
    } else {
        for (const auto& [mask, angle] : report.rotation_ledger) {
            if (std::fabs(angle - h.coefficient(mask)) > kAngleTolerance)
                return fail(std::move(report), 0, 0,
                            "summed rotation angles differ from coefficient");
        }
    }
    for (const Term& t : h.terms()) {
        if (rotation_counts.find(t.monomial) == rotation_counts.end())
            return fail(std::move(report), 0, 0, "Hamiltonian monomial received no rotation");
    }

    report.passed = true;
    return report;
}

VerificationReport check_statevector(const Circuit& c, const IsingPolynomial& h, double gamma) {
    VerificationReport report;
    if (c.var_count() != h.var_count())
        return fail(std::move(report), 0, 0, "circuit and Hamiltonian disagree on n");
    const int q = c.qubit_count();
    if (q > kMaxStatevectorQubits)
        return fail(std::move(report), 0, 0, "register too large for the statevector oracle");

    const int n = c.var_count();
    const std::size_t dim = std::size_t{1} << q;

    // CNOTs only permute basis labels and rotations only add phases, so the
    // circuit action on |z> is a label permutation plus an accumulated phase.
    double reference = 0.0;
    bool have_reference = false;
    for (std::size_t basis = 0; basis < dim; ++basis) {
        std::uint64_t bits = basis;
        double phase = 0.0;
        int layer_no = 0;
        for (const auto& layer : c.layers()) {
            ++layer_no;
            for (const Gate& g : layer) {
                if (const auto* r = std::get_if<Rotation>(&g)) {
                    const bool one = (bits >> r->qubit) & 1;
                    phase += one ? gamma * r->alpha : -gamma * r->alpha;
                } else {
                    const auto& cx = std::get<Cnot>(g);
                    if ((bits >> cx.control) & 1) bits ^= std::uint64_t{1} << cx.target;
                }
            }
        }
        if (bits != basis)
            return fail(std::move(report), 0, 0,
                        "circuit is not diagonal: basis state permuted (uncompute violated)");
        // Ancillas enter as |0>; phases on basis states with an excited
        // ancilla are outside the contract.
        if (basis >> n) continue;

        std::vector<int> z(n);
        for (int i = 0; i < n; ++i) z[i] = ((basis >> i) & 1) ? -1 : 1;
        const double target = -gamma * h.evaluate(z);

        const double delta = phase - target;
        if (!have_reference) {
            reference = delta;  // global phase, fixed by |0...0>
            have_reference = true;
        } else if (std::abs(std::polar(1.0, delta - reference) - std::complex<double>{1.0, 0.0}) >
                   kAngleTolerance) {
            return fail(std::move(report), 0, 0,
                        "phase mismatch on basis state " + std::to_string(basis));
        }
    }

    report.passed = true;
    return report;
}

std::vector<double> sample_gammas(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.35, 2.8);
    std::vector<double> out(count);
    for (double& g : out) g = dist(rng);
    return out;
}

}  // namespace hoboc
