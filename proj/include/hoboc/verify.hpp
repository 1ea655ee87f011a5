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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoboc/circuit.hpp"
#include "hoboc/polynomial.hpp"

namespace hoboc {

/// Exactly-once: every Hamiltonian monomial receives a single rotation whose
/// angle coefficient equals its coefficient. Angle-sum: duplicated rotations
/// are fine as long as the angles add up per monomial; this is the physical
/// criterion, since diagonal rotations commute.
enum class CheckMode { ExactlyOnce, AngleSum };

struct FailureSite {
    int layer = 0;  // 1-based; 0 when the failure is not tied to a layer
    int qubit = 0;  // 1-based; 0 when not tied to a qubit
    std::string reason;
};

struct VerificationReport {
    bool passed = false;
    std::map<Mask, double> rotation_ledger;  // monomial -> summed angle coefficient
    std::optional<FailureSite> first_failure;

    nlohmann::json to_json() const;
};

/// Largest register the statevector oracle will simulate.
constexpr int kMaxStatevectorQubits = 14;
constexpr double kAngleTolerance = 1e-9;

/// Parity simulation against every routing rule: rotation validity (the
/// tagged monomial must sit on the rotated qubit), coverage of all nonzero
/// coefficients, per-mode angle accounting, and uncomputation at the end.
/// Never throws; problems land in the report.
VerificationReport check_symbolic(const Circuit& c, const IsingPolynomial& h, CheckMode mode);

/// Brute-force diagonal comparison: the circuit applied to every basis state
/// must reproduce exp(-j*gamma*H(z)) up to one global phase. No basis state
/// may be permuted; phases are compared on the ancilla-cleared subspace,
/// since ancillas enter as |0>.
VerificationReport check_statevector(const Circuit& c, const IsingPolynomial& h, double gamma);

/// Reproducible gamma draws for statevector spot checks.
std::vector<double> sample_gammas(int count, unsigned seed);

}  // namespace hoboc
