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

#include "hoboc/circuit.hpp"
#include "hoboc/polynomial.hpp"

namespace hoboc {

/// Degree-2 template: 4 layers, 3 rotations, on 2 qubits. Rotation angles
/// are the unit-coefficient expansion values (-1)^|I| / 2^2.
Circuit base_template();

/// Doubles a degree-D template into a degree-(D+1) template:
///   - layer 1 gains the new singleton rotation;
///   - the interior of C_D is replayed with the last qubit renamed to the
///     new one, so the first half covers every monomial avoiding qubit D;
///   - a CNOT(D -> D+1) sits alone on layer 2^D;
///   - the second half interleaves the old last-qubit walk (now supplying
///     the monomials through qubit D) with a replay of its CNOT pattern
///     aimed at qubit D+1, whose rotations take the first-half monomials in
///     reversed order with qubit D joined in.
/// The result has 2^(D+1) layers and 2^(D+1)-1 distinct rotations covering
/// every nonempty subset, with all CNOTs pointing downward.
Circuit grow_template(const Circuit& c_d, int degree);

/// Memoized template for the given degree (>= 2).
const Circuit& template_circuit(int degree);

/// Greedy earliest-available scheduler: walks the untreated monomials,
/// always placing the one whose qubits all free up first (ties broken by
/// lexicographically smallest index set), as an instantiated template block.
/// Degree-1 monomials emit a single rotation; constants are dropped.
Circuit compile_greedy(const HoboPolynomial& f, const IsingPolynomial& h);

}  // namespace hoboc
