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

/// Nonzero codewords of the reflected binary code over D local bits:
/// 2^D - 1 subsets, consecutive entries one flip apart, singleton endpoints.
std::vector<Mask> gray_walk(int degree);

/// Baseline compiler: one ancilla hosts every rotation. Each monomial block
/// walks the ancilla through all its subsets (entry CNOT, alternating
/// rotation/CNOT, exit CNOT), blocks are concatenated end-to-end, and each
/// block costs 2^(D+1) - 1 strictly serial layers. With ancilla_degree_one
/// false, degree-1 monomials bypass the ancilla as a single depth-1
/// rotation instead.
Circuit compile_gray(const HoboPolynomial& f, bool ancilla_degree_one = true);

}  // namespace hoboc
