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

#include <optional>

#include "hoboc/milp.hpp"

namespace hoboc {

/// Solver-independent micro oracle: breadth-first search over layer
/// gate-sets under the full routing rule set, returning a depth-optimal
/// circuit or nullopt when no circuit fits the layer budget. Limits are
/// deliberately tiny (q <= 3, T <= 8, at most 7 monomials); anything larger
/// throws.
std::optional<Circuit> exact_search(const IsingPolynomial& h, const CdpConfig& cfg);

}  // namespace hoboc
