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

#include <string>

#include <json.hpp>

#include "hoboc/circuit.hpp"

namespace hoboc {

/// OpenQASM 2.0 text. Each Rotation(qubit, v, alpha) becomes
/// rz(2*gamma*alpha) on that qubit; CNOTs become cx. Gates are serialized
/// layer-major, qubit-minor so the output is reproducible byte for byte.
std::string emit_qasm(const Circuit& c, double gamma, bool layer_barriers = false);

/// {q, n, layers: [[{op:"cnot",ctrl,tgt} | {op:"rz",qubit,monomial,alpha}]]}
/// with 1-based qubit and variable indices.
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace hoboc
