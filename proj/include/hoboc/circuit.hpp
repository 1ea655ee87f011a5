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
#include <span>
#include <variant>
#include <vector>

#include "hoboc/polynomial.hpp"

namespace hoboc {

/// Two-qubit CNOT. Qubits are 0-based internally.
struct Cnot {
    int control = 0;
    int target = 0;
};

/// One-qubit phase rotation tagged with the Z-monomial it applies and the
/// angle coefficient alpha. The emitted angle is 2*gamma*alpha, so one
/// compiled circuit serves every gamma.
struct Rotation {
    int qubit = 0;
    Mask monomial = 0;
    double alpha = 0.0;
};

using Gate = std::variant<Cnot, Rotation>;

/// Qubits touched by a gate (one for rotations, two for CNOTs).
std::vector<int> gate_qubits(const Gate& g);
bool gate_equal(const Gate& a, const Gate& b, double tol = 1e-12);

/// Layered circuit over q qubits, the first n of which carry problem
/// variables; qubits n..q-1 are ancillas. Within a layer every qubit is
/// touched by at most one gate.
class Circuit {
  public:
    Circuit() = default;
    Circuit(int qubit_count, int var_count);

    int qubit_count() const { return q_; }
    int var_count() const { return n_; }

    /// Number of non-empty layers.
    int depth() const;
    int layer_count() const { return static_cast<int>(layers_.size()); }
    const std::vector<std::vector<Gate>>& layers() const { return layers_; }

    /// Inserts a gate at the given 0-based layer, growing the layer list as
    /// needed. Throws on self-control, qubit range errors, or a second gate
    /// touching an already-occupied qubit in that layer.
    void add(int layer, Gate gate);
    void append_layer(std::vector<Gate> gates);
    /// Pads with empty layers until at least `count` layers exist.
    void ensure_layers(int count);

    int cnot_count() const;
    int rotation_count() const;

    /// Canonical gate order within each layer (by smallest touched qubit).
    void sort_layers();

    bool operator==(const Circuit& other) const;

  private:
    int q_ = 0;
    int n_ = 0;
    std::vector<std::vector<Gate>> layers_;
};

/// Per-qubit XOR accumulation state: table[i] is the set of problem
/// singletons whose parity qubit i currently carries.
class ParityState {
  public:
    ParityState() = default;
    ParityState(int qubit_count, int var_count);
    static ParityState from_table(std::vector<Mask> table);

    int qubit_count() const { return static_cast<int>(table_.size()); }
    Mask at(int qubit) const { return table_.at(qubit); }
    const std::vector<Mask>& table() const { return table_; }

    bool is_initial(int var_count) const;

    bool operator==(const ParityState& other) const { return table_ == other.table_; }

  private:
    std::vector<Mask> table_;
};

/// Applies one layer: CNOT(i->j) replaces S_j by the symmetric difference
/// S_j ^ S_i; rotations leave the state untouched. Throws when the layer
/// breaks the one-gate-per-qubit rule or contains a self-controlled CNOT.
ParityState apply_layer(const ParityState& state, std::span<const Gate> layer);

/// Appends b (with qubits renamed through qubit_map, 0-based, injective)
/// after a. No layer fusion is performed.
Circuit concatenate(const Circuit& a, const Circuit& b, const std::vector<int>& qubit_map);

/// Greedy repack of every gate to the earliest legal layer, preserving the
/// per-qubit gate order (and therefore the parity semantics).
Circuit compact(const Circuit& c);

bool circuits_equal(const Circuit& a, const Circuit& b, double tol = 1e-12);

}  // namespace hoboc
