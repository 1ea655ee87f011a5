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
#include <string>
#include <unordered_map>
#include <vector>

#include "hoboc/circuit.hpp"
#include "hoboc/polynomial.hpp"

namespace hoboc {

struct CdpConfig {
    int qubits = 0;         // q; 0 means "use n"
    int layers = 0;         // T; must be set (>= 1) before building
    bool downward_only = false;
    bool symmetry_break = true;
    bool relax_abd = true;  // a, b, d continuous in [0,1]
    double time_limit = 1200.0;
};

enum class VarKind { Binary, Unit };  // Unit = continuous in [0,1]

struct LpColumn {
    std::string name;
    VarKind kind;
};

/// sense is one of '<', '>', '=' (meaning <=, >=, ==).
struct LpRow {
    std::string name;
    std::vector<std::pair<int, double>> terms;
    char sense = '<';
    double rhs = 0.0;
};

/// The routing program: layer-activity, CNOT and rotation placement,
/// monomial representation and propagation, with the bilinear XOR update
/// replaced by one product column per CNOT arc and one per (layer, qubit,
/// singleton) for the outer product.
class CdpModel {
  public:
    CdpModel(const IsingPolynomial& h, const CdpConfig& cfg);

    const CdpConfig& config() const { return cfg_; }
    const IsingPolynomial& hamiltonian() const { return h_; }
    int qubit_count() const { return q_; }
    int layer_budget() const { return t_; }
    const std::vector<Mask>& monomials() const { return monomials_; }

    int column_count() const { return static_cast<int>(columns_.size()); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<LpColumn>& columns() const { return columns_; }
    const std::vector<LpRow>& rows() const { return rows_; }
    std::optional<int> column_index(const std::string& name) const;

    // Typed column lookups; k is 1-based (b and d also accept k = 0), i, j,
    // p are 1-based qubit/singleton indices, vid is the 1-based monomial id.
    int col_a(int k) const;
    std::optional<int> col_c(int k, int i, int j) const;
    int col_r(int k, int i, int vid) const;
    int col_b(int k, int i, int p) const;
    int col_d(int k, int i, int vid) const;
    std::optional<int> col_w(int k, int j, int i, int p) const;
    std::optional<int> col_u(int k, int i, int p) const;

    /// Deterministic CPLEX-LP text (Minimize / Subject To / Bounds /
    /// Binaries / End).
    std::string emit_lp() const;

    /// Full column assignment reproducing the circuit (parities, products
    /// and all). Duplicate rotations on one monomial keep the first
    /// occurrence; rotations on monomials outside the Hamiltonian get no
    /// r column and are represented only through the parity trajectory.
    std::vector<double> encode_circuit(const Circuit& c) const;

    /// name/value lines for every column, suitable as a solver start hint.
    std::string warm_start_text(const std::vector<double>& values) const;

    /// First violated row, if any.
    std::optional<std::string> check_assignment(const std::vector<double>& values,
                                                double tolerance = 1e-6) const;

    double objective_value(const std::vector<double>& values) const;

    /// Reads the CNOT/rotation placement back into a circuit and re-verifies
    /// it symbolically; throws std::runtime_error when the assignment does
    /// not describe a valid routing.
    Circuit decode_solution(const std::vector<double>& values) const;

  private:
    void build();
    int add_column(std::string name, VarKind kind);
    void add_row(std::string name, std::vector<std::pair<int, double>> terms, char sense,
                 double rhs);

    IsingPolynomial h_;
    CdpConfig cfg_;
    int q_ = 0;
    int n_ = 0;
    int t_ = 0;
    std::vector<Mask> monomials_;  // vid order (ascending mask)
    std::vector<LpColumn> columns_;
    std::vector<LpRow> rows_;
    std::unordered_map<std::string, int> by_name_;
    std::unordered_map<long long, int> a_, c_, r_, b_, d_, w_, u_;
};

CdpModel build_model(const IsingPolynomial& h, const CdpConfig& cfg);

}  // namespace hoboc
