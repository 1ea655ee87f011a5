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

#include "hoboc/milp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hoboc/verify.hpp"

namespace hoboc {

namespace {

constexpr double kBinaryTolerance = 1e-6;

long long pack(int k, int i, int j, int p) {
    return (((static_cast<long long>(k) << 10 | i) << 10 | j) << 20) | p;
}

std::string num(double v) {
    if (v == std::floor(v) && std::fabs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

CdpModel::CdpModel(const IsingPolynomial& h, const CdpConfig& cfg) : h_(h), cfg_(cfg) {
    n_ = h.var_count();
    if (h.terms().empty())
        throw std::invalid_argument("the Hamiltonian has no non-constant term to route");
    q_ = cfg.qubits == 0 ? n_ : cfg.qubits;
    t_ = cfg.layers;
    if (n_ < 1 || q_ < n_) throw std::invalid_argument("need q >= n >= 1");
    if (t_ < 1) throw std::invalid_argument("layer budget T must be at least 1");
    for (const Term& t : h.terms()) monomials_.push_back(t.monomial);
    build();
}

int CdpModel::add_column(std::string name, VarKind kind) {
    int idx = static_cast<int>(columns_.size());
    by_name_.emplace(name, idx);
    columns_.push_back({std::move(name), kind});
    return idx;
}

void CdpModel::add_row(std::string name, std::vector<std::pair<int, double>> terms, char sense,
                       double rhs) {
    rows_.push_back({std::move(name), std::move(terms), sense, rhs});
}

std::optional<int> CdpModel::column_index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

int CdpModel::col_a(int k) const { return a_.at(pack(k, 0, 0, 0)); }

std::optional<int> CdpModel::col_c(int k, int i, int j) const {
    auto it = c_.find(pack(k, i, j, 0));
    if (it == c_.end()) return std::nullopt;
    return it->second;
}

int CdpModel::col_r(int k, int i, int vid) const { return r_.at(pack(k, i, 0, vid)); }
int CdpModel::col_b(int k, int i, int p) const { return b_.at(pack(k, i, p, 0)); }
int CdpModel::col_d(int k, int i, int vid) const { return d_.at(pack(k, i, 0, vid)); }

std::optional<int> CdpModel::col_w(int k, int j, int i, int p) const {
    auto it = w_.find(pack(k, j, i, p));
    if (it == w_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> CdpModel::col_u(int k, int i, int p) const {
    auto it = u_.find(pack(k, i, 0, p));
    if (it == u_.end()) return std::nullopt;
    return it->second;
}

void CdpModel::build() {
    const int V = static_cast<int>(monomials_.size());
    const VarKind relaxed = cfg_.relax_abd ? VarKind::Unit : VarKind::Binary;

    // Columns, in a fixed order so the LP text is reproducible.
    for (int k = 1; k <= t_; ++k)
        a_[pack(k, 0, 0, 0)] = add_column("a_" + std::to_string(k), relaxed);
    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int j = 1; j <= q_; ++j) {
                if (i == j) continue;                     // no self-control
                if (cfg_.downward_only && i > j) continue;  // downward arcs only
                c_[pack(k, i, j, 0)] = add_column(
                    "c_" + std::to_string(k) + "_" + std::to_string(i) + "_" + std::to_string(j),
                    VarKind::Binary);
            }
    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int vid = 1; vid <= V; ++vid)
                r_[pack(k, i, 0, vid)] =
                    add_column("r_" + std::to_string(k) + "_" + std::to_string(i) + "_v" +
                                   std::to_string(vid),
                               VarKind::Binary);
    for (int k = 0; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int p = 1; p <= n_; ++p)
                b_[pack(k, i, p, 0)] = add_column(
                    "b_" + std::to_string(k) + "_" + std::to_string(i) + "_" + std::to_string(p),
                    relaxed);
    for (int k = 0; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int vid = 1; vid <= V; ++vid)
                d_[pack(k, i, 0, vid)] =
                    add_column("d_" + std::to_string(k) + "_" + std::to_string(i) + "_v" +
                                   std::to_string(vid),
                               relaxed);
    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int j = 1; j <= q_; ++j) {
                if (!col_c(k, j, i)) continue;  // product column per incoming arc
                for (int p = 1; p <= n_; ++p)
                    w_[pack(k, j, i, p)] =
                        add_column("w_" + std::to_string(k) + "_" + std::to_string(j) + "_" +
                                       std::to_string(i) + "_" + std::to_string(p),
                                   VarKind::Unit);
            }
    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i) {
            bool incoming = false;
            for (int j = 1; j <= q_ && !incoming; ++j)
                if (col_c(k, j, i)) incoming = true;
            if (!incoming) continue;
            for (int p = 1; p <= n_; ++p)
                u_[pack(k, i, 0, p)] =
                    add_column("u_" + std::to_string(k) + "_" + std::to_string(i) + "_" +
                                   std::to_string(p),
                               VarKind::Unit);
        }

    // Boundary conditions: every problem qubit starts and ends holding its
    // own singleton, ancillas hold nothing.
    for (int edge = 0; edge < 2; ++edge) {
        const int k = edge == 0 ? 0 : t_;
        const std::string tag = edge == 0 ? "init_" : "fin_";
        for (int i = 1; i <= q_; ++i)
            for (int p = 1; p <= n_; ++p) {
                double rhs = (i == p && i <= n_) ? 1.0 : 0.0;
                add_row(tag + std::to_string(i) + "_" + std::to_string(p),
                        {{col_b(k, i, p), 1.0}}, '=', rhs);
            }
    }

    // A gate on a qubit activates the layer; at most one gate per qubit.
    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i) {
            std::vector<std::pair<int, double>> terms;
            for (int j = 1; j <= q_; ++j) {
                if (auto c = col_c(k, i, j)) terms.push_back({*c, 1.0});
                if (auto c = col_c(k, j, i)) terms.push_back({*c, 1.0});
            }
            for (int vid = 1; vid <= V; ++vid) terms.push_back({col_r(k, i, vid), 1.0});
            terms.push_back({col_a(k), -1.0});
            add_row("act_" + std::to_string(k) + "_" + std::to_string(i), std::move(terms), '<',
                    0.0);
        }

    // Every monomial is rotated exactly once.
    for (int vid = 1; vid <= V; ++vid) {
        std::vector<std::pair<int, double>> terms;
        for (int k = 1; k <= t_; ++k)
            for (int i = 1; i <= q_; ++i) terms.push_back({col_r(k, i, vid), 1.0});
        add_row("once_v" + std::to_string(vid), std::move(terms), '=', 1.0);
    }

    // d_k_i_v == [qubit i holds exactly monomial v after layer k].
    for (int k = 0; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int vid = 1; vid <= V; ++vid) {
                const Mask v = monomials_[vid - 1];
                const std::string stem = std::to_string(k) + "_" + std::to_string(i) + "_v" +
                                         std::to_string(vid);
                std::vector<std::pair<int, double>> lb_terms{{col_d(k, i, vid), 1.0}};
                int inside = 0;
                for (int p = 1; p <= n_; ++p) {
                    const bool in_v = (v >> (p - 1)) & 1;
                    if (in_v) {
                        add_row("dub_" + stem + "_" + std::to_string(p),
                                {{col_d(k, i, vid), 1.0}, {col_b(k, i, p), -1.0}}, '<', 0.0);
                        lb_terms.push_back({col_b(k, i, p), -1.0});
                        ++inside;
                    } else {
                        add_row("dnb_" + stem + "_" + std::to_string(p),
                                {{col_d(k, i, vid), 1.0}, {col_b(k, i, p), 1.0}}, '<', 1.0);
                        lb_terms.push_back({col_b(k, i, p), 1.0});
                    }
                }
                add_row("dlb_" + stem, std::move(lb_terms), '>', 1.0 - inside);
            }

    // A rotation needs its monomial in place when the layer starts.
    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int vid = 1; vid <= V; ++vid)
                add_row("rval_" + std::to_string(k) + "_" + std::to_string(i) + "_v" +
                            std::to_string(vid),
                        {{col_r(k, i, vid), 1.0}, {col_d(k - 1, i, vid), -1.0}}, '<', 0.0);

    // XOR propagation, linearized: w = c * b_prev(source), u = b_prev(self)
    // * sum(w), b = b_prev + sum(w) - 2u. The incoming sum is at most one
    // thanks to the per-qubit uniqueness row.
    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int p = 1; p <= n_; ++p) {
                std::vector<int> arcs;
                for (int j = 1; j <= q_; ++j)
                    if (auto c = col_c(k, j, i)) {
                        const int wcol = *col_w(k, j, i, p);
                        const std::string stem = std::to_string(k) + "_" + std::to_string(j) +
                                                 "_" + std::to_string(i) + "_" +
                                                 std::to_string(p);
                        add_row("wc_" + stem, {{wcol, 1.0}, {*c, -1.0}}, '<', 0.0);
                        add_row("wb_" + stem, {{wcol, 1.0}, {col_b(k - 1, j, p), -1.0}}, '<', 0.0);
                        add_row("wl_" + stem,
                                {{wcol, 1.0}, {*c, -1.0}, {col_b(k - 1, j, p), -1.0}}, '>', -1.0);
                        arcs.push_back(wcol);
                    }
                const std::string stem =
                    std::to_string(k) + "_" + std::to_string(i) + "_" + std::to_string(p);
                std::vector<std::pair<int, double>> prop{{col_b(k, i, p), 1.0},
                                                         {col_b(k - 1, i, p), -1.0}};
                if (!arcs.empty()) {
                    const int ucol = *col_u(k, i, p);
                    add_row("ub_" + stem, {{ucol, 1.0}, {col_b(k - 1, i, p), -1.0}}, '<', 0.0);
                    std::vector<std::pair<int, double>> us{{ucol, 1.0}};
                    for (int wcol : arcs) us.push_back({wcol, -1.0});
                    add_row("us_" + stem, std::move(us), '<', 0.0);
                    std::vector<std::pair<int, double>> ul{{ucol, 1.0},
                                                           {col_b(k - 1, i, p), -1.0}};
                    for (int wcol : arcs) ul.push_back({wcol, -1.0});
                    add_row("ul_" + stem, std::move(ul), '>', -1.0);
                    for (int wcol : arcs) prop.push_back({wcol, -1.0});
                    prop.push_back({ucol, 2.0});
                }
                add_row("prop_" + stem, std::move(prop), '=', 0.0);
            }

    // Optional symmetry breaking: activity stacks on the first layers.
    if (cfg_.symmetry_break)
        for (int k = 1; k < t_; ++k)
            add_row("sym_" + std::to_string(k), {{col_a(k), 1.0}, {col_a(k + 1), -1.0}}, '>',
                    0.0);
}

std::string CdpModel::emit_lp() const {
    std::ostringstream out;
    out << "\\ cdp n=" << n_ << " q=" << q_ << " T=" << t_ << " monomials=" << monomials_.size()
        << " downward=" << (cfg_.downward_only ? 1 : 0) << " relax=" << (cfg_.relax_abd ? 1 : 0)
        << " symmetry=" << (cfg_.symmetry_break ? 1 : 0) << "\n";
    out << "Minimize\n obj:";
    {
        std::string line;
        for (int k = 1; k <= t_; ++k) {
            line += " + " + columns_[col_a(k)].name;
            if (line.size() > 200) {
                out << line << "\n ";
                line.clear();
            }
        }
        out << line << "\n";
    }
    out << "Subject To\n";
    for (const LpRow& row : rows_) {
        std::string line = " " + row.name + ":";
        for (const auto& [col, coef] : row.terms) {
            const double mag = std::fabs(coef);
            line += coef < 0 ? " - " : " + ";
            if (mag != 1.0) line += num(mag) + " ";
            line += columns_[col].name;
            if (line.size() > 200) {
                out << line << "\n  ";
                line.clear();
            }
        }
        const char* sense = row.sense == '<' ? " <= " : (row.sense == '>' ? " >= " : " = ");
        out << line << sense << num(row.rhs) << "\n";
    }
    out << "Bounds\n";
    for (const LpColumn& col : columns_)
        if (col.kind == VarKind::Unit) out << " 0 <= " << col.name << " <= 1\n";
    out << "Binaries\n";
    for (const LpColumn& col : columns_)
        if (col.kind == VarKind::Binary) out << " " << col.name << "\n";
    out << "End\n";
    return out.str();
}

std::vector<double> CdpModel::encode_circuit(const Circuit& c) const {
    if (c.qubit_count() != q_ || c.var_count() != n_)
        throw std::invalid_argument("circuit register does not match the model");
    if (c.layer_count() > t_)
        throw std::invalid_argument("circuit needs more layers than the budget T");

    std::vector<double> values(columns_.size(), 0.0);

    // Parity trajectory; table[k][i] is the held monomial after layer k.
    std::vector<std::vector<Mask>> parities(t_ + 1, std::vector<Mask>(q_, 0));
    ParityState state(q_, n_);
    for (int i = 0; i < q_; ++i) parities[0][i] = state.at(i);

    std::vector<bool> seen(monomials_.size(), false);
    for (int k = 1; k <= t_; ++k) {
        static const std::vector<Gate> kEmpty;
        const std::vector<Gate>& layer =
            (k - 1 < c.layer_count()) ? c.layers()[k - 1] : kEmpty;
        if (!layer.empty()) values[col_a(k)] = 1.0;
        for (const Gate& g : layer) {
            if (const auto* cx = std::get_if<Cnot>(&g)) {
                auto col = col_c(k, cx->control + 1, cx->target + 1);
                if (!col)
                    throw std::invalid_argument("circuit uses a CNOT arc the model excludes");
                values[*col] = 1.0;
            } else {
                const auto& rot = std::get<Rotation>(g);
                auto it = std::lower_bound(monomials_.begin(), monomials_.end(), rot.monomial);
                if (it == monomials_.end() || *it != rot.monomial) continue;
                const int vid = static_cast<int>(it - monomials_.begin()) + 1;
                if (seen[vid - 1]) continue;  // duplicates collapse to the first placement
                seen[vid - 1] = true;
                values[col_r(k, rot.qubit + 1, vid)] = 1.0;
            }
        }
        state = apply_layer(state, layer);
        for (int i = 0; i < q_; ++i) parities[k][i] = state.at(i);
    }

    for (int k = 0; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i) {
            for (int p = 1; p <= n_; ++p)
                values[col_b(k, i, p)] = (parities[k][i - 1] >> (p - 1)) & 1 ? 1.0 : 0.0;
            for (int vid = 1; vid <= static_cast<int>(monomials_.size()); ++vid)
                values[col_d(k, i, vid)] = parities[k][i - 1] == monomials_[vid - 1] ? 1.0 : 0.0;
        }

    for (int k = 1; k <= t_; ++k)
        for (int i = 1; i <= q_; ++i)
            for (int p = 1; p <= n_; ++p) {
                double sum = 0.0;
                for (int j = 1; j <= q_; ++j)
                    if (auto wcol = col_w(k, j, i, p)) {
                        double cv = values[*col_c(k, j, i)];
                        double bv = values[col_b(k - 1, j, p)];
                        values[*wcol] = cv * bv;
                        sum += cv * bv;
                    }
                if (auto ucol = col_u(k, i, p))
                    values[*ucol] = values[col_b(k - 1, i, p)] * sum;
            }
    return values;
}

std::string CdpModel::warm_start_text(const std::vector<double>& values) const {
    if (values.size() != columns_.size())
        throw std::invalid_argument("assignment size does not match the model");
    std::ostringstream out;
    for (std::size_t idx = 0; idx < columns_.size(); ++idx)
        out << columns_[idx].name << " " << num(values[idx]) << "\n";
    return out.str();
}

std::optional<std::string> CdpModel::check_assignment(const std::vector<double>& values,
                                                      double tolerance) const {
    if (values.size() != columns_.size()) return "assignment size does not match the model";
    for (const LpRow& row : rows_) {
        double lhs = 0.0;
        for (const auto& [col, coef] : row.terms) lhs += coef * values[col];
        const bool ok = row.sense == '<'   ? lhs <= row.rhs + tolerance
                        : row.sense == '>' ? lhs >= row.rhs - tolerance
                                           : std::fabs(lhs - row.rhs) <= tolerance;
        if (!ok) {
            std::ostringstream msg;
            msg << "row " << row.name << " violated: lhs=" << lhs << " sense " << row.sense
                << " rhs=" << row.rhs;
            return msg.str();
        }
    }
    return std::nullopt;
}

double CdpModel::objective_value(const std::vector<double>& values) const {
    double total = 0.0;
    for (int k = 1; k <= t_; ++k) total += values[col_a(k)];
    return total;
}

Circuit CdpModel::decode_solution(const std::vector<double>& values) const {
    if (values.size() != columns_.size())
        throw std::runtime_error("solution size does not match the model");
    auto as_bit = [&](int col) {
        const double v = values[col];
        if (std::fabs(v) > kBinaryTolerance && std::fabs(v - 1.0) > kBinaryTolerance &&
            columns_[col].kind == VarKind::Binary)
            throw std::runtime_error("solution value for " + columns_[col].name +
                                     " is not within 1e-6 of binary");
        return v > 0.5;
    };

    Circuit out(q_, n_);
    try {
        for (int k = 1; k <= t_; ++k) {
            for (int i = 1; i <= q_; ++i)
                for (int j = 1; j <= q_; ++j)
                    if (auto col = col_c(k, i, j))
                        if (as_bit(*col)) out.add(k - 1, Cnot{i - 1, j - 1});
            for (int i = 1; i <= q_; ++i)
                for (int vid = 1; vid <= static_cast<int>(monomials_.size()); ++vid)
                    if (as_bit(col_r(k, i, vid))) {
                        const Mask v = monomials_[vid - 1];
                        out.add(k - 1, Rotation{i - 1, v, h_.coefficient(v)});
                    }
        }
        out.ensure_layers(t_);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("solution violates CDP semantics: ") + e.what());
    }

    VerificationReport report = check_symbolic(out, h_, CheckMode::ExactlyOnce);
    if (!report.passed)
        throw std::runtime_error("solution violates CDP semantics: " +
                                 (report.first_failure ? report.first_failure->reason
                                                       : std::string("unknown")));
    return out;
}

CdpModel build_model(const IsingPolynomial& h, const CdpConfig& cfg) { return CdpModel(h, cfg); }

}  // namespace hoboc
