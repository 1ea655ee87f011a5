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
#include <vector>

#include "hoboc/circuit.hpp"
#include "hoboc/polynomial.hpp"
#include "hoboc/solver.hpp"

namespace hoboc {

struct PipelineOptions {
    int qubits = 0;          // 0: n for milp/template, n+1 for gray
    int layers = 0;          // 0: template-heuristic depth
    double time_limit = 1200.0;
    std::string solver_cmd;  // empty: HOBOC_SOLVER_CMD or the bundled adapter
    bool strict_gray = true;
    bool warm_start = true;
    std::string work_dir;    // solver scratch; empty: system temp
    unsigned seed = 12345;
    int gamma_samples = 3;
};

struct CompileOutcome {
    Circuit circuit;
    IsingPolynomial hamiltonian;
    std::string method;
    double seconds = 0.0;
    bool used_solver = false;
    SolveStatus solver_status = SolveStatus::Optimal;
    std::string note;
};

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// method is one of milp, milp-down, template, gray.
CompileOutcome compile_with_method(const HoboPolynomial& f, const std::string& method,
                                   const PipelineOptions& options);

/// Angle-sum parity check plus, when the register is small enough, the
/// statevector oracle at seeded gamma samples.
bool verify_circuit(const Circuit& c, const IsingPolynomial& h, unsigned seed, int gamma_samples,
                    std::string* reason = nullptr);

struct BenchRecord {
    std::string instance;
    int n = 0;
    int term_count = 0;
    int degree = 0;
    std::string method;
    int depth = 0;
    double seconds = 0.0;
    bool verified = false;
    std::string note;
};

struct BenchOptions {
    std::vector<std::string> methods{"gray", "template"};
    PipelineOptions pipeline;
};

std::vector<BenchRecord> run_bench(const std::string& instance_dir, const BenchOptions& options);
std::string bench_markdown(const std::vector<BenchRecord>& records,
                           const std::vector<std::string>& methods);
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace hoboc
