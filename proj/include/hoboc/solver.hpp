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

#include "hoboc/milp.hpp"

namespace hoboc {

/// Command template with {lp}, {timelimit} and {solout} placeholders. When a
/// warm start is supplied, a "<lp>.mst" sidecar of name/value lines is
/// written next to the model; solvers that take starts may read it, the
/// rest ignore it.
struct SolverSpec {
    std::string command_template;
};

enum class SolveStatus { Optimal, Feasible, Infeasible, Error };

std::string to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::Error;
    double objective = 0.0;
    std::vector<double> values;  // per model column; empty unless a solution was parsed
    std::string message;
};

class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Environment override HOBOC_SOLVER_CMD, else the bundled scipy adapter
/// when python3 can run it. nullopt when nothing is configured.
std::optional<SolverSpec> default_solver();

/// Writes the LP (and warm start, if given), runs the solver command and
/// parses the solution file. Accepts plain "name value" listings, HiGHS
/// solution files and CBC's native format. Solver-not-found, crashes and
/// unparsable output map to distinct SolverError messages.
SolveResult solve(const CdpModel& model, const SolverSpec& spec, const std::string& work_dir,
                  const Circuit* warm_start = nullptr);

}  // namespace hoboc
