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

#include "hoboc/solver.hpp"

#include <sys/wait.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hoboc/verify.hpp"

namespace fs = std::filesystem;

namespace hoboc {

namespace {

std::string replace_all(std::string text, const std::string& key, const std::string& value) {
    std::size_t at = 0;
    while ((at = text.find(key, at)) != std::string::npos) {
        text.replace(at, key.size(), value);
        at += value.size();
    }
    return text;
}

bool python_module_available(const std::string& module) {
    const std::string cmd = "python3 -c \"import " + module + "\" >/dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
}

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        default: return "error";
    }
}

std::optional<SolverSpec> default_solver() {
    if (const char* env = std::getenv("HOBOC_SOLVER_CMD"); env && *env)
        return SolverSpec{env};
#ifdef HOBOC_LP_SOLVER_SCRIPT
    static int probe = -1;  // -1 unknown, 0 missing, 1 usable
    if (probe == -1) {
        probe = fs::exists(HOBOC_LP_SOLVER_SCRIPT) && python_module_available("scipy") ? 1 : 0;
    }
    if (probe == 1)
        return SolverSpec{std::string("python3 \"") + HOBOC_LP_SOLVER_SCRIPT +
                          "\" {lp} {timelimit} {solout}"};
#endif
    return std::nullopt;
}

namespace {

struct ParsedSolution {
    std::optional<SolveStatus> status;
    std::vector<std::pair<std::string, double>> values;
};

// Plain format: optional "status <word>" / "objective <num>" lines, then
// name/value pairs.
ParsedSolution parse_plain(std::istream& in) {
    ParsedSolution out;
    std::string key;
    while (in >> key) {
        if (key == "status") {
            std::string word;
            in >> word;
            word = lowercase(word);
            if (word == "optimal") out.status = SolveStatus::Optimal;
            else if (word == "feasible") out.status = SolveStatus::Feasible;
            else if (word == "infeasible") out.status = SolveStatus::Infeasible;
            else out.status = SolveStatus::Error;
        } else if (key == "objective") {
            double ignored;
            in >> ignored;
        } else {
            double value;
            if (!(in >> value)) break;
            out.values.push_back({key, value});
        }
    }
    return out;
}

// HiGHS --write_solution style: "Model status: Optimal", "# Columns N"
// followed by name/value lines.
ParsedSolution parse_highs(std::istream& in) {
    ParsedSolution out;
    std::string line;
    bool in_columns = false;
    long remaining = 0;
    while (std::getline(in, line)) {
        if (line.rfind("Model status", 0) == 0) {
            const std::string status = lowercase(line);
            if (status.find("optimal") != std::string::npos) out.status = SolveStatus::Optimal;
            else if (status.find("infeasible") != std::string::npos)
                out.status = SolveStatus::Infeasible;
            else out.status = SolveStatus::Feasible;
            continue;
        }
        if (line.rfind("# Columns", 0) == 0) {
            in_columns = true;
            std::istringstream ls(line.substr(9));
            ls >> remaining;
            continue;
        }
        if (in_columns) {
            if (remaining <= 0 || line.rfind('#', 0) == 0) break;
            std::istringstream ls(line);
            std::string name;
            double value;
            if (ls >> name >> value) {
                out.values.push_back({name, value});
                --remaining;
            }
        }
    }
    return out;
}

// CBC native: "Optimal - objective value 8.0" header, then
// "<idx> <name> <value> <reduced cost>" lines (a "**" marker may lead).
ParsedSolution parse_cbc(std::istream& in) {
    ParsedSolution out;
    std::string header;
    std::getline(in, header);
    const std::string status = lowercase(header);
    if (status.find("infeasible") != std::string::npos) out.status = SolveStatus::Infeasible;
    else if (status.find("optimal") != std::string::npos) out.status = SolveStatus::Optimal;
    else out.status = SolveStatus::Feasible;
    std::string tok;
    std::vector<std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        fields.clear();
        while (ls >> tok) fields.push_back(tok);
        if (fields.empty()) continue;
        std::size_t base = fields.front() == "**" ? 1 : 0;
        if (fields.size() < base + 3) continue;
        try {
            out.values.push_back({fields[base + 1], std::stod(fields[base + 2])});
        } catch (const std::exception&) {
            continue;
        }
    }
    return out;
}

}  // namespace

SolveResult solve(const CdpModel& model, const SolverSpec& spec, const std::string& work_dir,
                  const Circuit* warm_start) {
    fs::create_directories(work_dir);
    const fs::path lp_path = fs::path(work_dir) / "model.lp";
    const fs::path sol_path = fs::path(work_dir) / "model.sol";
    const fs::path log_path = fs::path(work_dir) / "solver.log";

    {
        std::ofstream lp(lp_path);
        lp << model.emit_lp();
    }
    if (warm_start) {
        // The start must be a physically valid routing that fits the budget;
        // duplicated rotations collapse to their first placement on encode.
        const Circuit packed = compact(*warm_start);
        VerificationReport valid =
            check_symbolic(packed, model.hamiltonian(), CheckMode::AngleSum);
        if (!valid.passed)
            throw SolverError("warm start rejected: " +
                              (valid.first_failure ? valid.first_failure->reason
                                                   : std::string("invalid circuit")));
        const std::vector<double> start = model.encode_circuit(packed);
        std::ofstream mst(lp_path.string() + ".mst");
        mst << model.warm_start_text(start);
    }
    std::error_code ec;
    fs::remove(sol_path, ec);

    double time_limit = model.config().time_limit;
    if (const char* env = std::getenv("HOBOC_TIME_LIMIT"); env && *env) {
        char* end = nullptr;
        const double parsed = std::strtod(env, &end);
        if (end != env && parsed > 0) time_limit = parsed;
    }
    std::ostringstream tl;
    tl << time_limit;
    std::string cmd = spec.command_template;
    cmd = replace_all(cmd, "{lp}", lp_path.string());
    cmd = replace_all(cmd, "{timelimit}", tl.str());
    cmd = replace_all(cmd, "{solout}", sol_path.string());
    cmd += " > " + log_path.string() + " 2>&1";

    const int raw = std::system(cmd.c_str());
    const int exit_code = raw == -1 ? -1 : WEXITSTATUS(raw);
    if (exit_code == 127)
        throw SolverError("solver executable not found (exit 127): " + spec.command_template);

    if (!fs::exists(sol_path)) {
        throw SolverError("solver produced no solution file (exit " + std::to_string(exit_code) +
                          "), see " + log_path.string());
    }

    std::ifstream sol(sol_path);
    std::string first_line;
    std::getline(sol, first_line);
    sol.clear();
    sol.seekg(0);

    ParsedSolution parsed;
    if (first_line.find("objective value") != std::string::npos) parsed = parse_cbc(sol);
    else if (first_line.rfind("Model status", 0) == 0 || first_line.rfind('#', 0) == 0)
        parsed = parse_highs(sol);
    else parsed = parse_plain(sol);  // the plain name/value listing

    if (!parsed.status)
        throw SolverError("unparsable solution file: " + sol_path.string());

    SolveResult result;
    result.status = *parsed.status;
    if (result.status == SolveStatus::Infeasible || result.status == SolveStatus::Error) {
        result.message = "solver reported " + to_string(result.status);
        return result;
    }
    if (parsed.values.empty())
        throw SolverError("solution file lists no variables: " + sol_path.string());

    result.values.assign(model.column_count(), 0.0);
    for (const auto& [name, value] : parsed.values)
        if (auto idx = model.column_index(name)) result.values[*idx] = value;
    result.objective = model.objective_value(result.values);
    return result;
}

}  // namespace hoboc
