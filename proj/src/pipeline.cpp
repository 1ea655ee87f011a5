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

#include "hoboc/pipeline.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hoboc/graycode.hpp"
#include "hoboc/milp.hpp"
#include "hoboc/templates.hpp"
#include "hoboc/verify.hpp"

namespace fs = std::filesystem;

namespace hoboc {

namespace {

std::string scratch_dir(const PipelineOptions& options, const std::string& stem) {
    if (!options.work_dir.empty()) return (fs::path(options.work_dir) / stem).string();
    static int counter = 0;
    std::ostringstream name;
    name << "hoboc-" << ::getpid() << "-" << counter++ << "-" << stem;
    return (fs::temp_directory_path() / name.str()).string();
}

}  // namespace

CompileOutcome compile_with_method(const HoboPolynomial& f, const std::string& method,
                                   const PipelineOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    CompileOutcome outcome;
    outcome.method = method;
    outcome.hamiltonian = expand_to_ising(f);

    bool has_gate_content = false;
    for (const Term& t : f.terms())
        if (t.monomial != 0) has_gate_content = true;
    if (!has_gate_content)
        throw InputError("the polynomial has no non-constant term; nothing to compile");

    if (method == "template") {
        outcome.circuit = compile_greedy(f, outcome.hamiltonian);
    } else if (method == "gray") {
        outcome.circuit = compile_gray(f, options.strict_gray);
    } else if (method == "milp" || method == "milp-down") {
        const Circuit heuristic = compile_greedy(f, outcome.hamiltonian);
        CdpConfig cfg;
        cfg.qubits = options.qubits == 0 ? f.var_count() : options.qubits;
        cfg.layers = options.layers == 0 ? heuristic.depth() : options.layers;
        cfg.downward_only = method == "milp-down";
        cfg.time_limit = options.time_limit;
        CdpModel model(outcome.hamiltonian, cfg);

        std::optional<SolverSpec> spec;
        if (!options.solver_cmd.empty()) spec = SolverSpec{options.solver_cmd};
        else spec = default_solver();
        if (!spec) throw SolverError("no MILP solver configured (set HOBOC_SOLVER_CMD)");

        const Circuit* warm = nullptr;
        Circuit warm_storage;
        if (options.warm_start && heuristic.depth() <= cfg.layers) {
            // Widen the register when ancillas were requested.
            std::vector<int> identity(heuristic.qubit_count());
            for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
            warm_storage =
                concatenate(Circuit(cfg.qubits, f.var_count()), heuristic, identity);
            warm = &warm_storage;
        }
        SolveResult solved = solve(model, *spec, scratch_dir(options, method), warm);
        outcome.used_solver = true;
        outcome.solver_status = solved.status;
        if (solved.status == SolveStatus::Infeasible)
            throw SolverError("model infeasible for T=" + std::to_string(cfg.layers));
        if (solved.status == SolveStatus::Error)
            throw SolverError("solver failed: " + solved.message);
        // Replay the raw assignment through our own rows before trusting it;
        // this catches LP-emission and solution-parsing drift.
        if (auto violation = model.check_assignment(solved.values, 1e-5))
            throw SolverError("solver solution fails replay: " + *violation);
        outcome.circuit = model.decode_solution(solved.values);
        std::ostringstream note;
        note << to_string(solved.status) << " objective " << solved.objective;
        outcome.note = note.str();
    } else {
        throw InputError("unknown method '" + method +
                         "' (expected milp, milp-down, template or gray)");
    }

    outcome.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return outcome;
}

bool verify_circuit(const Circuit& c, const IsingPolynomial& h, unsigned seed, int gamma_samples,
                    std::string* reason) {
    VerificationReport symbolic = check_symbolic(c, h, CheckMode::AngleSum);
    if (!symbolic.passed) {
        if (reason)
            *reason = symbolic.first_failure ? symbolic.first_failure->reason : "symbolic check";
        return false;
    }
    if (c.qubit_count() <= 12 && gamma_samples > 0) {
        for (double gamma : sample_gammas(gamma_samples, seed)) {
            VerificationReport sv = check_statevector(c, h, gamma);
            if (!sv.passed) {
                if (reason)
                    *reason = sv.first_failure ? sv.first_failure->reason : "statevector check";
                return false;
            }
        }
    }
    return true;
}

std::vector<BenchRecord> run_bench(const std::string& instance_dir, const BenchOptions& options) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(instance_dir))
        if (entry.path().extension() == ".hobo") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<BenchRecord> records;
    for (const fs::path& file : files) {
        std::ifstream in(file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        HoboPolynomial f;
        try {
            f = HoboPolynomial::parse(buffer.str());
        } catch (const std::exception& e) {
            BenchRecord record;
            record.instance = file.stem().string();
            record.note = e.what();
            records.push_back(record);
            continue;
        }
        for (const std::string& method : options.methods) {
            BenchRecord record;
            record.instance = file.stem().string();
            record.n = f.var_count();
            record.term_count = static_cast<int>(f.terms().size());
            record.degree = f.degree();
            record.method = method;
            PipelineOptions cell = options.pipeline;
            if (!cell.work_dir.empty())
                cell.work_dir = (fs::path(cell.work_dir) / record.instance).string();
            try {
                CompileOutcome outcome = compile_with_method(f, method, cell);
                std::string reason;
                record.verified = verify_circuit(outcome.circuit, outcome.hamiltonian, cell.seed,
                                                 cell.gamma_samples, &reason);
                record.depth = outcome.circuit.depth();
                record.seconds = outcome.seconds;
                record.note = record.verified ? outcome.note : "unverified: " + reason;
            } catch (const std::exception& e) {
                record.note = e.what();
            }
            records.push_back(record);
        }
    }
    return records;
}

namespace {

std::string format_seconds(double seconds) {
    if (seconds < 0.1) return "<0.1";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", seconds);
    return buf;
}

}  // namespace

std::string bench_markdown(const std::vector<BenchRecord>& records,
                           const std::vector<std::string>& methods) {
    struct Key {
        std::string instance;
        int n, terms, degree;
    };
    std::vector<Key> order;
    std::map<std::string, std::map<std::string, const BenchRecord*>> table;
    for (const BenchRecord& r : records) {
        if (!table.count(r.instance)) order.push_back({r.instance, r.n, r.term_count, r.degree});
        table[r.instance][r.method] = &r;
    }
    std::ostringstream out;
    out << "| Instance | n | terms | D |";
    for (const std::string& m : methods) out << " " << m << " depth | " << m << " CPU [s] |";
    out << "\n|---|---|---|---|";
    for (std::size_t i = 0; i < methods.size(); ++i) out << "---|---|";
    out << "\n";
    for (const Key& key : order) {
        out << "| " << key.instance << " | " << key.n << " | " << key.terms << " | " << key.degree
            << " |";
        for (const std::string& m : methods) {
            const auto& row = table[key.instance];
            auto it = row.find(m);
            // Only verified depths are published; failures show as dashes.
            if (it == row.end() || !it->second->verified)
                out << " - | - |";
            else
                out << " " << it->second->depth << " | " << format_seconds(it->second->seconds)
                    << " |";
        }
        out << "\n";
    }
    out << "\nGeneral-purpose transpilers (e.g. Qiskit) are not run here; compare externally.\n";
    return out.str();
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "instance,n,terms,degree,method,depth,seconds,verified,note\n";
    for (const BenchRecord& r : records) {
        std::string note = r.note;
        std::replace(note.begin(), note.end(), ',', ';');
        out << r.instance << "," << r.n << "," << r.term_count << "," << r.degree << ","
            << r.method << "," << (r.verified ? std::to_string(r.depth) : "-") << "," << r.seconds
            << "," << (r.verified ? "true" : "false") << "," << note << "\n";
    }
    return out.str();
}

}  // namespace hoboc
