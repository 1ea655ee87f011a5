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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hoboc/exact_search.hpp"
#include "hoboc/graycode.hpp"
#include "hoboc/milp.hpp"
#include "hoboc/pipeline.hpp"
#include "hoboc/polynomial.hpp"
#include "hoboc/qasm.hpp"
#include "hoboc/solver.hpp"
#include "hoboc/templates.hpp"
#include "hoboc/verify.hpp"

namespace fs = std::filesystem;
using namespace hoboc;

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 solver error.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kSolverError = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const std::string& path, const std::string& content) {
    fs::create_directories(fs::path(path).parent_path());
    std::ofstream out(path);
    out << content;
}

HoboPolynomial load_poly(const std::string& path) {
    try {
        return HoboPolynomial::parse(slurp(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

int run_compile(const std::string& file, const std::string& method,
                const PipelineOptions& options,
                const std::string& out_dir, double gamma, bool barriers) {
    const HoboPolynomial f = load_poly(file);
    const CompileOutcome outcome = compile_with_method(f, method, options);

    std::string reason;
    const bool ok =
        verify_circuit(outcome.circuit, outcome.hamiltonian, options.seed,
                       options.gamma_samples, &reason);

    const std::string stem = fs::path(file).stem().string() + "." + method;
    const fs::path base = fs::path(out_dir);
    spill((base / (stem + ".qasm")).string(), emit_qasm(outcome.circuit, gamma, barriers));
    spill((base / (stem + ".json")).string(), circuit_to_json(outcome.circuit).dump(2) + "\n");
    VerificationReport report =
        check_symbolic(outcome.circuit, outcome.hamiltonian, CheckMode::AngleSum);
    spill((base / (stem + ".report.json")).string(), report.to_json().dump(2) + "\n");

    std::cout << "instance " << fs::path(file).stem().string() << " method " << method
              << " depth " << outcome.circuit.depth() << " cnots "
              << outcome.circuit.cnot_count() << " rotations "
              << outcome.circuit.rotation_count() << " verified " << (ok ? "yes" : "no");
    if (!outcome.note.empty()) std::cout << " (" << outcome.note << ")";
    std::cout << "\n";
    if (!ok) {
        std::cerr << "verification failed: " << reason << "\n";
        return kVerificationFailure;
    }
    return kOk;
}

int run_verify(const std::string& circuit_path, const std::string& poly_path, unsigned seed,
               int gamma_samples) {
    const HoboPolynomial f = load_poly(poly_path);
    const IsingPolynomial h = expand_to_ising(f);
    Circuit c;
    try {
        c = circuit_from_json(nlohmann::json::parse(slurp(circuit_path)));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(circuit_path + ": " + e.what());
    }

    VerificationReport symbolic = check_symbolic(c, h, CheckMode::AngleSum);
    nlohmann::json out = symbolic.to_json();
    out["mode"] = "angle-sum";
    bool ok = symbolic.passed;
    if (ok && c.qubit_count() <= kMaxStatevectorQubits) {
        nlohmann::json sv = nlohmann::json::array();
        for (double gamma : sample_gammas(gamma_samples, seed)) {
            VerificationReport r = check_statevector(c, h, gamma);
            sv.push_back({{"gamma", gamma}, {"passed", r.passed}});
            ok = ok && r.passed;
        }
        out["statevector"] = std::move(sv);
    }
    out["passed"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hoboc: shallow phase-rotation/CNOT circuits for binary polynomials"};
    app.require_subcommand(1);

    PipelineOptions options;
    std::string file, method = "template", out_dir = "out", format = "qasm";
    double gamma = 1.0;
    bool barriers = false;
    bool no_strict_gray = false;
    bool no_warm_start = false;

    auto add_pipeline_flags = [&](CLI::App* cmd) {
        cmd->add_option("--qubits", options.qubits, "qubit budget (default: n)");
        cmd->add_option("--layers", options.layers, "layer budget T (default: template depth)");
        cmd->add_option("--time-limit", options.time_limit, "solver time limit in seconds");
        cmd->add_option("--solver-cmd", options.solver_cmd,
                        "solver command template with {lp} {timelimit} {solout}");
        cmd->add_option("--seed", options.seed, "seed for gamma sampling");
        cmd->add_option("--gamma-samples", options.gamma_samples,
                        "statevector checks per verification");
        cmd->add_option("--work-dir", options.work_dir, "solver scratch directory");
        cmd->add_flag("--no-strict-gray", no_strict_gray,
                      "let degree-1 monomials bypass the gray ancilla");
        cmd->add_flag("--no-warm-start", no_warm_start, "do not pass the template warm start");
    };

    CLI::App* compile = app.add_subcommand("compile", "compile a polynomial to a circuit");
    compile->add_option("file", file, "input .hobo file")->required();
    compile->add_option("--method", method, "milp, milp-down, template or gray");
    compile->add_option("--out-dir", out_dir, "artifact directory");
    compile->add_option("--gamma", gamma, "gamma used in the emitted QASM angles");
    compile->add_flag("--barriers", barriers, "emit a barrier between layers");
    add_pipeline_flags(compile);

    std::string circuit_path, poly_path;
    CLI::App* verify = app.add_subcommand("verify", "verify a circuit JSON against a polynomial");
    verify->add_option("circuit", circuit_path, "circuit .json")->required();
    verify->add_option("poly", poly_path, "polynomial .hobo")->required();
    verify->add_option("--seed", options.seed, "seed for gamma sampling");
    verify->add_option("--gamma-samples", options.gamma_samples, "statevector checks");

    std::string instance_dir, methods_csv = "gray,template", bench_out;
    CLI::App* bench = app.add_subcommand("bench", "depth table over an instance directory");
    bench->add_option("dir", instance_dir, "directory of .hobo instances")->required();
    bench->add_option("--methods", methods_csv, "comma-separated method list");
    bench->add_option("--format", format, "md or csv");
    bench->add_option("--out", bench_out, "write the table here instead of stdout");
    add_pipeline_flags(bench);

    int degree = 3;
    CLI::App* tmpl = app.add_subcommand("template", "dump the recursive template for a degree");
    tmpl->add_option("--degree", degree, "monomial degree (>= 2)")->required();
    tmpl->add_option("--format", format, "qasm or json");
    tmpl->add_option("--gamma", gamma, "gamma for qasm output");

    bool downward = false, no_symmetry = false, no_relax = false, warm_file = false;
    CLI::App* emit = app.add_subcommand("emit-lp", "write the routing MILP in LP format");
    emit->add_option("file", file, "input .hobo file")->required();
    emit->add_option("--qubits", options.qubits, "qubit budget (default: n)");
    emit->add_option("--layers", options.layers, "layer budget T (default: template depth)");
    emit->add_flag("--downward", downward, "restrict CNOTs to control < target");
    emit->add_flag("--no-symmetry", no_symmetry, "drop the a_k >= a_{k+1} rows");
    emit->add_flag("--no-relax", no_relax, "keep a, b, d binary instead of [0,1]");
    emit->add_flag("--warm-start", warm_file, "also print the template start as name/value lines");

    CLI11_PARSE(app, argc, argv);

    options.strict_gray = !no_strict_gray;
    options.warm_start = !no_warm_start;

    try {
        if (compile->parsed()) return run_compile(file, method, options, out_dir, gamma, barriers);
        if (verify->parsed())
            return run_verify(circuit_path, poly_path, options.seed, options.gamma_samples);
        if (bench->parsed()) {
            BenchOptions bopts;
            bopts.pipeline = options;
            bopts.methods.clear();
            std::stringstream ss(methods_csv);
            std::string item;
            while (std::getline(ss, item, ',')) bopts.methods.push_back(item);
            const auto records = run_bench(instance_dir, bopts);
            const std::string table =
                format == "csv" ? bench_csv(records) : bench_markdown(records, bopts.methods);
            if (bench_out.empty()) std::cout << table;
            else spill(bench_out, table);
            return kOk;
        }
        if (tmpl->parsed()) {
            const Circuit& c = template_circuit(degree);
            if (format == "json") std::cout << circuit_to_json(c).dump(2) << "\n";
            else std::cout << emit_qasm(c, gamma);
            return kOk;
        }
        if (emit->parsed()) {
            const HoboPolynomial f = load_poly(file);
            const IsingPolynomial h = expand_to_ising(f);
            const Circuit heuristic = compile_greedy(f, h);
            CdpConfig cfg;
            cfg.qubits = options.qubits == 0 ? f.var_count() : options.qubits;
            cfg.layers = options.layers == 0 ? heuristic.depth() : options.layers;
            cfg.downward_only = downward;
            cfg.symmetry_break = !no_symmetry;
            cfg.relax_abd = !no_relax;
            CdpModel model(h, cfg);
            std::cout << model.emit_lp();
            if (warm_file && heuristic.depth() <= cfg.layers) {
                std::vector<int> identity(heuristic.qubit_count());
                for (std::size_t i = 0; i < identity.size(); ++i)
                    identity[i] = static_cast<int>(i);
                Circuit padded =
                    concatenate(Circuit(cfg.qubits, f.var_count()), heuristic, identity);
                std::cout << model.warm_start_text(model.encode_circuit(compact(padded)));
            }
            return kOk;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kSolverError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSolverError;
    }
    return kOk;
}
