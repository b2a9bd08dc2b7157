// lsgame: command-line front end for linear system games.
#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "lsg/analysis.hpp"
#include "lsg/classical.hpp"
#include "lsg/coset_table.hpp"
#include "lsg/game.hpp"
#include "lsg/j_search.hpp"
#include "lsg/linear_system.hpp"
#include "lsg/pauli.hpp"
#include "lsg/presentation.hpp"
#include "lsg/strategy_io.hpp"

namespace {

using nlohmann::json;

constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::optional<lsg::Residue> p;
    bool json_output = false;
    int threads = 1;
};

lsg::LinearSystem load(const std::string& path, const Common& c) {
    auto sys = lsg::load_system(path);
    if (!c.p || *c.p == sys.modulus()) return sys;
    // Reinterpret the same coefficients over another prime; validation reruns.
    return lsg::LinearSystem(*c.p, sys.matrix(), sys.rhs());
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << body;
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.json_output) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int cmd_analyze(const std::string& path, const lsg::AnalysisOptions& options, const Common& c) {
    const auto sys = load(path, c);
    const auto verdict = lsg::analyze(sys, options);
    emit(c, lsg::verdict_to_json(verdict), lsg::verdict_to_text(verdict));
    return verdict.inconsistencies.empty() ? 0 : kInconsistent;
}

int cmd_check_strategy(const std::string& system_path, const std::string& strategy_path, double tol,
                       double tol_structural, const Common& c) {
    const auto sys = load(system_path, c);
    const auto st = lsg::strategy_from_json(lsg::read_json_file(strategy_path), sys);
    const auto structural = lsg::check_strategy(st, sys, tol_structural);
    const auto perfection = lsg::is_perfect(st, sys, tol);
    auto game = lsg::game_value(st, sys);
    if (const auto ds = lsg::as_deterministic(st, sys)) game.exact = lsg::deterministic_value(*ds, sys);

    json j;
    j["dimension"] = st.dimension;
    j["structure"] = {{"state_norm", structural.state_norm},
                      {"observable", structural.observable},
                      {"alice_bob", structural.alice_bob},
                      {"local", structural.local},
                      {"passed", structural.passed}};
    j["perfection"] = {{"max_consistency", perfection.max_consistency},
                       {"max_constraint", perfection.max_constraint},
                       {"passed", perfection.passed}};
    j["game"] = lsg::game_report_to_json(game);

    std::ostringstream os;
    os << std::setprecision(6);
    os << "dimension:        " << st.dimension << "\n";
    os << "structure:        " << (structural.passed ? "valid" : "INVALID") << " (state " << structural.state_norm
       << ", observable " << structural.observable << ", alice/bob " << structural.alice_bob << ", local "
       << structural.local << ")\n";
    os << "perfect:          " << (perfection.passed ? "yes" : "no") << " (consistency "
       << perfection.max_consistency << ", constraint " << perfection.max_constraint << ")\n";
    os << "value:            " << std::setprecision(12) << game.value;
    if (game.exact) os << " = " << *game.exact;
    os << "\n";
    os << "worst pair:       equation " << game.worst.equation + 1 << ", x" << game.worst.variable + 1 << " ("
       << game.worst.probability << ")\n";
    emit(c, j, os.str());
    return 0;
}

int cmd_group_export(const std::string& path, const std::string& output, const Common& c) {
    const auto pres = lsg::build_solution_group(load(path, c));
    const auto text = lsg::export_presentation(pres);
    if (!output.empty()) write_text(output, text);
    json j{{"generators", pres.generator_count()},
           {"relators", pres.relators().size()},
           {"order", pres.count(lsg::RelatorKind::Order)},
           {"j_commutator", pres.count(lsg::RelatorKind::JCommutator)},
           {"local", pres.count(lsg::RelatorKind::Local)},
           {"constraint", pres.count(lsg::RelatorKind::Constraint)}};
    if (c.json_output) {
        std::cout << j.dump(2) << "\n";
    } else if (output.empty()) {
        std::cout << text;
    } else {
        std::cout << "wrote " << pres.relators().size() << " relators to " << output << "\n";
    }
    return 0;
}

int cmd_group_prove_j(const std::string& path, std::size_t budget, const std::string& output, const Common& c) {
    const auto pres = lsg::build_solution_group(load(path, c));
    const auto result = lsg::prove_j_trivial(pres, budget);
    json j;
    std::ostringstream os;
    if (const auto* proved = std::get_if<lsg::Proved>(&result)) {
        const auto cert_text = lsg::export_certificate(pres, proved->certificate);
        const auto replay = lsg::replay_certificate(pres, proved->certificate);
        if (!replay) {
            std::cerr << "internal error: certificate does not replay\n";
            return kInconsistent;
        }
        if (!output.empty()) write_text(output, cert_text);
        j = {{"proved", true}, {"nodes", proved->nodes}, {"j_power", *replay},
             {"certificate", json::parse(cert_text)}};
        os << "J = e proved after " << proved->nodes << " products; certificate has "
           << proved->certificate.records.size() << " factors and replays to J^" << *replay << "\n";
        if (output.empty()) {
            os << cert_text;
        } else {
            os << "certificate written to " << output << "\n";
        }
    } else {
        const auto nodes = std::get<lsg::Inconclusive>(result).nodes;
        j = {{"proved", false}, {"nodes", nodes}};
        os << "inconclusive after " << nodes << " products\n";
    }
    emit(c, j, os.str());
    return 0;
}

int cmd_group_enumerate(const std::string& path, std::size_t limit, const Common& c) {
    const auto pres = lsg::build_solution_group(load(path, c));
    const auto result = lsg::coset_enumerate(pres, limit);
    json j;
    std::ostringstream os;
    if (const auto* finite = std::get_if<lsg::Finite>(&result)) {
        const auto problem = lsg::validate_coset_table(finite->table, pres);
        if (!problem.empty()) {
            std::cerr << "internal error: invalid coset table: " << problem << "\n";
            return kInconsistent;
        }
        const auto ji = lsg::j_index(finite->table);
        j = {{"finite", true}, {"order", finite->table.order()}, {"j_nontrivial", ji.nontrivial}};
        os << "order " << finite->table.order() << ", J " << (ji.nontrivial ? "nontrivial" : "trivial") << "\n";
    } else {
        const auto& out = std::get<lsg::OutOfBudget>(result);
        j = {{"finite", false}, {"live_cosets", out.live_cosets}, {"defined_cosets", out.defined_cosets}};
        os << "limit reached: " << out.live_cosets << " live cosets, " << out.defined_cosets << " defined\n";
    }
    emit(c, j, os.str());
    return 0;
}

int cmd_classical(const std::string& path, std::uint64_t cap, const std::string& output, const Common& c) {
    const auto sys = load(path, c);
    const auto solution = lsg::classical_solve(sys);
    json j{{"solvable", solution.has_value()}, {"work", lsg::classical_work(sys)}};
    std::ostringstream os;
    os << "Gaussian elimination: " << (solution ? "solvable" : "inconsistent") << "\n";
    try {
        const auto best = lsg::classical_optimum(sys, cap);
        j["value"] = best.value.str();
        os << "classical value:      " << best.value << "\n";
        if (!output.empty()) {
            lsg::write_json_file(output, lsg::strategy_to_json(lsg::to_strategy(best.strategy, sys), sys));
            os << "optimal strategy written to " << output << "\n";
        }
    } catch (const lsg::ClassicalCapExceeded& e) {
        j["value"] = nullptr;
        os << "classical value:      not computed (" << e.what() << ")\n";
    }
    emit(c, j, os.str());
    return 0;
}

int cmd_search_pauli(const std::string& path, std::size_t qubits, std::uint64_t nodes, const std::string& output,
                     const std::string& strategy_output, const Common& c) {
    const auto sys = load(path, c);
    if (sys.modulus() != 2) throw InputError("search-pauli requires p = 2");
    if (qubits > lsg::kMaxPauliQubits) {
        throw InputError("--budget-qubits is at most " + std::to_string(lsg::kMaxPauliQubits));
    }
    const auto result = lsg::pauli_opsol_search(sys, qubits, nodes);
    json j{{"nodes", result.nodes}};
    std::ostringstream os;
    switch (result.status) {
        case lsg::PauliSearchStatus::Found: {
            const auto report = lsg::check_operator_solution(*result.solution, sys, lsg::Tolerances{}.structural);
            j["status"] = "found";
            j["qubits"] = result.qubits;
            j["labels"] = result.labels;
            j["max_constraint_residual"] = report.max_constraint;
            os << "found on " << result.qubits << " qubit(s) after " << result.nodes << " nodes\n";
            for (std::size_t i = 0; i < result.labels.size(); ++i) {
                os << "  A" << i + 1 << " = " << result.labels[i] << "\n";
            }
            os << "max constraint residual " << report.max_constraint << "\n";
            if (!output.empty()) {
                lsg::write_json_file(output, lsg::operator_solution_to_json(*result.solution, sys));
            }
            if (!strategy_output.empty()) {
                const auto st = lsg::operator_solution_to_tensor_strategy(*result.solution, sys);
                lsg::write_json_file(strategy_output, lsg::strategy_to_json(st, sys));
            }
            break;
        }
        case lsg::PauliSearchStatus::Exhausted:
            j["status"] = "exhausted";
            os << "no signed Pauli solution on up to " << qubits << " qubit(s)\n";
            break;
        case lsg::PauliSearchStatus::BudgetExceeded:
            j["status"] = "budget_exceeded";
            os << "node budget of " << nodes << " exceeded\n";
            break;
    }
    emit(c, j, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear system games: classical values, solution groups and perfect strategies"};
    app.require_subcommand(1);

    Common common;
    lsg::AnalysisOptions options;
    double tol_perfect = options.tol_perfect;
    double tol_structural = options.tol_structural;
    std::size_t budget_j = options.j_budget;
    std::size_t budget_cosets = options.coset_limit;
    std::size_t budget_qubits = options.pauli_qubits;
    std::uint64_t budget_nodes = options.pauli_nodes;
    std::uint64_t budget_classical = options.classical_cap;
    std::size_t budget_dimension = options.max_regular_dimension;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--p", common.p, "Reinterpret the system over this prime modulus");
        cmd->add_flag("--json", common.json_output, "Print the machine-readable report");
        cmd->add_option("--threads", common.threads, "Worker threads for parallel kernels")
            ->check(CLI::PositiveNumber);
    };

    std::string system_path;
    std::string strategy_path;
    std::string output;
    std::string strategy_output;

    auto* analyze = app.add_subcommand("analyze", "Run every stage and report the verdicts");
    analyze->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
    analyze->add_option("--out", options.artifact_dir, "Directory for exported artifacts");
    analyze->add_option("--budget-j", budget_j, "Products examined by the J search");
    analyze->add_option("--budget-cosets", budget_cosets, "Live coset limit for enumeration");
    analyze->add_option("--budget-qubits", budget_qubits, "Largest qubit count for the Pauli search");
    analyze->add_option("--budget-nodes", budget_nodes, "Node budget for the Pauli search");
    analyze->add_option("--budget-classical", budget_classical, "Work cap for the classical value");
    analyze->add_option("--budget-dimension", budget_dimension, "Largest regular-representation dimension");
    analyze->add_option("--tol-perfect", tol_perfect, "Tolerance for perfection checks");
    analyze->add_option("--tol-structural", tol_structural, "Tolerance for structural checks");
    add_common(analyze);

    auto* check = app.add_subcommand("check-strategy", "Validate a strategy file and compute its value");
    check->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
    check->add_option("strategy", strategy_path, "Strategy JSON")->required()->check(CLI::ExistingFile);
    check->add_option("--tol-perfect", tol_perfect, "Tolerance for perfection checks");
    check->add_option("--tol-structural", tol_structural, "Tolerance for structural checks");
    add_common(check);

    auto* group = app.add_subcommand("group", "Solution group tools");
    group->require_subcommand(1);
    auto* group_export = group->add_subcommand("export", "Print the presentation");
    group_export->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
    group_export->add_option("-o,--output", output, "Write the presentation here");
    add_common(group_export);
    auto* prove_j = group->add_subcommand("prove-j", "Search for a J-triviality certificate");
    prove_j->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
    prove_j->add_option("--budget-j", budget_j, "Products examined by the search");
    prove_j->add_option("-o,--output", output, "Write the certificate here");
    add_common(prove_j);
    auto* enumerate = group->add_subcommand("enumerate", "Coset enumeration over the trivial subgroup");
    enumerate->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
    enumerate->add_option("--budget-cosets", budget_cosets, "Live coset limit");
    add_common(enumerate);

    auto* classical = app.add_subcommand("classical", "Exact classical value by enumeration");
    classical->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
    classical->add_option("--budget-classical", budget_classical, "Work cap");
    classical->add_option("-o,--output", output, "Write an optimal deterministic strategy here");
    add_common(classical);

    auto* pauli = app.add_subcommand("search-pauli", "Search for a signed Pauli operator solution (p = 2)");
    pauli->add_option("system", system_path, "System file")->required()->check(CLI::ExistingFile);
    pauli->add_option("--budget-qubits", budget_qubits, "Largest qubit count");
    pauli->add_option("--budget-nodes", budget_nodes, "Node budget");
    pauli->add_option("-o,--output", output, "Write the operator solution here");
    pauli->add_option("--strategy", strategy_output, "Write the tensor strategy here");
    add_common(pauli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    omp_set_num_threads(common.threads);
    options.j_budget = budget_j;
    options.coset_limit = budget_cosets;
    options.pauli_qubits = budget_qubits;
    options.pauli_nodes = budget_nodes;
    options.classical_cap = budget_classical;
    options.max_regular_dimension = budget_dimension;
    options.tol_perfect = tol_perfect;
    options.tol_structural = tol_structural;

    try {
        if (*analyze) {
            if (budget_qubits > lsg::kMaxPauliQubits) {
                throw InputError("--budget-qubits is at most " + std::to_string(lsg::kMaxPauliQubits));
            }
            if (budget_j == 0) throw InputError("--budget-j must be positive");
            return cmd_analyze(system_path, options, common);
        }
        if (*check) return cmd_check_strategy(system_path, strategy_path, tol_perfect, tol_structural, common);
        if (*group_export) return cmd_group_export(system_path, output, common);
        if (*prove_j) {
            if (budget_j == 0) throw InputError("--budget-j must be positive");
            return cmd_group_prove_j(system_path, budget_j, output, common);
        }
        if (*enumerate) return cmd_group_enumerate(system_path, budget_cosets, common);
        if (*classical) return cmd_classical(system_path, budget_classical, output, common);
        if (*pauli) return cmd_search_pauli(system_path, budget_qubits, budget_nodes, output, strategy_output, common);
    } catch (const lsg::SystemError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const lsg::ShapeError& e) {
        std::cerr << "strategy does not fit the system: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInconsistent;
    }
    return 0;
}
