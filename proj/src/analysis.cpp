#include "lsg/analysis.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lsg/coset_table.hpp"
#include "lsg/game.hpp"
#include "lsg/presentation.hpp"
#include "lsg/strategy_io.hpp"

namespace lsg {

using nlohmann::json;

std::string_view to_string(FiniteDimVerdict v) {
    switch (v) {
        case FiniteDimVerdict::SolutionFound: return "solution found";
        case FiniteDimVerdict::NoneWithinBudget: return "none within budget";
    }
    return "?";
}

std::string_view to_string(CommutingVerdict v) {
    switch (v) {
        case CommutingVerdict::PerfectStrategyConstructed: return "perfect strategy constructed";
        case CommutingVerdict::JProvedTrivial: return "J proved trivial: no perfect commuting-operator strategy";
        case CommutingVerdict::Undetermined: return "undetermined within budgets";
    }
    return "?";
}

namespace {

class ArtifactWriter {
public:
    ArtifactWriter(const std::string& dir, std::vector<std::string>& paths) : dir_(dir), paths_(paths) {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }

    bool enabled() const { return !dir_.empty(); }

    void text(const std::string& name, const std::string& body) {
        if (!enabled()) return;
        const auto path = (std::filesystem::path(dir_) / name).string();
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << body;
        paths_.push_back(path);
    }

    void json_file(const std::string& name, const json& body) { text(name, body.dump(1) + "\n"); }

private:
    std::string dir_;
    std::vector<std::string>& paths_;
};

bool strategy_is_perfect(const Strategy& st, const LinearSystem& sys, const AnalysisOptions& o) {
    return check_strategy(st, sys, o.tol_structural).passed && is_perfect(st, sys, o.tol_perfect).passed;
}

void check_consistency(AnalysisVerdict& v, bool scalar_perfect) {
    auto flag = [&](bool bad, const char* what) {
        if (bad) v.inconsistencies.emplace_back(what);
    };
    const bool perfect_built = scalar_perfect || v.regular_perfect.value_or(false) || v.tensor_perfect.value_or(false);
    const bool j_trivial = v.certificate.has_value() || v.j_nontrivial == false;

    if (v.classical_value) {
        flag((*v.classical_value == Rational(1, 1)) != v.solvable,
             "classical value 1 disagrees with the Gaussian elimination verdict");
    }
    flag(v.certificate && v.j_nontrivial == true,
         "J-triviality certificate contradicts a coset table with J nontrivial");
    flag(j_trivial && v.solvable, "J is trivial but the system has a classical solution");
    flag(j_trivial && v.finite_dim == FiniteDimVerdict::SolutionFound,
         "J is trivial but a finite-dimensional operator solution was found");
    flag(j_trivial && perfect_built, "J is trivial but a perfect strategy was verified");
    flag(v.regular_perfect == false, "regular-representation strategy of a group with J nontrivial is not perfect");
    flag(v.pauli_status == PauliSearchStatus::Found && v.tensor_perfect == false,
         "tensor strategy built from a verified operator solution is not perfect");
}

}  // namespace

AnalysisVerdict analyze(const LinearSystem& sys, const AnalysisOptions& o) {
    AnalysisVerdict v;
    ArtifactWriter out(o.artifact_dir, v.artifacts);
    bool scalar_perfect = false;
    bool operator_solution_found = false;

    v.assignment = classical_solve(sys);
    v.solvable = v.assignment.has_value();
    if (v.assignment) {
        const Strategy st = to_strategy(from_assignment(*v.assignment, sys), sys);
        scalar_perfect = strategy_is_perfect(st, sys, o);
        operator_solution_found = check_operator_solution(scalar_solution(*v.assignment, sys), sys, o.tol_structural).passed;
    }
    v.classical_work = classical_work(sys);
    try {
        const auto best = classical_optimum(sys, o.classical_cap);
        v.classical_value = best.value;
        out.json_file("classical_strategy.json", strategy_to_json(to_strategy(best.strategy, sys), sys));
    } catch (const ClassicalCapExceeded&) {
    }

    const Presentation pres = build_solution_group(sys);
    v.generators = pres.generator_count();
    v.relators = pres.relators().size();
    out.text("presentation.txt", export_presentation(pres));

    const auto search = prove_j_trivial(pres, o.j_budget);
    if (const auto* proved = std::get_if<Proved>(&search)) {
        v.certificate = proved->certificate;
        v.j_nodes = proved->nodes;
        out.text("j_certificate.json", export_certificate(pres, proved->certificate));
    } else {
        v.j_nodes = std::get<Inconclusive>(search).nodes;
    }

    const auto enumeration = coset_enumerate(pres, o.coset_limit);
    if (const auto* finite = std::get_if<Finite>(&enumeration)) {
        const auto& table = finite->table;
        v.group_order = table.order();
        v.j_nontrivial = j_index(table).nontrivial;
        if (!*v.j_nontrivial) {
            v.regular_note = "J is trivial in the enumerated group";
        } else if (table.order() > o.max_regular_dimension) {
            v.regular_note = "group order " + std::to_string(table.order()) + " exceeds the dense-matrix cap " +
                             std::to_string(o.max_regular_dimension);
        } else {
            const Strategy st = regular_rep_strategy(table, pres, sys, o.max_regular_dimension);
            v.regular_perfect = strategy_is_perfect(st, sys, o);
            out.json_file("regular_strategy.json", strategy_to_json(st, sys));
            if (*v.regular_perfect) {
                try {
                    const auto restricted = restrict_to_operator_solution(st, sys, o.tol_perfect);
                    if (check_operator_solution(restricted.solution, sys, o.tol_perfect).passed) {
                        operator_solution_found = true;
                        out.json_file("restricted_operator_solution.json",
                                      operator_solution_to_json(restricted.solution, sys));
                    }
                } catch (const OrbitClosureError&) {
                    v.regular_note = "orbit closure of the regular strategy was not numerically invariant";
                }
            }
        }
    } else {
        v.live_cosets_at_limit = std::get<OutOfBudget>(enumeration).live_cosets;
    }

    if (sys.modulus() == 2) {
        const auto pauli = pauli_opsol_search(sys, o.pauli_qubits, o.pauli_nodes);
        v.pauli_status = pauli.status;
        v.pauli_nodes = pauli.nodes;
        if (pauli.solution) {
            v.pauli_qubits = pauli.qubits;
            v.pauli_labels = pauli.labels;
            operator_solution_found =
                operator_solution_found || check_operator_solution(*pauli.solution, sys, o.tol_structural).passed;
            const Strategy st = operator_solution_to_tensor_strategy(*pauli.solution, sys);
            v.tensor_perfect = strategy_is_perfect(st, sys, o);
            v.tensor_value = game_value(st, sys).value;
            out.json_file("operator_solution.json", operator_solution_to_json(*pauli.solution, sys));
            out.json_file("tensor_strategy.json", strategy_to_json(st, sys));
        }
    }

    v.finite_dim = operator_solution_found ? FiniteDimVerdict::SolutionFound : FiniteDimVerdict::NoneWithinBudget;

    if (scalar_perfect || v.regular_perfect.value_or(false) || v.tensor_perfect.value_or(false)) {
        v.commuting = CommutingVerdict::PerfectStrategyConstructed;
        v.commuting_evidence = v.tensor_perfect.value_or(false)   ? "tensor strategy from a Pauli operator solution"
                               : v.regular_perfect.value_or(false) ? "regular representation of the solution group"
                                                                   : "deterministic strategy from a classical solution";
    } else if (v.certificate) {
        v.commuting = CommutingVerdict::JProvedTrivial;
        v.commuting_evidence = "J-triviality certificate";
    } else if (v.j_nontrivial == false) {
        v.commuting = CommutingVerdict::JProvedTrivial;
        v.commuting_evidence = "complete coset table in which J is the identity";
    }

    check_consistency(v, scalar_perfect);
    if (out.enabled()) {
        const auto path = (std::filesystem::path(o.artifact_dir) / "verdict.json").string();
        v.artifacts.push_back(path);
        write_json_file(path, verdict_to_json(v));
    }
    return v;
}

json verdict_to_json(const AnalysisVerdict& v) {
    json j;
    json classical{{"solvable", v.solvable},
                   {"value", v.classical_value ? json(v.classical_value->str()) : json(nullptr)},
                   {"work", v.classical_work}};
    if (v.assignment) {
        json a = json::array();
        for (auto x : *v.assignment) a.push_back(x);
        classical["assignment"] = std::move(a);
    }
    j["classical"] = std::move(classical);

    j["group"] = {{"generators", v.generators},
                  {"relators", v.relators},
                  {"j_search", {{"proved", v.certificate.has_value()}, {"nodes", v.j_nodes}}},
                  {"order", v.group_order ? json(*v.group_order) : json(nullptr)},
                  {"j_nontrivial", v.j_nontrivial ? json(*v.j_nontrivial) : json(nullptr)},
                  {"live_cosets_at_limit", v.live_cosets_at_limit}};
    j["regular_strategy"] = {{"perfect", v.regular_perfect ? json(*v.regular_perfect) : json(nullptr)},
                             {"note", v.regular_note}};

    json pauli = nullptr;
    if (v.pauli_status) {
        static constexpr const char* names[] = {"found", "exhausted", "budget_exceeded"};
        pauli = {{"status", names[static_cast<int>(*v.pauli_status)]},
                 {"nodes", v.pauli_nodes},
                 {"qubits", v.pauli_qubits},
                 {"labels", v.pauli_labels},
                 {"tensor_perfect", v.tensor_perfect ? json(*v.tensor_perfect) : json(nullptr)},
                 {"tensor_value", v.tensor_value ? json(*v.tensor_value) : json(nullptr)}};
    }
    j["pauli"] = std::move(pauli);

    j["finite_dim"] = std::string(to_string(v.finite_dim));
    j["commuting_operator"] = std::string(to_string(v.commuting));
    j["commuting_evidence"] = v.commuting_evidence;
    j["artifacts"] = v.artifacts;
    j["inconsistencies"] = v.inconsistencies;
    return j;
}

std::string verdict_to_text(const AnalysisVerdict& v) {
    std::ostringstream os;
    os << "classical:          " << (v.solvable ? "solvable" : "inconsistent");
    if (v.classical_value) {
        os << ", value " << *v.classical_value;
    } else {
        os << ", value not computed (work " << v.classical_work << " over cap)";
    }
    os << "\n";
    os << "solution group:     " << v.generators << " generators, " << v.relators << " relators\n";
    os << "J search:           " << (v.certificate ? "proved J = e" : "inconclusive") << " after " << v.j_nodes
       << " products\n";
    os << "coset enumeration:  ";
    if (v.group_order) {
        os << "order " << *v.group_order << ", J " << (*v.j_nontrivial ? "nontrivial" : "trivial") << "\n";
    } else {
        os << "limit reached with " << v.live_cosets_at_limit << " live cosets\n";
    }
    if (v.regular_perfect) {
        os << "regular strategy:   " << (*v.regular_perfect ? "perfect" : "NOT perfect") << "\n";
    } else if (!v.regular_note.empty()) {
        os << "regular strategy:   skipped (" << v.regular_note << ")\n";
    }
    if (v.pauli_status) {
        os << "Pauli search:       ";
        switch (*v.pauli_status) {
            case PauliSearchStatus::Found:
                os << "found on " << v.pauli_qubits << " qubit(s):";
                for (const auto& l : v.pauli_labels) os << " " << l;
                os << "\n";
                os << "tensor strategy:    " << (v.tensor_perfect.value_or(false) ? "perfect" : "NOT perfect")
                   << ", value " << v.tensor_value.value_or(0.0) << "\n";
                break;
            case PauliSearchStatus::Exhausted: os << "no signed Pauli solution within the qubit bound\n"; break;
            case PauliSearchStatus::BudgetExceeded: os << "node budget exceeded\n"; break;
        }
    }
    os << "finite-dimensional: " << to_string(v.finite_dim) << "\n";
    os << "commuting-operator: " << to_string(v.commuting);
    if (!v.commuting_evidence.empty()) os << " (" << v.commuting_evidence << ")";
    os << "\n";
    for (const auto& a : v.artifacts) os << "artifact:           " << a << "\n";
    for (const auto& i : v.inconsistencies) os << "INCONSISTENT:       " << i << "\n";
    return os.str();
}

}  // namespace lsg
