// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lsg/analysis.hpp"
#include "lsg/classical.hpp"
#include "lsg/constructions.hpp"
#include "lsg/coset_table.hpp"
#include "lsg/game.hpp"
#include "lsg/j_search.hpp"
#include "lsg/pauli.hpp"
#include "lsg/presentation.hpp"
#include "lsg/strategy_io.hpp"
#include "oracles.hpp"
#include "strategy_corpus.hpp"

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

lsg::LinearSystem bundled(const std::string& name) { return lsg::load_system(std::string(LSG_DATA_DIR) + "/" + name); }

std::optional<lsg::CosetTable> finite_table(const lsg::Presentation& pres, std::size_t limit) {
    auto r = lsg::coset_enumerate(pres, limit);
    if (auto* f = std::get_if<lsg::Finite>(&r)) return std::move(f->table);
    return std::nullopt;
}

Outcome magic_square_classical() {
    const auto ms = bundled("magic_square.lsys");
    const auto start = std::chrono::steady_clock::now();
    const auto value = lsg::classical_value(ms);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto ref = oracle::classical_value(ms);
    const bool ok = value == lsg::Rational(17, 18) && lsg::Rational(ref.won, ref.total) == value && seconds < 60;
    std::ostringstream os;
    os << "value " << value << ", brute force " << ref.won << "/" << ref.total << ", " << seconds << " s";
    return {ok, os.str()};
}

Outcome magic_square_finite_dimensional() {
    const auto ms = bundled("magic_square.lsys");
    const auto found = lsg::pauli_opsol_search(ms, 2);
    if (found.status != lsg::PauliSearchStatus::Found) return {false, "no Pauli solution on 2 qubits"};
    const auto report = lsg::check_operator_solution(*found.solution, ms, 1e-12);
    const auto st = lsg::operator_solution_to_tensor_strategy(*found.solution, ms);
    const auto game = lsg::game_value(st, ms);
    double worst = 0;
    for (const auto& pv : game.pairs) worst = std::max(worst, std::abs(1.0 - pv.probability));
    const auto perfect = lsg::is_perfect(st, ms, 1e-9);
    const bool ok = report.passed && game.pairs.size() == 18 && worst <= 1e-9 && perfect.passed &&
                    lsg::check_strategy(st, ms, 1e-10).passed;
    std::ostringstream os;
    os << found.qubits << " qubits, operator-solution residual " << std::max(report.max_constraint, report.commutation)
       << ", max |1 - p| over " << game.pairs.size() << " pairs " << worst << ", is_perfect "
       << (perfect.passed ? "pass" : "fail");
    return {ok, os.str()};
}

Outcome no_perfect_strategy_certificate() {
    const auto sys = bundled("inconsistent_pair.lsys");
    const auto pres = lsg::build_solution_group(sys);
    const auto result = lsg::prove_j_trivial(pres, 1000);
    const auto* proved = std::get_if<lsg::Proved>(&result);
    if (!proved) return {false, "J search inconclusive at budget 1000"};
    const auto k = lsg::replay_certificate(pres, proved->certificate);
    const auto verdict = lsg::analyze(sys);
    const auto text = lsg::verdict_to_text(verdict);
    const bool reported = verdict.commuting == lsg::CommutingVerdict::JProvedTrivial &&
                          text.find("no perfect commuting-operator strategy") != std::string::npos;
    const bool ok = k && *k != 0 && reported && verdict.inconsistencies.empty();
    std::ostringstream os;
    os << "proved after " << proved->nodes << " products, " << proved->certificate.records.size()
       << " factors, replays to J^" << (k ? std::to_string(*k) : "?") << "; analyze: " << lsg::to_string(verdict.commuting);
    return {ok, os.str()};
}

Outcome regular_representation_cycle() {
    const auto sys = bundled("single_z2.lsys");
    const auto pres = lsg::build_solution_group(sys);
    const auto table = finite_table(pres, 100000);
    if (!table) return {false, "enumeration did not complete"};
    const bool j_nontrivial = lsg::j_index(*table).nontrivial;
    if (table->order() != 4 || !j_nontrivial) return {false, "order " + std::to_string(table->order())};
    const auto st = lsg::regular_rep_strategy(*table, pres, sys);
    const auto perfect = lsg::is_perfect(st, sys, 1e-12);
    const auto structure = lsg::check_strategy(st, sys, 1e-12);
    const auto restricted = lsg::restrict_to_operator_solution(st, sys, 1e-12);
    const auto def11 = lsg::check_operator_solution(restricted.solution, sys, 1e-12);
    const auto rep = lsg::solution_to_representation_check(restricted.solution, pres, 1e-12);
    const bool ok = perfect.passed && structure.passed && def11.passed && rep.passed &&
                    rep.relator_residuals.size() == pres.relators().size();
    std::ostringstream os;
    os << "order 4, J nontrivial; perfection residual " << std::max(perfect.max_consistency, perfect.max_constraint)
       << "; H_0 dimension " << restricted.solution.dimension << ", operator-solution residual " << def11.max_constraint
       << "; max relator residual " << rep.max_residual;
    return {ok, os.str()};
}

Outcome z3_generalization() {
    const auto sys = bundled("single_z3.lsys");
    const auto pres = lsg::build_solution_group(sys);
    const auto table = finite_table(pres, 100000);
    if (!table) return {false, "enumeration did not complete"};
    if (table->order() != 9) return {false, "order " + std::to_string(table->order())};
    const auto st = lsg::regular_rep_strategy(*table, pres, sys);
    const auto perfect = lsg::is_perfect(st, sys, 1e-10);
    const bool ok = perfect.passed && lsg::check_strategy(st, sys, 1e-10).passed;
    std::ostringstream os;
    os << "order 9; perfection residual " << std::max(perfect.max_consistency, perfect.max_constraint);
    return {ok, os.str()};
}

Outcome soundness_suite() {
    std::mt19937_64 rng(2026);
    int systems = 0, solvable = 0, proved = 0, violations = 0;
    for (int trial = 0; trial < 160; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 6;
        const std::size_t m = 1 + static_cast<std::size_t>(trial / 6) % 6;
        const auto sys = oracle::random_system(rng, 2, n, m);
        ++systems;
        const bool is_solvable = lsg::classical_solve(sys).has_value();
        solvable += is_solvable;
        const auto pres = lsg::build_solution_group(sys);
        const bool is_proved = std::holds_alternative<lsg::Proved>(lsg::prove_j_trivial(pres, 20000));
        if (is_solvable && is_proved) ++violations;
        if (!is_proved) continue;
        ++proved;
        for (std::size_t q = 0; q <= 3; ++q) {
            if (lsg::pauli_opsol_search(sys, q).status == lsg::PauliSearchStatus::Found) ++violations;
        }
        if (!(lsg::classical_value(sys) < lsg::Rational(1, 1))) ++violations;
    }
    std::ostringstream os;
    os << systems << " systems, " << solvable << " solvable, " << proved << " certified J = e, " << violations
       << " violations";
    return {systems >= 100 && violations == 0 && proved > 0, os.str()};
}

Outcome equivalence_suite() {
    const double tol = 1e-6;
    const double eps = 1e-3;
    std::mt19937_64 rng(7);

    std::vector<std::pair<std::string, std::pair<lsg::LinearSystem, lsg::Strategy>>> corpus;
    const auto ms = bundled("magic_square.lsys");
    const auto pauli = lsg::pauli_opsol_search(ms, 2);
    corpus.push_back({"magic square tensor", {ms, lsg::operator_solution_to_tensor_strategy(*pauli.solution, ms)}});
    for (const char* name : {"single_z2.lsys", "single_z3.lsys", "magic_square.lsys"}) {
        const auto sys = bundled(name);
        const auto pres = lsg::build_solution_group(sys);
        const auto table = finite_table(pres, 100000);
        corpus.push_back({std::string("regular ") + name, {sys, lsg::regular_rep_strategy(*table, pres, sys)}});
    }
    for (int i = 0; i < 6; ++i) {
        const auto sys = oracle::random_system(rng, i % 2 ? 3 : 2, 3, 2);
        if (const auto x = lsg::classical_solve(sys)) {
            corpus.push_back({"deterministic", {sys, lsg::to_strategy(lsg::from_assignment(*x, sys), sys)}});
        }
    }
    const std::size_t perfect_count = corpus.size();
    for (std::size_t i = 0; i < perfect_count; ++i) {
        const auto& [sys, st] = corpus[i].second;
        if (st.dimension == 1) continue;
        corpus.push_back({corpus[i].first + " / state rotated", {sys, corpus::rotate_state(st, eps, rng)}});
        corpus.push_back({corpus[i].first + " / Bob rotated", {sys, corpus::rotate_bob(st, eps, rng)}});
    }
    for (int i = 0; i < 8; ++i) {
        const auto sys = oracle::random_system(rng, i % 2 ? 3 : 2, 3, 3);
        corpus.push_back({"random", {sys, corpus::random_strategy(rng, sys)}});
    }

    int agree = 0, counterexamples = 0;
    double worst_ratio = 0;
    std::ostringstream notes;
    for (const auto& [label, entry] : corpus) {
        const auto& [sys, st] = entry;
        const double deficit = 1.0 - lsg::game_value(st, sys).value;
        const bool value_one = std::abs(deficit) <= tol;
        const auto perfect = lsg::is_perfect(st, sys, tol);
        if (value_one == perfect.passed) {
            ++agree;
        } else {
            ++counterexamples;
            worst_ratio = std::max(worst_ratio, deficit / (eps * eps));
            notes << "\n    counterexample: " << label << ": 1 - value = " << deficit << ", max residual "
                  << std::max(perfect.max_consistency, perfect.max_constraint);
        }
    }
    std::ostringstream os;
    os << corpus.size() << " strategies (" << perfect_count << " perfect, perturbation 1e-3), " << agree
       << " agree, " << counterexamples << " counterexamples" << notes.str();
    if (counterexamples > 0) {
        os << "\n    every counterexample has 1 - value <= " << worst_ratio
           << " eps^2 while its residual is of order eps: the deficit is quadratic in the perturbation";
    }
    return {counterexamples == 0, os.str()};
}

Outcome parser_and_formats() {
    int checks = 0, failures = 0;
    auto expect = [&](bool ok) {
        ++checks;
        failures += !ok;
    };
    for (const char* name : {"magic_square.lsys", "inconsistent_pair.lsys", "single_z2.lsys", "single_z3.lsys"}) {
        const auto sys = bundled(name);
        const auto text = lsg::serialize(sys);
        const auto again = lsg::parse_system(text);
        expect(again == sys);
        expect(lsg::serialize(again) == text);
        const auto pres = lsg::build_solution_group(sys);
        expect(lsg::export_presentation(lsg::parse_presentation(lsg::export_presentation(pres))) ==
               lsg::export_presentation(pres));
    }
    const auto ms = bundled("magic_square.lsys");
    for (const char* name : {"magic_square_perfect.json", "magic_square_classical.json"}) {
        const auto j = lsg::read_json_file(std::string(LSG_DATA_DIR) + "/" + name);
        expect(lsg::strategy_to_json(lsg::strategy_from_json(j, ms), ms) == j);
    }
    {
        const auto pair = bundled("inconsistent_pair.lsys");
        const auto pres = lsg::build_solution_group(pair);
        const auto cert = std::get<lsg::Proved>(lsg::prove_j_trivial(pres, 1000)).certificate;
        expect(lsg::parse_certificate(pres, lsg::export_certificate(pres, cert)) == cert);
    }

    const std::vector<std::pair<std::string, lsg::SystemErrorKind>> malformed{
        {"p 2\nvars 1\nx1 = \n", lsg::SystemErrorKind::Syntax},
        {"p 2\nvars 2\nx1 + x1 + x2 = 0\n", lsg::SystemErrorKind::Syntax},
        {"p 6\nvars 1\nx1 = 0\n", lsg::SystemErrorKind::NonPrimeModulus},
        {"p 3\nvars 1\n4 x1 = 0\n", lsg::SystemErrorKind::EntryOutOfRange},
        {"p 3\nvars 1\nx1 = 3\n", lsg::SystemErrorKind::EntryOutOfRange},
        {"p 3\nvars 1\nx2 = 0\n", lsg::SystemErrorKind::VariableOutOfRange},
        {"p 3\nvars 1\n0 x1 = 0\n", lsg::SystemErrorKind::EmptyEquation},
        {"p 3\nvars 2\nx2 = 0\n", lsg::SystemErrorKind::OrphanVariable},
    };
    for (const auto& [text, kind] : malformed) {
        try {
            (void)lsg::parse_system(text);
            expect(false);
        } catch (const lsg::SystemError& e) {
            expect(e.kind() == kind);
        }
    }
    try {
        auto j = lsg::read_json_file(std::string(LSG_DATA_DIR) + "/magic_square_perfect.json");
        (void)lsg::strategy_from_json(j, bundled("single_z2.lsys"));
        expect(false);
    } catch (const lsg::ShapeError&) {
        expect(true);
    }
    std::ostringstream os;
    os << checks << " checks, " << failures << " failures";
    return {failures == 0, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"magic square classical value is exactly 17/18", magic_square_classical},
        {"magic square 2-qubit operator solution gives a perfect strategy", magic_square_finite_dimensional},
        {"inconsistent pair: J-triviality certificate, no perfect strategy", no_perfect_strategy_certificate},
        {"x1 x2 = -1: order-4 group, regular strategy, restriction, representation", regular_representation_cycle},
        {"x1 x2 = zeta over Z_3: order 9, perfect weighted-state strategy", z3_generalization},
        {"soundness over random Z_2 systems", soundness_suite},
        {"value 1 within 1e-6 exactly when perfect at 1e-6", equivalence_suite},
        {"parser and file formats", parser_and_formats},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failed += !out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << out.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
