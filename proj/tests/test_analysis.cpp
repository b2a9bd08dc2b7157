#include <doctest.h>

#include <filesystem>

#include "lsg/analysis.hpp"

namespace {

lsg::AnalysisVerdict run(const std::string& file, lsg::AnalysisOptions options = {}) {
    return lsg::analyze(lsg::load_system(std::string(LSG_DATA_DIR) + "/" + file), options);
}

}  // namespace

TEST_CASE("magic square") {
    const auto v = run("magic_square.lsys");
    CHECK_FALSE(v.solvable);
    REQUIRE(v.classical_value);
    CHECK(*v.classical_value == lsg::Rational(17, 18));
    CHECK_FALSE(v.certificate);
    CHECK(v.group_order == 32u);
    CHECK(v.j_nontrivial == true);
    CHECK(v.regular_perfect == true);
    CHECK(v.pauli_status == lsg::PauliSearchStatus::Found);
    CHECK(v.pauli_qubits == 2);
    CHECK(v.tensor_perfect == true);
    CHECK(v.finite_dim == lsg::FiniteDimVerdict::SolutionFound);
    CHECK(v.commuting == lsg::CommutingVerdict::PerfectStrategyConstructed);
    CHECK(v.inconsistencies.empty());
}

TEST_CASE("inconsistent pair") {
    const auto v = run("inconsistent_pair.lsys");
    CHECK_FALSE(v.solvable);
    CHECK(v.classical_value == lsg::Rational(1, 2));
    CHECK(v.certificate);
    CHECK(v.finite_dim == lsg::FiniteDimVerdict::NoneWithinBudget);
    CHECK(v.commuting == lsg::CommutingVerdict::JProvedTrivial);
    CHECK(lsg::verdict_to_text(v).find("no perfect commuting-operator strategy") != std::string::npos);
    CHECK(v.inconsistencies.empty());
}

TEST_CASE("single equations") {
    const auto z2 = run("single_z2.lsys");
    CHECK(z2.solvable);
    CHECK(z2.classical_value == lsg::Rational(1, 1));
    CHECK(z2.group_order == 4u);
    CHECK(z2.regular_perfect == true);
    CHECK(z2.commuting == lsg::CommutingVerdict::PerfectStrategyConstructed);
    CHECK(z2.inconsistencies.empty());

    const auto z3 = run("single_z3.lsys");
    CHECK(z3.group_order == 9u);
    CHECK(z3.regular_perfect == true);
    CHECK_FALSE(z3.pauli_status);
    CHECK(z3.inconsistencies.empty());
}

TEST_CASE("budgets are recorded, not fatal") {
    lsg::AnalysisOptions tight;
    tight.classical_cap = 10;
    tight.coset_limit = 5;
    tight.j_budget = 10;
    tight.pauli_nodes = 10;
    const auto v = run("magic_square.lsys", tight);
    CHECK_FALSE(v.classical_value);
    CHECK_FALSE(v.group_order);
    CHECK(v.live_cosets_at_limit <= 5);
    CHECK(v.pauli_status == lsg::PauliSearchStatus::BudgetExceeded);
    CHECK(v.commuting == lsg::CommutingVerdict::Undetermined);
    CHECK(v.finite_dim == lsg::FiniteDimVerdict::NoneWithinBudget);
    CHECK(v.inconsistencies.empty());
}

TEST_CASE("artifacts are written and listed") {
    const auto dir = std::filesystem::temp_directory_path() / "lsgame_analysis_test";
    std::filesystem::remove_all(dir);
    lsg::AnalysisOptions options;
    options.artifact_dir = dir.string();
    const auto v = run("inconsistent_pair.lsys", options);
    CHECK(std::filesystem::exists(dir / "j_certificate.json"));
    CHECK(std::filesystem::exists(dir / "presentation.txt"));
    CHECK(std::filesystem::exists(dir / "verdict.json"));
    for (const auto& a : v.artifacts) CHECK(std::filesystem::exists(a));
    const auto j = lsg::verdict_to_json(v);
    CHECK(j.at("commuting_operator").get<std::string>().find("J proved trivial") == 0);
    std::filesystem::remove_all(dir);
}
