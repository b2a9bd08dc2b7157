#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsg/classical.hpp"
#include "lsg/constructions.hpp"
#include "lsg/j_search.hpp"
#include "lsg/linear_system.hpp"
#include "lsg/pauli.hpp"
#include "lsg/strategy.hpp"

namespace lsg {

struct AnalysisOptions {
    std::size_t j_budget = 100'000;
    std::size_t coset_limit = 100'000;
    std::size_t pauli_qubits = 3;
    std::uint64_t pauli_nodes = kDefaultPauliNodeBudget;
    std::uint64_t classical_cap = kDefaultClassicalCap;
    std::size_t max_regular_dimension = kDefaultMaxRegularDimension;
    double tol_perfect = Tolerances{}.perfect;
    double tol_structural = Tolerances{}.structural;
    /// Directory for exported artifacts; nothing is written when empty.
    std::string artifact_dir;
};

enum class FiniteDimVerdict { SolutionFound, NoneWithinBudget };

enum class CommutingVerdict { PerfectStrategyConstructed, JProvedTrivial, Undetermined };

std::string_view to_string(FiniteDimVerdict v);
std::string_view to_string(CommutingVerdict v);

struct AnalysisVerdict {
    // Classical stage.
    bool solvable = false;
    std::optional<Assignment> assignment;
    std::optional<Rational> classical_value;  ///< unset when the cap was exceeded
    std::uint64_t classical_work = 0;

    // Solution group.
    std::size_t generators = 0;
    std::size_t relators = 0;

    // J search.
    std::optional<JTrivialityCertificate> certificate;
    std::size_t j_nodes = 0;

    // Coset enumeration.
    std::optional<std::size_t> group_order;
    std::optional<bool> j_nontrivial;   ///< read off the completed table
    std::size_t live_cosets_at_limit = 0;
    std::optional<bool> regular_perfect;
    std::string regular_note;           ///< why the regular strategy was skipped

    // Pauli search (p = 2 only).
    std::optional<PauliSearchStatus> pauli_status;
    std::size_t pauli_qubits = 0;
    std::vector<std::string> pauli_labels;
    std::uint64_t pauli_nodes = 0;
    std::optional<bool> tensor_perfect;
    std::optional<double> tensor_value;

    FiniteDimVerdict finite_dim = FiniteDimVerdict::NoneWithinBudget;
    CommutingVerdict commuting = CommutingVerdict::Undetermined;
    /// How the commuting verdict was reached, e.g. "J-triviality certificate".
    std::string commuting_evidence;

    std::vector<std::string> artifacts;
    /// Contradictions between stages. Nonempty means a defect, never a verdict.
    std::vector<std::string> inconsistencies;
};

/// Runs every stage in order: classical solve and value, solution group,
/// J search, coset enumeration (plus the regular-representation strategy
/// when the group is finite with J nontrivial), Pauli search (plus the tensor
/// strategy). Budget exhaustion is recorded, never thrown.
AnalysisVerdict analyze(const LinearSystem& sys, const AnalysisOptions& options = {});

nlohmann::json verdict_to_json(const AnalysisVerdict& v);
std::string verdict_to_text(const AnalysisVerdict& v);

}  // namespace lsg
