#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lsg/presentation.hpp"

namespace lsg {

using Permutation = std::vector<std::uint32_t>;

/// Completed enumeration over the trivial subgroup: the regular action of a
/// finite solution group. Index 0 is the identity element.
class CosetTable {
public:
    CosetTable(std::vector<Permutation> right_action, GeneratorId j_generator);

    std::size_t order() const { return right_.empty() ? 0 : right_.front().size(); }
    std::size_t generator_count() const { return right_.size(); }
    std::uint32_t identity() const { return 0; }
    GeneratorId j_generator() const { return j_; }

    /// h -> h * g
    const Permutation& right_action(GeneratorId g) const { return right_[g]; }
    /// h -> g * h
    const Permutation& left_action(GeneratorId g) const { return left_[g]; }

    /// Index reached from the identity along the given raw syllables.
    std::uint32_t element_of(const std::vector<Letter>& syllables) const;

private:
    std::vector<Permutation> right_;
    std::vector<Permutation> left_;
    GeneratorId j_;
};

struct Finite {
    CosetTable table;
};

struct OutOfBudget {
    std::size_t live_cosets = 0;
    std::size_t defined_cosets = 0;
};

using EnumerationResult = std::variant<Finite, OutOfBudget>;

/// Todd-Coxeter enumeration over the trivial subgroup, HLT strategy:
/// cosets are processed in index order; at each live coset every relator is
/// scanned and filled in presentation order, then any remaining undefined
/// entries are defined in column order (g_1, g_1^-1, ..., J, J^-1).
/// Coincidences are merged through a union-find keeping the smaller index,
/// with deductions propagated immediately. `limit` caps live cosets.
EnumerationResult coset_enumerate(const Presentation& pres, std::size_t limit);

struct JIndex {
    std::uint32_t index = 0;
    bool nontrivial = false;
};

JIndex j_index(const CosetTable& table);

/// Exhaustive post-checks. Returns an empty string when the table is a
/// valid regular action for `pres`, otherwise a description of the first failure.
std::string validate_coset_table(const CosetTable& table, const Presentation& pres);

}  // namespace lsg
