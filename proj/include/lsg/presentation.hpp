#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lsg/linear_system.hpp"
#include "lsg/word.hpp"

namespace lsg {

enum class RelatorKind {
    Order,        ///< g_i^p or J^p
    JCommutator,  ///< [g_i, J]
    Local,        ///< [g_i, g_j] for i, j sharing an equation
    Constraint,   ///< prod_k g_k^{M[l][k]} * J^{-b_l}
};

std::string_view to_string(RelatorKind kind);

/// A defining relation as written, before reduction.
///
/// Order relators have one syllable with exponent p; they reduce to the
/// empty Word because Word arithmetic already works modulo p. Every other
/// relator is stored as a nonempty reduced syllable list.
struct Relator {
    RelatorKind kind;
    std::vector<Letter> syllables;
    /// Equation index for Constraint relators, otherwise unused.
    std::size_t equation = 0;
};

/// The solution group: generators g_1..g_n and J, one relator list.
class Presentation {
public:
    Presentation(Residue p, std::size_t variable_count, std::vector<Relator> relators);

    Residue modulus() const { return p_; }
    /// n; generator ids are 0..n-1 for g_i and n for J.
    std::size_t variable_count() const { return n_; }
    std::size_t generator_count() const { return n_ + 1; }
    GeneratorId j_generator() const { return static_cast<GeneratorId>(n_); }
    const std::vector<Relator>& relators() const { return relators_; }

    /// The reduced word of relator i (empty for order relators).
    Word relator_word(std::size_t i) const { return free_reduce(relators_[i].syllables, p_); }

    std::size_t count(RelatorKind kind) const;

private:
    Residue p_;
    std::size_t n_;
    std::vector<Relator> relators_;
};

/// Relators in a fixed order: order relators (g_1..g_n, J), J-commutators,
/// local commutators for co-occurring pairs i < j in lexicographic order,
/// then one constraint relator per equation with variables in increasing order.
Presentation build_solution_group(const LinearSystem& sys);

/// Text form for cross-checking in external algebra systems:
///
///     p 2
///     generators g1 g2 J
///     g1^2            # order
///     g1*J*g1*J       # j-commutator
///
/// One relator per line; inverses appear as exponent p-1. The trailing
/// comment carries the relator kind and is optional on input.
std::string export_presentation(const Presentation& pres);
Presentation parse_presentation(std::string_view text);

}  // namespace lsg
