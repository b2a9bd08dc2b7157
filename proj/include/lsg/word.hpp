#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsg/modular.hpp"

namespace lsg {

/// Generator ids: 0..n-1 are g_1..g_n, id n is J.
using GeneratorId = std::uint32_t;

/// One syllable g^e. In a reduced Word the exponent lies in 1..p-1;
/// raw syllable lists (relators as written) may carry any exponent.
struct Letter {
    GeneratorId gen = 0;
    std::uint32_t exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A reduced element of the free product of n+1 copies of Z_p.
///
/// No two adjacent letters share a generator and no exponent is 0 mod p.
/// Inverses are exponents p - e, so there is no separate inverse alphabet.
class Word {
public:
    Word() = default;

    /// Reduces `letters` modulo p (see free_reduce).
    Word(std::span<const Letter> letters, Residue p);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// Number of generator occurrences counting multiplicity (sum of exponents).
    std::size_t length() const;

    Word inverse(Residue p) const;
    Word concat(const Word& rhs, Residue p) const;
    /// u * this * u^-1
    Word conjugate_by(const Word& u, Residue p) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend Word free_reduce(std::span<const Letter> letters, Residue p);

private:
    std::vector<Letter> letters_;
};

/// Merge adjacent equal generators, reduce exponents mod p, drop zero
/// exponents; a single stack pass reaches the fixpoint.
Word free_reduce(std::span<const Letter> letters, Residue p);
Word free_reduce(const Word& w, Residue p);

/// Letters as text: `g3^2*J`, with `1` for the empty word. `n` is the
/// number of variable generators, so id n prints as J.
std::string format_word(std::span<const Letter> letters, std::size_t n);
inline std::string format_word(const Word& w, std::size_t n) { return format_word(w.letters(), n); }

/// Inverse of format_word; returns raw (unreduced) letters.
/// Throws std::invalid_argument on malformed text.
std::vector<Letter> parse_letters(std::string_view text, std::size_t n);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace lsg
