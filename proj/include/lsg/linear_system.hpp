#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lsg/modular.hpp"

namespace lsg {

/// Categories of invalid input. Each maps to a distinct CLI diagnostic.
enum class SystemErrorKind {
    Syntax,
    NonPrimeModulus,
    EntryOutOfRange,
    VariableOutOfRange,
    EmptyEquation,
    OrphanVariable,
};

std::string_view to_string(SystemErrorKind kind);

class SystemError : public std::runtime_error {
public:
    SystemError(SystemErrorKind kind, const std::string& what, std::size_t line = 0,
                std::size_t column = 0);

    SystemErrorKind kind() const { return kind_; }
    /// 1-based source position, or 0 when the error is not tied to a location.
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    SystemErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

/// Variables of one equation: the indices k with a nonzero coefficient, ascending.
/// Indices are 0-based internally; the text format and reports are 1-based.
struct Support {
    std::size_t equation = 0;
    std::vector<std::size_t> variables;

    friend bool operator==(const Support&, const Support&) = default;
};

/// A value in Z_p for each variable.
using Assignment = std::vector<Residue>;

/// The system M x = b over Z_p.
///
/// Immutable once constructed; the constructor enforces every structural
/// invariant (prime modulus, residues in range, no empty equation, no
/// variable that appears in no equation) and throws SystemError otherwise.
class LinearSystem {
public:
    LinearSystem(Residue p, std::vector<std::vector<Residue>> matrix, std::vector<Residue> rhs);

    Residue modulus() const { return p_; }
    std::size_t equations() const { return matrix_.size(); }
    std::size_t variables() const { return n_; }
    Residue coefficient(std::size_t eq, std::size_t var) const { return matrix_[eq][var]; }
    Residue rhs(std::size_t eq) const { return rhs_[eq]; }
    const std::vector<std::vector<Residue>>& matrix() const { return matrix_; }
    const std::vector<Residue>& rhs() const { return rhs_; }

    /// Support of equation `eq` (0-based). Throws std::out_of_range.
    const Support& support(std::size_t eq) const;
    const std::vector<Support>& supports() const { return supports_; }

    /// Valid game questions: pairs (s, t) with M[s][t] != 0, in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> question_pairs() const;

    bool satisfies(const Assignment& x) const;
    bool equation_satisfied(std::size_t eq, const Assignment& x) const;

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

private:
    Residue p_;
    std::size_t n_;
    std::vector<std::vector<Residue>> matrix_;
    std::vector<Residue> rhs_;
    std::vector<Support> supports_;
};

/// Support of equation ell, 1-based as in the text format.
Support support(const LinearSystem& sys, std::size_t ell);

LinearSystem parse_system(std::istream& in);
LinearSystem parse_system(std::string_view text);
LinearSystem load_system(const std::string& path);

/// Canonical text form: header lines, then one line per equation with
/// coefficients in increasing variable order and zero terms omitted.
std::string serialize(const LinearSystem& sys);

/// 64-bit FNV-1a of the canonical form, as 16 hex digits.
std::string system_hash(const LinearSystem& sys);

/// Exact Gauss-Jordan elimination over Z_p. Returns a solution, or nullopt
/// if the system is inconsistent.
std::optional<Assignment> classical_solve(const LinearSystem& sys);

/// Standard Mermin-Peres magic square: x1..x9 row-major on a 3x3 grid, rows
/// sum to 0, columns sum to 0, 0, 1 over Z_2.
LinearSystem magic_square();

}  // namespace lsg
