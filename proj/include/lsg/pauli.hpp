#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsg/linear_system.hpp"
#include "lsg/strategy.hpp"

namespace lsg {

/// Unsigned q-qubit Pauli word in symplectic form: qubit k carries
/// X if bit k of x is set, Z if bit k of z is set, Y = iXZ if both.
struct PauliWord {
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

/// True iff the words commute (symplectic product is even).
bool commutes(PauliWord a, PauliWord b);

/// a * b = i^phase * (a xor b); returns the phase exponent mod 4.
unsigned product_phase(PauliWord a, PauliWord b);

/// Dense 2^q x 2^q matrix; qubit 0 is the leftmost tensor factor.
Matrix pauli_matrix(PauliWord w, std::size_t qubits);

/// Label such as "XZ" (qubit 0 first), "II" for identity.
std::string pauli_label(PauliWord w, std::size_t qubits);

inline constexpr std::size_t kMaxPauliQubits = 6;
inline constexpr std::uint64_t kDefaultPauliNodeBudget = 20'000'000;

enum class PauliSearchStatus {
    Found,
    /// Every signed Pauli assignment up to the qubit bound was ruled out.
    /// This does not rule out operator solutions outside the Pauli class.
    Exhausted,
    /// The node budget ran out first; nothing is known about the rest.
    BudgetExceeded,
};

struct PauliSearchResult {
    PauliSearchStatus status = PauliSearchStatus::Exhausted;
    std::optional<OperatorSolution> solution;
    std::size_t qubits = 0;               ///< qubit count of the solution found
    std::vector<std::string> labels;      ///< signed labels per variable, e.g. "-XY"
    std::uint64_t nodes = 0;
};

/// Searches assignments of signed Pauli words on q = 0, 1, ..., `max_qubits`
/// qubits (smallest dimension first). Words are chosen variable by variable
/// in index order; a word must commute with the words already placed in each
/// shared equation, and the last variable of an equation is forced to make
/// the product proportional to I. Signs are then a linear system over Z_2,
/// solved exactly. Variable 1 is restricted to I or Z on qubit 0, which loses
/// nothing since Cliffords act transitively on nonidentity Pauli words.
///
/// Requires p = 2 and max_qubits <= kMaxPauliQubits (std::invalid_argument otherwise).
PauliSearchResult pauli_opsol_search(const LinearSystem& sys, std::size_t max_qubits,
                                     std::uint64_t node_budget = kDefaultPauliNodeBudget);

}  // namespace lsg
