#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lsg/linear_system.hpp"
#include "lsg/strategy.hpp"

namespace lsg {

struct PairValue {
    std::size_t equation = 0;
    std::size_t variable = 0;
    double probability = 0;
};

/// Winning probabilities under the uniform distribution on question pairs
/// (s, t) with M[s][t] != 0.
struct GameReport {
    std::vector<PairValue> pairs;  ///< in question_pairs() order
    double value = 0;              ///< mean of pairs[i].probability
    PairValue worst;
    std::optional<Rational> exact; ///< set when computed in exact arithmetic
};

/// Born-rule evaluation. Alice's outcome on equation s is the joint
/// eigenvalue of her commuting family, via the product of spectral
/// projectors P_i(a_i); Bob's outcome on t comes from the projectors of B_t.
/// A pair is won when Alice's assignment satisfies equation s and agrees with
/// Bob on x_t. Pairs are evaluated in parallel; the mean is summed in pair order.
GameReport game_value(const Strategy& st, const LinearSystem& sys);

/// Single-threaded reference for game_value; identical arithmetic.
GameReport game_value_reference(const Strategy& st, const LinearSystem& sys);

/// A classical deterministic strategy: Alice answers a fixed assignment of
/// V_s for each equation, Bob a fixed value for each variable.
struct DeterministicStrategy {
    std::vector<std::vector<Residue>> alice;  ///< alice[s][k] for the k-th variable of V_s
    Assignment bob;
};

/// Exact value of a deterministic strategy: won pairs / all pairs.
Rational deterministic_value(const DeterministicStrategy& ds, const LinearSystem& sys);

/// Per-pair exact outcomes as a report (probabilities 0 or 1).
GameReport deterministic_report(const DeterministicStrategy& ds, const LinearSystem& sys);

/// The same strategy as 1-dimensional operators zeta^{answer}.
Strategy to_strategy(const DeterministicStrategy& ds, const LinearSystem& sys);

/// Recognizes a 1-dimensional strategy whose operators are exactly
/// roots of unity zeta^a, so its value can be computed exactly.
std::optional<DeterministicStrategy> as_deterministic(const Strategy& st, const LinearSystem& sys);

/// Deterministic strategy that plays a global assignment x.
DeterministicStrategy from_assignment(const Assignment& x, const LinearSystem& sys);

}  // namespace lsg
