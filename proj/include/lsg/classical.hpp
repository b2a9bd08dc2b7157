#pragma once

#include <cstdint>
#include <stdexcept>

#include "lsg/game.hpp"
#include "lsg/linear_system.hpp"

namespace lsg {

class ClassicalCapExceeded : public std::runtime_error {
public:
    ClassicalCapExceeded(std::uint64_t work, std::uint64_t cap);
    std::uint64_t work() const { return work_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t work_;
    std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultClassicalCap = std::uint64_t{1} << 22;

struct ClassicalOptimum {
    Rational value;
    DeterministicStrategy strategy;
};

/// Enumeration work for classical_value: p^n Bob tables, each scored against
/// every satisfying row of every equation, p^n * sum_s p^{|V_s|-1}.
/// Saturates at UINT64_MAX.
std::uint64_t classical_work(const LinearSystem& sys);

/// Optimal deterministic strategy under the uniform pair distribution.
///
/// For a fixed Bob table each equation independently takes the satisfying
/// assignment that agrees with Bob on the most variables, so the optimum is
/// an exact maximum over Bob tables. Ties go to the smallest Bob table in
/// little-endian order. Parallel over Bob tables; throws ClassicalCapExceeded
/// when classical_work exceeds `cap`.
ClassicalOptimum classical_optimum(const LinearSystem& sys, std::uint64_t cap = kDefaultClassicalCap);

/// Single-threaded reference for classical_optimum.
ClassicalOptimum classical_optimum_reference(const LinearSystem& sys, std::uint64_t cap = kDefaultClassicalCap);

inline Rational classical_value(const LinearSystem& sys, std::uint64_t cap = kDefaultClassicalCap) {
    return classical_optimum(sys, cap).value;
}

}  // namespace lsg
