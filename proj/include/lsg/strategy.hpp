#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsg/linalg.hpp"
#include "lsg/linear_system.hpp"

namespace lsg {

/// Run-time tolerances. Structural checks cover unitarity, order p,
/// commutation and relator images; perfection covers the state conditions.
struct Tolerances {
    double structural = 1e-10;
    double perfect = 1e-9;
};

/// Thrown when a strategy or operator solution does not have the shape the
/// system requires (missing operators, wrong dimensions).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrices A_1..A_n on C^d, one per variable.
struct OperatorSolution {
    Residue p = 2;
    std::size_t dimension = 0;
    std::vector<Matrix> operators;
};

struct OperatorSolutionReport {
    double observable = 0;   ///< max_i max(||A_i^* A_i - I||, ||A_i^p - I||)
    double commutation = 0;  ///< max over co-occurring pairs of ||[A_i, A_j]||
    std::vector<double> constraint;  ///< per equation ||prod A_k^{M[l][k]} - zeta^{b_l} I||
    double max_constraint = 0;
    bool passed = false;
};

/// Residuals of the three operator-solution conditions; passes iff all <= tol.
OperatorSolutionReport check_operator_solution(const OperatorSolution& sol, const LinearSystem& sys, double tol);

/// A commuting-operator strategy on C^d.
///
/// alice[l][k] is Alice's observable for the k-th variable of support(l)
/// (variables in increasing order); bob[j] is Bob's observable for x_j.
struct Strategy {
    Residue p = 2;
    std::size_t dimension = 0;
    Vector state;
    std::vector<std::vector<Matrix>> alice;
    std::vector<Matrix> bob;
};

struct StrategyReport {
    double state_norm = 0;      ///< | ||psi|| - 1 |
    double observable = 0;      ///< every operator unitary with U^p = I
    double alice_bob = 0;       ///< max ||[A_i^(l), B_j]||
    double local = 0;           ///< max ||[A_i^(l), A_j^(l)]||
    bool passed = false;
};

/// Throws ShapeError unless the strategy has one operator for every
/// (l, i in V_l) and every B_j, all d x d, with a length-d state.
void require_shape(const Strategy& st, const LinearSystem& sys);

/// Residuals of the well-formedness conditions; passes iff all <= tol.
StrategyReport check_strategy(const Strategy& st, const LinearSystem& sys, double tol);

struct PerfectionReport {
    /// ||A_i^(l) psi - B_i psi|| for each question pair, in question_pairs() order.
    std::vector<double> consistency;
    /// ||prod_{i in V_l} (A_i^(l))^{M[l][i]} psi - zeta^{b_l} psi|| per equation.
    std::vector<double> constraint;
    double max_consistency = 0;
    double max_constraint = 0;
    bool passed = false;
};

PerfectionReport is_perfect(const Strategy& st, const LinearSystem& sys, double tol);

/// The product prod_{k in V_l} ops(k)^{M[l][k]} in increasing variable order.
template <typename OperatorOf>
Matrix constraint_product(const LinearSystem& sys, std::size_t eq, std::size_t dim, OperatorOf&& op) {
    Matrix prod = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const auto& vars = sys.support(eq).variables;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        prod = prod * matrix_power(op(k, vars[k]), sys.coefficient(eq, vars[k]));
    }
    return prod;
}

}  // namespace lsg
