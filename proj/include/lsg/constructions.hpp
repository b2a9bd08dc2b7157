#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lsg/coset_table.hpp"
#include "lsg/linear_system.hpp"
#include "lsg/presentation.hpp"
#include "lsg/strategy.hpp"

namespace lsg {

/// 1x1 solution A_i = zeta^{x_i} from a classical assignment.
OperatorSolution scalar_solution(const Assignment& x, const LinearSystem& sys);

/// Strategy on C^d (x) C^d with the maximally entangled state
/// (1/sqrt d) sum_k |k>|k>, Alice A_i (x) I and Bob I (x) A_j^T.
/// The transpose (not the adjoint) makes (A (x) I)|phi> = (I (x) A^T)|phi>.
Strategy operator_solution_to_tensor_strategy(const OperatorSolution& sol, const LinearSystem& sys);

class TrivialJError : public std::invalid_argument {
public:
    TrivialJError();
};

inline constexpr std::size_t kDefaultMaxRegularDimension = 512;

/// Left/right regular representation of a finite solution group: Alice's
/// A_i^(l) = L_{g_i}, Bob's B_j = R_{g_j}, and the state
/// (1/sqrt p) sum_k zeta^{-k} |J^k>, which is (|e> - |J>)/sqrt 2 for p = 2.
/// Throws TrivialJError when J is the identity in the table, and
/// std::length_error when the group order exceeds `max_dimension`.
Strategy regular_rep_strategy(const CosetTable& table, const Presentation& pres, const LinearSystem& sys,
                              std::size_t max_dimension = kDefaultMaxRegularDimension);

class OrbitClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RestrictedSolution {
    OperatorSolution solution;
    /// Orthonormal basis of H_0 (columns), in the strategy's space.
    Matrix basis;
    /// max over i and l, l' containing i of ||(A_i^(l) - A_i^(l')) Q||.
    double well_definedness = 0;
    /// max over Alice operators of ||(I - Q Q^*) A Q||.
    double invariance = 0;
};

/// Compresses a perfect strategy to H_0, the span of the orbit of psi under
/// the algebra of Alice's operators. The orbit is grown breadth-first with
/// twice-iterated Gram-Schmidt; a vector joins the basis when its residual
/// norm is at least `rank_threshold`. Q_i uses the first equation containing i.
///
/// Throws std::invalid_argument if the strategy is not perfect at `tol`,
/// OrbitClosureError if the basis is not numerically invariant.
RestrictedSolution restrict_to_operator_solution(const Strategy& st, const LinearSystem& sys, double tol,
                                                 double rank_threshold = 1e-8);

struct RepresentationReport {
    std::vector<double> relator_residuals;  ///< ||image(r) - I|| per relator
    double max_residual = 0;
    bool passed = false;
};

/// Evaluates every relator under g_i -> A_i, J -> zeta I (J -> -I for p = 2).
RepresentationReport solution_to_representation_check(const OperatorSolution& sol, const Presentation& pres,
                                                       double tol);

}  // namespace lsg
