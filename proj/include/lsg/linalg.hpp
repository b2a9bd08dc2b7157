#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "lsg/modular.hpp"

namespace lsg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// zeta^k with zeta = exp(2 pi i / p); exact for k = 0 and for -1 when p = 2.
Complex root_of_unity(std::int64_t k, Residue p);

/// Frobenius norm; every matrix residual in the toolkit uses it.
inline double residual_norm(const Matrix& m) { return m.norm(); }

Matrix matrix_power(const Matrix& m, std::size_t e);

/// ||U^* U - I||, the unitarity defect.
double unitarity_defect(const Matrix& u);

/// max(unitarity defect, ||U^p - I||).
double observable_defect(const Matrix& u, Residue p);

double commutator_norm(const Matrix& a, const Matrix& b);

/// Spectral projector onto the zeta^c eigenspace of U with U^p = I:
/// (1/p) sum_k zeta^{-ck} U^k.
Matrix spectral_projector(const Matrix& u, Residue c, Residue p);

/// All p projectors, computed from one pass over the powers of U.
std::vector<Matrix> spectral_projectors(const Matrix& u, Residue p);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace lsg
