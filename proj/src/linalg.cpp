#include "lsg/linalg.hpp"

#include <numbers>

namespace lsg {

Complex root_of_unity(std::int64_t k, Residue p) {
    const Residue r = mod_reduce(k, p);
    if (r == 0) return {1.0, 0.0};
    if (2 * r == p) return {-1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(p);
    return std::polar(1.0, angle);
}

Matrix matrix_power(const Matrix& m, std::size_t e) {
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    for (std::size_t i = 0; i < e; ++i) result = result * m;
    return result;
}

double unitarity_defect(const Matrix& u) {
    return residual_norm(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

double observable_defect(const Matrix& u, Residue p) {
    const double order = residual_norm(matrix_power(u, p) - Matrix::Identity(u.rows(), u.cols()));
    return std::max(unitarity_defect(u), order);
}

double commutator_norm(const Matrix& a, const Matrix& b) { return residual_norm(a * b - b * a); }

Matrix spectral_projector(const Matrix& u, Residue c, Residue p) {
    Matrix sum = Matrix::Zero(u.rows(), u.cols());
    Matrix power = Matrix::Identity(u.rows(), u.cols());
    for (Residue k = 0; k < p; ++k) {
        sum += root_of_unity(-static_cast<std::int64_t>(c) * k, p) * power;
        power = power * u;
    }
    return sum / static_cast<double>(p);
}

std::vector<Matrix> spectral_projectors(const Matrix& u, Residue p) {
    std::vector<Matrix> powers;
    powers.reserve(p);
    powers.push_back(Matrix::Identity(u.rows(), u.cols()));
    for (Residue k = 1; k < p; ++k) powers.push_back(powers.back() * u);

    std::vector<Matrix> out;
    out.reserve(p);
    for (Residue c = 0; c < p; ++c) {
        Matrix sum = Matrix::Zero(u.rows(), u.cols());
        for (Residue k = 0; k < p; ++k) {
            sum += root_of_unity(-static_cast<std::int64_t>(c) * k, p) * powers[k];
        }
        out.push_back(sum / static_cast<double>(p));
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace lsg
