// Strategies for property tests: random valid strategies and perturbations.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "lsg/linalg.hpp"
#include "lsg/strategy.hpp"

namespace corpus {

/// Random valid strategy on C^3 (x) C^3 with a random state; almost never perfect.
inline lsg::Strategy random_strategy(std::mt19937_64& rng, const lsg::LinearSystem& sys) {
    // Alice acts on the first factor, Bob on the second; each family is
    // diagonal in a random basis so it commutes locally.
    const auto p = sys.modulus();
    const Eigen::Index d = 3;
    std::normal_distribution<double> g;
    std::uniform_int_distribution<lsg::Residue> e(0, p - 1);
    auto random_basis = [&] {
        lsg::Matrix m(d, d);
        for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = {g(rng), g(rng)};
        return lsg::Matrix(Eigen::HouseholderQR<lsg::Matrix>(m).householderQ());
    };
    auto diagonal_observable = [&](const lsg::Matrix& basis) {
        lsg::Matrix diag = lsg::Matrix::Zero(d, d);
        for (Eigen::Index i = 0; i < d; ++i) diag(i, i) = lsg::root_of_unity(e(rng), p);
        return lsg::Matrix(basis * diag * basis.adjoint());
    };
    const lsg::Matrix id = lsg::Matrix::Identity(d, d);
    lsg::Strategy st;
    st.p = p;
    st.dimension = static_cast<std::size_t>(d * d);
    st.state.resize(d * d);
    for (Eigen::Index i = 0; i < st.state.size(); ++i) st.state(i) = {g(rng), g(rng)};
    st.state.normalize();
    for (std::size_t l = 0; l < sys.equations(); ++l) {
        const auto basis = random_basis();
        std::vector<lsg::Matrix> family;
        for (std::size_t k = 0; k < sys.support(l).variables.size(); ++k) family.push_back(lsg::kron(diagonal_observable(basis), id));
        st.alice.push_back(std::move(family));
    }
    for (std::size_t j = 0; j < sys.variables(); ++j) st.bob.push_back(lsg::kron(id, diagonal_observable(random_basis())));
    return st;
}

/// Rotates the state by angle theta towards a random orthogonal direction.
inline lsg::Strategy rotate_state(const lsg::Strategy& st, double theta, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    lsg::Vector phi(st.state.size());
    for (Eigen::Index i = 0; i < phi.size(); ++i) phi(i) = {g(rng), g(rng)};
    phi -= st.state.dot(phi) * st.state;
    phi.normalize();
    auto out = st;
    out.state = std::cos(theta) * st.state + std::sin(theta) * phi;
    return out;
}

/// Conjugates every Bob observable by exp(i theta H) for a random Hermitian
/// H of unit norm. Bob's operators stay order-p unitaries, but they no longer
/// commute with Alice's exactly.
inline lsg::Strategy rotate_bob(const lsg::Strategy& st, double theta, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    const auto d = static_cast<Eigen::Index>(st.dimension);
    lsg::Matrix h(d, d);
    for (Eigen::Index i = 0; i < h.size(); ++i) h.data()[i] = {g(rng), g(rng)};
    h = (h + h.adjoint()).eval();
    h /= h.norm();
    Eigen::SelfAdjointEigenSolver<lsg::Matrix> eig(h);
    lsg::Matrix phases = lsg::Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) phases(i, i) = std::polar(1.0, theta * eig.eigenvalues()(i));
    const lsg::Matrix v = eig.eigenvectors() * phases * eig.eigenvectors().adjoint();
    auto out = st;
    for (auto& b : out.bob) b = v * b * v.adjoint();
    return out;
}

}  // namespace corpus
