#include "lsg/constructions.hpp"

#include <cmath>
#include <string>

namespace lsg {

OperatorSolution scalar_solution(const Assignment& x, const LinearSystem& sys) {
    OperatorSolution sol{sys.modulus(), 1, {}};
    for (std::size_t i = 0; i < sys.variables(); ++i) {
        Matrix m(1, 1);
        m(0, 0) = root_of_unity(x.at(i), sys.modulus());
        sol.operators.push_back(std::move(m));
    }
    return sol;
}

Strategy operator_solution_to_tensor_strategy(const OperatorSolution& sol, const LinearSystem& sys) {
    if (sol.operators.size() != sys.variables()) throw ShapeError("operator solution does not match the system");
    const auto d = static_cast<Eigen::Index>(sol.dimension);
    const Matrix id = Matrix::Identity(d, d);

    Strategy st;
    st.p = sol.p;
    st.dimension = sol.dimension * sol.dimension;
    st.state = Vector::Zero(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(sol.dimension));
    for (Eigen::Index k = 0; k < d; ++k) st.state(k * d + k) = amp;

    std::vector<Matrix> alice_ops;
    for (const auto& a : sol.operators) alice_ops.push_back(kron(a, id));
    for (const auto& s : sys.supports()) {
        std::vector<Matrix> family;
        for (auto k : s.variables) family.push_back(alice_ops[k]);
        st.alice.push_back(std::move(family));
    }
    for (const auto& a : sol.operators) st.bob.push_back(kron(id, a.transpose()));
    return st;
}

TrivialJError::TrivialJError()
    : std::invalid_argument(
          "J is the identity in the solution group, so no perfect commuting-operator strategy exists") {}

namespace {

Matrix permutation_matrix(const Permutation& perm) {
    const auto n = static_cast<Eigen::Index>(perm.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index h = 0; h < n; ++h) m(perm[static_cast<std::size_t>(h)], h) = 1.0;
    return m;
}

}  // namespace

Strategy regular_rep_strategy(const CosetTable& table, const Presentation& pres, const LinearSystem& sys,
                              std::size_t max_dimension) {
    if (!j_index(table).nontrivial) throw TrivialJError();
    if (table.generator_count() != pres.generator_count() || pres.variable_count() != sys.variables()) {
        throw ShapeError("coset table, presentation and system disagree on the generators");
    }
    const std::size_t n = table.order();
    if (n > max_dimension) {
        throw std::length_error("group order " + std::to_string(n) + " exceeds the dense-matrix cap " +
                                std::to_string(max_dimension));
    }
    const Residue p = pres.modulus();

    Strategy st;
    st.p = p;
    st.dimension = n;
    st.state = Vector::Zero(static_cast<Eigen::Index>(n));
    const double amp = 1.0 / std::sqrt(static_cast<double>(p));
    std::uint32_t j_power = table.identity();
    for (Residue k = 0; k < p; ++k) {
        st.state(j_power) = amp * root_of_unity(-static_cast<std::int64_t>(k), p);
        j_power = table.right_action(table.j_generator())[j_power];
    }

    std::vector<Matrix> left;
    for (std::size_t i = 0; i < sys.variables(); ++i) {
        left.push_back(permutation_matrix(table.left_action(static_cast<GeneratorId>(i))));
        st.bob.push_back(permutation_matrix(table.right_action(static_cast<GeneratorId>(i))));
    }
    for (const auto& s : sys.supports()) {
        std::vector<Matrix> family;
        for (auto k : s.variables) family.push_back(left[k]);
        st.alice.push_back(std::move(family));
    }
    return st;
}

RestrictedSolution restrict_to_operator_solution(const Strategy& st, const LinearSystem& sys, double tol,
                                                 double rank_threshold) {
    const auto perfection = is_perfect(st, sys, tol);
    if (!perfection.passed) {
        throw std::invalid_argument("restrict_to_operator_solution: strategy is not perfect at the given tolerance");
    }
    const auto d = static_cast<Eigen::Index>(st.dimension);

    std::vector<const Matrix*> ops;
    for (const auto& family : st.alice) {
        for (const auto& a : family) ops.push_back(&a);
    }

    std::vector<Vector> basis;
    auto try_add = [&](Vector v) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) v -= q * q.dot(v);
        }
        const double r = v.norm();
        if (r < rank_threshold) return;
        basis.push_back(v / r);
    };
    try_add(st.state);
    for (std::size_t head = 0; head < basis.size(); ++head) {
        if (basis.size() > static_cast<std::size_t>(d)) {
            throw OrbitClosureError("orbit basis exceeded the ambient dimension; rank did not plateau");
        }
        for (const Matrix* a : ops) {
            const Vector w = (*a) * basis[head];
            try_add(w);
        }
    }

    Matrix q(d, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) q.col(static_cast<Eigen::Index>(k)) = basis[k];

    RestrictedSolution out;
    out.basis = q;
    const Matrix projector = Matrix::Identity(d, d) - q * q.adjoint();
    for (const Matrix* a : ops) out.invariance = std::max(out.invariance, residual_norm(projector * (*a) * q));
    if (out.invariance > 1e-6) {
        throw OrbitClosureError("orbit span is not invariant under Alice's operators (residual " +
                                std::to_string(out.invariance) + ")");
    }

    out.solution.p = st.p;
    out.solution.dimension = basis.size();
    out.solution.operators.resize(sys.variables());
    std::vector<bool> assigned(sys.variables(), false);
    for (std::size_t l = 0; l < sys.equations(); ++l) {
        const auto& vars = sys.support(l).variables;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            const auto i = vars[k];
            if (!assigned[i]) {
                out.solution.operators[i] = q.adjoint() * st.alice[l][k] * q;
                assigned[i] = true;
            }
        }
    }
    // Compare every A_i^(l) on H_0 with the first one chosen.
    std::vector<const Matrix*> first(sys.variables(), nullptr);
    for (std::size_t l = 0; l < sys.equations(); ++l) {
        const auto& vars = sys.support(l).variables;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            const auto i = vars[k];
            if (first[i] == nullptr) {
                first[i] = &st.alice[l][k];
            } else {
                out.well_definedness = std::max(out.well_definedness, residual_norm((*first[i] - st.alice[l][k]) * q));
            }
        }
    }
    return out;
}

RepresentationReport solution_to_representation_check(const OperatorSolution& sol, const Presentation& pres,
                                                       double tol) {
    if (sol.operators.size() != pres.variable_count()) {
        throw ShapeError("operator solution does not match the presentation's generators");
    }
    const auto d = static_cast<Eigen::Index>(sol.dimension);
    const Matrix id = Matrix::Identity(d, d);
    const Matrix j_image = root_of_unity(1, pres.modulus()) * id;

    RepresentationReport report;
    for (const auto& r : pres.relators()) {
        Matrix image = id;
        for (const auto& l : r.syllables) {
            const Matrix& g = l.gen == pres.j_generator() ? j_image : sol.operators[l.gen];
            for (std::uint32_t e = 0; e < l.exp; ++e) image = image * g;
        }
        const double res = residual_norm(image - id);
        report.relator_residuals.push_back(res);
        report.max_residual = std::max(report.max_residual, res);
    }
    report.passed = report.max_residual <= tol;
    return report;
}

}  // namespace lsg
