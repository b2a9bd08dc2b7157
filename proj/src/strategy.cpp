#include "lsg/strategy.hpp"

#include <algorithm>

namespace lsg {

namespace {

void require_square(const Matrix& m, std::size_t dim, const std::string& what) {
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
        throw ShapeError(what + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
}

}  // namespace

void require_shape(const Strategy& st, const LinearSystem& sys) {
    if (st.p != sys.modulus()) throw ShapeError("strategy modulus does not match the system");
    if (static_cast<std::size_t>(st.state.size()) != st.dimension) {
        throw ShapeError("state length does not match the strategy dimension");
    }
    if (st.alice.size() != sys.equations()) {
        throw ShapeError("strategy has Alice operators for " + std::to_string(st.alice.size()) + " equations, expected " +
                         std::to_string(sys.equations()));
    }
    for (std::size_t l = 0; l < sys.equations(); ++l) {
        const auto& vars = sys.support(l).variables;
        if (st.alice[l].size() != vars.size()) {
            throw ShapeError("missing Alice operator for equation " + std::to_string(l + 1));
        }
        for (std::size_t k = 0; k < vars.size(); ++k) {
            require_square(st.alice[l][k], st.dimension,
                           "Alice operator (" + std::to_string(l + 1) + ", x" + std::to_string(vars[k] + 1) + ")");
        }
    }
    if (st.bob.size() != sys.variables()) throw ShapeError("missing Bob operator");
    for (std::size_t j = 0; j < st.bob.size(); ++j) {
        require_square(st.bob[j], st.dimension, "Bob operator x" + std::to_string(j + 1));
    }
}

OperatorSolutionReport check_operator_solution(const OperatorSolution& sol, const LinearSystem& sys, double tol) {
    if (sol.p != sys.modulus()) throw ShapeError("operator solution modulus does not match the system");
    if (sol.operators.size() != sys.variables()) {
        throw ShapeError("operator solution has " + std::to_string(sol.operators.size()) + " operators, expected " +
                         std::to_string(sys.variables()));
    }
    for (std::size_t i = 0; i < sol.operators.size(); ++i) {
        require_square(sol.operators[i], sol.dimension, "operator A" + std::to_string(i + 1));
    }

    OperatorSolutionReport report;
    for (const auto& a : sol.operators) report.observable = std::max(report.observable, observable_defect(a, sol.p));

    for (const auto& s : sys.supports()) {
        for (std::size_t a = 0; a < s.variables.size(); ++a) {
            for (std::size_t b = a + 1; b < s.variables.size(); ++b) {
                report.commutation = std::max(
                    report.commutation, commutator_norm(sol.operators[s.variables[a]], sol.operators[s.variables[b]]));
            }
        }
    }

    const auto d = static_cast<Eigen::Index>(sol.dimension);
    for (std::size_t l = 0; l < sys.equations(); ++l) {
        const Matrix prod =
            constraint_product(sys, l, sol.dimension, [&](std::size_t, std::size_t var) -> const Matrix& {
                return sol.operators[var];
            });
        const double r = residual_norm(prod - root_of_unity(sys.rhs(l), sys.modulus()) * Matrix::Identity(d, d));
        report.constraint.push_back(r);
        report.max_constraint = std::max(report.max_constraint, r);
    }
    report.passed = report.observable <= tol && report.commutation <= tol && report.max_constraint <= tol;
    return report;
}

StrategyReport check_strategy(const Strategy& st, const LinearSystem& sys, double tol) {
    require_shape(st, sys);
    StrategyReport report;
    report.state_norm = std::abs(st.state.norm() - 1.0);

    for (const auto& family : st.alice) {
        for (const auto& a : family) report.observable = std::max(report.observable, observable_defect(a, st.p));
    }
    for (const auto& b : st.bob) report.observable = std::max(report.observable, observable_defect(b, st.p));

    for (const auto& family : st.alice) {
        for (std::size_t a = 0; a < family.size(); ++a) {
            for (const auto& b : st.bob) report.alice_bob = std::max(report.alice_bob, commutator_norm(family[a], b));
            for (std::size_t c = a + 1; c < family.size(); ++c) {
                report.local = std::max(report.local, commutator_norm(family[a], family[c]));
            }
        }
    }
    report.passed = report.state_norm <= tol && report.observable <= tol && report.alice_bob <= tol &&
                    report.local <= tol;
    return report;
}

PerfectionReport is_perfect(const Strategy& st, const LinearSystem& sys, double tol) {
    require_shape(st, sys);
    PerfectionReport report;
    for (std::size_t l = 0; l < sys.equations(); ++l) {
        const auto& vars = sys.support(l).variables;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            const double r = (st.alice[l][k] * st.state - st.bob[vars[k]] * st.state).norm();
            report.consistency.push_back(r);
            report.max_consistency = std::max(report.max_consistency, r);
        }
        Vector v = st.state;
        for (std::size_t k = vars.size(); k-- > 0;) {
            for (Residue e = 0; e < sys.coefficient(l, vars[k]); ++e) v = st.alice[l][k] * v;
        }
        const double r = (v - root_of_unity(sys.rhs(l), sys.modulus()) * st.state).norm();
        report.constraint.push_back(r);
        report.max_constraint = std::max(report.max_constraint, r);
    }
    report.passed = report.max_consistency <= tol && report.max_constraint <= tol;
    return report;
}

}  // namespace lsg
