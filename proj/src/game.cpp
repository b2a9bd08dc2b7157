#include "lsg/game.hpp"

#include <omp.h>

namespace lsg {

namespace {

struct ProjectorCache {
    std::vector<std::vector<std::vector<Matrix>>> alice;  // [s][k][c]
    std::vector<std::vector<Matrix>> bob;                 // [t][c]
};

ProjectorCache build_projectors(const Strategy& st, bool parallel) {
    ProjectorCache cache;
    cache.alice.resize(st.alice.size());
    for (std::size_t s = 0; s < st.alice.size(); ++s) cache.alice[s].resize(st.alice[s].size());
    cache.bob.resize(st.bob.size());

    std::vector<std::pair<std::size_t, std::size_t>> jobs;  // (s, k); s == npos marks Bob's t = k
    for (std::size_t s = 0; s < st.alice.size(); ++s) {
        for (std::size_t k = 0; k < st.alice[s].size(); ++k) jobs.emplace_back(s, k);
    }
    for (std::size_t t = 0; t < st.bob.size(); ++t) jobs.emplace_back(static_cast<std::size_t>(-1), t);

    const auto n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto [s, k] = jobs[static_cast<std::size_t>(i)];
        if (s == static_cast<std::size_t>(-1)) {
            cache.bob[k] = spectral_projectors(st.bob[k], st.p);
        } else {
            cache.alice[s][k] = spectral_projectors(st.alice[s][k], st.p);
        }
    }
    return cache;
}

class PairEvaluator {
public:
    PairEvaluator(const Strategy& st, const LinearSystem& sys, const ProjectorCache& cache)
        : st_(st), sys_(sys), cache_(cache) {}

    double operator()(std::size_t s, std::size_t t) const {
        const auto& vars = sys_.support(s).variables;
        std::size_t kt = 0;
        while (vars[kt] != t) ++kt;
        double total = 0;
        for (Residue c = 0; c < st_.p; ++c) {
            const Vector phi = cache_.bob[t][c] * st_.state;
            descend(s, kt, c, 0, 0, phi, total);
        }
        return total;
    }

private:
    // Projects onto Alice's joint outcome one variable at a time.
    void descend(std::size_t s, std::size_t kt, Residue c, std::size_t k, Residue acc, const Vector& v,
                 double& total) const {
        const auto& vars = sys_.support(s).variables;
        const Residue p = st_.p;
        if (k == vars.size()) {
            if (acc == sys_.rhs(s)) total += v.squaredNorm();
            return;
        }
        const Residue coeff = sys_.coefficient(s, vars[k]);
        for (Residue a = 0; a < p; ++a) {
            if (k == kt && a != c) continue;
            const Vector w = cache_.alice[s][k][a] * v;
            descend(s, kt, c, k + 1, mod_add(acc, mod_mul(coeff, a, p), p), w, total);
        }
    }

    const Strategy& st_;
    const LinearSystem& sys_;
    const ProjectorCache& cache_;
};

GameReport summarize(const LinearSystem& sys, const std::vector<double>& probs) {
    GameReport report;
    const auto questions = sys.question_pairs();
    double sum = 0;
    for (std::size_t i = 0; i < questions.size(); ++i) {
        report.pairs.push_back({questions[i].first, questions[i].second, probs[i]});
        sum += probs[i];
        if (i == 0 || probs[i] < report.worst.probability) report.worst = report.pairs.back();
    }
    report.value = sum / static_cast<double>(questions.size());
    return report;
}

GameReport evaluate(const Strategy& st, const LinearSystem& sys, bool parallel) {
    require_shape(st, sys);
    const ProjectorCache cache = build_projectors(st, parallel);
    const PairEvaluator eval(st, sys, cache);
    const auto questions = sys.question_pairs();
    std::vector<double> probs(questions.size(), 0.0);
    const auto n = static_cast<std::int64_t>(questions.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto [s, t] = questions[static_cast<std::size_t>(i)];
        probs[static_cast<std::size_t>(i)] = eval(s, t);
    }
    return summarize(sys, probs);
}

}  // namespace

GameReport game_value(const Strategy& st, const LinearSystem& sys) { return evaluate(st, sys, true); }

GameReport game_value_reference(const Strategy& st, const LinearSystem& sys) { return evaluate(st, sys, false); }

Rational deterministic_value(const DeterministicStrategy& ds, const LinearSystem& sys) {
    std::uint64_t won = 0;
    std::uint64_t total = 0;
    for (const auto& s : sys.supports()) {
        const auto& answer = ds.alice.at(s.equation);
        if (answer.size() != s.variables.size()) throw ShapeError("Alice answer has the wrong length");
        Residue acc = 0;
        for (std::size_t k = 0; k < s.variables.size(); ++k) {
            acc = mod_add(acc, mod_mul(sys.coefficient(s.equation, s.variables[k]), answer[k], sys.modulus()),
                          sys.modulus());
        }
        const bool satisfied = acc == sys.rhs(s.equation);
        for (std::size_t k = 0; k < s.variables.size(); ++k) {
            ++total;
            if (satisfied && answer[k] == ds.bob.at(s.variables[k])) ++won;
        }
    }
    return Rational(won, total);
}

GameReport deterministic_report(const DeterministicStrategy& ds, const LinearSystem& sys) {
    std::vector<double> probs;
    for (const auto& s : sys.supports()) {
        const auto& answer = ds.alice.at(s.equation);
        Residue acc = 0;
        for (std::size_t k = 0; k < s.variables.size(); ++k) {
            acc = mod_add(acc, mod_mul(sys.coefficient(s.equation, s.variables[k]), answer[k], sys.modulus()),
                          sys.modulus());
        }
        for (std::size_t k = 0; k < s.variables.size(); ++k) {
            probs.push_back(acc == sys.rhs(s.equation) && answer[k] == ds.bob.at(s.variables[k]) ? 1.0 : 0.0);
        }
    }
    GameReport report = summarize(sys, probs);
    report.exact = deterministic_value(ds, sys);
    return report;
}

Strategy to_strategy(const DeterministicStrategy& ds, const LinearSystem& sys) {
    Strategy st;
    st.p = sys.modulus();
    st.dimension = 1;
    st.state = Vector::Ones(1);
    auto scalar = [&](Residue v) {
        Matrix m(1, 1);
        m(0, 0) = root_of_unity(v, st.p);
        return m;
    };
    for (const auto& s : sys.supports()) {
        std::vector<Matrix> family;
        for (std::size_t k = 0; k < s.variables.size(); ++k) family.push_back(scalar(ds.alice.at(s.equation).at(k)));
        st.alice.push_back(std::move(family));
    }
    for (std::size_t j = 0; j < sys.variables(); ++j) st.bob.push_back(scalar(ds.bob.at(j)));
    return st;
}

std::optional<DeterministicStrategy> as_deterministic(const Strategy& st, const LinearSystem& sys) {
    if (st.dimension != 1) return std::nullopt;
    require_shape(st, sys);
    if (st.state(0) != Complex(1.0, 0.0)) return std::nullopt;
    auto exponent = [&](const Matrix& m) -> std::optional<Residue> {
        for (Residue a = 0; a < st.p; ++a) {
            if (m(0, 0) == root_of_unity(a, st.p)) return a;
        }
        return std::nullopt;
    };
    DeterministicStrategy ds;
    for (const auto& family : st.alice) {
        std::vector<Residue> answer;
        for (const auto& a : family) {
            const auto e = exponent(a);
            if (!e) return std::nullopt;
            answer.push_back(*e);
        }
        ds.alice.push_back(std::move(answer));
    }
    for (const auto& b : st.bob) {
        const auto e = exponent(b);
        if (!e) return std::nullopt;
        ds.bob.push_back(*e);
    }
    return ds;
}

DeterministicStrategy from_assignment(const Assignment& x, const LinearSystem& sys) {
    DeterministicStrategy ds;
    for (const auto& s : sys.supports()) {
        std::vector<Residue> answer;
        for (auto k : s.variables) answer.push_back(x.at(k));
        ds.alice.push_back(std::move(answer));
    }
    ds.bob = x;
    return ds;
}

}  // namespace lsg
