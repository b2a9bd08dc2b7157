#include "lsg/classical.hpp"

#include <omp.h>

#include <limits>
#include <string>

namespace lsg {

ClassicalCapExceeded::ClassicalCapExceeded(std::uint64_t work, std::uint64_t cap)
    : std::runtime_error("classical enumeration needs " + std::to_string(work) + " evaluations, cap is " +
                         std::to_string(cap)),
      work_(work), cap_(cap) {}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = saturating_mul(r, base);
    return r;
}

/// Satisfying rows of every equation, each row listing values for V_s.
std::vector<std::vector<std::vector<Residue>>> satisfying_rows(const LinearSystem& sys) {
    const Residue p = sys.modulus();
    std::vector<std::vector<std::vector<Residue>>> rows(sys.equations());
    for (const auto& s : sys.supports()) {
        const auto r = s.variables.size();
        std::vector<Residue> a(r, 0);
        while (true) {
            Residue acc = 0;
            for (std::size_t k = 0; k < r; ++k) {
                acc = mod_add(acc, mod_mul(sys.coefficient(s.equation, s.variables[k]), a[k], p), p);
            }
            if (acc == sys.rhs(s.equation)) rows[s.equation].push_back(a);
            std::size_t k = 0;
            while (k < r && ++a[k] == p) a[k++] = 0;
            if (k == r) break;
        }
    }
    return rows;
}

class Scorer {
public:
    explicit Scorer(const LinearSystem& sys) : sys_(sys), rows_(satisfying_rows(sys)) {
        for (const auto& s : sys.supports()) total_ += s.variables.size();
    }

    std::uint64_t total_pairs() const { return total_; }

    void decode(std::uint64_t index, Assignment& y) const {
        for (auto& v : y) {
            v = static_cast<Residue>(index % sys_.modulus());
            index /= sys_.modulus();
        }
    }

    std::uint64_t score(const Assignment& y) const {
        std::uint64_t total = 0;
        for (const auto& s : sys_.supports()) total += best_row(s, y).second;
        return total;
    }

    /// (row index, agreements) of the first row with maximal agreement.
    std::pair<std::size_t, std::uint64_t> best_row(const Support& s, const Assignment& y) const {
        std::size_t best = 0;
        std::uint64_t best_hits = 0;
        const auto& rows = rows_[s.equation];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::uint64_t hits = 0;
            for (std::size_t k = 0; k < s.variables.size(); ++k) hits += rows[i][k] == y[s.variables[k]];
            if (i == 0 || hits > best_hits) {
                best = i;
                best_hits = hits;
            }
        }
        return {best, best_hits};
    }

    ClassicalOptimum finish(std::uint64_t best_score, std::uint64_t best_index) const {
        ClassicalOptimum out{Rational(best_score, total_), {}};
        Assignment y(sys_.variables(), 0);
        decode(best_index, y);
        for (const auto& s : sys_.supports()) out.strategy.alice.push_back(rows_[s.equation][best_row(s, y).first]);
        out.strategy.bob = y;
        return out;
    }

private:
    const LinearSystem& sys_;
    std::vector<std::vector<std::vector<Residue>>> rows_;
    std::uint64_t total_ = 0;
};

std::uint64_t bob_tables(const LinearSystem& sys, std::uint64_t cap) {
    const auto work = classical_work(sys);
    if (work > cap) throw ClassicalCapExceeded(work, cap);
    return saturating_pow(sys.modulus(), sys.variables());
}

}  // namespace

std::uint64_t classical_work(const LinearSystem& sys) {
    std::uint64_t rows = 0;
    for (const auto& s : sys.supports()) {
        rows += saturating_pow(sys.modulus(), s.variables.size() - 1);
        if (rows == kSaturated) break;
    }
    return saturating_mul(saturating_pow(sys.modulus(), sys.variables()), rows);
}

ClassicalOptimum classical_optimum_reference(const LinearSystem& sys, std::uint64_t cap) {
    const auto tables = bob_tables(sys, cap);
    const Scorer scorer(sys);
    Assignment y(sys.variables(), 0);
    std::uint64_t best_score = 0;
    std::uint64_t best_index = 0;
    for (std::uint64_t idx = 0; idx < tables; ++idx) {
        scorer.decode(idx, y);
        const auto s = scorer.score(y);
        if (s > best_score) {
            best_score = s;
            best_index = idx;
        }
    }
    return scorer.finish(best_score, best_index);
}

ClassicalOptimum classical_optimum(const LinearSystem& sys, std::uint64_t cap) {
    const auto tables = bob_tables(sys, cap);
    const Scorer scorer(sys);
    std::uint64_t best_score = 0;
    std::uint64_t best_index = 0;

#pragma omp parallel
    {
        Assignment y(sys.variables(), 0);
        std::uint64_t local_score = 0;
        std::uint64_t local_index = 0;
        bool have = false;
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(tables); ++idx) {
            scorer.decode(static_cast<std::uint64_t>(idx), y);
            const auto s = scorer.score(y);
            if (!have || s > local_score) {
                local_score = s;
                local_index = static_cast<std::uint64_t>(idx);
                have = true;
            }
        }
#pragma omp critical(lsg_classical_best)
        {
            if (have && (local_score > best_score || (local_score == best_score && local_index < best_index))) {
                best_score = local_score;
                best_index = local_index;
            }
        }
    }
    return scorer.finish(best_score, best_index);
}

}  // namespace lsg
