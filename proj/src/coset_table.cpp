#include "lsg/coset_table.hpp"

#include <deque>
#include <stdexcept>

namespace lsg {

CosetTable::CosetTable(std::vector<Permutation> right_action, GeneratorId j_generator)
    : right_(std::move(right_action)), j_(j_generator) {
    const std::size_t n = order();
    // Left action via a breadth-first spanning tree from the identity:
    // if c = parent * a then g * c = (g * parent) * a.
    std::vector<std::int64_t> parent(n, -1);
    std::vector<GeneratorId> via(n, 0);
    std::vector<std::uint32_t> bfs;
    bfs.reserve(n);
    if (n > 0) {
        parent[0] = 0;
        bfs.push_back(0);
    }
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        const auto c = bfs[head];
        for (GeneratorId g = 0; g < right_.size(); ++g) {
            const auto d = right_[g][c];
            if (parent[d] < 0) {
                parent[d] = c;
                via[d] = g;
                bfs.push_back(d);
            }
        }
    }
    if (bfs.size() != n) throw std::invalid_argument("coset table action is not transitive");

    left_.assign(right_.size(), Permutation(n));
    for (GeneratorId g = 0; g < right_.size(); ++g) {
        auto& left = left_[g];
        left[0] = right_[g][0];
        for (std::size_t k = 1; k < bfs.size(); ++k) {
            const auto c = bfs[k];
            left[c] = right_[via[c]][left[static_cast<std::size_t>(parent[c])]];
        }
    }
}

std::uint32_t CosetTable::element_of(const std::vector<Letter>& syllables) const {
    std::uint32_t c = 0;
    for (const auto& l : syllables) {
        for (std::uint32_t e = 0; e < l.exp; ++e) c = right_[l.gen][c];
    }
    return c;
}

namespace {

constexpr std::int32_t kUndefined = -1;

struct BudgetExhausted {};

class Enumerator {
public:
    Enumerator(const Presentation& pres, std::size_t limit)
        : cols_(2 * pres.generator_count()), limit_(limit) {
        for (const auto& r : pres.relators()) {
            std::vector<std::uint32_t> cols;
            for (const auto& l : r.syllables) {
                for (std::uint32_t e = 0; e < l.exp; ++e) cols.push_back(2 * l.gen);
            }
            if (!cols.empty()) relators_.push_back(std::move(cols));
        }
    }

    EnumerationResult run(GeneratorId j) {
        try {
            new_coset();
            for (std::size_t alpha = 0; alpha < defined(); ++alpha) {
                if (defined() > 4096 && defined() > 2 * live_) alpha = compact(alpha);
                if (!is_live(alpha)) continue;
                for (const auto& r : relators_) {
                    scan_and_fill(static_cast<std::int32_t>(alpha), r);
                    if (!is_live(alpha)) break;
                }
                if (!is_live(alpha)) continue;
                for (std::size_t x = 0; x < cols_; ++x) {
                    if (entry(alpha, x) == kUndefined) define(static_cast<std::int32_t>(alpha), x);
                }
            }
        } catch (const BudgetExhausted&) {
            return OutOfBudget{live_, defined()};
        }
        compact(0);

        const std::size_t n = defined();
        std::vector<Permutation> right(cols_ / 2, Permutation(n));
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t g = 0; g < cols_ / 2; ++g) {
                right[g][c] = static_cast<std::uint32_t>(entry(c, 2 * g));
            }
        }
        return Finite{CosetTable(std::move(right), j)};
    }

private:
    std::size_t defined() const { return rep_.size(); }
    bool is_live(std::size_t c) const { return rep_[c] == static_cast<std::int32_t>(c); }
    std::int32_t& entry(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
    static std::size_t inv(std::size_t x) { return x ^ 1u; }

    std::int32_t new_coset() {
        if (live_ >= limit_) throw BudgetExhausted{};
        const auto d = static_cast<std::int32_t>(rep_.size());
        rep_.push_back(d);
        table_.resize(table_.size() + cols_, kUndefined);
        ++live_;
        return d;
    }

    void define(std::int32_t c, std::size_t x) {
        const auto d = new_coset();
        entry(c, x) = d;
        entry(d, inv(x)) = c;
    }

    std::int32_t find(std::int32_t c) {
        std::int32_t root = c;
        while (rep_[root] != root) root = rep_[root];
        while (rep_[c] != root) {
            const auto next = rep_[c];
            rep_[c] = root;
            c = next;
        }
        return root;
    }

    void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[b] = a;
        --live_;
        queue.push_back(b);
    }

    void coincidence(std::int32_t a, std::int32_t b) {
        std::vector<std::int32_t> queue;
        merge(a, b, queue);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const auto gamma = queue[i];
            for (std::size_t x = 0; x < cols_; ++x) {
                const auto delta = entry(gamma, x);
                if (delta == kUndefined) continue;
                entry(delta, inv(x)) = kUndefined;
                const auto mu = find(gamma);
                const auto nu = find(delta);
                if (entry(mu, x) != kUndefined) {
                    merge(nu, entry(mu, x), queue);
                } else if (entry(nu, inv(x)) != kUndefined) {
                    merge(mu, entry(nu, inv(x)), queue);
                } else {
                    entry(mu, x) = nu;
                    entry(nu, inv(x)) = mu;
                }
            }
        }
    }

    void scan_and_fill(std::int32_t alpha, const std::vector<std::uint32_t>& w) {
        std::int32_t f = alpha;
        std::int32_t b = alpha;
        std::size_t i = 0;
        std::size_t j = w.size();  // one past the last unscanned letter
        while (true) {
            while (i < j && entry(f, w[i]) != kUndefined) f = entry(f, w[i++]);
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && entry(b, inv(w[j - 1])) != kUndefined) b = entry(b, inv(w[--j]));
            if (i == j) {
                coincidence(f, b);
                return;
            }
            if (i + 1 == j) {
                entry(f, w[i]) = b;
                entry(b, inv(w[i])) = f;
                return;
            }
            define(f, w[i]);
        }
    }

    /// Renumbers live cosets in order; returns the new index of `alpha`.
    std::size_t compact(std::size_t alpha) {
        std::vector<std::int32_t> renumber(defined(), kUndefined);
        std::size_t next = 0;
        std::size_t new_alpha = 0;
        for (std::size_t c = 0; c < defined(); ++c) {
            if (c == alpha) new_alpha = next;
            if (is_live(c)) renumber[c] = static_cast<std::int32_t>(next++);
        }
        if (alpha >= defined()) new_alpha = next;
        std::vector<std::int32_t> table(next * cols_, kUndefined);
        for (std::size_t c = 0; c < defined(); ++c) {
            if (!is_live(c)) continue;
            for (std::size_t x = 0; x < cols_; ++x) {
                const auto d = entry(c, x);
                table[static_cast<std::size_t>(renumber[c]) * cols_ + x] =
                    d == kUndefined ? kUndefined : renumber[static_cast<std::size_t>(find(d))];
            }
        }
        table_ = std::move(table);
        rep_.resize(next);
        for (std::size_t c = 0; c < next; ++c) rep_[c] = static_cast<std::int32_t>(c);
        return new_alpha;
    }

    std::size_t cols_;
    std::size_t limit_;
    std::vector<std::vector<std::uint32_t>> relators_;
    std::vector<std::int32_t> table_;
    std::vector<std::int32_t> rep_;
    std::size_t live_ = 0;
};

}  // namespace

EnumerationResult coset_enumerate(const Presentation& pres, std::size_t limit) {
    if (limit == 0) throw std::invalid_argument("coset_enumerate: limit must be at least 1");
    return Enumerator(pres, limit).run(pres.j_generator());
}

JIndex j_index(const CosetTable& table) {
    const auto idx = table.right_action(table.j_generator())[table.identity()];
    return {idx, idx != table.identity()};
}

std::string validate_coset_table(const CosetTable& table, const Presentation& pres) {
    const std::size_t n = table.order();
    const Residue p = pres.modulus();
    if (table.generator_count() != pres.generator_count()) return "generator count mismatch";
    for (GeneratorId g = 0; g < table.generator_count(); ++g) {
        const auto& perm = table.right_action(g);
        std::vector<bool> hit(n, false);
        for (auto v : perm) {
            if (v >= n || hit[v]) return "generator " + std::to_string(g) + " does not act bijectively";
            hit[v] = true;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::uint32_t d = static_cast<std::uint32_t>(c);
            for (Residue e = 0; e < p; ++e) d = perm[d];
            if (d != c) return "generator " + std::to_string(g) + " has order not dividing p";
        }
    }
    for (std::size_t r = 0; r < pres.relators().size(); ++r) {
        const auto& syl = pres.relators()[r].syllables;
        for (std::size_t c = 0; c < n; ++c) {
            std::uint32_t d = static_cast<std::uint32_t>(c);
            for (const auto& l : syl) {
                for (std::uint32_t e = 0; e < l.exp; ++e) d = table.right_action(l.gen)[d];
            }
            if (d != c) return "relator " + std::to_string(r + 1) + " moves coset " + std::to_string(c);
        }
    }
    std::vector<bool> reached(n, false);
    std::deque<std::uint32_t> frontier{table.identity()};
    reached[table.identity()] = true;
    std::size_t count = 1;
    while (!frontier.empty()) {
        const auto c = frontier.front();
        frontier.pop_front();
        for (GeneratorId g = 0; g < table.generator_count(); ++g) {
            const auto d = table.right_action(g)[c];
            if (!reached[d]) {
                reached[d] = true;
                ++count;
                frontier.push_back(d);
            }
        }
    }
    if (count != n) return "action is not transitive from the identity";
    return {};
}

}  // namespace lsg
