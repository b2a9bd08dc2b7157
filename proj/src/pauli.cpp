#include "lsg/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace lsg {

namespace {

// Single-qubit symbols in the cyclic order X -> Y -> Z.
enum Symbol : unsigned { kI = 0, kX = 1, kY = 2, kZ = 3 };

Symbol symbol_at(PauliWord w, std::size_t k) {
    const bool x = (w.x >> k) & 1u;
    const bool z = (w.z >> k) & 1u;
    if (x && z) return kY;
    if (x) return kX;
    if (z) return kZ;
    return kI;
}

unsigned single_phase(Symbol a, Symbol b) {
    if (a == kI || b == kI || a == b) return 0;
    // XY = iZ, YZ = iX, ZX = iY; the reverse orders pick up -i.
    return (b == a % 3 + 1) ? 1 : 3;
}

struct BudgetExceeded {};

class PauliSearch {
public:
    PauliSearch(const LinearSystem& sys, std::size_t qubits, std::uint64_t budget, std::uint64_t& nodes)
        : sys_(sys), qubits_(qubits), budget_(budget), nodes_(nodes), words_(sys.variables()),
          equations_of_(sys.variables()), last_of_(sys.variables()) {
        for (const auto& s : sys.supports()) {
            for (auto k : s.variables) equations_of_[k].push_back(s.equation);
            last_of_[s.variables.back()].push_back(s.equation);
        }
    }

    std::optional<std::pair<std::vector<PauliWord>, Assignment>> run() {
        if (descend(0)) return std::make_pair(words_, signs_);
        return std::nullopt;
    }

private:
    bool descend(std::size_t v) {
        if (v == words_.size()) return solve_signs();

        if (!last_of_[v].empty()) {
            // Forced: the product over the first equation ending here must be ~ I.
            PauliWord forced;
            for (auto u : sys_.support(last_of_[v].front()).variables) {
                if (u == v) continue;
                forced.x ^= words_[u].x;
                forced.z ^= words_[u].z;
            }
            return place(v, forced);
        }
        if (v == 0) {
            if (place(v, PauliWord{})) return true;
            return qubits_ > 0 && place(v, PauliWord{0, 1});
        }
        const std::uint32_t span = 1u << qubits_;
        for (std::uint32_t x = 0; x < span; ++x) {
            for (std::uint32_t z = 0; z < span; ++z) {
                if (place(v, PauliWord{x, z})) return true;
            }
        }
        return false;
    }

    bool place(std::size_t v, PauliWord w) {
        if (++nodes_ > budget_) throw BudgetExceeded{};
        for (auto eq : equations_of_[v]) {
            for (auto u : sys_.support(eq).variables) {
                if (u >= v) break;
                if (!commutes(words_[u], w)) return false;
            }
        }
        words_[v] = w;
        for (auto eq : last_of_[v]) {
            PauliWord acc;
            for (auto u : sys_.support(eq).variables) {
                acc.x ^= words_[u].x;
                acc.z ^= words_[u].z;
            }
            if (acc.x != 0 || acc.z != 0) return false;
        }
        return descend(v + 1);
    }

    bool solve_signs() {
        std::vector<Residue> rhs;
        for (const auto& s : sys_.supports()) {
            PauliWord acc;
            unsigned phase = 0;
            for (auto u : s.variables) {
                phase = (phase + product_phase(acc, words_[u])) % 4;
                acc.x ^= words_[u].x;
                acc.z ^= words_[u].z;
            }
            // Pairwise commuting Hermitian factors multiply to a real multiple of I.
            if (phase % 2 != 0) return false;
            rhs.push_back(mod_sub(sys_.rhs(s.equation), phase / 2, 2));
        }
        const LinearSystem sign_system(2, sys_.matrix(), rhs);
        auto signs = classical_solve(sign_system);
        if (!signs) return false;
        signs_ = std::move(*signs);
        return true;
    }

    const LinearSystem& sys_;
    std::size_t qubits_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<PauliWord> words_;
    std::vector<std::vector<std::size_t>> equations_of_;
    std::vector<std::vector<std::size_t>> last_of_;
    Assignment signs_;
};

Matrix single_matrix(Symbol s) {
    Matrix m = Matrix::Zero(2, 2);
    switch (s) {
        case kI: m(0, 0) = 1; m(1, 1) = 1; break;
        case kX: m(0, 1) = 1; m(1, 0) = 1; break;
        case kY: m(0, 1) = Complex(0, -1); m(1, 0) = Complex(0, 1); break;
        case kZ: m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

}  // namespace

bool commutes(PauliWord a, PauliWord b) {
    return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) % 2 == 0;
}

unsigned product_phase(PauliWord a, PauliWord b) {
    unsigned phase = 0;
    const std::uint32_t used = a.x | a.z | b.x | b.z;
    for (std::size_t k = 0; (used >> k) != 0; ++k) phase += single_phase(symbol_at(a, k), symbol_at(b, k));
    return phase % 4;
}

Matrix pauli_matrix(PauliWord w, std::size_t qubits) {
    Matrix m = Matrix::Identity(1, 1);
    for (std::size_t k = 0; k < qubits; ++k) m = kron(m, single_matrix(symbol_at(w, k)));
    return m;
}

std::string pauli_label(PauliWord w, std::size_t qubits) {
    static constexpr char names[] = {'I', 'X', 'Y', 'Z'};
    std::string out;
    for (std::size_t k = 0; k < qubits; ++k) out += names[symbol_at(w, k)];
    return out.empty() ? "1" : out;
}

PauliSearchResult pauli_opsol_search(const LinearSystem& sys, std::size_t max_qubits, std::uint64_t node_budget) {
    if (sys.modulus() != 2) throw std::invalid_argument("Pauli search is defined for p = 2 only");
    if (max_qubits > kMaxPauliQubits) {
        throw std::invalid_argument("Pauli search supports at most " + std::to_string(kMaxPauliQubits) + " qubits");
    }

    PauliSearchResult result;
    bool budget_hit = false;
    for (std::size_t q = 0; q <= max_qubits && !budget_hit; ++q) {
        PauliSearch search(sys, q, node_budget, result.nodes);
        try {
            auto found = search.run();
            if (!found) continue;
            const auto& [words, signs] = *found;
            OperatorSolution sol{2, std::size_t{1} << q, {}};
            for (std::size_t i = 0; i < words.size(); ++i) {
                const double sign = signs[i] ? -1.0 : 1.0;
                sol.operators.push_back(sign * pauli_matrix(words[i], q));
                result.labels.push_back((signs[i] ? "-" : "+") + pauli_label(words[i], q));
            }
            result.status = PauliSearchStatus::Found;
            result.solution = std::move(sol);
            result.qubits = q;
            return result;
        } catch (const BudgetExceeded&) {
            budget_hit = true;
        }
    }
    result.status = budget_hit ? PauliSearchStatus::BudgetExceeded : PauliSearchStatus::Exhausted;
    return result;
}

}  // namespace lsg
