#include "lsg/j_search.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace lsg {

namespace {

struct SearchNode {
    Word product;
    std::size_t parent;  // index into nodes; root points to itself
    CertificateRecord record;
    std::size_t cost;
};

struct Expansion {
    std::size_t cost;
    std::size_t seq;
    std::size_t node;
    std::size_t conjugator_length;

    bool operator>(const Expansion& o) const { return cost != o.cost ? cost > o.cost : seq > o.seq; }
};

struct Factor {
    std::size_t relator;
    int sign;
    Word word;
};

/// Odometer over reduced words with exactly `length` syllables, in
/// lexicographic order of (generator, exponent) pairs.
class ReducedWordCounter {
public:
    ReducedWordCounter(std::size_t generators, Residue p, std::size_t length)
        : g_(generators), p_(p), letters_(length, Letter{0, 1}) {
        for (std::size_t i = 1; i < length; ++i) letters_[i].gen = (letters_[i - 1].gen == 0) ? 1 : 0;
        valid_ = length == 0 || g_ > 1 || length == 1;
    }

    bool valid() const { return valid_; }
    const std::vector<Letter>& letters() const { return letters_; }

    void advance() {
        if (letters_.empty()) {
            valid_ = false;
            return;
        }
        std::size_t i = letters_.size();
        while (i-- > 0) {
            if (bump(i)) {
                for (std::size_t k = i + 1; k < letters_.size(); ++k) {
                    letters_[k] = {smallest_gen_after(k), 1};
                }
                return;
            }
        }
        valid_ = false;
    }

private:
    GeneratorId smallest_gen_after(std::size_t k) const {
        return (letters_[k - 1].gen == 0) ? 1 : 0;
    }

    // Step position i to its next allowed value; false on overflow.
    bool bump(std::size_t i) {
        auto& l = letters_[i];
        if (l.exp + 1 < p_) {
            ++l.exp;
            return true;
        }
        for (GeneratorId g = l.gen + 1; g < g_; ++g) {
            if (i > 0 && letters_[i - 1].gen == g) continue;
            l = {g, 1};
            return true;
        }
        return false;
    }

    std::size_t g_;
    Residue p_;
    std::vector<Letter> letters_;
    bool valid_ = true;
};

std::optional<Residue> as_j_power(const Word& w, GeneratorId j) {
    if (w.size() == 1 && w.letters()[0].gen == j) return w.letters()[0].exp;
    return std::nullopt;
}

JTrivialityCertificate trace_back(const std::vector<SearchNode>& nodes, std::size_t leaf,
                                  CertificateRecord last, Residue power) {
    JTrivialityCertificate cert;
    cert.j_power = power;
    cert.records.push_back(std::move(last));
    for (std::size_t i = leaf; nodes[i].parent != i; i = nodes[i].parent) {
        cert.records.push_back(nodes[i].record);
    }
    std::reverse(cert.records.begin(), cert.records.end());
    return cert;
}

}  // namespace

JSearchResult prove_j_trivial(const Presentation& pres, std::size_t budget) {
    if (budget == 0) throw std::invalid_argument("prove_j_trivial: budget must be positive");
    const Residue p = pres.modulus();
    const GeneratorId j = pres.j_generator();

    std::vector<Factor> factors;
    for (std::size_t i = 0; i < pres.relators().size(); ++i) {
        const Word w = pres.relator_word(i);
        if (w.empty()) continue;
        factors.push_back({i, +1, w});
        const Word inv = w.inverse(p);
        if (!(inv == w)) factors.push_back({i, -1, inv});
    }
    if (factors.empty()) return Inconclusive{0};
    std::size_t min_factor = factors.front().word.size();
    for (const auto& f : factors) min_factor = std::min(min_factor, f.word.size());

    std::vector<SearchNode> nodes;
    nodes.push_back({Word{}, 0, {}, 0});
    std::unordered_map<Word, std::size_t, WordHash> seen;
    seen.emplace(Word{}, 0);

    std::priority_queue<Expansion, std::vector<Expansion>, std::greater<>> queue;
    std::size_t seq = 0;
    queue.push({min_factor, seq++, 0, 0});

    std::size_t examined = 0;
    while (!queue.empty()) {
        const Expansion item = queue.top();
        queue.pop();
        const std::size_t base_cost = nodes[item.node].cost;

        for (ReducedWordCounter u(pres.generator_count(), p, item.conjugator_length); u.valid(); u.advance()) {
            const Word conj(u.letters(), p);
            for (const auto& f : factors) {
                if (examined >= budget) return Inconclusive{examined};
                ++examined;
                const Word product = nodes[item.node].product.concat(f.word.conjugate_by(conj, p), p);
                CertificateRecord rec{f.relator, conj, f.sign};
                if (auto k = as_j_power(product, j)) {
                    return Proved{trace_back(nodes, item.node, std::move(rec), *k), examined};
                }
                if (seen.contains(product)) continue;
                const std::size_t cost = base_cost + 2 * item.conjugator_length + f.word.size();
                seen.emplace(product, nodes.size());
                nodes.push_back({product, item.node, std::move(rec), cost});
                queue.push({cost + min_factor, seq++, nodes.size() - 1, 0});
            }
        }
        queue.push({base_cost + 2 * (item.conjugator_length + 1) + min_factor, seq++, item.node,
                    item.conjugator_length + 1});
    }
    return Inconclusive{examined};
}

std::optional<Residue> replay_certificate(const Presentation& pres, const JTrivialityCertificate& cert) {
    const Residue p = pres.modulus();
    std::vector<Letter> raw;
    for (const auto& rec : cert.records) {
        if (rec.relator >= pres.relators().size() || (rec.sign != 1 && rec.sign != -1)) return std::nullopt;
        for (const auto& l : rec.conjugator.letters()) {
            if (l.gen > pres.j_generator()) return std::nullopt;
        }
        const auto& syl = pres.relators()[rec.relator].syllables;
        const auto& u = rec.conjugator.letters();
        raw.insert(raw.end(), u.begin(), u.end());
        if (rec.sign == 1) {
            raw.insert(raw.end(), syl.begin(), syl.end());
        } else {
            for (auto it = syl.rbegin(); it != syl.rend(); ++it) raw.push_back({it->gen, p - it->exp % p});
        }
        for (auto it = u.rbegin(); it != u.rend(); ++it) raw.push_back({it->gen, p - it->exp});
    }
    const Word result = free_reduce(raw, p);
    if (result.size() != 1 || result.letters()[0].gen != pres.j_generator()) return std::nullopt;
    return result.letters()[0].exp;
}

std::string export_certificate(const Presentation& pres, const JTrivialityCertificate& cert) {
    nlohmann::json out;
    out["format"] = "j-triviality-certificate";
    out["p"] = pres.modulus();
    out["generators"] = pres.generator_count();
    out["j_power"] = cert.j_power;
    auto& records = out["records"] = nlohmann::json::array();
    for (const auto& rec : cert.records) {
        records.push_back({{"relator", rec.relator + 1},
                           {"relator_word", format_word(pres.relators()[rec.relator].syllables, pres.variable_count())},
                           {"conjugator", format_word(rec.conjugator, pres.variable_count())},
                           {"sign", rec.sign}});
    }
    return out.dump(2) + "\n";
}

JTrivialityCertificate parse_certificate(const Presentation& pres, const std::string& json_text) {
    const auto in = nlohmann::json::parse(json_text);
    if (in.at("p").get<Residue>() != pres.modulus()) {
        throw std::invalid_argument("certificate modulus does not match presentation");
    }
    JTrivialityCertificate cert;
    cert.j_power = in.at("j_power").get<Residue>();
    for (const auto& rec : in.at("records")) {
        const auto index = rec.at("relator").get<std::size_t>();
        if (index == 0) throw std::invalid_argument("certificate relator indices are 1-based");
        cert.records.push_back({index - 1,
                                Word(parse_letters(rec.at("conjugator").get<std::string>(), pres.variable_count()),
                                     pres.modulus()),
                                rec.at("sign").get<int>()});
    }
    return cert;
}

}  // namespace lsg
