#include "lsg/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lsg {

std::string_view to_string(RelatorKind kind) {
    switch (kind) {
        case RelatorKind::Order: return "order";
        case RelatorKind::JCommutator: return "j-commutator";
        case RelatorKind::Local: return "local";
        case RelatorKind::Constraint: return "constraint";
    }
    return "unknown";
}

Presentation::Presentation(Residue p, std::size_t variable_count, std::vector<Relator> relators)
    : p_(p), n_(variable_count), relators_(std::move(relators)) {
    if (!is_prime(p_)) throw std::invalid_argument("presentation modulus must be prime");
    for (const auto& r : relators_) {
        for (const auto& l : r.syllables) {
            if (l.gen > n_) throw std::invalid_argument("relator uses an unknown generator");
        }
        if (r.kind != RelatorKind::Order && free_reduce(r.syllables, p_).empty()) {
            throw std::invalid_argument("relator reduces to the empty word");
        }
    }
}

std::size_t Presentation::count(RelatorKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(relators_.begin(), relators_.end(), [kind](const Relator& r) { return r.kind == kind; }));
}

namespace {

std::vector<Letter> commutator(GeneratorId a, GeneratorId b, Residue p) {
    return {{a, 1}, {b, 1}, {a, p - 1}, {b, p - 1}};
}

}  // namespace

Presentation build_solution_group(const LinearSystem& sys) {
    const Residue p = sys.modulus();
    const std::size_t n = sys.variables();
    const auto j = static_cast<GeneratorId>(n);
    std::vector<Relator> rels;

    for (std::size_t i = 0; i <= n; ++i) {
        rels.push_back({RelatorKind::Order, {{static_cast<GeneratorId>(i), p}}});
    }
    for (std::size_t i = 0; i < n; ++i) {
        rels.push_back({RelatorKind::JCommutator, commutator(static_cast<GeneratorId>(i), j, p)});
    }

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& s : sys.supports()) {
        for (std::size_t a = 0; a < s.variables.size(); ++a) {
            for (std::size_t b = a + 1; b < s.variables.size(); ++b) {
                pairs.emplace(s.variables[a], s.variables[b]);
            }
        }
    }
    for (const auto& [i, k] : pairs) {
        rels.push_back({RelatorKind::Local,
                        commutator(static_cast<GeneratorId>(i), static_cast<GeneratorId>(k), p)});
    }

    for (const auto& s : sys.supports()) {
        std::vector<Letter> syl;
        for (auto k : s.variables) syl.push_back({static_cast<GeneratorId>(k), sys.coefficient(s.equation, k)});
        const Residue jexp = mod_sub(0, sys.rhs(s.equation), p);
        if (jexp != 0) syl.push_back({j, jexp});
        rels.push_back({RelatorKind::Constraint, std::move(syl), s.equation});
    }
    return Presentation(p, n, std::move(rels));
}

std::string export_presentation(const Presentation& pres) {
    std::ostringstream os;
    const auto n = pres.variable_count();
    os << "# solution group: " << pres.generator_count() << " generators, " << pres.relators().size()
       << " relators\n";
    os << "p " << pres.modulus() << "\n";
    os << "generators";
    for (std::size_t i = 0; i < n; ++i) os << " g" << (i + 1);
    os << " J\n";
    for (const auto& r : pres.relators()) {
        os << format_word(r.syllables, n) << "  # " << to_string(r.kind);
        if (r.kind == RelatorKind::Constraint) os << " " << (r.equation + 1);
        os << "\n";
    }
    return os.str();
}

Presentation parse_presentation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Residue p = 0;
    std::size_t n = 0;
    bool have_generators = false;
    std::vector<Relator> rels;
    std::size_t line_no = 0;

    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("presentation line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line;
        std::string tag;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            body = line.substr(0, hash);
            tag = line.substr(hash + 1);
        }
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;

        std::istringstream fields(body);
        std::string head;
        fields >> head;
        if (p == 0) {
            if (head != "p" || !(fields >> p) || !is_prime(p)) fail("expected 'p <prime>'");
            continue;
        }
        if (!have_generators) {
            if (head != "generators") fail("expected generator list");
            std::string g;
            std::vector<std::string> names;
            while (fields >> g) names.push_back(g);
            if (names.empty() || names.back() != "J") fail("generator list must end with J");
            n = names.size() - 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (names[i] != "g" + std::to_string(i + 1)) fail("generators must be g1..gn J");
            }
            have_generators = true;
            continue;
        }

        Relator r{RelatorKind::Constraint, {}};
        try {
            r.syllables = parse_letters(body, n);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        std::istringstream tags(tag);
        std::string kind;
        tags >> kind;
        if (kind == "order") {
            r.kind = RelatorKind::Order;
        } else if (kind == "j-commutator") {
            r.kind = RelatorKind::JCommutator;
        } else if (kind == "local") {
            r.kind = RelatorKind::Local;
        } else if (kind == "constraint") {
            std::size_t eq = 0;
            if (tags >> eq && eq > 0) r.equation = eq - 1;
        } else if (r.syllables.size() == 1 && r.syllables[0].exp == p) {
            r.kind = RelatorKind::Order;
        }
        rels.push_back(std::move(r));
    }
    if (!have_generators) throw std::invalid_argument("presentation: missing header");
    return Presentation(p, n, std::move(rels));
}

}  // namespace lsg
