#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lsg/presentation.hpp"
#include "lsg/word.hpp"

namespace lsg {

/// One factor u * r^sign * u^-1 of a certificate product.
struct CertificateRecord {
    std::size_t relator = 0;  ///< index into Presentation::relators()
    Word conjugator;
    int sign = 1;             ///< +1 or -1

    friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

/// A product of conjugated relators that freely reduces to J^k, k != 0 mod p.
/// Since every relator is trivial in the group, this proves J = e.
struct JTrivialityCertificate {
    std::vector<CertificateRecord> records;
    Residue j_power = 0;

    friend bool operator==(const JTrivialityCertificate&, const JTrivialityCertificate&) = default;
};

struct Proved {
    JTrivialityCertificate certificate;
    std::size_t nodes = 0;
};

struct Inconclusive {
    std::size_t nodes = 0;
};

using JSearchResult = std::variant<Proved, Inconclusive>;

/// Best-first search over products r_1^{u_1} ... r_s^{u_s} of conjugated
/// relators, ordered by total written length sum(2|u_i| + |r_i|) with ties
/// broken by generation order. Conjugators range over all reduced words;
/// longer conjugators are generated lazily as the cost frontier reaches them.
/// Products are deduplicated by their reduced form.
///
/// `budget` caps the number of candidate products examined. The search is
/// single-threaded and deterministic.
JSearchResult prove_j_trivial(const Presentation& pres, std::size_t budget);

/// Replays a certificate with free reduction only. Returns the exponent k of
/// the resulting J^k, or nullopt if the product is not a nonzero power of J
/// (or a record is malformed).
std::optional<Residue> replay_certificate(const Presentation& pres, const JTrivialityCertificate& cert);

/// JSON export: {"p":..,"j_power":..,"records":[{"relator":i(1-based),"conjugator":"g1*J","sign":1},..]}
std::string export_certificate(const Presentation& pres, const JTrivialityCertificate& cert);
JTrivialityCertificate parse_certificate(const Presentation& pres, const std::string& json_text);

}  // namespace lsg
