#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lsg {

using Residue = std::uint32_t;

/// Trial-division primality test; moduli here are small.
constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Reduce an arbitrary signed integer into {0, ..., p-1}.
constexpr Residue mod_reduce(std::int64_t v, Residue p) {
    const std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<Residue>(r);
}

constexpr Residue mod_add(Residue a, Residue b, Residue p) {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) + b) % p);
}

constexpr Residue mod_sub(Residue a, Residue b, Residue p) {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) + p - b) % p);
}

constexpr Residue mod_mul(Residue a, Residue b, Residue p) {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
}

constexpr Residue mod_pow(Residue base, std::uint64_t e, Residue p) {
    std::uint64_t result = 1 % p;
    std::uint64_t b = base % p;
    while (e > 0) {
        if (e & 1u) result = (result * b) % p;
        b = (b * b) % p;
        e >>= 1u;
    }
    return static_cast<Residue>(result);
}

/// Inverse of a nonzero residue modulo a prime (Fermat).
constexpr Residue mod_inverse(Residue a, Residue p) {
    if (a % p == 0) throw std::domain_error("mod_inverse: zero has no inverse");
    return mod_pow(a, p - 2, p);
}

/// Exact nonnegative rational, always stored in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        const auto g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    constexpr std::uint64_t num() const { return num_; }
    constexpr std::uint64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr bool operator<(const Rational& a, const Rational& b) {
        return static_cast<unsigned __int128>(a.num_) * b.den_ <
               static_cast<unsigned __int128>(b.num_) * a.den_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace lsg
