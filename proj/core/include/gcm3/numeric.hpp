#pragma once

/**
 * @file numeric.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision integers and rationals.
 *
 * Everything downstream (lattice, Cartan matrices, the search pipeline) is
 * computed exactly; no floating point enters until a result is rendered.
 * Int and Rat are GMP-backed. Rationals are kept canonical throughout:
 * positive denominator, numerator and denominator coprime, zero as 0/1.
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace gcm3 {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from a possibly unreduced pair.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool divides(const Int& d, const Int& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor/ceil of a rational as exact integers.
inline Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& q) { return ceil_div(Int(q.get_num()), Int(q.get_den())); }
inline Int rat_floor(const Rat& q) { return floor_div(Int(q.get_num()), Int(q.get_den())); }

// nu_p: exponent of prime p in n (n != 0).
inline int valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    n = abs(n);
    int v = 0;
    while (divides(p, n)) {
        n /= p;
        ++v;
    }
    return v;
}

// Ascending positive divisors of |n|, n != 0.
std::vector<Int> positive_divisors(const Int& n);

// Ascending prime factors of |n| (n != 0), without multiplicity.
std::vector<Int> prime_factors(const Int& n);

inline std::string to_string(const Int& n) { return n.get_str(); }

// "p/q" with the "/q" omitted for integers.
inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p" or "p/q"; empty optional on malformed input.
std::optional<Rat> parse_rat(const std::string& s);

}  // namespace gcm3
