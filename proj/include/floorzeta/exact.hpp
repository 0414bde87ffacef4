#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace floorzeta {

// Arbitrary-precision integers and rationals. BigRat values produced by this
// library are always canonical (lowest terms, positive denominator); build
// them through make_rat/parse_rat rather than the raw two-argument mpq_class
// constructor, which does not canonicalize.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

// Token grammar shared with the CLI: "u/v" or a plain integer "u".
BigRat parse_rat(const std::string& token);
std::string rat_to_string(const BigRat& q);

// Exponent a = u/v with gcd(u,v) = 1 and 0 < a <= 1. Exact floors of
// irrational powers are not finitely decidable, so the exact core only
// accepts rational exponents in (0, 1].
struct ExponentA {
    unsigned long u = 1;
    unsigned long v = 1;

    ExponentA() = default;
    ExponentA(unsigned long u_, unsigned long v_);
    explicit ExponentA(const BigRat& a);

    bool is_one() const { return u == v; }
    BigRat as_rat() const { return make_rat(BigInt(u), BigInt(v)); }
    std::string str() const;
    friend bool operator==(const ExponentA&, const ExponentA&) = default;
};

BigInt pow_int(const BigInt& base, unsigned long e);
BigInt binomial(unsigned long n, unsigned long k);

// Largest r >= 0 with r^k <= x. Newton iteration on integers (float only as
// a seed) with a binary-search fallback, post-corrected so the defining
// inequality holds exactly.
BigInt int_root_floor(const BigInt& x, unsigned long k);

// Smallest r >= 0 with r^k >= x; equals int_root_floor(x,k) iff x is a
// perfect k-th power.
BigInt int_root_ceil(const BigInt& x, unsigned long k);

// Largest r >= 0 with r^k * den <= num, i.e. floor((num/den)^(1/k)) — defined
// by the product inequality, not by dividing first.
BigInt rational_root_floor(const BigInt& num, const BigInt& den, unsigned long k);

// Smallest r >= 0 with r^k * den >= num, i.e. ceil((num/den)^(1/k)).
BigInt rational_root_ceil(const BigInt& num, const BigInt& den, unsigned long k);

// floor(i^(u/v)) and ceil(i^(u/v)) for arbitrary positive exponent u/v; the
// workhorses behind both a and 1/a directions.
BigInt pow_ratio_floor(const BigInt& i, unsigned long u, unsigned long v);
BigInt pow_ratio_ceil(const BigInt& i, unsigned long u, unsigned long v);

BigInt floor_pow(const BigInt& i, const ExponentA& a);  // floor(i^a), i >= 1
BigInt ceil_pow(const BigInt& i, const ExponentA& a);   // ceil(i^a), i >= 1

}  // namespace floorzeta
