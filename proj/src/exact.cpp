#include "floorzeta/exact.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace floorzeta {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigRat parse_rat(const std::string& token) {
    const auto slash = token.find('/');
    try {
        // Base pinned to 10: the auto-detecting constructor would read 0x/0
        // prefixes, which are outside the printed grammar.
        if (slash == std::string::npos) return make_rat(BigInt(token, 10), 1);
        return make_rat(BigInt(token.substr(0, slash), 10), BigInt(token.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("parse_rat: malformed rational token '" + token + "'");
    }
}

std::string rat_to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExponentA::ExponentA(unsigned long u_, unsigned long v_) {
    if (u_ == 0 || v_ == 0) throw std::domain_error("ExponentA: u and v must be positive");
    if (u_ > v_) throw std::domain_error("ExponentA: a = u/v must satisfy a <= 1");
    const unsigned long g = std::gcd(u_, v_);
    u = u_ / g;
    v = v_ / g;
}

ExponentA::ExponentA(const BigRat& a) {
    if (sgn(a) <= 0 || a > 1) throw std::domain_error("ExponentA: a must lie in (0, 1]");
    if (!a.get_num().fits_ulong_p() || !a.get_den().fits_ulong_p())
        throw std::domain_error("ExponentA: numerator/denominator out of range");
    u = a.get_num().get_ui();  // mpq_class is canonical, so gcd(u,v)=1 already
    v = a.get_den().get_ui();
}

std::string ExponentA::str() const {
    if (v == 1) return std::to_string(u);
    return std::to_string(u) + "/" + std::to_string(v);
}

BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

// Float-seeded upper estimate of x^(1/k); returns 0 when no finite double
// estimate exists (caller falls back to the bit-length seed).
BigInt root_seed_from_double(const BigInt& x, unsigned long k) {
    const double xd = x.get_d();
    if (!std::isfinite(xd) || xd <= 0.0) return 0;
    const double rd = std::pow(xd, 1.0 / static_cast<double>(k)) * (1.0 + 1e-9) + 4.0;
    if (!std::isfinite(rd) || rd >= 9e307) return 0;
    return BigInt(rd);
}

BigInt root_binary_search(const BigInt& x, unsigned long k, BigInt hi) {
    BigInt lo = 1;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (pow_int(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

BigInt int_root_floor(const BigInt& x, unsigned long k) {
    if (k == 0) throw std::invalid_argument("int_root_floor: k must be >= 1");
    if (sgn(x) < 0) throw std::domain_error("int_root_floor: negative radicand");
    if (sgn(x) == 0) return 0;
    if (k == 1) return x;
    const size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    if (bits <= k) return 1;  // 1 <= x < 2^k
    // 2^ceil(bits/k) >= x^(1/k) always; the float seed is usually far tighter.
    const BigInt bit_seed = BigInt(1) << static_cast<unsigned long>((bits + k - 1) / k);
    BigInt r = root_seed_from_double(x, k);
    if (r == 0 || pow_int(r, k) < x) r = bit_seed;

    // Newton from above: r_{n+1} = ((k-1) r + x / r^(k-1)) / k, monotonically
    // decreasing while above the root. Capped, with binary search as fallback.
    const unsigned long cap = 4 * bits + 64;
    unsigned long iter = 0;
    for (; iter < cap; ++iter) {
        BigInt next = ((k - 1) * r + x / pow_int(r, k - 1)) / k;
        if (next >= r) break;
        r = next;
    }
    if (iter == cap) r = root_binary_search(x, k, bit_seed);

    // Post-correction: enforce r^k <= x < (r+1)^k exactly.
    while (pow_int(r, k) > x) --r;
    while (pow_int(r + 1, k) <= x) ++r;
    return r;
}

BigInt int_root_ceil(const BigInt& x, unsigned long k) {
    if (k == 0) throw std::invalid_argument("int_root_ceil: k must be >= 1");
    if (sgn(x) == 0) return 0;
    BigInt r = int_root_floor(x, k);
    if (pow_int(r, k) != x) ++r;
    return r;
}

BigInt rational_root_floor(const BigInt& num, const BigInt& den, unsigned long k) {
    if (k == 0) throw std::invalid_argument("rational_root_floor: k must be >= 1");
    if (sgn(den) <= 0) throw std::domain_error("rational_root_floor: denominator must be positive");
    if (sgn(num) < 0) throw std::domain_error("rational_root_floor: negative radicand");
    // floor((num/den)^(1/k)) = floor(floor(num/den)^(1/k)); post-correct
    // against the defining product inequality anyway.
    BigInt r = int_root_floor(num / den, k);
    while (pow_int(r + 1, k) * den <= num) ++r;
    while (sgn(r) > 0 && pow_int(r, k) * den > num) --r;
    return r;
}

BigInt rational_root_ceil(const BigInt& num, const BigInt& den, unsigned long k) {
    if (sgn(num) == 0) return 0;
    BigInt r = rational_root_floor(num, den, k);
    if (pow_int(r, k) * den != num) ++r;
    return r;
}

BigInt pow_ratio_floor(const BigInt& i, unsigned long u, unsigned long v) {
    if (u == 0 || v == 0) throw std::invalid_argument("pow_ratio_floor: zero exponent part");
    const unsigned long g = std::gcd(u, v);
    u /= g;
    v /= g;
    if (v == 1) return pow_int(i, u);
    return int_root_floor(pow_int(i, u), v);
}

BigInt pow_ratio_ceil(const BigInt& i, unsigned long u, unsigned long v) {
    if (u == 0 || v == 0) throw std::invalid_argument("pow_ratio_ceil: zero exponent part");
    const unsigned long g = std::gcd(u, v);
    u /= g;
    v /= g;
    if (v == 1) return pow_int(i, u);
    return int_root_ceil(pow_int(i, u), v);
}

BigInt floor_pow(const BigInt& i, const ExponentA& a) {
    if (sgn(i) < 0) throw std::domain_error("floor_pow: negative base");
    return pow_ratio_floor(i, a.u, a.v);
}

BigInt ceil_pow(const BigInt& i, const ExponentA& a) {
    if (sgn(i) < 0) throw std::domain_error("ceil_pow: negative base");
    return pow_ratio_ceil(i, a.u, a.v);
}

}  // namespace floorzeta
