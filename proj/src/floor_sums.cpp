#include "floorzeta/floor_sums.hpp"

#include <stdexcept>

namespace floorzeta {

namespace {

void require_positive(const BigInt& n, const char* who) {
    if (sgn(n) <= 0) throw std::domain_error(std::string(who) + ": n must be >= 1");
}

void require_power(unsigned long p, const char* who) {
    if (p == 0) throw std::domain_error(std::string(who) + ": p must be >= 1");
}

}  // namespace

ExactSumResult sum_floor_detail(const BigInt& n, const ExponentA& a) {
    require_positive(n, "sum_floor");
    if (a.is_one())  // Gauss value, O(1)
        return {faulhaber_sum(n, 1), SumMethod::ClosedForm, 0};
    const BigInt F = floor_pow(n, a);
    BigInt inner(0);
    std::uint64_t work = 1;  // the floor_pow above
    for (BigInt t = 1; t <= F; ++t, ++work) inner += pow_ratio_ceil(t, a.v, a.u);
    return {(n + 1) * F - inner, SumMethod::Formula, work};
}

BigInt sum_floor(const BigInt& n, const ExponentA& a) { return sum_floor_detail(n, a).value; }

ExactSumResult sum_ceil_detail(const BigInt& n, const ExponentA& a) {
    require_positive(n, "sum_ceil");
    if (a.is_one()) return {faulhaber_sum(n, 1), SumMethod::ClosedForm, 0};
    const BigInt C = ceil_pow(n, a);
    BigInt inner(0);
    std::uint64_t work = 2;  // ceil_pow above + boundary floor below
    for (BigInt t = 1; t <= C; ++t, ++work) inner += pow_ratio_floor(t, a.v, a.u);
    return {n * C + pow_ratio_floor(C, a.v, a.u) - inner, SumMethod::Formula, work};
}

BigInt sum_ceil(const BigInt& n, const ExponentA& a) { return sum_ceil_detail(n, a).value; }

ExactSumResult sum_floor_closed_detail(const BigInt& n, unsigned long q) {
    require_positive(n, "sum_floor_closed");
    if (q == 0) throw std::domain_error("sum_floor_closed: q must be >= 1");
    if (q == 1) return {faulhaber_sum(n, 1), SumMethod::ClosedForm, 0};
    const BigInt F = int_root_floor(n, q);
    // (B_{q+1}(F+1) - B_{q+1}(0)) / (q+1) == sum_{t<=F} t^q, exactly.
    return {(n + 1) * F - faulhaber_sum(F, q), SumMethod::ClosedForm, 1};
}

BigInt sum_floor_closed(const BigInt& n, unsigned long q) {
    return sum_floor_closed_detail(n, q).value;
}

ExactSumResult sum_ceil_closed_detail(const BigInt& n, unsigned long q) {
    require_positive(n, "sum_ceil_closed");
    if (q == 0) throw std::domain_error("sum_ceil_closed: q must be >= 1");
    if (q == 1) return {faulhaber_sum(n, 1), SumMethod::ClosedForm, 0};
    const BigInt C = int_root_ceil(n, q);
    return {n * C + pow_int(C, q) - faulhaber_sum(C, q), SumMethod::ClosedForm, 1};
}

BigInt sum_ceil_closed(const BigInt& n, unsigned long q) {
    return sum_ceil_closed_detail(n, q).value;
}

BigInt sqrt_poly_floor(const BigInt& n) {
    require_positive(n, "sqrt_poly_floor");
    const BigInt r = int_root_floor(n, 2);
    const BigInt num = 6 * n * r - 2 * r * r * r - 3 * r * r + 5 * r;
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 6))
        throw std::logic_error("sqrt_poly_floor: numerator not divisible by 6");
    return num / 6;
}

BigInt sqrt_poly_ceil(const BigInt& n) {
    require_positive(n, "sqrt_poly_ceil");
    const BigInt c = int_root_ceil(n, 2);
    const BigInt num = 6 * n * c - 2 * c * c * c + 3 * c * c - c;
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 6))
        throw std::logic_error("sqrt_poly_ceil: numerator not divisible by 6");
    return num / 6;
}

std::pair<BigInt, BigInt> diff_identity(const BigInt& n, const ExponentA& a) {
    require_positive(n, "diff_identity");
    BigInt lhs(0);
    for (BigInt i = 1; i <= n; ++i)
        lhs += 1 - (ceil_pow(i, a) - floor_pow(i, a));
    BigInt rhs(0);
    const BigInt F = floor_pow(n, a);
    for (BigInt t = 1; t <= F; ++t)
        rhs += 1 - (pow_ratio_ceil(t, a.v, a.u) - pow_ratio_floor(t, a.v, a.u));
    return {lhs, rhs};
}

std::pair<BigInt, BigInt> diff_identity_qform(const BigInt& n, unsigned long q) {
    require_positive(n, "diff_identity_qform");
    if (q == 0) throw std::domain_error("diff_identity_qform: q must be >= 1");
    BigInt lhs(0);
    for (BigInt i = 1; i <= n; ++i)
        lhs += pow_ratio_ceil(i, 1, q) - pow_ratio_floor(i, 1, q);
    return {lhs, n - int_root_floor(n, q)};
}

ExactSumResult gen_faulhaber_floor_detail(const BigInt& n, const ExponentA& a, unsigned long p) {
    require_positive(n, "gen_faulhaber_floor");
    require_power(p, "gen_faulhaber_floor");
    if (a.is_one()) return {faulhaber_sum(n, p), SumMethod::ClosedForm, 0};
    const BigInt T = floor_pow(n, a);
    BigInt acc(0);
    BigInt prev = pow_ratio_ceil(1, a.v, a.u);  // ceil(1^{1/a}) = 1
    std::uint64_t work = 2;                     // floor_pow + the seed ceil above
    for (BigInt t = 1; t <= T; ++t, ++work) {
        const BigInt next = pow_ratio_ceil(t + 1, a.v, a.u);
        acc += pow_int(t, p) * (next - prev);
        prev = next;
    }
    // prev is now ceil((T+1)^{1/a}); the boundary corrects the last run.
    return {acc + pow_int(T, p) * (n - prev + 1), SumMethod::Formula, work};
}

BigInt gen_faulhaber_floor(const BigInt& n, const ExponentA& a, unsigned long p) {
    return gen_faulhaber_floor_detail(n, a, p).value;
}

ExactSumResult gen_faulhaber_ceil_detail(const BigInt& n, const ExponentA& a, unsigned long p) {
    require_positive(n, "gen_faulhaber_ceil");
    require_power(p, "gen_faulhaber_ceil");
    if (a.is_one()) return {faulhaber_sum(n, p), SumMethod::ClosedForm, 0};
    const BigInt C = ceil_pow(n, a);
    BigInt acc(0);
    BigInt prev(0);  // floor(0^{1/a}) = 0
    std::uint64_t work = 1;
    for (BigInt t = 1; t <= C; ++t, ++work) {
        const BigInt cur = pow_ratio_floor(t, a.v, a.u);
        acc += pow_int(t, p) * (cur - prev);
        prev = cur;
    }
    // prev is now floor(C^{1/a}) = floor(ceil(n^a)^{1/a}).
    return {acc - (prev - n) * pow_int(C, p), SumMethod::Formula, work};
}

BigInt gen_faulhaber_ceil(const BigInt& n, const ExponentA& a, unsigned long p) {
    return gen_faulhaber_ceil_detail(n, a, p).value;
}

ExactSumResult gen_faulhaber_floor_closed_detail(const BigInt& n, unsigned long q,
                                                 unsigned long p) {
    require_positive(n, "gen_faulhaber_floor_closed");
    require_power(p, "gen_faulhaber_floor_closed");
    if (q == 0) throw std::domain_error("gen_faulhaber_floor_closed: q must be >= 1");
    if (q == 1) return {faulhaber_sum(n, p), SumMethod::ClosedForm, 0};
    const BigInt T = int_root_floor(n, q);
    // sum_{t<=T} t^p (ceil((t+1)^q) - ceil(t^q)) expands binomially: the
    // (t+1)^q - t^q difference contributes C(q,j) t^{p+j} for j = 0..q-1.
    BigInt acc(0);
    std::uint64_t work = 1;
    for (unsigned long j = 0; j < q; ++j, ++work)
        acc += binomial(q, j) * faulhaber_sum(T, p + j);
    return {acc + pow_int(T, p) * (n - pow_int(T + 1, q) + 1), SumMethod::ClosedForm, work};
}

BigInt gen_faulhaber_floor_closed(const BigInt& n, unsigned long q, unsigned long p) {
    return gen_faulhaber_floor_closed_detail(n, q, p).value;
}

ExactSumResult gen_faulhaber_ceil_closed_detail(const BigInt& n, unsigned long q,
                                                unsigned long p) {
    require_positive(n, "gen_faulhaber_ceil_closed");
    require_power(p, "gen_faulhaber_ceil_closed");
    if (q == 0) throw std::domain_error("gen_faulhaber_ceil_closed: q must be >= 1");
    if (q == 1) return {faulhaber_sum(n, p), SumMethod::ClosedForm, 0};
    const BigInt C = int_root_ceil(n, q);
    // t^q - (t-1)^q = sum_{j=0}^{q-1} (-1)^{q-j+1} C(q,j) t^j, so the t-sum
    // collapses to alternating binomial-weighted Faulhaber sums.
    BigInt acc(0);
    std::uint64_t work = 1;
    for (unsigned long j = 0; j < q; ++j, ++work) {
        const BigInt term = binomial(q, j) * faulhaber_sum(C, p + j);
        if ((q - j + 1) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return {acc - (pow_int(C, q) - n) * pow_int(C, p), SumMethod::ClosedForm, work};
}

BigInt gen_faulhaber_ceil_closed(const BigInt& n, unsigned long q, unsigned long p) {
    return gen_faulhaber_ceil_closed_detail(n, q, p).value;
}

ExactSumResult brute_sum(const BigInt& n, const ExponentA& a, unsigned long p, Flavor flavor,
                         std::uint64_t cap) {
    require_positive(n, "brute_sum");
    require_power(p, "brute_sum");
    if (n > BigInt(static_cast<unsigned long>(cap)))
        throw std::domain_error("brute_sum: n exceeds the oracle cap");
    BigInt acc(0);
    std::uint64_t work = 0;
    for (BigInt i = 1; i <= n; ++i, ++work) {
        const BigInt base = flavor == Flavor::Floor ? floor_pow(i, a) : ceil_pow(i, a);
        acc += p == 1 ? base : pow_int(base, p);
    }
    return {acc, SumMethod::Brute, work};
}

ExactSumResult evaluate_sum(const SumSpec& spec, SumMethod method) {
    switch (method) {
        case SumMethod::Formula:
            if (spec.p == 1)
                return spec.flavor == Flavor::Floor ? sum_floor_detail(spec.n, spec.a)
                                                    : sum_ceil_detail(spec.n, spec.a);
            return spec.flavor == Flavor::Floor
                       ? gen_faulhaber_floor_detail(spec.n, spec.a, spec.p)
                       : gen_faulhaber_ceil_detail(spec.n, spec.a, spec.p);
        case SumMethod::ClosedForm: {
            if (spec.a.u != 1)
                throw std::domain_error("closed form requires a = 1/q");
            const unsigned long q = spec.a.v;
            if (spec.p == 1)
                return spec.flavor == Flavor::Floor ? sum_floor_closed_detail(spec.n, q)
                                                    : sum_ceil_closed_detail(spec.n, q);
            return spec.flavor == Flavor::Floor
                       ? gen_faulhaber_floor_closed_detail(spec.n, q, spec.p)
                       : gen_faulhaber_ceil_closed_detail(spec.n, q, spec.p);
        }
        case SumMethod::Brute:
            return brute_sum(spec.n, spec.a, spec.p, spec.flavor);
    }
    throw std::logic_error("evaluate_sum: unknown method");
}

}  // namespace floorzeta
