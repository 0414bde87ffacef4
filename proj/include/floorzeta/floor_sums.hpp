#pragma once

#include <cstdint>
#include <utility>

#include "floorzeta/bernoulli.hpp"
#include "floorzeta/exact.hpp"

namespace floorzeta {

enum class Flavor { Floor, Ceiling };

enum class SumMethod { Formula, ClosedForm, Brute };

struct SumSpec {
    BigInt n;             // upper limit, >= 1
    ExponentA a;          // exponent in (0, 1]
    unsigned long p = 1;  // power on the floor/ceiling value, >= 1
    Flavor flavor = Flavor::Floor;
};

struct ExactSumResult {
    BigInt value;
    SumMethod method = SumMethod::Formula;
    // Loop iterations performed; for the formula paths each iteration does
    // exactly one root extraction, so this doubles as the work-bound counter.
    std::uint64_t work = 0;
};

// sum_{i=1}^{n} floor(i^a) via the identity
//   (n+1) floor(n^a) - sum_{t=1}^{floor(n^a)} ceil(t^{1/a});
// O(floor(n^a)) root extractions. a = 1 routes to the Gauss value directly.
ExactSumResult sum_floor_detail(const BigInt& n, const ExponentA& a);
BigInt sum_floor(const BigInt& n, const ExponentA& a);

// sum_{i=1}^{n} ceil(i^a) via
//   n ceil(n^a) + floor(ceil(n^a)^{1/a}) - sum_{t=1}^{ceil(n^a)} floor(t^{1/a}).
ExactSumResult sum_ceil_detail(const BigInt& n, const ExponentA& a);
BigInt sum_ceil(const BigInt& n, const ExponentA& a);

// Closed Bernoulli-polynomial forms for a = 1/q:
//   (n+1) floor(n^{1/q}) - (B_{q+1}(floor(n^{1/q})+1) - B_{q+1}(0)) / (q+1)
// and the ceiling analogue with the extra ceil(n^{1/q})^q term.
ExactSumResult sum_floor_closed_detail(const BigInt& n, unsigned long q);
ExactSumResult sum_ceil_closed_detail(const BigInt& n, unsigned long q);
BigInt sum_floor_closed(const BigInt& n, unsigned long q);
BigInt sum_ceil_closed(const BigInt& n, unsigned long q);

// The a = 1/2 sextic-coefficient polynomials:
//   (6n floor(sqrt n) - 2 floor(sqrt n)^3 - 3 floor(sqrt n)^2 + 5 floor(sqrt n)) / 6
// and (6n c - 2c^3 + 3c^2 - c) / 6 with c = ceil(sqrt n).
BigInt sqrt_poly_floor(const BigInt& n);
BigInt sqrt_poly_ceil(const BigInt& n);

// Both sides of sum_{i<=n} (1 - (ceil(i^a) - floor(i^a)))
//             = sum_{t<=floor(n^a)} (1 - (ceil(t^{1/a}) - floor(t^{1/a}))),
// each computed independently (they count the same perfect powers).
std::pair<BigInt, BigInt> diff_identity(const BigInt& n, const ExponentA& a);

// q-form corollary: sum_{i<=n} (ceil(i^{1/q}) - floor(i^{1/q})) vs n - floor(n^{1/q}).
std::pair<BigInt, BigInt> diff_identity_qform(const BigInt& n, unsigned long q);

// Generalized Faulhaber sums: exact sum_{i=1}^{n} floor(i^a)^p via
//   sum_{t=1}^{T} t^p (ceil((t+1)^{1/a}) - ceil(t^{1/a})) + T^p (n - ceil((T+1)^{1/a}) + 1),
// T = floor(n^a), and the ceiling analogue.
ExactSumResult gen_faulhaber_floor_detail(const BigInt& n, const ExponentA& a, unsigned long p);
ExactSumResult gen_faulhaber_ceil_detail(const BigInt& n, const ExponentA& a, unsigned long p);
BigInt gen_faulhaber_floor(const BigInt& n, const ExponentA& a, unsigned long p);
BigInt gen_faulhaber_ceil(const BigInt& n, const ExponentA& a, unsigned long p);

// Binomial-weighted Bernoulli closed forms of the above for a = 1/q.
ExactSumResult gen_faulhaber_floor_closed_detail(const BigInt& n, unsigned long q, unsigned long p);
ExactSumResult gen_faulhaber_ceil_closed_detail(const BigInt& n, unsigned long q, unsigned long p);
BigInt gen_faulhaber_floor_closed(const BigInt& n, unsigned long q, unsigned long p);
BigInt gen_faulhaber_ceil_closed(const BigInt& n, unsigned long q, unsigned long p);

// Literal term-by-term oracle; refuses n beyond the cap (oracle must stay
// desk-scale).
ExactSumResult brute_sum(const BigInt& n, const ExponentA& a, unsigned long p, Flavor flavor,
                         std::uint64_t cap = 10'000'000ULL);

// Dispatch by SumSpec + method (the CLI entry point).
ExactSumResult evaluate_sum(const SumSpec& spec, SumMethod method);

}  // namespace floorzeta
