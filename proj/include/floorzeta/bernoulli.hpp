#pragma once

#include <mutex>
#include <vector>

#include "floorzeta/exact.hpp"

namespace floorzeta {

// Exact Bernoulli numbers and polynomials over rationals.
//
// Two sign conventions coexist in the literature (B_1 = +-1/2). The number
// accessor bernoulli_number exposes B_1 = +1/2; polynomials follow the
// standard convention pinned by the Faulhaber identity
//     sum_{i=1}^{n} i^q = (B_{q+1}(n+1) - B_{q+1}(0)) / (q+1),
// which is what every downstream closed form consumes. Internally the cache
// stores the polynomial-convention constants (B_1 = -1/2); the two families
// differ only in the sign of the j = 1 entry.
class BernoulliCache {
  public:
    static BernoulliCache& instance();

    BigRat number_polyconv(unsigned long j);        // B_j with B_1 = -1/2
    std::vector<BigRat> poly_row(unsigned long n);  // coeffs of B_n(x), ascending powers

  private:
    BernoulliCache() = default;
    void ensure_locked(unsigned long j);

    // Entries are write-once and fills are idempotent; values leave by copy,
    // so callers never observe mutation.
    std::mutex mu_;
    std::vector<BigRat> table_;
    std::vector<std::vector<BigRat>> rows_;
};

// B_j with B_1 = +1/2, memoized recurrence.
BigRat bernoulli_number(unsigned long j);

// B_j evaluated literally from the explicit double sum
//   B_j = sum_{k=0}^{j} 1/(k+1) sum_{t=0}^{k} (-1)^t (t+1)^j C(k,t)
// (also the +1/2 convention). O(j^2) big-rational work; oracle only.
BigRat bernoulli_number_double_sum(unsigned long j);

// B_n(x) under the polynomial convention (B_2(x) = x^2 - x + 1/6, ...).
BigRat bernoulli_poly_eval(unsigned long n, const BigRat& x);

// Exact sum_{i=1}^{n} i^q via the Bernoulli closed form; throws
// std::logic_error if the rational quotient is not an integer (which would
// signal a convention bug, not a user error).
BigInt faulhaber_sum(const BigInt& n, unsigned long q);

}  // namespace floorzeta
