#include "floorzeta/bernoulli.hpp"

#include <stdexcept>

namespace floorzeta {

BernoulliCache& BernoulliCache::instance() {
    static BernoulliCache cache;
    return cache;
}

void BernoulliCache::ensure_locked(unsigned long j) {
    if (table_.empty()) table_.push_back(BigRat(1));
    // Recurrence for the polynomial convention (B_1 = -1/2):
    //   B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k.
    while (table_.size() <= j) {
        const unsigned long n = table_.size();
        BigRat acc(0);
        for (unsigned long k = 0; k < n; ++k) {
            if (sgn(table_[k]) == 0) continue;
            acc += BigRat(binomial(n + 1, k)) * table_[k];
        }
        table_.push_back(-acc / BigRat(BigInt(n) + 1));
    }
}

BigRat BernoulliCache::number_polyconv(unsigned long j) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(j);
    return table_[j];
}

std::vector<BigRat> BernoulliCache::poly_row(unsigned long n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(n);
    while (rows_.size() <= n) {
        const unsigned long d = rows_.size();
        // B_d(x) = sum_{k=0}^{d} C(d,k) B_{d-k} x^k, ascending in k.
        std::vector<BigRat> row(d + 1);
        for (unsigned long k = 0; k <= d; ++k)
            row[k] = BigRat(binomial(d, k)) * table_[d - k];
        rows_.push_back(std::move(row));
    }
    return rows_[n];
}

BigRat bernoulli_number(unsigned long j) {
    BigRat b = BernoulliCache::instance().number_polyconv(j);
    if (j == 1) b = -b;  // paper convention: B_1 = +1/2
    return b;
}

BigRat bernoulli_number_double_sum(unsigned long j) {
    BigRat total(0);
    for (unsigned long k = 0; k <= j; ++k) {
        BigInt inner(0);
        for (unsigned long t = 0; t <= k; ++t) {
            BigInt term = binomial(k, t) * pow_int(BigInt(t) + 1, j);
            if (t % 2 == 0)
                inner += term;
            else
                inner -= term;
        }
        total += make_rat(inner, BigInt(k) + 1);
    }
    return total;
}

BigRat bernoulli_poly_eval(unsigned long n, const BigRat& x) {
    const std::vector<BigRat> row = BernoulliCache::instance().poly_row(n);
    // Horner from the top coefficient down.
    BigRat acc = row[n];
    for (unsigned long k = n; k-- > 0;) acc = acc * x + row[k];
    return acc;
}

BigInt faulhaber_sum(const BigInt& n, unsigned long q) {
    if (sgn(n) < 0) throw std::domain_error("faulhaber_sum: n must be >= 0");
    if (sgn(n) == 0) return 0;
    // q = 0 counts terms; the Bernoulli form below would add the i = 0 term
    // (0^0 = 1) and give n + 1.
    if (q == 0) return n;
    const BigRat upper = bernoulli_poly_eval(q + 1, BigRat(n + 1));
    const BigRat lower = BernoulliCache::instance().number_polyconv(q + 1);  // B_{q+1}(0)
    const BigRat value = (upper - lower) / BigRat(BigInt(q) + 1);
    if (value.get_den() != 1)
        throw std::logic_error("faulhaber_sum: non-integer result (Bernoulli convention bug)");
    return value.get_num();
}

}  // namespace floorzeta
