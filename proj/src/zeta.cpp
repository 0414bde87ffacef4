#include "floorzeta/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "floorzeta/bernoulli.hpp"

namespace floorzeta {

Complex pow_neg_s(Complex z, Complex s) {
    if (s.imag() == 0.0 && z.imag() == 0.0 && z.real() > 0.0)
        return {std::pow(z.real(), -s.real()), 0.0};
    return std::pow(z, -s);
}

namespace {

constexpr int kCorrectionTerms = 12;  // K in the Euler-Maclaurin tail

// B_{2j} / (2j)! for j = 1 .. K+1 (the last entry drives the remainder
// estimate), computed once from the exact Bernoulli table.
const std::array<double, kCorrectionTerms + 2>& b2j_over_factorial() {
    static const std::array<double, kCorrectionTerms + 2> table = [] {
        std::array<double, kCorrectionTerms + 2> t{};
        BigRat factorial(1);
        unsigned long m = 0;  // factorial == m!
        for (int j = 1; j <= kCorrectionTerms + 1; ++j) {
            while (m < 2UL * j) factorial *= BigRat(BigInt(++m));
            t[j] = BigRat(bernoulli_number(2UL * j) / factorial).get_d();
        }
        return t;
    }();
    return table;
}

void require_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error(std::string(who) + ": non-finite argument");
}

}  // namespace

ZetaResult hurwitz_zeta(Complex s, Complex t) {
    require_finite(s, "hurwitz_zeta");
    require_finite(t, "hurwitz_zeta");
    if (s.real() <= 1.0)
        throw std::domain_error("hurwitz_zeta: Re(s) must exceed 1 (no continuation)");
    if (t.real() <= 0.0) throw std::domain_error("hurwitz_zeta: Re(t) must be positive");

    // Head length: |N + t| >= max(10, |s|) keeps the correction series safely
    // in its asymptotic regime.
    const double target = std::max(10.0, std::abs(s));
    long n_head = std::lround(std::ceil(target - t.real()));
    if (n_head < 0) n_head = 0;
    if (n_head > 50'000'000) throw std::domain_error("hurwitz_zeta: |s| too large for this engine");

    KahanSum head;
    double abs_head = 0.0;
    for (long n = 0; n < n_head; ++n) {
        const Complex term = pow_neg_s(t + static_cast<double>(n), s);
        head.add(term);
        abs_head += std::abs(term);
    }

    const Complex z = t + static_cast<double>(n_head);
    const Complex z_pow = pow_neg_s(z, s);            // z^{-s}
    const Complex z_inv2 = 1.0 / (z * z);

    KahanSum tail;
    tail.add(z_pow * z / (s - 1.0));  // z^{1-s} / (s-1)
    tail.add(0.5 * z_pow);

    // Correction terms B_{2j}/(2j)! * (s)_{2j-1} * z^{-s-2j+1}, j = 1..K.
    const auto& b = b2j_over_factorial();
    Complex poch = s;              // rising product s(s+1)...(s+2j-2)
    Complex z_fac = z_pow / z;     // z^{-s-2j+1}
    for (int j = 1; j <= kCorrectionTerms; ++j) {
        tail.add(b[j] * poch * z_fac);
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        z_fac *= z_inv2;
    }

    ZetaResult out;
    out.value = head.value() + tail.value();
    out.n_used = static_cast<int>(n_head);
    out.k_used = kCorrectionTerms;

    // Remainder bound: |R_K| <= |first omitted term| * |(s+2K+1)/(sigma+2K+1)|,
    // plus a cushion for the floating-point accumulation itself.
    const double shift = 2.0 * kCorrectionTerms + 1.0;
    const double omitted = std::abs(b[kCorrectionTerms + 1]) * std::abs(poch) * std::abs(z_fac);
    const double amplify = std::abs(s + shift) / (s.real() + shift);
    const double eps = std::numeric_limits<double>::epsilon();
    out.est_error = omitted * amplify + 4.0 * eps * (abs_head + std::abs(out.value));
    return out;
}

ZetaResult riemann_zeta(Complex s) { return hurwitz_zeta(s, Complex{1.0, 0.0}); }

}  // namespace floorzeta
