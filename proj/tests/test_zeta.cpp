#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "floorzeta/zeta.hpp"

using namespace floorzeta;

namespace {

const double kPi = 3.14159265358979323846264338327950288;

bool bit_identical(Complex x, Complex y) {
    return std::memcmp(&x, &y, sizeof(Complex)) == 0;
}

std::vector<Complex> grid_s() {
    std::vector<Complex> out;
    for (double re : {1.5, 2.0, 3.0, 5.0, 8.0})
        for (double im : {0.0, 1.0, 10.0}) out.emplace_back(re, im);
    return out;
}

}  // namespace

TEST_CASE("classic values to 1e-12") {
    CHECK(std::abs(riemann_zeta(Complex(2, 0)).value - Complex(kPi * kPi / 6.0, 0)) <= 1e-12);
    CHECK(std::abs(riemann_zeta(Complex(4, 0)).value -
                   Complex(kPi * kPi * kPi * kPi / 90.0, 0)) <= 1e-12);
    // Apery's constant and zeta(1.5), 20+ digit references.
    CHECK(std::abs(riemann_zeta(Complex(3, 0)).value - Complex(1.2020569031595942854, 0)) <=
          1e-12);
    CHECK(std::abs(riemann_zeta(Complex(1.5, 0)).value - Complex(2.6123753486854883433, 0)) <=
          1e-11);
}

TEST_CASE("Hurwitz specializations with exact zeta relations") {
    // zeta(s, 1/2) = (2^s - 1) zeta(s).
    const auto half2 = hurwitz_zeta(Complex(2, 0), Complex(0.5, 0));
    CHECK(std::abs(half2.value - Complex(kPi * kPi / 2.0, 0)) <= 1e-12);
    const auto half3 = hurwitz_zeta(Complex(3, 0), Complex(0.5, 0));
    CHECK(std::abs(half3.value - 7.0 * riemann_zeta(Complex(3, 0)).value) <= 1e-11);
    // zeta(s, 2) = zeta(s) - 1.
    const auto at2 = hurwitz_zeta(Complex(2, 0), Complex(2, 0));
    CHECK(std::abs(at2.value - Complex(kPi * kPi / 6.0 - 1.0, 0)) <= 1e-12);
    // zeta(s, 1) is riemann_zeta bit for bit.
    for (Complex s : grid_s())
        CHECK(bit_identical(hurwitz_zeta(s, Complex(1, 0)).value, riemann_zeta(s).value));
}

TEST_CASE("shift identity holds to 1e-11 relative across the full grid") {
    for (Complex s : grid_s()) {
        for (double tv : {0.5, 1.0, 2.5}) {
            const Complex t(tv, 0.0);
            const auto zt = hurwitz_zeta(s, t);
            const auto zt1 = hurwitz_zeta(s, t + Complex(1, 0));
            const Complex head = pow_neg_s(t, s);
            const double residual = std::abs(zt1.value - (zt.value - head));
            CAPTURE(s.real());
            CAPTURE(s.imag());
            CAPTURE(tv);
            CHECK(residual <= 1e-11 * (1.0 + std::abs(zt.value)));
        }
    }
}

TEST_CASE("brute partial sum plus integral tail brackets the value (real s >= 3)") {
    const long N = 1'000'000;
    for (double sv : {3.0, 3.5, 5.0, 8.0}) {
        for (double tv : {0.5, 1.0, 2.5}) {
            KahanSum acc;
            for (long n = 0; n < N; ++n) acc.add(pow_neg_s(Complex(n + tv, 0), Complex(sv, 0)));
            const double partial = acc.value().real();
            const double edge = N + tv;
            const double tail_lo = std::pow(edge, 1.0 - sv) / (sv - 1.0);
            const double tail_hi = tail_lo + std::pow(edge, -sv);
            const double value = hurwitz_zeta(Complex(sv, 0), Complex(tv, 0)).value.real();
            const double cushion = 1e-12 * (1.0 + std::abs(value));
            CAPTURE(sv);
            CAPTURE(tv);
            CHECK(value >= partial + tail_lo - cushion);
            CHECK(value <= partial + tail_hi + cushion);
        }
    }
}

TEST_CASE("complex s agrees with brute summation within the absolute tail bound") {
    const long N = 200'000;
    for (Complex s : {Complex(3, 1), Complex(5, 10), Complex(8, 1)}) {
        KahanSum acc;
        for (long n = 0; n < N; ++n) acc.add(pow_neg_s(Complex(n + 1.0, 0), s));
        const double sigma = s.real();
        const double tail = std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0) +
                            std::pow(static_cast<double>(N), -sigma);
        const Complex value = riemann_zeta(s).value;
        CAPTURE(s.real());
        CAPTURE(s.imag());
        CHECK(std::abs(value - acc.value()) <= tail + 1e-12 * (1.0 + std::abs(value)));
    }
}

TEST_CASE("reported est_error dominates the observed error at known points") {
    struct Ref {
        Complex s, t;
        double expected;
    };
    const std::vector<Ref> refs = {
        {Complex(2, 0), Complex(1, 0), kPi * kPi / 6.0},
        {Complex(4, 0), Complex(1, 0), kPi * kPi * kPi * kPi / 90.0},
        {Complex(2, 0), Complex(0.5, 0), kPi * kPi / 2.0},
        {Complex(3, 0), Complex(1, 0), 1.2020569031595942854},
    };
    for (const auto& r : refs) {
        const auto z = hurwitz_zeta(r.s, r.t);
        CHECK(std::abs(z.value - Complex(r.expected, 0)) <= z.est_error + 1e-15);
    }
    // And the advertised grid-wide relative error budget.
    for (Complex s : grid_s())
        for (double tv : {0.5, 1.0, 2.5}) {
            const auto z = hurwitz_zeta(s, Complex(tv, 0));
            CHECK(z.est_error <= 1e-12 * (1.0 + std::abs(z.value)));
        }
}

TEST_CASE("identical inputs give bit-identical outputs") {
    for (Complex s : grid_s()) {
        for (double tv : {0.5, 1.0, 2.5}) {
            const auto a = hurwitz_zeta(s, Complex(tv, 0));
            const auto b = hurwitz_zeta(s, Complex(tv, 0));
            CHECK(bit_identical(a.value, b.value));
            CHECK(a.est_error == b.est_error);
            CHECK(a.n_used == b.n_used);
            CHECK(a.k_used == b.k_used);
        }
    }
}

TEST_CASE("convergence half-planes are enforced, never continued") {
    CHECK_THROWS_AS(riemann_zeta(Complex(1, 0)), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(Complex(0.5, 14.13)), std::domain_error);
    CHECK_THROWS_AS(riemann_zeta(Complex(1, 10)), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(2, 0), Complex(0, 0)), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(2, 0), Complex(-1, 0)), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(0.99, 0), Complex(1, 0)), std::domain_error);
    CHECK_NOTHROW(hurwitz_zeta(Complex(1.0000001, 0), Complex(0.0000001, 0)));
}

TEST_CASE("pow_neg_s: fast real path equals the principal branch") {
    for (double z : {0.5, 1.0, 2.0, 10.0, 12345.678}) {
        for (double sv : {1.5, 2.0, 8.0}) {
            CHECK(pow_neg_s(Complex(z, 0), Complex(sv, 0)).real() ==
                  doctest::Approx(std::pow(z, -sv)).epsilon(1e-14));
            CHECK(pow_neg_s(Complex(z, 0), Complex(sv, 0)).imag() == 0.0);
        }
        // Complex exponent against the direct exp(-s log z) evaluation.
        const Complex s(2.5, 3.0);
        const Complex direct = std::exp(-s * std::log(Complex(z, 0)));
        CHECK(std::abs(pow_neg_s(Complex(z, 0), s) - direct) <= 1e-14 * std::abs(direct));
    }
}

TEST_CASE("KahanSum keeps rounding error flat in the term count") {
    // Summing 0.1 ten million times: the compensated error stays at ulp
    // scale instead of growing like sqrt(n) or n.
    KahanSum tenth;
    for (int i = 0; i < 10'000'000; ++i) tenth.add(Complex(0.1, 0));
    CHECK(std::abs(tenth.value().real() - 1e6) <= 1e-9);

    // A decreasing zeta-style series against a long-double accumulator.
    KahanSum acc;
    long double ref = 0.0L;
    for (long n = 0; n < 1'000'000; ++n) {
        const double term = 1.0 / ((n + 0.5) * (n + 0.5));
        acc.add(Complex(term, 0));
        ref += static_cast<long double>(term);
    }
    CHECK(std::abs(acc.value().real() - static_cast<double>(ref)) <=
          5e-16 * static_cast<double>(ref));
}
