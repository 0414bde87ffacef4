#pragma once

#include <complex>

#include "floorzeta/exact.hpp"

namespace floorzeta {

using Complex = std::complex<double>;

struct ZetaResult {
    Complex value{0.0, 0.0};
    double est_error = 0.0;
    int n_used = 0;
    int k_used = 0;
};

// Hurwitz zeta(s, t) = sum_{n>=0} (n+t)^{-s} for Re(s) > 1, Re(t) > 0, by
// direct head summation plus Euler-Maclaurin tail correction. No analytic
// continuation: inputs outside the convergence half-planes are domain errors.
// est_error is the standard remainder bound plus a float-noise cushion and
// stays below 1e-12 * |value| on the supported grid.
ZetaResult hurwitz_zeta(Complex s, Complex t);

// zeta(s) = hurwitz_zeta(s, 1).
ZetaResult riemann_zeta(Complex s);

// Compensated (Kahan) accumulator for complex doubles; summation order is
// fixed by the callers, so results are bit-identical run to run.
class KahanSum {
  public:
    void add(Complex x) {
        add_part(x.real(), re_, re_c_);
        add_part(x.imag(), im_, im_c_);
    }
    Complex value() const { return {re_, im_}; }

  private:
    static void add_part(double x, double& sum, double& comp) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double re_ = 0.0, im_ = 0.0, re_c_ = 0.0, im_c_ = 0.0;
};

// Principal-branch z^{-s} with a fast real path (z > 0, s real).
Complex pow_neg_s(Complex z, Complex s);

}  // namespace floorzeta
