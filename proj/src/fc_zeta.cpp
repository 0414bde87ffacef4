#include "floorzeta/fc_zeta.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>

namespace floorzeta {

namespace {

double to_double(const BigInt& x) { return x.get_d(); }

double to_double(const BigRat& x) { return x.get_d(); }

Complex cpow_uint(Complex base, unsigned long e) {
    Complex acc{1.0, 0.0};
    for (unsigned long i = 0; i < e; ++i) acc *= base;
    return acc;
}

void require_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error(std::string(who) + ": non-finite argument");
}

// |z^{-s}| <= |z|^{-Re(s)} * e^{|Im(s)| pi/2} for Re(z) > 0; the exponential
// factor enters every definition-form tail bound with complex s.
double im_s_factor(Complex s) {
    if (s.imag() == 0.0) return 1.0;
    return std::exp(std::abs(s.imag()) * 1.5707963267948966);
}

// Walks maximal runs of consecutive n in [n_start, n_end] sharing one
// floor/ceiling value of (b n)^a, in ascending order. emit(value, count) is
// called once per nonempty run; value indices with zero count are skipped in
// O(1) by recomputing the value at the next unprocessed n.
class RunWalker {
  public:
    RunWalker(Flavor flavor, const ExponentA& a, const BigRat& b)
        : flavor_(flavor), u_(a.u), v_(a.v) {
        pb_u_ = pow_int(b.get_num(), u_);
        qb_u_ = pow_int(b.get_den(), u_);
    }

    // floor((b n)^a) or ceil((b n)^a): (b n)^{u/v} = ((pb n)^u / qb^u)^{1/v}.
    BigInt value_at(const BigInt& n) const {
        const BigInt num = pb_u_ * pow_int(n, u_);
        return flavor_ == Flavor::Floor ? rational_root_floor(num, qb_u_, v_)
                                        : rational_root_ceil(num, qb_u_, v_);
    }

    // Floor flavor: smallest n with value >= m, i.e. ceil(m^{v/u} qb/pb).
    // Ceiling flavor: largest n with value <= k, i.e. floor(k^{v/u} qb/pb).
    BigInt run_boundary(const BigInt& idx) const {
        const BigInt num = pow_int(idx, v_) * qb_u_;
        return flavor_ == Flavor::Floor ? rational_root_ceil(num, pb_u_, u_)
                                        : rational_root_floor(num, pb_u_, u_);
    }

    void walk(const BigInt& n_start, const BigInt& n_end,
              const std::function<void(const BigInt&, const BigInt&)>& emit) const {
        BigInt cur = n_start;
        while (cur <= n_end) {
            const BigInt idx = value_at(cur);
            BigInt hi;
            if (flavor_ == Flavor::Floor) {
                hi = run_boundary(idx + 1) - 1;  // last n with value == idx
            } else {
                hi = run_boundary(idx);
            }
            if (hi > n_end) hi = n_end;
            emit(idx, hi - cur + 1);
            cur = hi + 1;
        }
    }

  private:
    Flavor flavor_;
    unsigned long u_, v_;
    BigInt pb_u_, qb_u_;
};

BigInt parse_budget_env(const char* value) {
    try {
        const BigInt n(value);
        if (sgn(n) <= 0) throw std::invalid_argument("nonpositive");
        return n;
    } catch (const std::invalid_argument&) {
        throw std::domain_error(std::string("FLOORZETA_TERM_BUDGET: invalid value '") + value +
                                "'");
    }
}

// Smallest budget in [1, 2^130) whose predicate holds; the predicate must be
// monotone (false ... false true ... true).
BigInt solve_monotone_budget(const std::function<bool(const BigInt&)>& ok) {
    BigInt hi = 1;
    const BigInt limit = BigInt(1) << 130;
    while (!ok(hi)) {
        hi *= 2;
        if (hi > limit)
            throw std::domain_error("budget solver: no attainable budget for this target");
    }
    BigInt lo = hi / 2 + 1;
    if (hi == 1) return hi;
    while (lo < hi) {
        const BigInt mid = lo + (hi - lo) / 2;
        if (ok(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

}  // namespace

void validate(const FCZetaSpec& spec) {
    require_finite(spec.s, "fc_zeta");
    require_finite(spec.t, "fc_zeta");
    if (sgn(spec.b) <= 0) throw std::domain_error("fc_zeta: b must be positive");
    if (spec.t.real() <= 0.0) throw std::domain_error("fc_zeta: Re(t) must be positive");
    // Convergence: Re(s) > 1/a = v/u.
    if (spec.s.real() * static_cast<double>(spec.a.u) <= static_cast<double>(spec.a.v))
        throw std::domain_error("fc_zeta: Re(s) must exceed 1/a");
    if (spec.convention == Convention::Reduced) {
        if (spec.t != Complex{1.0, 0.0})
            throw std::domain_error("fc_zeta: reduced convention requires t = 1");
        if (spec.flavor == Flavor::Floor && spec.b < 1)
            throw std::domain_error(
                "fc_zeta: reduced floor series requires b >= 1 (floor value 0 gives pole terms)");
    }
}

BigInt scaled_pow_ceil(const BigInt& m, const ExponentA& a, const BigRat& b) {
    if (sgn(m) < 0) throw std::domain_error("scaled_pow_ceil: negative index");
    return rational_root_ceil(pow_int(m, a.v) * pow_int(b.get_den(), a.u),
                              pow_int(b.get_num(), a.u), a.u);
}

BigInt scaled_pow_floor(const BigInt& k, const ExponentA& a, const BigRat& b) {
    if (sgn(k) < 0) throw std::domain_error("scaled_pow_floor: negative index");
    return rational_root_floor(pow_int(k, a.v) * pow_int(b.get_den(), a.u),
                               pow_int(b.get_num(), a.u), a.u);
}

BigInt rep_count_floor(const BigInt& m, const ExponentA& a, const BigRat& b) {
    if (sgn(m) <= 0) throw std::domain_error("rep_count_floor: m must be >= 1");
    if (sgn(b) <= 0) throw std::domain_error("rep_count_floor: b must be positive");
    return scaled_pow_ceil(m + 1, a, b) - scaled_pow_ceil(m, a, b);
}

BigInt rep_count_ceil(const BigInt& k, const ExponentA& a, const BigRat& b) {
    if (sgn(k) <= 0) throw std::domain_error("rep_count_ceil: k must be >= 1");
    if (sgn(b) <= 0) throw std::domain_error("rep_count_ceil: b must be positive");
    return scaled_pow_floor(k, a, b) - scaled_pow_floor(k - 1, a, b);
}

BigInt lead_count_floor(const BigRat& b) {
    if (sgn(b) <= 0) throw std::domain_error("lead_count_floor: b must be positive");
    // ceil(1/b) = ceil(den/num)
    BigInt q, r;
    mpz_cdiv_q(q.get_mpz_t(), b.get_den().get_mpz_t(), b.get_num().get_mpz_t());
    return q;
}

double direct_tail_bound(const FCZetaSpec& spec, const BigInt& n_budget, bool* valid) {
    const double sigma = spec.s.real();
    const double a_d = static_cast<double>(spec.a.u) / static_cast<double>(spec.a.v);
    const double a_sigma = a_d * sigma;
    const double n_d = to_double(n_budget);
    bool ok = sgn(n_budget) > 0 && a_sigma > 1.0;
    if (ok) {
        // Contract threshold (b N)^a >= 2, checked exactly: (pb N)^u >= 2^v qb^u.
        const BigInt lhs = pow_int(spec.b.get_num() * n_budget, spec.a.u);
        const BigInt rhs = pow_int(BigInt(2), spec.a.v) * pow_int(spec.b.get_den(), spec.a.u);
        ok = lhs >= rhs;
    }
    if (valid) *valid = ok;
    if (!ok) return std::numeric_limits<double>::infinity();
    // floor((bn)^a) + Re(t) >= (bn)^a / 2 once (bn)^a >= 2 (ceiling: ceil >= x
    // >= x/2 unconditionally), so the remainder is below
    //   2^sigma b^{-a sigma} N^{1 - a sigma} / (a sigma - 1),
    // times the usual e^{|Im s| pi/2} factor when the offset makes terms complex.
    double bound = std::pow(2.0, sigma) * std::pow(to_double(spec.b), -a_sigma) *
                   std::pow(n_d, 1.0 - a_sigma) / (a_sigma - 1.0);
    if (spec.convention == Convention::Definition) bound *= im_s_factor(spec.s);
    return bound;
}

double equivalent_tail_bound(const FCZetaSpec& spec, const BigInt& m_budget) {
    if (sgn(m_budget) <= 0) return std::numeric_limits<double>::infinity();
    const double sigma = spec.s.real();
    const double a_d = static_cast<double>(spec.a.u) / static_cast<double>(spec.a.v);
    const double inv_a = 1.0 / a_d;
    const double m_d = to_double(m_budget);
    // Coefficients obey f(m) <= (1/a)(m+1)^{1/a-1}/b + 2 (same for g), so the
    // remainder splits into two integral-test pieces.
    const double c1 = std::pow(2.0, inv_a - 1.0) / (a_d * to_double(spec.b));
    double bound = c1 * std::pow(m_d, inv_a - sigma) / (sigma - inv_a) +
                   2.0 * std::pow(m_d, 1.0 - sigma) / (sigma - 1.0);
    if (spec.convention == Convention::Definition) bound *= im_s_factor(spec.s);
    return bound;
}

SeriesEval fc_zeta_direct(const FCZetaSpec& spec, const BigInt& n_budget) {
    validate(spec);
    const BigInt n_start = spec.convention == Convention::Definition ? 0 : 1;
    const bool reduced = spec.convention == Convention::Reduced;

    KahanSum acc;
    const RunWalker walker(spec.flavor, spec.a, spec.b);
    if (n_budget >= n_start) {
        walker.walk(n_start, n_budget, [&](const BigInt& idx, const BigInt& count) {
            const double idx_d = to_double(idx);
            const Complex term = reduced ? pow_neg_s(Complex{idx_d, 0.0}, spec.s)
                                         : pow_neg_s(spec.t + idx_d, spec.s);
            acc.add(to_double(count) * term);
        });
    }

    SeriesEval out;
    out.value = acc.value();
    out.terms_used = n_budget >= n_start ? n_budget - n_start + 1 : BigInt(0);
    out.tail_bound = direct_tail_bound(spec, n_budget, &out.tail_valid);
    out.method = SeriesMethod::Direct;
    return out;
}

SeriesEval fc_zeta_equivalent(const FCZetaSpec& spec, const BigInt& m_budget) {
    validate(spec);
    const bool reduced = spec.convention == Convention::Reduced;
    const bool floor_flavor = spec.flavor == Flavor::Floor;

    // Run boundaries: prev = ceil(m^{1/a}/b) (floor) or floor(k^{1/a}/b)
    // (ceiling); consecutive differences are the repetition counts, including
    // the index-0 coefficient ceil(1/b) (floor) / 1 (ceiling).
    KahanSum acc;
    BigInt terms(0);
    const BigInt start_idx = reduced ? 1 : 0;
    BigInt prev = floor_flavor ? scaled_pow_ceil(start_idx, spec.a, spec.b)
                               : scaled_pow_floor(start_idx - (start_idx > 0 ? 1 : 0), spec.a,
                                                  spec.b);
    for (BigInt idx = start_idx; idx <= m_budget; ++idx, ++terms) {
        BigInt coeff;
        if (floor_flavor) {
            const BigInt next = scaled_pow_ceil(idx + 1, spec.a, spec.b);
            coeff = next - prev;
            prev = next;
        } else if (sgn(idx) == 0) {
            coeff = 1;  // the n = 0 term of the definition series
        } else {
            const BigInt cur = scaled_pow_floor(idx, spec.a, spec.b);
            coeff = cur - prev;
            prev = cur;
        }
        if (sgn(coeff) == 0) continue;
        const double idx_d = to_double(idx);
        const Complex term = reduced ? pow_neg_s(Complex{idx_d, 0.0}, spec.s)
                                     : pow_neg_s(spec.t + idx_d, spec.s);
        acc.add(to_double(coeff) * term);
    }

    SeriesEval out;
    out.value = acc.value();
    out.terms_used = terms;
    out.tail_bound = equivalent_tail_bound(spec, m_budget);
    out.tail_valid = std::isfinite(out.tail_bound);
    out.method = SeriesMethod::Equivalent;
    return out;
}

SeriesEval fc_zeta_reduced_direct(Flavor flavor, unsigned long q, const BigRat& b, Complex s,
                                  const BigInt& n_budget) {
    if (q == 0) throw std::domain_error("fc_zeta_reduced_direct: q must be >= 1");
    FCZetaSpec spec;
    spec.flavor = flavor;
    spec.a = ExponentA(1, q);
    spec.b = b;
    spec.s = s;
    spec.convention = Convention::Reduced;
    return fc_zeta_direct(spec, n_budget);
}

namespace {

ZetaResult combine_zeta_terms(
    unsigned long count, const std::function<Complex(unsigned long)>& coeff,
    const std::function<ZetaResult(unsigned long)>& zeta_term) {
    ZetaResult out;
    KahanSum acc;
    for (unsigned long m = 0; m < count; ++m) {
        const Complex c = coeff(m);
        if (c == Complex{0.0, 0.0}) continue;
        const ZetaResult z = zeta_term(m);
        acc.add(c * z.value);
        out.est_error += std::abs(c) * z.est_error;
        out.n_used = std::max(out.n_used, z.n_used);
        out.k_used = std::max(out.k_used, z.k_used);
    }
    out.value = acc.value();
    out.est_error += 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
    return out;
}

void require_closed_domain(unsigned long q, Complex s, Complex t, const char* who) {
    require_finite(s, who);
    require_finite(t, who);
    if (q == 0) throw std::domain_error(std::string(who) + ": q must be >= 1");
    if (s.real() <= static_cast<double>(q))
        throw std::domain_error(std::string(who) + ": Re(s) must exceed q");
    if (t.real() <= 0.0) throw std::domain_error(std::string(who) + ": Re(t) must be positive");
}

}  // namespace

ZetaResult fzeta_closed(unsigned long q, Complex s, Complex t) {
    require_closed_domain(q, s, t, "fzeta_closed");
    return combine_zeta_terms(
        q,
        [&](unsigned long m) {
            Complex c{0.0, 0.0};
            for (unsigned long k = m; k < q; ++k)
                c += to_double(BigInt(binomial(q, m) * binomial(q, q - k - 1))) *
                     cpow_uint(-t, q - k - 1);
            return c;
        },
        [&](unsigned long m) { return hurwitz_zeta(s - static_cast<double>(m), t); });
}

ZetaResult czeta_closed(unsigned long q, Complex s, Complex t) {
    require_closed_domain(q, s, t, "czeta_closed");
    return combine_zeta_terms(
        q,
        [&](unsigned long m) {
            Complex c{0.0, 0.0};
            for (unsigned long k = m; k < q; ++k)
                c += to_double(BigInt(binomial(q, m) * binomial(q, q - k - 1))) * cpow_uint(t, q - k - 1);
            const double sign = (q - m + 1) % 2 == 0 ? 1.0 : -1.0;
            return sign * c;
        },
        [&](unsigned long m) { return hurwitz_zeta(s - static_cast<double>(m), t); });
}

ZetaResult fzeta_reduced_closed(unsigned long q, Complex s) {
    require_closed_domain(q, s, Complex{1.0, 0.0}, "fzeta_reduced_closed");
    return combine_zeta_terms(
        q, [&](unsigned long m) { return Complex{to_double(binomial(q, m)), 0.0}; },
        [&](unsigned long m) { return riemann_zeta(s - static_cast<double>(m)); });
}

ZetaResult czeta_reduced_closed(unsigned long q, Complex s) {
    require_closed_domain(q, s, Complex{1.0, 0.0}, "czeta_reduced_closed");
    return combine_zeta_terms(
        q,
        [&](unsigned long m) {
            const double sign = (q - m + 1) % 2 == 0 ? 1.0 : -1.0;
            return Complex{sign * to_double(binomial(q, m)), 0.0};
        },
        [&](unsigned long m) { return riemann_zeta(s - static_cast<double>(m)); });
}

ZetaResult pole_difference_reduced(unsigned long q) {
    if (q < 2) throw std::domain_error("pole_difference_reduced: q must be >= 2");
    return combine_zeta_terms(
        q - 1,
        [&](unsigned long j) {
            const double parity = (q - j) % 2 == 0 ? 2.0 : 0.0;  // 1 + (-1)^{q-j}
            return Complex{parity * to_double(binomial(q, j)), 0.0};
        },
        [&](unsigned long j) {
            return riemann_zeta(Complex{static_cast<double>(q - j), 0.0});
        });
}

ZetaResult pole_difference_definition(unsigned long q, Complex t) {
    if (q < 2) throw std::domain_error("pole_difference_definition: q must be >= 2");
    require_finite(t, "pole_difference_definition");
    if (t.real() <= 0.0)
        throw std::domain_error("pole_difference_definition: Re(t) must be positive");
    return combine_zeta_terms(
        q - 1,
        [&](unsigned long m) {
            Complex c{0.0, 0.0};
            const double outer_sign = (q - m) % 2 == 0 ? 1.0 : -1.0;  // (-1)^{q-m}
            for (unsigned long k = m; k + 1 < q; ++k) {
                const double cc = to_double(BigInt(binomial(q, m) * binomial(q, q - k - 1)));
                c += cc * (cpow_uint(-t, q - k - 1) + outer_sign * cpow_uint(t, q - k - 1));
            }
            return c;
        },
        [&](unsigned long m) { return hurwitz_zeta(Complex{static_cast<double>(q - m), 0.0}, t); });
}

namespace {

// Every pole-difference run obeys count * |delta| <= q^2 2^{q-1} m^{-2}, so
// the remainder past the last complete run (index M0 = floor(N^{1/q})) is
// below q^2 2^{q-1} / (M0 - 1). Valid once M0 >= 2.
double pole_tail_bound_impl(unsigned long q, const BigInt& n_budget, bool* valid) {
    if (q < 2 || q > 6) throw std::domain_error("pole difference: q must be in [2, 6]");
    bool ok = sgn(n_budget) > 0;
    double m_top = 0.0;
    if (ok) {
        m_top = to_double(int_root_floor(n_budget, q));
        ok = m_top >= 2.0;
    }
    if (valid) *valid = ok;
    if (!ok) return std::numeric_limits<double>::infinity();
    return static_cast<double>(q) * static_cast<double>(q) *
           std::pow(2.0, static_cast<double>(q - 1)) / (m_top - 1.0);
}

// Shared runs core for the two pole-difference partial sums. q is small and
// the run index fits comfortably in 64 bits, so the hot loop stays in
// machine integers; only the clipped final run touches BigInt. run_term
// receives the run index m plus the exact powers m^q and (m+1)^q.
template <typename RunTerm>
SeriesEval pole_lhs_runs(unsigned long q, const BigInt& n_budget, const RunTerm& run_term) {
    SeriesEval out;
    out.method = SeriesMethod::Direct;
    out.tail_bound = pole_tail_bound_impl(q, n_budget, &out.tail_valid);
    out.terms_used = sgn(n_budget) > 0 ? n_budget : BigInt(0);
    if (sgn(n_budget) <= 0) return out;

    const BigInt m_last = int_root_floor(n_budget, q);  // partial run index
    // (m+1)^q must fit in unsigned __int128.
    const BigInt m_cap(std::pow(2.0, 127.0 / static_cast<double>(q)) * 0.99);
    if (m_last > m_cap)
        throw std::domain_error("pole difference: budget beyond supported run range");
    const unsigned long m_top = m_last.get_ui();

    KahanSum acc;
    // Full runs m = 1 .. m_top-1: the n strictly between m^q and (m+1)^q.
    unsigned __int128 lo = 1;
    for (unsigned long m = 1; m < m_top; ++m) {
        unsigned __int128 hi = 1;
        for (unsigned long i = 0; i < q; ++i) hi *= (m + 1);
        const double count = static_cast<double>(hi - lo - 1);
        if (count > 0.0)
            acc.add(count * run_term(static_cast<double>(m), static_cast<double>(lo),
                                     static_cast<double>(hi)));
        lo = hi;
    }
    // Clipped run at m_top: n in (m_top^q, N].
    if (m_top >= 1) {
        const BigInt partial = n_budget - pow_int(m_last, q);
        if (sgn(partial) > 0) {
            unsigned __int128 hi = 1;
            for (unsigned long i = 0; i < q; ++i) hi *= (m_top + 1);
            acc.add(to_double(partial) * run_term(static_cast<double>(m_top),
                                                  static_cast<double>(lo),
                                                  static_cast<double>(hi)));
        }
    }
    out.value = acc.value();
    return out;
}

}  // namespace

double pole_reduced_tail_bound(unsigned long q, const BigInt& n_budget, bool* valid) {
    return pole_tail_bound_impl(q, n_budget, valid);
}

double pole_definition_tail_bound(unsigned long q, const BigInt& n_budget, bool* valid) {
    return pole_tail_bound_impl(q, n_budget, valid);
}

SeriesEval pole_difference_reduced_lhs(unsigned long q, const BigInt& n_budget) {
    return pole_lhs_runs(q, n_budget, [](double, double lo_pow, double hi_pow) {
        return Complex{1.0 / lo_pow - 1.0 / hi_pow, 0.0};
    });
}

SeriesEval pole_difference_definition_lhs(unsigned long q, Complex t, const BigInt& n_budget) {
    require_finite(t, "pole_difference_definition_lhs");
    if (t.real() <= 0.0)
        throw std::domain_error("pole_difference_definition_lhs: Re(t) must be positive");
    // s = q is a small integer, so x^{-q} is a handful of multiplications.
    if (t.imag() == 0.0) {
        const double tr = t.real();
        return pole_lhs_runs(q, n_budget, [q, tr](double m, double, double) {
            double plo = 1.0, phi = 1.0;
            const double xlo = tr + m, xhi = tr + m + 1.0;
            for (unsigned long i = 0; i < q; ++i) {
                plo *= xlo;
                phi *= xhi;
            }
            return Complex{1.0 / phi - 1.0 / plo, 0.0};
        });
    }
    return pole_lhs_runs(q, n_budget, [q, t](double m, double, double) {
        return 1.0 / cpow_uint(t + (m + 1.0), q) - 1.0 / cpow_uint(t + m, q);
    });
}

BigInt solve_direct_budget(const FCZetaSpec& spec, double eps) {
    validate(spec);
    if (!(eps > 0.0)) throw std::domain_error("solve_direct_budget: eps must be positive");
    return solve_monotone_budget([&](const BigInt& n) {
        bool ok = false;
        const double bound = direct_tail_bound(spec, n, &ok);
        return ok && bound <= eps;
    });
}

BigInt solve_equivalent_budget(const FCZetaSpec& spec, double eps) {
    validate(spec);
    if (!(eps > 0.0)) throw std::domain_error("solve_equivalent_budget: eps must be positive");
    return solve_monotone_budget(
        [&](const BigInt& m) { return equivalent_tail_bound(spec, m) <= eps; });
}

BigInt default_direct_budget() {
    if (const char* env = std::getenv("FLOORZETA_TERM_BUDGET")) return parse_budget_env(env);
    return BigInt(1'000'000UL);
}

BigInt default_equivalent_budget() {
    if (const char* env = std::getenv("FLOORZETA_TERM_BUDGET")) return parse_budget_env(env);
    return BigInt(10'000UL);
}

}  // namespace floorzeta
