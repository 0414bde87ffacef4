#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floorzeta/fc_zeta.hpp"

namespace floorzeta {

// Numerical conjecture checker. Every comparison carries verified tail
// bounds on both sides; a claim is refuted only when the observed gap
// exceeds what truncation alone could explain, and confirmed only when the
// gap stays inside bounds that have been driven below 1e-6 at two
// successive budget levels.

enum class Status { Confirmed, Refuted, Inconclusive };

std::string to_string(Status s);

struct Verdict {
    std::string id;       // e.g. "deduction-6", "special-case-03", "eq10"
    std::string params;   // canonical "key=value" list, e.g. "q=2 s=4 t=1"
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double lhs_bound = 0.0;
    double rhs_bound = 0.0;
    double diff = 0.0;
    Status status = Status::Inconclusive;
    std::string witness;  // first mismatching coefficient index, when found
    std::string note;     // free-form context (label discrepancies, etc.)
};

struct RaceReport {
    FCZetaSpec spec;
    int digits = 6;
    BigInt terms_direct;
    BigInt terms_equivalent;
    std::string winner;  // "direct" | "equivalent" | "tie" | "inconclusive"
    Complex value_direct{0.0, 0.0};
    Complex value_equivalent{0.0, 0.0};
    double bound_direct = 0.0;
    double bound_equivalent = 0.0;
    bool agreed = false;  // |direct - equivalent| <= bound_direct + bound_equivalent
    bool resolved = true; // false when a budget could not be solved
};

struct GrowthReport {
    unsigned long p = 1;
    unsigned long q = 0;
    double fitted_slope = 0.0;
    double expected_slope = 0.0;  // (p+q+1)/(q+1)
    std::vector<BigInt> n_grid;
    std::vector<BigInt> counts;   // S_n for each grid point
    Status status = Status::Inconclusive;
};

struct CheckOptions {
    // Extra factor 2^k applied to every term budget; the verdict itself is
    // always computed at two consecutive levels (k and k+1), so doubling
    // this exercises the stability invariant.
    unsigned budget_doublings = 0;
    // Synthetic offset added to every RHS value (soundness harness: 1e-4
    // must flip any CONFIRMED verdict to REFUTED).
    double rhs_perturb = 0.0;
    // Per-side tail-bound target used when solving term budgets.
    double eps_side = 5e-7;
};

// 16-entry table of claimed coefficient series, checked under both the
// definition and the reduced convention; one Verdict per (convention, s).
std::vector<Verdict> check_special_case(int id, const std::vector<Complex>& s_grid,
                                        const CheckOptions& options = {});

// Closed zeta combinations vs directly summed series: 4/5 in definition
// form over a (s, t) grid, 6/7 in reduced form (t = 1).
std::vector<Verdict> check_deduction(int which, unsigned long q,
                                     const std::vector<Complex>& s_grid,
                                     const std::vector<Complex>& t_grid,
                                     const CheckOptions& options = {});

// Pole differences at s = q: the reduced-form identity (one Verdict per q)
// and the definition-form identity in both LHS orientations (per t).
std::vector<Verdict> check_pole_difference(unsigned long q, const std::vector<Complex>& t_grid,
                                           const CheckOptions& options = {});

enum class P42Part { I, II };

std::vector<Verdict> check_problem42(P42Part part, unsigned long q,
                                     const std::vector<Complex>& s_grid,
                                     const CheckOptions& options = {});

// Minimal provably sufficient term counts for both series at the same digit
// target; winner = fewer terms.
RaceReport convergence_race(const FCZetaSpec& spec, int digits,
                            const CheckOptions& options = {});

// Exact count of S_n = #{(i,j) : 1 <= i <= n, j >= 1, j^{q+1} <= i^p},
// log-log slope fit over the grid's upper half vs (p+q+1)/(q+1).
GrowthReport growth_check_problem44(unsigned long p, unsigned long q,
                                    const std::vector<BigInt>& n_grid);

// Default parameter grids (shared by the suite runner, the CLI, and tests).
std::vector<Complex> default_special_case_s_grid(int id);
std::vector<Complex> default_deduction_s_grid(unsigned long q);
std::vector<Complex> default_t_grid();
std::vector<unsigned long> default_pole_q_grid();
std::vector<std::pair<FCZetaSpec, int>> default_race_entries();
std::vector<std::pair<unsigned long, unsigned long>> default_p44_pairs();
std::vector<BigInt> default_p44_n_grid();

enum class SuiteKind { SpecialCases, Deductions, Poles, Problem42, Problem44, Race };

struct SuiteReport {
    std::vector<Verdict> verdicts;
    std::vector<RaceReport> races;
    std::vector<GrowthReport> growths;
};

// Runs one default suite. The seed shuffles evaluation order only; results
// are re-sorted by (id, params) so output is independent of the seed.
SuiteReport run_default_suite(SuiteKind kind, std::uint64_t seed = 0,
                              const CheckOptions& options = {});

}  // namespace floorzeta
