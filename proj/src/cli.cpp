#include "floorzeta/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "floorzeta/bernoulli.hpp"
#include "floorzeta/exact.hpp"
#include "floorzeta/fc_zeta.hpp"
#include "floorzeta/floor_sums.hpp"
#include "floorzeta/identity_lab.hpp"
#include "floorzeta/zeta.hpp"

namespace floorzeta::cli {
namespace {

using ojson = nlohmann::ordered_json;

// Semantic misuse of otherwise-valid flags (exit 2, like a parse failure).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Token grammar. Every numeric flag accepts exactly what the params echo
// prints: integers as decimal strings, rationals as "u/v", complex as
// "re,im" (a bare "re" is accepted and echoed as "re,0").
// ---------------------------------------------------------------------------

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_complex(Complex z) { return fmt_double(z.real()) + "," + fmt_double(z.imag()); }

double parse_double_token(const std::string& tok) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw UsageError("malformed number '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("malformed number '" + tok + "'");
    return x;
}

Complex parse_complex(const std::string& tok) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) return {parse_double_token(tok), 0.0};
    return {parse_double_token(tok.substr(0, comma)),
            parse_double_token(tok.substr(comma + 1))};
}

BigInt parse_bigint(const std::string& tok) {
    try {
        return BigInt(tok);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed integer '" + tok + "'");
    }
}

// Grammar failures exit 2; out-of-domain values (e.g. a > 1) still exit 3.
BigRat parse_rat_token(const std::string& tok) {
    try {
        return parse_rat(tok);
    } catch (const std::domain_error&) {
        throw UsageError("malformed rational '" + tok + "'");
    }
}

Flavor parse_flavor(const std::string& tok) {
    if (tok == "floor") return Flavor::Floor;
    if (tok == "ceil" || tok == "ceiling") return Flavor::Ceiling;
    throw UsageError("unknown flavor '" + tok + "' (floor|ceil)");
}

std::string flavor_name(Flavor f) { return f == Flavor::Floor ? "floor" : "ceil"; }

SumMethod parse_sum_method(const std::string& tok) {
    if (tok == "formula") return SumMethod::Formula;
    if (tok == "closed") return SumMethod::ClosedForm;
    if (tok == "brute") return SumMethod::Brute;
    throw UsageError("unknown method '" + tok + "' (formula|closed|brute)");
}

std::string sum_method_name(SumMethod m) {
    switch (m) {
        case SumMethod::Formula: return "formula";
        case SumMethod::ClosedForm: return "closed";
        case SumMethod::Brute: return "brute";
    }
    return "?";
}

Convention parse_convention(const std::string& tok) {
    if (tok == "definition") return Convention::Definition;
    if (tok == "reduced") return Convention::Reduced;
    throw UsageError("unknown convention '" + tok + "' (definition|reduced)");
}

std::string convention_name(Convention c) {
    return c == Convention::Definition ? "definition" : "reduced";
}

SeriesMethod parse_series_method(const std::string& tok) {
    if (tok == "direct") return SeriesMethod::Direct;
    if (tok == "equivalent") return SeriesMethod::Equivalent;
    if (tok == "closed") return SeriesMethod::Closed;
    throw UsageError("unknown method '" + tok + "' (direct|equivalent|closed)");
}

std::string series_method_name(SeriesMethod m) {
    switch (m) {
        case SeriesMethod::Direct: return "direct";
        case SeriesMethod::Equivalent: return "equivalent";
        case SeriesMethod::Closed: return "closed";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Output document: one per invocation, rendered as JSON or CSV.
// ---------------------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ',';
        row += csv_field(fields[i]);
    }
    return row;
}

struct Doc {
    std::string command;
    ojson params = ojson::object();
    ojson results = ojson::array();
    ojson verdicts;  // stays null unless the command produces Verdicts
    std::string csv_header;
    std::vector<std::string> csv_rows;
    bool any_refuted = false;
    int forced_exit = 0;  // selftest failures
};

void print_doc(const Doc& doc, bool csv, std::ostream& out) {
    if (csv) {
        out << doc.csv_header << '\n';
        for (const std::string& row : doc.csv_rows) out << row << '\n';
        return;
    }
    ojson j;
    j["version"] = kVersion;
    j["command"] = doc.command;
    j["params"] = doc.params;
    j["results"] = doc.results;
    if (!doc.verdicts.is_null()) j["verdicts"] = doc.verdicts;
    out << j.dump(2) << '\n';
}

ojson complex_json(Complex z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

// ---------------------------------------------------------------------------
// Subcommand handlers.
// ---------------------------------------------------------------------------

Doc handle_bernoulli(unsigned long n, bool upto, bool oracle) {
    Doc doc;
    doc.command = "bernoulli";
    doc.params = {{"j", std::to_string(n)}, {"upto", upto}, {"oracle", oracle}};
    doc.csv_header = "j,value";
    for (unsigned long j = upto ? 0 : n; j <= n; ++j) {
        const std::string value =
            rat_to_string(oracle ? bernoulli_number_double_sum(j) : bernoulli_number(j));
        doc.results.push_back(ojson{{"j", j}, {"value", value}});
        doc.csv_rows.push_back(csv_row({std::to_string(j), value}));
    }
    return doc;
}

Doc handle_sum(const std::string& command, const std::string& flavor_tok,
               const std::string& n_tok, const std::string& a_tok, unsigned long p,
               const std::string& method_tok) {
    SumSpec spec;
    spec.flavor = parse_flavor(flavor_tok);
    spec.n = parse_bigint(n_tok);
    spec.a = ExponentA(parse_rat_token(a_tok));
    spec.p = p;
    const SumMethod method = parse_sum_method(method_tok);
    const ExactSumResult res = evaluate_sum(spec, method);

    Doc doc;
    doc.command = command;
    doc.params = {{"flavor", flavor_name(spec.flavor)},
                  {"n", spec.n.get_str()},
                  {"a", std::to_string(spec.a.u) + "/" + std::to_string(spec.a.v)},
                  {"p", std::to_string(p)},
                  {"method", sum_method_name(method)}};
    doc.csv_header = "flavor,n,a,p,method,value,work";
    doc.results.push_back(ojson{{"value", res.value.get_str()},
                                {"method", sum_method_name(res.method)},
                                {"work", res.work}});
    doc.csv_rows.push_back(csv_row({flavor_name(spec.flavor), spec.n.get_str(),
                                    std::to_string(spec.a.u) + "/" + std::to_string(spec.a.v),
                                    std::to_string(p), sum_method_name(res.method),
                                    res.value.get_str(), std::to_string(res.work)}));
    return doc;
}

Doc handle_zeta(const std::string& kind, const std::string& s_tok, const std::string& t_tok,
                bool t_given) {
    if (kind != "riemann" && kind != "hurwitz")
        throw UsageError("unknown kind '" + kind + "' (riemann|hurwitz)");
    if (kind == "riemann" && t_given) throw UsageError("--t requires --kind hurwitz");
    const Complex s = parse_complex(s_tok);
    const Complex t = parse_complex(t_tok);
    const ZetaResult res = kind == "riemann" ? riemann_zeta(s) : hurwitz_zeta(s, t);

    Doc doc;
    doc.command = "zeta";
    doc.params = {{"kind", kind}, {"s", fmt_complex(s)}};
    if (kind == "hurwitz") doc.params["t"] = fmt_complex(t);
    doc.csv_header = "kind,s_re,s_im,t_re,t_im,value_re,value_im,est_error,n_used,k_used";
    ojson value = complex_json(res.value);
    value["est_error"] = res.est_error;
    doc.results.push_back(
        ojson{{"value", value}, {"n_used", res.n_used}, {"k_used", res.k_used}});
    doc.csv_rows.push_back(csv_row(
        {kind, fmt_double(s.real()), fmt_double(s.imag()),
         kind == "hurwitz" ? fmt_double(t.real()) : "", kind == "hurwitz" ? fmt_double(t.imag()) : "",
         fmt_double(res.value.real()), fmt_double(res.value.imag()), fmt_double(res.est_error),
         std::to_string(res.n_used), std::to_string(res.k_used)}));
    return doc;
}

Doc handle_fc_zeta(Flavor flavor, const std::string& a_tok, const std::string& b_tok,
                   const std::string& s_tok, const std::string& t_tok,
                   const std::string& convention_tok, const std::string& method_tok,
                   const std::string& budget_tok, bool budget_given) {
    FCZetaSpec spec;
    spec.flavor = flavor;
    spec.a = ExponentA(parse_rat_token(a_tok));
    spec.b = parse_rat_token(b_tok);
    spec.s = parse_complex(s_tok);
    spec.t = parse_complex(t_tok);
    spec.convention = parse_convention(convention_tok);
    const SeriesMethod method = parse_series_method(method_tok);

    Doc doc;
    doc.command = flavor == Flavor::Floor ? "fzeta" : "czeta";
    doc.csv_header =
        "flavor,a,b,s_re,s_im,t_re,t_im,convention,method,value_re,value_im,bound,tail_valid,"
        "terms_used";
    doc.params = {{"flavor", flavor_name(flavor)},
                  {"a", std::to_string(spec.a.u) + "/" + std::to_string(spec.a.v)},
                  {"b", rat_to_string(spec.b)},
                  {"s", fmt_complex(spec.s)},
                  {"t", fmt_complex(spec.t)},
                  {"convention", convention_name(spec.convention)},
                  {"method", series_method_name(method)}};
    auto finish = [&](Complex value, double bound, bool tail_valid, const BigInt& terms) {
        doc.results.push_back(ojson{{"value", complex_json(value)},
                                    {"bound", bound},
                                    {"tail_valid", tail_valid},
                                    {"terms_used", terms.get_str()}});
        doc.csv_rows.push_back(csv_row(
            {flavor_name(flavor), std::to_string(spec.a.u) + "/" + std::to_string(spec.a.v),
             rat_to_string(spec.b), fmt_double(spec.s.real()), fmt_double(spec.s.imag()),
             fmt_double(spec.t.real()), fmt_double(spec.t.imag()),
             convention_name(spec.convention), series_method_name(method),
             fmt_double(value.real()), fmt_double(value.imag()), fmt_double(bound),
             tail_valid ? "true" : "false", terms.get_str()}));
    };

    if (method == SeriesMethod::Closed) {
        if (budget_given) throw UsageError("--terms does not apply to the closed method");
        if (spec.a.u != 1)
            throw std::domain_error("closed method requires a = 1/q");
        const unsigned long q = spec.a.v;
        if (spec.b != 1)
            throw std::domain_error("closed method requires b = 1");
        ZetaResult res;
        if (spec.convention == Convention::Reduced)
            res = flavor == Flavor::Floor ? fzeta_reduced_closed(q, spec.s)
                                          : czeta_reduced_closed(q, spec.s);
        else
            res = flavor == Flavor::Floor ? fzeta_closed(q, spec.s, spec.t)
                                          : czeta_closed(q, spec.s, spec.t);
        finish(res.value, res.est_error, true, BigInt(0));
        return doc;
    }

    validate(spec);
    const BigInt budget = budget_given ? parse_bigint(budget_tok)
                          : method == SeriesMethod::Direct ? default_direct_budget()
                                                           : default_equivalent_budget();
    doc.params["terms"] = budget.get_str();
    const SeriesEval ev = method == SeriesMethod::Direct ? fc_zeta_direct(spec, budget)
                                                         : fc_zeta_equivalent(spec, budget);
    finish(ev.value, ev.tail_bound, ev.tail_valid, ev.terms_used);
    return doc;
}

ojson verdict_json(const Verdict& v) {
    return ojson{{"id", v.id},
                 {"params", v.params},
                 {"status", to_string(v.status)},
                 {"lhs", complex_json(v.lhs)},
                 {"rhs", complex_json(v.rhs)},
                 {"lhs_bound", v.lhs_bound},
                 {"rhs_bound", v.rhs_bound},
                 {"diff", v.diff},
                 {"witness", v.witness},
                 {"note", v.note}};
}

std::string verdict_csv(const Verdict& v) {
    return csv_row({v.id, v.params, to_string(v.status), fmt_double(v.lhs.real()),
                    fmt_double(v.lhs.imag()), fmt_double(v.rhs.real()), fmt_double(v.rhs.imag()),
                    fmt_double(v.lhs_bound), fmt_double(v.rhs_bound), fmt_double(v.diff),
                    v.witness, v.note});
}

constexpr const char* kVerdictCsvHeader =
    "id,params,status,lhs_re,lhs_im,rhs_re,rhs_im,lhs_bound,rhs_bound,diff,witness,note";

ojson race_json(const RaceReport& r) {
    return ojson{{"flavor", flavor_name(r.spec.flavor)},
                 {"a", std::to_string(r.spec.a.u) + "/" + std::to_string(r.spec.a.v)},
                 {"b", rat_to_string(r.spec.b)},
                 {"s", complex_json(r.spec.s)},
                 {"t", complex_json(r.spec.t)},
                 {"convention", convention_name(r.spec.convention)},
                 {"digits", r.digits},
                 {"terms_direct", r.terms_direct.get_str()},
                 {"terms_equivalent", r.terms_equivalent.get_str()},
                 {"winner", r.winner},
                 {"value_direct", complex_json(r.value_direct)},
                 {"value_equivalent", complex_json(r.value_equivalent)},
                 {"bound_direct", r.bound_direct},
                 {"bound_equivalent", r.bound_equivalent},
                 {"agreed", r.agreed},
                 {"resolved", r.resolved}};
}

std::string race_csv(const RaceReport& r) {
    return csv_row({flavor_name(r.spec.flavor),
                    std::to_string(r.spec.a.u) + "/" + std::to_string(r.spec.a.v),
                    rat_to_string(r.spec.b), fmt_double(r.spec.s.real()),
                    fmt_double(r.spec.s.imag()), fmt_double(r.spec.t.real()),
                    fmt_double(r.spec.t.imag()), convention_name(r.spec.convention),
                    std::to_string(r.digits), r.terms_direct.get_str(),
                    r.terms_equivalent.get_str(), r.winner, fmt_double(r.value_direct.real()),
                    fmt_double(r.value_direct.imag()), fmt_double(r.value_equivalent.real()),
                    fmt_double(r.value_equivalent.imag()), fmt_double(r.bound_direct),
                    fmt_double(r.bound_equivalent), r.agreed ? "true" : "false",
                    r.resolved ? "true" : "false"});
}

constexpr const char* kRaceCsvHeader =
    "flavor,a,b,s_re,s_im,t_re,t_im,convention,digits,terms_direct,terms_equivalent,winner,"
    "value_direct_re,value_direct_im,value_equivalent_re,value_equivalent_im,bound_direct,"
    "bound_equivalent,agreed,resolved";

ojson growth_json(const GrowthReport& g) {
    ojson grid = ojson::array(), counts = ojson::array();
    for (const BigInt& n : g.n_grid) grid.push_back(n.get_str());
    for (const BigInt& c : g.counts) counts.push_back(c.get_str());
    return ojson{{"p", g.p},
                 {"q", g.q},
                 {"fitted_slope", g.fitted_slope},
                 {"expected_slope", g.expected_slope},
                 {"status", to_string(g.status)},
                 {"n_grid", grid},
                 {"counts", counts}};
}

std::string growth_csv(const GrowthReport& g) {
    std::string grid, counts;
    for (std::size_t i = 0; i < g.n_grid.size(); ++i) {
        if (i) grid += ';', counts += ';';
        grid += g.n_grid[i].get_str();
        counts += g.counts[i].get_str();
    }
    return csv_row({std::to_string(g.p), std::to_string(g.q), fmt_double(g.fitted_slope),
                    fmt_double(g.expected_slope), to_string(g.status), grid, counts});
}

constexpr const char* kGrowthCsvHeader =
    "p,q,fitted_slope,expected_slope,status,n_grid,counts";

struct IdentityArgs {
    std::string suite;
    bool has_id = false, has_which = false, has_q = false, has_p = false, has_part = false;
    int id = 0;
    int which = 0;
    unsigned long q = 0;
    unsigned long p = 0;
    std::string part;
    unsigned doublings = 0;
    double perturb = 0.0;
    double eps = 5e-7;
    std::uint64_t seed = 0;
};

Doc handle_identity(const IdentityArgs& args) {
    CheckOptions options;
    options.budget_doublings = args.doublings;
    options.rhs_perturb = args.perturb;
    options.eps_side = args.eps;
    if (!(options.eps_side > 0.0)) throw std::domain_error("--eps must be positive");

    SuiteKind kind;
    if (args.suite == "special-cases") kind = SuiteKind::SpecialCases;
    else if (args.suite == "deductions") kind = SuiteKind::Deductions;
    else if (args.suite == "poles") kind = SuiteKind::Poles;
    else if (args.suite == "p42") kind = SuiteKind::Problem42;
    else if (args.suite == "p44") kind = SuiteKind::Problem44;
    else if (args.suite == "race") kind = SuiteKind::Race;
    else
        throw UsageError("unknown suite '" + args.suite +
                         "' (special-cases|deductions|poles|p42|p44|race)");

    if (args.has_id && kind != SuiteKind::SpecialCases)
        throw UsageError("--id applies only to --suite special-cases");
    if (args.has_which && kind != SuiteKind::Deductions)
        throw UsageError("--which applies only to --suite deductions");
    if (args.has_part && kind != SuiteKind::Problem42)
        throw UsageError("--part applies only to --suite p42");
    if (args.has_p && kind != SuiteKind::Problem44)
        throw UsageError("--p applies only to --suite p44");
    if (args.has_q && (kind == SuiteKind::SpecialCases || kind == SuiteKind::Race))
        throw UsageError("--q does not apply to this suite");

    P42Part part_filter = P42Part::I;
    if (args.has_part) {
        if (args.part == "I") part_filter = P42Part::I;
        else if (args.part == "II") part_filter = P42Part::II;
        else
            throw UsageError("unknown part '" + args.part + "' (I|II)");
    }

    const bool filtered = args.has_id || args.has_which || args.has_q || args.has_p ||
                          args.has_part;
    SuiteReport report;
    if (!filtered) {
        report = run_default_suite(kind, args.seed, options);
    } else {
        switch (kind) {
            case SuiteKind::SpecialCases: {
                auto vs = check_special_case(args.id, default_special_case_s_grid(args.id),
                                             options);
                report.verdicts.insert(report.verdicts.end(), vs.begin(), vs.end());
                break;
            }
            case SuiteKind::Deductions:
                for (int which : {4, 5, 6, 7}) {
                    if (args.has_which && which != args.which) continue;
                    for (unsigned long q = 1; q <= 4; ++q) {
                        if (args.has_q && q != args.q) continue;
                        auto vs = check_deduction(which, q, default_deduction_s_grid(q),
                                                  default_t_grid(), options);
                        report.verdicts.insert(report.verdicts.end(), vs.begin(), vs.end());
                    }
                }
                break;
            case SuiteKind::Poles: {
                auto vs = check_pole_difference(args.q, default_t_grid(), options);
                report.verdicts.insert(report.verdicts.end(), vs.begin(), vs.end());
                break;
            }
            case SuiteKind::Problem42:
                for (P42Part part : {P42Part::I, P42Part::II}) {
                    if (args.has_part && part != part_filter) continue;
                    for (unsigned long q = 2; q <= 5; ++q) {
                        if (args.has_q && q != args.q) continue;
                        const double qd = static_cast<double>(q);
                        auto vs = check_problem42(part, q, {{qd + 2.0, 0.0}, {qd + 3.5, 0.0}},
                                                  options);
                        report.verdicts.insert(report.verdicts.end(), vs.begin(), vs.end());
                    }
                }
                break;
            case SuiteKind::Problem44:
                if (args.has_p && args.has_q) {
                    report.growths.push_back(
                        growth_check_problem44(args.p, args.q, default_p44_n_grid()));
                } else {
                    bool matched = false;
                    for (auto [p, q] : default_p44_pairs()) {
                        if (args.has_p && p != args.p) continue;
                        if (args.has_q && q != args.q) continue;
                        matched = true;
                        report.growths.push_back(growth_check_problem44(p, q, default_p44_n_grid()));
                    }
                    if (!matched)
                        throw std::domain_error("no default (p, q) pair matches the filter");
                }
                break;
            case SuiteKind::Race:
                break;  // unreachable: race accepts no filters
        }
        std::sort(report.verdicts.begin(), report.verdicts.end(),
                  [](const Verdict& x, const Verdict& y) {
                      return x.id != y.id ? x.id < y.id : x.params < y.params;
                  });
    }

    Doc doc;
    doc.command = "identity";
    doc.params = {{"suite", args.suite},
                  {"doublings", args.doublings},
                  {"perturb", args.perturb},
                  {"eps", args.eps},
                  {"seed", args.seed}};
    if (args.has_id) doc.params["id"] = args.id;
    if (args.has_which) doc.params["which"] = args.which;
    if (args.has_q) doc.params["q"] = args.q;
    if (args.has_p) doc.params["p"] = args.p;
    if (args.has_part) doc.params["part"] = args.part;

    if (kind == SuiteKind::Race) {
        doc.csv_header = kRaceCsvHeader;
        for (const RaceReport& r : report.races) {
            doc.results.push_back(race_json(r));
            doc.csv_rows.push_back(race_csv(r));
        }
    } else if (kind == SuiteKind::Problem44) {
        doc.csv_header = kGrowthCsvHeader;
        for (const GrowthReport& g : report.growths) {
            doc.results.push_back(growth_json(g));
            doc.csv_rows.push_back(growth_csv(g));
            if (g.status == Status::Refuted) doc.any_refuted = true;
        }
    } else {
        doc.csv_header = kVerdictCsvHeader;
        doc.verdicts = ojson::array();
        for (const Verdict& v : report.verdicts) {
            doc.verdicts.push_back(verdict_json(v));
            doc.csv_rows.push_back(verdict_csv(v));
            if (v.status == Status::Refuted) doc.any_refuted = true;
        }
    }
    return doc;
}

Doc handle_race(const std::string& flavor_tok, const std::string& a_tok,
                const std::string& b_tok, const std::string& s_tok, const std::string& t_tok,
                const std::string& convention_tok, int digits) {
    FCZetaSpec spec;
    spec.flavor = parse_flavor(flavor_tok);
    spec.a = ExponentA(parse_rat_token(a_tok));
    spec.b = parse_rat_token(b_tok);
    spec.s = parse_complex(s_tok);
    spec.t = parse_complex(t_tok);
    spec.convention = parse_convention(convention_tok);
    const RaceReport r = convergence_race(spec, digits);

    Doc doc;
    doc.command = "race";
    doc.params = {{"flavor", flavor_name(spec.flavor)},
                  {"a", std::to_string(spec.a.u) + "/" + std::to_string(spec.a.v)},
                  {"b", rat_to_string(spec.b)},
                  {"s", fmt_complex(spec.s)},
                  {"t", fmt_complex(spec.t)},
                  {"convention", convention_name(spec.convention)},
                  {"digits", digits}};
    doc.csv_header = kRaceCsvHeader;
    doc.results.push_back(race_json(r));
    doc.csv_rows.push_back(race_csv(r));
    return doc;
}

// Desk-scale oracle suite: quick exact and numeric cross-checks of every
// layer, independent of the test harness.
Doc handle_selftest() {
    Doc doc;
    doc.command = "selftest";
    doc.csv_header = "check,ok";
    bool all_ok = true;
    auto check = [&](const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        std::string note;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            note = e.what();
        }
        all_ok = all_ok && ok;
        ojson rec{{"check", name}, {"ok", ok}};
        if (!note.empty()) rec["error"] = note;
        doc.results.push_back(rec);
        doc.csv_rows.push_back(csv_row({name, ok ? "true" : "false"}));
    };

    check("bernoulli-small", [] {
        return bernoulli_number(1) == BigRat(1, 2) && bernoulli_number(2) == BigRat(1, 6) &&
               bernoulli_number(3) == 0 && bernoulli_number(4) == BigRat(-1, 30) &&
               bernoulli_number(12) == BigRat(-691, 2730);
    });
    check("bernoulli-double-sum", [] {
        for (unsigned long j = 0; j <= 12; ++j)
            if (bernoulli_number(j) != bernoulli_number_double_sum(j)) return false;
        return true;
    });
    check("faulhaber-cube", [] {
        return faulhaber_sum(BigInt(100), 3) == BigInt(5050) * BigInt(5050);
    });
    check("sum-floor-sqrt-10", [] { return sum_floor(BigInt(10), ExponentA(1, 2)) == 19; });
    check("sum-ceil-sqrt-10", [] { return sum_ceil(BigInt(10), ExponentA(1, 2)) == 26; });
    // 1+1+2+2+2+3+3+4+4+4: the floors of i^(2/3) for i = 1..10.
    check("sum-floor-2-3-10", [] { return sum_floor(BigInt(10), ExponentA(2, 3)) == 26; });
    check("gen-faulhaber-41-74", [] {
        return gen_faulhaber_floor(BigInt(10), ExponentA(1, 2), 2) == 41 &&
               gen_faulhaber_ceil(BigInt(10), ExponentA(1, 2), 2) == 74;
    });
    check("closed-vs-formula", [] {
        const BigInt n(1'000'000);
        return sum_floor_closed(n, 2) == sum_floor(n, ExponentA(1, 2)) &&
               sum_ceil_closed(n, 2) == sum_ceil(n, ExponentA(1, 2));
    });
    check("sqrt-poly", [] {
        const BigInt n = BigInt(10) * BigInt(1'000'000'000) * BigInt(100);  // 10^12
        return sqrt_poly_floor(n) == sum_floor_closed(n, 2) &&
               sqrt_poly_ceil(n) == sum_ceil_closed(n, 2);
    });
    check("brute-agreement", [] {
        return brute_sum(BigInt(500), ExponentA(2, 3), 2, Flavor::Floor).value ==
               gen_faulhaber_floor(BigInt(500), ExponentA(2, 3), 2);
    });
    check("diff-identity", [] {
        const auto [lhs, rhs] = diff_identity_qform(BigInt(2000), 5);
        return lhs == rhs;
    });
    check("zeta-pi-squared", [] {
        const double pi = std::numbers::pi;
        return std::abs(riemann_zeta({2.0, 0.0}).value.real() - pi * pi / 6.0) <= 1e-12 &&
               std::abs(riemann_zeta({4.0, 0.0}).value.real() - pi * pi * pi * pi / 90.0) <=
                   1e-12;
    });
    check("hurwitz-shift", [] {
        const Complex lhs = hurwitz_zeta({3.0, 0.0}, {1.25, 0.0}).value;
        const Complex rhs = hurwitz_zeta({3.0, 0.0}, {2.25, 0.0}).value;
        return std::abs(lhs - rhs - std::pow(1.25, -3.0)) <= 1e-11;
    });
    check("fzeta-reduced-closed", [] {
        FCZetaSpec spec;
        spec.flavor = Flavor::Floor;
        spec.a = ExponentA(1, 2);
        spec.s = {4.0, 0.0};
        spec.convention = Convention::Reduced;
        const SeriesEval direct = fc_zeta_direct(spec, BigInt(1'000'000));
        const ZetaResult closed = fzeta_reduced_closed(2, {4.0, 0.0});
        return direct.tail_valid &&
               std::abs(direct.value - closed.value) <= direct.tail_bound + closed.est_error;
    });
    check("dual-series", [] {
        FCZetaSpec spec;
        spec.flavor = Flavor::Floor;
        spec.a = ExponentA(1, 2);
        spec.s = {4.0, 0.0};
        const SeriesEval direct = fc_zeta_direct(spec, BigInt(1'000'000));
        const SeriesEval equiv = fc_zeta_equivalent(spec, BigInt(10'000));
        return direct.tail_valid && equiv.tail_valid &&
               std::abs(direct.value - equiv.value) <= direct.tail_bound + equiv.tail_bound;
    });
    check("pole-reduced-q2", [] {
        const double pi = std::numbers::pi;
        return std::abs(pole_difference_reduced(2).value.real() - pi * pi / 3.0) <= 1e-10;
    });
    check("case1-coefficients", [] {
        for (BigInt m = 1; m <= 200; ++m)
            if (rep_count_floor(m, ExponentA(1, 2), BigRat(2)) != 2 * (m / 2) + 1) return false;
        return true;
    });

    if (!all_ok) doc.forced_exit = 1;
    return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact floor/ceiling power sums and generalized zeta series"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(0, 1);
    bool csv = false, strict = false, selftest_flag = false;
    app.add_flag("--csv", csv, "emit CSV instead of JSON");
    app.add_flag("--strict", strict, "exit 4 when an identity report contains REFUTED");
    app.add_flag("--selftest", selftest_flag, "run the bundled desk-scale oracle suite");

    // bernoulli
    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "Bernoulli numbers (B_1 = +1/2)");
    unsigned long bern_n = 0;
    bool bern_upto = false, bern_oracle = false;
    cmd_bernoulli->add_option("--j,--n", bern_n, "index")->required();
    cmd_bernoulli->add_flag("--upto", bern_upto, "emit B_0 .. B_j");
    cmd_bernoulli->add_flag("--oracle", bern_oracle, "use the literal double-sum evaluation");

    // sum / gfaulhaber share flag shapes
    std::string sum_flavor = "floor", sum_n, sum_a, sum_method = "formula";
    unsigned long sum_p = 1;
    auto* cmd_sum = app.add_subcommand("sum", "exact sum of floor/ceil(i^a), i = 1..n");
    cmd_sum->add_option("--flavor", sum_flavor, "floor|ceil");
    cmd_sum->add_option("--n", sum_n, "upper limit")->required();
    cmd_sum->add_option("--a", sum_a, "exponent u/v in (0,1]")->required();
    cmd_sum->add_option("--method", sum_method, "formula|closed|brute");

    std::string gf_flavor = "floor", gf_n, gf_a, gf_method = "formula";
    unsigned long gf_p = 1;
    auto* cmd_gf = app.add_subcommand("gfaulhaber",
                                      "exact sum of floor/ceil(i^a)^p, i = 1..n");
    cmd_gf->add_option("--flavor", gf_flavor, "floor|ceil");
    cmd_gf->add_option("--n", gf_n, "upper limit")->required();
    cmd_gf->add_option("--a", gf_a, "exponent u/v in (0,1]")->required();
    cmd_gf->add_option("--p", gf_p, "power on the floor/ceil value");
    cmd_gf->add_option("--method", gf_method, "formula|closed|brute");

    // zeta
    std::string zeta_kind = "riemann", zeta_s, zeta_t = "1";
    auto* cmd_zeta = app.add_subcommand("zeta", "Riemann/Hurwitz zeta (convergent half-plane)");
    cmd_zeta->add_option("--kind", zeta_kind, "riemann|hurwitz");
    cmd_zeta->add_option("--s", zeta_s, "complex s as re[,im]")->required();
    auto* zeta_t_opt = cmd_zeta->add_option("--t", zeta_t, "offset t (hurwitz only)");

    // fzeta / czeta
    std::string fz_a, fz_b = "1", fz_s, fz_t = "1", fz_conv = "definition", fz_method = "direct",
                fz_budget;
    auto* cmd_fzeta = app.add_subcommand("fzeta", "floor-flavor generalized zeta series");
    cmd_fzeta->add_option("--a", fz_a, "exponent u/v in (0,1]")->required();
    cmd_fzeta->add_option("--b", fz_b, "scale b > 0 (rational)");
    cmd_fzeta->add_option("--s", fz_s, "complex s as re[,im]")->required();
    cmd_fzeta->add_option("--t", fz_t, "offset t as re[,im] (definition form)");
    cmd_fzeta->add_option("--convention", fz_conv, "definition|reduced");
    cmd_fzeta->add_option("--method", fz_method, "direct|equivalent|closed");
    auto* fz_budget_opt = cmd_fzeta->add_option("--terms,--budget", fz_budget, "term budget");

    std::string cz_a, cz_b = "1", cz_s, cz_t = "1", cz_conv = "definition", cz_method = "direct",
                cz_budget;
    auto* cmd_czeta = app.add_subcommand("czeta", "ceiling-flavor generalized zeta series");
    cmd_czeta->add_option("--a", cz_a, "exponent u/v in (0,1]")->required();
    cmd_czeta->add_option("--b", cz_b, "scale b > 0 (rational)");
    cmd_czeta->add_option("--s", cz_s, "complex s as re[,im]")->required();
    cmd_czeta->add_option("--t", cz_t, "offset t as re[,im] (definition form)");
    cmd_czeta->add_option("--convention", cz_conv, "definition|reduced");
    cmd_czeta->add_option("--method", cz_method, "direct|equivalent|closed");
    auto* cz_budget_opt = cmd_czeta->add_option("--terms,--budget", cz_budget, "term budget");

    // identity
    IdentityArgs id_args;
    auto* cmd_identity = app.add_subcommand("identity", "numerical conjecture checker suites");
    cmd_identity->add_option("--suite", id_args.suite,
                             "special-cases|deductions|poles|p42|p44|race")
        ->required();
    auto* id_id = cmd_identity->add_option("--id", id_args.id, "special case 1..16");
    auto* id_which = cmd_identity->add_option("--which", id_args.which, "deduction 4..7");
    auto* id_q = cmd_identity->add_option("--q", id_args.q, "restrict q");
    auto* id_p = cmd_identity->add_option("--p", id_args.p, "restrict p (p44)");
    auto* id_part = cmd_identity->add_option("--part", id_args.part, "I|II (p42)");
    cmd_identity->add_option("--doublings", id_args.doublings,
                             "extra global budget doublings (stability knob)");
    cmd_identity->add_option("--perturb", id_args.perturb,
                             "synthetic offset added to every RHS (soundness knob)");
    cmd_identity->add_option("--eps", id_args.eps, "per-side tail-bound target");
    cmd_identity->add_option("--seed", id_args.seed,
                             "shuffle evaluation order (results are re-sorted)");

    // race
    std::string race_flavor = "floor", race_a, race_b = "1", race_s, race_t = "1",
                race_conv = "definition";
    int race_digits = 6;
    auto* cmd_race = app.add_subcommand("race", "direct vs equivalent minimal term budgets");
    cmd_race->add_option("--flavor", race_flavor, "floor|ceil");
    cmd_race->add_option("--a", race_a, "exponent u/v in (0,1]")->required();
    cmd_race->add_option("--b", race_b, "scale b > 0 (rational)");
    cmd_race->add_option("--s", race_s, "complex s as re[,im]")->required();
    cmd_race->add_option("--t", race_t, "offset t as re[,im]");
    cmd_race->add_option("--convention", race_conv, "definition|reduced");
    cmd_race->add_option("--digits", race_digits, "agreement target, 4..8");

    auto* cmd_selftest = app.add_subcommand("selftest", "desk-scale oracle suite");

    // Global flags (--csv/--strict) remain valid after a subcommand name.
    for (CLI::App* sub : {cmd_bernoulli, cmd_sum, cmd_gf, cmd_zeta, cmd_fzeta, cmd_czeta,
                          cmd_identity, cmd_race, cmd_selftest})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto t_start = std::chrono::steady_clock::now();
    Doc doc;
    try {
        if (cmd_bernoulli->parsed()) {
            doc = handle_bernoulli(bern_n, bern_upto, bern_oracle);
        } else if (cmd_sum->parsed()) {
            doc = handle_sum("sum", sum_flavor, sum_n, sum_a, sum_p, sum_method);
        } else if (cmd_gf->parsed()) {
            doc = handle_sum("gfaulhaber", gf_flavor, gf_n, gf_a, gf_p, gf_method);
        } else if (cmd_zeta->parsed()) {
            doc = handle_zeta(zeta_kind, zeta_s, zeta_t, zeta_t_opt->count() > 0);
        } else if (cmd_fzeta->parsed()) {
            doc = handle_fc_zeta(Flavor::Floor, fz_a, fz_b, fz_s, fz_t, fz_conv, fz_method,
                                 fz_budget, fz_budget_opt->count() > 0);
        } else if (cmd_czeta->parsed()) {
            doc = handle_fc_zeta(Flavor::Ceiling, cz_a, cz_b, cz_s, cz_t, cz_conv, cz_method,
                                 cz_budget, cz_budget_opt->count() > 0);
        } else if (cmd_identity->parsed()) {
            id_args.has_id = id_id->count() > 0;
            id_args.has_which = id_which->count() > 0;
            id_args.has_q = id_q->count() > 0;
            id_args.has_p = id_p->count() > 0;
            id_args.has_part = id_part->count() > 0;
            doc = handle_identity(id_args);
        } else if (cmd_race->parsed()) {
            doc = handle_race(race_flavor, race_a, race_b, race_s, race_t, race_conv,
                              race_digits);
        } else if (cmd_selftest->parsed() || selftest_flag) {
            doc = handle_selftest();
        } else {
            err << app.help();
            return 2;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    print_doc(doc, csv, out);
    const auto t_end = std::chrono::steady_clock::now();
    err << "timing: command=" << doc.command << " wall="
        << std::chrono::duration<double>(t_end - t_start).count() << "s\n";
    if (doc.forced_exit != 0) return doc.forced_exit;
    if (strict && doc.any_refuted) return 4;
    return 0;
}

}  // namespace floorzeta::cli
