#pragma once

#include "oracle.hpp"
#include "reference.hpp"
#include "series.hpp"

#include <random>
#include <sstream>

namespace mahler {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string target;
    double error = 0;
    double tolerance = 0;
    bool passed = false;
    std::string note;  // non-empty for documented errata that are reported but not counted
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const
    {
        for (const auto& c : checks)
            if (!c.passed && c.note.empty()) return false;
        return true;
    }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& c : checks) n += (!c.passed && c.note.empty());
        return n;
    }
};

inline const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> s{"polys", "integrals", "identities", "measures", "torus"};
    return s;
}

namespace detail {

inline void add_exact(VerifyReport& r, const std::string& suite, const std::string& name, const std::string& target, bool ok,
                      std::string note = {})
{
    r.checks.push_back({suite, name, target, ok ? 0.0 : 1.0, 0.0, ok, ok ? std::string() : std::move(note)});
}

inline void add_numeric(VerifyReport& r, const std::string& suite, const std::string& name, const std::string& target,
                        double err, double tol)
{
    r.checks.push_back({suite, name, target, err, tol, err <= tol, {}});
}

inline double rel_err(long double got, long double want)
{
    long double d = std::fabs(got - want);
    return static_cast<double>(want == 0 ? d : d / std::fabs(want));
}

// Printed entries known to disagree with their own defining recursion.
inline std::string erratum_note(const std::string& family, long index)
{
    if (family == "Z" && index == 3)
        return "printed constant 567/4; the recursion and the g2 quadrature check give 567/2";
    return {};
}

inline void suite_polys(VerifyReport& r)
{
    for (const auto& e : reference::recursive_polys()) {
        ParityPolynomial got = get_poly(parse_family(e.family), e.index);
        add_exact(r, "polys", e.family + std::to_string(e.index) + " printed", e.poly().to_string(), got == e.poly(),
                  erratum_note(e.family, e.index));
    }
    for (const auto& e : reference::series_polys()) {
        SeriesFamily f = parse_series_family(e.family);
        add_exact(r, "polys", e.family + std::to_string(e.index) + " printed", e.poly().to_string(),
                  extract_family(f, e.index) == e.poly());
    }
    for (long m = 0; m <= 12; ++m)
        for (SeriesFamily f : {SeriesFamily::A, SeriesFamily::B})
            add_exact(r, "polys", std::string(series_family_name(f)) + std::to_string(m) + " series = convolution",
                      "exact", extract_family(f, m) == convolution_family(f, m));
    for (long n = 0; n <= 5; ++n) {
        RelationReport rep = relation_check(n);
        for (const auto& res : rep.rows)
            add_exact(r, "polys",
                      std::string(family_name(res.target)) + "_" + std::to_string(res.index) + " vs (" + res.lambda.to_string() +
                          ")*" + series_family_name(res.source) + "_" + std::to_string(res.index),
                      res.exact_expected ? "exact" : "equal up to a constant", res.holds);
    }
}

inline void suite_integrals(VerifyReport& r, std::uint64_t seed, double tol)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logmag(std::log(0.2), std::log(5.0));
    std::uniform_int_distribution<long> kdist(0, 8);
    std::bernoulli_distribution coin(0.5);
    const PrecisionContext ctx = PrecisionContext::for_digits(30);
    const int cases = 200;
    for (IntegralKind w : {IntegralKind::f1, IntegralKind::f2, IntegralKind::g1, IntegralKind::g2, IntegralKind::fsum,
                           IntegralKind::gsum}) {
        double worst = 0;
        std::string worst_case;
        for (int i = 0; i < cases; ++i) {
            double a = std::exp(logmag(rng)), b = std::exp(logmag(rng));
            long k = kdist(rng);
            while (std::fabs(std::log(a) - std::log(b)) < 0.05) b = std::exp(logmag(rng));
            if (sign_independent(w)) {
                b = -b;
                if (coin(rng)) a = -a;
            }
            IntegralParams p{Rational(a), Rational(b), k};
            double cf = closed_form(w, p, ctx).convert_to<double>();
            QuadResult qv = quad_log_integral({w, a, b, k});
            double e = rel_err(qv.value, cf);
            if (e >= worst) {
                worst = e;
                std::ostringstream os;
                os << "a=" << a << " b=" << b << " k=" << k;
                worst_case = os.str();
            }
        }
        add_numeric(r, "integrals", std::string(integral_name(w)) + " vs quadrature, " + std::to_string(cases) + " cases (worst " + worst_case + ")",
                    "relative", worst, tol);
    }
    // PV by the excision schedule at k = 0
    QuadratureSpec ex;
    ex.pv_excision = {1e-2L, 1e-3L, 1e-4L};
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        double a = std::exp(logmag(rng)), b = std::exp(logmag(rng));
        while (std::fabs(std::log(a) - std::log(b)) < 0.05) b = std::exp(logmag(rng));
        double cf = closed_form(IntegralKind::g1, {Rational(a), Rational(b), 0}, ctx).convert_to<double>();
        worst = std::max(worst, rel_err(quad_log_integral({IntegralKind::g1, a, b, 0}, ex).value, cf));
    }
    add_numeric(r, "integrals", "g1 k=0 principal value by excision {1e-2,1e-3,1e-4}, 20 cases", "relative", worst,
                std::max(tol, 1e-6));
    // the Z3 erratum: only the recursion's constant makes g2(3) match quadrature
    {
        IntegralParams p{Rational(1), Rational(2), 3};
        double cf = closed_form(IntegralKind::g2, p, ctx).convert_to<double>();
        add_numeric(r, "integrals", "g2 k=3 a=1 b=2 (uses Z3)", "relative",
                    rel_err(quad_log_integral({IntegralKind::g2, 1, 2, 3}).value, cf), tol);
    }
}

inline void suite_identities(VerifyReport& r, double tol)
{
    const PrecisionContext ctx = PrecisionContext::for_digits(30);
    for (const auto& info : identity_table()) {
        for (long h = info.odd_weight ? 1 : 0; h <= 4; ++h) {
            Complex lhs = identity_lhs(info.id, h, ctx), rhs = identity_rhs(info.id, h, ctx);
            PrecisionScope scope(ctx);
            Real d = boost::multiprecision::abs(lhs.re - rhs.re) + boost::multiprecision::abs(lhs.im - rhs.im);
            add_numeric(r, "identities", std::string(info.name) + " h=" + std::to_string(h), "absolute", d.convert_to<double>(), tol);
        }
    }
    for (long h = 0; h <= 2; ++h) {
        for (TermKind kind : {TermKind::zeta, TermKind::L}) {
            if (kind == TermKind::zeta && h < 1) continue;
            PrecisionScope scope(ctx);
            Real exact = to_real(base_integral_factor(kind, h)) *
                         (kind == TermKind::zeta ? zeta_odd(2 * h + 1, ctx) : l_chi3(2 * h + 2, ctx));
            double want = exact.convert_to<double>();
            add_numeric(r, "identities", std::string("base integral ") + term_kind_name(kind) + " h=" + std::to_string(h),
                        "relative", rel_err(base_integral(kind, h).value, want), tol);
        }
        double want = -(to_real(base_integral_factor(TermKind::L, h)) * l_chi3(2 * h + 2, ctx)).convert_to<double>();
        double got = static_cast<double>(unit_log_integral(h, 1).value + unit_log_integral(h, -1).value);
        add_numeric(r, "identities", "int_0^1 log^(2h+1) t over t^2+-t+1, h=" + std::to_string(h), "relative",
                    rel_err(got, want), tol);
    }
}

inline void suite_measures(VerifyReport& r, double tol)
{
    for (const auto& e : reference::measure_table()) {
        Basis basis = e.derivative ? Basis::derivative : Basis::critical;
        TermKind kind = e.zeta ? TermKind::zeta : TermKind::L;
        SqrtThreeNumber got = measure_expression(e.n, basis).coeff(kind, e.h);
        SqrtThreeNumber want = reference::entry_value(e);
        add_exact(r, "measures",
                  "n=" + std::to_string(e.n) + " " + basis_name(basis) + " " + term_kind_name(kind) + " h=" + std::to_string(e.h),
                  want.to_string(), got == want);
    }
    RationalityReport audit = rationality_audit(build_tables(10));
    add_exact(r, "measures", "rationality audit max_n=10 (" + std::to_string(audit.checked) + " entries)", "a,d rational; b,c in sqrt3*Q",
              audit.passed());
    const PrecisionContext ctx = PrecisionContext::for_digits(30);
    for (long n = 1; n <= 8; ++n) {
        MahlerExpression crit = measure_expression(n, Basis::critical);
        MahlerExpression der = measure_expression(n, Basis::derivative);
        add_exact(r, "measures", "n=" + std::to_string(n) + " basis round trip", "identity", to_derivative(to_critical(der)) == der);
        PrecisionScope scope(ctx);
        Real d = boost::multiprecision::abs(evaluate(crit, ctx) - evaluate(der, ctx));
        add_numeric(r, "measures", "n=" + std::to_string(n) + " critical vs derivative numeric", "absolute", d.convert_to<double>(),
                    std::max(tol, 1e-25));
    }
}

inline void suite_torus(VerifyReport& r)
{
    const PrecisionContext ctx = PrecisionContext::for_digits(30);
    const double tols[] = {1e-4, 1e-3};
    for (long n = 1; n <= 2; ++n) {
        double want = measure_numeric(n, ctx).convert_to<double>();
        double got = static_cast<double>(torus_measure(n).value);
        add_numeric(r, "torus", "m(Q" + std::to_string(n) + ") torus quadrature vs closed expression", "absolute",
                    std::fabs(got - want), tols[n - 1]);
    }
}

}  // namespace detail

// which: one of verify_suites() or "all"
inline VerifyReport verify_suite(const std::string& which, std::uint64_t seed = 42, double tol = 1e-8)
{
    if (which != "all" && std::find(verify_suites().begin(), verify_suites().end(), which) == verify_suites().end())
        throw DomainError("unknown verify suite: " + which);
    VerifyReport r;
    auto want = [&](const char* s) { return which == "all" || which == s; };
    if (want("polys")) detail::suite_polys(r);
    if (want("integrals")) detail::suite_integrals(r, seed, tol);
    if (want("identities")) detail::suite_identities(r, std::max(tol, 1e-10));
    if (want("measures")) detail::suite_measures(r, tol);
    if (want("torus")) detail::suite_torus(r);
    return r;
}

}  // namespace mahler
