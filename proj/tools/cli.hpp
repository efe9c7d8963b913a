#pragma once

#include "render.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

namespace mahler::cli {

// Exact value of a decimal or fractional literal: "3", "-1/2", "0.25", "2.5e-3".
inline Rational parse_exact(const std::string& s)
{
    if (s.find_first_of(".eE") == std::string::npos) return parse_rational(s);
    std::size_t epos = s.find_first_of("eE");
    std::string mant = s.substr(0, epos);
    long exp10 = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
    std::size_t dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "-" || mant == "+") throw DomainError("bad number: " + s);
    if (mant.front() == '+') mant.erase(0, 1);
    Rational q = parse_rational(mant);
    Rational scale = pow_rational(Rational(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    return exp10 < 0 ? Rational(q / scale) : Rational(q * scale);
}

struct Globals {
    bool json = false;
    unsigned digits = 30;
    std::uint64_t seed = 42;
};

inline void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

inline int cmd_poly(std::ostream& out, const Globals& g, const std::string& fam, long k)
{
    ParityPolynomial p = get_poly(parse_family(fam), k);
    if (g.json) print_json(out, render::poly_json(fam, "k", k, p));
    else out << p.to_string() << "\n";
    return 0;
}

inline int cmd_altpoly(std::ostream& out, const Globals& g, const std::string& fam, long m, const std::string& method)
{
    SeriesFamily f = parse_series_family(fam);
    ParityPolynomial p = method == "convolution" ? convolution_family(f, m) : extract_family(f, m);
    if (g.json) {
        auto j = render::poly_json(fam, "m", m, p);
        j["method"] = method;
        print_json(out, j);
    } else {
        out << p.to_string() << "\n";
    }
    return 0;
}

inline int cmd_integral(std::ostream& out, const Globals& g, const std::string& which, const std::string& a, const std::string& b,
                        long k, bool check)
{
    IntegralKind w = parse_integral(which);
    IntegralParams p{parse_exact(a), parse_exact(b), k};
    PrecisionContext ctx = PrecisionContext::for_digits(g.digits);
    std::string value = real_text(closed_form(w, p, ctx), g.digits);
    SymbolicForm form = closed_form_symbolic(w, p);
    std::string quad;
    if (check) {
        std::ostringstream os;
        os << std::setprecision(17)
           << static_cast<double>(quad_log_integral({w, static_cast<Float>(p.a.get_d()), static_cast<Float>(p.b.get_d()), k}).value);
        quad = os.str();
    }
    if (g.json) {
        nlohmann::json j = {{"which", which}, {"a", rational_json(p.a)}, {"b", rational_json(p.b)}, {"k", k},
                            {"value", value}, {"exact", render::symbolic_json(form)}};
        if (check) j["quadrature"] = quad;
        print_json(out, j);
    } else {
        out << which << "(k=" << k << ", a=" << p.a.get_str() << ", b=" << p.b.get_str() << ") = " << value << "\n";
        out << "exact: " << form.to_string() << "   (La = log|a|, Lb = log|b|)\n";
        if (check) out << "quadrature: " << quad << "\n";
    }
    return 0;
}

inline int cmd_special(std::ostream& out, const Globals& g, long zeta, long lchi, const std::string& identity, long h)
{
    PrecisionContext ctx = PrecisionContext::for_digits(g.digits);
    nlohmann::json j;
    std::ostringstream text;
    if (zeta) {
        if (zeta < 2) throw DomainError("zeta(s) needs s >= 2");
        std::string v = real_text(hurwitz_zeta(zeta, Rational(1), ctx).value, g.digits);
        j = {{"function", "zeta"}, {"s", zeta}, {"value", v}};
        text << "zeta(" << zeta << ") = " << v << "\n";
    } else if (lchi) {
        if (lchi < 1) throw DomainError("L(chi_-3, s) needs s >= 1");
        std::string v = real_text(l_chi3(lchi, ctx), g.digits);
        j = {{"function", "lchi3"}, {"s", lchi}, {"value", v}};
        text << "L(chi_-3," << lchi << ") = " << v << "\n";
    } else {
        Identity id = parse_identity(identity);
        IdentityReduction red = reduce_identity(id, h);
        Complex lhs = identity_lhs(id, h, ctx), rhs = identity_rhs(id, h, ctx);
        std::string against = red.against_zeta ? "zeta(" + std::to_string(red.weight) + ")"
                                               : "i*L(chi_-3," + std::to_string(red.weight) + ")";
        PrecisionScope scope(ctx);
        Real diff = boost::multiprecision::abs(lhs.re - rhs.re) + boost::multiprecision::abs(lhs.im - rhs.im);
        j = {{"identity", identity_info(id).name}, {"h", h},       {"weight", red.weight},
             {"against", against},                 {"coeff", render::to_json(red.coeff)},
             {"lhs", {real_text(lhs.re, g.digits), real_text(lhs.im, g.digits)}},
             {"rhs", {real_text(rhs.re, g.digits), real_text(rhs.im, g.digits)}},
             {"difference", real_text(diff, 6)}};
        text << identity_info(id).name << " (h=" << h << ", weight " << red.weight << ") = (" << red.coeff.to_string() << ")*"
             << against << "\n";
        text << "  lhs = " << real_text(lhs.re, g.digits) << " + " << real_text(lhs.im, g.digits) << "*i\n";
        text << "  rhs = " << real_text(rhs.re, g.digits) << " + " << real_text(rhs.im, g.digits) << "*i\n";
        text << "  |lhs - rhs| = " << real_text(diff, 6) << "\n";
    }
    if (g.json) print_json(out, j);
    else out << text.str();
    return 0;
}

inline int cmd_coeffs(std::ostream& out, const Globals& g, long n)
{
    CoefficientTable t = build_tables(n);
    if (g.json) {
        print_json(out, render::coeffs_json(t));
        return 0;
    }
    PrecisionContext ctx = PrecisionContext::for_digits(g.digits);
    auto dump = [&](char name, const std::map<CoeffIndex, SqrtThreeNumber>& m) {
        for (const auto& [idx, v] : m)
            out << name << "[" << idx.first << "," << idx.second << "] = " << v.to_string() << "  ~ "
                << real_text(v.to_real(), std::min(g.digits, 20u)) << "\n";
    };
    {
        PrecisionScope scope(ctx);
        dump('a', t.a);
        dump('b', t.b);
        dump('c', t.c);
        dump('d', t.d);
    }
    return 0;
}

inline int cmd_measure(std::ostream& out, const Globals& g, long n, const std::string& basis)
{
    PrecisionContext ctx = PrecisionContext::for_digits(g.digits);
    MahlerExpression e = measure_expression(n, parse_basis(basis));
    std::string numeric = real_text(evaluate(e, ctx), g.digits);
    if (g.json) print_json(out, render::expression_json(e, numeric));
    else out << "m(Q_" << n << ") = " << e.to_string() << "\n        = " << numeric << "\n";
    return 0;
}

inline int cmd_table(std::ostream& out, const Globals& g, long max_n)
{
    PrecisionContext ctx = PrecisionContext::for_digits(g.digits);
    nlohmann::json rows = nlohmann::json::array();
    for (long n = 1; n <= max_n; ++n) {
        MahlerExpression crit = measure_expression(n, Basis::critical);
        MahlerExpression der = to_derivative(crit);
        std::string numeric = real_text(evaluate(crit, ctx), g.digits);
        if (g.json) {
            rows.push_back({{"n", n}, {"critical", render::expression_json(crit, numeric)},
                            {"derivative", render::expression_json(der, real_text(evaluate(der, ctx), g.digits))}});
        } else {
            out << "n = " << n << "\n  " << crit.to_string() << "\n  " << der.to_string() << "\n  ~ " << numeric << "\n";
        }
    }
    if (g.json) print_json(out, rows);
    return 0;
}

inline int cmd_verify(std::ostream& out, const Globals& g, const std::string& suite, double tol)
{
    VerifyReport r = verify_suite(suite, g.seed, tol);
    if (g.json) {
        print_json(out, render::report_json(r));
    } else {
        for (const auto& c : r.checks) {
            const char* status = c.passed ? "PASS" : (c.note.empty() ? "FAIL" : "ERRATUM");
            out << std::left << std::setw(8) << status << "[" << c.suite << "] " << c.name;
            if (c.tolerance > 0) out << "  err=" << std::setprecision(3) << c.error << " tol=" << c.tolerance;
            if (!c.note.empty() && !c.passed) out << "  (" << c.note << ")";
            out << "\n";
        }
        out << r.checks.size() << " checks, " << r.failures() << " failures\n";
    }
    return r.all_passed() ? 0 : 1;
}

// Returns the process exit code: 0 success, 1 computation failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Exact Mahler measures of the Q_n family and their ingredient polynomials", "mahler"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--digits", g.digits, "decimal digits for numeric output")->check(CLI::Range(10u, 100000u));
    app.add_option("--seed", g.seed, "seed for randomized checks");

    std::string family, which, a, b, identity, basis = "critical", method = "series", suite = "all";
    long k = 0, m = 0, n = 1, h = 1, zeta = 0, lchi = 0, max_n = 4;
    bool check = false;
    double tol = 1e-8;
    const std::vector<std::string> recursive_names{"R", "S", "P", "Q", "Y", "Z"};
    std::vector<std::string> series_names;
    for (SeriesFamily f : all_series_families()) series_names.push_back(series_family_name(f));

    auto* poly = app.add_subcommand("poly", "recursively defined polynomial R, S, P, Q, Y or Z");
    poly->add_option("--family", family)->required()->check(CLI::IsMember(recursive_names));
    poly->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);

    auto* alt = app.add_subcommand("altpoly", "series-defined polynomial A..O");
    alt->add_option("--family", family)->required()->check(CLI::IsMember(series_names));
    alt->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
    alt->add_option("--method", method)->check(CLI::IsMember({"series", "convolution"}));

    auto* integral = app.add_subcommand("integral", "closed form of a log-power integral");
    integral->add_option("--which", which)->required()->check(CLI::IsMember({"f1", "f2", "g1", "g2", "fsum", "gsum"}));
    integral->add_option("--a", a)->required();
    integral->add_option("--b", b)->required();
    integral->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    integral->add_flag("--check", check, "also evaluate by quadrature");

    auto* special = app.add_subcommand("special", "zeta, L(chi_-3) and polylog identities");
    special->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    auto* zopt = special->add_option("--zeta", zeta, "zeta(s)");
    auto* lopt = special->add_option("--lchi3", lchi, "L(chi_-3, s)");
    auto* iopt = special->add_option("--identity", identity, "identity name or alias");
    special->add_option("--h", h);
    zopt->excludes(lopt)->excludes(iopt);
    lopt->excludes(iopt);

    auto* coeffs = app.add_subcommand("coeffs", "coefficient tables a, b, c, d");
    coeffs->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

    auto* measure = app.add_subcommand("measure", "exact m(Q_n)");
    measure->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    measure->add_option("--basis", basis)->check(CLI::IsMember({"critical", "derivative"}));

    auto* table = app.add_subcommand("table", "rows of the m(Q_n) table in both bases");
    table->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "oracle batteries");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "polys", "integrals", "identities", "measures", "torus"}));
    verify->add_option("--tol", tol)->check(CLI::PositiveNumber);

    // global flags are accepted after the subcommand too
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    if (special->parsed() && zopt->count() + lopt->count() + iopt->count() == 0) {
        err << "special: one of --zeta, --lchi3, --identity is required\n";
        return 2;
    }

    try {
        if (poly->parsed()) return cmd_poly(out, g, family, k);
        if (alt->parsed()) return cmd_altpoly(out, g, family, m, method);
        if (integral->parsed()) return cmd_integral(out, g, which, a, b, k, check);
        if (special->parsed()) return cmd_special(out, g, zeta, lchi, identity, h);
        if (coeffs->parsed()) return cmd_coeffs(out, g, n);
        if (measure->parsed()) return cmd_measure(out, g, n, basis);
        if (table->parsed()) return cmd_table(out, g, max_n);
        if (verify->parsed()) return cmd_verify(out, g, suite, tol);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace mahler::cli
