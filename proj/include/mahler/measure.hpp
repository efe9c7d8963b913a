#pragma once

#include "coeffs.hpp"
#include "lvalues.hpp"

namespace mahler {

enum class Basis { critical, derivative };

inline const char* basis_name(Basis b) { return b == Basis::critical ? "critical" : "derivative"; }

inline Basis parse_basis(const std::string& s)
{
    if (s == "critical") return Basis::critical;
    if (s == "derivative") return Basis::derivative;
    throw DomainError("unknown basis: " + s);
}

// zeta: zeta(2h+1)/pi^2h (critical) or zeta'(-2h) (derivative)
// L:    L(chi_-3,2h+2)/pi^(2h+1) (critical) or L'(chi_-3,-2h-1) (derivative)
enum class TermKind { zeta, L };

inline const char* term_kind_name(TermKind k) { return k == TermKind::zeta ? "zeta" : "L"; }

inline DerivKind to_deriv_kind(TermKind k) { return k == TermKind::zeta ? DerivKind::zeta : DerivKind::L; }

struct BasisTerm {
    TermKind kind;
    long h;
    SqrtThreeNumber coeff;

    std::string label(Basis basis) const
    {
        if (basis == Basis::critical)
            return kind == TermKind::zeta ? "zeta(" + std::to_string(2 * h + 1) + ")/pi^" + std::to_string(2 * h)
                                          : "L(chi_-3," + std::to_string(2 * h + 2) + ")/pi^" + std::to_string(2 * h + 1);
        return kind == TermKind::zeta ? "zeta'(-" + std::to_string(2 * h) + ")"
                                      : "L'(chi_-3,-" + std::to_string(2 * h + 1) + ")";
    }
};

struct MahlerExpression {
    long n = 0;
    Basis basis = Basis::critical;
    std::vector<BasisTerm> terms;  // ordered by (kind, h)

    const SqrtThreeNumber& coeff(TermKind kind, long h) const
    {
        static const SqrtThreeNumber zero;
        for (const auto& t : terms)
            if (t.kind == kind && t.h == h) return t.coeff;
        return zero;
    }

    friend bool operator==(const MahlerExpression& x, const MahlerExpression& y)
    {
        if (x.n != y.n || x.basis != y.basis || x.terms.size() != y.terms.size()) return false;
        for (std::size_t i = 0; i < x.terms.size(); ++i) {
            const auto &s = x.terms[i], &t = y.terms[i];
            if (s.kind != t.kind || s.h != t.h || s.coeff != t.coeff) return false;
        }
        return true;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& t : terms) {
            if (!s.empty()) s += " + ";
            s += "(" + t.coeff.to_string() + ")*" + t.label(basis);
        }
        return s.empty() ? "0" : s;
    }
};

// C(h) = (2h)!(1-3^(-2h-1))(1-2^(-2h-1)),  D(h) = (2h+1)!(1+2^(-2h-2))
inline Rational zeta_packet(long h)
{
    Rational r(factorial(static_cast<unsigned>(2 * h)));
    r *= Rational(1) - Rational(1) / pow_rational(Rational(3), static_cast<unsigned>(2 * h + 1));
    r *= Rational(1) - Rational(1) / pow_rational(Rational(2), static_cast<unsigned>(2 * h + 1));
    return r;
}

inline Rational l_packet(long h)
{
    Rational r(factorial(static_cast<unsigned>(2 * h + 1)));
    r *= Rational(1) + Rational(1) / pow_rational(Rational(2), static_cast<unsigned>(2 * h + 2));
    return r;
}

// Value of the canonical single integral in terms of zeta / L:
//   zeta kind: int log+|y| (y+1)/(y^3-1) log^(2h-1)|y| dy = 2 C(h) zeta(2h+1)
//   L kind:    int log+|y| log^(2h)|y| / (y^2+y+1) dy   = 2 D(h) L(chi_-3, 2h+2)
inline Rational base_integral_factor(TermKind kind, long h) { return 2 * (kind == TermKind::zeta ? zeta_packet(h) : l_packet(h)); }

struct FFormTerm {
    TermKind kind;
    long h;
    SqrtThreeNumber coeff;  // multiplies (pi/3)^third_pi_power times the base integral
    long third_pi_power;
};

struct FForm {
    long k = 0;
    std::vector<FFormTerm> terms;
};

inline FForm f_form(long k, const CoefficientTable& t)
{
    if (k < 1) throw DomainError("F(k) needs k >= 1");
    const long N = k / 2;
    if (t.max_n < N) throw DomainError("coefficient table too shallow");
    FForm out;
    out.k = k;
    if (k % 2 == 0) {
        for (long h = 1; h <= N; ++h) out.terms.push_back({TermKind::zeta, h, t.A(N, h - 1), 2 * N - 2 * h});
        for (long h = 0; h <= N - 1; ++h) out.terms.push_back({TermKind::L, h, t.B(N, h), 2 * N - 2 * h - 1});
    } else {
        for (long h = 1; h <= N; ++h) out.terms.push_back({TermKind::zeta, h, t.C(N, h - 1), 2 * N - 2 * h + 1});
        for (long h = 0; h <= N; ++h) out.terms.push_back({TermKind::L, h, t.D(N, h), 2 * N - 2 * h});
    }
    return out;
}

inline FForm f_form(long k) { return f_form(k, build_tables(k / 2)); }

inline MahlerExpression to_derivative(const MahlerExpression& e)
{
    if (e.basis == Basis::derivative) return e;
    MahlerExpression out{e.n, Basis::derivative, {}};
    for (const auto& t : e.terms) out.terms.push_back({t.kind, t.h, t.coeff / deriv_factor(t.h, to_deriv_kind(t.kind))});
    return out;
}

inline MahlerExpression to_critical(const MahlerExpression& e)
{
    if (e.basis == Basis::critical) return e;
    MahlerExpression out{e.n, Basis::critical, {}};
    for (const auto& t : e.terms) out.terms.push_back({t.kind, t.h, t.coeff * deriv_factor(t.h, to_deriv_kind(t.kind))});
    return out;
}

inline MahlerExpression convert(const MahlerExpression& e, Basis basis)
{
    return basis == Basis::critical ? to_critical(e) : to_derivative(e);
}

// m(Q_n) = (sqrt3/(2 pi))^n F(n); (pi/3)^e / pi^n leaves exactly the pi power of each basis element.
inline MahlerExpression measure_expression(long n, Basis basis, const CoefficientTable& t)
{
    if (n < 1) throw DomainError("measure needs n >= 1");
    FForm f = f_form(n, t);
    SqrtThreeNumber scale = pow(SqrtThreeNumber::root_part(Rational(1, 2)), static_cast<unsigned>(n));
    MahlerExpression e{n, Basis::critical, {}};
    for (const auto& term : f.terms) {
        Rational r = base_integral_factor(term.kind, term.h) / pow_rational(Rational(3), static_cast<unsigned>(term.third_pi_power));
        e.terms.push_back({term.kind, term.h, term.coeff * scale * SqrtThreeNumber(r)});
    }
    return convert(e, basis);
}

inline MahlerExpression measure_expression(long n, Basis basis)
{
    if (n < 1) throw DomainError("measure needs n >= 1");
    return measure_expression(n, basis, build_tables(n / 2));
}

// Critical-basis elements are evaluated with zeta_odd / l_chi3; derivative-basis
// elements come straight from the Euler-Maclaurin derivative, so the two bases
// are independent renderings.
inline Real basis_value(const BasisTerm& t, Basis basis, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    if (basis == Basis::critical) {
        Real pi = real_pi();
        return t.kind == TermKind::zeta ? Real(zeta_odd(2 * t.h + 1, ctx) / boost::multiprecision::pow(pi, 2 * t.h))
                                        : Real(l_chi3(2 * t.h + 2, ctx) / boost::multiprecision::pow(pi, 2 * t.h + 1));
    }
    return t.kind == TermKind::zeta ? zeta_deriv_direct(-2 * t.h, ctx) : l_chi3_deriv_direct(-2 * t.h - 1, ctx);
}

inline Real evaluate(const MahlerExpression& e, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    Real acc = 0;
    for (const auto& t : e.terms) acc += t.coeff.to_real() * basis_value(t, e.basis, ctx);
    return acc;
}

inline Real measure_numeric(long n, const PrecisionContext& ctx, Basis basis = Basis::critical)
{
    return evaluate(measure_expression(n, basis), ctx);
}

}  // namespace mahler
