#pragma once

#include "numbers.hpp"
#include "series.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

namespace mahler {

struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int chi3(long n)
{
    long r = ((n % 3) + 3) % 3;
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

struct Complex {
    Real re, im;
    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
    Real abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

// ------------------------------------------------------------ Hurwitz zeta

struct HurwitzValue {
    Real value;
    Real derivative;  // d/ds
};

namespace detail {

inline Real eps_for(const PrecisionContext& ctx)
{
    return boost::multiprecision::pow(Real(2), -static_cast<long>(ctx.bits) + 8);
}

}  // namespace detail

// zeta(s, q) and its s-derivative for integer s != 1 and 0 < q <= 1, by
// Euler-Maclaurin summation after N direct terms.
inline HurwitzValue hurwitz_zeta(long s, const Rational& q, const PrecisionContext& ctx)
{
    if (s == 1) throw DomainError("Hurwitz zeta has a pole at s = 1");
    if (q <= 0 || q > 1) throw DomainError("Hurwitz parameter must lie in (0, 1]");
    PrecisionScope scope(ctx);
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    using boost::multiprecision::abs;

    const long N = static_cast<long>(ctx.target_digits) + 2 * std::labs(s) + 20;
    const Real rs(s), rq = to_real(q);
    Real val = 0, der = 0;
    for (long n = 0; n < N; ++n) {
        Real base = Real(n) + rq;
        Real t = pow(base, -rs);
        val += t;
        der -= log(base) * t;
    }
    const Real a = Real(N) + rq, la = log(a);
    {
        Real t = pow(a, 1 - rs);
        val += t / (rs - 1);
        der += -la * t / (rs - 1) - t / ((rs - 1) * (rs - 1));
        Real h = pow(a, -rs) / 2;
        val += h;
        der -= la * h;
    }
    // rising product P = s(s+1)...(s+2k-2) and its derivative
    Real P = rs, dP = 1;
    const Real eps = detail::eps_for(ctx);
    Real scale = abs(val) + abs(der) + 1;
    const long k_max = 4 * static_cast<long>(ctx.target_digits) + 4 * std::labs(s) + 100;
    bool converged = false;
    for (long k = 1; k <= k_max; ++k) {
        if (k > 1) {
            for (long i : {2 * k - 3, 2 * k - 2}) {
                dP = dP * (rs + i) + P;
                P = P * (rs + i);
            }
        }
        Real c = to_real(bernoulli(static_cast<unsigned>(2 * k)) / Rational(factorial(static_cast<unsigned>(2 * k))));
        Real X = pow(a, -rs - 2 * k + 1);
        Real tv = c * P * X;
        Real td = c * (dP * X - P * la * X);
        val += tv;
        der += td;
        if (abs(tv) + abs(td) < eps * scale && k > 2) {
            converged = true;
            break;
        }
    }
    if (!converged) throw PrecisionUnreachable("Euler-Maclaurin tail did not reach the requested precision");
    return {val, der};
}

// zeta(m) for odd m >= 3
inline Real zeta_odd(long m, const PrecisionContext& ctx)
{
    if (m < 3 || m % 2 == 0) throw DomainError("zeta_odd needs an odd argument >= 3");
    return hurwitz_zeta(m, Rational(1), ctx).value;
}

// L(chi_-3, s) = 3^-s (zeta(s,1/3) - zeta(s,2/3))
inline Real l_chi3(long s, const PrecisionContext& ctx)
{
    if (s < 2) throw DomainError("l_chi3 needs s >= 2");
    PrecisionScope scope(ctx);
    Real d = hurwitz_zeta(s, Rational(1, 3), ctx).value - hurwitz_zeta(s, Rational(2, 3), ctx).value;
    return d / boost::multiprecision::pow(Real(3), s);
}

// Direct summation with the integral tail, in long double. Used as a cross-check.
inline long double zeta_direct(long m, long terms)
{
    long double s = 0;
    for (long n = terms; n >= 1; --n) s += std::pow(static_cast<long double>(n), -static_cast<long double>(m));
    long double N = static_cast<long double>(terms);
    return s + std::pow(N, 1.0L - m) / (m - 1) - std::pow(N, -static_cast<long double>(m)) / 2;
}

// Character series summed in period blocks, plus the first-order tail of the
// block sums. Used as a cross-check.
inline long double l_chi3_direct(long s, long blocks)
{
    long double acc = 0;
    for (long b = blocks - 1; b >= 0; --b) {
        long double x = 3.0L * b;
        acc += std::pow(x + 1, -static_cast<long double>(s)) - std::pow(x + 2, -static_cast<long double>(s));
    }
    // block b contributes ~ s / (3b)^(s+1); integrate from 3*blocks + 3/2
    long double start = 3.0L * blocks + 1.5L;
    return acc + std::pow(start, -static_cast<long double>(s)) / 3.0L;
}

// --------------------------------------------------------------- polylog

// Sixth roots of unity e^(i pi k / 3) by k: 1, -w^2, w, -1, w^2, -w.
enum class UnitPoint { one = 0, neg_omega_sq = 1, omega = 2, neg_one = 3, omega_sq = 4, neg_omega = 5 };

inline Complex unit_point_value(UnitPoint p, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    SqrtThreeNumber s = detail::sin_sixth(2 * static_cast<long>(p));
    SqrtThreeNumber c = detail::sin_sixth(2 * static_cast<long>(p) + 3);
    return {c.to_real(), s.to_real()};
}

// Li_n at a sixth root of unity: 6^-n sum_r e^(i pi k r/3) zeta(n, r/6).
inline Complex polylog(long n, UnitPoint p, const PrecisionContext& ctx)
{
    if (n < 2) throw DomainError("polylog order must be >= 2");
    PrecisionScope scope(ctx);
    long k = static_cast<long>(p);
    Complex acc{Real(0), Real(0)};
    for (long r = 1; r <= 6; ++r) {
        Real z = hurwitz_zeta(n, Rational(r, 6), ctx).value;
        SqrtThreeNumber s = detail::sin_sixth(2 * k * r);
        SqrtThreeNumber c = detail::sin_sixth(2 * k * r + 3);
        acc = acc + Complex{c.to_real() * z, s.to_real() * z};
    }
    Real scale = boost::multiprecision::pow(Real(6), -n);
    return scale * acc;
}

// Li_n(z) by direct summation for |z| <= 1 with an explicit tail bound:
// |z|^(K+1)/((1-|z|) K^n) inside the disk, 2/(|1-z| (K+1)^n) on the circle
// (partial summation). Points on the circle that are sixth roots of unity go
// through the Hurwitz form.
inline Complex polylog(long n, const Complex& z, const PrecisionContext& ctx, long max_terms = 20000000)
{
    if (n < 2) throw DomainError("polylog order must be >= 2");
    PrecisionScope scope(ctx);
    using boost::multiprecision::pow;
    const Real r = z.abs();
    const Real eps = detail::eps_for(ctx);
    const Real slack = pow(Real(2), -static_cast<long>(ctx.bits) / 2);
    if (r > 1 + slack) throw DomainError("polylog argument outside the closed unit disk");
    if (r == 0) return {Real(0), Real(0)};
    bool on_circle = boost::multiprecision::abs(r - 1) <= slack;
    if (on_circle) {
        Real turns = boost::multiprecision::atan2(z.im, z.re) * 3 / real_pi();
        Real nearest = boost::multiprecision::round(turns);
        if (boost::multiprecision::abs(turns - nearest) < slack) {
            long k = ((nearest.convert_to<long>() % 6) + 6) % 6;
            return polylog(n, static_cast<UnitPoint>(k), ctx);
        }
    }
    // choose K from the bound
    Real one_minus = on_circle ? Complex{1 - z.re, -z.im}.abs() : Real(1 - r);
    long K = 1;
    auto bound = [&](long kk) {
        if (on_circle) return Real(2 / (one_minus * pow(Real(kk + 1), n)));
        return Real(pow(r, kk + 1) / (one_minus * pow(Real(kk), n)));
    };
    while (bound(K) > eps) {
        K *= 2;
        if (K > max_terms) throw PrecisionUnreachable("polylog direct summation needs more than the term budget");
    }
    Complex acc{Real(0), Real(0)}, zk = z;
    for (long k = 1; k <= K; ++k) {
        Real w = pow(Real(k), -n);
        acc = acc + w * zk;
        zk = zk * z;
    }
    return acc;
}

// ------------------------------------------------------------- identities

enum class Identity { li_one, li_neg_one, omega_sum, neg_omega_sum, omega_diff, neg_omega_diff };

struct IdentityInfo {
    Identity id;
    const char* name;
    const char* alias;
    bool odd_weight;  // weight 2h+1 against zeta, else 2h+2 against i*L
};

inline const std::vector<IdentityInfo>& identity_table()
{
    static const std::vector<IdentityInfo> t{
        {Identity::li_one, "Li_{2h+1}(1)", "li-one", true},
        {Identity::li_neg_one, "Li_{2h+1}(-1)", "li-neg-one", true},
        {Identity::omega_sum, "Li(ω)+Li(ω²)", "omega-sum", true},
        {Identity::neg_omega_sum, "Li(−ω)+Li(−ω²)", "neg-omega-sum", true},
        {Identity::omega_diff, "Li(ω²)−Li(ω)", "omega-diff", false},
        {Identity::neg_omega_diff, "Li(−ω)−Li(−ω²)", "neg-omega-diff", false},
    };
    return t;
}

inline const IdentityInfo& identity_info(Identity id) { return identity_table()[static_cast<std::size_t>(id)]; }

inline Identity parse_identity(const std::string& s)
{
    for (const auto& info : identity_table())
        if (s == info.name || s == info.alias) return info.id;
    // tolerate a trailing " weight 2h+2"
    for (const auto& info : identity_table())
        if (s.rfind(info.name, 0) == 0) return info.id;
    throw DomainError("unknown identity: " + s);
}

struct IdentityReduction {
    Identity id;
    long weight;
    bool against_zeta;        // coefficient of zeta(weight), else of i*L(chi_-3, weight)
    SqrtThreeNumber coeff;
};

inline IdentityReduction reduce_identity(Identity id, long h)
{
    const IdentityInfo& info = identity_info(id);
    if (info.odd_weight && h < 1) throw DomainError("odd-weight identities need h >= 1");
    if (!info.odd_weight && h < 0) throw DomainError("L identities need h >= 0");
    auto inv_pow = [](long b, long e) -> Rational { return Rational(1) / pow_rational(Rational(b), static_cast<unsigned>(e)); };
    SqrtThreeNumber c;
    switch (id) {
    case Identity::li_one: c = SqrtThreeNumber(1); break;
    case Identity::li_neg_one: c = SqrtThreeNumber(Rational(-(1 - inv_pow(4, h)))); break;
    case Identity::omega_sum: c = SqrtThreeNumber(Rational(-(1 - inv_pow(9, h)))); break;
    case Identity::neg_omega_sum: c = SqrtThreeNumber(Rational((1 - inv_pow(9, h)) * (1 - inv_pow(4, h)))); break;
    case Identity::omega_diff: c = SqrtThreeNumber::root_part(Rational(-1)); break;
    case Identity::neg_omega_diff: c = SqrtThreeNumber::root_part(Rational(-(1 + inv_pow(2, 2 * h + 1)))); break;
    }
    return {id, info.odd_weight ? 2 * h + 1 : 2 * h + 2, info.odd_weight, c};
}

// Left side of an identity evaluated from polylog values.
inline Complex identity_lhs(Identity id, long h, const PrecisionContext& ctx)
{
    const IdentityInfo& info = identity_info(id);
    long w = info.odd_weight ? 2 * h + 1 : 2 * h + 2;
    auto li = [&](UnitPoint p) { return polylog(w, p, ctx); };
    switch (id) {
    case Identity::li_one: return li(UnitPoint::one);
    case Identity::li_neg_one: return li(UnitPoint::neg_one);
    case Identity::omega_sum: return li(UnitPoint::omega) + li(UnitPoint::omega_sq);
    case Identity::neg_omega_sum: return li(UnitPoint::neg_omega) + li(UnitPoint::neg_omega_sq);
    case Identity::omega_diff: return li(UnitPoint::omega_sq) - li(UnitPoint::omega);
    case Identity::neg_omega_diff: return li(UnitPoint::neg_omega) - li(UnitPoint::neg_omega_sq);
    }
    throw DomainError("unhandled identity");
}

// Right side: coeff * zeta(w) or coeff * i * L(chi_-3, w).
inline Complex identity_rhs(Identity id, long h, const PrecisionContext& ctx)
{
    IdentityReduction r = reduce_identity(id, h);
    PrecisionScope scope(ctx);
    if (r.against_zeta) return {r.coeff.to_real() * zeta_odd(r.weight, ctx), Real(0)};
    return {Real(0), r.coeff.to_real() * l_chi3(r.weight, ctx)};
}

// ---------------------------------------------------------- derivative basis

enum class DerivKind { zeta, L };

struct DerivBasisValue {
    Real value;              // factor * critical value
    SqrtThreeNumber factor;  // zeta'(-2h) = factor * zeta(2h+1)/pi^2h, L'(-2h-1) = factor * L(2h+2)/pi^(2h+1)
};

inline SqrtThreeNumber deriv_factor(long h, DerivKind which)
{
    if (which == DerivKind::zeta) {
        if (h < 1) throw DomainError("zeta'(-2h) needs h >= 1");
        Rational f(factorial(static_cast<unsigned>(2 * h)), Integer(1) << (2 * h + 1));
        f.canonicalize();
        return SqrtThreeNumber(h % 2 ? Rational(-f) : f);
    }
    if (h < 0) throw DomainError("L'(-2h-1) needs h >= 0");
    // (2h+1)! 3^(2h+2) / (2^(2h+2) sqrt3) = (2h+1)! 3^(2h+1) sqrt3 / 2^(2h+2)
    Rational f(factorial(static_cast<unsigned>(2 * h + 1)) * detail::ipow(3, static_cast<unsigned>(2 * h + 1)),
               Integer(1) << (2 * h + 2));
    f.canonicalize();
    return SqrtThreeNumber::root_part(h % 2 ? Rational(-f) : f);
}

inline DerivBasisValue deriv_basis(long h, DerivKind which, const PrecisionContext& ctx)
{
    SqrtThreeNumber f = deriv_factor(h, which);
    PrecisionScope scope(ctx);
    Real pi = real_pi();
    Real crit = which == DerivKind::zeta ? Real(zeta_odd(2 * h + 1, ctx) / boost::multiprecision::pow(pi, 2 * h))
                                         : Real(l_chi3(2 * h + 2, ctx) / boost::multiprecision::pow(pi, 2 * h + 1));
    return {f.to_real() * crit, f};
}

// zeta'(s) at an integer s != 1, straight from the Euler-Maclaurin derivative.
inline Real zeta_deriv_direct(long s, const PrecisionContext& ctx)
{
    return hurwitz_zeta(s, Rational(1), ctx).derivative;
}

// L'(chi_-3, s) = d/ds 3^-s (zeta(s,1/3) - zeta(s,2/3))
inline Real l_chi3_deriv_direct(long s, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    HurwitzValue a = hurwitz_zeta(s, Rational(1, 3), ctx);
    HurwitzValue b = hurwitz_zeta(s, Rational(2, 3), ctx);
    Real w = boost::multiprecision::pow(Real(3), -s);
    return w * ((a.derivative - b.derivative) - boost::multiprecision::log(Real(3)) * (a.value - b.value));
}

}  // namespace mahler
