#pragma once

#include "closedforms.hpp"
#include "measure.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <sstream>

namespace mahler {

using Float = long double;

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadResult {
    Float value = 0;
    Float error = 0;
};

struct QuadratureSpec {
    Float abs_tol = 1e-15L;
    Float rel_tol = 1e-13L;
    unsigned max_depth = 30;
    // symmetric excision radii around a pole; empty means singular-part subtraction
    std::vector<Float> pv_excision;

    void require() const
    {
        if (!(abs_tol > 0) || !(rel_tol > 0)) throw DomainError("quadrature tolerances must be positive");
        for (Float r : pv_excision)
            if (!(r > 0)) throw DomainError("excision radii must be positive");
    }
};

struct IntegrandSpec {
    IntegralKind kind;
    Float a, b;
    long k;
};

namespace detail {

struct Panel {
    Float lo, hi, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

inline Panel gk_panel(const std::function<Float(Float)>& f, Float lo, Float hi)
{
    Float err = 0;
    Float v = boost::math::quadrature::gauss_kronrod<Float, 15>::integrate(f, lo, hi, 0, 0, &err);
    // Boost 1.74 reports the single-panel error on the reference interval [-1, 1]
    return {lo, hi, v, err * (hi - lo) / 2};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15): bisect the panel with the largest
// error until the summed error meets the tolerance. A half-infinite range is
// mapped onto [0, 1) first.
inline QuadResult gk_integrate(const std::function<Float(Float)>& f, Float lo, Float hi, const QuadratureSpec& q)
{
    if (std::isinf(hi)) {
        auto g = [&](Float u) {
            Float w = 1 - u;
            return u < 1 ? f(lo + u / w) / (w * w) : Float(0);
        };
        return gk_integrate(g, 0, 1, q);
    }
    std::priority_queue<detail::Panel> heap;
    detail::Panel first = detail::gk_panel(f, lo, hi);
    Float total = first.value, err = first.error;
    heap.push(first);
    // each split is one panel; panels narrower than rounding are not split
    const unsigned max_panels = 1u << std::min(q.max_depth, 20u);
    for (unsigned n = 1; n < max_panels && err > std::max(q.abs_tol, q.rel_tol * std::fabs(total)); ++n) {
        detail::Panel p = heap.top();
        Float mid = (p.lo + p.hi) / 2;
        if (!(mid > p.lo && mid < p.hi) || (p.hi - p.lo) < 64 * std::numeric_limits<Float>::epsilon() * std::fabs(mid)) break;
        heap.pop();
        detail::Panel l = detail::gk_panel(f, p.lo, mid), r = detail::gk_panel(f, mid, p.hi);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
    }
    // re-sum to avoid drift from the incremental updates
    total = 0;
    err = 0;
    for (; !heap.empty(); heap.pop()) {
        total += heap.top().value;
        err += heap.top().error;
    }
    if (!std::isfinite(total) || err > std::max(q.abs_tol, 100 * q.rel_tol * std::fabs(total))) {
        std::ostringstream os;
        os << "quadrature did not converge on [" << static_cast<double>(lo) << ", " << static_cast<double>(hi)
           << "]: error " << static_cast<double>(err);
        throw QuadratureFailure(os.str());
    }
    return {total, err};
}

inline QuadResult operator+(QuadResult x, const QuadResult& y) { return {x.value + y.value, x.error + y.error}; }

inline Float integrand_value(const IntegrandSpec& s, Float t)
{
    Float lk = std::pow(std::log(t), static_cast<Float>(s.k));
    Float a = s.a, b = s.b;
    auto f1 = [&](Float a_, Float b_) { return t / ((t * t + a_ * t + a_ * a_) * (t * t + b_ * t + b_ * b_)); };
    auto g1 = [&](Float a_, Float b_) { return t * (t + a_) / ((t * t * t - a_ * a_ * a_) * (t * t + b_ * t + b_ * b_)); };
    switch (s.kind) {
    case IntegralKind::f1: return lk * f1(a, b);
    case IntegralKind::f2: return lk * f1(-a, -b);
    case IntegralKind::g1: return lk * g1(a, b);
    case IntegralKind::g2: return lk * g1(-a, -b);
    case IntegralKind::fsum: return lk * (f1(a, b) + f1(-a, -b));
    case IntegralKind::gsum: return lk * (g1(a, b) + g1(-a, -b));
    }
    return 0;
}

// A simple pole on (0, inf) sits at t = |a| for g1 (a > 0) and for the g-sum.
inline bool has_pole(const IntegrandSpec& s)
{
    return s.kind == IntegralKind::g1 || s.kind == IntegralKind::gsum;
}

// Residue at t = |a|; the same in v = log t.
inline Float pole_residue(const IntegrandSpec& s)
{
    Float la = std::log(std::fabs(s.a));
    return 2 * std::pow(la, static_cast<Float>(s.k)) / (3 * (s.a * s.a + s.a * s.b + s.b * s.b));
}

namespace detail {

inline Float log_window(long k) { return 40 + 2 * static_cast<Float>(k); }

inline QuadResult integrate_segments(const std::function<Float(Float)>& h, std::vector<Float> pts, const QuadratureSpec& q)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    QuadResult acc;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) acc = acc + gk_integrate(h, pts[i], pts[i + 1], q);
    return acc;
}

// Solve the small dense system for Richardson extrapolation.
inline std::vector<Float> solve_dense(std::vector<std::vector<Float>> m, std::vector<Float> rhs)
{
    const std::size_t n = rhs.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Float f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    std::vector<Float> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Float s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return x;
}

}  // namespace detail

// Excised integral with the symmetric gap (|a| - r, |a| + r) removed.
inline QuadResult excised_integral(const IntegrandSpec& s, Float r, const QuadratureSpec& q)
{
    Float pole = std::fabs(s.a);
    if (!(r < pole)) throw DomainError("excision radius exceeds the pole location");
    const Float V = detail::log_window(s.k);
    auto h = [&](Float v) { Float t = std::exp(v); return integrand_value(s, t) * t; };
    Float lo = std::log(pole - r), hi = std::log(pole + r);
    std::vector<Float> left{-V, lo}, right{hi, V};
    for (Float p : {Float(0), std::log(std::fabs(s.b))}) {
        if (p > -V && p < lo) left.push_back(p);
        if (p > hi && p < V) right.push_back(p);
    }
    return detail::integrate_segments(h, left, q) + detail::integrate_segments(h, right, q);
}

// PV from excised integrals: PV_r = PV + c1 r + c3 r^3 + ..., fitted through the schedule.
inline QuadResult pv_by_excision(const IntegrandSpec& s, const QuadratureSpec& q)
{
    const auto& radii = q.pv_excision;
    std::vector<std::vector<Float>> m;
    std::vector<Float> rhs;
    Float err = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        QuadResult part = excised_integral(s, radii[i], q);
        std::vector<Float> row{1};
        for (std::size_t j = 1; j < radii.size(); ++j) row.push_back(std::pow(radii[i], static_cast<Float>(2 * j - 1)));
        m.push_back(row);
        rhs.push_back(part.value);
        err = std::max(err, part.error);
    }
    auto x = detail::solve_dense(m, rhs);
    return {x[0], err};
}

// Integrates over t in (0, inf) as v = log t over a finite window; the
// endpoint behaviour t log^k t at 0 and t^-2 log^k t at infinity becomes
// exponential decay in v.
inline QuadResult quad_log_integral(const IntegrandSpec& s, const QuadratureSpec& q = {})
{
    q.require();
    if (s.k < 0 || s.a == 0 || s.b == 0 || std::fabs(s.a) == std::fabs(s.b)) throw DomainError("integrand parameters out of range");
    if (!sign_independent(s.kind) && (s.a < 0 || s.b < 0)) throw DomainError("parameters must be positive");
    const bool pole = has_pole(s);
    if (pole && !q.pv_excision.empty()) return pv_by_excision(s, q);

    const Float V = detail::log_window(s.k);
    auto h = [&](Float v) { Float t = std::exp(v); return integrand_value(s, t) * t; };
    std::vector<Float> pts{-V, V, 0, std::log(std::fabs(s.b))};
    if (!pole) {
        pts.push_back(std::log(std::fabs(s.a)));
        return detail::integrate_segments(h, pts, q);
    }
    const Float v0 = std::log(std::fabs(s.a)), w = 0.5L, rho = pole_residue(s);
    std::vector<Float> outer;
    for (Float p : pts)
        if (std::fabs(p - v0) > w) outer.push_back(p);
    outer.push_back(v0 - w);
    outer.push_back(v0 + w);
    std::sort(outer.begin(), outer.end());
    QuadResult acc;
    for (std::size_t i = 0; i + 1 < outer.size(); ++i)
        if (!(outer[i] == v0 - w && outer[i + 1] == v0 + w)) acc = acc + gk_integrate(h, outer[i], outer[i + 1], q);
    // rho/(v - v0) integrates to zero over the symmetric window
    auto smooth = [&](Float v) { return h(v) - rho / (v - v0); };
    return acc + gk_integrate(smooth, v0 - w, v0, q) + gk_integrate(smooth, v0, v0 + w, q);
}

// ----------------------------------------------------------- base integrals

// Integral over |y| > 1 of log|y| * kernel(y) in y = +-e^u.
inline QuadResult base_integral(TermKind kind, long h, const QuadratureSpec& q = {})
{
    q.require();
    if (kind == TermKind::zeta ? h < 1 : h < 0) throw DomainError("base integral index out of range");
    const Float U = 90 + 4 * static_cast<Float>(h);
    QuadResult acc;
    for (int sgn : {1, -1}) {
        auto f = [&](Float u) {
            Float y = sgn * std::exp(u);
            Float kern = kind == TermKind::zeta ? (y + 1) / (y * y * y - 1) * std::pow(u, static_cast<Float>(2 * h - 1))
                                                : std::pow(u, static_cast<Float>(2 * h)) / (y * y + y + 1);
            return u * kern * std::fabs(y);
        };
        acc = acc + detail::integrate_segments(f, {0, 1, U}, q);
    }
    return acc;
}

// int_0^1 log^(2h+1) t / (t^2 + sign t + 1) dt with t = e^-u
inline QuadResult unit_log_integral(long h, int sign, const QuadratureSpec& q = {})
{
    q.require();
    if (h < 0) throw DomainError("h must be non-negative");
    const Float U = 90 + 4 * static_cast<Float>(h);
    auto f = [&](Float u) {
        Float t = std::exp(-u);
        return -std::pow(u, static_cast<Float>(2 * h + 1)) * t / (t * t + sign * t + 1);
    };
    return detail::integrate_segments(f, {0, 1, U}, q);
}

// ------------------------------------------------------------ torus measure

// On the unit circle (conj(w) z + w)/(z + 1) = -1/2 + (sqrt3/2) tan(theta/2).
inline Float mobius_real(Float theta) { return -0.5L + std::sqrt(3.0L) / 2 * std::tan(theta / 2); }

inline Float mobius_angle(Float x) { return 2 * std::atan((x + 0.5L) * 2 / std::sqrt(3.0L)); }

namespace detail {

// int_alpha^pi f with theta = pi - (pi - alpha) e^-u; removes the log blow-up at pi
inline QuadResult toward_pi(const std::function<Float(Float)>& f, Float alpha, const QuadratureSpec& q)
{
    const Float pi = std::numbers::pi_v<Float>;
    const Float len = pi - alpha;
    if (!(len > 0)) return {};
    auto g = [&](Float u) { Float d = len * std::exp(-u); return f(pi - d) * d; };
    return gk_integrate(g, 0, std::numeric_limits<Float>::infinity(), q);
}

inline QuadResult toward_minus_pi(const std::function<Float(Float)>& f, Float beta, const QuadratureSpec& q)
{
    const Float pi = std::numbers::pi_v<Float>;
    const Float len = beta + pi;
    if (!(len > 0)) return {};
    auto g = [&](Float u) { Float d = len * std::exp(-u); return f(-pi + d) * d; };
    return gk_integrate(g, 0, std::numeric_limits<Float>::infinity(), q);
}

// int over theta of log+|c * x(theta)|; zero unless |x| >= 1/c
inline QuadResult scaled_circle(Float c, const QuadratureSpec& q)
{
    auto f = [&](Float th) {
        Float v = std::fabs(c * mobius_real(th));
        return v > 1 ? std::log(v) : Float(0);
    };
    return toward_pi(f, mobius_angle(1 / c), q) + toward_minus_pi(f, mobius_angle(-1 / c), q);
}

}  // namespace detail

// (1/2pi)^n times the torus integral of log+ of the product of the Mobius factors,
// y having been integrated out by Jensen's formula.
inline QuadResult torus_measure(long n, const QuadratureSpec& q = {})
{
    q.require();
    const Float two_pi = 2 * std::numbers::pi_v<Float>;
    if (n == 1) {
        QuadResult r = detail::scaled_circle(1, q);
        return {r.value / two_pi, r.error / two_pi};
    }
    if (n != 2) throw DomainError("direct torus quadrature supports n = 1, 2");
    QuadratureSpec inner = q;
    inner.rel_tol = q.rel_tol / 10;
    auto outer = [&](Float th) {
        Float c = std::fabs(mobius_real(th));
        return c > 0 ? detail::scaled_circle(c, inner).value : Float(0);
    };
    // |x1| vanishes at theta = pi/3
    const Float kink = std::numbers::pi_v<Float> / 3;
    QuadResult r = detail::toward_pi(outer, kink, q) + detail::toward_minus_pi(outer, kink, q);
    return {r.value / (two_pi * two_pi), r.error / (two_pi * two_pi)};
}

}  // namespace mahler
