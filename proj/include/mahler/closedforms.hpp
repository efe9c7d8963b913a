#pragma once

#include "numbers.hpp"
#include "recpoly.hpp"

#include <map>
#include <tuple>

namespace mahler {

struct DegenerateMagnitude : std::domain_error {
    using std::domain_error::domain_error;
};

enum class IntegralKind { f1, f2, g1, g2, fsum, gsum };

inline const char* integral_name(IntegralKind w)
{
    static const char* names[] = {"f1", "f2", "g1", "g2", "fsum", "gsum"};
    return names[static_cast<int>(w)];
}

inline IntegralKind parse_integral(const std::string& s)
{
    for (int i = 0; i < 6; ++i)
        if (s == integral_name(static_cast<IntegralKind>(i))) return static_cast<IntegralKind>(i);
    throw DomainError("unknown integral: " + s);
}

inline bool sign_independent(IntegralKind w) { return w == IntegralKind::fsum || w == IntegralKind::gsum; }

struct IntegralParams {
    Rational a, b;
    long k = 0;
};

// Angles as multiples of pi.
inline Rational theta_over_pi() { return Rational(2, 3); }
inline Rational delta_over_pi() { return Rational(1, 3); }

inline void check_params(IntegralKind w, const IntegralParams& p)
{
    if (p.k < 0) throw DomainError("log power must be non-negative");
    if (sgn(p.a) == 0 || sgn(p.b) == 0) throw DomainError("parameters must be nonzero");
    if (!sign_independent(w) && (sgn(p.a) < 0 || sgn(p.b) < 0))
        throw DomainError(std::string(integral_name(w)) + " needs positive parameters; use the sign-independent sum");
    if (abs(p.a) == abs(p.b)) throw DegenerateMagnitude("|a| = |b| is outside the closed-form domain");
}

// Closed form = sum of blocks: pref * angle^(k+1) * mult * X_k(log|c| / angle),
// c being a or b.
struct ClosedFormBlock {
    SqrtThreeNumber pref;
    Rational angle_over_pi;
    Family family;
    bool at_a;
    Rational mult;
};

inline std::vector<ClosedFormBlock> closed_form_blocks(IntegralKind w, const IntegralParams& p)
{
    check_params(w, p);
    const Rational& a = p.a;
    const Rational& b = p.b;
    Rational cube_diff = a * a * a - b * b * b;
    Rational quad = a * a + a * b + b * b;
    Rational sum = a + b;
    SqrtThreeNumber inv_r3 = SqrtThreeNumber::root_part(Rational(1, 3));
    SqrtThreeNumber p_ratio(Rational(sum / cube_diff));
    SqrtThreeNumber p_quad = inv_r3 * SqrtThreeNumber(Rational(1 / quad));
    SqrtThreeNumber g_quad(Rational(1 / (3 * quad)));
    SqrtThreeNumber g_ratio = inv_r3 * SqrtThreeNumber(Rational(sum / cube_diff));

    std::vector<ClosedFormBlock> out;
    auto f_part = [&](const Rational& ang, Family even_f, Family odd_f) {
        out.push_back({p_ratio, ang, even_f, true, Rational(1)});
        out.push_back({p_ratio, ang, even_f, false, Rational(-1)});
        out.push_back({p_quad, ang, odd_f, true, Rational(1)});
        out.push_back({p_quad, ang, odd_f, false, Rational(1)});
    };
    auto g_part = [&](const Rational& ang, Family main, Family extra, Family other) {
        out.push_back({g_quad, ang, main, true, Rational(-1)});
        out.push_back({g_quad, ang, main, false, Rational(3)});
        out.push_back({g_quad, ang, extra, true, Rational(1)});
        out.push_back({g_ratio, ang, other, true, Rational(1)});
        out.push_back({g_ratio, ang, other, false, Rational(-1)});
    };
    const Rational th = theta_over_pi(), de = delta_over_pi();
    switch (w) {
    case IntegralKind::f1: f_part(th, Family::R, Family::S); break;
    case IntegralKind::f2: f_part(de, Family::P, Family::Q); break;
    case IntegralKind::g1: g_part(th, Family::R, Family::Y, Family::S); break;
    case IntegralKind::g2: g_part(de, Family::P, Family::Z, Family::Q); break;
    case IntegralKind::fsum:
        f_part(th, Family::R, Family::S);
        f_part(de, Family::P, Family::Q);
        break;
    case IntegralKind::gsum:
        g_part(th, Family::R, Family::Y, Family::S);
        g_part(de, Family::P, Family::Z, Family::Q);
        break;
    }
    return out;
}

// Exact form: sum over (i, j, e) of coeff * log|a|^i * log|b|^j * pi^e.
struct SymbolicForm {
    std::map<std::tuple<long, long, long>, SqrtThreeNumber> terms;

    void add(long ia, long ib, long pe, const SqrtThreeNumber& c)
    {
        if (c.is_zero()) return;
        auto key = std::make_tuple(ia, ib, pe);
        SqrtThreeNumber& slot = terms[key];
        slot += c;
        if (slot.is_zero()) terms.erase(key);
    }

    Real evaluate(const Real& log_a, const Real& log_b, const PrecisionContext& ctx) const
    {
        PrecisionScope scope(ctx);
        Real pi = real_pi(), acc = 0;
        for (const auto& [key, c] : terms) {
            auto [ia, ib, pe] = key;
            acc += c.to_real() * boost::multiprecision::pow(log_a, ia) * boost::multiprecision::pow(log_b, ib) *
                   boost::multiprecision::pow(pi, pe);
        }
        return acc;
    }

    std::string to_string() const
    {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [key, c] : terms) {
            auto [ia, ib, pe] = key;
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            if (ia) s += "*La^" + std::to_string(ia);
            if (ib) s += "*Lb^" + std::to_string(ib);
            if (pe) s += "*pi^" + std::to_string(pe);
        }
        return s;
    }
};

inline SymbolicForm closed_form_symbolic(IntegralKind w, const IntegralParams& p)
{
    SymbolicForm form;
    for (const auto& blk : closed_form_blocks(w, p)) {
        ParityPolynomial poly = get_poly(blk.family, p.k);
        SqrtThreeNumber base = blk.pref * SqrtThreeNumber(blk.mult);
        // angle^(k+1) * c_d (L/angle)^d = c_d r^(k+1-d) pi^(k+1-d) L^d
        for (long d = 0; d <= poly.degree(); ++d) {
            SqrtThreeNumber c = poly.coeff(d);
            if (c.is_zero()) continue;
            long e = p.k + 1 - d;
            SqrtThreeNumber term = base * c * SqrtThreeNumber(pow_rational(blk.angle_over_pi, static_cast<unsigned>(e)));
            if (blk.at_a) form.add(d, 0, e, term);
            else form.add(0, d, e, term);
        }
    }
    return form;
}

// Direct numeric evaluation of the closed form.
inline Real closed_form(IntegralKind w, const IntegralParams& p, const PrecisionContext& ctx)
{
    auto blocks = closed_form_blocks(w, p);
    PrecisionScope scope(ctx);
    Real pi = real_pi();
    Real la = boost::multiprecision::log(to_real(abs(p.a)));
    Real lb = boost::multiprecision::log(to_real(abs(p.b)));
    Real acc = 0;
    for (const auto& blk : blocks) {
        Real angle = to_real(blk.angle_over_pi) * pi;
        Real x = (blk.at_a ? la : lb) / angle;
        Real v = get_poly(blk.family, p.k).eval(x, ctx);
        acc += blk.pref.to_real() * to_real(blk.mult) * boost::multiprecision::pow(angle, p.k + 1) * v;
    }
    return acc;
}

inline Real f1(const IntegralParams& p, const PrecisionContext& ctx) { return closed_form(IntegralKind::f1, p, ctx); }
inline Real f2(const IntegralParams& p, const PrecisionContext& ctx) { return closed_form(IntegralKind::f2, p, ctx); }
inline Real g1(const IntegralParams& p, const PrecisionContext& ctx) { return closed_form(IntegralKind::g1, p, ctx); }
inline Real g2(const IntegralParams& p, const PrecisionContext& ctx) { return closed_form(IntegralKind::g2, p, ctx); }
inline Real f_sum(const IntegralParams& p, const PrecisionContext& ctx) { return closed_form(IntegralKind::fsum, p, ctx); }
inline Real g_sum(const IntegralParams& p, const PrecisionContext& ctx) { return closed_form(IntegralKind::gsum, p, ctx); }

}  // namespace mahler
