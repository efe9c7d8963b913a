#pragma once

#include "numbers.hpp"
#include "recpoly.hpp"

#include <functional>
#include <map>

namespace mahler {

struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedPhase : std::domain_error {
    using std::domain_error::domain_error;
};

struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// ------------------------------------------------------------------ Bernoulli

// B_j from x/(e^x - 1), so B_1 = -1/2.
inline Rational bernoulli(unsigned j)
{
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    while (table.size() <= j) {
        unsigned m = static_cast<unsigned>(table.size());
        Rational s(0);
        for (unsigned i = 0; i < m; ++i) s += Rational(binomial(m + 1, i)) * table[i];
        table.push_back(-s / (m + 1));
    }
    return table[j];
}

// ------------------------------------------------------------- Laurent series

// Sum_{m = valuation}^{order} c_m T^m with polynomial coefficients in x.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(long valuation, long order) : v_(valuation), c_(order >= valuation ? order - valuation + 1 : 0) {}

    long valuation() const { return v_; }
    long order() const { return v_ + static_cast<long>(c_.size()) - 1; }

    const ParityPolynomial& operator[](long m) const
    {
        static const ParityPolynomial zero;
        if (m < v_) return zero;
        if (m > order()) throw TruncationTooSmall("coefficient T^" + std::to_string(m) + " beyond truncation order");
        return c_[static_cast<std::size_t>(m - v_)];
    }
    void set(long m, ParityPolynomial p)
    {
        if (m < v_ || m > order()) throw std::out_of_range("series slot outside stored range");
        c_[static_cast<std::size_t>(m - v_)] = std::move(p);
    }

    // drop leading zero coefficients
    LaurentSeries normalized() const
    {
        LaurentSeries s = *this;
        while (!s.c_.empty() && s.c_.front().is_zero()) {
            s.c_.erase(s.c_.begin());
            ++s.v_;
        }
        return s;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
    {
        long v = a.v_ + b.v_;
        long M = std::min(a.order() + b.v_, b.order() + a.v_);
        LaurentSeries out(v, M);
        for (long m = v; m <= M; ++m) {
            ParityPolynomial acc;
            for (long i = a.v_; i <= a.order(); ++i) {
                long j = m - i;
                if (j < b.v_) break;
                if (j > b.order()) continue;
                const ParityPolynomial& x = a[i];
                const ParityPolynomial& y = b[j];
                if (x.is_zero() || y.is_zero()) continue;
                acc += x * y;
            }
            out.set(m, std::move(acc));
        }
        return out;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
    {
        long v = std::min(a.v_, b.v_);
        long M = std::min(a.order(), b.order());
        LaurentSeries out(v, M);
        for (long m = v; m <= M; ++m) out.set(m, a[m] + b[m]);
        return out;
    }

    LaurentSeries scaled(const SqrtThreeNumber& s) const
    {
        LaurentSeries out = *this;
        for (auto& p : out.c_) p *= s;
        return out;
    }

    // Requires a nonzero constant leading coefficient after normalization.
    LaurentSeries reciprocal() const
    {
        LaurentSeries s = normalized();
        if (s.c_.empty()) throw DomainError("reciprocal of a series with no known nonzero term");
        const ParityPolynomial& lead = s.c_.front();
        if (!lead.is_constant()) throw DomainError("reciprocal needs a constant leading coefficient");
        SqrtThreeNumber inv = SqrtThreeNumber(1) / lead.coeff(0);
        long n_terms = static_cast<long>(s.c_.size());
        LaurentSeries out(-s.v_, -s.v_ + n_terms - 1);
        std::vector<ParityPolynomial> w(static_cast<std::size_t>(n_terms));
        w[0] = ParityPolynomial::constant(inv);
        for (long n = 1; n < n_terms; ++n) {
            ParityPolynomial acc;
            for (long i = 1; i <= n; ++i) {
                const ParityPolynomial& u = s.c_[static_cast<std::size_t>(i)];
                if (u.is_zero() || w[static_cast<std::size_t>(n - i)].is_zero()) continue;
                acc += u * w[static_cast<std::size_t>(n - i)];
            }
            w[static_cast<std::size_t>(n)] = acc * (-inv);
        }
        for (long n = 0; n < n_terms; ++n) out.set(-s.v_ + n, std::move(w[static_cast<std::size_t>(n)]));
        return out;
    }

private:
    long v_ = 0;
    std::vector<ParityPolynomial> c_;
};

// ------------------------------------------------------------ trig expansions

enum class TrigKind { sin, cos, csc, cot, sinh, cosh, exp };

inline TrigKind parse_trig_kind(const std::string& s)
{
    static const std::map<std::string, TrigKind> m{{"sin", TrigKind::sin},   {"cos", TrigKind::cos},
                                                   {"csc", TrigKind::csc},   {"cot", TrigKind::cot},
                                                   {"sinh", TrigKind::sinh}, {"cosh", TrigKind::cosh},
                                                   {"exp", TrigKind::exp}};
    auto it = m.find(s);
    if (it == m.end()) throw DomainError("unknown series kind: " + s);
    return it->second;
}

// Argument of the expansion: scale*T for circular kinds, scale*x*T for the
// hyperbolic/exponential ones.
struct SeriesArgument {
    Rational scale{1};
    bool symbolic_x = false;
    static SeriesArgument times_t(const Rational& s) { return {s, false}; }
    static SeriesArgument times_xt(const Rational& s = Rational(1)) { return {s, true}; }
};

// Constant phase as a rational multiple of pi.
struct Phase {
    Rational over_pi{0};
};

namespace phases {
inline Phase zero() { return {Rational(0)}; }
inline Phase theta() { return {Rational(2, 3)}; }       // 2pi/3
inline Phase half_theta() { return {Rational(1, 3)}; }  // pi/3
inline Phase delta() { return {Rational(1, 3)}; }       // pi/3
inline Phase neg(Phase p) { return {-p.over_pi}; }
}  // namespace phases

namespace detail {

// sin(k pi/6) for k mod 12
inline SqrtThreeNumber sin_sixth(long k)
{
    k = ((k % 12) + 12) % 12;
    static const int rat2[12] = {0, 1, 0, 2, 0, 1, 0, -1, 0, -2, 0, -1};  // twice the rational part
    static const int root2[12] = {0, 0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0};  // twice the sqrt3 part
    return {Rational(rat2[k], 2), Rational(root2[k], 2)};
}

inline std::pair<SqrtThreeNumber, SqrtThreeNumber> sin_cos(const Phase& p)
{
    Rational sixths = p.over_pi * 6;
    sixths.canonicalize();
    if (sixths.get_den() != 1) throw UnsupportedPhase("phase " + p.over_pi.get_str() + "*pi has no sine/cosine in Q(sqrt3)");
    long k = sixths.get_num().get_si();
    return {sin_sixth(k), sin_sixth(k + 3)};
}

inline LaurentSeries plain_sin_cos(bool want_sin, const Rational& a, long order)
{
    LaurentSeries s(0, std::max(order, 0L));
    Rational pw(1);
    Integer fact(1);
    for (long m = 0; m <= s.order(); ++m) {
        if (m > 0) {
            pw *= a;
            fact *= m;
        }
        bool odd = m % 2 == 1;
        if (odd != want_sin) continue;
        long sign = ((m / 2) % 2 == 0) ? 1 : -1;
        s.set(m, ParityPolynomial::constant(SqrtThreeNumber(Rational(sign * pw / Rational(fact)))));
    }
    return s;
}

// sin(aT + phi) as a regular series
inline LaurentSeries shifted_sin(const Rational& a, const Phase& p, long order)
{
    auto [sp, cp] = sin_cos(p);
    return plain_sin_cos(true, a, order).scaled(cp) + plain_sin_cos(false, a, order).scaled(sp);
}

inline LaurentSeries shifted_cos(const Rational& a, const Phase& p, long order)
{
    auto [sp, cp] = sin_cos(p);
    return plain_sin_cos(false, a, order).scaled(cp) + plain_sin_cos(true, a, order).scaled(-sp);
}

}  // namespace detail

// Truncated expansion known through T^order.
inline LaurentSeries trig_series(TrigKind kind, const SeriesArgument& arg, const Phase& shift, long order)
{
    using detail::shifted_cos;
    using detail::shifted_sin;
    bool hyperbolic = kind == TrigKind::sinh || kind == TrigKind::cosh || kind == TrigKind::exp;
    if (hyperbolic != arg.symbolic_x) throw DomainError("sinh/cosh/exp take x*T, circular kinds take a multiple of T");
    if (order < -1) throw DomainError("series order below -1");
    if (hyperbolic) {
        if (shift.over_pi != 0) throw UnsupportedPhase("hyperbolic expansions take no phase");
        LaurentSeries s(0, std::max(order, 0L));
        Rational pw(1);
        Integer fact(1);
        for (long m = 0; m <= s.order(); ++m) {
            if (m > 0) {
                pw *= arg.scale;
                fact *= m;
            }
            bool keep = kind == TrigKind::exp || (kind == TrigKind::sinh) == (m % 2 == 1);
            if (!keep) continue;
            s.set(m, ParityPolynomial::monomial(SqrtThreeNumber(Rational(pw / Rational(fact))), static_cast<unsigned>(m)));
        }
        return s;
    }
    if (arg.scale == 0) throw DomainError("zero argument scale");
    auto [sp, cp] = detail::sin_cos(shift);
    switch (kind) {
    case TrigKind::sin: return shifted_sin(arg.scale, shift, order);
    case TrigKind::cos: return shifted_cos(arg.scale, shift, order);
    case TrigKind::csc: {
        // a pole at 0 costs two orders in the reciprocal
        long guard = sp.is_zero() ? 2 : 0;
        return shifted_sin(arg.scale, shift, order + guard).reciprocal();
    }
    case TrigKind::cot: {
        long guard = sp.is_zero() ? 2 : 0;
        LaurentSeries csc = shifted_sin(arg.scale, shift, order + guard).reciprocal();
        return shifted_cos(arg.scale, shift, order + guard) * csc;
    }
    default: break;
    }
    throw DomainError("unhandled series kind");
}

// csc(T/2) from the Bernoulli closed form, through T^order.
inline LaurentSeries csc_half_bernoulli(long order)
{
    LaurentSeries s(-1, std::max(order, -1L));
    for (long k = 0; 2 * k - 1 <= s.order(); ++k) {
        Rational two_pow = pow_rational(Rational(2), static_cast<unsigned>(2 * k));
        Rational c = Rational(2) * (Rational(1) - Rational(2) / two_pow) * bernoulli(static_cast<unsigned>(2 * k)) /
                     Rational(factorial(static_cast<unsigned>(2 * k)));
        if (k % 2 == 0) c = -c;
        s.set(2 * k - 1, ParityPolynomial::constant(SqrtThreeNumber(c)));
    }
    return s;
}

// ---------------------------------------------------------------------- mu_n

namespace detail {

inline void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& fn)
{
    std::vector<unsigned> k(n + 1, 0);  // k[j] = number of blocks of size j
    std::function<void(unsigned, unsigned)> rec = [&](unsigned j, unsigned rest) {
        if (rest == 0) {
            fn(k);
            return;
        }
        if (j == 0) return;
        for (unsigned c = 0; c * j <= rest; ++c) {
            k[j] = c;
            rec(j - 1, rest - c * j);
        }
        k[j] = 0;
    };
    rec(n, n);
}

inline SqrtThreeNumber mu_partition_sum(unsigned n)
{
    SqrtThreeNumber total;
    for_each_partition(n, [&](const std::vector<unsigned>& k) {
        unsigned blocks = 0, eps = 0, xi = 0;
        Integer denom(1);
        for (unsigned j = 1; j < k.size(); ++j) {
            if (k[j] == 0) continue;
            blocks += k[j];
            if (j % 2 == 1) eps += k[j];
            if (j % 4 == 0 || j % 4 == 3) xi += k[j];
            Integer fj = factorial(j), pw;
            mpz_pow_ui(pw.get_mpz_t(), fj.get_mpz_t(), k[j]);
            denom *= factorial(k[j]) * pw;
        }
        Rational term(factorial(n) * factorial(blocks), denom);
        term.canonicalize();
        if (xi % 2 == 1) term = -term;
        // 1/sqrt3^eps
        SqrtThreeNumber v = eps % 2 == 0 ? SqrtThreeNumber(term / pow_rational(Rational(3), eps / 2))
                                         : SqrtThreeNumber::root_part(term / pow_rational(Rational(3), (eps + 1) / 2));
        total += v;
    });
    // -1/(2^(n-1) sqrt3) = -sqrt3/(3 * 2^(n-1))
    Rational two_pow = n == 0 ? Rational(1, 2) : pow_rational(Rational(2), n - 1);
    return total * SqrtThreeNumber::root_part(Rational(-1) / (3 * two_pow));
}

inline SqrtThreeNumber mu_reciprocal(unsigned n)
{
    LaurentSeries s = trig_series(TrigKind::csc, SeriesArgument::times_t(Rational(1, 2)),
                                  phases::neg(phases::half_theta()), static_cast<long>(n));
    return s[static_cast<long>(n)].coeff(0) * SqrtThreeNumber(Rational(factorial(n)));
}

}  // namespace detail

// n-th derivative at 0 of csc(T/2 - pi/3), by partition sum and by reciprocal series.
inline SqrtThreeNumber mu(unsigned n)
{
    SqrtThreeNumber a = detail::mu_partition_sum(n);
    SqrtThreeNumber b = detail::mu_reciprocal(n);
    if (a != b) throw InternalInconsistency("mu_" + std::to_string(n) + ": partition sum " + a.to_string() +
                                            " != reciprocal series " + b.to_string());
    return a;
}

// ------------------------------------------------------------------ families

enum class SeriesFamily { A, B, C, D, E, F, G, K, L, U, V, W, N, O };

inline const char* series_family_name(SeriesFamily f)
{
    static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "K", "L", "U", "V", "W", "N", "O"};
    return names[static_cast<int>(f)];
}

inline const std::vector<SeriesFamily>& all_series_families()
{
    static const std::vector<SeriesFamily> all{SeriesFamily::A, SeriesFamily::B, SeriesFamily::C, SeriesFamily::D,
                                               SeriesFamily::E, SeriesFamily::F, SeriesFamily::G, SeriesFamily::K,
                                               SeriesFamily::L, SeriesFamily::U, SeriesFamily::V, SeriesFamily::W,
                                               SeriesFamily::N, SeriesFamily::O};
    return all;
}

inline SeriesFamily parse_series_family(const std::string& s)
{
    for (SeriesFamily f : all_series_families())
        if (s == series_family_name(f)) return f;
    throw DomainError("unknown series family: " + s);
}

inline long default_order(long m_max) { return 2 * m_max + 4; }

// Generating function of a family, through T^order of each factor.
inline LaurentSeries generating_series(SeriesFamily f, long order)
{
    using namespace phases;
    auto circ = [&](TrigKind k, const Rational& a, Phase p) {
        return trig_series(k, SeriesArgument::times_t(a), p, order);
    };
    auto hyper = [&](TrigKind k) { return trig_series(k, SeriesArgument::times_xt(), zero(), order); };
    const Rational half(1, 2), three_half(3, 2);
    switch (f) {
    case SeriesFamily::A:
    case SeriesFamily::B:
        return circ(TrigKind::csc, half, neg(half_theta())) * circ(TrigKind::csc, half, zero()) *
               hyper(f == SeriesFamily::A ? TrigKind::sinh : TrigKind::cosh);
    case SeriesFamily::C:
    case SeriesFamily::D:
        return circ(TrigKind::sin, Rational(2), neg(theta())) * circ(TrigKind::csc, Rational(3), zero()) *
               hyper(f == SeriesFamily::C ? TrigKind::sinh : TrigKind::cosh);
    case SeriesFamily::E:
    case SeriesFamily::F:
        return circ(TrigKind::csc, three_half, zero()) * circ(TrigKind::cos, half, theta()) *
               hyper(f == SeriesFamily::E ? TrigKind::sinh : TrigKind::cosh);
    case SeriesFamily::G: return circ(TrigKind::cot, three_half, zero()) * hyper(TrigKind::exp);
    case SeriesFamily::K:
    case SeriesFamily::L:
        return circ(TrigKind::csc, three_half, zero()) * circ(TrigKind::sin, half, half_theta()) *
               hyper(f == SeriesFamily::K ? TrigKind::sinh : TrigKind::cosh);
    case SeriesFamily::U:
    case SeriesFamily::V:
        return circ(TrigKind::csc, Rational(3), zero()) * circ(TrigKind::cos, Rational(2), neg(theta())) *
               hyper(f == SeriesFamily::U ? TrigKind::sinh : TrigKind::cosh);
    case SeriesFamily::W: return circ(TrigKind::csc, Rational(3), zero()) * hyper(TrigKind::exp);
    case SeriesFamily::N:
    case SeriesFamily::O:
        return circ(TrigKind::csc, Rational(3), zero()) * circ(TrigKind::sin, Rational(2), neg(theta())) *
               hyper(f == SeriesFamily::N ? TrigKind::sinh : TrigKind::cosh);
    }
    throw DomainError("unhandled family");
}

// m! times the T^m coefficient of the family's generating function.
inline ParityPolynomial extract_family(SeriesFamily f, long m, long order)
{
    if (m < 0) throw DomainError("family index must be non-negative");
    LaurentSeries s = generating_series(f, order);
    if (s.order() < m)
        throw TruncationTooSmall("truncation order " + std::to_string(order) + " too small for index " + std::to_string(m));
    return s[m] * SqrtThreeNumber(Rational(factorial(static_cast<unsigned>(m))));
}

inline ParityPolynomial extract_family(SeriesFamily f, long m) { return extract_family(f, m, default_order(m)); }

// A_m (odd = false) or B_m (odd = true... cosh) via the explicit Bernoulli/mu convolution.
inline ParityPolynomial convolution_family(SeriesFamily f, long m)
{
    if (f != SeriesFamily::A && f != SeriesFamily::B) throw DomainError("convolution form exists for A and B only");
    if (m < 0) throw DomainError("family index must be non-negative");
    bool is_a = f == SeriesFamily::A;
    std::vector<SqrtThreeNumber> mu_over_fact(static_cast<std::size_t>(m + 2));
    for (long i = 0; i <= m + 1; ++i)
        mu_over_fact[static_cast<std::size_t>(i)] =
            detail::mu_partition_sum(static_cast<unsigned>(i)) / SqrtThreeNumber(Rational(factorial(static_cast<unsigned>(i))));
    auto csc_coeff = [](long k) {
        Rational two_pow = pow_rational(Rational(2), static_cast<unsigned>(2 * k));
        Rational c = Rational(2) * (Rational(1) - Rational(2) / two_pow) * bernoulli(static_cast<unsigned>(2 * k)) /
                     Rational(factorial(static_cast<unsigned>(2 * k)));
        return k % 2 == 0 ? Rational(-c) : c;
    };
    ParityPolynomial out(is_a ? Parity::odd : Parity::even);
    long j_max = is_a ? m / 2 : (m + 1) / 2;
    long k_max = (m + 1) / 2;
    for (long j = 0; j <= j_max; ++j) {
        SqrtThreeNumber inner;
        for (long k = 0; k <= k_max; ++k) {
            long idx = is_a ? m - 2 * j - 2 * k : m - 2 * j - 2 * k + 1;
            if (idx < 0) continue;
            inner += SqrtThreeNumber(csc_coeff(k)) * mu_over_fact[static_cast<std::size_t>(idx)];
        }
        unsigned power = static_cast<unsigned>(is_a ? 2 * j + 1 : 2 * j);
        Rational scale(factorial(static_cast<unsigned>(m)), factorial(power));
        scale.canonicalize();
        out += ParityPolynomial::monomial(inner * SqrtThreeNumber(scale), power);
    }
    return out;
}

// ------------------------------------------------------------------ relations

// X_m = lambda * F_m, exactly or up to a constant term, for m of one parity.
struct FamilyRelation {
    Family target;
    bool even_index;
    SeriesFamily source;
    SqrtThreeNumber lambda;
    bool exact;
};

inline const std::vector<FamilyRelation>& family_relations()
{
    using SF = SeriesFamily;
    const SqrtThreeNumber r3 = SqrtThreeNumber::sqrt3();
    static const std::vector<FamilyRelation> table{
        {Family::R, true, SF::A, r3 * SqrtThreeNumber(Rational(-1, 4)), true},
        {Family::R, false, SF::B, r3 * SqrtThreeNumber(Rational(-1, 4)), false},
        {Family::S, true, SF::B, SqrtThreeNumber(Rational(3, 4)), true},
        {Family::S, false, SF::A, SqrtThreeNumber(Rational(3, 4)), true},
        {Family::P, true, SF::C, r3 * SqrtThreeNumber(-2), true},
        {Family::P, false, SF::D, r3 * SqrtThreeNumber(-2), false},
        {Family::Q, true, SF::D, SqrtThreeNumber(-6), true},
        {Family::Q, false, SF::C, SqrtThreeNumber(-6), true},
        {Family::R, true, SF::E, SqrtThreeNumber(-3), true},
        {Family::R, false, SF::F, SqrtThreeNumber(-3), false},
        {Family::R, true, SF::K, r3, true},
        {Family::R, false, SF::L, r3, false},
        {Family::S, false, SF::E, r3, true},
        {Family::S, true, SF::F, r3, true},
        {Family::S, false, SF::K, SqrtThreeNumber(-3), true},
        {Family::S, true, SF::L, SqrtThreeNumber(-3), true},
        {Family::Y, true, SF::G, SqrtThreeNumber(-3), true},
        {Family::Y, false, SF::G, SqrtThreeNumber(-3), false},
        {Family::P, true, SF::U, SqrtThreeNumber(-6), true},
        {Family::P, false, SF::V, SqrtThreeNumber(-6), false},
        {Family::P, true, SF::N, r3 * SqrtThreeNumber(-2), true},
        {Family::P, false, SF::O, r3 * SqrtThreeNumber(-2), false},
        {Family::Q, false, SF::U, r3 * SqrtThreeNumber(2), true},
        {Family::Q, true, SF::V, r3 * SqrtThreeNumber(2), true},
        {Family::Q, false, SF::N, SqrtThreeNumber(-6), true},
        {Family::Q, true, SF::O, SqrtThreeNumber(-6), true},
        {Family::Z, true, SF::W, SqrtThreeNumber(-6), true},
        {Family::Z, false, SF::W, SqrtThreeNumber(-6), false},
    };
    return table;
}

struct RelationResidual {
    Family target;
    SeriesFamily source;
    long index;
    SqrtThreeNumber lambda;
    bool exact_expected;
    ParityPolynomial residual;  // X_m - lambda F_m
    bool holds;
    std::string describe() const
    {
        return std::string(family_name(target)) + "_" + std::to_string(index) + " - (" + lambda.to_string() + ")*" +
               series_family_name(source) + "_" + std::to_string(index) + " = " + residual.to_string() +
               (exact_expected ? " [exact]" : " [up to constant]") + (holds ? " ok" : " FAIL");
    }
};

struct RelationReport {
    std::vector<RelationResidual> rows;
    bool all_hold() const
    {
        return std::all_of(rows.begin(), rows.end(), [](const RelationResidual& r) { return r.holds; });
    }
};

inline RelationResidual check_relation(const FamilyRelation& rel, long m)
{
    ParityPolynomial res = get_poly(rel.target, m) - rel.lambda * extract_family(rel.source, m);
    bool ok = rel.exact ? res.is_zero() : res.is_constant();
    return {rel.target, rel.source, m, rel.lambda, rel.exact, res, ok};
}

// Every tabulated relation at indices 2n and 2n+1.
inline RelationReport relation_check(long n)
{
    if (n < 0) throw DomainError("relation index must be non-negative");
    RelationReport rep;
    for (long m : {2 * n, 2 * n + 1})
        for (const auto& rel : family_relations())
            if (rel.even_index == (m % 2 == 0)) rep.rows.push_back(check_relation(rel, m));
    return rep;
}

}  // namespace mahler
