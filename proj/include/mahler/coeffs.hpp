#pragma once

#include "numbers.hpp"
#include "recpoly.hpp"

#include <functional>
#include <map>
#include <utility>

namespace mahler {

using CoeffIndex = std::pair<long, long>;

struct CoefficientTable {
    long max_n = 0;
    std::map<CoeffIndex, SqrtThreeNumber> a, b, c, d;

    static const SqrtThreeNumber& lookup(const std::map<CoeffIndex, SqrtThreeNumber>& m, long n, long j)
    {
        static const SqrtThreeNumber zero;
        auto it = m.find({n, j});
        return it == m.end() ? zero : it->second;
    }

    const SqrtThreeNumber& A(long n, long j) const { return lookup(a, n, j); }
    const SqrtThreeNumber& B(long n, long j) const { return lookup(b, n, j); }
    const SqrtThreeNumber& C(long n, long j) const { return lookup(c, n, j); }
    const SqrtThreeNumber& D(long n, long j) const { return lookup(d, n, j); }
};

namespace detail {

inline SqrtThreeNumber nc(char tag, long k, long j)
{
    if (k < 0) return SqrtThreeNumber();
    return SqrtThreeNumber(named_coeff(tag, k, j));
}

// e = -1 occurs at l = h-1 in the b-recursion, where the partner coefficient is zero
inline SqrtThreeNumber two_pow(long e)
{
    Rational p(Integer(1) << static_cast<unsigned>(e < 0 ? -e : e));
    return SqrtThreeNumber(e < 0 ? Rational(1 / p) : p);
}

// Shapes shared by the (a, c) and (b, d) halves of the recursion. `odd_src`
// holds the coefficients read with index l-1, `even_src` those read with l.

// value at slot h-1, h >= 1
inline SqrtThreeNumber first_kind(long h, long odd_hi, long even_hi,
                                  const std::function<SqrtThreeNumber(long)>& odd_src,
                                  const std::function<SqrtThreeNumber(long)>& even_src)
{
    SqrtThreeNumber u, w;
    for (long l = h; l <= odd_hi; ++l)
        u += odd_src(l - 1) * (two_pow(2 * l - 2 * h + 1) * nc('s', 2 * l - 1, h) + nc('q', 2 * l - 1, h));
    for (long l = h - 1; l <= even_hi; ++l)
        w += even_src(l) * (two_pow(2 * l - 2 * h + 2) * nc('r', 2 * l, h) + nc('p', 2 * l, h));
    return u * SqrtThreeNumber::root_part(Rational(1, 3)) + w;
}

// value at slot 0
inline SqrtThreeNumber second_kind_zero(long odd_hi, long even_hi,
                                        const std::function<SqrtThreeNumber(long)>& odd_src,
                                        const std::function<SqrtThreeNumber(long)>& even_src)
{
    SqrtThreeNumber u, w;
    for (long l = 1; l <= odd_hi; ++l) {
        SqrtThreeNumber inner = two_pow(2 * l) * (SqrtThreeNumber(2) * nc('r', 2 * l - 1, 0) + nc('y', 2 * l - 1, 0)) +
                                SqrtThreeNumber(2) * nc('p', 2 * l - 1, 0) + nc('z', 2 * l - 1, 0);
        u += odd_src(l - 1) * inner;
    }
    for (long l = 0; l <= even_hi; ++l)
        w += even_src(l) * (two_pow(2 * l + 1) * nc('s', 2 * l, 0) + nc('q', 2 * l, 0));
    return u * SqrtThreeNumber(Rational(1, 3)) + w * SqrtThreeNumber::root_part(Rational(2, 3));
}

// value at slot h >= 1; the even sum starts at even_lo
inline SqrtThreeNumber second_kind(long h, long odd_hi, long even_lo, long even_hi,
                                   const std::function<SqrtThreeNumber(long)>& odd_src,
                                   const std::function<SqrtThreeNumber(long)>& even_src)
{
    SqrtThreeNumber u, w;
    for (long l = h; l <= odd_hi; ++l)
        u += odd_src(l - 1) * (two_pow(2 * l - 2 * h) * nc('r', 2 * l - 1, h) + nc('p', 2 * l - 1, h));
    for (long l = even_lo; l <= even_hi; ++l)
        w += even_src(l) * (two_pow(2 * l - 2 * h + 1) * nc('s', 2 * l, h) + nc('q', 2 * l, h));
    return u + w * SqrtThreeNumber::root_part(Rational(1, 3));
}

}  // namespace detail

// Fills d[0] -> (a[1], b[1]) -> (c[1], d[1]) -> (a[2], b[2]) -> ...
// Summation bounds follow the recursion literally; the d-recursion for h >= 1
// stops the b-sum at m-1 and starts it at h, unlike the b-recursion.
inline CoefficientTable build_tables(long max_n)
{
    if (max_n < 0) throw DomainError("max_n must be non-negative");
    CoefficientTable t;
    t.max_n = max_n;
    t.d[{0, 0}] = SqrtThreeNumber(1);
    for (long n = 0; n < max_n; ++n) {
        auto c_n = [&](long j) { return t.C(n, j); };
        auto d_n = [&](long j) { return t.D(n, j); };
        for (long h = 1; h <= n + 1; ++h) t.a[{n + 1, h - 1}] = detail::first_kind(h, n, n, c_n, d_n);
        t.b[{n + 1, 0}] = detail::second_kind_zero(n, n, c_n, d_n);
        for (long h = 1; h <= n; ++h) t.b[{n + 1, h}] = detail::second_kind(h, n, h - 1, n, c_n, d_n);

        const long m = n + 1;
        auto a_m = [&](long j) { return t.A(m, j); };
        auto b_m = [&](long j) { return t.B(m, j); };
        for (long h = 1; h <= m; ++h) t.c[{m, h - 1}] = detail::first_kind(h, m, m - 1, a_m, b_m);
        t.d[{m, 0}] = detail::second_kind_zero(m, m - 1, a_m, b_m);
        for (long h = 1; h <= m; ++h) t.d[{m, h}] = detail::second_kind(h, m, h, m - 1, a_m, b_m);
    }
    return t;
}

struct AuditViolation {
    char table;
    long n, j;
    SqrtThreeNumber value;
};

struct RationalityReport {
    long max_n = 0;
    std::size_t checked = 0;
    std::vector<AuditViolation> violations;
    bool passed() const { return violations.empty(); }
};

// a, d entries must be rational; b, c entries must be rational multiples of sqrt3.
inline RationalityReport rationality_audit(const CoefficientTable& t)
{
    RationalityReport rep;
    rep.max_n = t.max_n;
    auto scan = [&](char name, const std::map<CoeffIndex, SqrtThreeNumber>& m, bool want_rational) {
        for (const auto& [idx, v] : m) {
            ++rep.checked;
            bool ok = want_rational ? v.is_rational() : v.is_pure_root();
            if (!ok) rep.violations.push_back({name, idx.first, idx.second, v});
        }
    };
    scan('a', t.a, true);
    scan('b', t.b, false);
    scan('c', t.c, false);
    scan('d', t.d, true);
    return rep;
}

}  // namespace mahler
