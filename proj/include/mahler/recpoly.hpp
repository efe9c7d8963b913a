#pragma once

#include "numbers.hpp"

#include <array>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace mahler {

// Exact binomials from a cached Pascal triangle.
class BinomialTable {
public:
    static const Integer& get(unsigned n, unsigned k)
    {
        static BinomialTable table;
        return table.lookup(n, k);
    }

private:
    const Integer& lookup(unsigned n, unsigned k)
    {
        static const Integer zero(0);
        if (k > n) return zero;
        {
            std::shared_lock lock(mu_);
            if (n < rows_.size()) return rows_[n][k];
        }
        std::unique_lock lock(mu_);
        while (rows_.size() <= n) {
            std::size_t m = rows_.size();
            std::vector<Integer> row(m + 1, Integer(1));
            for (std::size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

    std::shared_mutex mu_;
    std::deque<std::vector<Integer>> rows_;
};

inline Integer binomial(unsigned n, unsigned k) { return BinomialTable::get(n, k); }

enum class Family { R, S, P, Q, Y, Z };

inline const char* family_name(Family f)
{
    static const char* names[] = {"R", "S", "P", "Q", "Y", "Z"};
    return names[static_cast<int>(f)];
}

inline Family parse_family(const std::string& s)
{
    static const std::array<Family, 6> all{Family::R, Family::S, Family::P, Family::Q, Family::Y, Family::Z};
    for (Family f : all)
        if (s == family_name(f)) return f;
    throw DomainError("unknown recursive family: " + s);
}

namespace detail {

inline Integer ipow(long base, unsigned e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

inline long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// The part of each recursion that does not refer to lower members.
inline ParityPolynomial direct_part(Family f, unsigned k)
{
    const unsigned top = k + 1;
    ParityPolynomial out(parity_of(top));
    auto add = [&](const Rational& c, unsigned power) {
        out += ParityPolynomial::monomial(SqrtThreeNumber(c), power);
    };
    switch (f) {
    case Family::R:
    case Family::P: {
        long base = f == Family::R ? 2 : 5;
        for (unsigned j = 0; j <= top; j += 2) {
            Rational c(sign_pow(j / 2) * binomial(top, j) * (ipow(base, j) + 1));
            add(c / (2 * top), top - j);
        }
        break;
    }
    case Family::S:
    case Family::Q: {
        long base = f == Family::S ? 2 : 5;
        for (unsigned j = 1; j <= top; j += 2) {
            long sgn = f == Family::S ? sign_pow((j + 1) / 2) : sign_pow((j - 1) / 2);
            Rational c(sgn * binomial(top, j) * (ipow(base, j) - 1));
            add(c / (2 * top), top - j);
        }
        break;
    }
    case Family::Y: {
        add(Rational(-1, top), top);
        for (unsigned j = 0; j <= top; j += 2) {
            Rational c(sign_pow(j / 2) * binomial(top, j) * ipow(3, j));
            add(-c / top, top - j);
        }
        break;
    }
    case Family::Z: {
        for (unsigned j = 0; j <= top; j += 2) {
            Rational c(sign_pow(j / 2) * binomial(top, j) * ipow(3, j));
            add(-2 * c / top, top - j);
        }
        break;
    }
    }
    return out;
}

inline long recursion_base(Family f) { return (f == Family::R || f == Family::S || f == Family::Y) ? 3 : 6; }

}  // namespace detail

// Memoized members of one family. Append-only cache; a member is published
// only after all lower members exist.
class RecursiveFamily {
public:
    explicit RecursiveFamily(Family f) : family_(f) {}

    Family family() const { return family_; }

    ParityPolynomial get(unsigned k)
    {
        {
            std::shared_lock lock(mu_);
            if (k < cache_.size()) return cache_[k];
        }
        std::unique_lock lock(mu_);
        while (cache_.size() <= k) cache_.push_back(build(static_cast<unsigned>(cache_.size())));
        return cache_[k];
    }

private:
    // called with the write lock held; all lower members are cached
    ParityPolynomial build(unsigned k) const
    {
        ParityPolynomial p = detail::direct_part(family_, k);
        const unsigned top = k + 1;
        const long base = detail::recursion_base(family_);
        for (unsigned j = 3; j <= top; j += 2) {
            Rational c(detail::sign_pow((j + 1) / 2) * binomial(top, j) * detail::ipow(base, j - 1));
            c /= top;
            p += cache_[top - j] * SqrtThreeNumber(c);
        }
        return p;
    }

    Family family_;
    std::shared_mutex mu_;
    std::vector<ParityPolynomial> cache_;
};

inline RecursiveFamily& family_cache(Family f)
{
    static RecursiveFamily fams[] = {RecursiveFamily(Family::R), RecursiveFamily(Family::S),
                                     RecursiveFamily(Family::P), RecursiveFamily(Family::Q),
                                     RecursiveFamily(Family::Y), RecursiveFamily(Family::Z)};
    return fams[static_cast<int>(f)];
}

inline ParityPolynomial get_poly(Family f, long k)
{
    if (k < 0) throw DomainError("family index must be non-negative");
    return family_cache(f).get(static_cast<unsigned>(k));
}

// Parity each member is expected to have: R, P, Y, Z carry x^(k+1), S, Q carry x^k.
inline Parity expected_parity(Family f, long k)
{
    bool shifted = f == Family::S || f == Family::Q;
    return parity_of(shifted ? k : k + 1);
}

// Named coefficients: for odd-parity rows slot j is x^(2j-1) (j >= 1), for
// even-parity rows slot j is x^(2j) (j >= 0). Slots above the degree are zero.
inline Rational named_coeff(char tag, long k, long j)
{
    Family f;
    switch (tag) {
    case 'r': f = Family::R; break;
    case 's': f = Family::S; break;
    case 'p': f = Family::P; break;
    case 'q': f = Family::Q; break;
    case 'y': f = Family::Y; break;
    case 'z': f = Family::Z; break;
    default: throw DomainError(std::string("unknown coefficient tag: ") + tag);
    }
    if (k < 0) throw std::out_of_range("named coefficient: negative family index");
    Parity par = expected_parity(f, k);
    long first = par == Parity::odd ? 1 : 0;
    if (j < first) throw std::out_of_range("named coefficient: slot below the row's first power");
    long power = par == Parity::odd ? 2 * j - 1 : 2 * j;
    SqrtThreeNumber v = get_poly(f, k).coeff(power);
    return v.rat();
}

}  // namespace mahler
