#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mahler {

using Rational = mpq_class;
using Integer = mpz_class;
using Real = boost::multiprecision::mpfr_float;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParityMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational pow_rational(const Rational& base, unsigned e)
{
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// "p/q" always, "n/1" for integers.
inline std::string rational_json(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string rational_text(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational: " + s);
    if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- precision

struct PrecisionContext {
    unsigned bits = 0;
    unsigned target_digits = 0;

    static PrecisionContext for_digits(unsigned digits)
    {
        PrecisionContext c;
        c.target_digits = digits;
        c.bits = static_cast<unsigned>(std::ceil(digits * 3.33)) + 64;
        return c;
    }

    bool consistent() const
    {
        return target_digits > 0 && bits >= static_cast<unsigned>(std::ceil(target_digits * 3.33)) + 64;
    }

    unsigned digits10() const { return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1; }

    void require() const
    {
        if (!consistent()) throw DomainError("precision context: bits below target_digits*3.33+64");
    }
};

// Sets the mpfr default precision for every Real created while alive.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionContext& ctx) : saved_(Real::default_precision())
    {
        ctx.require();
        Real::default_precision(ctx.digits10());
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const Rational& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline Real real_sqrt3() { return boost::multiprecision::sqrt(Real(3)); }
inline Real real_pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline std::string real_text(const Real& x, unsigned digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

// ------------------------------------------------------------ Q(sqrt 3)

class SqrtThreeNumber {
public:
    SqrtThreeNumber() = default;
    SqrtThreeNumber(long v) : rat_(v) {}
    SqrtThreeNumber(Rational rat) : rat_(std::move(rat)) {}
    SqrtThreeNumber(Rational rat, Rational root) : rat_(std::move(rat)), root_(std::move(root)) {}

    static SqrtThreeNumber sqrt3() { return {Rational(0), Rational(1)}; }
    static SqrtThreeNumber root_part(const Rational& q) { return {Rational(0), q}; }

    const Rational& rat() const { return rat_; }
    const Rational& root() const { return root_; }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(root_) == 0; }
    bool is_rational() const { return sgn(root_) == 0; }
    bool is_pure_root() const { return sgn(rat_) == 0; }

    // p^2 - 3 q^2; never zero for a nonzero element.
    Rational norm() const { return rat_ * rat_ - 3 * root_ * root_; }
    SqrtThreeNumber conjugate() const { return {rat_, -root_}; }

    SqrtThreeNumber operator-() const { return {-rat_, -root_}; }

    SqrtThreeNumber& operator+=(const SqrtThreeNumber& o)
    {
        rat_ += o.rat_;
        root_ += o.root_;
        return *this;
    }
    SqrtThreeNumber& operator-=(const SqrtThreeNumber& o)
    {
        rat_ -= o.rat_;
        root_ -= o.root_;
        return *this;
    }
    SqrtThreeNumber& operator*=(const SqrtThreeNumber& o)
    {
        Rational p = rat_ * o.rat_ + 3 * root_ * o.root_;
        Rational q = rat_ * o.root_ + root_ * o.rat_;
        rat_ = std::move(p);
        root_ = std::move(q);
        return *this;
    }
    SqrtThreeNumber& operator/=(const SqrtThreeNumber& o)
    {
        if (o.is_zero()) throw DomainError("division by zero in Q(sqrt3)");
        Rational n = o.norm();
        *this *= o.conjugate();
        rat_ /= n;
        root_ /= n;
        return *this;
    }

    friend SqrtThreeNumber operator+(SqrtThreeNumber a, const SqrtThreeNumber& b) { return a += b; }
    friend SqrtThreeNumber operator-(SqrtThreeNumber a, const SqrtThreeNumber& b) { return a -= b; }
    friend SqrtThreeNumber operator*(SqrtThreeNumber a, const SqrtThreeNumber& b) { return a *= b; }
    friend SqrtThreeNumber operator/(SqrtThreeNumber a, const SqrtThreeNumber& b) { return a /= b; }

    friend bool operator==(const SqrtThreeNumber& a, const SqrtThreeNumber& b)
    {
        return a.rat_ == b.rat_ && a.root_ == b.root_;
    }
    friend bool operator!=(const SqrtThreeNumber& a, const SqrtThreeNumber& b) { return !(a == b); }

    Real to_real() const
    {
        Real v = mahler::to_real(rat_);
        if (sgn(root_) != 0) v += mahler::to_real(root_) * real_sqrt3();
        return v;
    }

    // e.g. "5/4", "5/4*sqrt3", "1 + 2*sqrt3", "-2/3*sqrt3"
    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::string s;
        if (sgn(rat_) != 0) s = rat_.get_str();
        if (sgn(root_) != 0) {
            Rational r = root_;
            if (!s.empty()) {
                s += sgn(r) < 0 ? " - " : " + ";
                r = abs(r);
            }
            if (r == 1) s += "sqrt3";
            else if (r == -1) s += "-sqrt3";
            else s += r.get_str() + "*sqrt3";
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const SqrtThreeNumber& v) { return os << v.to_string(); }

private:
    Rational rat_{0};
    Rational root_{0};
};

inline SqrtThreeNumber sqrt3_add(const SqrtThreeNumber& a, const SqrtThreeNumber& b) { return a + b; }
inline SqrtThreeNumber sqrt3_mul(const SqrtThreeNumber& a, const SqrtThreeNumber& b) { return a * b; }
inline SqrtThreeNumber sqrt3_div(const SqrtThreeNumber& a, const SqrtThreeNumber& b) { return a / b; }

inline SqrtThreeNumber pow(const SqrtThreeNumber& base, unsigned e)
{
    SqrtThreeNumber r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// Inverse of SqrtThreeNumber::to_string.
inline SqrtThreeNumber parse_sqrt3(std::string s)
{
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw DomainError("empty number");
    auto root_term = [](const std::string& t) -> Rational {
        std::string head = t.substr(0, t.size() - 5);  // strip "sqrt3"
        if (head.empty() || head == "+") return Rational(1);
        if (head == "-") return Rational(-1);
        if (head.back() != '*') throw DomainError("bad sqrt3 term: " + t);
        head.pop_back();
        if (head.front() == '+') head.erase(0, 1);
        return parse_rational(head);
    };
    auto ends_root = [](const std::string& t) { return t.size() >= 5 && t.compare(t.size() - 5, 5, "sqrt3") == 0; };
    if (!ends_root(s)) return SqrtThreeNumber(parse_rational(s));
    // the root term starts at the last sign that is not at position 0
    std::size_t cut = s.find_last_of("+-");
    if (cut == std::string::npos || cut == 0) return SqrtThreeNumber::root_part(root_term(s));
    return {parse_rational(s.substr(0, cut)), root_term(s.substr(cut))};
}

// --------------------------------------------------------- parity polynomial

enum class Parity { even, odd };

inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline Parity parity_of(long degree) { return (degree % 2 == 0) ? Parity::even : Parity::odd; }
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

// Polynomial in x with only even or only odd powers. Internally c_[i] is the
// coefficient of x^(2i + offset), offset 0 (even) or 1 (odd).
class ParityPolynomial {
public:
    ParityPolynomial() = default;
    explicit ParityPolynomial(Parity p) : parity_(p) {}
    ParityPolynomial(Parity p, std::vector<SqrtThreeNumber> by_power) : parity_(p), c_(std::move(by_power)) { trim(); }

    static ParityPolynomial constant(const SqrtThreeNumber& c)
    {
        return ParityPolynomial(Parity::even, {c});
    }
    static ParityPolynomial monomial(const SqrtThreeNumber& c, unsigned power)
    {
        ParityPolynomial p(parity_of(power));
        p.c_.assign(power / 2 + 1, SqrtThreeNumber());
        p.c_[power / 2] = c;
        p.trim();
        return p;
    }

    Parity parity() const { return parity_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return is_zero() || (parity_ == Parity::even && c_.size() == 1); }

    // -1 for the zero polynomial
    long degree() const { return c_.empty() ? -1 : 2 * static_cast<long>(c_.size() - 1) + offset(); }

    // coefficient of x^power, zero if absent or of the wrong parity
    SqrtThreeNumber coeff(long power) const
    {
        if (power < 0 || parity_of(power) != parity_) return {};
        std::size_t i = static_cast<std::size_t>(power / 2);
        return i < c_.size() ? c_[i] : SqrtThreeNumber();
    }

    // coefficients of the parity's powers, ascending
    const std::vector<SqrtThreeNumber>& by_power() const { return c_; }

    bool all_rational() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const SqrtThreeNumber& v) { return v.is_rational(); });
    }
    bool all_pure_root() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const SqrtThreeNumber& v) { return v.is_pure_root(); });
    }
    // every coefficient in Q or in sqrt3*Q
    bool coefficients_split() const
    {
        return std::all_of(c_.begin(), c_.end(),
                           [](const SqrtThreeNumber& v) { return v.is_rational() || v.is_pure_root(); });
    }

    ParityPolynomial& operator+=(const ParityPolynomial& o) { return accumulate(o, 1); }
    ParityPolynomial& operator-=(const ParityPolynomial& o) { return accumulate(o, -1); }
    ParityPolynomial& operator*=(const SqrtThreeNumber& s)
    {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend ParityPolynomial operator+(ParityPolynomial a, const ParityPolynomial& b) { return a += b; }
    friend ParityPolynomial operator-(ParityPolynomial a, const ParityPolynomial& b) { return a -= b; }
    friend ParityPolynomial operator*(ParityPolynomial a, const SqrtThreeNumber& s) { return a *= s; }
    friend ParityPolynomial operator*(const SqrtThreeNumber& s, ParityPolynomial a) { return a *= s; }
    ParityPolynomial operator-() const { return *this * SqrtThreeNumber(-1); }

    friend ParityPolynomial operator*(const ParityPolynomial& a, const ParityPolynomial& b)
    {
        Parity p = (a.parity_ == b.parity_) ? Parity::even : Parity::odd;
        if (a.is_zero() || b.is_zero()) return ParityPolynomial(p);
        // (2i+oa) + (2j+ob) = 2(i+j) + oa + ob; the carry when both odd
        int carry = (a.offset() + b.offset()) / 2;
        std::vector<SqrtThreeNumber> out(a.c_.size() + b.c_.size() - 1 + carry);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j + carry] += a.c_[i] * b.c_[j];
        }
        return ParityPolynomial(p, std::move(out));
    }

    friend bool operator==(const ParityPolynomial& a, const ParityPolynomial& b)
    {
        if (a.is_zero() && b.is_zero()) return true;
        return a.parity_ == b.parity_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ParityPolynomial& a, const ParityPolynomial& b) { return !(a == b); }

    SqrtThreeNumber eval(const SqrtThreeNumber& x) const
    {
        SqrtThreeNumber x2 = x * x, acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x2 + *it;
        return offset() ? acc * x : acc;
    }

    Real eval(const Real& x, const PrecisionContext& ctx) const
    {
        PrecisionScope scope(ctx);
        Real x2 = x * x, acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x2 + it->to_real();
        return offset() ? Real(acc * x) : acc;
    }

    // descending powers, e.g. "x^3/3 - x"
    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const SqrtThreeNumber& v = c_[i];
            if (v.is_zero()) continue;
            long power = 2 * static_cast<long>(i) + offset();
            std::string mono = power == 0 ? "" : (power == 1 ? var : var + "^" + std::to_string(power));
            bool compound = !v.is_rational() && !v.is_pure_root();
            bool negative = !compound && (v.is_rational() ? sgn(v.rat()) < 0 : sgn(v.root()) < 0);
            SqrtThreeNumber mag = negative ? -v : v;
            std::string term;
            if (mono.empty()) {
                term = mag.to_string();
            } else if (compound) {
                term = "(" + mag.to_string() + ")*" + mono;
            } else {
                // numerator*x^k/denominator, e.g. "x/2", "2*x^2/3", "5*sqrt3*x/4"
                const Rational& q = mag.is_rational() ? mag.rat() : mag.root();
                std::string num = q.get_num() == 1 ? "" : q.get_num().get_str() + "*";
                if (!mag.is_rational()) num += "sqrt3*";
                term = num + mono;
                if (q.get_den() != 1) term += "/" + q.get_den().get_str();
            }
            if (s.empty()) s = negative ? "-" + term : term;
            else s += (negative ? " - " : " + ") + term;
        }
        return s;
    }

private:
    int offset() const { return parity_ == Parity::odd ? 1 : 0; }

    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    ParityPolynomial& accumulate(const ParityPolynomial& o, int sign)
    {
        if (o.is_zero()) return *this;
        if (is_zero()) parity_ = o.parity_;
        else if (parity_ != o.parity_) throw ParityMismatch("adding polynomials of different parity");
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            if (sign > 0) c_[i] += o.c_[i];
            else c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }

    Parity parity_ = Parity::even;
    std::vector<SqrtThreeNumber> c_;
};

inline SqrtThreeNumber poly_eval(const ParityPolynomial& p, const SqrtThreeNumber& x) { return p.eval(x); }
inline Real poly_eval(const ParityPolynomial& p, const Real& x, const PrecisionContext& ctx) { return p.eval(x, ctx); }

}  // namespace mahler
