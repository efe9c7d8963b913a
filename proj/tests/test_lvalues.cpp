#include <mahler/lvalues.hpp>

#include <gtest/gtest.h>

using namespace mahler;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_digits(30);

// mpmath at 30 digits
void expect_close(const Real& got, const char* want, const char* tol = "1e-28")
{
    PrecisionScope scope(kCtx);
    Real w(want);
    EXPECT_LT(boost::multiprecision::abs(got - w), Real(tol)) << real_text(got, 30) << " vs " << want;
}

}  // namespace

TEST(SpecialValues, ZetaOdd)
{
    expect_close(zeta_odd(3, kCtx), "1.20205690315959428539973816151");
    expect_close(zeta_odd(5, kCtx), "1.03692775514336992633136548646");
    EXPECT_THROW(zeta_odd(4, kCtx), DomainError);
    EXPECT_THROW(zeta_odd(1, kCtx), DomainError);
}

TEST(SpecialValues, LChi3)
{
    expect_close(l_chi3(2, kCtx), "0.781302412896486296867187429624");
    expect_close(l_chi3(4, kCtx), "0.940025680877123768691069445071");
    EXPECT_THROW(l_chi3(1, kCtx), DomainError);
}

TEST(SpecialValues, Derivatives)
{
    expect_close(zeta_deriv_direct(-2, kCtx), "-0.0304484570583932707802515304712");
    expect_close(l_chi3_deriv_direct(-1, kCtx), "0.323065947219450514093636510724");
}

TEST(SpecialValues, DirectSummationCrossCheck)
{
    PrecisionScope scope(kCtx);
    EXPECT_NEAR(static_cast<double>(zeta_direct(3, 20000)), zeta_odd(3, kCtx).convert_to<double>(), 1e-12);
    EXPECT_NEAR(static_cast<double>(l_chi3_direct(4, 20000)), l_chi3(4, kCtx).convert_to<double>(), 1e-12);
}

TEST(SpecialValues, HigherPrecisionIsConsistent)
{
    PrecisionContext hi = PrecisionContext::for_digits(80);
    PrecisionScope scope(hi);
    Real a = zeta_odd(7, hi), b = zeta_odd(7, kCtx);
    EXPECT_LT(boost::multiprecision::abs(a - b), Real("1e-29"));
}

TEST(Hurwitz, PoleAndRangeRejected)
{
    EXPECT_THROW(hurwitz_zeta(1, Rational(1), kCtx), DomainError);
    EXPECT_THROW(hurwitz_zeta(3, Rational(0), kCtx), DomainError);
    EXPECT_THROW(hurwitz_zeta(3, make_rational(3, 2), kCtx), DomainError);
}

TEST(Polylog, NegativeOne)
{
    expect_close(polylog(3, UnitPoint::neg_one, kCtx).re, "-0.901542677369695714049803621134");
    PrecisionScope scope(kCtx);
    EXPECT_LT(boost::multiprecision::abs(polylog(3, UnitPoint::neg_one, kCtx).im), Real("1e-28"));
}

TEST(Identities, BothSidesAgree)
{
    for (const auto& info : identity_table()) {
        for (long h = info.odd_weight ? 1 : 0; h <= 4; ++h) {
            Complex l = identity_lhs(info.id, h, kCtx), r = identity_rhs(info.id, h, kCtx);
            PrecisionScope scope(kCtx);
            EXPECT_LT((l - r).abs(), Real("1e-27")) << info.alias << " h=" << h;
        }
    }
}

TEST(Identities, ReductionShape)
{
    IdentityReduction r = reduce_identity(Identity::li_neg_one, 1);
    EXPECT_EQ(r.weight, 3);
    EXPECT_TRUE(r.against_zeta);
    EXPECT_EQ(r.coeff, SqrtThreeNumber(make_rational(-3, 4)));
    IdentityReduction l = reduce_identity(Identity::omega_diff, 0);
    EXPECT_EQ(l.weight, 2);
    EXPECT_FALSE(l.against_zeta);
    EXPECT_EQ(l.coeff, SqrtThreeNumber::root_part(Rational(-1)));
    EXPECT_THROW(reduce_identity(Identity::li_one, 0), DomainError);
    EXPECT_EQ(parse_identity("omega-sum"), Identity::omega_sum);
    EXPECT_THROW(parse_identity("nope"), DomainError);
}

TEST(DerivativeBasis, FunctionalEquationMatchesDirectDerivative)
{
    for (long h = 1; h <= 5; ++h) {
        DerivBasisValue v = deriv_basis(h, DerivKind::zeta, kCtx);
        Real d = zeta_deriv_direct(-2 * h, kCtx);
        PrecisionScope scope(kCtx);
        EXPECT_LT(boost::multiprecision::abs(v.value - d), Real("1e-26") * (1 + boost::multiprecision::abs(d))) << h;
    }
    for (long h = 0; h <= 5; ++h) {
        DerivBasisValue v = deriv_basis(h, DerivKind::L, kCtx);
        Real d = l_chi3_deriv_direct(-2 * h - 1, kCtx);
        PrecisionScope scope(kCtx);
        EXPECT_LT(boost::multiprecision::abs(v.value - d), Real("1e-26") * (1 + boost::multiprecision::abs(d))) << h;
    }
}

TEST(DerivativeBasis, Factors)
{
    EXPECT_EQ(deriv_factor(1, DerivKind::zeta), SqrtThreeNumber(make_rational(-1, 4)));
    EXPECT_EQ(deriv_factor(0, DerivKind::L), SqrtThreeNumber::root_part(make_rational(3, 4)));
    EXPECT_THROW(deriv_factor(0, DerivKind::zeta), DomainError);
}
