#include <mahler/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace mahler;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_digits(30);

double cf(IntegralKind w, double a, double b, long k)
{
    return closed_form(w, {Rational(a), Rational(b), k}, kCtx).convert_to<double>();
}

}  // namespace

TEST(Quadrature, PolynomialIsExact)
{
    auto r = gk_integrate([](Float x) { return 3 * x * x; }, 0, 2, {});
    EXPECT_NEAR(static_cast<double>(r.value), 8.0, 1e-15);
    EXPECT_LT(r.error, 1e-14L);
}

TEST(Quadrature, SemiInfiniteRange)
{
    auto r = gk_integrate([](Float x) { return std::exp(-x); }, 0, std::numeric_limits<Float>::infinity(), {});
    EXPECT_NEAR(static_cast<double>(r.value), 1.0, 1e-14);
}

TEST(Quadrature, ErrorEstimateScalesWithWidth)
{
    // one GK15 panel on a wide interval must report an error in absolute units
    auto f = [](Float x) { return std::sin(x); };
    auto p = detail::gk_panel(f, 0, 40);
    EXPECT_GT(p.error, 0);
    Float truth = 1 - std::cos(40.0L);
    EXPECT_LE(std::fabs(p.value - truth), 20 * p.error);
}

TEST(Quadrature, UnreachableToleranceThrows)
{
    QuadratureSpec q;
    q.max_depth = 2;
    auto f = [](Float x) { return std::sin(1 / x); };
    EXPECT_THROW(gk_integrate(f, 1e-6L, 1, q), QuadratureFailure);
}

TEST(Quadrature, BadSpecRejected)
{
    QuadratureSpec q;
    q.abs_tol = 0;
    EXPECT_THROW(q.require(), DomainError);
    QuadratureSpec r;
    r.pv_excision = {1e-3L, -1};
    EXPECT_THROW(r.require(), DomainError);
}

TEST(LogIntegrals, MatchClosedForms)
{
    struct Case {
        IntegralKind w;
        double a, b;
        long k;
    };
    const Case cases[] = {
        {IntegralKind::f1, 1, 2, 0},    {IntegralKind::f1, 0.5, 3, 4},   {IntegralKind::f2, 2, 0.25, 3},
        {IntegralKind::g1, 1, 2, 0},    {IntegralKind::g1, 3, 0.5, 5},   {IntegralKind::g2, 1, 2, 3},
        {IntegralKind::g2, 0.3, 4, 6},  {IntegralKind::fsum, -2, -0.5, 2}, {IntegralKind::gsum, 1.5, -4, 1},
        {IntegralKind::gsum, -0.2, -3, 0},
    };
    for (const auto& c : cases) {
        double want = cf(c.w, c.a, c.b, c.k);
        double got = static_cast<double>(quad_log_integral({c.w, c.a, c.b, c.k}).value);
        EXPECT_LT(std::fabs(got - want), 1e-12 * (1 + std::fabs(want))) << integral_name(c.w) << " k=" << c.k;
    }
}

TEST(LogIntegrals, PrincipalValueTwoWays)
{
    IntegrandSpec s{IntegralKind::g1, 1, 2, 0};
    ASSERT_TRUE(has_pole(s));
    QuadratureSpec ex;
    ex.pv_excision = {1e-2L, 1e-3L, 1e-4L};
    double sub = static_cast<double>(quad_log_integral(s).value);
    double exc = static_cast<double>(quad_log_integral(s, ex).value);
    EXPECT_NEAR(sub, exc, 1e-9);
    EXPECT_NEAR(sub, 0.0990210257942779, 1e-13);
}

TEST(LogIntegrals, PolelessKindsReportNoPole)
{
    EXPECT_FALSE(has_pole({IntegralKind::f1, 1, 2, 0}));
    EXPECT_FALSE(has_pole({IntegralKind::f2, 1, 2, 0}));
}

TEST(BaseIntegrals, MatchSpecialValues)
{
    PrecisionScope scope(kCtx);
    for (long h = 0; h <= 2; ++h) {
        double l = (to_real(base_integral_factor(TermKind::L, h)) * l_chi3(2 * h + 2, kCtx)).convert_to<double>();
        EXPECT_NEAR(static_cast<double>(base_integral(TermKind::L, h).value) / l, 1.0, 1e-12) << h;
        double unit = static_cast<double>(unit_log_integral(h, 1).value + unit_log_integral(h, -1).value);
        EXPECT_NEAR(unit / -l, 1.0, 1e-12) << h;
        if (h >= 1) {
            double z = (to_real(base_integral_factor(TermKind::zeta, h)) * zeta_odd(2 * h + 1, kCtx)).convert_to<double>();
            EXPECT_NEAR(static_cast<double>(base_integral(TermKind::zeta, h).value) / z, 1.0, 1e-12) << h;
        }
    }
    EXPECT_THROW(base_integral(TermKind::zeta, 0), DomainError);
}

TEST(Torus, MobiusMapInverts)
{
    for (Float th = -3.0L; th <= 3.0L; th += 0.25L) EXPECT_NEAR(static_cast<double>(mobius_angle(mobius_real(th))), static_cast<double>(th), 1e-15);
    EXPECT_NEAR(static_cast<double>(mobius_real(std::numbers::pi_v<Float> / 3)), 0.0, 1e-18);
}

TEST(Torus, MatchesClosedExpression)
{
    double m1 = measure_numeric(1, kCtx).convert_to<double>();
    EXPECT_NEAR(static_cast<double>(torus_measure(1).value), m1, 1e-12);
    double m2 = measure_numeric(2, kCtx).convert_to<double>();
    EXPECT_NEAR(static_cast<double>(torus_measure(2).value), m2, 1e-10);
    EXPECT_THROW(torus_measure(3), DomainError);
}

TEST(Quadrature, HalvingToleranceStaysWithinReportedError)
{
    QuadratureSpec tight;
    tight.abs_tol /= 2;
    tight.rel_tol /= 2;
    for (IntegralKind w : {IntegralKind::f1, IntegralKind::f2, IntegralKind::g1, IntegralKind::g2})
        for (Float a : {0.3L, 1.0L, 2.5L})
            for (Float b : {0.5L, 4.0L})
                for (long k : {0L, 2L, 5L}) {
                    IntegrandSpec s{w, a, b, k};
                    QuadResult base = quad_log_integral(s), fine = quad_log_integral(s, tight);
                    // the floor covers ties where both runs report an error of zero
                    EXPECT_LE(std::fabs(base.value - fine.value), base.error + 1e-17L * (1 + std::fabs(base.value)))
                        << integral_name(w) << " a=" << static_cast<double>(a) << " b=" << static_cast<double>(b) << " k=" << k;
                }
}

TEST(LogIntegrals, ExcisionExtrapolatesToClosedForm)
{
    QuadratureSpec ex;
    ex.pv_excision = {1e-2L, 1e-3L, 1e-4L};
    for (double b : {0.3, 2.0, 4.5}) {
        double want = cf(IntegralKind::g1, 1, b, 0);
        double got = static_cast<double>(quad_log_integral({IntegralKind::g1, 1, b, 0}, ex).value);
        EXPECT_LT(std::fabs(got - want), 1e-8) << b;
    }
}

TEST(Torus, FirstOrderMatchesReducedIntegral)
{
    // the reduced one-variable integral for n = 1 is the L-type base integral at h = 0
    Float reduced = base_integral(TermKind::L, 0).value * std::sqrt(3.0L) / (2 * std::numbers::pi_v<Float>);
    EXPECT_NEAR(static_cast<double>(torus_measure(1).value), static_cast<double>(reduced), 1e-6);
}
