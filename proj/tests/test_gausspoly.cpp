// Unit tests for the Gaussian-polynomial class: multi-index algebra, exact
// calculus, suprema and the Fourier transform. Numeric values are checked
// against independent oracles (dense grids, quadrature, closed forms).

#include "fsem/gauss_poly.hpp"
#include "fsem/random.hpp"
#include "fsem/sup.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using namespace fsem;

namespace {

GaussPolyFn gauss() { return gp_gaussian(1, Real(1)); }
GaussPolyFn x_gauss() { return gp_univariate({Real(0), Real(1)}, Real(1)); }

// Dense-grid maximum of |f| on [-L, L]; independent of the branch and bound.
double grid_sup(const GaussPolyFn& f, double L, int n)
{
    double best = 0;
    for (int i = 0; i <= n; ++i) {
        long double x = -L + 2 * L * i / n;
        best = std::max(best, static_cast<double>(std::abs(gp_eval(f, {x}))));
    }
    return best;
}

// Composite Simpson quadrature of f(t) e^{-i 2 pi t xi} over [-L, L].
std::complex<double> quad_fourier(const GaussPolyFn& f, double xi, double L = 12, int n = 24000)
{
    const double h = 2 * L / n;
    std::complex<long double> sum = 0;
    for (int i = 0; i <= n; ++i) {
        long double t = -L + h * i;
        long double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
        sum += w * gp_eval(f, {t}) * std::exp(std::complex<long double>(0, -2 * M_PIl * t * xi));
    }
    auto v = sum * static_cast<long double>(h / 3);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

TEST(MultiIndex, PartialOrder)
{
    EXPECT_TRUE(mi_leq({0, 0}, {2, 1}));
    EXPECT_FALSE(mi_leq({2, 1}, {1, 3}));
    EXPECT_TRUE(mi_leq({1, 1}, {1, 1}));
    EXPECT_THROW(mi_leq({1}, {1, 2}), std::invalid_argument);
}

TEST(MultiIndex, JoinAndMeet)
{
    EXPECT_EQ(mi_join({2, 0}, {1, 3}), (MultiIndex{2, 3}));
    EXPECT_EQ(mi_meet({2, 0}, {1, 3}), (MultiIndex{1, 0}));
    MultiIndex a{4, 1, 7};
    EXPECT_EQ(mi_join(a, a), a);
    EXPECT_THROW(mi_join({1}, {1, 2}), std::invalid_argument);
}

TEST(MultiIndex, BelowAndFalling)
{
    EXPECT_EQ(mi_below({2, 1}).size(), 6U);
    EXPECT_EQ(mi_binomial({3, 2}, {1, 1}), 6);
    EXPECT_EQ(mi_falling({3}, {2}), 6);
    EXPECT_EQ(mi_falling({1}, {2}), 0);
    auto all = mi_all_up_to(2, 2);
    ASSERT_EQ(all.size(), 6U);
    EXPECT_EQ(all.front(), (MultiIndex{0, 0}));
    EXPECT_EQ(all.back().order(), 2U);
}

TEST(Number, ParseAndPrintExactly)
{
    EXPECT_EQ(Real::parse("0.1"), Real(mpq_class(1, 10)));
    EXPECT_EQ(Real::parse("-1e-8"), Real(mpq_class(-1, 100000000)));
    EXPECT_EQ(Real::parse("3/6"), Real(mpq_class(1, 2)));
    EXPECT_EQ(Real::parse("0.125").to_string(), "0.125");
    EXPECT_EQ(Real(mpq_class(1, 3)).to_string(), "1/3");
    EXPECT_THROW(Real::parse("1.2.3"), std::invalid_argument);
    EXPECT_THROW(Real::parse("1/0"), std::invalid_argument);
    EXPECT_TRUE((Real(1) + Real::pi()).to_string().find("e") != std::string::npos);
}

TEST(GaussPoly, DiffOfGaussian)
{
    // d/dx e^{-x^2} = -2x e^{-x^2}
    EXPECT_EQ(gp_diff(gauss(), {1}), gp_univariate({Real(0), Real(-2)}, Real(1)));
    EXPECT_TRUE(gp_diff(GaussPolyFn(1), {3}).is_zero());
}

TEST(GaussPoly, DiffComposes)
{
    auto f = x_gauss();
    EXPECT_EQ(gp_diff(gp_diff(f, {2}), {1}), gp_diff(f, {3}));
    Rng rng(7);
    GaussPolyOptions opt;
    opt.n = 2;
    opt.max_degree = 4;
    for (int i = 0; i < 20; ++i) {
        auto g = random_gauss_poly(rng, opt);
        EXPECT_EQ(gp_diff(gp_diff(g, {1, 0}), {1, 2}), gp_diff(g, {2, 2}));
    }
}

TEST(GaussPoly, ProductsAndPowers)
{
    EXPECT_EQ(gp_pow(gauss(), 2), gp_gaussian(1, Real(2)));
    EXPECT_EQ(gp_monomial_mul(gauss(), {1}), x_gauss());
    EXPECT_EQ(gp_mul(gauss(), x_gauss()), gp_univariate({Real(0), Real(1)}, Real(2)));
    EXPECT_THROW(gp_pow(gauss(), 0), std::invalid_argument);
    EXPECT_THROW(gp_gaussian(1, Real(0)), std::invalid_argument);
}

TEST(GaussPoly, CanonicalFormMergesEqualDecays)
{
    auto f = gp_add(gauss(), x_gauss());
    EXPECT_EQ(f.terms().size(), 1U);
    EXPECT_TRUE(gp_sub(f, f).is_zero());
}

TEST(GaussPoly, LeibnizMatchesDirectDerivative)
{
    auto g = gauss();
    auto f = x_gauss();
    auto lx = leibniz_expand(g, f, {1});
    // (1 - 4x^2) e^{-2x^2}
    EXPECT_EQ(lx.value, gp_univariate({Real(1), Real(0), Real(-4)}, Real(2)));
    EXPECT_EQ(lx.value, gp_diff(gp_mul(g, f), {1}));
    EXPECT_EQ(leibniz_expand(g, f, {0}).value, gp_mul(g, f));

    Rng rng(11);
    GaussPolyOptions opt;
    opt.max_degree = 6;
    opt.max_terms = 3;
    for (int i = 0; i < 30; ++i) {
        auto a = random_gauss_poly(rng, opt);
        auto b = random_gauss_poly(rng, opt);
        MultiIndex beta{static_cast<unsigned>(rng.uniform_int(0, 4))};
        auto e = leibniz_expand(a, b, beta);
        EXPECT_EQ(e.value, gp_diff(gp_mul(a, b), beta));
        EXPECT_LE(e.raw_terms, (beta[0] + 1) * a.terms().size() * b.terms().size());
    }
}

TEST(GaussPoly, ProductAgreesPointwise)
{
    Rng rng(5);
    GaussPolyOptions opt;
    opt.max_degree = 5;
    for (int i = 0; i < 20; ++i) {
        auto f = random_gauss_poly(rng, opt);
        auto g = random_gauss_poly(rng, opt);
        auto fg = gp_mul(f, g);
        for (int j = 0; j < 10; ++j) {
            long double x = rng.uniform(-3, 3);
            auto lhs = gp_eval(fg, {x});
            auto rhs = gp_eval(f, {x}) * gp_eval(g, {x});
            EXPECT_NEAR(static_cast<double>(std::abs(lhs - rhs)), 0.0, 1e-12);
        }
    }
}

TEST(GaussPoly, Eval)
{
    EXPECT_DOUBLE_EQ(static_cast<double>(gp_eval(gauss(), {0}).real()), 1.0);
    EXPECT_NEAR(static_cast<double>(gp_eval(x_gauss(), {1}).real()), 0.367879441171442, 1e-15);
    EXPECT_EQ(gp_eval(GaussPolyFn(1), {2.5}), std::complex<long double>(0));
    EXPECT_THROW(gp_eval(gauss(), {1, 2}), std::invalid_argument);
}

TEST(Sup, ClosedFormsAndGridOracle)
{
    EXPECT_NEAR(gp_sup_abs(gauss()), 1.0, 1e-12);
    const double expected = 1 / std::sqrt(2 * M_E);
    EXPECT_NEAR(gp_sup_abs(x_gauss()), expected, 1e-12);
    EXPECT_NEAR(grid_sup(x_gauss(), 5, 400000), expected, 1e-9);
    EXPECT_EQ(gp_sup_abs(GaussPolyFn(1)), 0.0);
    // sup |2x e^{-x^2}| = sqrt(2/e)
    EXPECT_NEAR(gp_sup_abs(gp_diff(gauss(), {1})), std::sqrt(2 / M_E), 1e-12);
}

TEST(Sup, CertifiedReportIsTight)
{
    auto r = gp_sup_abs_report(x_gauss());
    EXPECT_TRUE(r.certified);
    EXPECT_LE(r.tolerance, 1e-11);
}

TEST(Sup, DominatesRandomSamples)
{
    Rng rng(3);
    GaussPolyOptions opt;
    opt.max_degree = 6;
    opt.max_terms = 3;
    for (int i = 0; i < 20; ++i) {
        auto f = random_gauss_poly(rng, opt);
        auto r = gp_sup_abs_report(f);
        const double grid = grid_sup(f, 12, 20000);
        EXPECT_GE(r.value + r.tolerance + 1e-15, grid);
        EXPECT_LE(r.value, grid + 1e-6 * std::max(1.0, grid));
        for (int j = 0; j < 500; ++j) {
            long double x = rng.uniform(-6, 6);
            EXPECT_LE(static_cast<double>(std::abs(gp_eval(f, {x}))), r.value + r.tolerance + 1e-15);
        }
    }
}

TEST(Sup, SignedSupremum)
{
    // -x e^{-x^2} has sup 1/sqrt(2e); -e^{-x^2} has sup 0 (approached at infinity).
    EXPECT_NEAR(gp_sup_real_report(gp_neg(x_gauss())).value, 1 / std::sqrt(2 * M_E), 1e-12);
    EXPECT_NEAR(gp_sup_real_report(gp_neg(gauss())).value, 0.0, 1e-15);
}

TEST(Sup, TwoDimensionalApproximation)
{
    // x1 e^{-x1^2 - x2^2}: sup is 1/sqrt(2e) at (1/sqrt2, 0).
    SparsePoly p(2);
    p.add_term({1, 0}, Complex(1));
    auto f = gp_make(p, {Real(1), Real(1)});
    auto r = gp_sup_abs_report(f);
    EXPECT_FALSE(r.certified);
    EXPECT_NEAR(r.value, 1 / std::sqrt(2 * M_E), 1e-8);
}

TEST(Fourier, GaussianMatchesQuadrature)
{
    auto F = gp_fourier(gauss());
    EXPECT_FALSE(F.is_exact());
    // F(0) = sqrt(pi)
    EXPECT_NEAR(static_cast<double>(gp_eval(F, {0}).real()), 1.772453850905516, 1e-15);
    for (double xi : {0.0, 0.1, 0.37, 0.8}) {
        auto q = quad_fourier(gauss(), xi);
        auto v = gp_eval(F, {xi});
        EXPECT_NEAR(static_cast<double>(v.real()), q.real(), 1e-12);
        EXPECT_NEAR(static_cast<double>(v.imag()), q.imag(), 1e-12);
    }
}

TEST(Fourier, PolynomialTermsMatchQuadrature)
{
    auto f = gp_univariate({Real(1), Real(-2), Real(mpq_class(1, 2)), Real(3)}, Real(mpq_class(3, 2)));
    auto F = gp_fourier(f);
    for (double xi : {-0.6, -0.2, 0.15, 0.45}) {
        auto q = quad_fourier(f, xi);
        auto v = gp_eval(F, {xi});
        EXPECT_NEAR(static_cast<double>(v.real()), q.real(), 1e-11);
        EXPECT_NEAR(static_cast<double>(v.imag()), q.imag(), 1e-11);
    }
}

TEST(Fourier, RoundTrip)
{
    auto f = gp_univariate({Real(1), Real(0), Real(1)}, Real(1));
    EXPECT_LE(gp_max_coef_diff(gp_inv_fourier(gp_fourier(f)), f), 1e-12L);
    EXPECT_TRUE(gp_fourier(GaussPolyFn(1)).is_zero());
    Rng rng(19);
    GaussPolyOptions opt;
    opt.max_degree = 8;
    opt.max_terms = 3;
    for (int i = 0; i < 20; ++i) {
        auto g = random_gauss_poly(rng, opt);
        EXPECT_LE(gp_max_coef_diff(gp_inv_fourier(gp_fourier(g)), g), 1e-12L);
    }
}

TEST(Fourier, HigherDimensionIsAFeatureGap)
{
    EXPECT_THROW(gp_fourier(gp_gaussian(2, Real(1))), FeatureGap);
}
