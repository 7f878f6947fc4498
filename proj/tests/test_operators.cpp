// Unit tests for the operator catalogue, the closed-form derivatives, linear
// map algebra and the explicit seminorm bounds.

#include "fsem/operators.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fsem;

namespace {

SeqElement seq(const std::vector<long>& p, long tail = 0)
{
    return SeqElement::from_ints(p, tail);
}

GaussPolyFn gauss()
{
    return gp_gaussian(1, Real(1));
}

GaussPolyFn x_gauss()
{
    return gp_univariate({Real(0), Real(1)}, Real(1));
}

const Space kSigma = Space::sigma_rho(0.5);
const Space kS = Space::s();
const Space kSch = Space::schwartz(1);

// Exact equality, or coefficient agreement for transforms whose
// coefficients carry floating constants.
bool el_close(const Element& x, const Element& y)
{
    if (el_equal(x, y)) {
        return true;
    }
    const auto* f = std::get_if<GaussPolyFn>(&x);
    const auto* g = std::get_if<GaussPolyFn>(&y);
    return f && g && !f->is_exact() && gp_max_coef_diff(*f, *g) < 1e-15L;
}

// Every catalogue operator with a base point in its domain.
std::vector<std::pair<OperatorDescriptor, Element>> catalogue()
{
    std::vector<std::pair<OperatorDescriptor, Element>> out;
    const GaussPolyFn fb = gp_univariate({Real(1), Real(1)}, Real(1));
    for (unsigned m = 1; m <= 4; ++m) {
        out.emplace_back(op_power(kSch, m), fb);
        out.emplace_back(op_power(kSch, m), GaussPolyFn(1));
        out.emplace_back(op_power(kSigma, m), seq({4, 1}));
        out.emplace_back(op_power(kS, m), seq({3}, 1));
        out.emplace_back(op_cross_power(0.5, m), seq({2}));
    }
    out.emplace_back(op_poly(kSch, {Real(2), Real(0), Real(-1)}), fb);
    out.emplace_back(op_poly(kSigma, {Real(1), Real(3)}), seq({4, 1}));
    out.emplace_back(op_poly(kS, {Real(mpq_class(1, 2)), Real(-1)}), seq({1, 2}, 3));
    out.emplace_back(op_diff(1, {2}), fb);
    out.emplace_back(op_mult(gauss()), fb);
    out.emplace_back(op_monomial({2}), fb);
    out.emplace_back(op_fourier(), fb);
    out.emplace_back(op_inv_fourier(), fb);
    out.emplace_back(op_scale(kSigma, Real(-3)), seq({1, 5}));
    out.emplace_back(op_identity(kS), seq({1}, 2));
    out.emplace_back(op_sum({Real(2), Real(-1)}, {op_power(kSigma, 2), op_power(kSigma, 3)}), seq({1, 2}));
    return out;
}

}  // namespace

TEST(OpApply, Examples)
{
    EXPECT_EQ(std::get<SeqElement>(op_apply(op_power(kSigma, 2), seq({4, 1}))), seq({16, 1}));
    EXPECT_EQ(std::get<GaussPolyFn>(op_apply(op_power(kSch, 2), gauss())), gp_gaussian(1, Real(2)));
    const Element lam = op_apply(op_cross_power(0.5, 3), seq({2}));
    EXPECT_EQ(std::get<SeqElement>(lam), seq({8}));
    EXPECT_TRUE(is_member(kS, lam));
    // the constant tail is raised entrywise too
    EXPECT_EQ(std::get<SeqElement>(op_apply(op_power(kS, 3), seq({}, 2))), seq({}, 8));
    EXPECT_EQ(std::get<SeqElement>(op_apply(op_poly(kS, {Real(1), Real(1)}), seq({2}, 1))), seq({6}, 2));
    EXPECT_THROW(op_apply(op_power(kSigma, 2), seq({1}, 1)), std::invalid_argument);
    EXPECT_THROW(op_apply(op_power(kSigma, 2), Element(gauss())), std::invalid_argument);
}

TEST(OpDescriptor, Validation)
{
    EXPECT_THROW(op_power(kS, 0), std::invalid_argument);
    EXPECT_THROW(op_poly(kS, {}), std::invalid_argument);
    EXPECT_THROW(op_diff(2, {1}), std::invalid_argument);
    EXPECT_THROW(op_sum({Real(1), Real(1)}, {op_power(kS, 2), op_power(kSigma, 2)}), std::invalid_argument);
    EXPECT_TRUE(op_is_linear(op_power(kS, 1)));
    EXPECT_FALSE(op_is_linear(op_power(kS, 2)));
    EXPECT_TRUE(op_is_linear(op_poly(kS, {Real(3), Real(0)})));
    EXPECT_EQ(op_power(kSigma, 2).name(), "Q^2");
    EXPECT_EQ(op_cross_power(0.5, 3).name(), "Lambda^3");
}

TEST(AnalyticFrechet, Examples)
{
    const LinearMap L = analytic_frechet(op_power(kSch, 2), gauss());
    EXPECT_EQ(L.form, LinearForm::multiply_by);
    EXPECT_EQ(L.g, gp_scale(gauss(), Complex(Real(2))));
    const auto image = std::get<GaussPolyFn>(linmap_apply(L, x_gauss()));
    EXPECT_EQ(image, gp_univariate({Real(0), Real(2)}, Real(2)));

    const LinearMap D = analytic_frechet(op_power(kSigma, 2), seq({4, 1}));
    EXPECT_EQ(D.form, LinearForm::diagonal);
    EXPECT_EQ(D.diag, seq({8, 2}));
    EXPECT_EQ(std::get<SeqElement>(linmap_apply(D, seq({1, 1}))), seq({8, 2}));

    const LinearMap F = analytic_frechet(op_fourier(), gauss());
    const GaussPolyFn u = x_gauss();
    EXPECT_EQ(std::get<GaussPolyFn>(linmap_apply(F, u)), gp_fourier(u));

    EXPECT_EQ(analytic_frechet(op_power(kSch, 3), GaussPolyFn(1)).form, LinearForm::zero);
    EXPECT_EQ(analytic_frechet(op_power(kSch, 1), GaussPolyFn(1)).form, LinearForm::identity_scaled);
}

TEST(AnalyticGateaux, Examples)
{
    EXPECT_EQ(std::get<SeqElement>(analytic_gateaux(op_power(kSigma, 3), seq({1}), seq({1}))), seq({3}));
    const GaussPolyFn u = x_gauss();
    EXPECT_EQ(std::get<GaussPolyFn>(analytic_gateaux(op_power(kSch, 1), gauss(), u)), u);
    EXPECT_TRUE(el_is_zero(analytic_gateaux(op_power(kS, 2), SeqElement(), seq({3, 1}, 2))));
    EXPECT_THROW(analytic_gateaux(op_power(kS, 2), SeqElement(), SeqElement()), std::invalid_argument);
}

TEST(LinearMapAlgebra, Examples)
{
    const LinearMap a = linmap_diagonal(kSigma, kSigma, seq({8, 2}));
    const LinearMap b = linmap_diagonal(kSigma, kSigma, seq({1, 1}));
    const LinearMap s = linmap_add(a, b);
    EXPECT_EQ(s.form, LinearForm::diagonal);
    EXPECT_EQ(s.diag, seq({9, 3}));

    const LinearMap m = linmap_scale(Real(2), linmap_multiply_by(gauss()));
    const GaussPolyFn u = x_gauss();
    EXPECT_EQ(std::get<GaussPolyFn>(linmap_apply(m, u)), gp_mul(gp_scale(gauss(), Complex(Real(2))), u));

    Rng rng(71);
    const LinearMap op = linmap_operator(op_diff(1, {1}));
    const LinearMap c = linmap_compose(linmap_identity_scaled(kSch, Real(1)), op);
    for (int i = 0; i < 20; ++i) {
        const Element w = random_element(kSch, rng);
        EXPECT_TRUE(el_equal(linmap_apply(c, w), linmap_apply(op, w)));
    }
    // forms that do not merge still apply
    const LinearMap mixed = linmap_add(op, linmap_multiply_by(gauss()));
    EXPECT_EQ(mixed.form, LinearForm::sum);
    const Element w = random_element(kSch, rng);
    EXPECT_TRUE(el_equal(linmap_apply(mixed, w),
                         el_add(linmap_apply(op, w), Element(gp_mul(gauss(), std::get<GaussPolyFn>(w))))));
    EXPECT_THROW(linmap_add(a, linmap_diagonal(kS, kS, seq({1}))), std::invalid_argument);
    const LinearMap comp = linmap_compose(op, linmap_operator(op_monomial({1})));
    EXPECT_EQ(comp.form, LinearForm::compose);
    EXPECT_EQ(std::get<GaussPolyFn>(linmap_apply(comp, gauss())), gp_diff(gp_monomial_mul(gauss(), {1}), {1}));
}

TEST(AnalyticFrechet, OutputsAreLinear)
{
    Rng rng(73);
    for (const auto& [od, xbar] : catalogue()) {
        const LinearMap L = analytic_frechet(od, xbar);
        const int pairs = od.domain.is_sequence() ? 500 : 25;
        for (int i = 0; i < pairs; ++i) {
            const Element u = random_element(od.domain, rng);
            const Element v = random_element(od.domain, rng);
            const Real a = rng.small_rational(20, 4);
            EXPECT_TRUE(el_close(linmap_apply(L, el_add(u, v)), el_add(linmap_apply(L, u), linmap_apply(L, v))))
                << od.name();
            EXPECT_TRUE(el_close(linmap_apply(L, el_scale(u, a)), el_scale(linmap_apply(L, u), a))) << od.name();
        }
    }
}

TEST(AnalyticFrechet, LinearInTheOperator)
{
    Rng rng(79);
    const Real a1(mpq_class(3, 2));
    const Real a2(-2);
    for (const auto& [od, xbar] : catalogue()) {
        const OperatorDescriptor other = op_power(od.domain, 2);
        if (!(other.codomain == od.codomain)) {
            continue;
        }
        const OperatorDescriptor sum = op_sum({a1, a2}, {od, other});
        const LinearMap lhs = analytic_frechet(sum, xbar);
        const LinearMap rhs = linmap_add(linmap_scale(a1, analytic_frechet(od, xbar)),
                                         linmap_scale(a2, analytic_frechet(other, xbar)));
        for (int i = 0; i < 10; ++i) {
            const Element u = random_element(od.domain, rng);
            EXPECT_TRUE(el_close(linmap_apply(lhs, u), linmap_apply(rhs, u))) << od.name();
        }
    }
}

TEST(AnalyticGateaux, CoincidesWithFrechet)
{
    Rng rng(83);
    for (const auto& [od, xbar] : catalogue()) {
        const LinearMap L = analytic_frechet(od, xbar);
        for (int i = 0; i < 10; ++i) {
            const Element v = random_element(od.domain, rng);
            EXPECT_TRUE(el_equal(analytic_gateaux(od, xbar, v), linmap_apply(L, v))) << od.name();
        }
    }
}

TEST(AnalyticFrechet, ExactOnPolynomialIdentity)
{
    // For Q^2 the remainder T(x + u) - T(x) - L u is exactly u^2.
    Rng rng(89);
    const OperatorDescriptor od = op_power(kS, 2);
    for (int i = 0; i < 100; ++i) {
        const Element x = random_element(kS, rng);
        const Element u = random_element(kS, rng);
        const Element r = el_sub(el_sub(op_apply(od, el_add(x, u)), op_apply(od, x)),
                                 linmap_apply(analytic_frechet(od, x), u));
        EXPECT_EQ(std::get<SeqElement>(r), seq_mul(std::get<SeqElement>(u), std::get<SeqElement>(u)));
    }
}

TEST(Bounds, Examples)
{
    const auto p = bound_power(gauss(), 2, {0}, {1});
    // d/dx e^{-2x^2} = -4x e^{-2x^2} peaks in modulus at x = 1/2
    EXPECT_NEAR(p.lhs, 2 * std::exp(-0.5), 1e-12);
    EXPECT_NEAR(p.lhs, 1.213061, 1e-6);
    EXPECT_NEAR(p.rhs, 4.0, 1e-12);
    EXPECT_TRUE(p.holds());

    const auto q = bound_monomial(gauss(), {1}, {0}, {0});
    EXPECT_NEAR(q.lhs, 1 / std::sqrt(2 * M_E), 1e-12);
    EXPECT_NEAR(q.lhs, 0.428882, 1e-6);
    EXPECT_NEAR(q.rhs, q.lhs, 1e-12);
    EXPECT_TRUE(q.holds());

    const auto z = bound_product(gauss(), GaussPolyFn(1), {1}, {2});
    EXPECT_EQ(z.lhs, 0.0);
    EXPECT_EQ(z.rhs, 0.0);
    const auto z2 = bound_power(GaussPolyFn(1), 3, {1}, {1});
    EXPECT_EQ(z2.lhs, 0.0);
    EXPECT_EQ(z2.rhs, 0.0);
}

TEST(Bounds, RandomInstances)
{
    Rng rng(97);
    GaussPolyOptions opt;
    opt.max_degree = 6;
    for (int i = 0; i < 40; ++i) {
        const GaussPolyFn f = random_gauss_poly(rng, opt);
        const GaussPolyFn g = random_gauss_poly(rng, opt);
        const MultiIndex alpha{static_cast<unsigned>(rng.uniform_int(0, 3))};
        const MultiIndex beta{static_cast<unsigned>(rng.uniform_int(0, 3))};
        const MultiIndex lambda{static_cast<unsigned>(rng.uniform_int(0, 4))};
        const auto m = static_cast<unsigned>(rng.uniform_int(1, 4));
        const auto a = bound_product(g, f, alpha, beta);
        const auto b = bound_monomial(f, lambda, alpha, beta);
        const auto c = bound_power(f, m, alpha, beta);
        EXPECT_TRUE(a.holds()) << a.lhs << " " << a.rhs;
        EXPECT_TRUE(b.holds()) << b.lhs << " " << b.rhs;
        EXPECT_TRUE(c.holds()) << c.lhs << " " << c.rhs;
    }
}

TEST(LinearBound, Examples)
{
    Rng rng(101);
    std::vector<Element> fs;
    for (int i = 0; i < 15; ++i) {
        fs.push_back(random_element(kSch, rng));
    }
    const IndexSet J({SeminormId::schwartz({0}, {0}), SeminormId::schwartz({1}, {1}), SeminormId::schwartz({2}, {0})});
    for (const auto& r : linear_bound_check(op_diff(1, {1}), J, fs)) {
        EXPECT_TRUE(r.passed) << r.detail;
    }
    const LinearBound d = linmap_bound(linmap_operator(op_diff(1, {1})), SeminormId::schwartz({1}, {1}));
    EXPECT_EQ(d.C, 1.0);
    ASSERT_EQ(d.family.size(), 1U);
    EXPECT_EQ(d.family[0], SeminormId::schwartz({1}, {2}));
    for (const auto& od : {op_mult(gauss()), op_monomial({2}), op_fourier(), op_inv_fourier()}) {
        for (const auto& r : linear_bound_check(od, J, fs)) {
            EXPECT_TRUE(r.passed) << od.name() << " " << r.detail;
        }
    }

    std::vector<Element> xs;
    for (int i = 0; i < 200; ++i) {
        xs.push_back(random_element(kSigma, rng));
    }
    const LinearBound ma = linmap_bound(linmap_operator(op_scale(kSigma, Real(9))), SeminormId::seq(2));
    EXPECT_DOUBLE_EQ(ma.C, 3.0);
    for (const auto& od : {op_scale(kSigma, Real(9)), op_identity(kSigma), op_cross_power(0.5, 1)}) {
        for (const auto& r : linear_bound_check(od, IndexSet::prefix(5), xs)) {
            EXPECT_TRUE(r.passed) << od.name() << " " << r.detail;
        }
    }
}

TEST(LinearContinuity, DeltaWorksOnSamples)
{
    Rng rng(103);
    const std::vector<std::pair<LinearMap, Space>> maps = {
        {linmap_diagonal(kSigma, kSigma, seq({8, 2})), kSigma},
        {linmap_diagonal(kS, kS, seq({5}, 3)), kS},
        {linmap_diagonal(kSigma, kS, seq({4})), kSigma},
        {linmap_multiply_by(gauss()), kSch},
        {linmap_add(linmap_operator(op_diff(1, {1})), linmap_multiply_by(gauss())), kSch},
    };
    for (const auto& [L, X] : maps) {
        const IndexSet J(enumerate_seminorms(L.codomain, 3));
        const LinearContinuity lc = linmap_continuity(L, J, 0.1);
        SeminormFamily dom(X);
        SeminormFamily cod(L.codomain);
        for (int i = 0; i < (X.is_sequence() ? 300 : 10); ++i) {
            Element u = random_element(X, rng);
            for (int j = 0; j < 200 && family_max(dom, u, lc.I) >= lc.delta; ++j) {
                u = el_scale(u, Real(mpq_class(1, 2)));
            }
            EXPECT_LT(family_max(cod, linmap_apply(L, u), J), 0.1) << L.to_string();
        }
    }
}
