// Unit tests for the concrete spaces: sequence arithmetic, the three
// seminorm families, the metrics and the inclusion and scaling checks.

#include "fsem/random.hpp"
#include "fsem/spaces.hpp"

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

// Dense-grid maximum of |x^a D^b f| on [-L, L], computed from the
// closed-form pointwise derivative rather than from the sup routine.
double grid_sup(const GaussPolyFn& g, double L = 8, int n = 400000)
{
    double best = 0;
    for (int i = 0; i <= n; ++i) {
        long double x = -L + 2 * L * i / n;
        best = std::max(best, static_cast<double>(std::abs(gp_eval(g, {x}))));
    }
    return best;
}

}  // namespace

TEST(SeqElement, CanonicalFormAndArithmetic)
{
    EXPECT_EQ(seq({4, 1, 0, 0}), seq({4, 1}));
    EXPECT_EQ(seq({3, 1, 1}, 1), seq({3}, 1));
    EXPECT_EQ(seq({3}, 1).at(5), 1);
    EXPECT_EQ(seq_add(seq({1, 2}), seq({0, 0, 5})), seq({1, 2, 5}));
    EXPECT_EQ(seq_sub(seq({3}, 1), seq({3}, 1)), SeqElement());
    EXPECT_EQ(seq_pow(seq({2}, 1), 3), seq({8}, 1));
    EXPECT_EQ(seq_scale(seq({4, 1}), mpq_class(1, 2)), SeqElement({mpq_class(2), mpq_class(1, 2)}));
    EXPECT_THROW(seq({1}).at(0), std::invalid_argument);
}

TEST(Space, Validation)
{
    EXPECT_THROW(Space::sigma_rho(1.0), std::invalid_argument);
    EXPECT_THROW(Space::sigma_rho(0.0), std::invalid_argument);
    EXPECT_NO_THROW(Space::sigma_rho(0.3));
    EXPECT_FALSE(is_member(Space::sigma_rho(0.5), Element(seq({1}, 1))));
    EXPECT_TRUE(is_member(Space::s(), Element(seq({1}, 1))));
    EXPECT_FALSE(is_member(Space::schwartz(2), Element(gauss())));
}

TEST(SchwartzSeminorm, ExamplesWithGridOracle)
{
    EXPECT_NEAR(schwartz_seminorm(gauss(), {0}, {0}), 1.0, 1e-12);
    const double expected = std::sqrt(2 / M_E);
    EXPECT_NEAR(schwartz_seminorm(gauss(), {0}, {1}), expected, 1e-12);
    EXPECT_NEAR(grid_sup(gp_diff(gauss(), {1})), expected, 1e-9);
}

TEST(SchwartzSeminorm, DerivativeShiftsBeta)
{
    const auto f = x_gauss();
    const double lhs = schwartz_seminorm(gp_diff(f, {1}), {1}, {0});
    const double rhs = schwartz_seminorm(f, {1}, {1});
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, rhs));
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        auto g = random_gauss_poly(rng, GaussPolyOptions{});
        for (unsigned a = 0; a <= 2; ++a) {
            for (unsigned b = 0; b <= 2; ++b) {
                const double l = schwartz_seminorm(gp_diff(g, {1}), {a}, {b});
                const double r = schwartz_seminorm(g, {a}, {b + 1});
                EXPECT_NEAR(l, r, 1e-11 * std::max(1.0, r));
            }
        }
    }
}

TEST(SchwartzSeminorm, Homogeneous)
{
    Rng rng(29);
    for (int i = 0; i < 20; ++i) {
        auto g = random_gauss_poly(rng, GaussPolyOptions{});
        const double p = schwartz_seminorm(g, {1}, {2});
        const double q = schwartz_seminorm(gp_scale(g, Complex(Real(mpq_class(-5, 3)))), {1}, {2});
        EXPECT_NEAR(q, 5.0 / 3.0 * p, 1e-11 * std::max(1.0, p));
    }
}

TEST(SigmaRho, Examples)
{
    const auto x = seq({4, 1});
    EXPECT_DOUBLE_EQ(sigma_seminorm(x, 1, 0.5), 2.0);
    EXPECT_DOUBLE_EQ(sigma_metric(x, SeqElement(), 0.5), 3.0);
    EXPECT_EQ(p_sup(x), 4);
    EXPECT_EQ(p_sup_prefix(x, 1), 4);
    EXPECT_EQ(p_sup_prefix(seq({1, 7}), 1), 1);
    for (unsigned k = 1; k <= 5; ++k) {
        EXPECT_EQ(sigma_seminorm(SeqElement(), k, 0.5), 0.0);
    }
    EXPECT_THROW(sigma_seminorm(seq({1}, 1), 1, 0.5), std::invalid_argument);
}

TEST(SigmaRho, NotHomogeneous)
{
    const auto x = seq({3, 0, 5});
    for (double rho : {0.3, 0.5}) {
        const double p = sigma_seminorm(x, 1, rho);
        const double p2 = sigma_seminorm(seq_scale(x, 2), 1, rho);
        EXPECT_NEAR(p2, std::pow(2.0, rho) * p, 1e-14 * p2);
        EXPECT_LT(p2, 2 * p);
    }
}

TEST(SSpace, Examples)
{
    const auto x = seq({3}, 1);
    EXPECT_EQ(s_seminorm_exact(x, 1), mpq_class(3, 4));
    EXPECT_EQ(s_seminorm_exact(x, 5), mpq_class(1, 2));
    // 3/8 + sum_{n >= 2} 2^{-n} (1/2) = 3/8 + 1/4
    EXPECT_EQ(s_metric_exact(x, SeqElement()), mpq_class(5, 8));
    EXPECT_DOUBLE_EQ(s_fnorm(x), 0.625);
    EXPECT_EQ(s_metric(x, x), 0.0);
}

TEST(Metrics, TranslationInvariant)
{
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        auto x = random_seq(rng, SeqOptions{}, true);
        auto y = random_seq(rng, SeqOptions{}, true);
        auto z = random_seq(rng, SeqOptions{}, true);
        EXPECT_EQ(s_metric_exact(seq_add(x, z), seq_add(y, z)), s_metric_exact(x, y));
        auto a = random_seq(rng, SeqOptions{}, false);
        auto b = random_seq(rng, SeqOptions{}, false);
        auto c = random_seq(rng, SeqOptions{}, false);
        EXPECT_EQ(sigma_metric(seq_add(a, c), seq_add(b, c), 0.5), sigma_metric(a, b, 0.5));
    }
}

TEST(Enumeration, CanonicalOrder)
{
    auto ids = enumerate_seminorms(Space::schwartz(1), 6);
    ASSERT_EQ(ids.size(), 6U);
    EXPECT_EQ(ids[0], SeminormId::schwartz({0}, {0}));
    EXPECT_EQ(ids[1], SeminormId::schwartz({0}, {1}));
    EXPECT_EQ(ids[2], SeminormId::schwartz({1}, {0}));
    EXPECT_EQ(ids[3], SeminormId::schwartz({0}, {2}));
    EXPECT_EQ(seminorm_position(Space::schwartz(1), SeminormId::schwartz({1}, {1})), 5U);
    EXPECT_EQ(seminorm_position(Space::s(), SeminormId::seq(7)), 7U);
    EXPECT_EQ(enumerate_seminorms(Space::schwartz(2), 5).size(), 5U);
}

TEST(Inclusion, Examples)
{
    const auto small = SeqElement({mpq_class(1, 2), mpq_class(1, 4)});
    auto r = sigma_inclusion_check(small, 0.3, 0.7);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.termwise_holds);
    EXPECT_TRUE(sigma_inclusion_check(SeqElement(), 0.3, 0.7).passed);
    auto big = sigma_inclusion_check(seq({2}), 0.3, 0.7);
    EXPECT_TRUE(big.passed);
    EXPECT_FALSE(big.termwise_holds);
    EXPECT_FALSE(big.note.empty());
    EXPECT_THROW(sigma_inclusion_check(small, 0.7, 0.3), std::invalid_argument);
}

TEST(Scaling, Examples)
{
    const auto x = seq({1});
    EXPECT_TRUE(scaling_property_check(x, mpq_class(1, 2)).passed);
    EXPECT_TRUE(scaling_property_check(x, 2).passed);
    EXPECT_TRUE(scaling_property_check(x, 1).passed);
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        auto y = random_seq(rng, SeqOptions{}, true);
        EXPECT_TRUE(scaling_property_check(y, rng.small_rational(40, 8).rational()).passed);
    }
}
