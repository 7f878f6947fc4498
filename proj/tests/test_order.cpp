// Unit tests for cones, the induced orders, credit points, ordered extrema
// and order-increasing checks.

#include "fsem/order.hpp"

#include <gtest/gtest.h>

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

const Space kSigma = Space::sigma_rho(0.5);
const Space kS = Space::s();
const Space kSch = Space::schwartz(1);

}  // namespace

TEST(Cone, Membership)
{
    const Cone KS = nonneg_cone(kSch);
    EXPECT_TRUE(cone_contains(KS, gauss()));
    EXPECT_FALSE(cone_contains(KS, gp_univariate({Real(0), Real(1)}, Real(1))));
    EXPECT_TRUE(cone_contains(KS, GaussPolyFn(1)));
    EXPECT_FALSE(cone_contains(KS, gp_scale(gauss(), Complex(Real(0), Real(1)))));
    // x^2 e^{-x^2} touches zero at the origin only.
    EXPECT_TRUE(cone_contains(KS, gp_univariate({Real(0), Real(0), Real(1)}, Real(1))));

    const Cone Kseq = nonneg_cone(kS);
    EXPECT_TRUE(cone_contains(Kseq, seq({}, 1)));
    EXPECT_TRUE(cone_contains(Kseq, seq({1}, 1)));
    EXPECT_FALSE(cone_contains(Kseq, seq({1}, -1)));
    EXPECT_FALSE(cone_contains(nonneg_cone(kSigma), seq({1, -2})));
}

TEST(Cone, AxiomsOnSamples)
{
    Rng rng(5);
    for (const Space& X : {kSigma, kS, kSch}) {
        const Cone K = nonneg_cone(X);
        EXPECT_TRUE(cone_contains(K, zero_element(X)));
        for (int i = 0; i < (X.is_sequence() ? 200 : 20); ++i) {
            const Element u = random_cone_element(X, rng);
            const Element v = random_cone_element(X, rng);
            EXPECT_TRUE(cone_contains(K, u));
            EXPECT_TRUE(cone_contains(K, el_add(u, v)));
            EXPECT_TRUE(cone_contains(K, el_scale(u, Real(mpq_class(3, 7)))));
            EXPECT_FALSE(cone_contains(K, el_neg(u))) << el_to_string(u);
        }
    }
}

TEST(Order, Examples)
{
    const OrderRelation rel{nonneg_cone(kSigma)};
    EXPECT_TRUE(order_leq(rel, seq({1, 2}), seq({2, 2})));
    const Element x = seq({3, -1});
    EXPECT_TRUE(order_leq(rel, x, x));
    EXPECT_FALSE(order_lt(rel, x, x));
    EXPECT_FALSE(order_leq(rel, seq({2}), seq({1})));
    EXPECT_TRUE(order_lt(rel, seq({1}), seq({2})));
}

TEST(Order, PartialOrderOnSamples)
{
    Rng rng(7);
    const OrderRelation rel{nonneg_cone(kS)};
    for (int i = 0; i < 200; ++i) {
        const Element x = random_element(kS, rng);
        const Element y = el_add(x, random_cone_element(kS, rng));
        const Element z = el_add(y, random_cone_element(kS, rng));
        EXPECT_TRUE(order_leq(rel, x, x));
        EXPECT_TRUE(order_leq(rel, x, y));
        EXPECT_TRUE(order_leq(rel, x, z));
        EXPECT_FALSE(order_leq(rel, y, x));
    }
}

TEST(Credit, Examples)
{
    auto R3 = op_power(kS, 3);
    auto rep = is_credit_point(R3, SeqElement(), {seq({}, 1), seq({1, -2})}, IndexSet::prefix(3));
    EXPECT_TRUE(rep.credit);
    EXPECT_EQ(rep.directions, 2U);

    auto P2 = op_power(kSch, 2);
    EXPECT_TRUE(is_credit_point(P2, GaussPolyFn(1), {Element(gauss())}, IndexSet::schwartz_below({1}, {1})).credit);

    auto Q2 = op_power(kSigma, 2);
    auto q = is_credit_point(Q2, seq({1}), {seq({1})}, IndexSet::prefix(1));
    EXPECT_FALSE(q.credit);
    ASSERT_TRUE(q.violating_direction.has_value());
    EXPECT_TRUE(el_equal(*q.derivative, seq({2})));
    EXPECT_THROW(is_credit_point(Q2, seq({1}), {SeqElement()}, IndexSet::prefix(1)), std::invalid_argument);
}

TEST(Extremum, Directional)
{
    auto P2 = op_power(kSch, 2);
    EXPECT_TRUE(check_directional_extremum(P2, GaussPolyFn(1), gauss(), default_extremum_t(), ExtremumKind::min).holds);

    auto P3 = op_power(kSch, 3);
    auto mx = check_directional_extremum(P3, GaussPolyFn(1), gauss(), default_extremum_t(), ExtremumKind::max);
    auto mn = check_directional_extremum(P3, GaussPolyFn(1), gauss(), default_extremum_t(), ExtremumKind::min);
    EXPECT_FALSE(mx.holds);
    EXPECT_FALSE(mn.holds);
    EXPECT_EQ(*mx.violating_t, Real(1));
    EXPECT_EQ(*mn.violating_t, Real(-1));

    auto R3 = op_power(kS, 3);
    auto rx = check_directional_extremum(R3, SeqElement(), seq({}, 1), default_extremum_t(), ExtremumKind::max);
    auto rn = check_directional_extremum(R3, SeqElement(), seq({}, 1), default_extremum_t(), ExtremumKind::min);
    EXPECT_EQ(*rx.violating_t, Real(1));
    EXPECT_EQ(*rn.violating_t, Real(-1));
}

TEST(Extremum, Absolute)
{
    Rng rng(11);
    std::vector<Element> fs;
    std::vector<Element> ss;
    for (int i = 0; i < 200; ++i) {
        fs.push_back(random_element(kSch, rng));
        ss.push_back(random_element(kS, rng));
    }
    EXPECT_TRUE(check_absolute_extremum(op_power(kSch, 2), GaussPolyFn(1), fs, ExtremumKind::min).holds);
    EXPECT_TRUE(check_absolute_extremum(op_power(kS, 2), SeqElement(), ss, ExtremumKind::min).holds);

    auto Q2 = op_power(kSigma, 2);
    const Element half = SeqElement({mpq_class(1, 2)});
    auto rep = check_absolute_extremum(Q2, seq({1}), {half}, ExtremumKind::min);
    EXPECT_FALSE(rep.holds);
    EXPECT_TRUE(el_equal(*rep.violating_point, half));
    EXPECT_TRUE(check_absolute_extremum(Q2, seq({1}), {half}, ExtremumKind::max).holds);
}

TEST(Increasing, Examples)
{
    auto Q2 = op_power(kSigma, 2);
    EXPECT_TRUE(check_order_increasing(Q2, {{seq({1}), seq({2})}}).holds);
    auto bad = check_order_increasing(Q2, {{seq({-2}), seq({1})}});
    EXPECT_FALSE(bad.holds);
    ASSERT_TRUE(bad.violating_pair.has_value());
    EXPECT_THROW(check_order_increasing(Q2, {{seq({2}), seq({1})}}), std::invalid_argument);

    Rng rng(13);
    auto id = op_identity(kS);
    std::vector<std::pair<Element, Element>> pairs;
    for (int i = 0; i < 50; ++i) {
        const Element x = random_element(kS, rng);
        pairs.emplace_back(x, el_add(x, random_cone_element(kS, rng)));
    }
    EXPECT_TRUE(check_order_increasing(id, pairs).holds);
}

TEST(Suite, CreditNecessity)
{
    Rng rng(17);
    std::vector<OrderCase> cases{
        {"P2 min at 0", op_power(kSch, 2), GaussPolyFn(1), "min", {Element(gauss())},
         IndexSet::schwartz_below({1}, {1}), 50},
        {"P3 credit at 0", op_power(kSch, 3), GaussPolyFn(1), "credit", {Element(gauss())},
         IndexSet::schwartz_below({1}, {1}), 50},
        {"R3 credit at 0", op_power(kS, 3), SeqElement(), "credit", {seq({}, 1)}, IndexSet::prefix(3), 50},
        {"Q2 increasing", op_power(kSigma, 2), seq({1}), "increasing", {seq({1, 1})}, IndexSet::prefix(2), 100},
        {"Q2 min at 1", op_power(kSigma, 2), seq({1}), "min", {seq({1})}, IndexSet::prefix(1), 50},
    };
    auto res = credit_necessity_suite(cases, rng);
    ASSERT_EQ(res.size(), 5U);
    EXPECT_TRUE(res[0].passed) << res[0].detail;
    EXPECT_TRUE(res[0].credit);
    EXPECT_TRUE(res[0].min_along_all);

    EXPECT_TRUE(res[1].passed);
    EXPECT_TRUE(res[1].non_converse);
    EXPECT_EQ(*res[1].witness_t_max, Real(1));
    EXPECT_EQ(*res[1].witness_t_min, Real(-1));

    EXPECT_TRUE(res[2].passed);
    EXPECT_TRUE(res[2].non_converse);

    EXPECT_TRUE(res[3].passed) << res[3].detail;
    EXPECT_TRUE(res[3].increasing);
    EXPECT_TRUE(res[3].derivative_in_cone);

    EXPECT_FALSE(res[4].passed);
    EXPECT_FALSE(res[4].min_along_all);
    EXPECT_TRUE(res[4].necessity);
    for (const auto& r : res) {
        EXPECT_TRUE(r.necessity) << r.name;
    }
}
