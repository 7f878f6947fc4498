#pragma once

/**
 * @file order.hpp
 * @brief Cones, the partial orders they induce, ordered credit points,
 *        directional and absolute ordered extrema, and order-increasing checks.
 *
 * Cones:
 *   Schwartz space   K = {f : f real valued and f(x) >= 0 everywhere};
 *   sequence spaces  K = {t : t_n >= 0 for every n, tail included}.
 * x <= y means y - x in K; x < y adds x != y.
 *
 * Pointwise nonnegativity of a Gaussian polynomial is decided through the
 * sup machinery applied to -f, with slack kConeSlack. Complex-valued
 * functions are outside the cone. All extremum checks are sample based:
 * a confirmation means no violation within the sample budget.
 */

#include "fsem/operators.hpp"
#include "fsem/random.hpp"
#include "fsem/seminorm.hpp"
#include "fsem/spaces.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fsem {

inline constexpr double kConeSlack = 1e-12;

enum class ConeKind { pointwise_nonneg, entrywise_nonneg };

struct Cone {
    Space space;
    ConeKind kind;
};

/// The nonnegative cone of X.
Cone nonneg_cone(const Space& X);

bool cone_contains(const Cone& c, const Element& x);

struct OrderRelation {
    Cone cone;
};

bool order_leq(const OrderRelation& rel, const Element& x, const Element& y);
bool order_lt(const OrderRelation& rel, const Element& x, const Element& y);

struct CreditReport {
    bool credit = true;
    std::size_t directions = 0;
    double max_value = 0;  ///< largest seminorm of T'(x, v) over J and the directions
    std::optional<Element> violating_direction{};
    std::optional<Element> derivative{};  ///< T'(x, v) at the violating direction
};

/// x is a credit point when every q in J gives q(T'(x, v)) <= tol for every
/// supplied direction. Throws std::invalid_argument for a zero direction.
CreditReport is_credit_point(const OperatorDescriptor& od, const Element& xbar, const std::vector<Element>& directions,
                             const IndexSet& J, double tol = kConeSlack);

enum class ExtremumKind { max, min };

const char* extremum_kind_name(ExtremumKind kind);

struct ExtremumReport {
    ExtremumKind kind = ExtremumKind::min;
    bool holds = true;
    std::size_t samples = 0;
    std::optional<Real> violating_t{};
    std::optional<Element> violating_point{};
    std::string detail{};
};

/// t = +-1, +-1/2, +-1/10, +-1/100.
std::vector<Real> default_extremum_t();

/// For every sampled t: T(x + t v) <= T(x) (max) or T(x) <= T(x + t v) (min).
ExtremumReport check_directional_extremum(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                                          const std::vector<Real>& t_samples, ExtremumKind kind);

/// For every sample x: T(x) <= T(xbar) (max) or T(xbar) <= T(x) (min).
/// Incomparable pairs count as violations.
ExtremumReport check_absolute_extremum(const OperatorDescriptor& od, const Element& xbar,
                                       const std::vector<Element>& samples, ExtremumKind kind);

struct IncreasingReport {
    bool holds = true;
    std::size_t pairs = 0;
    std::optional<std::pair<Element, Element>> violating_pair{};
};

/// T(x) <= T(y) for every pair; throws std::invalid_argument when a pair is not x <= y.
IncreasingReport check_order_increasing(const OperatorDescriptor& od,
                                        const std::vector<std::pair<Element, Element>>& pairs);

/// A nonzero random element of the nonnegative cone of a sequence space, or
/// a squared random Gaussian polynomial on Schwartz space.
Element random_cone_element(const Space& X, Rng& rng);

/// One case of the credit-point suite.
struct OrderCase {
    std::string name;
    OperatorDescriptor op;
    Element point;
    std::string claim;  ///< "credit", "max", "min" or "increasing"
    std::vector<Element> directions;
    IndexSet J;
    std::size_t budget = 100;
};

struct OrderCaseResult {
    std::string name;
    std::string claim;
    bool credit = false;
    bool max_along_all = false;  ///< directional maximum confirmed along every direction
    bool min_along_all = false;  ///< directional minimum confirmed along every direction
    bool absolute = false;       ///< absolute extremum of the claimed kind on the budget
    bool increasing = false;
    bool derivative_in_cone = false;
    bool non_converse = false;   ///< credit point that is neither a maximum nor a minimum
    bool necessity = true;       ///< a confirmed extremum is a credit point
    bool passed = false;
    std::optional<Real> witness_t_max{};  ///< t refuting a maximum
    std::optional<Real> witness_t_min{};  ///< t refuting a minimum
    std::string detail{};
};

/// Runs each case. Every case records the credit property, the directional
/// extrema along its directions and whether necessity holds (a confirmed
/// extremum is a credit point). A max/min claim passes when the extremum is
/// confirmed along every direction and on `budget` random points, and the
/// point is a credit point. A credit claim passes when the credit property
/// holds; a credit point that is neither a maximum nor a minimum exhibits
/// the non-converse. An increasing claim passes when T keeps `budget`
/// ordered pairs drawn from the cone in order and T'(x, v) lies in the
/// codomain cone for `budget` cone directions v.
std::vector<OrderCaseResult> credit_necessity_suite(const std::vector<OrderCase>& cases, Rng& rng);

}  // namespace fsem
