#include "fsem/order.hpp"

#include "fsem/sup.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsem {

namespace {

void require(bool ok, const std::string& msg)
{
    if (!ok) {
        throw std::invalid_argument(msg);
    }
}

bool fn_nonneg(const GaussPolyFn& f)
{
    if (f.is_zero()) {
        return true;
    }
    if (!gp_imag_part(f).is_zero()) {
        return false;
    }
    return gp_sup_real_report(gp_neg(gp_real_part(f))).value <= kConeSlack;
}

bool seq_nonneg(const SeqElement& x)
{
    return x.tail() >= 0 && std::all_of(x.prefix().begin(), x.prefix().end(), [](const mpq_class& t) { return t >= 0; });
}

/// Fold the claimed relation into "T(a) <= T(b)" for the two kinds.
bool extremum_ok(const Cone& K, ExtremumKind kind, const Element& at_point, const Element& at_other)
{
    const OrderRelation rel{K};
    return kind == ExtremumKind::max ? order_leq(rel, at_other, at_point) : order_leq(rel, at_point, at_other);
}

}  // namespace

Cone nonneg_cone(const Space& X)
{
    return {X, X.is_sequence() ? ConeKind::entrywise_nonneg : ConeKind::pointwise_nonneg};
}

bool cone_contains(const Cone& c, const Element& x)
{
    require_member(c.space, x, "cone_contains");
    if (c.kind == ConeKind::entrywise_nonneg) {
        return seq_nonneg(std::get<SeqElement>(x));
    }
    return fn_nonneg(std::get<GaussPolyFn>(x));
}

bool order_leq(const OrderRelation& rel, const Element& x, const Element& y)
{
    return cone_contains(rel.cone, el_sub(y, x));
}

bool order_lt(const OrderRelation& rel, const Element& x, const Element& y)
{
    return !el_equal(x, y) && order_leq(rel, x, y);
}

CreditReport is_credit_point(const OperatorDescriptor& od, const Element& xbar, const std::vector<Element>& directions,
                             const IndexSet& J, double tol)
{
    SeminormFamily cod(od.codomain);
    CreditReport rep;
    for (const auto& v : directions) {
        require(!el_is_zero(v), "is_credit_point: directions must be nonzero");
        const Element d = analytic_gateaux(od, xbar, v);
        const double val = family_max(cod, d, J);
        ++rep.directions;
        if (val > rep.max_value) {
            rep.max_value = val;
        }
        if (val > tol && rep.credit) {
            rep.credit = false;
            rep.violating_direction = v;
            rep.derivative = d;
        }
    }
    return rep;
}

const char* extremum_kind_name(ExtremumKind kind)
{
    return kind == ExtremumKind::max ? "max" : "min";
}

std::vector<Real> default_extremum_t()
{
    std::vector<Real> out;
    for (long d : {1L, 2L, 10L, 100L}) {
        out.emplace_back(mpq_class(1, d));
        out.emplace_back(mpq_class(-1, d));
    }
    return out;
}

ExtremumReport check_directional_extremum(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                                          const std::vector<Real>& t_samples, ExtremumKind kind)
{
    require(!el_is_zero(v), "check_directional_extremum: the direction must be nonzero");
    const Cone K = nonneg_cone(od.codomain);
    const Element Tx = op_apply(od, xbar);
    ExtremumReport rep;
    rep.kind = kind;
    for (const Real& t : t_samples) {
        const Element x = el_add(xbar, el_scale(v, t));
        ++rep.samples;
        if (!extremum_ok(K, kind, Tx, op_apply(od, x))) {
            rep.holds = false;
            rep.violating_t = t;
            rep.violating_point = x;
            rep.detail = std::string("no directional ") + extremum_kind_name(kind) + " at t = " + t.to_string();
            return rep;
        }
    }
    rep.detail = std::string("directional ") + extremum_kind_name(kind) + " on " + std::to_string(rep.samples) +
                 " values of t";
    return rep;
}

ExtremumReport check_absolute_extremum(const OperatorDescriptor& od, const Element& xbar,
                                       const std::vector<Element>& samples, ExtremumKind kind)
{
    const Cone K = nonneg_cone(od.codomain);
    const Element Tx = op_apply(od, xbar);
    ExtremumReport rep;
    rep.kind = kind;
    for (const auto& x : samples) {
        ++rep.samples;
        if (!extremum_ok(K, kind, Tx, op_apply(od, x))) {
            rep.holds = false;
            rep.violating_point = x;
            rep.detail = std::string("no absolute ") + extremum_kind_name(kind) + " at x = " + el_to_string(x);
            return rep;
        }
    }
    rep.detail = std::string("absolute ") + extremum_kind_name(kind) + " on " + std::to_string(rep.samples) + " samples";
    return rep;
}

IncreasingReport check_order_increasing(const OperatorDescriptor& od,
                                        const std::vector<std::pair<Element, Element>>& pairs)
{
    const OrderRelation dom{nonneg_cone(od.domain)};
    const OrderRelation cod{nonneg_cone(od.codomain)};
    IncreasingReport rep;
    for (const auto& [x, y] : pairs) {
        require(order_leq(dom, x, y), "check_order_increasing: input pair is not ordered");
        ++rep.pairs;
        if (rep.holds && !order_leq(cod, op_apply(od, x), op_apply(od, y))) {
            rep.holds = false;
            rep.violating_pair = std::make_pair(x, y);
        }
    }
    return rep;
}

Element random_cone_element(const Space& X, Rng& rng)
{
    if (!X.is_sequence()) {
        const GaussPolyFn f = random_gauss_poly(rng, GaussPolyOptions{X.dim()});
        return gp_mul(f, f);
    }
    const SeqElement s = random_seq(rng, SeqOptions{}, X.kind() == SpaceKind::s);
    std::vector<mpq_class> p;
    for (const auto& t : s.prefix()) {
        p.push_back(abs(t));
    }
    return SeqElement(std::move(p), abs(s.tail()));
}

std::vector<OrderCaseResult> credit_necessity_suite(const std::vector<OrderCase>& cases, Rng& rng)
{
    std::vector<OrderCaseResult> out;
    for (const auto& c : cases) {
        require(!c.directions.empty(), "credit_necessity_suite: case " + c.name + " has no directions");
        OrderCaseResult r{c.name, c.claim};
        r.credit = is_credit_point(c.op, c.point, c.directions, c.J).credit;
        r.max_along_all = true;
        r.min_along_all = true;
        for (const auto& v : c.directions) {
            auto mx = check_directional_extremum(c.op, c.point, v, default_extremum_t(), ExtremumKind::max);
            auto mn = check_directional_extremum(c.op, c.point, v, default_extremum_t(), ExtremumKind::min);
            if (!mx.holds && r.max_along_all) {
                r.max_along_all = false;
                r.witness_t_max = mx.violating_t;
            }
            if (!mn.holds && r.min_along_all) {
                r.min_along_all = false;
                r.witness_t_min = mn.violating_t;
            }
        }
        r.necessity = !(r.max_along_all || r.min_along_all) || r.credit;
        r.non_converse = r.credit && !r.max_along_all && !r.min_along_all;
        if (c.claim == "max" || c.claim == "min") {
            const ExtremumKind kind = c.claim == "max" ? ExtremumKind::max : ExtremumKind::min;
            std::vector<Element> xs;
            for (std::size_t i = 0; i < c.budget; ++i) {
                xs.push_back(random_element(c.op.domain, rng));
            }
            auto abs_rep = check_absolute_extremum(c.op, c.point, xs, kind);
            r.absolute = abs_rep.holds;
            const bool along = kind == ExtremumKind::max ? r.max_along_all : r.min_along_all;
            r.passed = along && r.absolute && r.credit;
            r.detail = abs_rep.detail;
        } else if (c.claim == "credit") {
            r.passed = r.credit;
            r.detail = r.non_converse ? "credit point, neither maximum nor minimum" : "credit point check";
        } else if (c.claim == "increasing") {
            std::vector<std::pair<Element, Element>> pairs;
            for (std::size_t i = 0; i < c.budget; ++i) {
                const Element x = random_cone_element(c.op.domain, rng);
                pairs.emplace_back(x, el_add(x, random_cone_element(c.op.domain, rng)));
            }
            r.increasing = check_order_increasing(c.op, pairs).holds;
            const Cone K = nonneg_cone(c.op.codomain);
            r.derivative_in_cone = true;
            for (std::size_t i = 0; i < c.budget; ++i) {
                const Element v = random_cone_element(c.op.domain, rng);
                if (!cone_contains(K, analytic_gateaux(c.op, c.point, v))) {
                    r.derivative_in_cone = false;
                    r.detail = "derivative leaves the cone along " + el_to_string(v);
                    break;
                }
            }
            r.passed = r.increasing && r.derivative_in_cone;
            if (r.detail.empty()) {
                r.detail = std::to_string(c.budget) + " ordered pairs and cone directions";
            }
        } else {
            throw std::invalid_argument("credit_necessity_suite: unknown claim '" + c.claim + "'");
        }
        r.passed = r.passed && r.necessity;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace fsem
