#include "fsem/differentiation.hpp"

#include "fsem/gauss_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fsem {

namespace {

void require(bool ok, const std::string& msg)
{
    if (!ok) {
        throw std::invalid_argument(msg);
    }
}

const SeqElement& as_seq(const Element& x)
{
    return std::get<SeqElement>(x);
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

/// The exact reciprocal of a positive double.
Real reciprocal(double s)
{
    return Real(mpq_class(1) / to_exact(Real::from_double(s)));
}

/// The first M seminorms of X in canonical order (the prefix {1..M} on sequences).
IndexSet first_seminorms(const Space& X, std::size_t M)
{
    if (X.is_sequence()) {
        return IndexSet::prefix(M);
    }
    return IndexSet(enumerate_seminorms(X, M));
}

Element draw(const VerifyOptions& opt, const Space& X, Rng& rng)
{
    return opt.sampler ? opt.sampler(rng) : random_element(X, rng);
}

/// Sample level for the i-th draw: the two boundary levels, then log-uniform.
double sample_level(std::size_t i, double reach, Rng& rng)
{
    if (i % 10 == 0) {
        return reach * (1 - 1e-6);
    }
    if (i % 10 == 1) {
        return reach / 2;
    }
    return reach * std::pow(10.0, -6.0 * rng.uniform01());
}

/// Largest level a family can reach: seminorms of S stay below 1.
double reach_of(const SeminormFamily& fam, double delta)
{
    if (fam.space().kind() == SpaceKind::s && !fam.is_rescaled()) {
        return std::min(delta, 1.0);
    }
    return delta;
}

/// A direction u with 0 < max_I p(u) < delta near the requested level.
std::optional<std::pair<Element, double>> punctured_sample(const SeminormFamily& fam, const IndexSet& I,
                                                           double delta, double level, const VerifyOptions& opt,
                                                           Rng& rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Element dir = draw(opt, fam.space(), rng);
        auto u = scale_to_level(fam, dir, I, level);
        if (!u) {
            continue;
        }
        const double pm = family_max(fam, *u, I);
        if (pm > 0 && pm < delta) {
            return std::make_pair(std::move(*u), pm);
        }
    }
    return std::nullopt;
}

Element remainder(const OperatorDescriptor& od, const Element& xbar, const Element& Tx, const Element& u,
                  const LinearMap& L)
{
    return el_sub(el_sub(op_apply(od, el_add(xbar, u)), Tx), linmap_apply(L, u));
}

double ratio_at(const OperatorDescriptor& od, const Element& xbar, const Element& Tx, const Element& u,
                const LinearMap& L, double pmax, const IndexSet& J, const SeminormFamily& cod)
{
    return family_max(cod, el_scale(remainder(od, xbar, Tx, u, L), reciprocal(pmax)), J);
}

double quotient_residual(const OperatorDescriptor& od, const Element& xbar, const Element& Tx, const Element& v,
                         const Element& Lv, const Real& t, const IndexSet& J, const SeminormFamily& fam)
{
    require(!t.is_zero(), "gateaux_residual: t must be nonzero");
    const Element moved = op_apply(od, el_add(xbar, el_scale(v, t)));
    const Element diff = el_sub(el_sub(moved, Tx), el_scale(Lv, t));
    return family_max(fam, el_scale(diff, Real(1) / t), J);
}

struct DrBatch {
    std::vector<DrSample> stored;
    std::size_t count = 0;
    std::size_t failures = 0;
    double max = 0;
    double sum = 0;
    std::optional<Element> counterexample;
};

DrBatch run_dr_batch(const OperatorDescriptor& od, const Element& xbar, const LinearMap& L, const IndexSet& I,
                     const IndexSet& J, double epsilon, double delta, Rng& rng, const VerifyOptions& opt)
{
    SeminormFamily dom(od.domain);
    SeminormFamily cod(od.codomain);
    const Element Tx = op_apply(od, xbar);
    const double reach = reach_of(dom, delta);
    DrBatch b;
    for (std::size_t i = 0; i < opt.samples; ++i) {
        auto s = punctured_sample(dom, I, delta, sample_level(i, reach, rng), opt, rng);
        if (!s) {
            throw std::runtime_error("verify_frechet: the sampler produced no element of the punctured neighborhood");
        }
        const double r = ratio_at(od, xbar, Tx, s->first, L, s->second, J, cod);
        ++b.count;
        b.max = std::max(b.max, r);
        b.sum += r;
        if (!(r < epsilon)) {
            ++b.failures;
            if (!b.counterexample) {
                b.counterexample = s->first;
            }
        }
        if (b.stored.size() < kStoredSamples) {
            b.stored.push_back({s->first, s->second, r});
        }
    }
    return b;
}

struct ContBatch {
    std::vector<ContinuitySample> stored;
    std::size_t count = 0;
    std::size_t failures = 0;
    double max = 0;
    double sum = 0;
    std::optional<Element> counterexample;
};

ContBatch run_continuity_batch(const OperatorDescriptor& od, const Element& x0, const IndexSet& I,
                               const IndexSet& J, double epsilon, double delta, Rng& rng, const VerifyOptions& opt)
{
    SeminormFamily dom(od.domain);
    SeminormFamily cod(od.codomain);
    const Element T0 = op_apply(od, x0);
    const double reach = reach_of(dom, delta);
    ContBatch b;
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Element u = zero_element(od.domain);
        double pm = 0;
        if (i % 10 == 9) {
            u = kernel_sample(od.domain, I, rng);
        } else {
            auto s = punctured_sample(dom, I, delta, sample_level(i, reach, rng), opt, rng);
            if (!s) {
                throw std::runtime_error("continuity_verify: the sampler produced no element of the neighborhood");
            }
            u = std::move(s->first);
            pm = s->second;
        }
        const Element x = el_add(x0, u);
        const double v = family_max(cod, el_sub(op_apply(od, x), T0), J);
        ++b.count;
        b.max = std::max(b.max, v);
        b.sum += v;
        if (!(v < epsilon)) {
            ++b.failures;
            if (!b.counterexample) {
                b.counterexample = x;
            }
        }
        if (b.stored.size() < kStoredSamples) {
            b.stored.push_back({x, pm, v});
        }
    }
    return b;
}

bool is_power(const OperatorDescriptor& od)
{
    return (od.kind == OpKind::power || od.kind == OpKind::cross_power) && od.m >= 2;
}

/// Recipes that need epsilon < 1 run at min(epsilon, 1/2).
double capped(double epsilon)
{
    return epsilon < 1 ? epsilon : 0.5;
}

DeltaChoice make_choice(IndexSet I, double delta, std::string recipe, std::string source = "constructive")
{
    return {std::move(I), delta, std::move(recipe), std::move(source)};
}

/// [f] = max ||f^e||_p over e = 1..m and p in I.
double bracket_norm(const GaussPolyFn& f, unsigned m, const IndexSet& I)
{
    double out = 0;
    GaussPolyFn pw = f;
    for (unsigned e = 1; e <= m; ++e) {
        if (e > 1) {
            pw = gp_mul(pw, f);
        }
        for (const auto& p : I.members()) {
            out = std::max(out, schwartz_seminorm(pw, p.alpha, p.beta));
        }
    }
    return out;
}

std::optional<DeltaChoice> search_continuity_delta(const OperatorDescriptor& od, const Element& x0,
                                                   const IndexSet& J, double epsilon, Rng& rng,
                                                   const VerifyOptions& opt)
{
    const IndexSet I = default_index_set(od.domain, J);
    for (double delta = 1; delta >= kSearchFloor; delta /= 2) {
        if (run_continuity_batch(od, x0, I, J, epsilon, delta, rng, opt).failures == 0) {
            return make_choice(I, delta, "searched", "searched");
        }
    }
    return std::nullopt;
}

std::optional<DeltaChoice> resolve(DeltaSource source, const std::optional<DeltaChoice>& fixed,
                                   const std::function<std::optional<DeltaChoice>()>& constructive,
                                   const std::function<std::optional<DeltaChoice>()>& searched)
{
    switch (source) {
    case DeltaSource::fixed:
        require(fixed.has_value(), "a fixed delta source needs a fixed choice");
        return fixed;
    case DeltaSource::constructive:
        if (auto c = constructive()) {
            return c;
        }
        return searched();
    case DeltaSource::searched:
        return searched();
    }
    return std::nullopt;
}

/// Scale u until the F-norm of the result is just below target.
Element scale_to_fnorm(const SeminormFamily& fam, const Element& u, double target)
{
    auto g = [&](double a) { return f_norm(fam, el_scale(u, Real::from_double(a))).value; };
    double lo = 1;
    int guard = 0;
    while (g(lo) >= target && guard++ < 4000) {
        lo /= 2;
    }
    double hi = lo * 2;
    guard = 0;
    while (g(hi) < target && guard++ < 200) {
        lo = hi;
        hi *= 2;
    }
    if (g(hi) < target) {
        return el_scale(u, Real::from_double(hi));
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = std::sqrt(lo * hi);
        (g(mid) < target ? lo : hi) = mid;
    }
    return el_scale(u, Real::from_double(lo));
}

}  // namespace

std::vector<Real> default_t_schedule()
{
    std::vector<Real> out;
    mpq_class t(1);
    for (int k = 1; k <= 8; ++k) {
        t /= 10;
        out.emplace_back(t);
        out.emplace_back(mpq_class(-t));
    }
    return out;
}

IndexSet default_index_set(const Space& X, const IndexSet& J)
{
    if (X.is_sequence()) {
        return IndexSet::prefix(std::max<std::size_t>(1, J.max_k()));
    }
    const SeminormId top = J.schwartz_join();
    return IndexSet::schwartz_below(top.alpha, top.beta);
}

double gateaux_residual(const OperatorDescriptor& od, const Element& xbar, const Element& v, const LinearMap& L,
                        const Real& t, const IndexSet& J, const SeminormFamily& fam)
{
    require(!el_is_zero(v), "gateaux_residual: the direction must be nonzero");
    return quotient_residual(od, xbar, op_apply(od, xbar), v, linmap_apply(L, v), t, J, fam);
}

double gateaux_residual(const OperatorDescriptor& od, const Element& xbar, const Element& v, const LinearMap& L,
                        const Real& t, const IndexSet& J)
{
    return gateaux_residual(od, xbar, v, L, t, J, SeminormFamily(od.codomain));
}

GateauxWitness verify_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                              const LinearMap& L, const IndexSet& J, double epsilon,
                              const std::vector<Real>& schedule, const SeminormFamily& fam)
{
    require(epsilon > 0, "verify_gateaux: epsilon must be positive");
    require(!el_is_zero(v), "verify_gateaux: the direction must be nonzero");
    require(!schedule.empty(), "verify_gateaux: empty t schedule");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        require(!schedule[i].is_zero(), "verify_gateaux: the t schedule contains 0");
        require(i == 0 || schedule[i].abs() <= schedule[i - 1].abs(),
                "verify_gateaux: |t| must be nonincreasing along the schedule");
    }
    GateauxWitness w{J, epsilon};
    const Element Tx = op_apply(od, xbar);
    const Element Lv = linmap_apply(L, v);
    for (const Real& t : schedule) {
        w.schedule.push_back({t, quotient_residual(od, xbar, Tx, v, Lv, t, J, fam)});
    }
    std::size_t first = w.schedule.size();
    while (first > 0 && w.schedule[first - 1].residual < epsilon) {
        --first;
    }
    if (first == w.schedule.size()) {
        w.detail = "residual " + fmt(w.schedule.back().residual) + " at the smallest t is not below epsilon";
        return w;
    }
    w.delta = w.schedule[first].t.abs().to_double();
    w.monotone = true;
    for (int sign : {1, -1}) {
        double prev = -1;
        for (std::size_t i = first; i < w.schedule.size(); ++i) {
            if (w.schedule[i].t.sign() != sign) {
                continue;
            }
            const double r = w.schedule[i].residual;
            if (prev >= 0 && r > prev * (1 + 1e-9) + kExactnessTolerance) {
                w.monotone = false;
                w.detail = "residual rises at t = " + w.schedule[i].t.to_string();
            }
            prev = r;
        }
    }
    w.passed = w.monotone;
    if (w.passed) {
        w.detail = "residual below epsilon for |t| <= " + fmt(w.delta);
    }
    return w;
}

GateauxWitness verify_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                              const LinearMap& L, const IndexSet& J, double epsilon,
                              const std::vector<Real>& schedule)
{
    return verify_gateaux(od, xbar, v, L, J, epsilon, schedule, SeminormFamily(od.codomain));
}

GateauxEstimate estimate_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                                 const IndexSet& J, const std::vector<Real>& schedule)
{
    require(!el_is_zero(v), "estimate_gateaux: the direction must be nonzero");
    std::vector<Real> ts;
    for (const Real& t : schedule) {
        if (t.sign() > 0) {
            ts.push_back(t);
        }
    }
    require(!ts.empty(), "estimate_gateaux: the schedule has no positive t");
    std::sort(ts.begin(), ts.end(), [](const Real& a, const Real& b) { return a > b; });
    const Element Tx = op_apply(od, xbar);
    std::vector<Element> quotients;
    for (const Real& t : ts) {
        quotients.push_back(el_scale(el_sub(op_apply(od, el_add(xbar, el_scale(v, t))), Tx), Real(1) / t));
    }
    SeminormFamily fam(od.codomain);
    GateauxEstimate est{quotients.back(), ts.back()};
    est.converging = true;
    for (const auto& q : J.members()) {
        std::vector<double> gaps;
        for (std::size_t i = 0; i + 1 < quotients.size(); ++i) {
            gaps.push_back(fam.eval(q, el_sub(quotients[i], quotients[i + 1])));
            if (gaps.size() > 1 && gaps.back() > gaps[gaps.size() - 2] * (1 + 1e-9) + kExactnessTolerance) {
                est.converging = false;
            }
        }
        est.successive_gaps.emplace_back(q, std::move(gaps));
    }
    return est;
}

double remainder_max(const OperatorDescriptor& od, const Element& xbar, const Element& u, const LinearMap& L,
                     const IndexSet& J)
{
    return family_max(SeminormFamily(od.codomain), remainder(od, xbar, op_apply(od, xbar), u, L), J);
}

double dr_ratio(const OperatorDescriptor& od, const Element& xbar, const Element& u, const LinearMap& L,
                const IndexSet& I, const IndexSet& J)
{
    const double pm = family_max(SeminormFamily(od.domain), u, I);
    require(pm > 0, "dr_ratio: max_{p in I} p(u) = 0 belongs to the (DZ) branch");
    return ratio_at(od, xbar, op_apply(od, xbar), u, L, pm, J, SeminormFamily(od.codomain));
}

std::optional<DeltaChoice> delta_constructor(const OperatorDescriptor& od, const Element& xbar, const IndexSet& J,
                                             double epsilon)
{
    require(epsilon > 0, "delta_constructor: epsilon must be positive");
    require_member(od.domain, xbar, "delta_constructor");
    const IndexSet I = default_index_set(od.domain, J);
    if (op_is_linear(od)) {
        return make_choice(I, epsilon, "linear");
    }
    if (!is_power(od)) {
        return std::nullopt;
    }
    const unsigned m = od.m;
    const double eps = capped(epsilon);
    if (!od.domain.is_sequence()) {
        const GaussPolyFn& f = std::get<GaussPolyFn>(xbar);
        const double beta = J.schwartz_join().beta.order();
        if (f.is_zero()) {
            return make_choice(I, std::pow(epsilon / std::pow(2.0, m * beta), 1.0 / (m - 1)), "5.16");
        }
        const double denom = (m - 1) * factorial(m).get_d() * (bracket_norm(f, m, I) + 1) *
                             std::pow(2.0, (m + 1) * beta);
        return make_choice(I, eps / denom, "5.9");
    }
    const std::size_t M = I.max_k();
    const double PM = mpq_class(p_sup_prefix(as_seq(xbar), M)).get_d();
    if (od.kind == OpKind::cross_power) {
        return make_choice(I, eps / std::pow(1 + PM, m), "8.1");
    }
    if (od.domain.kind() == SpaceKind::sigma_rho) {
        return make_choice(I, eps / std::pow(PM + 1, m * od.domain.rho()), "6.4");
    }
    return make_choice(I, eps / (2 * std::pow(1 + PM, m)), "7.2");
}

std::optional<DeltaChoice> search_frechet_delta(const OperatorDescriptor& od, const Element& xbar,
                                                const LinearMap& L, const IndexSet& J, double epsilon, Rng& rng,
                                                const VerifyOptions& opt)
{
    const IndexSet I = default_index_set(od.domain, J);
    for (double delta = 1; delta >= kSearchFloor; delta /= 2) {
        if (run_dr_batch(od, xbar, L, I, J, epsilon, delta, rng, opt).failures == 0) {
            return make_choice(I, delta, "searched", "searched");
        }
    }
    return std::nullopt;
}

FrechetWitness verify_frechet(const OperatorDescriptor& od, const Element& xbar, const LinearMap& L,
                              const IndexSet& J, double epsilon, Rng& rng, const VerifyOptions& opt)
{
    require(epsilon > 0, "verify_frechet: epsilon must be positive");
    require(L.domain == od.domain && L.codomain == od.codomain, "verify_frechet: candidate acts between other spaces");
    auto choice = resolve(
        opt.source, opt.fixed, [&] { return delta_constructor(od, xbar, J, epsilon); },
        [&] { return search_frechet_delta(od, xbar, L, J, epsilon, rng, opt); });
    if (!choice) {
        FrechetWitness w{J, epsilon, make_choice(default_index_set(od.domain, J), 0, "searched", "searched")};
        w.detail = "no delta down to " + fmt(kSearchFloor) + " passed a sample batch";
        return w;
    }
    FrechetWitness w{J, epsilon, *choice};
    const IndexSet& I = w.choice.I;

    // (DZ): kernel directions give an exactly zero remainder.
    SeminormFamily cod(od.codomain);
    const Element Tx = op_apply(od, xbar);
    const std::size_t nz = od.domain.is_sequence() ? opt.kernel_samples : 1;
    for (std::size_t i = 0; i < nz; ++i) {
        const Element u = kernel_sample(od.domain, I, rng);
        const double r = family_max(cod, remainder(od, xbar, Tx, u, L), J);
        ++w.dz_count;
        w.dz_max = std::max(w.dz_max, r);
        if (r > kExactnessTolerance) {
            ++w.dz_failures;
            if (!w.counterexample) {
                w.counterexample = u;
            }
        }
        if (w.dz_samples.size() < kStoredSamples) {
            w.dz_samples.push_back({u, r});
        }
    }

    // (DR): sampled ratios on the punctured neighborhood.
    DrBatch b = run_dr_batch(od, xbar, L, I, J, epsilon, w.choice.delta, rng, opt);
    w.dr_samples = std::move(b.stored);
    w.dr_count = b.count;
    w.dr_failures = b.failures;
    w.dr_max = b.max;
    w.dr_mean = b.count ? b.sum / static_cast<double>(b.count) : 0;
    if (!w.counterexample && b.counterexample) {
        w.counterexample = b.counterexample;
    }
    w.passed = w.dz_failures == 0 && w.dr_failures == 0;
    w.detail = "recipe " + w.choice.recipe + ", delta " + fmt(w.choice.delta) + ", DZ " +
               std::to_string(w.dz_count - w.dz_failures) + "/" + std::to_string(w.dz_count) + ", DR " +
               std::to_string(w.dr_count - w.dr_failures) + "/" + std::to_string(w.dr_count) + ", max ratio " +
               fmt(w.dr_max);
    return w;
}

std::optional<DeltaChoice> continuity_delta(const OperatorDescriptor& od, const Element& x0, const IndexSet& J,
                                            double epsilon)
{
    require(epsilon > 0, "continuity_delta: epsilon must be positive");
    require_member(od.domain, x0, "continuity_delta");
    if (op_is_linear(od)) {
        try {
            const LinearContinuity lc = linmap_continuity(linmap_operator(od), J, epsilon);
            return make_choice(lc.I, lc.delta, "linear-bound");
        } catch (const FeatureGap&) {
            return std::nullopt;
        }
    }
    if (od.kind != OpKind::power || !od.domain.is_sequence()) {
        return std::nullopt;
    }
    const unsigned m = od.m;
    const IndexSet I = default_index_set(od.domain, J);
    const SeqElement& x = as_seq(x0);
    if (od.domain.kind() == SpaceKind::sigma_rho) {
        const double P = mpq_class(p_sup(x)).get_d();
        return make_choice(I, epsilon / (m * std::pow(P + 1, m - 1) * (epsilon + 1)), "6.3");
    }
    const double PM = mpq_class(p_sup_prefix(x, I.max_k())).get_d();
    return make_choice(I, epsilon / (std::pow(1 + 2 * PM, m) * (epsilon + 1)), "7.1");
}

ContinuityWitness continuity_verify(const OperatorDescriptor& od, const Element& x0, const IndexSet& J,
                                    double epsilon, Rng& rng, const VerifyOptions& opt)
{
    require(epsilon > 0, "continuity_verify: epsilon must be positive");
    auto choice = resolve(
        opt.source, opt.fixed, [&] { return continuity_delta(od, x0, J, epsilon); },
        [&] { return search_continuity_delta(od, x0, J, epsilon, rng, opt); });
    if (!choice) {
        ContinuityWitness w{J, epsilon, make_choice(default_index_set(od.domain, J), 0, "searched", "searched")};
        w.detail = "no delta down to " + fmt(kSearchFloor) + " passed a sample batch";
        return w;
    }
    ContinuityWitness w{J, epsilon, *choice};
    ContBatch b = run_continuity_batch(od, x0, w.choice.I, J, epsilon, w.choice.delta, rng, opt);
    w.samples = std::move(b.stored);
    w.count = b.count;
    w.failures = b.failures;
    w.max_value = b.max;
    w.mean_value = b.count ? b.sum / static_cast<double>(b.count) : 0;
    w.counterexample = b.counterexample;
    w.passed = b.failures == 0;
    w.detail = "recipe " + w.choice.recipe + ", delta " + fmt(w.choice.delta) + ", " +
               std::to_string(w.count - w.failures) + "/" + std::to_string(w.count) + " samples, max " +
               fmt(w.max_value);
    return w;
}

std::size_t fnorm_tail_cutoff(double epsilon)
{
    require(epsilon > 0, "fnorm_tail_cutoff: epsilon must be positive");
    require(epsilon < 2, "fnorm_tail_cutoff: epsilon >= 2B leaves no seminorm to control");
    std::size_t M = 1;
    while (!(std::ldexp(1.0, -static_cast<int>(M)) < epsilon / 2)) {
        ++M;
    }
    return M;
}

double fnorm_forward_delta(double a, double delta1)
{
    return a * delta1 / (1 + delta1);
}

double fnorm_backward_epsilon(double b, double epsilon)
{
    return b * epsilon / (1 + epsilon);
}

FNormForward fnorm_translate_forward(const OperatorDescriptor& od, const Element& x0, double epsilon, Rng& rng,
                                     const VerifyOptions& opt)
{
    const std::size_t M = fnorm_tail_cutoff(epsilon);
    const IndexSet J = first_seminorms(od.codomain, M);
    const double eps1 = epsilon / 2;
    auto inner = continuity_delta(od, x0, J, eps1);
    if (!inner) {
        inner = search_continuity_delta(od, x0, J, eps1, rng, opt);
    }
    require(inner.has_value(), "fnorm_translate_forward: no continuity delta for the inner neighborhood");
    SeminormFamily dom(od.domain);
    double a = 1;
    for (const auto& p : inner->I.members()) {
        a = std::min(a, dom.weight(p));
    }
    return {M, 1.0, epsilon, eps1, J, *inner, a, fnorm_forward_delta(a, inner->delta)};
}

CheckReport fnorm_forward_check(const OperatorDescriptor& od, const Element& x0, const FNormForward& fwd, Rng& rng,
                                std::size_t samples)
{
    SeminormFamily dom(od.domain);
    SeminormFamily cod(od.codomain);
    const Element T0 = op_apply(od, x0);
    CheckReport rep;
    rep.check = "F-norm implication";
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Element u = scale_to_fnorm(dom, random_element(od.domain, rng), sample_level(i, fwd.delta, rng));
        if (!(f_norm(dom, u).value < fwd.delta)) {
            continue;
        }
        const Element x = el_add(x0, u);
        const double v = f_norm(cod, el_sub(op_apply(od, x), T0)).value;
        ++rep.samples;
        worst = std::max(worst, v);
        if (!(v < fwd.epsilon) && rep.passed) {
            rep.passed = false;
            rep.counterexample = x;
        }
    }
    rep.passed = rep.passed && rep.samples == samples;
    rep.detail = "delta " + fmt(fwd.delta) + ", " + std::to_string(rep.samples) + " samples, largest image F-norm " +
                 fmt(worst) + " against epsilon " + fmt(fwd.epsilon);
    return rep;
}

FNormBackward fnorm_translate_backward(const OperatorDescriptor& od, const Element& x0, const IndexSet& J,
                                       double epsilon, Rng& rng, const VerifyOptions& opt)
{
    require(epsilon > 0, "fnorm_translate_backward: epsilon must be positive");
    SeminormFamily cod(od.codomain);
    double b = 1;
    for (const auto& q : J.members()) {
        b = std::min(b, cod.weight(q));
    }
    const double eps1 = fnorm_backward_epsilon(b, epsilon);
    const double delta1 = fnorm_translate_forward(od, x0, eps1, rng, opt).delta;
    std::size_t N = 1;
    while (!(std::ldexp(1.0, -static_cast<int>(N)) < delta1 / 2)) {
        ++N;
    }
    const double A = 1;
    return {J, epsilon, b, eps1, delta1, N, A,
            make_choice(first_seminorms(od.domain, N), delta1 / (2 * A), "fnorm-backward")};
}

UniquenessReport uniqueness_probe(const LinearMap& L1, const LinearMap& L2, const IndexSet& J,
                                  const std::vector<Element>& directions)
{
    require(L1.domain == L2.domain && L1.codomain == L2.codomain, "uniqueness_probe: maps act between other spaces");
    SeminormFamily cod(L1.codomain);
    UniquenessReport rep;
    for (const auto& w : directions) {
        const Element d = el_sub(linmap_apply(L1, w), linmap_apply(L2, w));
        ++rep.directions;
        for (const auto& q : J.members()) {
            const double g = cod.eval(q, d);
            if (g > rep.max_gap) {
                rep.max_gap = g;
                rep.witness = w;
                rep.seminorm = q;
            }
        }
    }
    rep.coincide = rep.max_gap <= kExactnessTolerance;
    if (rep.coincide) {
        rep.witness.reset();
        rep.seminorm.reset();
    }
    return rep;
}

BasisIndependenceReport basis_independence_check(const OperatorDescriptor& od, const Element& xbar,
                                                 const Element& v, const LinearMap& L, const IndexSet& J,
                                                 double epsilon, const std::function<double(const SeminormId&)>& c,
                                                 const std::vector<Real>& schedule)
{
    for (const auto& q : J.members()) {
        const double s = c(q);
        require(s >= 1 && s <= 2, "basis_independence_check: rescaling factors must lie in [1, 2]");
    }
    SeminormFamily fam(od.codomain);
    BasisIndependenceReport rep{verify_gateaux(od, xbar, v, L, J, epsilon, schedule, fam),
                                verify_gateaux(od, xbar, v, L, J, epsilon, schedule, fam.rescaled(c))};
    rep.agree = rep.base.passed == rep.rescaled.passed;
    rep.passed = rep.base.passed && rep.rescaled.passed;
    return rep;
}

std::vector<ContinuityFromFrechet> frechet_implies_continuity_check(
    const OperatorDescriptor& od, const Element& xbar, const std::vector<std::pair<IndexSet, double>>& configs,
    Rng& rng, const VerifyOptions& opt)
{
    const LinearMap L = analytic_frechet(od, xbar);
    std::vector<ContinuityFromFrechet> out;
    for (const auto& [J, epsilon] : configs) {
        FrechetWitness fw = verify_frechet(od, xbar, L, J, epsilon / 2, rng, opt);
        LinearContinuity lc = linmap_continuity(L, J, epsilon / 2);
        const double d1 = std::min(fw.choice.delta, 0.5);
        const double d2 = std::min(lc.delta, 0.5);
        VerifyOptions copt = opt;
        copt.source = DeltaSource::fixed;
        copt.fixed = make_choice(index_union(fw.choice.I, lc.I), std::min(d1, d2), "frechet-split");
        ContinuityWitness cw = continuity_verify(od, xbar, J, epsilon, rng, copt);
        const bool ok = fw.passed && d1 > 0 && cw.passed;
        out.push_back({std::move(fw), std::move(lc), std::move(cw), ok});
    }
    return out;
}

std::optional<Element> scale_to_level(const SeminormFamily& fam, const Element& u, const IndexSet& I, double target)
{
    require(target > 0, "scale_to_level: target must be positive");
    const double pm = family_max(fam, u, I);
    if (pm == 0) {
        return std::nullopt;
    }
    const Space& X = fam.space();
    double a = 0;
    switch (X.kind()) {
    case SpaceKind::schwartz:
        a = target / pm;
        break;
    case SpaceKind::sigma_rho:
        a = std::pow(target / pm, 1 / X.rho());
        break;
    case SpaceKind::s: {
        // max_{k in I} c_k a|t_k| / (1 + a|t_k|) is increasing in a; bisect on log a.
        auto level = [&](double s) { return family_max(fam, el_scale(u, Real::from_double(s)), I); };
        double lo = 1;
        double hi = 1;
        int guard = 0;
        while (level(lo) >= target && guard++ < 2000) {
            lo /= 2;
        }
        guard = 0;
        while (level(hi) < target && guard++ < 2000) {
            hi *= 2;
        }
        if (level(hi) < target) {
            a = hi;
            break;
        }
        lo = std::min(lo, hi / 2);
        for (int i = 0; i < 60; ++i) {
            const double mid = std::sqrt(lo * hi);
            (level(mid) < target ? lo : hi) = mid;
        }
        a = lo;
        break;
    }
    }
    if (!(a > 0) || !std::isfinite(a)) {
        return std::nullopt;
    }
    return el_scale(u, Real::from_double(a));
}

Element kernel_sample(const Space& X, const IndexSet& I, Rng& rng)
{
    if (!X.is_sequence()) {
        return zero_element(X);
    }
    const SeqElement base = random_seq(rng, SeqOptions{}, X.kind() == SpaceKind::s);
    std::vector<mpq_class> prefix(I.max_k(), mpq_class(0));
    prefix.insert(prefix.end(), base.prefix().begin(), base.prefix().end());
    return SeqElement(std::move(prefix), base.tail());
}

}  // namespace fsem
