#include "fsem/seminorm.hpp"

#include "fsem/sup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fsem {

SeminormFamily SeminormFamily::rescaled(std::function<double(const SeminormId&)> c) const
{
    SeminormFamily out(space_);
    auto inner = scale_;
    out.scale_ = [inner, c](const SeminormId& id) {
        const double s = c(id);
        if (!(s > 0)) {
            throw std::invalid_argument("SeminormFamily::rescaled: scale factors must be positive");
        }
        return inner ? inner(id) * s : s;
    };
    return out;
}

double SeminormFamily::eval(const SeminormId& id, const Element& x) const
{
    const double v = seminorm_eval(space_, id, x);
    return scale_ ? scale_(id) * v : v;
}

FSeminorm SeminormFamily::member(const SeminormId& id) const
{
    SeminormFamily self = *this;
    return {space_.tag() + " " + id.to_string(), [self, id](const Element& x) { return self.eval(id, x); }};
}

double SeminormFamily::weight(const SeminormId& id) const
{
    return std::ldexp(1.0, -static_cast<int>(seminorm_position(space_, id)));
}

IndexSet::IndexSet(std::vector<SeminormId> ids) : ids_(std::move(ids))
{
    if (ids_.empty()) {
        throw std::invalid_argument("IndexSet: an index set must be nonempty");
    }
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    const bool schwartz = ids_.front().is_schwartz();
    for (const auto& id : ids_) {
        if (id.is_schwartz() != schwartz) {
            throw std::invalid_argument("IndexSet: indices from different families");
        }
    }
}

IndexSet IndexSet::prefix(std::size_t M)
{
    std::vector<SeminormId> ids;
    for (std::size_t k = 1; k <= M; ++k) {
        ids.push_back(SeminormId::seq(static_cast<unsigned>(k)));
    }
    return IndexSet(std::move(ids));
}

IndexSet IndexSet::schwartz_below(const MultiIndex& alpha, const MultiIndex& beta)
{
    std::vector<SeminormId> ids;
    for (const auto& s : mi_below(alpha)) {
        for (const auto& g : mi_below(beta)) {
            ids.push_back(SeminormId::schwartz(s, g));
        }
    }
    return IndexSet(std::move(ids));
}

bool IndexSet::contains(const SeminormId& id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool IndexSet::subset_of(const IndexSet& other) const
{
    return std::all_of(ids_.begin(), ids_.end(), [&](const SeminormId& id) { return other.contains(id); });
}

unsigned IndexSet::max_k() const
{
    unsigned m = 0;
    for (const auto& id : ids_) {
        m = std::max(m, id.k);
    }
    return m;
}

SeminormId IndexSet::schwartz_join() const
{
    if (!ids_.front().is_schwartz()) {
        throw std::invalid_argument("IndexSet::schwartz_join: not a Schwartz index set");
    }
    SeminormId j = ids_.front();
    for (const auto& id : ids_) {
        j.alpha = mi_join(j.alpha, id.alpha);
        j.beta = mi_join(j.beta, id.beta);
    }
    return j;
}

std::string IndexSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        s += (i ? ", " : "") + ids_[i].to_string();
    }
    return s + "}";
}

IndexSet index_union(const IndexSet& a, const IndexSet& b)
{
    std::vector<SeminormId> ids = a.ids_;
    ids.insert(ids.end(), b.ids_.begin(), b.ids_.end());
    return IndexSet(std::move(ids));
}

Neighborhood::Neighborhood(Element c, IndexSet I, double r) : center(std::move(c)), index_set(std::move(I)), radius(r)
{
    if (!(radius > 0)) {
        throw std::invalid_argument("Neighborhood: radius must be positive");
    }
}

double family_max(const SeminormFamily& fam, const Element& x, const IndexSet& I)
{
    require_member(fam.space(), x, "family_max argument");
    double m = 0;
    if (fam.space().kind() != SpaceKind::schwartz) {
        for (const auto& id : I.members()) {
            m = std::max(m, fam.eval(id, x));
        }
        return m;
    }
    // Share D^beta f between indices with the same beta.
    const auto& f = std::get<GaussPolyFn>(x);
    std::map<MultiIndex, GaussPolyFn> derivs;
    for (const auto& id : I.members()) {
        if (!id.is_schwartz() || id.alpha.dim() != f.dim() || id.beta.dim() != f.dim()) {
            throw std::invalid_argument("family_max: index " + id.to_string() + " does not resolve in " +
                                        fam.space().tag());
        }
        auto it = derivs.find(id.beta);
        if (it == derivs.end()) {
            it = derivs.emplace(id.beta, gp_diff(f, id.beta)).first;
        }
        m = std::max(m, fam.scale(id) * gp_sup_abs(gp_monomial_mul(it->second, id.alpha)));
    }
    return m;
}

bool nbhd_contains(const SeminormFamily& fam, const Neighborhood& nb, const Element& x)
{
    return family_max(fam, el_sub(x, nb.center), nb.index_set) < nb.radius;
}

FNormValue f_norm(const SeminormFamily& fam, const Element& x)
{
    const Space& X = fam.space();
    require_member(X, x, "f_norm argument");
    FNormValue out;
    if (X.kind() == SpaceKind::schwartz) {
        for (const auto& id : fam.enumerate(kSchwartzFNormTerms)) {
            const double p = fam.eval(id, x);
            out.value += fam.weight(id) * p / (1 + p);
        }
        out.tail_bound = std::ldexp(1.0, -static_cast<int>(kSchwartzFNormTerms));
        return out;
    }
    if (fam.is_rescaled()) {
        throw std::invalid_argument("f_norm: the closed-form tail needs the unscaled sequence family");
    }
    const auto& s = std::get<SeqElement>(x);
    if (X.kind() == SpaceKind::s) {
        // The members are already bounded by 1; the F-norm of this space is
        // sum 2^{-n} ||x||_n, i.e. the metric to the origin.
        out.value = s_fnorm(s);
        return out;
    }
    for (std::size_t k = 1; k <= s.length(); ++k) {
        const double p = fam.eval(SeminormId::seq(static_cast<unsigned>(k)), x);
        out.value += std::ldexp(1.0, -static_cast<int>(k)) * p / (1 + p);
    }
    return out;
}

bool AxiomReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

const CheckReport& AxiomReport::get(const std::string& check) const
{
    for (const auto& c : checks) {
        if (c.check == check) {
            return c;
        }
    }
    throw std::out_of_range("AxiomReport::get: no check named " + check);
}

std::vector<Real> dyadic_schedule(std::size_t N)
{
    std::vector<Real> out;
    mpq_class a = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        a /= 2;
        out.emplace_back(a);
    }
    return out;
}

std::vector<Real> default_schedule(const Space& X)
{
    std::size_t N = 40;
    if (X.kind() == SpaceKind::sigma_rho) {
        N = static_cast<std::size_t>(std::ceil(40.0 / X.rho()));
    }
    return dyadic_schedule(N);
}

namespace {

class Recorder {
public:
    Recorder(std::string name, double tol)
    {
        r_.check = std::move(name);
        r_.tolerance = tol;
    }

    void sample() { ++r_.samples; }

    void fail(const Element& x, const std::string& detail)
    {
        if (r_.passed) {
            r_.passed = false;
            r_.counterexample = x;
            r_.detail = detail;
        }
    }

    CheckReport take(std::string pass_detail = {})
    {
        if (r_.passed && r_.detail.empty()) {
            r_.detail = std::move(pass_detail);
        }
        return std::move(r_);
    }

private:
    CheckReport r_;
};

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

Real random_scalar(Rng& rng, long bound_num, long den)
{
    return Real(mpq_class(rng.uniform_int(-bound_num, bound_num), den));
}

}  // namespace

AxiomReport axiom_report(const FSeminorm& p, const Sampler& sampler, Rng& rng, const AxiomOptions& opt)
{
    AxiomReport rep;
    rep.seminorm = p.name;
    const double tol = opt.rel_tolerance;
    auto le = [&](double a, double b) { return a <= b + tol * std::max(std::fabs(a), std::fabs(b)); };

    Recorder r1("(i) nonnegativity", 0);
    Recorder r2("(ii) subadditivity", tol);
    Recorder r3("(iii) contraction for |a| <= 1", tol);
    Recorder r4("(iv) p(a_n x) -> 0", opt.final_tolerance);
    Recorder r5("(v) p(theta) = 0", 0);
    Recorder r6("(vi) p(-x) = p(x)", tol);
    Recorder r7("(vii) integer scaling", tol);
    Recorder r8("(viii) monotone in |a|", tol);
    Recorder r9("(ix) kernel is scale invariant", 0);

    std::vector<Element> xs;
    xs.reserve(opt.samples);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        xs.push_back(sampler(rng));
    }
    if (xs.empty()) {
        rep.checks = {r1.take(), r2.take(), r3.take(), r4.take(), r5.take(), r6.take(), r7.take(), r8.take(), r9.take()};
        return rep;
    }
    std::vector<double> px(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        px[i] = p.eval(xs[i]);
    }

    const Element theta = el_sub(xs[0], xs[0]);
    r5.sample();
    if (const double v = p.eval(theta); v != 0) {
        r5.fail(theta, "p(theta) = " + fmt(v));
    }

    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Element& x = xs[i];
        const double v = px[i];

        r1.sample();
        if (!(v >= 0) || !std::isfinite(v)) {
            r1.fail(x, "p(x) = " + fmt(v));
        }

        const std::size_t j = (i + 1) % xs.size();
        r2.sample();
        if (const double s = p.eval(el_add(x, xs[j])); !le(s, v + px[j])) {
            r2.fail(x, "p(x + y) = " + fmt(s) + " > p(x) + p(y) = " + fmt(v + px[j]) + " with y = " +
                           el_to_string(xs[j]));
        }

        const Real a = random_scalar(rng, 16, 16);
        r3.sample();
        if (const double s = p.eval(el_scale(x, a)); !le(s, v)) {
            r3.fail(x, "a = " + a.to_string() + ": p(ax) = " + fmt(s) + " > p(x) = " + fmt(v));
        }

        r6.sample();
        if (const double s = p.eval(el_neg(x)); !le(s, v) || !le(v, s)) {
            r6.fail(x, "p(-x) = " + fmt(s) + " differs from p(x) = " + fmt(v));
        }

        const long n = rng.uniform_int(2, 5);
        r7.sample();
        const double pn = p.eval(el_scale(x, Real(n)));
        const double pd = p.eval(el_scale(x, Real(mpq_class(1, n))));
        if (!le(pn, static_cast<double>(n) * v)) {
            r7.fail(x, "n = " + std::to_string(n) + ": p(nx) = " + fmt(pn) + " > n p(x)");
        } else if (!le(pd, v) || !le(v / static_cast<double>(n), pd)) {
            r7.fail(x, "n = " + std::to_string(n) + ": p(x/n) = " + fmt(pd) + " outside [p(x)/n, p(x)]");
        }

        Real b = random_scalar(rng, 32, 8);
        Real c = random_scalar(rng, 32, 8);
        if (c.abs() < b.abs()) {
            std::swap(b, c);
        }
        r8.sample();
        const double pb = p.eval(el_scale(x, b));
        const double pc = p.eval(el_scale(x, c));
        if (!le(pb, pc)) {
            r8.fail(x, "|" + b.to_string() + "| <= |" + c.to_string() + "| but p(ax) = " + fmt(pb) + " > p(bx) = " +
                           fmt(pc));
        }

        if (v == 0) {
            for (const Real& s : {Real(mpq_class(-7, 3)), Real(5), Real(1000)}) {
                r9.sample();
                if (const double w = p.eval(el_scale(x, s)); w != 0) {
                    r9.fail(x, "p(x) = 0 but p(" + s.to_string() + " x) = " + fmt(w));
                }
            }
        }

        if (opt.schedule_stride > 0 && i % opt.schedule_stride == opt.schedule_offset && !opt.schedule.empty()) {
            r4.sample();
            double prev = 0;
            for (std::size_t k = 0; k < opt.schedule.size(); ++k) {
                const double w = p.eval(el_scale(x, opt.schedule[k]));
                if (k + 1 > opt.monotone_from && !le(w, prev)) {
                    r4.fail(x, "not nonincreasing at n = " + std::to_string(k + 1) + ": " + fmt(w) + " > " + fmt(prev));
                    break;
                }
                prev = w;
                if (k + 1 == opt.schedule.size() && !(w < opt.final_tolerance * std::max(1.0, v))) {
                    r4.fail(x, "final value " + fmt(w) + " at a_n = " + opt.schedule[k].to_string() +
                                   " is not below " + fmt(opt.final_tolerance) + " max(1, p(x))");
                }
            }
        }
    }
    rep.checks = {r1.take(), r2.take(), r3.take(), r4.take(), r5.take(), r6.take(), r7.take(), r8.take(), r9.take()};
    return rep;
}

std::vector<CheckReport> nbhd_algebra_check(const SeminormFamily& fam, const std::vector<Element>& samples,
                                            const IndexSet& I, const IndexSet& K, double lambda)
{
    if (!(lambda > 0)) {
        throw std::invalid_argument("nbhd_algebra_check: lambda must be positive");
    }
    Recorder r3("(iii) U_{I,l/2} inside U_{I,l}", 0);
    Recorder r4("(iv) U_{I u K,l} inside U_{K,l}", 0);
    Recorder r5("(v) U_{I u K,l} = U_{I,l} n U_{K,l}", 0);
    Recorder r6("(vi) U_{I,l/2} + U_{I,l/2} inside U_{I,l}", 0);
    const IndexSet IK = index_union(I, K);

    // Shrink each sample by powers of 2 until it lies in U_{I,l/2}; both the
    // raw and the shrunken sample are tested so that membership varies.
    std::vector<Element> inner;
    for (const auto& x : samples) {
        Element y = x;
        for (int j = 0; j < 400 && family_max(fam, y, I) >= lambda / 2; ++j) {
            y = el_scale(y, Real(mpq_class(1, 2)));
        }
        inner.push_back(y);
        for (const Element* z : std::initializer_list<const Element*>{&x, &y}) {
            const double mi = family_max(fam, *z, I);
            const double mk = family_max(fam, *z, K);
            const double mik = family_max(fam, *z, IK);
            r3.sample();
            if (mi < lambda / 2 && !(mi < lambda)) {
                r3.fail(*z, "in U_{I,l/2} but not in U_{I,l}");
            }
            r4.sample();
            if (mik < lambda && !(mk < lambda)) {
                r4.fail(*z, "in U_{I u K,l} but not in U_{K,l}");
            }
            r5.sample();
            if ((mik < lambda) != (mi < lambda && mk < lambda)) {
                r5.fail(*z, "membership in U_{I u K,l} differs from the intersection");
            }
        }
    }
    for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
        if (!(family_max(fam, inner[i], I) < lambda / 2) || !(family_max(fam, inner[i + 1], I) < lambda / 2)) {
            continue;
        }
        r6.sample();
        const Element s = el_add(inner[i], inner[i + 1]);
        if (const double m = family_max(fam, s, I); !(m < lambda)) {
            r6.fail(inner[i], "sum has family max " + fmt(m) + " >= l = " + fmt(lambda));
        }
    }
    return {r3.take(), r4.take(), r5.take(), r6.take()};
}

std::optional<std::pair<SeminormId, double>> separating_witness(const SeminormFamily& fam, const Element& x)
{
    std::vector<SeminormId> ids;
    if (fam.space().is_sequence()) {
        ids = fam.enumerate(std::get<SeqElement>(x).length() + 1);
    } else {
        ids = fam.enumerate(64);
    }
    for (const auto& id : ids) {
        if (const double v = fam.eval(id, x); v > 0) {
            return std::make_pair(id, v);
        }
    }
    return std::nullopt;
}

CheckReport separating_check(const SeminormFamily& fam, const std::vector<Element>& samples)
{
    Recorder r("separating", 0);
    for (const auto& x : samples) {
        if (el_is_zero(x)) {
            continue;
        }
        r.sample();
        if (!separating_witness(fam, x)) {
            r.fail(x, "no seminorm of the family is positive at this nonzero element");
        }
    }
    return r.take();
}

}  // namespace fsem
