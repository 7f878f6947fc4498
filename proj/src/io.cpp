#include "fsem/io.hpp"

#include <cmath>

namespace fsem {

namespace {

std::string at(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

const json& require_array(const json& j, const std::string& path)
{
    if (!j.is_array()) {
        throw ConfigError(path, "expected an array");
    }
    return j;
}

const json& require_object(const json& j, const std::string& path)
{
    if (!j.is_object()) {
        throw ConfigError(path, "expected an object");
    }
    return j;
}

std::string string_field(const json& obj, const std::string& key, const std::string& path)
{
    const json& v = require_field(obj, key, path);
    if (!v.is_string()) {
        throw ConfigError(at(path, key), "expected a string");
    }
    return v.get<std::string>();
}

unsigned unsigned_from_json(const json& j, const std::string& path)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ConfigError(path, "expected a nonnegative integer");
    }
    return j.get<unsigned>();
}

MultiIndex multi_index_from_json(const json& j, const std::string& path)
{
    require_array(j, path);
    std::vector<unsigned> e;
    for (std::size_t i = 0; i < j.size(); ++i) {
        e.push_back(unsigned_from_json(j[i], at(path, i)));
    }
    return MultiIndex(std::move(e));
}

json double_to_json(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json opt_element(const std::optional<Element>& x)
{
    return x ? element_to_json(*x) : json(nullptr);
}

json sample_count(std::size_t stored, std::size_t total)
{
    return {{"stored", stored}, {"total", total}};
}

/// Wraps a library argument error so that it names the config field.
template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    } catch (const FeatureGap& e) {
        throw ConfigError(path, e.what());
    }
}

}  // namespace

const json& require_field(const json& obj, const std::string& key, const std::string& path)
{
    require_object(obj, path.empty() ? "<root>" : path);
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError(at(path, key), "missing required field");
    }
    return *it;
}

double number_field(const json& obj, const std::string& key, const std::string& path)
{
    const json& v = require_field(obj, key, path);
    if (!v.is_number()) {
        throw ConfigError(at(path, key), "expected a number");
    }
    return v.get<double>();
}

std::size_t count_field(const json& obj, const std::string& key, const std::string& path, std::size_t fallback)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    return unsigned_from_json(*it, at(path, key));
}

// ---------------------------------------------------------------- scalars

json real_to_json(const Real& x)
{
    if (x.is_exact()) {
        return x.to_string();
    }
    return x.to_double();
}

Real real_from_json(const json& j, const std::string& path)
{
    try {
        if (j.is_string()) {
            return Real::parse(j.get<std::string>());
        }
        if (j.is_number_integer()) {
            return Real(mpq_class(j.dump()));
        }
        if (j.is_number_float()) {
            if (!std::isfinite(j.get<double>())) {
                throw ConfigError(path, "number must be finite");
            }
            return Real::parse(j.dump());
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    }
    throw ConfigError(path, "expected a number or a numeric string");
}

// --------------------------------------------------------------- elements

json gauss_to_json(const GaussPolyFn& f)
{
    json terms = json::array();
    for (const auto& t : f.terms()) {
        json decay = json::array();
        for (const auto& a : t.decay) {
            decay.push_back(real_to_json(a));
        }
        json poly = json::array();
        for (const auto& [e, c] : t.poly.terms()) {
            poly.push_back({{"exp", e.entries()}, {"re", real_to_json(c.re())}, {"im", real_to_json(c.im())}});
        }
        terms.push_back({{"decay", decay}, {"poly", poly}});
    }
    return {{"n", f.dim()}, {"terms", terms}};
}

GaussPolyFn gauss_from_json(const json& j, const std::string& path)
{
    require_object(j, path);
    if (j.contains("coeffs")) {
        const json& cs = require_array(j["coeffs"], at(path, "coeffs"));
        std::vector<Real> coeffs;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            coeffs.push_back(real_from_json(cs[i], at(at(path, "coeffs"), i)));
        }
        const Real a = real_from_json(require_field(j, "decay", path), at(path, "decay"));
        return guarded(path, [&] { return gp_univariate(coeffs, a); });
    }
    const std::size_t n = unsigned_from_json(require_field(j, "n", path), at(path, "n"));
    if (n == 0) {
        throw ConfigError(at(path, "n"), "dimension must be at least 1");
    }
    const std::string tpath = at(path, "terms");
    const json& ts = require_array(require_field(j, "terms", path), tpath);
    std::vector<GaussPolyTerm> terms;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string ti = at(tpath, i);
        const json& dj = require_array(require_field(ts[i], "decay", ti), at(ti, "decay"));
        GaussPolyTerm term{SparsePoly(n), {}};
        for (std::size_t d = 0; d < dj.size(); ++d) {
            term.decay.push_back(real_from_json(dj[d], at(at(ti, "decay"), d)));
        }
        const json& pj = require_array(require_field(ts[i], "poly", ti), at(ti, "poly"));
        for (std::size_t k = 0; k < pj.size(); ++k) {
            const std::string pk = at(at(ti, "poly"), k);
            MultiIndex e = multi_index_from_json(require_field(pj[k], "exp", pk), at(pk, "exp"));
            if (e.dim() != n) {
                throw ConfigError(at(pk, "exp"), "exponent has the wrong dimension");
            }
            const Real re = real_from_json(require_field(pj[k], "re", pk), at(pk, "re"));
            const Real im = pj[k].contains("im") ? real_from_json(pj[k]["im"], at(pk, "im")) : Real(0);
            term.poly.add_term(e, Complex(re, im));
        }
        terms.push_back(std::move(term));
    }
    return guarded(path, [&] { return GaussPolyFn(n, std::move(terms)); });
}

json seq_to_json(const SeqElement& x)
{
    json prefix = json::array();
    for (const auto& t : x.prefix()) {
        prefix.push_back(real_to_json(Real(t)));
    }
    return {{"prefix", prefix}, {"tail", real_to_json(Real(x.tail()))}};
}

SeqElement seq_from_json(const json& j, const std::string& path)
{
    const json* pj = &j;
    mpq_class tail = 0;
    std::string ppath = path;
    if (j.is_object()) {
        ppath = at(path, "prefix");
        pj = &require_field(j, "prefix", path);
        if (j.contains("tail")) {
            tail = to_exact(real_from_json(j["tail"], at(path, "tail")));
        }
    }
    require_array(*pj, ppath);
    std::vector<mpq_class> prefix;
    for (std::size_t i = 0; i < pj->size(); ++i) {
        prefix.push_back(to_exact(real_from_json((*pj)[i], at(ppath, i))));
    }
    return SeqElement(std::move(prefix), tail);
}

json element_to_json(const Element& x)
{
    if (const auto* f = std::get_if<GaussPolyFn>(&x)) {
        return gauss_to_json(*f);
    }
    return seq_to_json(std::get<SeqElement>(x));
}

Element element_from_json(const json& j, const Space& X, const std::string& path)
{
    Element x = X.is_sequence() ? Element(seq_from_json(j, path)) : Element(gauss_from_json(j, path));
    if (!is_member(X, x)) {
        throw ConfigError(path, "element is not in " + X.tag());
    }
    return x;
}

// ------------------------------------------------------------------ spaces

json space_to_json(const Space& X)
{
    switch (X.kind()) {
    case SpaceKind::schwartz:
        return {{"space", "schwartz"}, {"n", X.dim()}};
    case SpaceKind::sigma_rho:
        return {{"space", "sigma_rho"}, {"rho", X.rho()}};
    case SpaceKind::s:
        break;
    }
    return {{"space", "s"}};
}

Space space_from_json(const json& j, const std::string& path)
{
    const std::string kind = string_field(j, "space", path);
    if (kind == "schwartz") {
        const std::size_t n = count_field(j, "n", path, 1);
        if (n == 0) {
            throw ConfigError(at(path, "n"), "dimension must be at least 1");
        }
        return Space::schwartz(n);
    }
    if (kind == "sigma_rho") {
        const double rho = number_field(j, "rho", path);
        return guarded(at(path, "rho"), [&] { return Space::sigma_rho(rho); });
    }
    if (kind == "s") {
        return Space::s();
    }
    throw ConfigError(at(path, "space"), "unknown space '" + kind + "' (schwartz, sigma_rho or s)");
}

// --------------------------------------------------------------- operators

json operator_to_json(const OperatorDescriptor& od)
{
    json params = json::object();
    switch (od.kind) {
    case OpKind::diff:
        params["gamma"] = od.gamma.entries();
        break;
    case OpKind::mult:
        params["g"] = gauss_to_json(od.g);
        break;
    case OpKind::monomial:
        params["lambda"] = od.lambda.entries();
        break;
    case OpKind::scale:
        params["a"] = real_to_json(od.a);
        break;
    case OpKind::power:
    case OpKind::cross_power:
        params["m"] = od.m;
        break;
    case OpKind::poly: {
        json cs = json::array();
        for (const auto& c : od.coeffs) {
            cs.push_back(real_to_json(c));
        }
        params["coeffs"] = cs;
        break;
    }
    case OpKind::sum: {
        json ws = json::array();
        json ps = json::array();
        for (std::size_t i = 0; i < od.parts.size(); ++i) {
            ws.push_back(real_to_json(od.weights[i]));
            ps.push_back(operator_to_json(od.parts[i]));
        }
        params["weights"] = ws;
        params["parts"] = ps;
        break;
    }
    case OpKind::fourier:
    case OpKind::inv_fourier:
    case OpKind::identity:
        break;
    }
    return {{"kind", op_kind_name(od.kind)},
            {"params", params},
            {"domain", space_to_json(od.domain)},
            {"codomain", space_to_json(od.codomain)}};
}

OperatorDescriptor operator_from_json(const json& j, const std::string& path)
{
    const std::string kind = string_field(j, "kind", path);
    const std::string ppath = at(path, "params");
    const json params = j.contains("params") ? require_object(j["params"], ppath) : json::object();
    std::optional<Space> domain;
    if (j.contains("domain")) {
        domain = space_from_json(j["domain"], at(path, "domain"));
    }
    auto need_domain = [&]() -> const Space& {
        if (!domain) {
            throw ConfigError(at(path, "domain"), "missing required field for kind '" + kind + "'");
        }
        return *domain;
    };
    auto unsigned_param = [&](const std::string& key) {
        return unsigned_from_json(require_field(params, key, ppath), at(ppath, key));
    };

    OperatorDescriptor od = guarded(path, [&]() -> OperatorDescriptor {
        if (kind == "diff") {
            MultiIndex gamma = multi_index_from_json(require_field(params, "gamma", ppath), at(ppath, "gamma"));
            return op_diff(gamma.dim(), gamma);
        }
        if (kind == "mult") {
            return op_mult(gauss_from_json(require_field(params, "g", ppath), at(ppath, "g")));
        }
        if (kind == "monomial") {
            return op_monomial(multi_index_from_json(require_field(params, "lambda", ppath), at(ppath, "lambda")));
        }
        if (kind == "fourier") {
            return op_fourier();
        }
        if (kind == "inv_fourier") {
            return op_inv_fourier();
        }
        if (kind == "scale") {
            return op_scale(need_domain(), real_from_json(require_field(params, "a", ppath), at(ppath, "a")));
        }
        if (kind == "power") {
            return op_power(need_domain(), unsigned_param("m"));
        }
        if (kind == "poly") {
            const json& cs = require_array(require_field(params, "coeffs", ppath), at(ppath, "coeffs"));
            std::vector<Real> coeffs;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                coeffs.push_back(real_from_json(cs[i], at(at(ppath, "coeffs"), i)));
            }
            return op_poly(need_domain(), std::move(coeffs));
        }
        if (kind == "cross_power") {
            const Space& X = need_domain();
            if (X.kind() != SpaceKind::sigma_rho) {
                throw ConfigError(at(path, "domain"), "cross_power needs a sigma_rho domain");
            }
            return op_cross_power(X.rho(), unsigned_param("m"));
        }
        if (kind == "identity") {
            return op_identity(need_domain());
        }
        if (kind == "sum") {
            const json& ws = require_array(require_field(params, "weights", ppath), at(ppath, "weights"));
            const json& ps = require_array(require_field(params, "parts", ppath), at(ppath, "parts"));
            std::vector<Real> weights;
            std::vector<OperatorDescriptor> parts;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                weights.push_back(real_from_json(ws[i], at(at(ppath, "weights"), i)));
            }
            for (std::size_t i = 0; i < ps.size(); ++i) {
                parts.push_back(operator_from_json(ps[i], at(at(ppath, "parts"), i)));
            }
            return op_sum(std::move(weights), std::move(parts));
        }
        throw ConfigError(at(path, "kind"), "unknown operator kind '" + kind + "'");
    });
    if (domain && !(od.domain == *domain)) {
        throw ConfigError(at(path, "domain"), "does not match the domain of " + od.name());
    }
    if (j.contains("codomain") && !(space_from_json(j["codomain"], at(path, "codomain")) == od.codomain)) {
        throw ConfigError(at(path, "codomain"), "does not match the codomain of " + od.name());
    }
    return od;
}

// -------------------------------------------------------------- index sets

json seminorm_id_to_json(const SeminormId& id)
{
    if (id.is_schwartz()) {
        return {{"alpha", id.alpha.entries()}, {"beta", id.beta.entries()}};
    }
    return id.k;
}

json index_set_to_json(const IndexSet& I)
{
    json out = json::array();
    for (const auto& id : I.members()) {
        out.push_back(seminorm_id_to_json(id));
    }
    return out;
}

IndexSet index_set_from_json(const json& j, const Space& X, const std::string& path)
{
    auto check_dim = [&](const MultiIndex& a, const std::string& p) {
        if (a.dim() != X.dim()) {
            throw ConfigError(p, "multi-index dimension does not match " + X.tag());
        }
    };
    auto pair_from = [&](const json& o, const std::string& p) {
        MultiIndex alpha = multi_index_from_json(require_field(o, "alpha", p), at(p, "alpha"));
        MultiIndex beta = multi_index_from_json(require_field(o, "beta", p), at(p, "beta"));
        check_dim(alpha, at(p, "alpha"));
        check_dim(beta, at(p, "beta"));
        return std::make_pair(alpha, beta);
    };
    if (j.is_object()) {
        if (X.is_sequence()) {
            const std::size_t M = count_field(j, "prefix", path, 0);
            if (M == 0) {
                throw ConfigError(at(path, "prefix"), "expected a positive prefix length");
            }
            return IndexSet::prefix(M);
        }
        auto [alpha, beta] = pair_from(require_field(j, "below", path), at(path, "below"));
        return IndexSet::schwartz_below(alpha, beta);
    }
    require_array(j, path);
    if (j.empty()) {
        throw ConfigError(path, "index set must be nonempty");
    }
    std::vector<SeminormId> ids;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (X.is_sequence()) {
            const unsigned k = unsigned_from_json(j[i], at(path, i));
            if (k == 0) {
                throw ConfigError(at(path, i), "sequence indices start at 1");
            }
            ids.push_back(SeminormId::seq(k));
        } else {
            auto [alpha, beta] = pair_from(j[i], at(path, i));
            ids.push_back(SeminormId::schwartz(alpha, beta));
        }
    }
    return guarded(path, [&] { return IndexSet(std::move(ids)); });
}

// ------------------------------------------------------------- linear maps

json linmap_to_json(const LinearMap& L)
{
    json out{{"text", L.to_string()}};
    switch (L.form) {
    case LinearForm::zero:
        out["form"] = "zero";
        break;
    case LinearForm::identity_scaled:
        out["form"] = "identity_scaled";
        out["c"] = real_to_json(L.c);
        break;
    case LinearForm::diagonal:
        out["form"] = "diagonal";
        out["diag"] = seq_to_json(L.diag);
        break;
    case LinearForm::multiply_by:
        out["form"] = "multiply_by";
        out["g"] = gauss_to_json(L.g);
        break;
    case LinearForm::linear_op:
        out["form"] = "operator";
        out["operator"] = operator_to_json(L.op.front());
        break;
    case LinearForm::sum:
        out["form"] = "sum";
        break;
    case LinearForm::compose:
        out["form"] = "compose";
        break;
    }
    return out;
}

LinearMap linmap_from_json(const json& j, const OperatorDescriptor& od, const std::string& path)
{
    const std::string form = string_field(j, "form", path);
    return guarded(path, [&]() -> LinearMap {
        if (form == "zero") {
            return linmap_zero(od.domain, od.codomain);
        }
        if (form == "identity_scaled") {
            if (!(od.domain == od.codomain)) {
                throw ConfigError(at(path, "form"), "identity_scaled needs equal domain and codomain");
            }
            return linmap_identity_scaled(od.domain, real_from_json(require_field(j, "c", path), at(path, "c")));
        }
        if (form == "diagonal") {
            return linmap_diagonal(od.domain, od.codomain, seq_from_json(require_field(j, "diag", path), at(path, "diag")));
        }
        if (form == "multiply_by") {
            return linmap_multiply_by(gauss_from_json(require_field(j, "g", path), at(path, "g")));
        }
        if (form == "operator") {
            return linmap_operator(operator_from_json(require_field(j, "operator", path), at(path, "operator")));
        }
        throw ConfigError(at(path, "form"), "unknown linear map form '" + form + "'");
    });
}

// ----------------------------------------------------------------- reports

json check_to_json(const CheckReport& r)
{
    return {{"check", r.check},
            {"passed", r.passed},
            {"counterexample", opt_element(r.counterexample)},
            {"samples", r.samples},
            {"tolerance", double_to_json(r.tolerance)},
            {"detail", r.detail}};
}

json axiom_to_json(const AxiomReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(check_to_json(c));
    }
    return {{"seminorm", r.seminorm}, {"passed", r.passed()}, {"checks", checks}};
}

json delta_choice_to_json(const DeltaChoice& c)
{
    return {{"I", index_set_to_json(c.I)},
            {"delta", double_to_json(c.delta)},
            {"recipe", c.recipe},
            {"source", c.source}};
}

json gateaux_to_json(const GateauxWitness& w)
{
    json rows = json::array();
    double max_r = 0;
    double sum_r = 0;
    for (const auto& row : w.schedule) {
        rows.push_back({{"t", real_to_json(row.t)}, {"residual", double_to_json(row.residual)}});
        max_r = std::max(max_r, row.residual);
        sum_r += row.residual;
    }
    const double mean_r = w.schedule.empty() ? 0.0 : sum_r / static_cast<double>(w.schedule.size());
    return {{"J", index_set_to_json(w.J)},
            {"epsilon", double_to_json(w.epsilon)},
            {"delta", double_to_json(w.delta)},
            {"schedule", rows},
            {"residual", {{"max", double_to_json(max_r)}, {"mean", double_to_json(mean_r)}}},
            {"monotone", w.monotone},
            {"passed", w.passed},
            {"detail", w.detail}};
}

json frechet_to_json(const FrechetWitness& w)
{
    json dz = json::array();
    for (const auto& s : w.dz_samples) {
        dz.push_back({{"u", element_to_json(s.u)}, {"residual", double_to_json(s.residual)}});
    }
    json dr = json::array();
    for (const auto& s : w.dr_samples) {
        dr.push_back({{"u", element_to_json(s.u)}, {"pmax", double_to_json(s.pmax)}, {"ratio", double_to_json(s.ratio)}});
    }
    return {{"J", index_set_to_json(w.J)},
            {"epsilon", double_to_json(w.epsilon)},
            {"choice", delta_choice_to_json(w.choice)},
            {"recipe", w.choice.recipe},
            {"dz", {{"count", sample_count(w.dz_samples.size(), w.dz_count)},
                    {"failures", w.dz_failures},
                    {"max", double_to_json(w.dz_max)},
                    {"samples", dz}}},
            {"dr", {{"count", sample_count(w.dr_samples.size(), w.dr_count)},
                    {"failures", w.dr_failures},
                    {"max", double_to_json(w.dr_max)},
                    {"mean", double_to_json(w.dr_mean)},
                    {"samples", dr}}},
            {"counterexample", opt_element(w.counterexample)},
            {"passed", w.passed},
            {"detail", w.detail}};
}

json continuity_to_json(const ContinuityWitness& w)
{
    json ss = json::array();
    for (const auto& s : w.samples) {
        ss.push_back({{"x", element_to_json(s.x)}, {"pmax", double_to_json(s.pmax)}, {"value", double_to_json(s.value)}});
    }
    return {{"J", index_set_to_json(w.J)},
            {"epsilon", double_to_json(w.epsilon)},
            {"choice", delta_choice_to_json(w.choice)},
            {"recipe", w.choice.recipe},
            {"count", sample_count(w.samples.size(), w.count)},
            {"failures", w.failures},
            {"residual", {{"max", double_to_json(w.max_value)}, {"mean", double_to_json(w.mean_value)}}},
            {"samples", ss},
            {"counterexample", opt_element(w.counterexample)},
            {"passed", w.passed},
            {"detail", w.detail}};
}

json fnorm_forward_to_json(const FNormForward& f)
{
    return {{"M", f.M},
            {"B", double_to_json(f.B)},
            {"epsilon", double_to_json(f.epsilon)},
            {"epsilon1", double_to_json(f.epsilon1)},
            {"J", index_set_to_json(f.J)},
            {"inner", delta_choice_to_json(f.inner)},
            {"a", double_to_json(f.a)},
            {"delta", double_to_json(f.delta)}};
}

json fnorm_backward_to_json(const FNormBackward& b)
{
    return {{"J", index_set_to_json(b.J)},
            {"epsilon", double_to_json(b.epsilon)},
            {"b", double_to_json(b.b)},
            {"epsilon1", double_to_json(b.epsilon1)},
            {"delta1", double_to_json(b.delta1)},
            {"N", b.N},
            {"A", double_to_json(b.A)},
            {"choice", delta_choice_to_json(b.choice)}};
}

json order_case_to_json(const OrderCaseResult& r)
{
    auto opt_real = [](const std::optional<Real>& t) { return t ? real_to_json(*t) : json(nullptr); };
    return {{"name", r.name},
            {"claim", r.claim},
            {"credit", r.credit},
            {"max_along_all", r.max_along_all},
            {"min_along_all", r.min_along_all},
            {"absolute", r.absolute},
            {"increasing", r.increasing},
            {"derivative_in_cone", r.derivative_in_cone},
            {"non_converse", r.non_converse},
            {"necessity", r.necessity},
            {"witness_t_max", opt_real(r.witness_t_max)},
            {"witness_t_min", opt_real(r.witness_t_min)},
            {"passed", r.passed},
            {"detail", r.detail}};
}

}  // namespace fsem
