#include "fsem/operators.hpp"

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

const GaussPolyFn& as_fn(const Element& x)
{
    return std::get<GaussPolyFn>(x);
}

std::string power_letter(const Space& X)
{
    switch (X.kind()) {
    case SpaceKind::schwartz:
        return "P";
    case SpaceKind::sigma_rho:
        return "Q";
    case SpaceKind::s:
        return "R";
    }
    return "?";
}

// Entrywise polynomial sum_i c[i] t^(i + shift) on an exact scalar.
mpq_class poly_value(const std::vector<mpq_class>& c, const mpq_class& t, unsigned shift)
{
    mpq_class acc = 0;
    mpq_class pw = 1;
    for (unsigned i = 0; i < shift; ++i) {
        pw *= t;
    }
    for (const auto& ci : c) {
        acc += ci * pw;
        pw *= t;
    }
    return acc;
}

SeqElement seq_map(const SeqElement& x, const std::vector<mpq_class>& c, unsigned shift)
{
    std::vector<mpq_class> out;
    out.reserve(x.length());
    for (const auto& t : x.prefix()) {
        out.push_back(poly_value(c, t, shift));
    }
    return SeqElement(std::move(out), poly_value(c, x.tail(), shift));
}

std::vector<mpq_class> exact_coeffs(const std::vector<Real>& c)
{
    std::vector<mpq_class> out;
    out.reserve(c.size());
    for (const auto& v : c) {
        out.push_back(to_exact(v));
    }
    return out;
}

// Factor f with q(w v) <= f * q(v) for every seminorm q of Y.
double scalar_factor(const Space& Y, const Real& w)
{
    const double a = std::fabs(w.to_double());
    switch (Y.kind()) {
    case SpaceKind::schwartz:
        return a;
    case SpaceKind::sigma_rho:
        return std::pow(a, Y.rho());
    case SpaceKind::s:
        return std::max(1.0, a);
    }
    return a;
}

void merge_family(std::vector<SeminormId>& into, const std::vector<SeminormId>& more)
{
    into.insert(into.end(), more.begin(), more.end());
    std::sort(into.begin(), into.end());
    into.erase(std::unique(into.begin(), into.end()), into.end());
}

MultiIndex zero_mi(std::size_t n)
{
    return MultiIndex(n);
}

}  // namespace

const char* op_kind_name(OpKind kind)
{
    switch (kind) {
    case OpKind::diff:
        return "diff";
    case OpKind::mult:
        return "mult";
    case OpKind::monomial:
        return "monomial";
    case OpKind::fourier:
        return "fourier";
    case OpKind::inv_fourier:
        return "inv_fourier";
    case OpKind::scale:
        return "scale";
    case OpKind::power:
        return "power";
    case OpKind::poly:
        return "poly";
    case OpKind::cross_power:
        return "cross_power";
    case OpKind::identity:
        return "identity";
    case OpKind::sum:
        return "sum";
    }
    return "?";
}

std::string OperatorDescriptor::name() const
{
    switch (kind) {
    case OpKind::diff:
        return "D^" + gamma.to_string();
    case OpKind::mult:
        return "T_g";
    case OpKind::monomial:
        return "x^" + lambda.to_string();
    case OpKind::fourier:
        return "F";
    case OpKind::inv_fourier:
        return "F^-1";
    case OpKind::scale:
        return "M_" + a.to_string();
    case OpKind::power:
        return power_letter(domain) + "^" + std::to_string(m);
    case OpKind::poly:
        return power_letter(domain) + "_" + std::to_string(m);
    case OpKind::cross_power:
        return "Lambda^" + std::to_string(m);
    case OpKind::identity:
        return "I";
    case OpKind::sum: {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            out += (i ? " + " : "") + weights[i].to_string() + "*" + parts[i].name();
        }
        return out;
    }
    }
    return "?";
}

OperatorDescriptor op_diff(std::size_t n, MultiIndex gamma)
{
    require(gamma.dim() == n, "op_diff: gamma has the wrong dimension");
    OperatorDescriptor od;
    od.kind = OpKind::diff;
    od.domain = od.codomain = Space::schwartz(n);
    od.gamma = std::move(gamma);
    return od;
}

OperatorDescriptor op_mult(GaussPolyFn g)
{
    OperatorDescriptor od;
    od.kind = OpKind::mult;
    od.domain = od.codomain = Space::schwartz(g.dim());
    od.g = std::move(g);
    return od;
}

OperatorDescriptor op_monomial(MultiIndex lambda)
{
    require(lambda.dim() >= 1, "op_monomial: lambda must have dimension >= 1");
    OperatorDescriptor od;
    od.kind = OpKind::monomial;
    od.domain = od.codomain = Space::schwartz(lambda.dim());
    od.lambda = std::move(lambda);
    return od;
}

OperatorDescriptor op_fourier()
{
    OperatorDescriptor od;
    od.kind = OpKind::fourier;
    od.domain = od.codomain = Space::schwartz(1);
    return od;
}

OperatorDescriptor op_inv_fourier()
{
    OperatorDescriptor od = op_fourier();
    od.kind = OpKind::inv_fourier;
    return od;
}

OperatorDescriptor op_scale(const Space& X, Real a)
{
    OperatorDescriptor od;
    od.kind = OpKind::scale;
    od.domain = od.codomain = X;
    od.a = std::move(a);
    return od;
}

OperatorDescriptor op_power(const Space& X, unsigned m)
{
    require(m >= 1, "op_power: m must be at least 1");
    OperatorDescriptor od;
    od.kind = OpKind::power;
    od.domain = od.codomain = X;
    od.m = m;
    return od;
}

OperatorDescriptor op_poly(const Space& X, std::vector<Real> coeffs)
{
    require(!coeffs.empty(), "op_poly: the coefficient list must be nonempty");
    OperatorDescriptor od;
    od.kind = OpKind::poly;
    od.domain = od.codomain = X;
    od.m = static_cast<unsigned>(coeffs.size());
    od.coeffs = std::move(coeffs);
    return od;
}

OperatorDescriptor op_cross_power(double rho, unsigned m)
{
    require(m >= 1, "op_cross_power: m must be at least 1");
    OperatorDescriptor od;
    od.kind = OpKind::cross_power;
    od.domain = Space::sigma_rho(rho);
    od.codomain = Space::s();
    od.m = m;
    return od;
}

OperatorDescriptor op_identity(const Space& X)
{
    OperatorDescriptor od;
    od.kind = OpKind::identity;
    od.domain = od.codomain = X;
    return od;
}

OperatorDescriptor op_sum(std::vector<Real> weights, std::vector<OperatorDescriptor> parts)
{
    require(!parts.empty(), "op_sum: at least one part is required");
    require(weights.size() == parts.size(), "op_sum: one weight per part is required");
    for (const auto& p : parts) {
        require(p.domain == parts.front().domain && p.codomain == parts.front().codomain,
                "op_sum: parts must share domain and codomain");
    }
    OperatorDescriptor od;
    od.kind = OpKind::sum;
    od.domain = parts.front().domain;
    od.codomain = parts.front().codomain;
    od.weights = std::move(weights);
    od.parts = std::move(parts);
    return od;
}

bool op_is_linear(const OperatorDescriptor& od)
{
    switch (od.kind) {
    case OpKind::power:
    case OpKind::cross_power:
        return od.m == 1;
    case OpKind::poly:
        return std::all_of(od.coeffs.begin() + 1, od.coeffs.end(), [](const Real& c) { return c.is_zero(); });
    case OpKind::sum:
        return std::all_of(od.parts.begin(), od.parts.end(), op_is_linear);
    default:
        return true;
    }
}

Element op_apply(const OperatorDescriptor& od, const Element& x)
{
    require_member(od.domain, x, "op_apply");
    switch (od.kind) {
    case OpKind::diff:
        return gp_diff(as_fn(x), od.gamma);
    case OpKind::mult:
        return gp_mul(od.g, as_fn(x));
    case OpKind::monomial:
        return gp_monomial_mul(as_fn(x), od.lambda);
    case OpKind::fourier:
        return gp_fourier(as_fn(x));
    case OpKind::inv_fourier:
        return gp_inv_fourier(as_fn(x));
    case OpKind::scale:
        return el_scale(x, od.a);
    case OpKind::power:
    case OpKind::cross_power:
        if (od.domain.is_sequence()) {
            return seq_pow(as_seq(x), od.m);
        }
        return gp_pow(as_fn(x), od.m);
    case OpKind::poly: {
        if (od.domain.is_sequence()) {
            return seq_map(as_seq(x), exact_coeffs(od.coeffs), 1);
        }
        const GaussPolyFn& f = as_fn(x);
        GaussPolyFn acc(f.dim());
        GaussPolyFn pw = f;
        for (std::size_t i = 0; i < od.coeffs.size(); ++i) {
            if (i > 0) {
                pw = gp_mul(pw, f);
            }
            if (!od.coeffs[i].is_zero()) {
                acc = gp_add(acc, gp_scale(pw, Complex(od.coeffs[i])));
            }
        }
        return acc;
    }
    case OpKind::identity:
        return x;
    case OpKind::sum: {
        Element acc = zero_element(od.codomain);
        for (std::size_t i = 0; i < od.parts.size(); ++i) {
            acc = el_add(acc, el_scale(op_apply(od.parts[i], x), od.weights[i]));
        }
        return acc;
    }
    }
    throw std::logic_error("op_apply: unknown kind");
}

std::string LinearMap::to_string() const
{
    switch (form) {
    case LinearForm::zero:
        return "zero";
    case LinearForm::identity_scaled:
        return "identity_scaled(" + c.to_string() + ")";
    case LinearForm::diagonal:
        return "diagonal" + diag.to_string();
    case LinearForm::multiply_by:
        return "multiply_by(" + g.to_string() + ")";
    case LinearForm::linear_op:
        return "operator(" + op.front().name() + ")";
    case LinearForm::sum: {
        std::string out = "sum(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            out += (i ? ", " : "") + weights[i].to_string() + "*" + parts[i].to_string();
        }
        return out + ")";
    }
    case LinearForm::compose:
        return "compose(" + parts[0].to_string() + ", " + parts[1].to_string() + ")";
    }
    return "?";
}

LinearMap linmap_zero(const Space& X, const Space& Y)
{
    LinearMap L;
    L.form = LinearForm::zero;
    L.domain = X;
    L.codomain = Y;
    return L;
}

LinearMap linmap_identity_scaled(const Space& X, Real c)
{
    LinearMap L;
    L.form = LinearForm::identity_scaled;
    L.domain = L.codomain = X;
    L.c = std::move(c);
    return L;
}

LinearMap linmap_diagonal(const Space& X, const Space& Y, SeqElement d)
{
    require(X.is_sequence() && Y.is_sequence(), "linmap_diagonal: sequence spaces required");
    LinearMap L;
    L.form = LinearForm::diagonal;
    L.domain = X;
    L.codomain = Y;
    L.diag = std::move(d);
    return L;
}

LinearMap linmap_multiply_by(GaussPolyFn g)
{
    const Space X = Space::schwartz(g.dim());
    if (g.is_zero()) {
        return linmap_zero(X, X);
    }
    LinearMap L;
    L.form = LinearForm::multiply_by;
    L.domain = L.codomain = X;
    L.g = std::move(g);
    return L;
}

LinearMap linmap_operator(const OperatorDescriptor& od)
{
    require(op_is_linear(od), "linmap_operator: " + od.name() + " is not linear");
    LinearMap L;
    L.form = LinearForm::linear_op;
    L.domain = od.domain;
    L.codomain = od.codomain;
    L.op = {od};
    return L;
}

Element linmap_apply(const LinearMap& L, const Element& u)
{
    require_member(L.domain, u, "linmap_apply");
    switch (L.form) {
    case LinearForm::zero:
        return zero_element(L.codomain);
    case LinearForm::identity_scaled:
        return el_scale(u, L.c);
    case LinearForm::diagonal:
        return seq_mul(L.diag, as_seq(u));
    case LinearForm::multiply_by:
        return gp_mul(L.g, as_fn(u));
    case LinearForm::linear_op:
        return op_apply(L.op.front(), u);
    case LinearForm::sum: {
        Element acc = zero_element(L.codomain);
        for (std::size_t i = 0; i < L.parts.size(); ++i) {
            acc = el_add(acc, el_scale(linmap_apply(L.parts[i], u), L.weights[i]));
        }
        return acc;
    }
    case LinearForm::compose:
        return linmap_apply(L.parts[0], linmap_apply(L.parts[1], u));
    }
    throw std::logic_error("linmap_apply: unknown form");
}

namespace {

LinearMap opaque_sum(const LinearMap& L1, const LinearMap& L2)
{
    LinearMap L;
    L.form = LinearForm::sum;
    L.domain = L1.domain;
    L.codomain = L1.codomain;
    for (const LinearMap* part : {&L1, &L2}) {
        if (part->form == LinearForm::sum) {
            L.weights.insert(L.weights.end(), part->weights.begin(), part->weights.end());
            L.parts.insert(L.parts.end(), part->parts.begin(), part->parts.end());
        } else {
            L.weights.emplace_back(1);
            L.parts.push_back(*part);
        }
    }
    return L;
}

SeqElement constant_seq(const Real& c)
{
    return SeqElement({}, to_exact(c));
}

}  // namespace

LinearMap linmap_add(const LinearMap& L1, const LinearMap& L2)
{
    require(L1.domain == L2.domain && L1.codomain == L2.codomain, "linmap_add: maps act between different spaces");
    if (L1.form == LinearForm::zero) {
        return L2;
    }
    if (L2.form == LinearForm::zero) {
        return L1;
    }
    if (L1.form == LinearForm::identity_scaled && L2.form == LinearForm::identity_scaled) {
        return linmap_identity_scaled(L1.domain, L1.c + L2.c);
    }
    if (L1.form == LinearForm::diagonal && L2.form == LinearForm::diagonal) {
        return linmap_diagonal(L1.domain, L1.codomain, seq_add(L1.diag, L2.diag));
    }
    if (L1.form == LinearForm::diagonal && L2.form == LinearForm::identity_scaled) {
        return linmap_diagonal(L1.domain, L1.codomain, seq_add(L1.diag, constant_seq(L2.c)));
    }
    if (L1.form == LinearForm::identity_scaled && L2.form == LinearForm::diagonal) {
        return linmap_diagonal(L1.domain, L1.codomain, seq_add(constant_seq(L1.c), L2.diag));
    }
    if (L1.form == LinearForm::multiply_by && L2.form == LinearForm::multiply_by) {
        return linmap_multiply_by(gp_add(L1.g, L2.g));
    }
    return opaque_sum(L1, L2);
}

LinearMap linmap_scale(const Real& a, const LinearMap& L)
{
    if (a.is_zero() || L.form == LinearForm::zero) {
        return linmap_zero(L.domain, L.codomain);
    }
    switch (L.form) {
    case LinearForm::identity_scaled:
        return linmap_identity_scaled(L.domain, L.c * a);
    case LinearForm::diagonal:
        return linmap_diagonal(L.domain, L.codomain, seq_scale(L.diag, to_exact(a)));
    case LinearForm::multiply_by:
        return linmap_multiply_by(gp_scale(L.g, Complex(a)));
    case LinearForm::sum: {
        LinearMap out = L;
        for (auto& w : out.weights) {
            w *= a;
        }
        return out;
    }
    default: {
        LinearMap out;
        out.form = LinearForm::sum;
        out.domain = L.domain;
        out.codomain = L.codomain;
        out.weights = {a};
        out.parts = {L};
        return out;
    }
    }
}

LinearMap linmap_compose(const LinearMap& L2, const LinearMap& L1)
{
    require(L1.codomain == L2.domain, "linmap_compose: codomain of the inner map is not the outer domain");
    if (L1.form == LinearForm::zero || L2.form == LinearForm::zero) {
        return linmap_zero(L1.domain, L2.codomain);
    }
    if (L2.form == LinearForm::identity_scaled) {
        return linmap_scale(L2.c, L1);
    }
    if (L1.form == LinearForm::identity_scaled) {
        return linmap_scale(L1.c, L2);
    }
    if (L1.form == LinearForm::diagonal && L2.form == LinearForm::diagonal) {
        return linmap_diagonal(L1.domain, L2.codomain, seq_mul(L2.diag, L1.diag));
    }
    if (L1.form == LinearForm::multiply_by && L2.form == LinearForm::multiply_by) {
        return linmap_multiply_by(gp_mul(L2.g, L1.g));
    }
    LinearMap out;
    out.form = LinearForm::compose;
    out.domain = L1.domain;
    out.codomain = L2.codomain;
    out.parts = {L2, L1};
    return out;
}

LinearMap analytic_frechet(const OperatorDescriptor& od, const Element& xbar)
{
    require_member(od.domain, xbar, "analytic_frechet");
    switch (od.kind) {
    case OpKind::identity:
        return linmap_identity_scaled(od.domain, Real(1));
    case OpKind::scale:
        return linmap_identity_scaled(od.domain, od.a);
    case OpKind::mult:
        return linmap_multiply_by(od.g);
    case OpKind::diff:
    case OpKind::monomial:
    case OpKind::fourier:
    case OpKind::inv_fourier:
        return linmap_operator(od);
    case OpKind::power:
    case OpKind::cross_power: {
        if (od.m == 1) {
            if (od.kind == OpKind::cross_power) {
                return linmap_diagonal(od.domain, od.codomain, SeqElement({}, 1));
            }
            return linmap_identity_scaled(od.domain, Real(1));
        }
        if (od.domain.is_sequence()) {
            return linmap_diagonal(od.domain, od.codomain, seq_scale(seq_pow(as_seq(xbar), od.m - 1), od.m));
        }
        const GaussPolyFn& f = as_fn(xbar);
        if (f.is_zero()) {
            return linmap_zero(od.domain, od.codomain);
        }
        return linmap_multiply_by(gp_scale(gp_pow(f, od.m - 1), Complex(Real(static_cast<long>(od.m)))));
    }
    case OpKind::poly: {
        // d/dt sum_i a_i t^i = a_1 + sum_{i >= 2} i a_i t^{i-1}
        if (od.domain.is_sequence()) {
            std::vector<mpq_class> d;
            for (std::size_t i = 0; i < od.coeffs.size(); ++i) {
                d.push_back(to_exact(od.coeffs[i]) * static_cast<long>(i + 1));
            }
            return linmap_diagonal(od.domain, od.codomain, seq_map(as_seq(xbar), d, 0));
        }
        const GaussPolyFn& f = as_fn(xbar);
        GaussPolyFn h(f.dim());
        if (!f.is_zero()) {
            GaussPolyFn pw = f;
            for (std::size_t i = 1; i < od.coeffs.size(); ++i) {
                if (i > 1) {
                    pw = gp_mul(pw, f);
                }
                const Real c = od.coeffs[i] * Real(static_cast<long>(i + 1));
                if (!c.is_zero()) {
                    h = gp_add(h, gp_scale(pw, Complex(c)));
                }
            }
        }
        return linmap_add(linmap_scale(od.coeffs.front(), linmap_identity_scaled(od.domain, Real(1))),
                          linmap_multiply_by(h));
    }
    case OpKind::sum: {
        LinearMap acc = linmap_zero(od.domain, od.codomain);
        for (std::size_t i = 0; i < od.parts.size(); ++i) {
            acc = linmap_add(acc, linmap_scale(od.weights[i], analytic_frechet(od.parts[i], xbar)));
        }
        return acc;
    }
    }
    throw std::invalid_argument("analytic_frechet: unsupported kind");
}

Element analytic_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v)
{
    require(!el_is_zero(v), "analytic_gateaux: the direction must be nonzero");
    return linmap_apply(analytic_frechet(od, xbar), v);
}

namespace {

LinearBound product_bound(const GaussPolyFn& g, const SeminormId& q)
{
    LinearBound b{q, {}, 0, "Leibniz product bound"};
    const std::size_t n = g.dim();
    for (const auto& k : mi_below(q.beta)) {
        const double gk = schwartz_seminorm(g, zero_mi(n), mi_sub(q.beta, k));
        b.C = std::max(b.C, mi_binomial(q.beta, k).get_d() * gk);
        b.family.push_back(SeminormId::schwartz(q.alpha, k));
    }
    return b;
}

LinearBound monomial_bound(const MultiIndex& lambda, const SeminormId& q)
{
    LinearBound b{q, {}, 0, "monomial product bound"};
    for (const auto& k : mi_below(q.beta)) {
        const MultiIndex d = mi_sub(q.beta, k);
        const mpz_class A = mi_falling(lambda, d);
        if (A == 0) {
            continue;
        }
        b.C = std::max(b.C, mpz_class(mi_binomial(q.beta, k) * A).get_d());
        b.family.push_back(SeminormId::schwartz(mi_sub(mi_add(q.alpha, lambda), d), k));
    }
    return b;
}

// |xi^a D^b Fu| <= (2 pi)^{b-a} ||D^a(x^b u)||_{L^1}
//              <= (2 pi)^{b-a} pi sup |(1 + x^2) D^a(x^b u)|,
// with D^a(x^b u) = sum_j binom(a,j) b!/(b-j)! x^{b-j} D^{a-j} u.
LinearBound fourier_bound(const SeminormId& q)
{
    if (q.alpha.dim() != 1) {
        throw FeatureGap("Fourier bound: only n = 1 is supported");
    }
    const unsigned a = q.alpha[0];
    const unsigned bb = q.beta[0];
    LinearBound b{q, {}, 0, "Fourier L1 bound"};
    double cmax = 0;
    for (unsigned j = 0; j <= std::min(a, bb); ++j) {
        const double cj = binomial(a, j).get_d() * mpz_class(factorial(bb) / factorial(bb - j)).get_d();
        cmax = std::max(cmax, cj);
        b.family.push_back(SeminormId::schwartz({bb - j}, {a - j}));
        b.family.push_back(SeminormId::schwartz({bb - j + 2}, {a - j}));
    }
    b.C = std::pow(2 * M_PI, static_cast<double>(bb) - static_cast<double>(a)) * M_PI * cmax;
    return b;
}

LinearBound diagonal_bound(const LinearMap& L, const SeminormId& q)
{
    const double d = std::fabs(L.diag.at(q.k).get_d());
    double C = 0;
    if (L.codomain.kind() == SpaceKind::s && L.domain.kind() == SpaceKind::s) {
        C = std::max(1.0, d);
    } else if (L.codomain.kind() == SpaceKind::sigma_rho && L.domain.kind() == SpaceKind::sigma_rho) {
        C = std::pow(d, L.codomain.rho());
    } else if (L.codomain.kind() == SpaceKind::s && L.domain.kind() == SpaceKind::sigma_rho) {
        // |dt|/(1+|dt|) <= min(1, |d t|) <= |d|^rho |t|^rho
        C = std::pow(d, L.domain.rho());
    } else {
        throw std::invalid_argument("linmap_bound: unsupported diagonal spaces");
    }
    return {q, {SeminormId::seq(q.k)}, C, "diagonal entry bound"};
}

LinearBound operator_bound(const OperatorDescriptor& od, const SeminormId& q)
{
    switch (od.kind) {
    case OpKind::diff:
        return {q, {SeminormId::schwartz(q.alpha, mi_add(q.beta, od.gamma))}, 1.0, "derivative shift identity"};
    case OpKind::mult:
        return product_bound(od.g, q);
    case OpKind::monomial:
        return monomial_bound(od.lambda, q);
    case OpKind::fourier:
    case OpKind::inv_fourier:
        return fourier_bound(q);
    case OpKind::scale:
        return {q, {q}, scalar_factor(od.codomain, od.a), "scalar factor"};
    case OpKind::identity:
    case OpKind::power:
        return {q, {q}, 1.0, "identity"};
    case OpKind::poly:
        return {q, {q}, scalar_factor(od.codomain, od.coeffs.front()), "scalar factor"};
    case OpKind::cross_power:
        // |t|/(1+|t|) <= |t|^rho for every real t
        return {q, {q}, 1.0, "embedding bound"};
    case OpKind::sum: {
        LinearBound b{q, {}, 0, "sum of bounds"};
        for (std::size_t i = 0; i < od.parts.size(); ++i) {
            const LinearBound bi = operator_bound(od.parts[i], q);
            b.C += scalar_factor(od.codomain, od.weights[i]) * bi.C;
            merge_family(b.family, bi.family);
        }
        return b;
    }
    }
    throw std::logic_error("operator_bound: unknown kind");
}

}  // namespace

LinearBound linmap_bound(const LinearMap& L, const SeminormId& q)
{
    switch (L.form) {
    case LinearForm::zero:
        return {q, enumerate_seminorms(L.domain, 1), 0.0, "zero map"};
    case LinearForm::identity_scaled:
        return {q, {q}, scalar_factor(L.codomain, L.c), "scalar factor"};
    case LinearForm::diagonal:
        return diagonal_bound(L, q);
    case LinearForm::multiply_by:
        return product_bound(L.g, q);
    case LinearForm::linear_op:
        return operator_bound(L.op.front(), q);
    case LinearForm::sum: {
        LinearBound b{q, {}, 0, "sum of bounds"};
        for (std::size_t i = 0; i < L.parts.size(); ++i) {
            const LinearBound bi = linmap_bound(L.parts[i], q);
            b.C += scalar_factor(L.codomain, L.weights[i]) * bi.C;
            merge_family(b.family, bi.family);
        }
        return b;
    }
    case LinearForm::compose: {
        const LinearBound outer = linmap_bound(L.parts[0], q);
        LinearBound b{q, {}, 0, "composed bounds"};
        double inner_sum = 0;
        for (const auto& r : outer.family) {
            const LinearBound inner = linmap_bound(L.parts[1], r);
            inner_sum += inner.C;
            merge_family(b.family, inner.family);
        }
        b.C = outer.C * inner_sum;
        return b;
    }
    }
    throw std::logic_error("linmap_bound: unknown form");
}

LinearContinuity linmap_continuity(const LinearMap& L, const IndexSet& J, double epsilon)
{
    require(epsilon > 0, "linmap_continuity: epsilon must be positive");
    std::vector<SeminormId> family;
    double delta = epsilon;
    for (const auto& q : J.members()) {
        const LinearBound b = linmap_bound(L, q);
        merge_family(family, b.family);
        delta = std::min(delta, epsilon / std::max(1.0, b.C * static_cast<double>(b.family.size())));
    }
    return {IndexSet(std::move(family)), delta};
}

BoundPair bound_product(const GaussPolyFn& g, const GaussPolyFn& f, const MultiIndex& alpha, const MultiIndex& beta)
{
    const std::size_t n = f.dim();
    BoundPair out;
    out.lhs = schwartz_seminorm(gp_mul(g, f), alpha, beta);
    for (const auto& k : mi_below(beta)) {
        out.rhs += mi_binomial(beta, k).get_d() * schwartz_seminorm(g, zero_mi(n), mi_sub(beta, k)) *
                   schwartz_seminorm(f, alpha, k);
    }
    return out;
}

BoundPair bound_monomial(const GaussPolyFn& f, const MultiIndex& lambda, const MultiIndex& alpha,
                         const MultiIndex& beta)
{
    BoundPair out;
    out.lhs = schwartz_seminorm(gp_monomial_mul(f, lambda), alpha, beta);
    for (const auto& k : mi_below(beta)) {
        const MultiIndex d = mi_sub(beta, k);
        const mpz_class A = mi_falling(lambda, d);
        if (A == 0) {
            continue;
        }
        out.rhs += mpz_class(mi_binomial(beta, k) * A).get_d() * schwartz_seminorm(f, mi_sub(mi_add(alpha, lambda), d), k);
    }
    return out;
}

BoundPair bound_power(const GaussPolyFn& u, unsigned m, const MultiIndex& alpha, const MultiIndex& beta)
{
    require(m >= 1, "bound_power: m must be at least 1");
    const std::size_t n = u.dim();
    BoundPair out;
    out.lhs = schwartz_seminorm(gp_pow(u, m), alpha, beta);
    double ma = 0;
    double m0 = 0;
    for (const auto& gamma : mi_below(beta)) {
        ma = std::max(ma, schwartz_seminorm(u, alpha, gamma));
        m0 = std::max(m0, schwartz_seminorm(u, zero_mi(n), gamma));
    }
    out.rhs = std::ldexp(1.0, static_cast<int>(m * beta.order())) * ma * std::pow(m0, static_cast<double>(m - 1));
    return out;
}

std::vector<CheckReport> linear_bound_check(const OperatorDescriptor& od, const IndexSet& J,
                                            const std::vector<Element>& samples)
{
    const LinearMap L = linmap_operator(od);
    constexpr double rel = 1e-9;
    std::vector<CheckReport> out;
    for (const auto& q : J.members()) {
        const LinearBound b = linmap_bound(L, q);
        CheckReport r;
        r.check = "q(Tx) <= C sum p(x) for q = " + q.to_string();
        r.tolerance = rel;
        std::ostringstream detail;
        detail << b.rule << ", C = " << b.C << ", family {";
        for (std::size_t i = 0; i < b.family.size(); ++i) {
            detail << (i ? ", " : "") << b.family[i].to_string();
        }
        detail << "}";
        for (const auto& x : samples) {
            ++r.samples;
            const double lhs = seminorm_eval(od.codomain, q, op_apply(od, x));
            double sum = 0;
            for (const auto& p : b.family) {
                sum += seminorm_eval(od.domain, p, x);
            }
            if (!(lhs <= b.C * sum * (1 + rel) + 1e-300)) {
                r.passed = false;
                r.counterexample = x;
                detail << "; violated: " << lhs << " > " << b.C * sum;
                break;
            }
        }
        r.detail = detail.str();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace fsem
