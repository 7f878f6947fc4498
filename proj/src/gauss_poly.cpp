#include "fsem/gauss_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fsem {

namespace {

bool decay_equal(const std::vector<Real>& a, const std::vector<Real>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_exact() && b[i].is_exact()) {
            if (a[i] != b[i]) {
                return false;
            }
            continue;
        }
        long double x = a[i].to_ld();
        long double y = b[i].to_ld();
        if (std::fabs(x - y) > kDecayMergeTolerance * std::max(std::fabs(x), std::fabs(y))) {
            return false;
        }
    }
    return true;
}

bool decay_less(const std::vector<Real>& a, const std::vector<Real>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) {
            return c < 0;
        }
    }
    return false;
}

std::vector<Real> decay_sum(const std::vector<Real>& a, const std::vector<Real>& b)
{
    std::vector<Real> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

void require_same_dim(const GaussPolyFn& f, const GaussPolyFn& g, const char* where)
{
    if (f.dim() != g.dim()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch");
    }
}

// d/dx_i of q e^{-sum a x^2}, returned as the new polynomial factor.
SparsePoly diff_factor(const SparsePoly& q, const std::vector<Real>& decay, std::size_t i)
{
    SparsePoly r = q.diff(i);
    r -= q.shifted(mi_unit(q.dim(), i)).scaled(Complex(Real(2) * decay[i]));
    return r;
}

// Transforms of xi^k e^{-b xi^2} style ladders. Starting from base*e^{-c y^2},
// each rung applies factor * d/dy. Returns the polynomial factors of rungs 0..kmax.
std::vector<SparsePoly> derivative_ladder(const Real& base, const Real& c, const Complex& factor, unsigned kmax)
{
    std::vector<SparsePoly> rungs;
    rungs.push_back(SparsePoly::constant(1, Complex(base)));
    const std::vector<Real> decay{c};
    for (unsigned k = 1; k <= kmax; ++k) {
        rungs.push_back(diff_factor(rungs.back(), decay, 0).scaled(factor));
    }
    return rungs;
}

// Shared body of the forward and inverse transforms. sign = -1 for the forward
// kernel e^{-i2pi x xi}, +1 for the inverse kernel e^{+i2pi x xi}.
GaussPolyFn transform(const GaussPolyFn& f, int sign, const char* where)
{
    if (f.dim() != 1) {
        throw FeatureGap(std::string(where) + ": only dimension 1 is supported");
    }
    const Real pi = Real::pi();
    // x f -> (sign' i / 2pi) d/dxi of the transform, where the forward kernel
    // gives +i/2pi and the inverse kernel gives -i/2pi.
    const Complex factor(Real(0), Real(-sign) / (Real(2) * pi));
    std::vector<GaussPolyTerm> out;
    for (const auto& term : f.terms()) {
        const Real& a = term.decay[0];
        const Real c = pi * pi / a;
        const Real base = Real::sqrt(pi / a);
        const int deg = term.poly.degree();
        auto rungs = derivative_ladder(base, c, factor, static_cast<unsigned>(std::max(deg, 0)));
        SparsePoly acc(1);
        for (const auto& [alpha, coeff] : term.poly.terms()) {
            acc += rungs[alpha[0]].scaled(coeff);
        }
        out.push_back({acc, {c}});
    }
    return GaussPolyFn(1, std::move(out));
}

}  // namespace

GaussPolyFn::GaussPolyFn(std::size_t n, std::vector<GaussPolyTerm> terms) : n_(n), terms_(std::move(terms))
{
    for (const auto& t : terms_) {
        if (t.decay.size() != n_ || t.poly.dim() != n_) {
            throw std::invalid_argument("GaussPolyFn: term dimension mismatch");
        }
        for (const auto& a : t.decay) {
            if (a.sign() <= 0) {
                throw std::invalid_argument("GaussPolyFn: decay rates must be strictly positive");
            }
        }
    }
    canonicalize();
}

void GaussPolyFn::canonicalize()
{
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const GaussPolyTerm& a, const GaussPolyTerm& b) { return decay_less(a.decay, b.decay); });
    std::vector<GaussPolyTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && decay_equal(merged.back().decay, t.decay)) {
            merged.back().poly += t.poly;
            // Prefer the exact representative when one side is exact.
            for (std::size_t i = 0; i < n_; ++i) {
                if (!merged.back().decay[i].is_exact() && t.decay[i].is_exact()) {
                    merged.back().decay[i] = t.decay[i];
                }
            }
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : merged) {
        t.poly.canonicalize();
        if (!t.poly.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

bool GaussPolyFn::is_exact() const
{
    for (const auto& t : terms_) {
        if (!t.poly.is_exact()) {
            return false;
        }
        for (const auto& a : t.decay) {
            if (!a.is_exact()) {
                return false;
            }
        }
    }
    return true;
}

bool GaussPolyFn::is_real() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const GaussPolyTerm& t) { return t.poly.is_real(); });
}

int GaussPolyFn::degree() const
{
    int d = -1;
    for (const auto& t : terms_) {
        d = std::max(d, t.poly.degree());
    }
    return d;
}

bool operator==(const GaussPolyFn& a, const GaussPolyFn& b)
{
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (!(a.terms_[k].poly == b.terms_[k].poly)) {
            return false;
        }
        for (std::size_t i = 0; i < a.n_; ++i) {
            if (a.terms_[k].decay[i] != b.terms_[k].decay[i]) {
                return false;
            }
        }
    }
    return true;
}

std::string GaussPolyFn::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first_term = true;
    for (const auto& t : terms_) {
        if (!first_term) {
            os << " + ";
        }
        first_term = false;
        os << "(";
        bool first = true;
        for (const auto& [alpha, c] : t.poly.terms()) {
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << c.re().to_string();
            if (!c.im().is_zero()) {
                os << (c.im().sign() < 0 ? " - " : " + ") << c.im().abs().to_string() << "i";
            }
            os << ")";
            for (std::size_t i = 0; i < n_; ++i) {
                if (alpha[i] > 0) {
                    os << "*x" << (n_ > 1 ? std::to_string(i + 1) : "") << (alpha[i] > 1 ? "^" + std::to_string(alpha[i]) : "");
                }
            }
        }
        os << ")*exp(-(";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i > 0) {
                os << " + ";
            }
            os << t.decay[i].to_string() << "*x" << (n_ > 1 ? std::to_string(i + 1) : "") << "^2";
        }
        os << "))";
    }
    return os.str();
}

GaussPolyFn gp_gaussian(std::size_t n, const Real& a)
{
    return gp_make(SparsePoly::constant(n, Complex(1)), std::vector<Real>(n, a));
}

GaussPolyFn gp_make(const SparsePoly& poly, const std::vector<Real>& decay)
{
    return GaussPolyFn(poly.dim(), {GaussPolyTerm{poly, decay}});
}

GaussPolyFn gp_univariate(const std::vector<Real>& coeffs, const Real& a)
{
    SparsePoly p(1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        p.add_term(MultiIndex{static_cast<unsigned>(j)}, Complex(coeffs[j]));
    }
    return gp_make(p, {a});
}

GaussPolyFn gp_add(const GaussPolyFn& f, const GaussPolyFn& g)
{
    require_same_dim(f, g, "gp_add");
    std::vector<GaussPolyTerm> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_sub(const GaussPolyFn& f, const GaussPolyFn& g)
{
    return gp_add(f, gp_neg(g));
}

GaussPolyFn gp_neg(const GaussPolyFn& f)
{
    std::vector<GaussPolyTerm> terms;
    for (const auto& t : f.terms()) {
        terms.push_back({t.poly.negated(), t.decay});
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_scale(const GaussPolyFn& f, const Complex& c)
{
    std::vector<GaussPolyTerm> terms;
    for (const auto& t : f.terms()) {
        terms.push_back({t.poly.scaled(c), t.decay});
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_mul(const GaussPolyFn& f, const GaussPolyFn& g)
{
    require_same_dim(f, g, "gp_mul");
    std::vector<GaussPolyTerm> terms;
    for (const auto& s : f.terms()) {
        for (const auto& t : g.terms()) {
            terms.push_back({s.poly * t.poly, decay_sum(s.decay, t.decay)});
        }
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_pow(const GaussPolyFn& f, unsigned m)
{
    if (m == 0) {
        throw std::invalid_argument("gp_pow: exponent must be at least 1 (constants are not in the class)");
    }
    GaussPolyFn result = f;
    GaussPolyFn base = f;
    --m;
    while (m > 0) {
        if (m & 1U) {
            result = gp_mul(result, base);
        }
        m >>= 1U;
        if (m > 0) {
            base = gp_mul(base, base);
        }
    }
    return result;
}

GaussPolyFn gp_monomial_mul(const GaussPolyFn& f, const MultiIndex& lambda)
{
    if (lambda.dim() != f.dim()) {
        throw std::invalid_argument("gp_monomial_mul: dimension mismatch");
    }
    std::vector<GaussPolyTerm> terms;
    for (const auto& t : f.terms()) {
        terms.push_back({t.poly.shifted(lambda), t.decay});
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_diff(const GaussPolyFn& f, const MultiIndex& beta)
{
    if (beta.dim() != f.dim()) {
        throw std::invalid_argument("gp_diff: dimension mismatch");
    }
    std::vector<GaussPolyTerm> terms;
    for (const auto& t : f.terms()) {
        SparsePoly q = t.poly;
        for (std::size_t i = 0; i < f.dim(); ++i) {
            for (unsigned j = 0; j < beta[i]; ++j) {
                q = diff_factor(q, t.decay, i);
            }
        }
        terms.push_back({q, t.decay});
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_conj(const GaussPolyFn& f)
{
    std::vector<GaussPolyTerm> terms;
    for (const auto& t : f.terms()) {
        terms.push_back({t.poly.conj(), t.decay});
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_real_part(const GaussPolyFn& f)
{
    std::vector<GaussPolyTerm> terms;
    for (const auto& t : f.terms()) {
        terms.push_back({t.poly.real_part(), t.decay});
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

GaussPolyFn gp_imag_part(const GaussPolyFn& f)
{
    std::vector<GaussPolyTerm> terms;
    for (const auto& t : f.terms()) {
        terms.push_back({t.poly.imag_part(), t.decay});
    }
    return GaussPolyFn(f.dim(), std::move(terms));
}

LeibnizExpansion leibniz_expand(const GaussPolyFn& g, const GaussPolyFn& f, const MultiIndex& beta)
{
    require_same_dim(f, g, "leibniz_expand");
    if (beta.dim() != f.dim()) {
        throw std::invalid_argument("leibniz_expand: multi-index dimension mismatch");
    }
    LeibnizExpansion out{GaussPolyFn(f.dim()), 0};
    for (const auto& k : mi_below(beta)) {
        GaussPolyFn dg = gp_diff(g, mi_sub(beta, k));
        GaussPolyFn df = gp_diff(f, k);
        out.raw_terms += dg.terms().size() * df.terms().size();
        GaussPolyFn product = gp_mul(dg, df);
        out.value = gp_add(out.value, gp_scale(product, Complex(Real(mi_binomial(beta, k)))));
    }
    return out;
}

std::complex<long double> gp_eval(const GaussPolyFn& f, const std::vector<long double>& x)
{
    if (x.size() != f.dim()) {
        throw std::invalid_argument("gp_eval: point dimension mismatch");
    }
    std::complex<long double> sum = 0;
    for (const auto& t : f.terms()) {
        long double expo = 0;
        for (std::size_t i = 0; i < f.dim(); ++i) {
            expo += t.decay[i].to_ld() * x[i] * x[i];
        }
        sum += t.poly.eval(x) * std::exp(-expo);
    }
    return sum;
}

GaussPolyFn gp_fourier(const GaussPolyFn& f)
{
    return transform(f, -1, "gp_fourier");
}

GaussPolyFn gp_inv_fourier(const GaussPolyFn& g)
{
    return transform(g, +1, "gp_inv_fourier");
}

long double gp_max_coef_diff(const GaussPolyFn& f, const GaussPolyFn& g)
{
    require_same_dim(f, g, "gp_max_coef_diff");
    long double worst = 0;
    std::vector<bool> used(g.terms().size(), false);
    auto poly_gap = [&](const SparsePoly& p, const SparsePoly& q) {
        SparsePoly d = p - q;
        for (const auto& [alpha, c] : d.terms()) {
            worst = std::max(worst, c.abs_ld());
        }
    };
    for (const auto& s : f.terms()) {
        bool matched = false;
        for (std::size_t j = 0; j < g.terms().size(); ++j) {
            if (!used[j] && decay_equal(s.decay, g.terms()[j].decay)) {
                used[j] = true;
                matched = true;
                poly_gap(s.poly, g.terms()[j].poly);
                break;
            }
        }
        if (!matched) {
            poly_gap(s.poly, SparsePoly(f.dim()));
        }
    }
    for (std::size_t j = 0; j < g.terms().size(); ++j) {
        if (!used[j]) {
            poly_gap(g.terms()[j].poly, SparsePoly(f.dim()));
        }
    }
    return worst;
}

}  // namespace fsem
