#include "fsem/sparse_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fsem {

SparsePoly SparsePoly::constant(std::size_t n, const Complex& c)
{
    SparsePoly p(n);
    p.add_term(MultiIndex(n), c);
    return p;
}

SparsePoly SparsePoly::monomial(const MultiIndex& alpha, const Complex& c)
{
    SparsePoly p(alpha.dim());
    p.add_term(alpha, c);
    return p;
}

int SparsePoly::degree() const
{
    int d = -1;
    for (const auto& [alpha, c] : terms_) {
        d = std::max(d, static_cast<int>(alpha.order()));
    }
    return d;
}

int SparsePoly::degree_in(std::size_t i) const
{
    int d = -1;
    for (const auto& [alpha, c] : terms_) {
        d = std::max(d, static_cast<int>(alpha[i]));
    }
    return d;
}

bool SparsePoly::is_exact() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_exact(); });
}

bool SparsePoly::is_real() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

Complex SparsePoly::coeff(const MultiIndex& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Complex() : it->second;
}

void SparsePoly::add_term(const MultiIndex& alpha, const Complex& c)
{
    if (alpha.dim() != n_) {
        throw std::invalid_argument("SparsePoly: exponent dimension mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void SparsePoly::require_dim(const SparsePoly& o) const
{
    if (o.n_ != n_) {
        throw std::invalid_argument("SparsePoly: dimension mismatch");
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o)
{
    require_dim(o);
    for (const auto& [alpha, c] : o.terms_) {
        add_term(alpha, c);
    }
    canonicalize();
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o)
{
    require_dim(o);
    for (const auto& [alpha, c] : o.terms_) {
        add_term(alpha, -c);
    }
    canonicalize();
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    a.require_dim(b);
    SparsePoly r(a.n_);
    for (const auto& [alpha, c] : a.terms_) {
        for (const auto& [beta, d] : b.terms_) {
            r.add_term(mi_add(alpha, beta), c * d);
        }
    }
    r.canonicalize();
    return r;
}

SparsePoly SparsePoly::scaled(const Complex& c) const
{
    SparsePoly r(n_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [alpha, d] : terms_) {
        r.add_term(alpha, d * c);
    }
    r.canonicalize();
    return r;
}

SparsePoly SparsePoly::negated() const
{
    SparsePoly r(n_);
    for (const auto& [alpha, d] : terms_) {
        r.terms_.emplace(alpha, -d);
    }
    return r;
}

SparsePoly SparsePoly::shifted(const MultiIndex& lambda) const
{
    SparsePoly r(n_);
    for (const auto& [alpha, d] : terms_) {
        r.terms_.emplace(mi_add(alpha, lambda), d);
    }
    return r;
}

SparsePoly SparsePoly::diff(std::size_t i) const
{
    SparsePoly r(n_);
    for (const auto& [alpha, d] : terms_) {
        if (alpha[i] == 0) {
            continue;
        }
        MultiIndex beta = alpha;
        --beta[i];
        r.add_term(beta, d * Complex(Real(static_cast<long>(alpha[i]))));
    }
    return r;
}

SparsePoly SparsePoly::conj() const
{
    SparsePoly r(n_);
    for (const auto& [alpha, d] : terms_) {
        r.terms_.emplace(alpha, d.conj());
    }
    return r;
}

SparsePoly SparsePoly::real_part() const
{
    SparsePoly r(n_);
    for (const auto& [alpha, d] : terms_) {
        r.add_term(alpha, Complex(d.re()));
    }
    return r;
}

SparsePoly SparsePoly::imag_part() const
{
    SparsePoly r(n_);
    for (const auto& [alpha, d] : terms_) {
        r.add_term(alpha, Complex(d.im()));
    }
    return r;
}

std::complex<long double> SparsePoly::eval(const std::vector<long double>& x) const
{
    if (x.size() != n_) {
        throw std::invalid_argument("SparsePoly::eval: point dimension mismatch");
    }
    std::complex<long double> sum = 0;
    for (const auto& [alpha, d] : terms_) {
        long double mono = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            for (unsigned j = 0; j < alpha[i]; ++j) {
                mono *= x[i];
            }
        }
        sum += d.to_ld() * mono;
    }
    return sum;
}

void SparsePoly::canonicalize()
{
    bool any_float = false;
    long double largest = 0;
    for (const auto& [alpha, d] : terms_) {
        if (!d.is_exact()) {
            any_float = true;
        }
        largest = std::max(largest, d.abs_ld());
    }
    if (!any_float) {
        return;
    }
    const long double cut = largest * kFloatDropThreshold;
    for (auto it = terms_.begin(); it != terms_.end();) {
        const Complex& d = it->second;
        if (!d.is_exact() && d.abs_ld() <= cut) {
            it = terms_.erase(it);
            continue;
        }
        if (!d.is_exact()) {
            // Clean up a cancelled real or imaginary part separately.
            Real re = d.re();
            Real im = d.im();
            if (!re.is_exact() && std::fabs(re.to_ld()) <= cut) {
                re = Real(0);
            }
            if (!im.is_exact() && std::fabs(im.to_ld()) <= cut) {
                im = Real(0);
            }
            it->second = Complex(re, im);
        }
        ++it;
    }
}

}  // namespace fsem
