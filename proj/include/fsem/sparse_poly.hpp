#pragma once

/**
 * @file sparse_poly.hpp
 * @brief Sparse multivariate polynomials with exact-or-float complex coefficients.
 *
 * Terms are kept in a map from exponent MultiIndex to Complex coefficient. Zero
 * coefficients are never stored. Coefficients on the float branch whose
 * magnitude falls below kFloatDropThreshold times the largest coefficient of
 * the polynomial are dropped during canonicalization, so that float
 * cancellation residue does not masquerade as structure.
 */

#include "fsem/multi_index.hpp"
#include "fsem/number.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

namespace fsem {

/// Relative size below which float coefficients are treated as cancelled.
inline constexpr long double kFloatDropThreshold = 1e-12L;

class SparsePoly {
public:
    using TermMap = std::map<MultiIndex, Complex>;

    SparsePoly() = default;
    explicit SparsePoly(std::size_t n) : n_(n) {}
    /// The constant polynomial c.
    static SparsePoly constant(std::size_t n, const Complex& c);
    /// The monomial c * x^alpha.
    static SparsePoly monomial(const MultiIndex& alpha, const Complex& c);

    std::size_t dim() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Largest exponent of x_i appearing; -1 for the zero polynomial.
    int degree_in(std::size_t i) const;
    bool is_exact() const;
    bool is_real() const;
    /// Coefficient of x^alpha (zero when absent).
    Complex coeff(const MultiIndex& alpha) const;

    /// Add c * x^alpha in place.
    void add_term(const MultiIndex& alpha, const Complex& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly scaled(const Complex& c) const;
    SparsePoly negated() const;
    /// x^lambda * p.
    SparsePoly shifted(const MultiIndex& lambda) const;
    /// Partial derivative in x_i.
    SparsePoly diff(std::size_t i) const;
    SparsePoly conj() const;
    SparsePoly real_part() const;
    SparsePoly imag_part() const;

    std::complex<long double> eval(const std::vector<long double>& x) const;

    /// Drop cancelled float coefficients (see kFloatDropThreshold).
    void canonicalize();

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    void require_dim(const SparsePoly& o) const;

    std::size_t n_ = 1;
    TermMap terms_;
};

}  // namespace fsem
