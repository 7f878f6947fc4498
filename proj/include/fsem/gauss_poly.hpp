#pragma once

/**
 * @file gauss_poly.hpp
 * @brief Exact calculus on finite sums of polynomial-times-Gaussian terms.
 *
 * A GaussPolyFn is
 *     f(x) = sum_k q_k(x) * exp(-(a_k1 x_1^2 + ... + a_kn x_n^2))
 * with every decay rate a_ki > 0. The class is closed under addition,
 * scaling, multiplication, powers, monomial multiplication, partial
 * derivatives and (for n = 1) the Fourier transform, so it models the
 * Schwartz-space elements the verification engine works with.
 *
 * Canonical form: terms with equal decay vectors are merged, zero
 * polynomials are dropped and terms are sorted by decay vector. The zero
 * function has no terms. Exact decays compare exactly; a float decay merges
 * with another decay when they agree to a relative kDecayMergeTolerance.
 *
 * Derivative rule used throughout:
 *     d/dx_i [q e^{-sum a x^2}] = (d/dx_i q - 2 a_i x_i q) e^{-sum a x^2}.
 */

#include "fsem/multi_index.hpp"
#include "fsem/number.hpp"
#include "fsem/sparse_poly.hpp"

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsem {

/// Relative tolerance under which two float decay rates are the same rate.
inline constexpr long double kDecayMergeTolerance = 1e-12L;

/// Raised for operations the library deliberately does not cover.
class FeatureGap : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct GaussPolyTerm {
    SparsePoly poly;
    std::vector<Real> decay;
};

class GaussPolyFn {
public:
    /// The zero function in dimension n.
    explicit GaussPolyFn(std::size_t n = 1) : n_(n) {}
    /// Build from terms; validates decays and canonicalizes.
    GaussPolyFn(std::size_t n, std::vector<GaussPolyTerm> terms);

    std::size_t dim() const { return n_; }
    const std::vector<GaussPolyTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const;
    bool is_real() const;
    /// Largest total degree over all terms (-1 for zero).
    int degree() const;

    friend bool operator==(const GaussPolyFn& a, const GaussPolyFn& b);

    std::string to_string() const;

private:
    void canonicalize();

    std::size_t n_;
    std::vector<GaussPolyTerm> terms_;
};

/// exp(-a |x|^2) in dimension n (isotropic decay a > 0).
GaussPolyFn gp_gaussian(std::size_t n, const Real& a);
/// poly(x) * exp(-sum decay_i x_i^2).
GaussPolyFn gp_make(const SparsePoly& poly, const std::vector<Real>& decay);
/// One-dimensional shorthand: (c_0 + c_1 x + ... ) * exp(-a x^2).
GaussPolyFn gp_univariate(const std::vector<Real>& coeffs, const Real& a);

GaussPolyFn gp_add(const GaussPolyFn& f, const GaussPolyFn& g);
GaussPolyFn gp_sub(const GaussPolyFn& f, const GaussPolyFn& g);
GaussPolyFn gp_neg(const GaussPolyFn& f);
GaussPolyFn gp_scale(const GaussPolyFn& f, const Complex& c);
GaussPolyFn gp_mul(const GaussPolyFn& f, const GaussPolyFn& g);
/// f^m; m = 0 is rejected because constants are not in the class.
GaussPolyFn gp_pow(const GaussPolyFn& f, unsigned m);
/// x^lambda * f.
GaussPolyFn gp_monomial_mul(const GaussPolyFn& f, const MultiIndex& lambda);
/// D^beta f.
GaussPolyFn gp_diff(const GaussPolyFn& f, const MultiIndex& beta);
GaussPolyFn gp_conj(const GaussPolyFn& f);
GaussPolyFn gp_real_part(const GaussPolyFn& f);
GaussPolyFn gp_imag_part(const GaussPolyFn& f);

struct LeibnizExpansion {
    GaussPolyFn value;
    /// Number of Gaussian-term products formed before merging.
    std::size_t raw_terms = 0;
};

/// sum over k <= beta of binom(beta,k) (D^{beta-k} g)(D^k f).
LeibnizExpansion leibniz_expand(const GaussPolyFn& g, const GaussPolyFn& f, const MultiIndex& beta);

/// Pointwise value f(x).
std::complex<long double> gp_eval(const GaussPolyFn& f, const std::vector<long double>& x);

/// Fourier transform f^(xi) = integral f(t) e^{-i 2 pi t xi} dt (n = 1 only).
GaussPolyFn gp_fourier(const GaussPolyFn& f);
/// Inverse transform integral g(xi) e^{i 2 pi x xi} dxi (n = 1 only).
GaussPolyFn gp_inv_fourier(const GaussPolyFn& g);

/// Largest coefficient gap |c_f - c_g| after matching terms by decay (decays
/// within kDecayMergeTolerance match). Unmatched terms count in full.
long double gp_max_coef_diff(const GaussPolyFn& f, const GaussPolyFn& g);

}  // namespace fsem
