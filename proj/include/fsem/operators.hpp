#pragma once

/**
 * @file operators.hpp
 * @brief The operator catalogue, closed-form derivatives as linear maps, and
 *        the explicit seminorm bounds of the linear catalogue entries.
 *
 * Catalogue (X is the domain):
 *   diff gamma       D^gamma f                         on S(R^n)
 *   mult g           g f                               on S(R^n)
 *   monomial lambda  x^lambda f                        on S(R^n)
 *   fourier          the Fourier transform             on S(R)
 *   inv_fourier      its inverse                       on S(R)
 *   scale a          a x                               on any space
 *   power m          x^m (entrywise on sequences)      on any space
 *   poly a_1..a_m    a_1 x + ... + a_m x^m             on any space
 *   cross_power m    {t_n^m}                           sigma_rho -> S
 *   identity         x                                 on any space
 *   sum              w_1 T_1 + ... + w_r T_r           shared domain and codomain
 *
 * On sequences, power and poly act on every entry including the constant
 * tail, so a tail c becomes c^m.
 *
 * A LinearMap is a closed-form linear operator: a scaled identity, a
 * diagonal sequence multiplier, a multiplication by a Gaussian polynomial, a
 * linear catalogue operator, or a weighted sum or composition of those.
 */

#include "fsem/gauss_poly.hpp"
#include "fsem/multi_index.hpp"
#include "fsem/number.hpp"
#include "fsem/seminorm.hpp"
#include "fsem/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsem {

enum class OpKind { diff, mult, monomial, fourier, inv_fourier, scale, power, poly, cross_power, identity, sum };

const char* op_kind_name(OpKind kind);

struct OperatorDescriptor {
    OpKind kind = OpKind::identity;
    Space domain = Space::s();
    Space codomain = Space::s();
    MultiIndex gamma;           ///< diff
    GaussPolyFn g;              ///< mult
    MultiIndex lambda;          ///< monomial
    Real a;                     ///< scale
    unsigned m = 1;             ///< power, cross_power; degree of poly
    std::vector<Real> coeffs;   ///< poly: a_1, ..., a_m
    std::vector<Real> weights;  ///< sum
    std::vector<OperatorDescriptor> parts;  ///< sum

    std::string name() const;
};

OperatorDescriptor op_diff(std::size_t n, MultiIndex gamma);
OperatorDescriptor op_mult(GaussPolyFn g);
OperatorDescriptor op_monomial(MultiIndex lambda);
OperatorDescriptor op_fourier();
OperatorDescriptor op_inv_fourier();
OperatorDescriptor op_scale(const Space& X, Real a);
/// P^m on Schwartz space, Q^m on sigma_rho, R^m on S; m >= 1.
OperatorDescriptor op_power(const Space& X, unsigned m);
/// a_1 x + ... + a_m x^m; the list must be nonempty.
OperatorDescriptor op_poly(const Space& X, std::vector<Real> coeffs);
/// Lambda^m : sigma_rho -> S.
OperatorDescriptor op_cross_power(double rho, unsigned m);
OperatorDescriptor op_identity(const Space& X);
/// sum_i w_i T_i; all parts must share domain and codomain.
OperatorDescriptor op_sum(std::vector<Real> weights, std::vector<OperatorDescriptor> parts);

bool op_is_linear(const OperatorDescriptor& od);

/// Exact image T(x). Throws std::invalid_argument when x is not in the domain.
Element op_apply(const OperatorDescriptor& od, const Element& x);

enum class LinearForm { zero, identity_scaled, diagonal, multiply_by, linear_op, sum, compose };

struct LinearMap {
    LinearForm form = LinearForm::zero;
    Space domain = Space::s();
    Space codomain = Space::s();
    Real c;                               ///< identity_scaled
    SeqElement diag;                      ///< diagonal entries d_n (tail = d_n for n past the prefix)
    GaussPolyFn g;                        ///< multiply_by
    std::vector<OperatorDescriptor> op;   ///< linear_op (one entry)
    std::vector<Real> weights;            ///< sum
    std::vector<LinearMap> parts;         ///< sum; compose as {outer, inner}

    std::string to_string() const;
};

LinearMap linmap_zero(const Space& X, const Space& Y);
LinearMap linmap_identity_scaled(const Space& X, Real c);
LinearMap linmap_diagonal(const Space& X, const Space& Y, SeqElement d);
LinearMap linmap_multiply_by(GaussPolyFn g);
/// The operator itself; throws std::invalid_argument unless od is linear.
LinearMap linmap_operator(const OperatorDescriptor& od);

Element linmap_apply(const LinearMap& L, const Element& u);
/// L1 + L2, merged into a closed form where the forms allow it.
LinearMap linmap_add(const LinearMap& L1, const LinearMap& L2);
LinearMap linmap_scale(const Real& a, const LinearMap& L);
/// L2 o L1 (apply L1 first).
LinearMap linmap_compose(const LinearMap& L2, const LinearMap& L1);

/// The catalogue derivative of od at xbar. Linear kinds give the operator
/// itself; P^m at the zero function gives the zero map for m >= 2.
LinearMap analytic_frechet(const OperatorDescriptor& od, const Element& xbar);
/// analytic_frechet(od, xbar) applied to v; throws for v = 0.
Element analytic_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v);

/// q(L u) <= C * sum_{p in family} p(u) for every u in the domain.
struct LinearBound {
    SeminormId target;
    std::vector<SeminormId> family;
    double C = 0;
    std::string rule;
};

/// An explicit bound for a target seminorm q of the codomain.
LinearBound linmap_bound(const LinearMap& L, const SeminormId& q);

/// (I, delta) with max_I p(u) < delta implying max_J q(L u) < epsilon,
/// assembled from linmap_bound.
struct LinearContinuity {
    IndexSet I;
    double delta;
};
LinearContinuity linmap_continuity(const LinearMap& L, const IndexSet& J, double epsilon);

struct BoundPair {
    double lhs = 0;
    double rhs = 0;
    bool holds(double rel = 1e-9) const { return lhs <= rhs * (1 + rel) + 1e-300; }
};

/// ||g f||_{alpha,beta} against sum_{k<=beta} binom(beta,k) ||g||_{0,beta-k} ||f||_{alpha,k}.
BoundPair bound_product(const GaussPolyFn& g, const GaussPolyFn& f, const MultiIndex& alpha,
                        const MultiIndex& beta);
/// ||x^lambda f||_{alpha,beta} against
/// sum_k binom(beta,k) A_k ||f||_{alpha+lambda-beta+k, k}, where A_k is the
/// falling factorial prod_i lambda_i (lambda_i - 1) ... (lambda_i - (beta_i - k_i) + 1).
BoundPair bound_monomial(const GaussPolyFn& f, const MultiIndex& lambda, const MultiIndex& alpha,
                         const MultiIndex& beta);
/// ||u^m||_{alpha,beta} against
/// 2^{m|beta|} max_{gamma<=beta} ||u||_{alpha,gamma} (max_{gamma<=beta} ||u||_{0,gamma})^{m-1}.
BoundPair bound_power(const GaussPolyFn& u, unsigned m, const MultiIndex& alpha, const MultiIndex& beta);

/// For each q in J, checks q(T x) <= C * sum p(x) with the bound of
/// linmap_bound on every sample.
std::vector<CheckReport> linear_bound_check(const OperatorDescriptor& od, const IndexSet& J,
                                            const std::vector<Element>& samples);

}  // namespace fsem
