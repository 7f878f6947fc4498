#pragma once

/**
 * @file multi_index.hpp
 * @brief Multi-indices in N^n with the componentwise order, joins and meets.
 *
 * A MultiIndex is an n-tuple of nonnegative integers. It indexes monomials
 * x^alpha, partial derivatives D^beta and the Schwartz seminorms
 * ||f||_{alpha,beta}. The partial order is componentwise:
 *     alpha <= beta  iff  alpha_i <= beta_i for every i.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace fsem {

class MultiIndex {
public:
    MultiIndex() = default;
    /// The zero multi-index of dimension n.
    explicit MultiIndex(std::size_t n) : e_(n, 0) {}
    MultiIndex(std::initializer_list<unsigned> entries) : e_(entries) {}
    explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {}

    std::size_t dim() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& entries() const { return e_; }

    /// |alpha| = sum of entries.
    unsigned order() const;
    bool is_zero() const { return order() == 0; }

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    std::string to_string() const;

private:
    std::vector<unsigned> e_;
};

/// Componentwise alpha <= beta. Throws std::invalid_argument on dimension mismatch.
bool mi_leq(const MultiIndex& alpha, const MultiIndex& beta);
/// Componentwise maximum.
MultiIndex mi_join(const MultiIndex& alpha, const MultiIndex& beta);
/// Componentwise minimum.
MultiIndex mi_meet(const MultiIndex& alpha, const MultiIndex& beta);
MultiIndex mi_add(const MultiIndex& alpha, const MultiIndex& beta);
/// alpha - beta; requires beta <= alpha.
MultiIndex mi_sub(const MultiIndex& alpha, const MultiIndex& beta);
/// Product of binomial coefficients binom(beta_i, k_i); requires k <= beta.
mpz_class mi_binomial(const MultiIndex& beta, const MultiIndex& k);
/// Product of falling factorials lambda_i (lambda_i - 1) ... (lambda_i - d_i + 1),
/// which is zero as soon as some d_i exceeds lambda_i.
mpz_class mi_falling(const MultiIndex& lambda, const MultiIndex& d);
/// Every k with k <= beta, in lexicographic order.
std::vector<MultiIndex> mi_below(const MultiIndex& beta);
/// Every multi-index of dimension n with order at most max_order, ordered by
/// order then lexicographically.
std::vector<MultiIndex> mi_all_up_to(std::size_t n, unsigned max_order);
/// Unit multi-index e_i of dimension n.
MultiIndex mi_unit(std::size_t n, std::size_t i);

}  // namespace fsem
