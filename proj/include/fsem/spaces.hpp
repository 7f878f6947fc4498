#pragma once

/**
 * @file spaces.hpp
 * @brief The three concrete spaces and their F-seminorm families.
 *
 *  - Schwartz space S(R^n): elements are Gaussian polynomials, seminorms
 *        ||f||_{alpha,beta} = sup_x |x^alpha D^beta f(x)|.
 *  - sigma_rho (0 < rho < 1): finitely supported real sequences,
 *        ||x||_{rho,k} = |t_k|^rho,   d_rho(x, y) = sum_n |t_n - s_n|^rho.
 *  - The space of all real sequences, written S here as in the literature it
 *    comes from (tag "s"): eventually constant sequences,
 *        ||x||_k = |t_k| / (1 + |t_k|),
 *        d(x, y) = sum_n 2^{-n} |t_n - s_n| / (1 + |t_n - s_n|).
 *
 * Sequence entries are exact rationals and sequence arithmetic is exact.
 * Seminorm values are doubles; the seminorm of an exactly zero entry is
 * exactly 0, which the kernel-direction checks rely on.
 */

#include "fsem/gauss_poly.hpp"
#include "fsem/multi_index.hpp"
#include "fsem/number.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace fsem {

/// Real sequence: prefix entries t_1, ..., t_L followed by a constant tail.
class SeqElement {
public:
    SeqElement() = default;
    explicit SeqElement(std::vector<mpq_class> prefix, mpq_class tail = 0);
    static SeqElement from_ints(const std::vector<long>& prefix, long tail = 0);

    const std::vector<mpq_class>& prefix() const { return prefix_; }
    const mpq_class& tail() const { return tail_; }
    /// Entry t_k for k >= 1.
    const mpq_class& at(std::size_t k) const;
    /// Number of stored prefix entries (entries beyond it equal the tail).
    std::size_t length() const { return prefix_.size(); }
    bool is_zero() const { return prefix_.empty() && tail_ == 0; }

    friend bool operator==(const SeqElement& a, const SeqElement& b)
    {
        return a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
    }

    std::string to_string() const;

private:
    void canonicalize();

    std::vector<mpq_class> prefix_;
    mpq_class tail_ = 0;
};

SeqElement seq_add(const SeqElement& x, const SeqElement& y);
SeqElement seq_sub(const SeqElement& x, const SeqElement& y);
SeqElement seq_scale(const SeqElement& x, const mpq_class& a);
/// Entrywise product, tail included.
SeqElement seq_mul(const SeqElement& x, const SeqElement& y);
/// Entrywise power t_n^m, tail included.
SeqElement seq_pow(const SeqElement& x, unsigned m);
/// Keep entries 1..M, zero elsewhere (tail dropped).
SeqElement seq_truncate(const SeqElement& x, std::size_t M);

enum class SpaceKind { schwartz, sigma_rho, s };

class Space {
public:
    static Space schwartz(std::size_t n);
    /// Throws std::invalid_argument unless 0 < rho < 1.
    static Space sigma_rho(double rho);
    static Space s();

    SpaceKind kind() const { return kind_; }
    std::size_t dim() const { return n_; }
    double rho() const { return rho_; }
    bool is_sequence() const { return kind_ != SpaceKind::schwartz; }
    std::string tag() const;

    friend bool operator==(const Space& a, const Space& b)
    {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.rho_ == b.rho_;
    }

private:
    SpaceKind kind_ = SpaceKind::s;
    std::size_t n_ = 1;
    double rho_ = 0;
};

using Element = std::variant<GaussPolyFn, SeqElement>;

Element zero_element(const Space& X);
/// Membership test: dimension for Schwartz, zero tail for sigma_rho.
bool is_member(const Space& X, const Element& x);
/// Throws std::invalid_argument naming `what` when x is not in X.
void require_member(const Space& X, const Element& x, const char* what);

Element el_add(const Element& x, const Element& y);
Element el_sub(const Element& x, const Element& y);
Element el_neg(const Element& x);
/// a * x; for sequences a float scalar is converted to its exact binary value.
Element el_scale(const Element& x, const Real& a);
bool el_is_zero(const Element& x);
bool el_equal(const Element& x, const Element& y);
std::string el_to_string(const Element& x);

/// Seminorm index: (alpha, beta) on Schwartz space, k >= 1 on sequence spaces.
struct SeminormId {
    MultiIndex alpha;
    MultiIndex beta;
    unsigned k = 0;

    static SeminormId schwartz(MultiIndex alpha, MultiIndex beta) { return {std::move(alpha), std::move(beta), 0}; }
    static SeminormId seq(unsigned k) { return {{}, {}, k}; }
    bool is_schwartz() const { return k == 0; }

    friend bool operator==(const SeminormId& a, const SeminormId& b) = default;
    /// The canonical order (see canonical_less).
    friend bool operator<(const SeminormId& a, const SeminormId& b);
    std::string to_string() const;
};

/// Canonical order: (alpha, beta) by |alpha| + |beta|, then lexicographically;
/// sequence indices ascending.
bool canonical_less(const SeminormId& a, const SeminormId& b);

/// ||f||_{alpha,beta} = sup |x^alpha D^beta f|.
double schwartz_seminorm(const GaussPolyFn& f, const MultiIndex& alpha, const MultiIndex& beta);
/// |t_k|^rho; throws if x has a nonzero tail.
double sigma_seminorm(const SeqElement& x, unsigned k, double rho);
/// d_rho(x, y) = sum |t_n - s_n|^rho; both must have zero tail.
double sigma_metric(const SeqElement& x, const SeqElement& y, double rho);
/// sup_n |t_n| (tail included).
mpq_class p_sup(const SeqElement& x);
/// max_{k <= M} |t_k|.
mpq_class p_sup_prefix(const SeqElement& x, std::size_t M);
/// |t_k| / (1 + |t_k|), computed exactly.
mpq_class s_seminorm_exact(const SeqElement& x, unsigned k);
double s_seminorm(const SeqElement& x, unsigned k);
/// sum 2^{-n} |t_n - s_n| / (1 + |t_n - s_n|), with the geometric tail in closed form.
mpq_class s_metric_exact(const SeqElement& x, const SeqElement& y);
double s_metric(const SeqElement& x, const SeqElement& y);
double s_fnorm(const SeqElement& x);

/// Evaluate the seminorm `id` of the family of X at x.
double seminorm_eval(const Space& X, const SeminormId& id, const Element& x);

/// The first `count` seminorm indices of X in canonical order.
std::vector<SeminormId> enumerate_seminorms(const Space& X, std::size_t count);
/// 1-based position of id in the canonical enumeration of X.
std::size_t seminorm_position(const Space& X, const SeminormId& id);

struct InclusionReport {
    bool passed = true;
    bool member_small = true;      ///< x in sigma_rho
    bool member_large = true;      ///< x in sigma_gamma
    bool termwise_holds = true;    ///< |t_n|^gamma <= |t_n|^rho at every entry
    double sum_rho = 0;            ///< sum |t_n|^rho
    double sum_gamma = 0;          ///< sum |t_n|^gamma
    std::string note;
};

/// Inclusion sigma_rho within sigma_gamma for 0 < rho < gamma < 1, checked on x.
InclusionReport sigma_inclusion_check(const SeqElement& x, double rho, double gamma);

struct ScalingReport {
    bool passed = true;
    std::size_t indices = 0;
    unsigned first_failure = 0;  ///< index of the first violated inequality, 0 if none
    std::string note;
};

/// The scaling inequalities of the sequence-space seminorms ||.||_k:
/// |a| < 1 gives ||ax||_k >= |a| ||x||_k, and |a| >= 1 gives ||ax||_k <= |a| ||x||_k,
/// checked exactly at every prefix index and at the tail.
ScalingReport scaling_property_check(const SeqElement& x, const mpq_class& a);

}  // namespace fsem
