#pragma once

/**
 * @file seminorm.hpp
 * @brief F-seminorm families, finite index sets, neighborhoods, the F-norm
 *        built from weights, and the axiom and neighborhood-algebra checkers.
 *
 * An F-seminorm p satisfies
 *   (i)   p(x) >= 0,
 *   (ii)  p(x + y) <= p(x) + p(y),
 *   (iii) p(ax) <= p(x) for |a| <= 1,
 *   (iv)  p(a_n x) -> 0 whenever a_n -> 0 (a_n > 0),
 * and consequently
 *   (v)   p(0) = 0,               (vi)  p(-x) = p(x),
 *   (vii) p(nx) <= n p(x) and p(x) >= p(x/n) >= p(x)/n,
 *   (viii) |a| <= |b| gives p(ax) <= p(bx),
 *   (ix)  p(x) = 0 gives p(ax) = 0 for every a.
 * The checkers sample these properties; they refute, they do not prove.
 *
 * Neighborhoods are open: U_{I,delta}(x0) = {x : max_{p in I} p(x - x0) < delta}.
 */

#include "fsem/random.hpp"
#include "fsem/spaces.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fsem {

/// A named F-seminorm candidate (the checkers also accept non-examples).
struct FSeminorm {
    std::string name;
    std::function<double(const Element&)> eval;
};

/// The F-seminorm family of a space, optionally rescaled member by member
/// (c_id * p_id), with F-norm weights a_i = 2^{-i} along the canonical order.
class SeminormFamily {
public:
    explicit SeminormFamily(Space X) : space_(std::move(X)) {}

    const Space& space() const { return space_; }
    /// The family {c(id) * p_id}; c must be positive.
    SeminormFamily rescaled(std::function<double(const SeminormId&)> c) const;
    bool is_rescaled() const { return static_cast<bool>(scale_); }
    double scale(const SeminormId& id) const { return scale_ ? scale_(id) : 1.0; }

    double eval(const SeminormId& id, const Element& x) const;
    FSeminorm member(const SeminormId& id) const;
    std::vector<SeminormId> enumerate(std::size_t count) const { return enumerate_seminorms(space_, count); }
    /// a_i = 2^{-i} where i is the 1-based canonical position of id.
    double weight(const SeminormId& id) const;
    /// All three concrete families separate points.
    bool separating() const { return true; }

private:
    Space space_;
    std::function<double(const SeminormId&)> scale_;
};

/// A nonempty finite set of seminorm indices, kept sorted and duplicate free.
class IndexSet {
public:
    explicit IndexSet(std::vector<SeminormId> ids);
    /// {1, ..., M} on a sequence space.
    static IndexSet prefix(std::size_t M);
    /// {(sigma, gamma) : sigma <= alpha, gamma <= beta} on Schwartz space.
    static IndexSet schwartz_below(const MultiIndex& alpha, const MultiIndex& beta);

    const std::vector<SeminormId>& members() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool contains(const SeminormId& id) const;
    bool subset_of(const IndexSet& other) const;
    /// Largest sequence index (0 for Schwartz indices).
    unsigned max_k() const;
    /// Componentwise join of all (alpha, beta) pairs.
    SeminormId schwartz_join() const;
    std::string to_string() const;

    friend IndexSet index_union(const IndexSet& a, const IndexSet& b);
    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.ids_ == b.ids_; }

private:
    std::vector<SeminormId> ids_;
};

struct Neighborhood {
    Neighborhood(Element center, IndexSet index_set, double radius);

    Element center;
    IndexSet index_set;
    double radius;
};

/// max_{p in I} p(x).
double family_max(const SeminormFamily& fam, const Element& x, const IndexSet& I);
/// Strict membership: family_max(x - center, I) < radius.
bool nbhd_contains(const SeminormFamily& fam, const Neighborhood& nb, const Element& x);

struct FNormValue {
    double value = 0;
    double tail_bound = 0;  ///< 0 when the tail is summed in closed form
};

/// sum_i a_i p_i(x) / (1 + p_i(x)) with a_i = 2^{-i}. Sequence spaces sum the
/// tail in closed form; Schwartz space truncates after kSchwartzFNormTerms
/// members and reports the (at most 2^{-N}) remainder bound.
inline constexpr std::size_t kSchwartzFNormTerms = 40;
FNormValue f_norm(const SeminormFamily& fam, const Element& x);

struct CheckReport {
    std::string check;
    bool passed = true;
    std::optional<Element> counterexample;
    std::size_t samples = 0;
    double tolerance = 0;
    std::string detail;
};

struct AxiomReport {
    std::string seminorm;
    std::vector<CheckReport> checks;
    bool passed() const;
    const CheckReport& get(const std::string& check) const;
};

using Sampler = std::function<Element(Rng&)>;

struct AxiomOptions {
    std::size_t samples = 1000;
    /// Scalars a_n of the limit axiom (iv); must be positive and decreasing.
    std::vector<Real> schedule;
    /// The limit run must be nonincreasing from this 1-based schedule position on.
    std::size_t monotone_from = 5;
    /// Final value bound for (iv), relative to max(1, p(x)).
    double final_tolerance = 1e-9;
    /// Relative slack for the float comparisons in (ii), (iii), (vi)-(viii).
    double rel_tolerance = 1e-9;
    /// Run the (iv) schedule on samples i with i % stride == offset.
    std::size_t schedule_stride = 1;
    std::size_t schedule_offset = 0;
};

/// a_n = 2^{-n}, n = 1..N.
std::vector<Real> dyadic_schedule(std::size_t N);
/// The default (iv) schedule for X: N = 40, or ceil(40 / rho) on sigma_rho so
/// that the last value |t|^rho 2^{-N rho} also falls below 1e-9 there.
std::vector<Real> default_schedule(const Space& X);

AxiomReport axiom_report(const FSeminorm& p, const Sampler& sampler, Rng& rng, const AxiomOptions& opt);

/// Neighborhood algebra on samples: monotone in radius (iii),
/// antitone in the index set (iv), union equals intersection (v) and
/// U_{I,l1} + U_{I,l2} inside U_{I,l1+l2} (vi).
std::vector<CheckReport> nbhd_algebra_check(const SeminormFamily& fam, const std::vector<Element>& samples,
                                            const IndexSet& I, const IndexSet& K, double lambda);

/// A seminorm of the family that is positive at x, searched in canonical
/// order (sequence spaces: indices up to the prefix length plus one).
std::optional<std::pair<SeminormId, double>> separating_witness(const SeminormFamily& fam, const Element& x);
CheckReport separating_check(const SeminormFamily& fam, const std::vector<Element>& samples);

}  // namespace fsem
