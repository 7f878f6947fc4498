#pragma once

/**
 * @file differentiation.hpp
 * @brief The epsilon-delta verification engine: continuity, Gateaux and
 *        Frechet differentiability checks, the constructive delta recipes,
 *        translation between seminorm neighborhoods and the weighted F-norm,
 *        and the uniqueness, basis-independence and continuity harnesses.
 *
 * Every scalar division of an element (a difference quotient over t, a
 * remainder over max_{p in I} p(u)) is carried out on the element before any
 * seminorm is applied, since F-seminorms are not homogeneous.
 *
 * The (DR) condition "for all u" is probed by sampling: directions are drawn
 * at random and rescaled so that max_{p in I} p(u) lands on delta (1 - 1e-6),
 * on delta / 2, or log-uniformly in [1e-6 delta, delta). These checks refute;
 * the recipes carry the proof.
 *
 * Constructive recipes (m >= 2 throughout):
 *   P^m on S(R^n), f != 0:  (alpha, beta) = join of J, I = {(s, g) <= (alpha, beta)},
 *                           delta = eps / ((m-1) m! ([f] + 1) 2^{(m+1)|beta|}),
 *                           [f] = max ||f^e||_p over e = 1..m and p in I.
 *   P^m on S(R^n), f = 0:   same I, delta = (eps / 2^{m|beta|})^{1/(m-1)}.
 *   Q^m on sigma_rho:       I = {1..M}, delta = eps / (P_M + 1)^{m rho}.
 *   R^m on S:               I = {1..M}, delta = eps / (2 (1 + P_M)^m).
 *   Lambda^m:               I = {1..M}, delta = eps / (1 + P_M)^m.
 * Here M is the largest index in J and P_M = max_{k <= M} |t_k|. The recipes
 * that need eps < 1 are applied at min(eps, 1/2) when eps is larger, which
 * only shrinks delta. Linear operators have a zero remainder and use
 * delta = eps with the default index set.
 *
 * Continuity recipes:
 *   Q^m: I = {1..M}, delta = eps / (m (P + 1)^{m-1} (eps + 1)), P = sup_n |t_n|.
 *   R^m: I = {1..M}, delta = eps / ((1 + 2 P_M)^m (eps + 1)).
 *   linear operators: the explicit bound of linmap_continuity.
 * Anything else falls back to a searched delta: start at 1 and halve until a
 * full sample batch passes, giving up below 1e-12.
 */

#include "fsem/operators.hpp"
#include "fsem/random.hpp"
#include "fsem/seminorm.hpp"
#include "fsem/spaces.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fsem {

/// Residuals at or below this count as exactly zero.
inline constexpr double kExactnessTolerance = 1e-12;
/// Witnesses keep at most this many samples (the full count is recorded).
inline constexpr std::size_t kStoredSamples = 100;
/// The searched delta gives up below this value.
inline constexpr double kSearchFloor = 1e-12;

/// t = +-10^{-k}, k = 1..8, ordered by decreasing |t| with + before -.
std::vector<Real> default_t_schedule();

/// The default index set on the domain X covering the codomain set J:
/// {1..M} on sequence spaces, the downward closure of the join on Schwartz space.
IndexSet default_index_set(const Space& X, const IndexSet& J);

// ---------------------------------------------------------------- Gateaux

/// max_{q in J} q((T(x + t v) - T(x) - t L(v)) / t) under the given codomain family.
double gateaux_residual(const OperatorDescriptor& od, const Element& xbar, const Element& v, const LinearMap& L,
                        const Real& t, const IndexSet& J, const SeminormFamily& fam);
double gateaux_residual(const OperatorDescriptor& od, const Element& xbar, const Element& v, const LinearMap& L,
                        const Real& t, const IndexSet& J);

struct GateauxRow {
    Real t;
    double residual = 0;
};

struct GateauxWitness {
    IndexSet J;
    double epsilon = 0;
    double delta = 0;  ///< 0 when no schedule tail stays below epsilon
    std::vector<GateauxRow> schedule{};
    bool monotone = false;
    bool passed = false;
    std::string detail{};
};

/// Evaluates the residual along the schedule (nonzero t with nonincreasing
/// |t|). delta is the largest |t| from which every later residual is below
/// epsilon; the witness passes when such a delta exists and the residuals
/// of each sign are nonincreasing from there on.
GateauxWitness verify_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                              const LinearMap& L, const IndexSet& J, double epsilon,
                              const std::vector<Real>& schedule, const SeminormFamily& fam);
GateauxWitness verify_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                              const LinearMap& L, const IndexSet& J, double epsilon,
                              const std::vector<Real>& schedule = default_t_schedule());

struct GateauxEstimate {
    Element estimate;  ///< the quotient (T(x + t v) - T(x)) / t at the smallest positive t
    Real t_min;
    /// For each q in J: q(quotient(t_i) - quotient(t_{i+1})) along the positive t.
    std::vector<std::pair<SeminormId, std::vector<double>>> successive_gaps{};
    bool converging = false;  ///< every gap sequence is nonincreasing
};

GateauxEstimate estimate_gateaux(const OperatorDescriptor& od, const Element& xbar, const Element& v,
                                 const IndexSet& J, const std::vector<Real>& schedule = default_t_schedule());

// ---------------------------------------------------------------- Frechet

/// max_{q in J} q((T(x + u) - T(x) - L(u)) / max_{p in I} p(u)).
/// Throws std::invalid_argument when max_{p in I} p(u) = 0.
double dr_ratio(const OperatorDescriptor& od, const Element& xbar, const Element& u, const LinearMap& L,
                const IndexSet& I, const IndexSet& J);

/// max_{q in J} q(T(x + u) - T(x) - L(u)).
double remainder_max(const OperatorDescriptor& od, const Element& xbar, const Element& u, const LinearMap& L,
                     const IndexSet& J);

/// A neighborhood choice (I, delta) and where it came from.
struct DeltaChoice {
    IndexSet I;
    double delta = 0;
    std::string recipe;  ///< "5.9", "5.16", "6.4", "7.2", "8.1", "6.3", "7.1", "linear", "linear-bound", "searched", "fixed"
    std::string source;  ///< "constructive", "searched" or "fixed"
};

/// The constructive Frechet recipe for od at xbar, if it has one.
std::optional<DeltaChoice> delta_constructor(const OperatorDescriptor& od, const Element& xbar, const IndexSet& J,
                                             double epsilon);

enum class DeltaSource { constructive, searched, fixed };

struct VerifyOptions {
    DeltaSource source = DeltaSource::constructive;
    std::optional<DeltaChoice> fixed;  ///< required for DeltaSource::fixed
    std::size_t samples = 500;         ///< (DR) samples, or continuity samples
    std::size_t kernel_samples = 50;   ///< (DZ) samples on sequence spaces
    Sampler sampler;                   ///< directions; random_element of the domain when empty
};

struct DzSample {
    Element u;
    double residual = 0;
};

struct DrSample {
    Element u;
    double pmax = 0;
    double ratio = 0;
};

struct FrechetWitness {
    IndexSet J;
    double epsilon = 0;
    DeltaChoice choice;
    std::vector<DzSample> dz_samples{};  ///< at most kStoredSamples
    std::vector<DrSample> dr_samples{};  ///< at most kStoredSamples
    std::size_t dz_count = 0;
    std::size_t dr_count = 0;
    std::size_t dz_failures = 0;
    std::size_t dr_failures = 0;
    double dz_max = 0;
    double dr_max = 0;
    double dr_mean = 0;
    std::optional<Element> counterexample{};
    bool passed = false;
    std::string detail{};
};

FrechetWitness verify_frechet(const OperatorDescriptor& od, const Element& xbar, const LinearMap& L,
                              const IndexSet& J, double epsilon, Rng& rng, const VerifyOptions& opt = {});

/// Searched Frechet delta: halve from 1 until a batch of dr ratios passes.
std::optional<DeltaChoice> search_frechet_delta(const OperatorDescriptor& od, const Element& xbar,
                                                const LinearMap& L, const IndexSet& J, double epsilon, Rng& rng,
                                                const VerifyOptions& opt);

// ------------------------------------------------------------- continuity

struct ContinuitySample {
    Element x;
    double pmax = 0;   ///< max_{p in I} p(x - x0)
    double value = 0;  ///< max_{q in J} q(T(x) - T(x0))
};

struct ContinuityWitness {
    IndexSet J;
    double epsilon = 0;
    DeltaChoice choice;
    std::vector<ContinuitySample> samples{};  ///< at most kStoredSamples
    std::size_t count = 0;
    std::size_t failures = 0;
    double max_value = 0;
    double mean_value = 0;
    std::optional<Element> counterexample{};
    bool passed = false;
    std::string detail{};
};

/// The constructive continuity recipe for od at x0, if it has one.
std::optional<DeltaChoice> continuity_delta(const OperatorDescriptor& od, const Element& x0, const IndexSet& J,
                                            double epsilon);

ContinuityWitness continuity_verify(const OperatorDescriptor& od, const Element& x0, const IndexSet& J,
                                    double epsilon, Rng& rng, const VerifyOptions& opt = {});

// ------------------------------------------------- F-norm translation

/// Smallest M >= 1 with sum_{j > M} 2^{-j} = 2^{-M} strictly below eps / 2.
/// Throws std::invalid_argument when eps / 2 exceeds the total weight 1
/// (no seminorm would be needed, so no index set exists).
std::size_t fnorm_tail_cutoff(double epsilon);
/// a delta1 / (1 + delta1).
double fnorm_forward_delta(double a, double delta1);
/// b eps / (1 + eps).
double fnorm_backward_epsilon(double b, double epsilon);

/// From neighborhoods to the F-norm: the index set J = {first M codomain
/// seminorms}, eps1 = eps / (2B), the continuity choice (I, delta1) for
/// (J, eps1), a = min_{i in I} a_i and delta = a delta1 / (1 + delta1).
struct FNormForward {
    std::size_t M = 0;
    double B = 1;
    double epsilon = 0;
    double epsilon1 = 0;
    IndexSet J;
    DeltaChoice inner;
    double a = 0;
    double delta = 0;
};

FNormForward fnorm_translate_forward(const OperatorDescriptor& od, const Element& x0, double epsilon, Rng& rng,
                                     const VerifyOptions& opt = {});

/// Samples x with p_X(x - x0) < delta and checks q_Y(T(x) - T(x0)) < eps.
CheckReport fnorm_forward_check(const OperatorDescriptor& od, const Element& x0, const FNormForward& fwd, Rng& rng,
                                std::size_t samples);

/// From the F-norm back to neighborhoods: b = min_{j in J} b_j,
/// eps1 = b eps / (1 + eps), delta1 from the forward translation at eps1,
/// N the smallest index with 2^{-N} < delta1 / 2, I = {first N domain
/// seminorms} and delta = delta1 / (2A) with A = 1.
struct FNormBackward {
    IndexSet J;
    double epsilon = 0;
    double b = 0;
    double epsilon1 = 0;
    double delta1 = 0;
    std::size_t N = 0;
    double A = 1;
    DeltaChoice choice;
};

FNormBackward fnorm_translate_backward(const OperatorDescriptor& od, const Element& x0, const IndexSet& J,
                                       double epsilon, Rng& rng, const VerifyOptions& opt = {});

// ------------------------------------------------------------ harnesses

struct UniquenessReport {
    double max_gap = 0;  ///< max over w and q in J of q(L1 w - L2 w)
    std::size_t directions = 0;
    std::optional<Element> witness;
    std::optional<SeminormId> seminorm;
    bool coincide = true;
};

UniquenessReport uniqueness_probe(const LinearMap& L1, const LinearMap& L2, const IndexSet& J,
                                  const std::vector<Element>& directions);

struct BasisIndependenceReport {
    GateauxWitness base;
    GateauxWitness rescaled;
    bool agree = false;  ///< both witnesses reach the same verdict
    bool passed = false; ///< both witnesses pass
};

/// verify_gateaux with the same candidate under the codomain family and
/// under {c(q) q}; c must take values in [1, 2].
BasisIndependenceReport basis_independence_check(const OperatorDescriptor& od, const Element& xbar,
                                                 const Element& v, const LinearMap& L, const IndexSet& J,
                                                 double epsilon, const std::function<double(const SeminormId&)>& c,
                                                 const std::vector<Real>& schedule = default_t_schedule());

struct ContinuityFromFrechet {
    FrechetWitness frechet;
    LinearContinuity linear;
    ContinuityWitness continuity;
    bool passed = false;
};

/// For each (J, eps): a Frechet choice (I1, delta1) at eps / 2 and the
/// continuity choice (I2, delta2) of the derivative at eps / 2, both capped
/// below 1; then continuity of od at xbar is checked on I1 u I2 with
/// delta = min(delta1, delta2).
std::vector<ContinuityFromFrechet> frechet_implies_continuity_check(
    const OperatorDescriptor& od, const Element& xbar, const std::vector<std::pair<IndexSet, double>>& configs,
    Rng& rng, const VerifyOptions& opt = {});

// -------------------------------------------------------------- sampling

/// Rescale u so that max_{p in I} p(u) is close to target (> 0); nullopt when
/// max_{p in I} p(u) = 0.
std::optional<Element> scale_to_level(const SeminormFamily& fam, const Element& u, const IndexSet& I, double target);

/// An element of the common kernel of I: on sequence spaces a nonzero
/// sequence supported past the largest index of I, on Schwartz space the
/// zero function.
Element kernel_sample(const Space& X, const IndexSet& I, Rng& rng);

}  // namespace fsem
