#pragma once

/**
 * @file io.hpp
 * @brief JSON encoding of scalars, elements, spaces, operators, index sets,
 *        linear maps and verification results.
 *
 * Scalars: exact values are written as strings ("3/4", "0.125") so that they
 * round-trip losslessly; float values are written as JSON numbers. On input a
 * string is parsed exactly and a number is read from its decimal text, so a
 * config value 0.1 means the rational 1/10.
 *
 * Elements:
 *   Gaussian polynomial  {"n": 1, "terms": [{"decay": [a...], "poly": [{"exp": [k...], "re": c, "im": c}]}]}
 *                        or the one-dimensional shorthand {"coeffs": [c0, c1, ...], "decay": a}
 *   sequence             {"prefix": [t...], "tail": c}, or a bare array of prefix entries
 * Spaces:      {"space": "schwartz" | "sigma_rho" | "s", "n": int, "rho": float}
 * Operators:   {"kind": string, "params": {...}, "domain": space, "codomain": space}
 * Index sets:  sequence spaces [k...] or {"prefix": M};
 *              Schwartz space [{"alpha": [...], "beta": [...]}...] or {"below": {"alpha": [...], "beta": [...]}}
 * Linear maps: {"form": "zero" | "identity_scaled" | "diagonal" | "multiply_by" | "operator", ...}
 *
 * Every parser throws ConfigError naming the offending field path.
 */

#include "fsem/differentiation.hpp"
#include "fsem/operators.hpp"
#include "fsem/order.hpp"
#include "fsem/seminorm.hpp"
#include "fsem/spaces.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace fsem {

using json = nlohmann::json;

/// A malformed config; field() is the JSON path of the offending value.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field))
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

json real_to_json(const Real& x);
Real real_from_json(const json& j, const std::string& path);

json gauss_to_json(const GaussPolyFn& f);
GaussPolyFn gauss_from_json(const json& j, const std::string& path);

json seq_to_json(const SeqElement& x);
SeqElement seq_from_json(const json& j, const std::string& path);

json element_to_json(const Element& x);
/// Parses an element of X and checks membership.
Element element_from_json(const json& j, const Space& X, const std::string& path);

json space_to_json(const Space& X);
Space space_from_json(const json& j, const std::string& path);

json operator_to_json(const OperatorDescriptor& od);
OperatorDescriptor operator_from_json(const json& j, const std::string& path);

json seminorm_id_to_json(const SeminormId& id);
json index_set_to_json(const IndexSet& I);
IndexSet index_set_from_json(const json& j, const Space& X, const std::string& path);

json linmap_to_json(const LinearMap& L);
/// Candidate maps from the domain of od into its codomain.
LinearMap linmap_from_json(const json& j, const OperatorDescriptor& od, const std::string& path);

json check_to_json(const CheckReport& r);
json axiom_to_json(const AxiomReport& r);
json delta_choice_to_json(const DeltaChoice& c);
json gateaux_to_json(const GateauxWitness& w);
json frechet_to_json(const FrechetWitness& w);
json continuity_to_json(const ContinuityWitness& w);
json fnorm_forward_to_json(const FNormForward& f);
json fnorm_backward_to_json(const FNormBackward& b);
json order_case_to_json(const OrderCaseResult& r);

/// Typed field access for config objects.
const json& require_field(const json& obj, const std::string& key, const std::string& path);
double number_field(const json& obj, const std::string& key, const std::string& path);
std::size_t count_field(const json& obj, const std::string& key, const std::string& path, std::size_t fallback);

}  // namespace fsem
