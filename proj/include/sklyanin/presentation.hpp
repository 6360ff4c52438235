#pragma once

// Graded presentations: four generators, their Klein-four degrees, and
// homogeneous relations. Sklyanin algebras and their central elements.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sklyanin/ncpoly.hpp"

namespace sklyanin {

struct Parameters {
  TowerScalar alpha;
  TowerScalar beta;
  TowerScalar gamma;
};

/// α = −(β+γ)/(1+βγ). Throws DegenerateParameter when βγ = −1.
Parameters derive_parameters(const TowerScalar& beta, const TowerScalar& gamma);

struct ParameterCheck {
  std::vector<ErrorCode> issues;  // ConstraintViolated and/or DegenerateParameter
  bool ok() const { return issues.empty(); }
};

/// α+β+γ+αβγ = 0 and none of α, β, γ in {0, 1, −1}.
ParameterCheck validate_parameters(const Parameters& params);

struct Presentation {
  char prefix = 'x';
  std::array<KleinElement, kGenerators> g_degrees{KleinElement::e(), KleinElement::g1(), KleinElement::g2(),
                                                   KleinElement::g1g2()};
  std::vector<NcPoly> relations;
  std::optional<Parameters> params;

  /// Largest relation degree (0 for a free algebra).
  std::size_t max_relation_degree() const;
};

/// A(α, β, γ) with the standard grading x0 ↦ e, x1 ↦ g1, x2 ↦ g2, x3 ↦ g1g2.
/// Throws the first issue reported by validate_parameters.
Presentation sklyanin_presentation(const Parameters& params);

/// p with `extra` appended to its relations. Throws Inhomogeneous.
Presentation quotient(const Presentation& p, const std::vector<NcPoly>& extra);

/// Central elements of A(α, β, γ).
NcPoly omega1(const Parameters& params);
NcPoly omega2(const Parameters& params);
/// Central elements of the twist.
NcPoly theta1(const Parameters& params);
NcPoly theta2(const Parameters& params);

nlohmann::json to_json(const Presentation& p);
/// Scalars are parsed in `spec`; unknown symbols throw UnknownSymbol.
Presentation presentation_from_json(const nlohmann::json& j, const FieldSpecPtr& spec);

}  // namespace sklyanin
