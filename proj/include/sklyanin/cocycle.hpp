#pragma once

// The 2-cocycle μ on the Klein four-group, cocycle twists of presentations,
// the 2×2 matrix model of the twist, and the isomorphism tables between
// twists for different gradings.

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sklyanin/presentation.hpp"

namespace sklyanin {

/// μ(g1^p g2^q, g1^r g2^s) = (−1)^{ps}.
TowerScalar mu(KleinElement g, KleinElement h);

/// A permutation of {0,1,2,3}; perm[k] is the image of k.
using Permutation = std::array<unsigned, 4>;

Permutation identity_permutation();
Permutation inverse(const Permutation& s);
/// Cycle notation such as {1, 2, 3} for (123).
Permutation cycle(std::initializer_list<unsigned> points);
std::string to_string(const Permutation& s);

class CocycleTable {
 public:
  /// The table of mu.
  static CocycleTable standard();
  static CocycleTable constant_one();

  const TowerScalar& operator()(KleinElement g, KleinElement h) const { return values_[g.index() * 4 + h.index()]; }
  TowerScalar& operator()(KleinElement g, KleinElement h) { return values_[g.index() * 4 + h.index()]; }

  /// μ(g,h)μ(gh,l) = μ(g,hl)μ(h,l) for all 64 triples, and normalization at e.
  bool satisfies_cocycle_identity() const;

  /// (g, h) ↦ μ(τg, τh), with G identified with {0,1,2,3} by e, g1, g2, g1g2.
  CocycleTable permuted(const Permutation& tau) const;

  friend bool operator==(const CocycleTable&, const CocycleTable&) = default;

  nlohmann::json to_json() const;

 private:
  std::array<TowerScalar, 16> values_;
};

/// deg(x_k) = the group element with index perm[k].
struct GradingAssignment {
  Permutation perm = identity_permutation();

  std::array<KleinElement, kGenerators> degrees() const;
  /// The generator that carries the identity degree.
  unsigned identity_generator() const;
  std::string to_string() const;  // e.g. "(g1,e,g2,g1g2)"
};

/// Rewrites each word a1…an with coefficient scaled by Π_k μ(deg(a1…a_{k−1}), deg a_k)^{−1}
/// and renames generators x ↔ v. Throws Inhomogeneous when some relation is
/// not G-homogeneous under `grading`.
Presentation twist_presentation(const Presentation& p, const GradingAssignment& grading, const CocycleTable& table);

/// Closed form of the six twisted Sklyanin relations.
Presentation twisted_sklyanin_presentation(const Parameters& params);

using Matrix2 = std::array<std::array<NcPoly, 2>, 2>;

/// Algebra map v_i ↦ x_i·T(deg x_i) into 2×2 matrices over the untwisted generators,
/// T(e) = 1, T(g1) = diag(1,−1), T(g2) = [[0,1],[1,0]], T(g1g2) = [[0,−1],[1,0]].
Matrix2 matrix_model(const NcPoly& f,
                     const std::array<KleinElement, kGenerators>& degrees = GradingAssignment{}.degrees());

/// The constant matrix T(g).
std::array<std::array<int, 2>, 2> group_matrix(KleinElement g);

struct GradingEnumeration {
  std::vector<GradingAssignment> all;
  std::array<std::vector<GradingAssignment>, 4> classes;  // classes[j]: perm^{-1}(0) = j
};

GradingEnumeration enumerate_gradings();

/// μ2(g,h) = μ1(g,h)·ρ(g)ρ(h)ρ(gh)^{−1} for all g, h.
bool coboundary_equivalent(const CocycleTable& mu1, const CocycleTable& mu2, const std::array<TowerScalar, 4>& rho);

struct CoboundaryRow {
  Permutation sigma;
  std::array<TowerScalar, 4> rho;  // values at e, g1, g2, g1g2
};

/// For each non-identity σ fixing 0, a function ρ relating μ and μ^{(σ^{-1})}.
/// `spec` must contain i.
std::vector<CoboundaryRow> coboundary_table(const FieldSpecPtr& spec);

/// coboundary_equivalent(μ, μ permuted by σ^{-1}, ρ).
bool check_coboundary_row(const CoboundaryRow& row);

struct ScalingRow {
  GradingAssignment grading;
  std::array<TowerScalar, 4> scale;
  Parameters target;
};

/// Gradings for the transpositions (01), (02), (03), the rescaling of v
/// realising the isomorphism, and the resulting parameters. Square roots of
/// α, β, γ must already be in `spec` (MissingRadical otherwise).
std::vector<ScalingRow> scaling_table(const Parameters& params, const FieldSpecPtr& spec);

/// Twists `source` by the grading and μ, substitutes v_i ↦ scale_i v_i, and compares
/// relation spans with `target`. Throws Zero or ZeroDivisor for a non-invertible scale.
bool scaling_isomorphism_check(const Presentation& source, const GradingAssignment& grading,
                               const std::array<TowerScalar, 4>& scale, const Presentation& target);

/// Relation spans agree (quadratic relations, compared in the 16 degree-2 words).
bool span_equal(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b);

}  // namespace sklyanin
