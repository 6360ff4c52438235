#pragma once

// Point schemes of quadratic presentations: multilinearizations, the
// coefficient matrix M(p) whose kernel is the successor of p, the explicit
// points of the twisted Sklyanin point scheme, the G-action and orbits, and
// the elliptic curve E.

#include <array>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sklyanin/linalg.hpp"
#include "sklyanin/presentation.hpp"

namespace sklyanin {

/// Projective point in P^3; scaled so the first nonzero coordinate is 1 whenever
/// that coordinate is invertible.
class Point {
 public:
  /// Throws Precondition for the zero vector.
  explicit Point(std::array<TowerScalar, 4> coords);

  static Point basis(std::size_t j);

  const std::array<TowerScalar, 4>& coords() const { return coords_; }
  const TowerScalar& operator[](std::size_t k) const { return coords_[k]; }
  std::size_t nonzero_count() const;

  /// All 2×2 cross-products vanish.
  friend bool operator==(const Point& a, const Point& b);

  std::vector<std::string> to_strings() const;

 private:
  std::array<TowerScalar, 4> coords_;
};

/// forms[k][i][j] is the coefficient of p_i q_j in the k-th bilinear form.
struct MultilinearSystem {
  std::vector<std::array<std::array<TowerScalar, 4>, 4>> forms;

  TowerScalar evaluate(std::size_t k, const std::array<TowerScalar, 4>& p, const std::array<TowerScalar, 4>& q) const;
};

/// Each relation Σ c_ab x_a x_b becomes Σ c_ab p_a q_b. Throws NotQuadratic.
MultilinearSystem multilinearize(const Presentation& p);

/// M(p)[k][j] = Σ_i forms[k][i][j] p_i, so M(p)·q = 0 iff (p, q) is on the graph.
Matrix<TowerScalar> coefficient_matrix(const MultilinearSystem& s, const std::array<TowerScalar, 4>& p);
inline Matrix<TowerScalar> coefficient_matrix(const MultilinearSystem& s, const Point& p) {
  return coefficient_matrix(s, p.coords());
}

/// The unique q with M(p)·q = 0. Throws KernelDimZero or KernelDimHigh.
Point successor(const MultilinearSystem& s, const Point& p);

/// A point together with the successor the closed form predicts for it.
struct PointPair {
  Point point;
  Point successor;
};

/// The 16 points off the coordinate axes, paired with their predicted successors.
/// Needs square roots of α, β, γ in `spec` (MissingRadical otherwise) and i.
std::vector<PointPair> twisted_point_pairs(const Parameters& params, const FieldSpecPtr& spec);

/// e0..e3 followed by the 16 points of twisted_point_pairs.
std::vector<Point> known_points(const Parameters& params, const FieldSpecPtr& spec);

/// p^g: coordinate j is multiplied by χ_{deg x_j}(g).
Point g_action(const Point& p, KleinElement g);
std::array<TowerScalar, 4> g_action(const std::array<TowerScalar, 4>& p, KleinElement g);

struct Orbit {
  std::vector<Point> members;
  /// h with successor(q) = q^h for every member; set only for orbits of size 4.
  std::optional<KleinElement> label;
};

struct OrbitReport {
  std::vector<Orbit> orbits;
  std::size_t fixed_points = 0;  // points with successor(p) = p
};

/// Partitions `points` into G-orbits. Throws NotActionClosed.
OrbitReport orbit_report(const std::vector<Point>& points, const MultilinearSystem& s);

/// λ1 = (1−γ)/(1+α), λ2 = (1+γ)/(1−β).
std::pair<TowerScalar, TowerScalar> curve_lambdas(const Parameters& params);

/// y0²+y1²+y2²+y3² = 0 and y3² + λ1 y1² + λ2 y2² = 0.
bool curve_membership(const Point& p, const Parameters& params);

struct CurvePoint {
  FieldSpecPtr spec;  // `spec` extended by whatever square roots were needed
  Point point;
};

/// The point (1, seed, p2, p3) on E, solving the quadrics for p2², p3². The seed
/// must be rational. Throws Precondition when the result has fewer than three
/// nonzero coordinates.
CurvePoint curve_point(const Parameters& params, const TowerScalar& seed, const FieldSpecPtr& spec);

struct ZeroPatternResult {
  std::array<std::size_t, 2> nonzero;     // positions of the two indeterminate coordinates
  bool ok = false;
  std::array<std::size_t, 4> rows{};      // a witnessing 4×4 minor
  std::size_t exponent = 0;               // witness is coefficient · t_a^exponent · t_b^(4−exponent)
  TowerScalar coefficient;
};

struct ExclusionReport {
  bool ok = false;
  std::vector<ZeroPatternResult> patterns;
};

/// For each choice of two coordinates of p set to zero (the other two free
/// indeterminates), searches the 4×4 minors of M(p) for one that is a nonzero
/// monomial, which forces rank 4 at every such point.
ExclusionReport two_zero_exclusion(const MultilinearSystem& s);

nlohmann::json to_json(const Point& p);

}  // namespace sklyanin
