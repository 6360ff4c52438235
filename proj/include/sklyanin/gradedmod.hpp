#pragma once

// Truncated graded right modules given by action matrices: point modules,
// multiplicity-2 fat point modules built through the 2×2 matrix model, and
// their restriction along the inverse embedding.
//
// Vectors are rows; x_i maps degree j to degree j+1 by v ↦ v·actions[i][j].

#include <array>
#include <vector>

#include "sklyanin/cocycle.hpp"
#include "sklyanin/linalg.hpp"
#include "sklyanin/pointscheme.hpp"

namespace sklyanin {

inline constexpr std::size_t kDefaultModuleDegree = 5;

using Vector = std::vector<TowerScalar>;

struct PointModuleData {
  Point base;
  /// rows[j] are the coordinates of the j-fold successor; m_j·x_i = rows[j][i]·m_{j+1}.
  std::vector<std::array<TowerScalar, 4>> rows;
};

/// rows up to index `depth`. Propagates KernelDimZero / KernelDimHigh.
PointModuleData point_module(const MultilinearSystem& s, const Point& p, std::size_t depth = kDefaultModuleDegree);

struct ModuleSlice {
  std::vector<std::size_t> dims;  // degrees 0..D
  /// actions[i][j]: dims[j] × dims[j+1], for j < D.
  std::array<std::vector<Matrix<TowerScalar>>, kGenerators> actions;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  /// Image of v (degree j) under the word w.
  Vector act(const Vector& v, std::size_t j, const Word& w) const;
  /// Every relation of `p` acts as zero from every degree where it fits.
  bool satisfies_relations(const Presentation& p) const;
};

/// The point module as a slice with dims ≡ 1.
ModuleSlice point_module_slice(const PointModuleData& pm);

/// M_p ⊕ M_p with v_i acting by rows[j][i]·T(deg v_i). Throws Precondition
/// when the base point has fewer than three nonzero coordinates.
ModuleSlice fat_point(const PointModuleData& pm, const Presentation& acting);

/// Degree-0 vectors generate every degree up to the top.
bool generated_in_degree_zero(const ModuleSlice& m);

/// The submodule generated by v (in degree j) contains all of degree j+1.
/// Throws Precondition for v = 0.
bool cyclic_codimension_check(const ModuleSlice& m, const Vector& v, std::size_t j);

/// Coefficient vectors c with v·Σ c_i x_i = 0, for v in degree j.
std::vector<std::array<TowerScalar, 4>> annihilator_degree1(const ModuleSlice& m, const Vector& v, std::size_t j = 0);

/// The point p with annihilator span{p0 x_j − p_j x0}. Throws Identification
/// unless the subspace is 3-dimensional.
Point identify_point(const std::vector<std::array<TowerScalar, 4>>& annihilator);

/// The module with x_i acting through χ_{deg x_i}(g)·x_i.
ModuleSlice twist_module(const ModuleSlice& m, const std::array<KleinElement, kGenerators>& degrees, KleinElement g);

struct Summand {
  Vector generator;
  Point point;
  std::vector<std::size_t> dims;  // dimension of the cyclic submodule in each degree
};

struct DecompositionReport {
  std::vector<Summand> summands;
  bool direct = false;  // the summands' degree-j parts span all of degree j, for every j
};

/// (M_p²)² restricted along the inverse embedding (x_k ↦ rows[j][k]·T_k⊗T_k), split
/// by the four cyclic generators (1,0,0,1), (1,0,0,−1), (0,1,1,0), (0,1,−1,0).
/// Throws Precondition as fat_point does, Identification when a summand fails to
/// be a point module.
DecompositionReport restrict_and_decompose(const PointModuleData& pm,
                                           const std::array<KleinElement, kGenerators>& degrees =
                                               GradingAssignment{}.degrees());

/// Right multiplication by T(g) carries the fat point at p onto the one at p^g.
bool group_intertwiner_check(const PointModuleData& pm, KleinElement g,
                             const std::array<KleinElement, kGenerators>& degrees = GradingAssignment{}.degrees());

/// m0·Θ = 0 in the point module, i.e. Σ c_ab rows[0][a] rows[1][b] = 0.
bool theta_kills(const PointModuleData& pm, const NcPoly& theta);

}  // namespace sklyanin
