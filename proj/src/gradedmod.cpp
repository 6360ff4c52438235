#include "sklyanin/gradedmod.hpp"

#include <algorithm>

namespace sklyanin {

namespace {

Vector times(const Vector& v, const Matrix<TowerScalar>& m) {
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out[c] += v[r] * m(r, c);
  }
  return out;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const TowerScalar& t) { return t.is_zero(); });
}

Matrix<TowerScalar> from_ints(const std::array<std::array<int, 2>, 2>& t, const TowerScalar& scale) {
  Matrix<TowerScalar> m(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      if (t[r][c] != 0) m(r, c) = TowerScalar(t[r][c]) * scale;
  return m;
}

Matrix<TowerScalar> kron(const Matrix<TowerScalar>& a, const Matrix<TowerScalar>& b) {
  Matrix<TowerScalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Independent rows spanning the same space.
std::vector<Vector> basis_of(const std::vector<Vector>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  Matrix<TowerScalar> m = from_rows(rows, cols);
  const auto pivots = row_reduce(m);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
  return out;
}

/// Spans of the cyclic submodule generated by `start` (in degree j0), degree by degree.
std::vector<std::vector<Vector>> cyclic_spans(const ModuleSlice& m, const Vector& start, std::size_t j0) {
  std::vector<std::vector<Vector>> spans{{start}};
  for (std::size_t j = j0; j < m.top_degree(); ++j) {
    std::vector<Vector> next;
    for (const auto& v : spans.back())
      for (std::size_t i = 0; i < kGenerators; ++i) next.push_back(times(v, m.actions[i][j]));
    spans.push_back(basis_of(next, m.dims[j + 1]));
  }
  return spans;
}

void require_fat_base(const PointModuleData& pm) {
  if (pm.base.nonzero_count() < 3)
    throw Error(ErrorCode::Precondition, "fat point modules need a base point with at least three nonzero coordinates");
}

ModuleSlice fat_slice(const std::vector<std::array<TowerScalar, 4>>& rows,
                      const std::array<KleinElement, kGenerators>& degrees) {
  ModuleSlice m;
  const std::size_t top = rows.size() - 1;
  m.dims.assign(top + 1, 2);
  for (std::size_t i = 0; i < kGenerators; ++i)
    for (std::size_t j = 0; j < top; ++j) m.actions[i].push_back(from_ints(group_matrix(degrees[i]), rows[j][i]));
  return m;
}

}  // namespace

PointModuleData point_module(const MultilinearSystem& s, const Point& p, std::size_t depth) {
  PointModuleData pm{p, {p.coords()}};
  Point current = p;
  for (std::size_t j = 0; j < depth; ++j) {
    current = successor(s, current);
    pm.rows.push_back(current.coords());
  }
  return pm;
}

Vector ModuleSlice::act(const Vector& v, std::size_t j, const Word& w) const {
  Vector out = v;
  for (std::size_t k = 0; k < w.degree(); ++k) out = times(out, actions[w[k]].at(j + k));
  return out;
}

bool ModuleSlice::satisfies_relations(const Presentation& p) const {
  for (const auto& r : p.relations) {
    if (r.is_zero()) continue;
    const std::size_t d = r.degree();
    for (std::size_t j = 0; j + d <= top_degree(); ++j) {
      // Apply the relation to each basis vector of degree j.
      for (std::size_t b = 0; b < dims[j]; ++b) {
        Vector e(dims[j]);
        e[b] = TowerScalar(1);
        Vector sum(dims[j + d]);
        for (const auto& [w, c] : r.terms()) {
          const Vector image = act(e, j, w);
          for (std::size_t k = 0; k < sum.size(); ++k)
            if (!image[k].is_zero()) sum[k] += c * image[k];
        }
        if (!is_zero_vector(sum)) return false;
      }
    }
  }
  return true;
}

ModuleSlice point_module_slice(const PointModuleData& pm) {
  ModuleSlice m;
  const std::size_t top = pm.rows.size() - 1;
  m.dims.assign(top + 1, 1);
  for (std::size_t i = 0; i < kGenerators; ++i)
    for (std::size_t j = 0; j < top; ++j) {
      Matrix<TowerScalar> a(1, 1);
      a(0, 0) = pm.rows[j][i];
      m.actions[i].push_back(a);
    }
  return m;
}

ModuleSlice fat_point(const PointModuleData& pm, const Presentation& acting) {
  require_fat_base(pm);
  return fat_slice(pm.rows, acting.g_degrees);
}

bool generated_in_degree_zero(const ModuleSlice& m) {
  if (m.dims.empty()) return true;
  std::vector<Vector> span;
  for (std::size_t b = 0; b < m.dims[0]; ++b) {
    Vector e(m.dims[0]);
    e[b] = TowerScalar(1);
    span.push_back(e);
  }
  for (std::size_t j = 0; j < m.top_degree(); ++j) {
    std::vector<Vector> next;
    for (const auto& v : span)
      for (std::size_t i = 0; i < kGenerators; ++i) next.push_back(times(v, m.actions[i][j]));
    span = basis_of(next, m.dims[j + 1]);
    if (span.size() != m.dims[j + 1]) return false;
  }
  return true;
}

bool cyclic_codimension_check(const ModuleSlice& m, const Vector& v, std::size_t j) {
  if (is_zero_vector(v)) throw Error(ErrorCode::Precondition, "cyclic generator must be nonzero");
  if (j >= m.top_degree()) throw Error(ErrorCode::DegreeBound, "no degree above the generator in this slice");
  std::vector<Vector> next;
  for (std::size_t i = 0; i < kGenerators; ++i) next.push_back(times(v, m.actions[i][j]));
  return basis_of(next, m.dims[j + 1]).size() == m.dims[j + 1];
}

std::vector<std::array<TowerScalar, 4>> annihilator_degree1(const ModuleSlice& m, const Vector& v, std::size_t j) {
  Matrix<TowerScalar> images(m.dims[j + 1], kGenerators);
  for (std::size_t i = 0; i < kGenerators; ++i) {
    const Vector w = times(v, m.actions[i][j]);
    for (std::size_t k = 0; k < w.size(); ++k) images(k, i) = w[k];
  }
  std::vector<std::array<TowerScalar, 4>> out;
  for (const auto& c : kernel(images)) out.push_back({c[0], c[1], c[2], c[3]});
  return out;
}

Point identify_point(const std::vector<std::array<TowerScalar, 4>>& annihilator) {
  if (annihilator.size() != 3)
    throw Error(ErrorCode::Identification,
                "annihilator has dimension " + std::to_string(annihilator.size()) + ", expected 3");
  Matrix<TowerScalar> m(3, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = annihilator[r][c];
  const auto ker = kernel(m);
  if (ker.size() != 1) throw Error(ErrorCode::Identification, "annihilator vectors are dependent");
  return Point({ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
}

ModuleSlice twist_module(const ModuleSlice& m, const std::array<KleinElement, kGenerators>& degrees, KleinElement g) {
  ModuleSlice out = m;
  for (std::size_t i = 0; i < kGenerators; ++i)
    if (character(degrees[i], g) < 0)
      for (auto& a : out.actions[i]) a = TowerScalar(-1) * a;
  return out;
}

DecompositionReport restrict_and_decompose(const PointModuleData& pm,
                                           const std::array<KleinElement, kGenerators>& degrees) {
  require_fat_base(pm);
  ModuleSlice m;
  const std::size_t top = pm.rows.size() - 1;
  m.dims.assign(top + 1, 4);
  for (std::size_t k = 0; k < kGenerators; ++k) {
    const auto t = from_ints(group_matrix(degrees[k]), TowerScalar(1));
    const auto tt = kron(t, t);
    for (std::size_t j = 0; j < top; ++j) m.actions[k].push_back(pm.rows[j][k] * tt);
  }

  const TowerScalar one(1), zero, minus(-1);
  const std::array<Vector, 4> generators{
      Vector{one, zero, zero, one}, Vector{one, zero, zero, minus},
      Vector{zero, one, one, zero}, Vector{zero, one, minus, zero}};

  DecompositionReport report;
  std::vector<std::vector<std::vector<Vector>>> spans;
  for (const auto& w : generators) {
    auto s = cyclic_spans(m, w, 0);
    Summand summand{w, identify_point(annihilator_degree1(m, w, 0)), {}};
    for (const auto& layer : s) summand.dims.push_back(layer.size());
    report.summands.push_back(std::move(summand));
    spans.push_back(std::move(s));
  }
  report.direct = true;
  for (std::size_t j = 0; j <= top; ++j) {
    std::vector<Vector> all;
    for (const auto& s : spans) all.insert(all.end(), s[j].begin(), s[j].end());
    if (basis_of(all, 4).size() != 4) report.direct = false;
  }
  return report;
}

bool group_intertwiner_check(const PointModuleData& pm, KleinElement g,
                             const std::array<KleinElement, kGenerators>& degrees) {
  require_fat_base(pm);
  std::vector<std::array<TowerScalar, 4>> translated;
  for (const auto& row : pm.rows) translated.push_back(g_action(row, g));
  const ModuleSlice source = fat_slice(pm.rows, degrees);
  const ModuleSlice target = fat_slice(translated, degrees);
  const auto t = from_ints(group_matrix(g), TowerScalar(1));
  for (std::size_t i = 0; i < kGenerators; ++i)
    for (std::size_t j = 0; j < source.top_degree(); ++j)
      if (!(source.actions[i][j] * t == t * target.actions[i][j])) return false;
  return true;
}

bool theta_kills(const PointModuleData& pm, const NcPoly& theta) {
  if (pm.rows.size() < 2) throw Error(ErrorCode::DegreeBound, "point module data needs two rows");
  TowerScalar sum;
  for (const auto& [w, c] : theta.terms()) {
    if (w.degree() != 2) throw Error(ErrorCode::NotQuadratic, theta.to_string());
    sum += c * pm.rows[0][w[0]] * pm.rows[1][w[1]];
  }
  return sum.is_zero();
}

}  // namespace sklyanin
