#include "sklyanin/cocycle.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "sklyanin/linalg.hpp"

namespace sklyanin {

TowerScalar mu(KleinElement g, KleinElement h) { return (g.p() & h.q()) != 0 ? TowerScalar(-1) : TowerScalar(1); }

Permutation identity_permutation() { return {0, 1, 2, 3}; }

Permutation inverse(const Permutation& s) {
  Permutation t{};
  for (unsigned k = 0; k < 4; ++k) t[s[k]] = k;
  return t;
}

Permutation cycle(std::initializer_list<unsigned> points) {
  Permutation s = identity_permutation();
  const std::vector<unsigned> c(points);
  for (std::size_t k = 0; k < c.size(); ++k) s[c[k]] = c[(k + 1) % c.size()];
  return s;
}

std::string to_string(const Permutation& s) {
  std::string out = "[";
  for (unsigned k = 0; k < 4; ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "]";
}

CocycleTable CocycleTable::standard() {
  CocycleTable t;
  for (auto g : KleinElement::all())
    for (auto h : KleinElement::all()) t(g, h) = mu(g, h);
  return t;
}

CocycleTable CocycleTable::constant_one() {
  CocycleTable t;
  for (auto& v : t.values_) v = TowerScalar(1);
  return t;
}

bool CocycleTable::satisfies_cocycle_identity() const {
  const TowerScalar one(1);
  for (auto g : KleinElement::all()) {
    if (!((*this)(KleinElement::e(), g) == one) || !((*this)(g, KleinElement::e()) == one)) return false;
    for (auto h : KleinElement::all())
      for (auto l : KleinElement::all())
        if (!((*this)(g, h) * (*this)(g * h, l) == (*this)(g, h * l) * (*this)(h, l))) return false;
  }
  return true;
}

CocycleTable CocycleTable::permuted(const Permutation& tau) const {
  CocycleTable t;
  for (auto g : KleinElement::all())
    for (auto h : KleinElement::all())
      t(g, h) = (*this)(KleinElement::from_index(tau[g.index()]), KleinElement::from_index(tau[h.index()]));
  return t;
}

nlohmann::json CocycleTable::to_json() const {
  nlohmann::json grid = nlohmann::json::array();
  for (auto g : KleinElement::all()) {
    nlohmann::json row = nlohmann::json::array();
    for (auto h : KleinElement::all()) row.push_back((*this)(g, h).to_string());
    grid.push_back(row);
  }
  return grid;
}

std::array<KleinElement, kGenerators> GradingAssignment::degrees() const {
  std::array<KleinElement, kGenerators> d;
  for (std::size_t k = 0; k < kGenerators; ++k) d[k] = KleinElement::from_index(perm[k]);
  return d;
}

unsigned GradingAssignment::identity_generator() const { return sklyanin::inverse(perm)[0]; }

std::string GradingAssignment::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < kGenerators; ++k) out += (k ? "," : "") + degrees()[k].to_string();
  return out + ")";
}

Presentation twist_presentation(const Presentation& p, const GradingAssignment& grading, const CocycleTable& table) {
  const auto degs = grading.degrees();
  Presentation out;
  out.prefix = p.prefix == 'x' ? 'v' : 'x';
  out.g_degrees = degs;
  out.params = p.params;
  for (const auto& r : p.relations) {
    if (!r.is_g_homogeneous(degs))
      throw Error(ErrorCode::Inhomogeneous, r.to_string(p.prefix) + " under grading " + grading.to_string());
    NcPoly t;
    for (const auto& [w, c] : r.terms()) {
      TowerScalar factor(1);
      KleinElement prefix;
      for (auto l : w.letters()) {
        factor *= table(prefix, degs[l]);
        prefix = prefix * degs[l];
      }
      t.add(w, c / factor);
    }
    out.relations.push_back(std::move(t));
  }
  return out;
}

Presentation twisted_sklyanin_presentation(const Parameters& params) {
  const auto check = validate_parameters(params);
  if (!check.ok()) throw Error(check.issues.front(), "invalid parameters");
  auto v = [](std::size_t k) { return NcPoly::generator(k); };
  Presentation p;
  p.prefix = 'v';
  p.params = params;
  p.relations = {
      commutator(v(0), v(1)) - params.alpha * commutator(v(2), v(3)),
      anticommutator(v(0), v(1)) - anticommutator(v(2), v(3)),
      commutator(v(0), v(2)) - params.beta * commutator(v(3), v(1)),
      anticommutator(v(0), v(2)) - anticommutator(v(3), v(1)),
      commutator(v(0), v(3)) + params.gamma * commutator(v(1), v(2)),
      anticommutator(v(0), v(3)) + anticommutator(v(1), v(2)),
  };
  return p;
}

std::array<std::array<int, 2>, 2> group_matrix(KleinElement g) {
  switch (g.index()) {
    case 0: return {{{1, 0}, {0, 1}}};
    case 1: return {{{1, 0}, {0, -1}}};
    case 2: return {{{0, 1}, {1, 0}}};
    default: return {{{0, -1}, {1, 0}}};
  }
}

namespace {

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 c;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      for (int k = 0; k < 2; ++k)
        if (!a[r][k].is_zero() && !b[k][s].is_zero()) c[r][s] += a[r][k] * b[k][s];
  return c;
}

}  // namespace

Matrix2 matrix_model(const NcPoly& f, const std::array<KleinElement, kGenerators>& degrees) {
  std::array<Matrix2, kGenerators> gens;
  for (std::size_t i = 0; i < kGenerators; ++i) {
    const auto t = group_matrix(degrees[i]);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s)
        if (t[r][s] != 0) gens[i][r][s] = TowerScalar(t[r][s]) * NcPoly::generator(i);
  }
  Matrix2 out;
  for (const auto& [w, c] : f.terms()) {
    Matrix2 m;
    m[0][0] = NcPoly(c);
    m[1][1] = NcPoly(c);
    for (auto l : w.letters()) m = multiply(m, gens[l]);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) out[r][s] += m[r][s];
  }
  return out;
}

GradingEnumeration enumerate_gradings() {
  GradingEnumeration out;
  Permutation s = identity_permutation();
  do {
    GradingAssignment g{s};
    out.all.push_back(g);
    out.classes[g.identity_generator()].push_back(g);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

bool coboundary_equivalent(const CocycleTable& mu1, const CocycleTable& mu2, const std::array<TowerScalar, 4>& rho) {
  for (auto g : KleinElement::all())
    for (auto h : KleinElement::all()) {
      const TowerScalar d = rho[g.index()] * rho[h.index()] / rho[(g * h).index()];
      if (!(mu2(g, h) == mu1(g, h) * d)) return false;
    }
  return true;
}

std::vector<CoboundaryRow> coboundary_table(const FieldSpecPtr& spec) {
  if (!spec->find("i")) throw Error(ErrorCode::MissingRadical, "the tower must contain i");
  const TowerScalar i = TowerScalar::symbol(spec, "i");
  const TowerScalar one(1);
  const TowerScalar minus(-1);
  return {
      {cycle({1, 2}), {one, minus, one, one}},
      {cycle({1, 3}), {one, i, one, i}},
      {cycle({2, 3}), {one, one, i, i}},
      {cycle({1, 2, 3}), {one, i, minus, i}},
      {cycle({1, 3, 2}), {one, one, i, -i}},
  };
}

bool check_coboundary_row(const CoboundaryRow& row) {
  const auto table = CocycleTable::standard();
  return coboundary_equivalent(table, table.permuted(inverse(row.sigma)), row.rho);
}

namespace {

TowerScalar root(const FieldSpecPtr& spec, const TowerScalar& value, const char* what) {
  auto r = find_sqrt(spec, value);
  if (!r) throw Error(ErrorCode::MissingRadical, std::string("no square root of ") + what + " in the tower");
  return *r;
}

}  // namespace

std::vector<ScalingRow> scaling_table(const Parameters& params, const FieldSpecPtr& spec) {
  if (!spec->find("i")) throw Error(ErrorCode::MissingRadical, "the tower must contain i");
  const TowerScalar i = TowerScalar::symbol(spec, "i");
  const TowerScalar sa = root(spec, params.alpha, "alpha");
  const TowerScalar sb = root(spec, params.beta, "beta");
  const TowerScalar sc = root(spec, params.gamma, "gamma");
  const TowerScalar one(1);
  const auto& [a, b, c] = params;
  return {
      {GradingAssignment{cycle({0, 1})}, {one, i / (sb * sc), -(one / sc), -(i / sb)}, {a, one / b, one / c}},
      {GradingAssignment{cycle({0, 2})}, {one, i / sc, i / (sa * sc), one / sa}, {one / a, b, one / c}},
      {GradingAssignment{cycle({0, 3})}, {one, i / sb, one / sa, i / (sa * sb)}, {one / a, one / b, c}},
  };
}

bool span_equal(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
  auto rows = [](const std::vector<NcPoly>& polys) {
    std::vector<std::vector<TowerScalar>> out;
    for (const auto& f : polys) {
      if (f.is_zero()) continue;
      if (f.degree() != 2 || !f.is_homogeneous()) throw Error(ErrorCode::NotQuadratic, f.to_string());
      out.push_back(dense_coordinates(f, 2));
    }
    return out;
  };
  return same_span(rows(a), rows(b), kGenerators * kGenerators);
}

bool scaling_isomorphism_check(const Presentation& source, const GradingAssignment& grading,
                               const std::array<TowerScalar, 4>& scale, const Presentation& target) {
  for (const auto& s : scale) (void)s.inverse();
  const Presentation twisted = twist_presentation(source, grading, CocycleTable::standard());
  std::vector<NcPoly> scaled;
  for (const auto& r : twisted.relations) {
    NcPoly t;
    for (const auto& [w, c] : r.terms()) {
      TowerScalar factor = c;
      for (auto l : w.letters()) factor *= scale[l];
      t.add(w, factor);
    }
    scaled.push_back(std::move(t));
  }
  return span_equal(scaled, target.relations);
}

}  // namespace sklyanin
