#include "sklyanin/pointscheme.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace sklyanin {

Point::Point(std::array<TowerScalar, 4> coords) : coords_(std::move(coords)) {
  std::size_t lead = 0;
  while (lead < 4 && coords_[lead].is_zero()) ++lead;
  if (lead == 4) throw Error(ErrorCode::Precondition, "the zero vector is not a projective point");
  try {
    const TowerScalar inv = coords_[lead].inverse();
    for (auto& c : coords_) c *= inv;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroDivisor) throw;
  }
}

Point Point::basis(std::size_t j) {
  std::array<TowerScalar, 4> c;
  c[j] = TowerScalar(1);
  return Point(c);
}

std::size_t Point::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& c : coords_) n += c.is_zero() ? 0 : 1;
  return n;
}

bool operator==(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return true;
}

std::vector<std::string> Point::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coords_) out.push_back(c.to_string());
  return out;
}

nlohmann::json to_json(const Point& p) { return p.to_strings(); }

TowerScalar MultilinearSystem::evaluate(std::size_t k, const std::array<TowerScalar, 4>& p,
                                        const std::array<TowerScalar, 4>& q) const {
  TowerScalar sum;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!forms[k][i][j].is_zero()) sum += forms[k][i][j] * p[i] * q[j];
  return sum;
}

MultilinearSystem multilinearize(const Presentation& p) {
  MultilinearSystem s;
  for (const auto& r : p.relations) {
    std::array<std::array<TowerScalar, 4>, 4> form;
    for (const auto& [w, c] : r.terms()) {
      if (w.degree() != 2) throw Error(ErrorCode::NotQuadratic, r.to_string(p.prefix));
      form[w[0]][w[1]] = c;
    }
    s.forms.push_back(form);
  }
  return s;
}

Matrix<TowerScalar> coefficient_matrix(const MultilinearSystem& s, const std::array<TowerScalar, 4>& p) {
  Matrix<TowerScalar> m(s.forms.size(), 4);
  for (std::size_t k = 0; k < s.forms.size(); ++k)
    for (std::size_t i = 0; i < 4; ++i) {
      if (p[i].is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j)
        if (!s.forms[k][i][j].is_zero()) m(k, j) += s.forms[k][i][j] * p[i];
    }
  return m;
}

Point successor(const MultilinearSystem& s, const Point& p) {
  const auto ker = kernel(coefficient_matrix(s, p));
  if (ker.empty()) throw Error(ErrorCode::KernelDimZero, "point is not on the point scheme");
  if (ker.size() > 1)
    throw Error(ErrorCode::KernelDimHigh, "kernel of dimension " + std::to_string(ker.size()));
  return Point({ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
}

namespace {

TowerScalar root(const FieldSpecPtr& spec, const TowerScalar& value, const char* what) {
  auto r = find_sqrt(spec, value);
  if (!r) throw Error(ErrorCode::MissingRadical, std::string("no square root of ") + what + " in the tower");
  return *r;
}

Point pt(const TowerScalar& a, const TowerScalar& b, const TowerScalar& c, const TowerScalar& d) {
  return Point({a, b, c, d});
}

}  // namespace

std::vector<PointPair> twisted_point_pairs(const Parameters& params, const FieldSpecPtr& spec) {
  if (!spec->find("i")) throw Error(ErrorCode::MissingRadical, "the tower must contain i");
  const TowerScalar i = TowerScalar::symbol(spec, "i");
  const TowerScalar sa = root(spec, params.alpha, "alpha");
  const TowerScalar sb = root(spec, params.beta, "beta");
  const TowerScalar sc = root(spec, params.gamma, "gamma");
  const TowerScalar one(1);
  const TowerScalar ia = one / sa, ib = one / sb, ic = one / sc;
  const TowerScalar ibc = ib * ic, iac = ia * ic, iab = ia * ib;

  std::vector<PointPair> out;
  auto both_signs = [&](auto make) {
    for (int sign : {1, -1}) {
      auto [p, q] = make(TowerScalar(sign));
      out.push_back({p, q});
    }
  };
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, s * i, s * i, one), pt(one, s * i, s * i, one)};
  });
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, s * i, -(s * i), -one), pt(one, s * i, -(s * i), -one)};
  });
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, -ibc, -(s * ic), -(s * ib)), pt(one, -ibc, s * ic, s * ib)};
  });
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, ibc, -(s * ic), s * ib), pt(one, ibc, s * ic, -(s * ib))};
  });
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, s * i * ic, iac, s * i * ia), pt(one, -(s * i * ic), iac, -(s * i * ia))};
  });
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, -(s * i * ic), -iac, s * i * ia), pt(one, s * i * ic, -iac, -(s * i * ia))};
  });
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, s * ib, s * i * ia, i * iab), pt(one, -(s * ib), -(s * i * ia), i * iab)};
  });
  both_signs([&](const TowerScalar& s) {
    return std::pair{pt(one, s * ib, -(s * i * ia), -(i * iab)), pt(one, -(s * ib), s * i * ia, -(i * iab))};
  });
  return out;
}

std::vector<Point> known_points(const Parameters& params, const FieldSpecPtr& spec) {
  std::vector<Point> out;
  for (std::size_t j = 0; j < 4; ++j) out.push_back(Point::basis(j));
  for (const auto& pair : twisted_point_pairs(params, spec)) out.push_back(pair.point);
  return out;
}

std::array<TowerScalar, 4> g_action(const std::array<TowerScalar, 4>& p, KleinElement g) {
  std::array<TowerScalar, 4> out = p;
  for (std::size_t j = 0; j < 4; ++j)
    if (character(KleinElement::from_index(static_cast<unsigned>(j)), g) < 0) out[j] = -out[j];
  return out;
}

Point g_action(const Point& p, KleinElement g) { return Point(g_action(p.coords(), g)); }

OrbitReport orbit_report(const std::vector<Point>& points, const MultilinearSystem& s) {
  OrbitReport report;
  std::vector<bool> used(points.size(), false);
  auto find = [&](const Point& q) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < points.size(); ++k)
      if (points[k] == q) return k;
    return std::nullopt;
  };
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (used[k]) continue;
    Orbit orbit;
    for (auto g : KleinElement::all()) {
      const Point q = g_action(points[k], g);
      const auto idx = find(q);
      if (!idx) throw Error(ErrorCode::NotActionClosed, "missing translate by " + g.to_string());
      if (used[*idx]) continue;
      used[*idx] = true;
      orbit.members.push_back(points[*idx]);
    }
    std::vector<Point> next;
    for (const auto& q : orbit.members) {
      next.push_back(successor(s, q));
      if (next.back() == q) ++report.fixed_points;
    }
    if (orbit.members.size() == 4) {
      for (auto h : KleinElement::all()) {
        bool all = true;
        for (std::size_t m = 0; m < 4 && all; ++m) all = next[m] == g_action(orbit.members[m], h);
        if (all) {
          orbit.label = h;
          break;
        }
      }
    }
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

std::pair<TowerScalar, TowerScalar> curve_lambdas(const Parameters& params) {
  const TowerScalar one(1);
  return {(one - params.gamma) / (one + params.alpha), (one + params.gamma) / (one - params.beta)};
}

bool curve_membership(const Point& p, const Parameters& params) {
  const auto [l1, l2] = curve_lambdas(params);
  std::array<TowerScalar, 4> sq;
  for (std::size_t k = 0; k < 4; ++k) sq[k] = p[k] * p[k];
  return (sq[0] + sq[1] + sq[2] + sq[3]).is_zero() && (sq[3] + l1 * sq[1] + l2 * sq[2]).is_zero();
}

CurvePoint curve_point(const Parameters& params, const TowerScalar& seed, const FieldSpecPtr& spec) {
  const auto [l1t, l2t] = curve_lambdas(params);
  const Rational l1 = l1t.to_rational();
  const Rational l2 = l2t.to_rational();
  const Rational s = seed.to_rational();
  if (l2 == 1) throw Error(ErrorCode::Precondition, "the quadrics do not determine p2^2");
  // 1 + s² + X + Y = 0 and Y + λ1 s² + λ2 X = 0, with X = p2², Y = p3².
  Rational x = (l1 * s * s - 1 - s * s) / (1 - l2);
  Rational y = -l1 * s * s - l2 * x;
  x.canonicalize();
  y.canonicalize();
  auto [spec2, p2] = ensure_sqrt(spec, x);
  auto [spec3, p3] = ensure_sqrt(spec2, y);
  Point p({TowerScalar(Rational(1), spec3), TowerScalar(s, spec3), p2.embed(spec3), p3.embed(spec3)});
  if (p.nonzero_count() < 3)
    throw Error(ErrorCode::Precondition, "seed gives a point with fewer than three nonzero coordinates");
  if (!curve_membership(p, params)) throw Error(ErrorCode::Precondition, "constructed point is not on the curve");
  return {spec3, p};
}

namespace {

using BinaryForm = std::vector<TowerScalar>;  // index = exponent of the first indeterminate

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return c;
}

BinaryForm determinant(const std::array<std::array<BinaryForm, 4>, 4>& m) {
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  BinaryForm det(5);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    BinaryForm term{TowerScalar(sign)};
    for (std::size_t r = 0; r < 4 && !term.empty(); ++r) term = multiply(term, m[r][perm[r]]);
    for (std::size_t k = 0; k < term.size(); ++k) det[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

ExclusionReport two_zero_exclusion(const MultilinearSystem& s) {
  ExclusionReport report;
  report.ok = true;
  const std::size_t rows = s.forms.size();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      ZeroPatternResult result;
      result.nonzero = {a, b};
      // Entry (k, j) of M(p) is forms[k][a][j]·t_a + forms[k][b][j]·t_b.
      auto entry = [&](std::size_t k, std::size_t j) { return BinaryForm{s.forms[k][b][j], s.forms[k][a][j]}; };
      for (std::size_t r0 = 0; r0 < rows && !result.ok; ++r0)
        for (std::size_t r1 = r0 + 1; r1 < rows && !result.ok; ++r1)
          for (std::size_t r2 = r1 + 1; r2 < rows && !result.ok; ++r2)
            for (std::size_t r3 = r2 + 1; r3 < rows && !result.ok; ++r3) {
              const std::array<std::size_t, 4> chosen{r0, r1, r2, r3};
              std::array<std::array<BinaryForm, 4>, 4> m;
              for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t j = 0; j < 4; ++j) m[r][j] = entry(chosen[r], j);
              const BinaryForm det = determinant(m);
              std::size_t nonzero = 0;
              std::size_t where = 0;
              for (std::size_t k = 0; k < det.size(); ++k)
                if (!det[k].is_zero()) {
                  ++nonzero;
                  where = k;
                }
              if (nonzero == 1) {
                result.ok = true;
                result.rows = chosen;
                result.exponent = where;
                result.coefficient = det[where];
              }
            }
      report.ok = report.ok && result.ok;
      report.patterns.push_back(result);
    }
  return report;
}

}  // namespace sklyanin
