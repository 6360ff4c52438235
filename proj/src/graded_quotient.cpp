#include "sklyanin/graded_quotient.hpp"

#include <algorithm>
#include <numeric>

#include "sklyanin/linalg.hpp"

namespace sklyanin {

namespace {

std::size_t power4(std::size_t n) {
  std::size_t p = 1;
  for (std::size_t k = 0; k < n; ++k) p *= kGenerators;
  return p;
}

template <class S>
S convert(const TowerScalar& t);
template <>
Rational convert<Rational>(const TowerScalar& t) {
  return t.to_rational();
}
template <>
TowerScalar convert<TowerScalar>(const TowerScalar& t) {
  return t;
}

TowerScalar lift(const Rational& q) { return TowerScalar(q); }
TowerScalar lift(const TowerScalar& t) { return t; }

bool all_rational(const std::vector<NcPoly>& polys) {
  for (const auto& f : polys)
    for (const auto& [w, c] : f.terms())
      if (!c.is_rational()) return false;
  return true;
}

/// Pivot rows of the RREF of `rows` (dense, `cols` wide): for each pivot
/// column, the entries of its row on non-pivot columns.
struct Echelon {
  std::vector<bool> is_pivot;
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, TowerScalar>>>> rows;
};

template <class S>
Echelon echelon(const std::vector<std::vector<TowerScalar>>& rows, std::size_t cols) {
  Matrix<S> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!rows[r][c].is_zero()) m(r, c) = convert<S>(rows[r][c]);
  const auto pivots = row_reduce(m);
  Echelon e;
  e.is_pivot.assign(cols, false);
  for (auto c : pivots) e.is_pivot[c] = true;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<std::pair<std::size_t, TowerScalar>> entries;
    for (std::size_t c = 0; c < cols; ++c)
      if (!e.is_pivot[c] && !is_zero(m(r, c))) entries.emplace_back(c, lift(m(r, c)));
    e.rows.emplace_back(pivots[r], std::move(entries));
  }
  return e;
}

/// Solutions x of Σ_k x_k rows[k] = rhs, or nullopt. Rows and rhs are dense.
template <class S>
std::optional<std::vector<S>> solve_rows(const std::vector<std::vector<S>>& rows, const std::vector<S>& rhs) {
  Matrix<S> m(rhs.size(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < rhs.size(); ++c) m(c, k) = rows[k][c];
  return solve(m, rhs);
}

}  // namespace

struct GradedQuotient::Slice {
  std::vector<Word> normal;              // ascending deglex
  std::vector<SparseVector> word_nf;     // indexed by Word::code()
};

GradedQuotient::GradedQuotient(Presentation p, std::size_t bound)
    : p_(std::move(p)), bound_(bound), rational_(all_rational(p_.relations)) {
  for (const auto& r : p_.relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, r.to_string(p_.prefix));
    if (r.degree() == 0) throw Error(ErrorCode::Precondition, "constant relation");
  }
}

GradedQuotient::~GradedQuotient() = default;

const GradedQuotient::Slice& GradedQuotient::slice(std::size_t n) const {
  if (n > bound_)
    throw Error(ErrorCode::DegreeBound, "degree " + std::to_string(n) + " exceeds bound " + std::to_string(bound_));
  std::lock_guard<std::mutex> lock(mutex_);
  while (slices_.size() <= n) build(slices_.size());
  return *slices_[n];
}

void GradedQuotient::build(std::size_t n) const {
  auto s = std::make_unique<Slice>();
  if (n == 0) {
    s->normal = {Word{}};
    s->word_nf = {{{0U, TowerScalar(1)}}};
    slices_.push_back(std::move(s));
    return;
  }
  const Slice& prev = *slices_[n - 1];
  const std::size_t candidates = prev.normal.size() * kGenerators;

  // Column position of each candidate, largest word first.
  std::vector<std::size_t> order(candidates);
  std::iota(order.begin(), order.end(), 0);
  auto candidate_word = [&](std::size_t k) {
    return prev.normal[k / kGenerators] * Word{static_cast<std::uint8_t>(k % kGenerators)};
  };
  std::vector<Word> words(candidates);
  for (std::size_t k = 0; k < candidates; ++k) words[k] = candidate_word(k);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return words[b] < words[a]; });
  std::vector<std::size_t> position(candidates);
  for (std::size_t c = 0; c < candidates; ++c) position[order[c]] = c;

  // Adds coeff · w, reduced modulo I_{n-1}·V, to a dense row over column positions.
  auto accumulate = [&](std::vector<TowerScalar>& row, const Word& w, const TowerScalar& coeff) {
    const std::uint8_t letter = w[n - 1];
    for (const auto& [a, c] : prev.word_nf[w.prefix(n - 1).code()])
      row[position[a * kGenerators + letter]] += coeff * c;
  };

  std::vector<std::vector<TowerScalar>> rows;
  for (const auto& r : p_.relations) {
    if (r.is_zero() || r.degree() > n) continue;
    const std::size_t d = r.degree();
    for (const auto& u : slices_[n - d]->normal) {
      std::vector<TowerScalar> row(candidates);
      for (const auto& [w, c] : r.terms()) accumulate(row, u * w, c);
      if (std::any_of(row.begin(), row.end(), [](const TowerScalar& t) { return !t.is_zero(); }))
        rows.push_back(std::move(row));
    }
  }

  const Echelon e = rational_ ? echelon<Rational>(rows, candidates) : echelon<TowerScalar>(rows, candidates);

  // Normal words are the non-pivot columns; positions run from largest to smallest.
  std::vector<std::uint32_t> normal_index(candidates, 0);
  for (std::size_t c = candidates; c-- > 0;) {
    if (e.is_pivot[c]) continue;
    normal_index[c] = static_cast<std::uint32_t>(s->normal.size());
    s->normal.push_back(words[order[c]]);
  }

  std::vector<SparseVector> column_nf(candidates);
  for (std::size_t c = 0; c < candidates; ++c)
    if (!e.is_pivot[c]) column_nf[c] = {{normal_index[c], TowerScalar(1)}};
  for (const auto& [pivot, entries] : e.rows) {
    SparseVector v;
    for (const auto& [c, value] : entries) v.emplace_back(normal_index[c], -value);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    column_nf[pivot] = std::move(v);
  }

  const std::size_t h = s->normal.size();
  const std::size_t total = power4(n);
  s->word_nf.resize(total);
  std::vector<TowerScalar> acc(h);
  for (std::size_t code = 0; code < total; ++code) {
    const std::size_t letter = code % kGenerators;
    const std::size_t prefix = code / kGenerators;
    for (const auto& [a, c] : prev.word_nf[prefix])
      for (const auto& [b, x] : column_nf[position[a * kGenerators + letter]]) acc[b] += c * x;
    SparseVector v;
    for (std::size_t b = 0; b < h; ++b)
      if (!acc[b].is_zero()) {
        v.emplace_back(static_cast<std::uint32_t>(b), acc[b]);
        acc[b] = TowerScalar();
      }
    s->word_nf[code] = std::move(v);
  }
  slices_.push_back(std::move(s));
}

std::size_t GradedQuotient::dimension(std::size_t n) const { return slice(n).normal.size(); }

const std::vector<Word>& GradedQuotient::normal_words(std::size_t n) const { return slice(n).normal; }

std::vector<TowerScalar> GradedQuotient::coordinates(const NcPoly& f) const {
  if (f.is_zero()) return {};
  if (!f.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, f.to_string(p_.prefix));
  const Slice& s = slice(f.degree());
  std::vector<TowerScalar> v(s.normal.size());
  for (const auto& [w, c] : f.terms())
    for (const auto& [b, x] : s.word_nf[w.code()]) v[b] += c * x;
  return v;
}

NcPoly GradedQuotient::normal_form(const NcPoly& f) const {
  if (f.is_zero()) return {};
  const auto v = coordinates(f);
  const auto& normal = normal_words(f.degree());
  NcPoly out;
  for (std::size_t b = 0; b < v.size(); ++b) out.add(normal[b], v[b]);
  return out;
}

bool GradedQuotient::contains(const NcPoly& f) const {
  const auto v = coordinates(f);
  return std::all_of(v.begin(), v.end(), [](const TowerScalar& t) { return t.is_zero(); });
}

std::size_t homogeneous_dimension(const Presentation& p, std::size_t n, std::size_t bound) {
  return GradedQuotient(p, bound).dimension(n);
}

std::vector<std::size_t> hilbert_function(const Presentation& p, std::size_t bound) {
  GradedQuotient q(p, bound);
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= bound; ++n) dims.push_back(q.dimension(n));
  return dims;
}

namespace {

struct Placement {
  Word left;
  std::size_t relation;
  Word right;
};

std::vector<Placement> placements(const Presentation& p, std::size_t n) {
  std::vector<Placement> out;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& rel = p.relations[r];
    if (rel.is_zero() || rel.degree() > n) continue;
    const std::size_t rest = n - rel.degree();
    for (std::size_t a = 0; a <= rest; ++a)
      for (std::size_t u = 0; u < power4(a); ++u)
        for (std::size_t w = 0; w < power4(rest - a); ++w)
          out.push_back({Word::from_code(u, a), r, Word::from_code(w, rest - a)});
  }
  return out;
}

NcPoly expand(const Presentation& p, const Placement& pl) {
  return NcPoly::word(pl.left) * p.relations[pl.relation] * NcPoly::word(pl.right);
}

/// Basis element of the tower for monomial m (product of the symbols it contains).
TowerScalar basis_element(const FieldSpecPtr& spec, Monomial m) {
  TowerScalar b(1);
  for (std::size_t k = 0; k < spec->size(); ++k)
    if ((m >> k) & 1U) b *= TowerScalar::symbol(spec, k);
  return b;
}

std::vector<CertificateTerm> certificate(const Presentation& p, const NcPoly& f) {
  const std::size_t n = f.degree();
  const auto pls = placements(p, n);
  std::vector<CertificateTerm> terms;

  if (all_rational(p.relations)) {
    // Rational relations: solve once per tower coordinate of f.
    FieldSpecPtr spec = FieldSpec::rationals();
    std::vector<Monomial> monomials;
    for (const auto& [w, c] : f.terms()) {
      if (c.spec()->size() > spec->size()) spec = c.spec();
      for (const auto& [m, q] : c.terms())
        if (std::find(monomials.begin(), monomials.end(), m) == monomials.end()) monomials.push_back(m);
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& pl : pls) {
      std::vector<Rational> row(power4(n));
      const NcPoly e = expand(p, pl);
      for (const auto& [w, c] : e.terms()) row[w.code()] = c.to_rational();
      rows.push_back(std::move(row));
    }
    std::vector<TowerScalar> coeffs(pls.size());
    for (Monomial m : monomials) {
      std::vector<Rational> rhs(power4(n));
      for (const auto& [w, c] : f.terms()) rhs[w.code()] = c.coefficient(m);
      auto x = solve_rows(rows, rhs);
      if (!x) throw Error(ErrorCode::Precondition, "membership certificate system is inconsistent");
      const TowerScalar b = basis_element(spec, m);
      for (std::size_t k = 0; k < pls.size(); ++k)
        if (!is_zero((*x)[k])) coeffs[k] += TowerScalar((*x)[k]) * b;
    }
    for (std::size_t k = 0; k < pls.size(); ++k)
      if (!coeffs[k].is_zero()) terms.push_back({pls[k].left, pls[k].relation, pls[k].right, coeffs[k]});
    return terms;
  }

  std::vector<std::vector<TowerScalar>> rows;
  for (const auto& pl : pls) rows.push_back(dense_coordinates(expand(p, pl), n));
  auto x = solve_rows(rows, dense_coordinates(f, n));
  if (!x) throw Error(ErrorCode::Precondition, "membership certificate system is inconsistent");
  for (std::size_t k = 0; k < pls.size(); ++k)
    if (!(*x)[k].is_zero()) terms.push_back({pls[k].left, pls[k].relation, pls[k].right, (*x)[k]});
  return terms;
}

}  // namespace

Membership ideal_membership(const Presentation& p, const NcPoly& f, std::size_t bound) {
  Membership m;
  if (f.is_zero()) {
    m.member = true;
    m.certificate = std::vector<CertificateTerm>{};
    return m;
  }
  m.member = GradedQuotient(p, bound).contains(f);
  if (m.member && f.degree() <= kCertificateDegree) m.certificate = certificate(p, f);
  return m;
}

NcPoly evaluate_certificate(const Presentation& p, const std::vector<CertificateTerm>& certificate) {
  NcPoly out;
  for (const auto& t : certificate)
    out += t.coeff * (NcPoly::word(t.left) * p.relations.at(t.relation) * NcPoly::word(t.right));
  return out;
}

bool is_central(const GradedQuotient& q, const NcPoly& z) {
  for (std::size_t i = 0; i < kGenerators; ++i) {
    const NcPoly x = NcPoly::generator(i);
    if (!q.contains(z * x - x * z)) return false;
  }
  return true;
}

bool is_central(const Presentation& p, const NcPoly& z, std::size_t bound) {
  return is_central(GradedQuotient(p, bound), z);
}

std::vector<NcPoly> central_subspace(const GradedQuotient& q, std::size_t d) {
  const auto& normal = q.normal_words(d);
  const std::size_t next = q.dimension(d + 1);
  Matrix<TowerScalar> m(kGenerators * next, normal.size());
  for (std::size_t a = 0; a < normal.size(); ++a) {
    const NcPoly w = NcPoly::word(normal[a]);
    for (std::size_t i = 0; i < kGenerators; ++i) {
      const NcPoly x = NcPoly::generator(i);
      const auto v = q.coordinates(w * x - x * w);
      for (std::size_t b = 0; b < v.size(); ++b) m(i * next + b, a) = v[b];
    }
  }
  std::vector<NcPoly> basis;
  for (const auto& c : kernel(m)) {
    NcPoly z;
    for (std::size_t a = 0; a < normal.size(); ++a) z.add(normal[a], c[a]);
    basis.push_back(std::move(z));
  }
  return basis;
}

std::vector<NcPoly> central_subspace(const Presentation& p, std::size_t d, std::size_t bound) {
  return central_subspace(GradedQuotient(p, bound), d);
}

RegularSequenceResult regular_sequence_check(const Presentation& p, const NcPoly& z1, const NcPoly& z2,
                                             std::size_t bound) {
  const GradedQuotient q(p, bound);
  if (!is_central(q, z1)) throw Error(ErrorCode::NotCentral, z1.to_string(p.prefix));
  if (!is_central(q, z2)) throw Error(ErrorCode::NotCentral, z2.to_string(p.prefix));

  RegularSequenceResult result;
  for (std::size_t n = 0; n <= bound; ++n) result.dims.push_back(q.dimension(n));
  result.dims_z1 = hilbert_function(quotient(p, {z1}), bound);
  result.dims_z1_z2 = hilbert_function(quotient(p, {z1, z2}), bound);

  auto h = [&](long n) -> long { return n < 0 ? 0 : static_cast<long>(result.dims[static_cast<std::size_t>(n)]); };
  for (std::size_t n = 0; n <= bound; ++n) {
    const long k = static_cast<long>(n);
    const bool first = static_cast<long>(result.dims_z1[n]) == h(k) - h(k - 2);
    const bool second = static_cast<long>(result.dims_z1_z2[n]) == h(k) - 2 * h(k - 2) + h(k - 4);
    if (!first || !second) {
      result.ok = false;
      result.first_failure = n;
      break;
    }
  }
  return result;
}

}  // namespace sklyanin
