#pragma once

// Reference computations used only by the tests. None of them call the
// quotient engine, the twist, the multilinearization or the tower arithmetic
// they are compared against; they work directly on word/coefficient data.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "sklyanin/ncpoly.hpp"
#include "sklyanin/presentation.hpp"
#include "sklyanin/tower.hpp"

namespace oracle {

using sklyanin::NcPoly;
using sklyanin::Presentation;
using sklyanin::TowerScalar;

using Letters = std::vector<std::uint8_t>;
using RationalPoly = std::map<Letters, mpq_class>;

inline RationalPoly to_rational_poly(const NcPoly& f) {
  RationalPoly out;
  for (const auto& [w, c] : f.terms()) out[w.letters()] = c.to_rational();
  return out;
}

inline std::size_t word_index(const Letters& w) {
  std::size_t k = 0;
  for (auto a : w) k = 4 * k + a;
  return k;
}

inline std::size_t pow4(std::size_t n) { return std::size_t{1} << (2 * n); }

/// Rank by plain Gaussian elimination over Q.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const mpq_class f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

/// dim (T(V)/I)_n from the rank of all products u·r·w, for rational quadratic
/// (or any homogeneous) relations.
inline std::size_t naive_dimension(const std::vector<RationalPoly>& relations, std::size_t n) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& rel : relations) {
    if (rel.empty()) continue;
    const std::size_t d = rel.begin()->first.size();
    if (d > n) continue;
    for (std::size_t a = 0; a <= n - d; ++a)
      for (std::size_t u = 0; u < pow4(a); ++u)
        for (std::size_t w = 0; w < pow4(n - d - a); ++w) {
          std::vector<mpq_class> row(pow4(n));
          for (const auto& [letters, c] : rel) {
            const std::size_t idx = (u * pow4(d) + word_index(letters)) * pow4(n - d - a) + w;
            row[idx] += c;
          }
          rows.push_back(std::move(row));
        }
  }
  return pow4(n) - rank(std::move(rows));
}

/// Coefficients of Π (1 − t^k)^{e_k} up to t^bound, for (k, e_k) with e_k possibly negative.
inline std::vector<long> series(const std::vector<std::pair<int, int>>& factors, std::size_t bound) {
  std::vector<long> out(bound + 1);
  out[0] = 1;
  for (const auto& [k, e] : factors) {
    for (int step = 0; step < std::abs(e); ++step) {
      std::vector<long> next(bound + 1);
      if (e > 0) {
        for (std::size_t n = 0; n <= bound; ++n)
          next[n] = out[n] - (n >= static_cast<std::size_t>(k) ? out[n - k] : 0);
      } else {
        // multiply by 1/(1 − t^k) = Σ t^{jk}
        for (std::size_t n = 0; n <= bound; ++n)
          next[n] = out[n] + (n >= static_cast<std::size_t>(k) ? next[n - k] : 0);
      }
      out = next;
    }
  }
  return out;
}

/// Numerical value of a tower element, with every symbol sent to the principal
/// square root of the numerical value of its square.
inline std::complex<double> numeric(const TowerScalar& a) {
  const auto& spec = a.spec();
  std::vector<std::complex<double>> symbol_values;
  for (std::size_t k = 0; k < spec->size(); ++k) {
    const TowerScalar& sq = spec->symbol(k).square;
    std::complex<double> v = 0;
    for (const auto& [m, q] : sq.terms()) {
      std::complex<double> term = q.get_d();
      for (std::size_t j = 0; j < k; ++j)
        if ((m >> j) & 1U) term *= symbol_values[j];
      v += term;
    }
    symbol_values.push_back(std::sqrt(v));
  }
  std::complex<double> out = 0;
  for (const auto& [m, q] : a.terms()) {
    std::complex<double> term = q.get_d();
    for (std::size_t j = 0; j < spec->size(); ++j)
      if ((m >> j) & 1U) term *= symbol_values[j];
    out += term;
  }
  return out;
}

/// Coefficient map of a word-level twist: word a1…an scaled by
/// Π_k (−1)^{p(a1…a_{k−1}) · q(a_k)} where deg x_j = (p, q) from `degrees`.
inline NcPoly twist(const NcPoly& f, const std::array<std::pair<unsigned, unsigned>, 4>& degrees) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) {
    unsigned p = 0;
    int sign = 1;
    for (std::size_t k = 0; k < w.degree(); ++k) {
      if (p & degrees[w[k]].second) sign = -sign;
      p ^= degrees[w[k]].first;
    }
    out.add(w, TowerScalar(sign) * c);
  }
  return out;
}

inline constexpr std::array<std::pair<unsigned, unsigned>, 4> kStandardDegrees{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

/// The six twisted relations written out from scratch, without validation, so
/// that degenerate parameters can be injected.
inline Presentation twisted_relations(const TowerScalar& alpha, const TowerScalar& beta, const TowerScalar& gamma) {
  auto v = [](std::size_t k) { return NcPoly::generator(k); };
  auto c = [&](std::size_t a, std::size_t b) { return v(a) * v(b) - v(b) * v(a); };
  auto ac = [&](std::size_t a, std::size_t b) { return v(a) * v(b) + v(b) * v(a); };
  Presentation p;
  p.prefix = 'v';
  p.relations = {c(0, 1) - alpha * c(2, 3), ac(0, 1) - ac(2, 3), c(0, 2) - beta * c(3, 1),
                 ac(0, 2) - ac(3, 1),       c(0, 3) + gamma * c(1, 2), ac(0, 3) + ac(1, 2)};
  return p;
}

/// Relation spans agree in degree 2 (rational coefficients).
inline bool same_span_rational(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
  auto rows = [](const std::vector<NcPoly>& polys) {
    std::vector<std::vector<mpq_class>> out;
    for (const auto& f : polys) {
      std::vector<mpq_class> row(16);
      for (const auto& [w, c] : to_rational_poly(f)) row[word_index(w)] = c;
      out.push_back(row);
    }
    return out;
  };
  auto ra = rows(a), rb = rows(b);
  auto both = ra;
  both.insert(both.end(), rb.begin(), rb.end());
  const std::size_t r = rank(both);
  return rank(ra) == r && rank(rb) == r;
}

}  // namespace oracle
