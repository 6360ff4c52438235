#pragma once

// Exact arithmetic in towers of quadratic extensions  Q ⊂ Q(i) ⊂ Q(i, √a) ⊂ ...
//
// A tower is a chain of FieldSpec nodes; node k adjoins a symbol s_k with
// s_k^2 = square_k, where square_k lives in the sub-tower below node k.
// Elements are sparse maps from square-free monomials (bitmask over symbol
// positions) to rationals. Since symbol positions never change when a tower is
// extended, the embedding of a sub-tower into an extension is the identity on
// coordinates.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sklyanin/rational.hpp"

namespace sklyanin {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

using Monomial = std::uint32_t;

class TowerScalar {
 public:
  using Term = std::pair<Monomial, Rational>;

  TowerScalar();
  TowerScalar(long value);  // NOLINT(google-explicit-constructor)
  TowerScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  TowerScalar(const Rational& value, FieldSpecPtr spec);

  /// The basis element for the symbol at position `index` of `spec`.
  static TowerScalar symbol(const FieldSpecPtr& spec, std::size_t index);
  static TowerScalar symbol(const FieldSpecPtr& spec, std::string_view name);
  static TowerScalar i(const FieldSpecPtr& spec) { return symbol(spec, 0); }

  const FieldSpecPtr& spec() const { return spec_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  /// Throws Precondition when the element has irrational coordinates.
  Rational to_rational() const;
  Rational coefficient(Monomial m) const;

  TowerScalar operator-() const;
  TowerScalar& operator+=(const TowerScalar& other);
  TowerScalar& operator-=(const TowerScalar& other);
  TowerScalar& operator*=(const TowerScalar& other);
  TowerScalar& operator/=(const TowerScalar& other) { return *this *= other.inverse(); }

  friend TowerScalar operator+(TowerScalar a, const TowerScalar& b) { return a += b; }
  friend TowerScalar operator-(TowerScalar a, const TowerScalar& b) { return a -= b; }
  friend TowerScalar operator*(const TowerScalar& a, const TowerScalar& b);
  friend TowerScalar operator/(const TowerScalar& a, const TowerScalar& b) { return a * b.inverse(); }

  /// Coordinate-wise comparison after embedding into the larger tower.
  friend bool operator==(const TowerScalar& a, const TowerScalar& b);

  /// Solves the Q-linear system for multiplication by *this.
  /// Throws Zero for 0 and ZeroDivisor when that map is singular.
  TowerScalar inverse() const;

  /// Re-home the element in an extension of its tower.
  TowerScalar embed(const FieldSpecPtr& larger) const;

  /// "p/q·m" per monomial, terms joined with " + "; zero prints as "0".
  std::string to_string() const;
  static TowerScalar parse(std::string_view text, const FieldSpecPtr& spec);

 private:
  TowerScalar(std::vector<Term> terms, FieldSpecPtr spec);
  void canonicalize();

  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
  FieldSpecPtr spec_;
};

inline bool is_zero(const TowerScalar& a) { return a.is_zero(); }
inline TowerScalar inverse(const TowerScalar& a) { return a.inverse(); }

class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  struct Symbol {
    std::string name;
    TowerScalar square;
  };

  /// Q itself (no symbols). Every tower extends it.
  static FieldSpecPtr rationals();
  /// Q(i), i^2 = -1: the base of every user-facing tower.
  static FieldSpecPtr gaussian();

  std::size_t size() const { return chain_.size(); }
  const Symbol& symbol(std::size_t index) const { return *chain_[index]->own_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// True when `other` is this tower or a prefix of it (structurally).
  bool extends(const FieldSpec& other) const;
  bool same_as(const FieldSpec& other) const { return size() == other.size() && extends(other); }

  const FieldSpec* parent() const { return parent_.get(); }

  /// Square of a product of two basis monomials, as a tower element.
  /// Fast path: all shared symbols have rational squares.
  bool rational_square(std::size_t index) const { return chain_[index]->rational_square_; }
  const Rational& rational_square_value(std::size_t index) const { return chain_[index]->rsq_; }

  std::vector<std::string> describe() const;  // "name^2=value" per symbol

 private:
  struct Token {};

 public:
  FieldSpec(Token, FieldSpecPtr parent, Symbol own);
  FieldSpec(Token);

 private:
  friend FieldSpecPtr adjoin_sqrt(const FieldSpecPtr&, const TowerScalar&, std::string_view);

  FieldSpecPtr parent_;
  std::optional<Symbol> own_;  // empty only for Q itself
  bool rational_square_ = true;
  Rational rsq_;
  std::vector<const FieldSpec*> chain_;  // chain_[k] introduced symbol k
};

/// Extends `spec` by a symbol whose square is `value` (which must live in `spec`).
/// Throws DuplicateSymbol if `name` is taken.
FieldSpecPtr adjoin_sqrt(const FieldSpecPtr& spec, const TowerScalar& value, std::string_view name);

/// A square root of `value` inside `spec` built from adjoined symbols, if one
/// is found. Rational values are matched against products of symbols with
/// rational squares; other values must equal some symbol's square.
std::optional<TowerScalar> find_sqrt(const FieldSpecPtr& spec, const TowerScalar& value);

/// Square root of a rational, adjoining s<m> (m the square-free part of |value|)
/// when nothing in `spec` works. Returns the (possibly extended) spec and root.
std::pair<FieldSpecPtr, TowerScalar> ensure_sqrt(const FieldSpecPtr& spec, const Rational& value);

}  // namespace sklyanin
