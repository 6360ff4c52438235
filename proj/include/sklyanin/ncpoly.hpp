#pragma once

// Words and noncommutative polynomials over a tower field, four generators.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "sklyanin/klein.hpp"
#include "sklyanin/tower.hpp"

namespace sklyanin {

inline constexpr std::size_t kGenerators = 4;

/// A word in the generators; ordered degree-lexicographically with x0 < x1 < x2 < x3.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<std::uint8_t> letters) : letters_(letters) {}
  explicit Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

  /// The word of length `length` whose base-4 digits (most significant first) are `code`.
  static Word from_code(std::size_t code, std::size_t length);

  std::size_t degree() const { return letters_.size(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  std::uint8_t operator[](std::size_t k) const { return letters_[k]; }

  /// Base-4 index among words of the same length.
  std::size_t code() const;
  Word prefix(std::size_t length) const;
  Word suffix(std::size_t from) const;
  KleinElement g_degree(const std::array<KleinElement, kGenerators>& generator_degrees) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  std::string to_string(char prefix = 'x') const;

 private:
  std::vector<std::uint8_t> letters_;
};

/// Finite linear combination of words; zero coefficients are never stored.
class NcPoly {
 public:
  using Terms = std::map<Word, TowerScalar>;

  NcPoly() = default;
  NcPoly(const TowerScalar& c) { add(Word{}, c); }  // NOLINT(google-explicit-constructor)
  static NcPoly generator(std::size_t index);
  static NcPoly word(const Word& w, const TowerScalar& c = TowerScalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  TowerScalar coefficient(const Word& w) const;

  void add(const Word& w, const TowerScalar& c);

  /// Degree of the first term; NcPoly must be nonzero.
  std::size_t degree() const;
  bool is_homogeneous() const;
  /// Every word has the same G-degree under the given generator grading.
  bool is_g_homogeneous(const std::array<KleinElement, kGenerators>& generator_degrees) const;
  NcPoly component(std::size_t degree) const;
  std::vector<std::size_t> degrees() const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const TowerScalar& c, const NcPoly& p);
  friend bool operator==(const NcPoly& a, const NcPoly& b);

  std::string to_string(char prefix = 'x') const;

 private:
  Terms terms_;
};

/// [a, b] = ab - ba
NcPoly commutator(const NcPoly& a, const NcPoly& b);
/// [a, b]_+ = ab + ba
NcPoly anticommutator(const NcPoly& a, const NcPoly& b);

/// Coordinates of a homogeneous degree-n polynomial in the basis of all 4^n words (by code).
std::vector<TowerScalar> dense_coordinates(const NcPoly& f, std::size_t degree);

}  // namespace sklyanin
