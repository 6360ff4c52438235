#include "sklyanin/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace sklyanin {

Word Word::from_code(std::size_t code, std::size_t length) {
  std::vector<std::uint8_t> letters(length);
  for (std::size_t k = length; k-- > 0;) {
    letters[k] = static_cast<std::uint8_t>(code % kGenerators);
    code /= kGenerators;
  }
  return Word(std::move(letters));
}

std::size_t Word::code() const {
  std::size_t c = 0;
  for (auto l : letters_) c = c * kGenerators + l;
  return c;
}

Word Word::prefix(std::size_t length) const {
  return Word(std::vector<std::uint8_t>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(length)));
}

Word Word::suffix(std::size_t from) const {
  return Word(std::vector<std::uint8_t>(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end()));
}

KleinElement Word::g_degree(const std::array<KleinElement, kGenerators>& generator_degrees) const {
  KleinElement g;
  for (auto l : letters_) g = g * generator_degrees[l];
  return g;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<std::uint8_t> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

std::string Word::to_string(char prefix) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (auto l : letters_) {
    s += prefix;
    s += static_cast<char>('0' + l);
  }
  return s;
}

NcPoly NcPoly::generator(std::size_t index) { return word(Word{static_cast<std::uint8_t>(index)}); }

NcPoly NcPoly::word(const Word& w, const TowerScalar& c) {
  NcPoly p;
  p.add(w, c);
  return p;
}

TowerScalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? TowerScalar() : it->second;
}

void NcPoly::add(const Word& w, const TowerScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::size_t NcPoly::degree() const {
  if (terms_.empty()) throw Error(ErrorCode::Precondition, "degree of the zero polynomial");
  return terms_.rbegin()->first.degree();
}

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool NcPoly::is_g_homogeneous(const std::array<KleinElement, kGenerators>& generator_degrees) const {
  if (terms_.empty()) return true;
  const KleinElement g = terms_.begin()->first.g_degree(generator_degrees);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.g_degree(generator_degrees) == g; });
}

NcPoly NcPoly::component(std::size_t degree) const {
  NcPoly out;
  for (const auto& [w, c] : terms_)
    if (w.degree() == degree) out.terms_.emplace(w, c);
  return out;
}

std::vector<std::size_t> NcPoly::degrees() const {
  std::vector<std::size_t> out;
  for (const auto& [w, c] : terms_)
    if (out.empty() || out.back() != w.degree()) out.push_back(w.degree());
  return out;
}

NcPoly NcPoly::operator-() const {
  NcPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
  return out;
}

NcPoly operator*(const TowerScalar& c, const NcPoly& p) {
  NcPoly out;
  for (const auto& [w, x] : p.terms_) out.add(w, c * x);
  return out;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  return true;
}

std::string NcPoly::to_string(char prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")" << w.to_string(prefix);
  }
  return out.str();
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

NcPoly anticommutator(const NcPoly& a, const NcPoly& b) { return a * b + b * a; }

std::vector<TowerScalar> dense_coordinates(const NcPoly& f, std::size_t degree) {
  std::size_t size = 1;
  for (std::size_t k = 0; k < degree; ++k) size *= kGenerators;
  std::vector<TowerScalar> v(size);
  for (const auto& [w, c] : f.terms()) {
    if (w.degree() != degree) throw Error(ErrorCode::Inhomogeneous, "term of degree " + std::to_string(w.degree()));
    v[w.code()] = c;
  }
  return v;
}

}  // namespace sklyanin
