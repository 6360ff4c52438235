#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace sklyanin {

/// g1^p g2^q in the Klein four-group; the group law is xor on (p, q).
class KleinElement {
 public:
  constexpr KleinElement() = default;
  constexpr KleinElement(unsigned p, unsigned q) : p_(p & 1U), q_(q & 1U) {}

  static constexpr KleinElement e() { return {0, 0}; }
  static constexpr KleinElement g1() { return {1, 0}; }
  static constexpr KleinElement g2() { return {0, 1}; }
  static constexpr KleinElement g1g2() { return {1, 1}; }

  /// 0 ↔ e, 1 ↔ g1, 2 ↔ g2, 3 ↔ g1g2 (the labelling of the generators x0..x3).
  static constexpr KleinElement from_index(unsigned index) { return {index & 1U, (index >> 1) & 1U}; }
  constexpr unsigned index() const { return p_ | (q_ << 1); }

  constexpr unsigned p() const { return p_; }
  constexpr unsigned q() const { return q_; }

  friend constexpr KleinElement operator*(KleinElement a, KleinElement b) {
    return {a.p_ ^ b.p_, a.q_ ^ b.q_};
  }
  friend constexpr bool operator==(KleinElement, KleinElement) = default;

  std::string to_string() const {
    static const std::array<const char*, 4> names{"e", "g1", "g2", "g1g2"};
    return names[index()];
  }

  static constexpr std::array<KleinElement, 4> all() { return {e(), g1(), g2(), g1g2()}; }

 private:
  unsigned p_ = 0;
  unsigned q_ = 0;
};

/// The fixed identification g ↦ χ_g of G with its dual:
/// χ_g(h) = 1 if g = e or h ∈ {e, g}, and −1 otherwise.
constexpr int character(KleinElement g, KleinElement h) {
  if (g == KleinElement::e() || h == KleinElement::e() || h == g) return 1;
  return -1;
}

}  // namespace sklyanin
