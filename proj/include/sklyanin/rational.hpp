#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "sklyanin/error.hpp"

namespace sklyanin {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw Error(ErrorCode::Zero, "inverse of rational zero");
  Rational r = 1 / q;
  r.canonicalize();
  return r;
}

/// "p/q" with q > 0 always printed.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p", "p/q", with optional sign; throws Parse.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::Parse, "bad rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

/// Exact square root when q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_class n = sqrt(q.get_num());
  mpz_class d = sqrt(q.get_den());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace sklyanin
