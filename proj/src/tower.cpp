#include "sklyanin/tower.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "sklyanin/linalg.hpp"

namespace sklyanin {

namespace {

const FieldSpecPtr& wider(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  if (a.get() == b.get()) return a;
  if (a->size() >= b->size()) {
    if (a->extends(*b)) return a;
  } else if (b->extends(*a)) {
    return b;
  }
  throw Error(ErrorCode::FieldMismatch, "operands live in unrelated towers");
}

std::string trim(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec::FieldSpec(Token) {}

FieldSpec::FieldSpec(Token, FieldSpecPtr parent, Symbol own)
    : parent_(std::move(parent)), own_(std::move(own)) {
  chain_ = parent_->chain_;
  chain_.push_back(this);
  rational_square_ = own_->square.is_rational();
  if (rational_square_) rsq_ = own_->square.to_rational();
}

FieldSpecPtr FieldSpec::rationals() {
  static const FieldSpecPtr q = std::make_shared<const FieldSpec>(Token{});
  return q;
}

FieldSpecPtr FieldSpec::gaussian() {
  static const FieldSpecPtr qi = adjoin_sqrt(rationals(), TowerScalar(-1), "i");
  return qi;
}

std::optional<std::size_t> FieldSpec::find(std::string_view name) const {
  for (std::size_t k = 0; k < chain_.size(); ++k)
    if (chain_[k]->own_->name == name) return k;
  return std::nullopt;
}

bool FieldSpec::extends(const FieldSpec& other) const {
  if (other.size() > size()) return false;
  if (other.size() == 0) return true;
  if (chain_[other.size() - 1] == &other) return true;
  for (std::size_t k = 0; k < other.size(); ++k) {
    const auto& mine = symbol(k);
    const auto& theirs = other.symbol(k);
    if (mine.name != theirs.name) return false;
    if (chain_[k] == other.chain_[k]) continue;
    if (!(mine.square == theirs.square)) return false;
  }
  return true;
}

std::vector<std::string> FieldSpec::describe() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < size(); ++k)
    out.push_back(symbol(k).name + "^2=" + symbol(k).square.to_string());
  return out;
}

FieldSpecPtr adjoin_sqrt(const FieldSpecPtr& spec, const TowerScalar& value, std::string_view name) {
  if (spec->find(name)) throw Error(ErrorCode::DuplicateSymbol, "symbol '" + std::string(name) + "' already adjoined");
  if (name.empty()) throw Error(ErrorCode::Parse, "empty symbol name");
  if (spec->size() >= 32) throw Error(ErrorCode::Precondition, "tower height limited to 32 symbols");
  if (!spec->extends(*value.spec()))
    throw Error(ErrorCode::FieldMismatch, "square must live in the tower being extended");
  return std::make_shared<const FieldSpec>(FieldSpec::Token{}, spec,
                                           FieldSpec::Symbol{std::string(name), value.embed(spec)});
}

std::optional<TowerScalar> find_sqrt(const FieldSpecPtr& spec, const TowerScalar& value) {
  const TowerScalar v = value.embed(spec);
  if (v.is_zero()) return TowerScalar(Rational(0), spec);
  for (std::size_t k = 0; k < spec->size(); ++k)
    if (spec->symbol(k).square == v) return TowerScalar::symbol(spec, k);
  if (!v.is_rational()) return std::nullopt;

  std::vector<std::size_t> rational_symbols;
  for (std::size_t k = 0; k < spec->size(); ++k)
    if (spec->rational_square(k)) rational_symbols.push_back(k);
  if (rational_symbols.size() > 16) rational_symbols.resize(16);

  const Rational target = v.to_rational();
  const std::size_t subsets = std::size_t{1} << rational_symbols.size();
  for (std::size_t s = 0; s < subsets; ++s) {
    Rational square = 1;
    TowerScalar root(Rational(1), spec);
    for (std::size_t b = 0; b < rational_symbols.size(); ++b) {
      if (((s >> b) & 1U) == 0) continue;
      square *= spec->rational_square_value(rational_symbols[b]);
      root *= TowerScalar::symbol(spec, rational_symbols[b]);
    }
    Rational ratio = target / square;
    ratio.canonicalize();
    if (auto r = rational_sqrt(ratio)) return TowerScalar(*r, spec) * root;
  }
  return std::nullopt;
}

namespace {

mpz_class square_free_part(mpz_class n) {
  mpz_class out = 1;
  for (unsigned long p = 2; p <= 100000 && p * p <= n; ++p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++count;
    }
    if (count % 2 == 1) out *= p;
  }
  return out * n;
}

}  // namespace

std::pair<FieldSpecPtr, TowerScalar> ensure_sqrt(const FieldSpecPtr& spec, const Rational& value) {
  if (auto r = find_sqrt(spec, TowerScalar(value, spec))) return {spec, *r};
  mpz_class kernel = square_free_part(abs(value.get_num() * value.get_den()));
  std::string name = "s" + kernel.get_str();
  while (spec->find(name)) name += "'";
  auto extended = adjoin_sqrt(spec, TowerScalar(Rational(kernel)), name);
  if (auto r = find_sqrt(extended, TowerScalar(value, extended))) return {extended, *r};
  // Negative value in a tower without i: adjoin the value itself.
  auto direct = adjoin_sqrt(spec, TowerScalar(value), name + "n");
  return {direct, TowerScalar::symbol(direct, direct->size() - 1)};
}

// ------------------------------------------------------------- TowerScalar

TowerScalar::TowerScalar() : spec_(FieldSpec::rationals()) {}

TowerScalar::TowerScalar(long value) : TowerScalar(Rational(value)) {}

TowerScalar::TowerScalar(const Rational& value) : TowerScalar(value, FieldSpec::rationals()) {}

TowerScalar::TowerScalar(const Rational& value, FieldSpecPtr spec) : spec_(std::move(spec)) {
  if (!sklyanin::is_zero(value)) {
    Rational q = value;
    q.canonicalize();
    terms_.emplace_back(0, std::move(q));
  }
}

TowerScalar::TowerScalar(std::vector<Term> terms, FieldSpecPtr spec) : terms_(std::move(terms)), spec_(std::move(spec)) {
  canonicalize();
}

TowerScalar TowerScalar::symbol(const FieldSpecPtr& spec, std::size_t index) {
  if (index >= spec->size()) throw Error(ErrorCode::UnknownSymbol, "symbol index out of range");
  TowerScalar s;
  s.spec_ = spec;
  s.terms_.emplace_back(Monomial{1} << index, Rational(1));
  return s;
}

TowerScalar TowerScalar::symbol(const FieldSpecPtr& spec, std::string_view name) {
  auto k = spec->find(name);
  if (!k) throw Error(ErrorCode::UnknownSymbol, "no symbol '" + std::string(name) + "'");
  return symbol(spec, *k);
}

void TowerScalar::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return sgn(t.second) == 0; }),
               merged.end());
  for (auto& t : merged) t.second.canonicalize();
  terms_ = std::move(merged);
}

Rational TowerScalar::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::Precondition, "element " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational TowerScalar::coefficient(Monomial m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

TowerScalar TowerScalar::operator-() const {
  TowerScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

TowerScalar& TowerScalar::operator+=(const TowerScalar& other) {
  spec_ = wider(spec_, other.spec_);
  if (other.terms_.empty()) return *this;
  if (is_rational() && other.is_rational()) {
    if (terms_.empty()) {
      terms_ = other.terms_;
      return *this;
    }
    terms_[0].second += other.terms_[0].second;
    if (sgn(terms_[0].second) == 0) terms_.clear();
    return *this;
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

TowerScalar& TowerScalar::operator-=(const TowerScalar& other) { return *this += -other; }

TowerScalar& TowerScalar::operator*=(const TowerScalar& other) {
  *this = *this * other;
  return *this;
}

TowerScalar operator*(const TowerScalar& a, const TowerScalar& b) {
  const FieldSpecPtr& spec = wider(a.spec_, b.spec_);
  if (a.terms_.empty() || b.terms_.empty()) return TowerScalar(Rational(0), spec);
  if (a.is_rational() && b.is_rational())
    return TowerScalar({{0, a.terms_[0].second * b.terms_[0].second}}, spec);

  std::vector<TowerScalar::Term> acc;
  TowerScalar slow(Rational(0), spec);
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      const Monomial common = ma & mb;
      Rational coeff = qa * qb;
      bool fast = true;
      for (Monomial rest = common; rest != 0; rest &= rest - 1) {
        const auto k = static_cast<std::size_t>(std::countr_zero(rest));
        if (!spec->rational_square(k)) {
          fast = false;
          break;
        }
        coeff *= spec->rational_square_value(k);
      }
      if (fast) {
        acc.emplace_back(ma ^ mb, std::move(coeff));
        continue;
      }
      // Some shared symbol squares to an irrational element: reduce recursively.
      TowerScalar part({{ma ^ mb, qa * qb}}, spec);
      for (Monomial rest = common; rest != 0; rest &= rest - 1) {
        const auto k = static_cast<std::size_t>(std::countr_zero(rest));
        part = part * spec->symbol(k).square.embed(spec);
      }
      slow += part;
    }
  }
  TowerScalar out(std::move(acc), spec);
  if (!slow.is_zero()) out += slow;
  return out;
}

bool operator==(const TowerScalar& a, const TowerScalar& b) {
  (void)wider(a.spec_, b.spec_);
  return a.terms_ == b.terms_;
}

TowerScalar TowerScalar::embed(const FieldSpecPtr& larger) const {
  if (larger.get() == spec_.get()) return *this;
  if (!larger->extends(*spec_)) throw Error(ErrorCode::FieldMismatch, "cannot embed into a tower that does not extend it");
  TowerScalar out = *this;
  out.spec_ = larger;
  return out;
}

TowerScalar TowerScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Zero, "inverse of zero");
  if (is_rational()) return TowerScalar(sklyanin::inverse(terms_[0].second), spec_);

  // Smallest prefix of the tower containing every symbol of *this; it is
  // closed under multiplication because squares live below their symbol.
  Monomial used = 0;
  for (const auto& t : terms_) used |= t.first;
  const std::size_t height = static_cast<std::size_t>(std::bit_width(used));
  const std::size_t dim = std::size_t{1} << height;

  Matrix<Rational> mult(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    TowerScalar basis({{static_cast<Monomial>(col), Rational(1)}}, spec_);
    const TowerScalar image = *this * basis;
    for (const auto& [m, q] : image.terms_) {
      if (m >= dim) throw Error(ErrorCode::Precondition, "tower prefix not closed under multiplication");
      mult(m, col) = q;
    }
  }
  std::vector<Rational> one(dim);
  one[0] = 1;
  if (rank(mult) < dim)
    throw Error(ErrorCode::ZeroDivisor, to_string() + " is a zero divisor in this tower");
  auto x = solve(mult, one);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < dim; ++k)
    if (sgn((*x)[k]) != 0) terms.emplace_back(static_cast<Monomial>(k), (*x)[k]);
  return TowerScalar(std::move(terms), spec_);
}

std::string TowerScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << sklyanin::to_string(q);
    for (Monomial rest = m; rest != 0; rest &= rest - 1)
      out << "·" << spec_->symbol(static_cast<std::size_t>(std::countr_zero(rest))).name;
  }
  return out.str();
}

TowerScalar TowerScalar::parse(std::string_view text, const FieldSpecPtr& spec) {
  std::string s = trim(std::string(text));
  for (std::size_t pos; (pos = s.find("·")) != std::string::npos;) s.replace(pos, 2, "*");
  std::erase_if(s, [](unsigned char c) { return std::isspace(c) != 0; });
  if (s.empty()) throw Error(ErrorCode::Parse, "empty scalar");

  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const char prev = s[k - 1];
    if ((s[k] == '+' || s[k] == '-') && prev != '/' && prev != '*' && prev != '+' && prev != '-') {
      pieces.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  pieces.push_back(s.substr(start));

  TowerScalar sum(Rational(0), spec);
  for (auto piece : pieces) {
    if (!piece.empty() && piece.front() == '+') piece.erase(piece.begin());
    bool negate = false;
    if (!piece.empty() && piece.front() == '-' && piece.size() > 1 && !std::isdigit(static_cast<unsigned char>(piece[1]))) {
      negate = true;
      piece.erase(piece.begin());
    }
    if (piece.empty()) throw Error(ErrorCode::Parse, "dangling sign in '" + std::string(text) + "'");
    TowerScalar term(Rational(1), spec);
    std::stringstream factors(piece);
    std::string factor;
    while (std::getline(factors, factor, '*')) {
      if (factor.empty()) throw Error(ErrorCode::Parse, "empty factor in '" + std::string(text) + "'");
      const unsigned char c0 = static_cast<unsigned char>(factor[0]);
      if (std::isdigit(c0) || factor[0] == '-')
        term *= TowerScalar(parse_rational(factor), spec);
      else
        term *= symbol(spec, factor);
    }
    sum += negate ? -term : term;
  }
  return sum;
}

}  // namespace sklyanin
