#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sklyanin/error.hpp"
#include "sklyanin/presentation.hpp"
#include "sklyanin/tower.hpp"

using namespace sklyanin;

namespace {

FieldSpecPtr parameter_tower() {
  FieldSpecPtr spec = FieldSpec::gaussian();
  spec = adjoin_sqrt(spec, TowerScalar(Rational(-5, 7)), "s_a");
  spec = adjoin_sqrt(spec, TowerScalar(2), "s_b");
  return adjoin_sqrt(spec, TowerScalar(3), "s_c");
}

TowerScalar random_element(std::mt19937& rng, const FieldSpecPtr& spec) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), keep(0, 2);
  TowerScalar out(Rational(0), spec);
  const Monomial top = Monomial{1} << spec->size();
  for (Monomial m = 0; m < top; ++m) {
    if (keep(rng) != 0) continue;
    TowerScalar term(Rational(num(rng), den(rng)), spec);
    for (std::size_t k = 0; k < spec->size(); ++k)
      if ((m >> k) & 1U) term *= TowerScalar::symbol(spec, k);
    out += term;
  }
  return out;
}

void expect_close(std::complex<double> a, std::complex<double> b) {
  EXPECT_NEAR(a.real(), b.real(), 1e-9 * (1 + std::abs(b)));
  EXPECT_NEAR(a.imag(), b.imag(), 1e-9 * (1 + std::abs(b)));
}

}  // namespace

TEST(Tower, GaussianBasics) {
  const auto spec = FieldSpec::gaussian();
  const TowerScalar i = TowerScalar::i(spec);
  EXPECT_EQ((TowerScalar(1) + i).to_string(), "1 + 1·i");
  EXPECT_EQ(i * i, TowerScalar(-1));
  EXPECT_EQ((TowerScalar(1) + i).inverse(), (TowerScalar(1) - i) * TowerScalar(Rational(1, 2)));
}

TEST(Tower, AdditiveInverse) {
  auto spec = adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(5), "s5");
  const TowerScalar x = TowerScalar(3) * TowerScalar::i(spec) / TowerScalar::symbol(spec, "s5");
  EXPECT_TRUE((x + (-x)).is_zero());
}

TEST(Tower, ProductOfRootsIsABasisElement) {
  const auto spec = parameter_tower();
  const TowerScalar sb = TowerScalar::symbol(spec, "s_b"), sc = TowerScalar::symbol(spec, "s_c");
  const TowerScalar bc = sb * sc;
  ASSERT_EQ(bc.terms().size(), 1U);
  EXPECT_EQ(std::popcount(bc.terms()[0].first), 2);
  EXPECT_EQ(bc * bc, TowerScalar(6));
}

TEST(Tower, Inverses) {
  auto spec = adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(5), "s5");
  const TowerScalar s5 = TowerScalar::symbol(spec, "s5");
  EXPECT_EQ(s5.inverse(), s5 * TowerScalar(Rational(1, 5)));
  try {
    (void)TowerScalar(Rational(0), spec).inverse();
    FAIL() << "expected Zero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Zero);
  }
}

TEST(Tower, AdjoinSqrt) {
  auto spec = adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(5), "s5");
  EXPECT_EQ(TowerScalar::symbol(spec, "s5") * TowerScalar::symbol(spec, "s5"), TowerScalar(5));

  const Parameters p = derive_parameters(TowerScalar(2), TowerScalar(3));
  EXPECT_EQ(p.alpha, TowerScalar(Rational(-5, 7)));
  auto with_a = adjoin_sqrt(FieldSpec::gaussian(), p.alpha, "s_a");
  const TowerScalar sa = TowerScalar::symbol(with_a, "s_a");
  EXPECT_EQ(sa * sa, TowerScalar(Rational(-5, 7)));

  auto with_b = adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(2), "s_b");
  try {
    (void)adjoin_sqrt(with_b, TowerScalar(2), "s_b");
    FAIL() << "expected DuplicateSymbol";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateSymbol);
  }
}

TEST(Tower, UnrelatedTowersDoNotMix) {
  auto s23 = adjoin_sqrt(adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(2), "s2"), TowerScalar(3), "s3");
  auto s6 = adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(6), "s6");
  const TowerScalar prod = TowerScalar::symbol(s23, "s2") * TowerScalar::symbol(s23, "s3");
  try {
    (void)(prod + TowerScalar::symbol(s6, "s6"));
    FAIL() << "expected FieldMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  // A prefix tower embeds, so i from Q(i) combines with the longer tower.
  EXPECT_NO_THROW((void)(prod + TowerScalar::i(FieldSpec::gaussian())));
}

TEST(Tower, FindSqrt) {
  const auto spec = parameter_tower();
  const auto r = find_sqrt(spec, TowerScalar(6));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, TowerScalar(6));
  EXPECT_FALSE(find_sqrt(spec, TowerScalar(5)).has_value());
  const auto [bigger, s5] = ensure_sqrt(spec, 5);
  EXPECT_EQ(s5 * s5, TowerScalar(5));
  EXPECT_EQ(bigger->size(), spec->size() + 1);
}

TEST(Tower, ParseRoundTrip) {
  const auto spec = parameter_tower();
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const TowerScalar a = random_element(rng, spec);
    EXPECT_EQ(TowerScalar::parse(a.to_string(), spec), a) << a.to_string();
  }
}

TEST(TowerProperty, FieldAxiomsOnRandomElements) {
  const auto spec = parameter_tower();
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const TowerScalar a = random_element(rng, spec), b = random_element(rng, spec), c = random_element(rng, spec);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), TowerScalar(1));
  }
}

TEST(TowerProperty, CanonicalFormIsIdempotent) {
  const auto spec = parameter_tower();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const TowerScalar a = random_element(rng, spec), b = random_element(rng, spec);
    const TowerScalar p = a * b;
    const TowerScalar again = p * TowerScalar(1) + TowerScalar(Rational(0), spec);
    EXPECT_EQ(again.terms(), p.terms());
    EXPECT_EQ(again.to_string(), p.to_string());
  }
}

TEST(TowerProperty, EmbeddingCommutesWithArithmetic) {
  const auto small = adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(Rational(-5, 7)), "s_a");
  const auto large = adjoin_sqrt(adjoin_sqrt(small, TowerScalar(2), "s_b"), TowerScalar(3), "s_c");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const TowerScalar a = random_element(rng, small), b = random_element(rng, small);
    EXPECT_EQ((a + b).embed(large), a.embed(large) + b.embed(large));
    EXPECT_EQ((a * b).embed(large), a.embed(large) * b.embed(large));
  }
}

TEST(TowerProperty, AgreesWithNumericalEmbedding) {
  // A tower whose symbols square to non-rational elements exercises the slow path.
  auto spec = adjoin_sqrt(FieldSpec::gaussian(), TowerScalar(2), "s2");
  spec = adjoin_sqrt(spec, TowerScalar(1) + TowerScalar::symbol(spec, "s2"), "t");
  spec = adjoin_sqrt(spec, TowerScalar(3), "s3");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const TowerScalar a = random_element(rng, spec), b = random_element(rng, spec);
    expect_close(oracle::numeric(a * b), oracle::numeric(a) * oracle::numeric(b));
    expect_close(oracle::numeric(a + b), oracle::numeric(a) + oracle::numeric(b));
    if (!a.is_zero()) expect_close(oracle::numeric(a.inverse()), 1.0 / oracle::numeric(a));
  }
}
