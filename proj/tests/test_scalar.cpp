#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "pbw/errors.hpp"
#include "pbw/scalar.hpp"

using pbw::Rational;
using pbw::Scalar;

namespace {

Scalar random_scalar(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), pw(0, order - 1), count(0, 4);
  std::vector<std::pair<long long, Rational>> terms;
  int n = count(rng);
  for (int i = 0; i < n; ++i) terms.emplace_back(pw(rng), Rational(num(rng), den(rng)));
  return Scalar::make(order, terms);
}

// Embedding into C through zeta_N = exp(2 pi i / N): an independent check of
// multiplication that never touches the cyclotomic reduction.
std::complex<double> embed(const Scalar& s) {
  const double angle = 2 * std::numbers::pi / s.order();
  std::complex<double> z(0, 0);
  for (std::size_t p = 0; p < s.coeffs().size(); ++p) {
    mpq_class q = s.coeffs()[p].to_mpq();
    z += q.get_d() * std::polar(1.0, angle * static_cast<double>(p));
  }
  return z;
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-0/7").to_string(), "0");
  EXPECT_EQ(Rational(5, -10).to_string(), "-1/2");
  EXPECT_THROW(Rational(1, 0), pbw::DivideByZero);
  EXPECT_THROW(Rational(0).inverse(), pbw::DivideByZero);
}

TEST(Rational, OverflowSpillsIntoBigIntegers) {
  Rational big(1LL << 62);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_string(), "21267647932558653966460912964485513216");
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  Rational sum(0);
  for (int i = 0; i < 200; ++i) sum += Rational(1, i + 1);
  Rational diff = sum;
  for (int i = 0; i < 200; ++i) diff -= Rational(1, i + 1);
  EXPECT_TRUE(diff.is_zero());
}

TEST(CyclotomicField, KnownPolynomials) {
  EXPECT_EQ(pbw::cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(pbw::cyclotomic_polynomial(4), (std::vector<long long>{1, 0, 1}));
  EXPECT_EQ(pbw::cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(pbw::cyclotomic_field(15).degree, 8);
  EXPECT_THROW(pbw::cyclotomic_field(0), pbw::InvalidField);
  EXPECT_THROW(Scalar::make(0, {}), pbw::InvalidField);
}

TEST(Scalar, MakeReducesModuloCyclotomicPolynomial) {
  EXPECT_EQ(Scalar::make(4, {{2, Rational(1)}}), Scalar(-1));
  EXPECT_TRUE(Scalar::make(3, {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}}).is_zero());
  EXPECT_EQ(Scalar::make(1, {{0, Rational(1, 2)}}), Scalar(Rational(1, 2)));
  EXPECT_EQ(Scalar::make(5, {{-1, Rational(1)}}), Scalar::root_of_unity(5, 4));
}

TEST(Scalar, FieldOperations) {
  EXPECT_EQ(Scalar(Rational(1, 2)) + Scalar(Rational(1, 2)), Scalar(1));
  for (int n = 2; n <= 9; ++n) EXPECT_TRUE((Scalar::root_of_unity(n, 1) * Scalar::root_of_unity(n, n - 1)).is_one());
  Scalar i = Scalar::root_of_unity(4);
  EXPECT_EQ(Scalar(4, Rational(1)) / i, -i);
  EXPECT_THROW(Scalar(1) / Scalar(4, Rational(0)), pbw::DivideByZero);
  EXPECT_THROW(Scalar::root_of_unity(3) + Scalar::root_of_unity(5), pbw::FieldMismatch);
}

TEST(Scalar, RationalsPromoteIntoAnyField) {
  Scalar z = Scalar::root_of_unity(6);
  Scalar r = z + Scalar(1);
  EXPECT_EQ(r.order(), 6);
  EXPECT_EQ(r - z, Scalar(1));
  EXPECT_EQ(Scalar(2) * z, z + z);
}

TEST(Scalar, LiteralRoundTrip) {
  Scalar s = Scalar::parse("1/2 + -1/2*z^2", 8);
  EXPECT_EQ(s.to_string(), "1/2 + -1/2*z^2");
  EXPECT_EQ(Scalar::parse("z^4", 8), Scalar(-1));
  EXPECT_EQ(Scalar::parse("-z", 3).to_string(), "-z");
  EXPECT_EQ(Scalar::parse("z^2", 3).to_string(), "-1 + -z");
  EXPECT_EQ(Scalar::parse("3 - 2*z", 4).to_string(), "3 + -2*z");
  EXPECT_EQ(Scalar::parse("0", 5).to_string(), "0");
  EXPECT_THROW(Scalar::parse("1 +", 4), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("q", 4), std::invalid_argument);
  std::mt19937 rng(7);
  for (int n : {1, 3, 4, 7, 12}) {
    for (int t = 0; t < 40; ++t) {
      Scalar a = random_scalar(rng, n);
      EXPECT_EQ(Scalar::parse(a.to_string(), n), a);
    }
  }
}

TEST(ScalarProperty, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(1234);
  for (int n : {1, 2, 3, 4, 5, 8, 12, 15}) {
    for (int t = 0; t < 60; ++t) {
      Scalar a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(ScalarProperty, MultiplicationAgreesWithComplexEmbedding) {
  std::mt19937 rng(99);
  for (int n : {3, 5, 7, 9, 12, 16}) {
    for (int t = 0; t < 40; ++t) {
      Scalar a = random_scalar(rng, n), b = random_scalar(rng, n);
      EXPECT_LT(std::abs(embed(a * b) - embed(a) * embed(b)), 1e-9);
    }
  }
}

TEST(ScalarProperty, RootsOfUnityUpTo64) {
  for (int n = 1; n <= 64; ++n) {
    Scalar z = Scalar::root_of_unity(n);
    Scalar p = Scalar(n, Rational(1));
    for (int k = 0; k < n; ++k) p = p * z;
    EXPECT_TRUE(p.is_one()) << n;
    const auto& phi = pbw::cyclotomic_polynomial(n);
    Scalar value(n, Rational(0)), power(n, Rational(1));
    for (long long c : phi) {
      value += Scalar(c) * power;
      power = power * z;
    }
    EXPECT_TRUE(value.is_zero()) << n;
    EXPECT_EQ(static_cast<int>(z.coeffs().size()), pbw::cyclotomic_field(n).degree);
  }
}
