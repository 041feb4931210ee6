#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <Eigen/Core>

#include "pbw/rational.hpp"

namespace pbw {

/// The cyclotomic field Q(zeta_N): degree phi(N), defining polynomial Phi_N.
struct CyclotomicField {
  int order = 1;
  int degree = 1;
  /// Phi_N, coefficient of z^i at index i; monic of length degree + 1.
  std::vector<long long> phi;
  /// zeta^p reduced modulo Phi_N, for 0 <= p < order.
  std::vector<std::vector<long long>> powers;
};

/// Shared, immutable field descriptor for Q(zeta_N). Throws InvalidField for N < 1.
const CyclotomicField& cyclotomic_field(int order);

/// Integer coefficients of the N-th cyclotomic polynomial.
std::vector<long long> cyclotomic_polynomial(int order);

/// Element of Q(zeta_N), stored as a polynomial in zeta of degree < phi(N).
///
/// Elements of Q (order 1) embed into every Q(zeta_N) and combine with any
/// order; combining two different orders above 1 throws FieldMismatch.
class Scalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  Scalar() : field_(&cyclotomic_field(1)), c_(1) {}
  Scalar(long long v) : field_(&cyclotomic_field(1)), c_(1, Rational(v)) {}  // NOLINT
  Scalar(Rational v) : field_(&cyclotomic_field(1)), c_(1, std::move(v)) {}  // NOLINT
  Scalar(int order, Rational v);

  /// Canonical element sum c_p zeta_N^p; powers may be any integer.
  static Scalar make(int order, const std::vector<std::pair<long long, Rational>>& terms);
  /// zeta_N^p.
  static Scalar root_of_unity(int order, long long power = 1);
  /// Parses the literal syntax `num/den*z^p + ...` with z = zeta_N.
  static Scalar parse(std::string_view text, int order);

  int order() const { return field_->order; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q.
  bool is_rational() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Literal form, terms in increasing power: `1/2 + -1/2*z^2`.
  std::string to_string() const;

 private:
  const CyclotomicField* field_;
  Coeffs c_;

  void promote_to(const CyclotomicField* f);
  static const CyclotomicField* common_field(const Scalar& a, const Scalar& b);
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pbw

namespace Eigen {

template <>
struct NumTraits<pbw::Scalar> : GenericNumTraits<pbw::Scalar> {
  using Real = pbw::Scalar;
  using NonInteger = pbw::Scalar;
  using Nested = pbw::Scalar;
  using Literal = pbw::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<pbw::Rational> : GenericNumTraits<pbw::Rational> {
  using Real = pbw::Rational;
  using NonInteger = pbw::Rational;
  using Nested = pbw::Rational;
  using Literal = pbw::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
