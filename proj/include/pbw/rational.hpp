#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pbw {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline; anything larger spills to a GMP rational. The representation is
/// always reduced with a positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  /// Multiplicative inverse. Throws DivideByZero for zero.
  Rational inverse() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

 private:
  void assign_big(mpq_class q);
  void demote();

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace pbw
