#include "pbw/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "pbw/errors.hpp"

namespace pbw {
namespace {

using i128 = __int128;

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool fits(i128 v) { return v <= kMax && v >= -static_cast<i128>(kMax); }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  auto hi = static_cast<uint64_t>(u >> 64);
  auto lo = static_cast<uint64_t>(u);
  mpz_class z = hi;
  z <<= 64;
  z += mpz_class(lo);
  if (neg) z = -z;
  return z;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivideByZero("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
  } else {
    mpq_class q(to_mpz(n), to_mpz(d));
    assign_big(std::move(q));
  }
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    if (big_) *big_ = *o.big_;
    else big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_big(mpq_class q) {
  big_ = std::make_unique<mpq_class>(std::move(q));
  demote();
}

void Rational::demote() {
  if (!big_) return;
  const mpz_class& n = big_->get_num();
  const mpz_class& d = big_->get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    long nn = n.get_si();
    long dd = d.get_si();
    if (nn != std::numeric_limits<long>::min()) {
      num_ = nn;
      den_ = dd;
      big_.reset();
    }
  }
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto check_int = [](std::string_view s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!check_int(num) || !check_int(den)) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  std::string ns(num), ds(den);
  if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
  if (!ds.empty() && ds[0] == '+') ds.erase(0, 1);
  mpz_class zn(ns, 10), zd(ds, 10);
  if (zd == 0) throw DivideByZero("rational literal with zero denominator");
  return Rational(mpq_class(zn, zd));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = static_cast<i128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<int64_t>(s);
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    assign_big(mpq_class(to_mpz(n), to_mpz(d)));
    big_->canonicalize();
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Rational();
  if (!big_ && !o.big_) {
    int64_t g1 = std::gcd(num_, o.den_);
    int64_t g2 = std::gcd(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    assign_big(mpq_class(to_mpz(n), to_mpz(d)));
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivideByZero("inverse of zero rational");
  if (big_) return Rational(mpq_class(1 / *big_));
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // demotion keeps small values small, so mixed forms differ
}

}  // namespace pbw
