#include "pbw/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "pbw/errors.hpp"

namespace pbw {
namespace {

using IntPoly = std::vector<long long>;

// Exact division of integer polynomials; the divisor is monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  IntPoly q(nn - dn + 1, 0);
  for (int k = nn; k >= dn; --k) {
    long long c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return q;
}

IntPoly reduce_power(long long p, const IntPoly& phi) {
  int deg = static_cast<int>(phi.size()) - 1;
  IntPoly r(std::max<long long>(p + 1, deg), 0);
  r[p] = 1;
  for (long long k = p; k >= deg; --k) {
    long long c = r[k];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) r[k - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

std::unique_ptr<CyclotomicField> build_field(int order) {
  auto f = std::make_unique<CyclotomicField>();
  f->order = order;
  f->phi = cyclotomic_polynomial(order);
  f->degree = static_cast<int>(f->phi.size()) - 1;
  f->powers.reserve(order);
  for (int p = 0; p < order; ++p) f->powers.push_back(reduce_power(p, f->phi));
  return f;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int order) {
  if (order < 1) throw InvalidField("cyclotomic order must be >= 1, got " + std::to_string(order));
  // z^N - 1 = prod_{d | N} Phi_d
  IntPoly num(order + 1, 0);
  num[0] = -1;
  num[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    num = divide_monic(num, cyclotomic_polynomial(d));
  }
  return num;
}

const CyclotomicField& cyclotomic_field(int order) {
  if (order < 1) throw InvalidField("cyclotomic order must be >= 1, got " + std::to_string(order));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  // Order 1 is hit on every default construction.
  static const CyclotomicField* rationals = [] {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[1];
    slot = build_field(1);
    return slot.get();
  }();
  if (order == 1) return *rationals;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = build_field(order);
  return *slot;
}

Scalar::Scalar(int order, Rational v) : field_(&cyclotomic_field(order)), c_(field_->degree) {
  c_[0] = std::move(v);
}

Scalar Scalar::make(int order, const std::vector<std::pair<long long, Rational>>& terms) {
  Scalar s(order, Rational());
  const auto& f = *s.field_;
  for (const auto& [power, coef] : terms) {
    if (coef.is_zero()) continue;
    long long p = power % f.order;
    if (p < 0) p += f.order;
    const auto& red = f.powers[p];
    for (int i = 0; i < f.degree; ++i)
      if (red[i] != 0) s.c_[i] += coef * Rational(red[i]);
  }
  return s;
}

Scalar Scalar::root_of_unity(int order, long long power) { return make(order, {{power, Rational(1)}}); }

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const {
  if (!c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

const CyclotomicField* Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return a.field_;
  if (a.field_->order == 1) return b.field_;
  if (b.field_->order == 1) return a.field_;
  throw FieldMismatch("Q(zeta_" + std::to_string(a.field_->order) + ") vs Q(zeta_" +
                      std::to_string(b.field_->order) + ")");
}

void Scalar::promote_to(const CyclotomicField* f) {
  if (f == field_) return;
  field_ = f;
  c_.resize(f->degree);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const auto* f = common_field(*this, o);
  promote_to(f);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  const auto* f = common_field(*this, o);
  promote_to(f);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  const auto* f = Scalar::common_field(a, b);
  Scalar r;
  r.field_ = f;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const Scalar& s = a.c_.size() == 1 ? a : b;
    const Scalar& v = a.c_.size() == 1 ? b : a;
    r.c_ = v.c_;
    if (s.c_[0].is_one()) return r;
    for (auto& c : r.c_) c *= s.c_[0];
    return r;
  }
  const int n = f->degree;
  std::vector<Rational> prod(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  // Phi_N is monic: z^n = -(phi_0 + ... + phi_{n-1} z^{n-1}).
  for (int k = 2 * n - 2; k >= n; --k) {
    if (prod[k].is_zero()) continue;
    Rational c = std::move(prod[k]);
    prod[k] = Rational();
    for (int j = 0; j < n; ++j)
      if (f->phi[j] != 0) prod[k - n + j] -= c * Rational(f->phi[j]);
  }
  r.c_.assign(prod.begin(), prod.begin() + n);
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivideByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  if (is_rational()) {
    Scalar r = *this;
    r.c_[0] = c_[0].inverse();
    return r;
  }
  // Solve M x = e_0 where column j of M is this * z^j.
  const int n = field_->degree;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    Scalar zj = make(order(), {{j, Rational(1)}});
    Scalar col = *this * zj;
    for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = Rational(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    std::swap(m[piv], m[col]);
    Rational inv = m[col][col].inverse();
    for (int k = col; k <= n; ++k) m[col][k] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rational fct = m[i][col];
      for (int k = col; k <= n; ++k) m[i][k] -= fct * m[col][k];
    }
  }
  Scalar r(order(), Rational());
  for (int i = 0; i < n; ++i) r.c_[i] = m[i][n];
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) {
    if (a.field_->order != 1 && b.field_->order != 1) return false;
    const Scalar& big = a.c_.size() >= b.c_.size() ? a : b;
    const Scalar& small = a.c_.size() >= b.c_.size() ? b : a;
    if (!big.is_rational()) return false;
    return big.c_[0] == small.c_[0];
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::string Scalar::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < c_.size(); ++p) {
    const Rational& c = c_[p];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (p == 0) {
      out += c.to_string();
      continue;
    }
    if (c.is_one()) {
    } else if (c == Rational(-1)) {
      out += "-";
    } else {
      out += c.to_string() + "*";
    }
    out += "z";
    if (p > 1) out += "^" + std::to_string(p);
  }
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view text, int order) {
  const auto& field = cyclotomic_field(order);
  std::vector<std::pair<long long, Rational>> terms;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("scalar literal '" + std::string(text) + "': " + why + " at offset " +
                                 std::to_string(i));
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw fail("expected digits");
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  if (i == n) throw fail("empty literal");
  bool first = true;
  while (true) {
    skip_ws();
    int sign = 1;
    if (!first) {
      if (i == n) break;
      if (text[i] == '+') {
        ++i;
      } else if (text[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw fail("expected '+' or '-'");
      }
      skip_ws();
    }
    while (i < n && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    Rational coef(1);
    bool have_coef = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = read_int();
      std::string den = "1";
      skip_ws();
      if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        den = read_int();
      }
      coef = Rational::parse(num + "/" + den);
      have_coef = true;
      skip_ws();
    }
    long long power = 0;
    bool have_z = false;
    if (have_coef && i < n && text[i] == '*') {
      ++i;
      skip_ws();
      if (i >= n || text[i] != 'z') throw fail("expected 'z' after '*'");
    }
    if (i < n && text[i] == 'z') {
      ++i;
      have_z = true;
      power = 1;
      skip_ws();
      if (i < n && text[i] == '^') {
        ++i;
        skip_ws();
        int psign = 1;
        if (i < n && text[i] == '-') {
          psign = -1;
          ++i;
        }
        power = psign * std::stoll(read_int());
      }
    }
    if (!have_coef && !have_z) throw fail("expected a term");
    if (sign < 0) coef = -coef;
    terms.emplace_back(power, coef);
    first = false;
    skip_ws();
    if (i == n) break;
  }
  return make(field.order, terms);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pbw
