#include <functional>
#include <regex>
#include <stdexcept>

#include "pbw/errors.hpp"
#include "pbw/hopf.hpp"

namespace pbw {
namespace {

std::string monomial(const std::string& letter, int power) {
  if (power == 0) return "";
  if (power == 1) return letter;
  return letter + "^" + std::to_string(power);
}

std::string word_label(const std::vector<std::pair<std::string, int>>& parts) {
  std::string s;
  for (const auto& [letter, power] : parts) s += monomial(letter, power);
  return s.empty() ? "1" : s;
}

struct Generator {
  int index;
  std::vector<CoproductTerm> delta;
  Scalar counit;
  Vec antipode;
};

// Assembles a Hopf algebra from its multiplication table and generator data.
// Every basis element is a word in the generators; coproduct, counit and
// antipode are extended multiplicatively (anti-multiplicatively for S).
HopfAlgebra assemble(int order, std::vector<std::string> labels, const std::function<SparseVec(int, int)>& product,
                     const std::vector<Generator>& gens, const std::vector<std::vector<int>>& words) {
  const int d = static_cast<int>(labels.size());
  HopfAlgebra h(order, std::move(labels));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h.set_product(i, j, product(i, j));
  h.set_unit(h.basis(0));

  std::vector<Mat> gen_delta;
  for (const auto& g : gens) {
    Mat m = zero_matrix<Scalar>(d, d);
    for (const auto& t : g.delta) m(t.left, t.right) += t.coef;
    gen_delta.push_back(std::move(m));
  }
  for (int i = 0; i < d; ++i) {
    Vec elem = h.basis(0);
    Mat delta = zero_matrix<Scalar>(d, d);
    delta(0, 0) = Scalar(1);
    Scalar eps(1);
    Vec s = h.basis(0);
    for (int k : words[i]) {
      elem = h.multiply(elem, h.basis(gens[k].index));
      delta = h.tensor_multiply(delta, gen_delta[k]);
      eps = eps * gens[k].counit;
      s = h.multiply(gens[k].antipode, s);
    }
    for (int p = 0; p < d; ++p)
      if (elem[p] != (p == i ? Scalar(1) : Scalar(0)))
        throw std::logic_error("preset word does not evaluate to basis element " + h.labels()[i]);
    std::vector<CoproductTerm> terms;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (!delta(a, b).is_zero()) terms.push_back({a, b, delta(a, b)});
    h.set_coproduct(i, std::move(terms));
    h.set_counit(i, eps);
    h.set_antipode(i, s);
  }
  auto rep = validate_hopf(h);
  if (!rep.passed) throw std::logic_error("preset fails validation: " + rep.failures.front().axiom);
  return h;
}

// T(n): basis g^i x^j at index i + n j, with g^n = 1, x^n = 0, xg = zeta gx,
// Δ(g) = g⊗g, Δ(x) = g⊗x + x⊗1.
HopfAlgebra taft(int n, int order) {
  if (n < 2) throw UnknownPreset("taft(n) needs n >= 2");
  if (order == 0) order = n > 2 ? n : 1;
  if (n > 2 && order % n != 0)
    throw FieldTooSmall("taft(" + std::to_string(n) + ") needs a field order divisible by " + std::to_string(n));
  const Scalar zeta = n == 2 ? Scalar(order, Rational(-1)) : Scalar::root_of_unity(order, order / n);
  std::vector<Scalar> zeta_pow{Scalar(order, Rational(1))};
  for (int k = 1; k < n; ++k) zeta_pow.push_back(zeta_pow.back() * zeta);

  std::vector<std::string> labels;
  std::vector<std::vector<int>> words;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      labels.push_back(word_label({{"g", i}, {"x", j}}));
      std::vector<int> w(i, 0);
      w.insert(w.end(), j, 1);
      words.push_back(std::move(w));
    }
  auto product = [n, &zeta_pow](int a, int b) -> SparseVec {
    int i = a % n, j = a / n, k = b % n, l = b / n;
    if (j + l >= n) return {};
    return {{(i + k) % n + n * (j + l), zeta_pow[(j * k) % n]}};
  };
  const int g = 1, x = n;
  Vec s_g = zero_vector<Scalar>(n * n);
  s_g[n - 1] = Scalar(1);
  Vec s_x = zero_vector<Scalar>(n * n);
  s_x[(n - 1) + n] = Scalar(-1);
  std::vector<Generator> gens{
      {g, {{g, g, Scalar(1)}}, Scalar(1), s_g},
      {x, {{g, x, Scalar(1)}, {x, 0, Scalar(1)}}, Scalar(0), s_x},
  };
  auto h = assemble(order, labels, product, gens, words);
  return h;
}

// H_8: basis x^a y^b z^c at index a + 2b + 4c; x² = y² = 1, xy = yx,
// zx = yz, zy = xz, z² = ½(1 + x + y − xy).
HopfAlgebra h8(int order) {
  if (order == 0) order = 1;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> words;
  for (int c = 0; c < 2; ++c)
    for (int b = 0; b < 2; ++b)
      for (int a = 0; a < 2; ++a) {
        labels.push_back(word_label({{"x", a}, {"y", b}, {"z", c}}));
        std::vector<int> w(a, 0);
        w.insert(w.end(), b, 1);
        w.insert(w.end(), c, 2);
        words.push_back(std::move(w));
      }
  const Scalar half(Rational(1, 2));
  auto idx = [](int a, int b, int c) { return (a % 2) + 2 * (b % 2) + 4 * c; };
  auto product = [&](int p, int q) -> SparseVec {
    int a = p % 2, b = (p / 2) % 2, c = p / 4;
    int a2 = q % 2, b2 = (q / 2) % 2, c2 = q / 4;
    int A, B;
    if (c == 1) {
      A = a + b2;
      B = b + a2;
    } else {
      A = a + a2;
      B = b + b2;
    }
    if (c + c2 < 2) return {{idx(A, B, c + c2), Scalar(1)}};
    return {{idx(A, B, 0), half}, {idx(A + 1, B, 0), half}, {idx(A, B + 1, 0), half}, {idx(A + 1, B + 1, 0), -half}};
  };
  const int x = 1, y = 2, z = 4, xz = 5, yz = 6;
  auto basis = [](int i) { return unit_vector<Scalar>(8, i); };
  std::vector<Generator> gens{
      {x, {{x, x, Scalar(1)}}, Scalar(1), basis(x)},
      {y, {{y, y, Scalar(1)}}, Scalar(1), basis(y)},
      {z, {{z, z, half}, {z, xz, half}, {yz, z, half}, {yz, xz, -half}}, Scalar(1), basis(z)},
  };
  return assemble(order, labels, product, gens, words);
}

// H_{a:1}: basis x^i y^j z^k at index i + 4j + 8k; x⁴ = y² = z² = 1,
// xy = yx, zy = yz, zx = xyz.
HopfAlgebra ha1(int order) {
  if (order == 0) order = 4;
  if (order % 4 != 0) throw FieldTooSmall("ha1 needs a field order divisible by 4");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> words;
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 4; ++i) {
        labels.push_back(word_label({{"x", i}, {"y", j}, {"z", k}}));
        std::vector<int> w(i, 0);
        w.insert(w.end(), j, 1);
        w.insert(w.end(), k, 2);
        words.push_back(std::move(w));
      }
  auto idx = [](int i, int j, int k) { return (i % 4) + 4 * (j % 2) + 8 * (k % 2); };
  auto product = [&](int p, int q) -> SparseVec {
    int i = p % 4, j = (p / 4) % 2, k = p / 8;
    int i2 = q % 4, j2 = (q / 4) % 2, k2 = q / 8;
    if (k == 1) return {{idx(i + i2, j + i2 + j2, 1 + k2), Scalar(1)}};
    return {{idx(i + i2, j + j2, k2), Scalar(1)}};
  };
  const Scalar half(Rational(1, 2));
  const int x = idx(1, 0, 0), y = idx(0, 1, 0), z = idx(0, 0, 1);
  const int x2z = idx(2, 0, 1), yz = idx(0, 1, 1), x2yz = idx(2, 1, 1);
  Vec s_x = unit_vector<Scalar>(16, idx(3, 0, 0));
  Vec s_y = unit_vector<Scalar>(16, y);
  Vec s_z = zero_vector<Scalar>(16);
  s_z[z] = half;
  s_z[x2z] = half;
  s_z[yz] = half;
  s_z[x2yz] = -half;
  std::vector<Generator> gens{
      {x, {{x, x, Scalar(1)}}, Scalar(1), s_x},
      {y, {{y, y, Scalar(1)}}, Scalar(1), s_y},
      {z, {{z, z, half}, {z, x2z, half}, {yz, z, half}, {yz, x2z, -half}}, Scalar(1), s_z},
  };
  return assemble(order, labels, product, gens, words);
}

HopfAlgebra cyclic(int n, int order) {
  if (n < 1) throw UnknownPreset("cyclic(n) needs n >= 1");
  if (order == 0) order = n;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> inverse(n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    inverse[a] = (n - a) % n;
    labels.push_back(word_label({{"g", a}}));
  }
  return group_algebra(table, inverse, order, labels);
}

}  // namespace

HopfAlgebra preset_hopf(std::string_view name, int field_order) {
  if (field_order < 0) throw InvalidField("field order must be >= 1");
  const std::string s(name);
  static const std::regex param(R"(([a-z]+)(?:\((\d+)\)|-(\d+)))");
  std::smatch m;
  if (s == "sweedler") return taft(2, field_order);
  if (s == "h8") return h8(field_order);
  if (s == "ha1") return ha1(field_order);
  if (std::regex_match(s, m, param)) {
    const std::string base = m[1];
    const int n = std::stoi(m[2].matched ? m[2].str() : m[3].str());
    if (base == "taft") return taft(n, field_order);
    if (base == "cyclic") return cyclic(n, field_order);
  }
  throw UnknownPreset("unknown Hopf algebra preset '" + s + "'");
}

}  // namespace pbw
