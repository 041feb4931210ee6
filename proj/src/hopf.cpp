#include "pbw/hopf.hpp"

#include <algorithm>

namespace pbw {

HopfAlgebra::HopfAlgebra(int field_order, std::vector<std::string> labels)
    : order_(field_order),
      dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      mult_(static_cast<std::size_t>(dim_) * dim_),
      comult_(dim_),
      unit_(zero_vector<Scalar>(dim_)),
      counit_(dim_, Scalar(0)),
      antipode_(zero_matrix<Scalar>(dim_, dim_)) {
  cyclotomic_field(field_order);
}

void HopfAlgebra::set_product(int i, int j, SparseVec value) {
  SparseVec cleaned;
  for (auto& [k, c] : value)
    if (!c.is_zero()) cleaned.emplace_back(k, std::move(c));
  std::sort(cleaned.begin(), cleaned.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  mult_.at(static_cast<std::size_t>(i) * dim_ + j) = std::move(cleaned);
}

void HopfAlgebra::set_coproduct(int i, std::vector<CoproductTerm> terms) {
  std::vector<CoproductTerm> cleaned;
  for (auto& t : terms)
    if (!t.coef.is_zero()) cleaned.push_back(std::move(t));
  std::sort(cleaned.begin(), cleaned.end(),
            [](const auto& a, const auto& b) { return std::pair(a.left, a.right) < std::pair(b.left, b.right); });
  comult_.at(i) = std::move(cleaned);
}

void HopfAlgebra::set_antipode(int i, const Vec& image) {
  if (image.size() != dim_) throw DimensionMismatch("antipode image has wrong length");
  antipode_.col(i) = image;
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, v] : product(i, j)) out[k] += c * v;
    }
  }
  return out;
}

Mat HopfAlgebra::comultiply(const Vec& a) const {
  Mat out = zero_matrix<Scalar>(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : comult_[i]) out(t.left, t.right) += a[i] * t.coef;
  }
  return out;
}

SparseTensor HopfAlgebra::comultiply_iterated(const Vec& a, int legs) const {
  if (legs < 1) throw DimensionMismatch("iterated coproduct needs at least one leg");
  SparseTensor cur;
  for (int i = 0; i < dim_; ++i)
    if (!a[i].is_zero()) cur[{i}] = a[i];
  for (int step = 1; step < legs; ++step) {
    SparseTensor next;
    for (const auto& [idx, c] : cur) {
      for (const auto& t : comult_[idx[0]]) {
        std::vector<int> key;
        key.reserve(idx.size() + 1);
        key.push_back(t.left);
        key.push_back(t.right);
        key.insert(key.end(), idx.begin() + 1, idx.end());
        next[key] += c * t.coef;
      }
    }
    cur.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) cur.emplace(k, std::move(v));
  }
  return cur;
}

Scalar HopfAlgebra::counit_of(const Vec& a) const {
  Scalar s(0);
  for (int i = 0; i < dim_; ++i)
    if (!a[i].is_zero()) s += a[i] * counit_[i];
  return s;
}

Vec HopfAlgebra::antipode(const Vec& a) const { return pbw::multiply(antipode_, a); }

Vec HopfAlgebra::antipode_inverse(const Vec& a) const {
  if (!antipode_inv_) throw ValidationError("antipode inverse requested before validate_hopf");
  return pbw::multiply(*antipode_inv_, a);
}

Mat HopfAlgebra::left_multiplication(const Vec& a) const {
  Mat m = zero_matrix<Scalar>(dim_, dim_);
  for (int j = 0; j < dim_; ++j) m.col(j) = multiply(a, basis(j));
  return m;
}

Mat HopfAlgebra::tensor_multiply(const Mat& a, const Mat& b) const {
  Mat out = zero_matrix<Scalar>(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          if (b(k, l).is_zero()) continue;
          Scalar c = a(i, j) * b(k, l);
          for (const auto& [p, cp] : product(i, k))
            for (const auto& [q, cq] : product(j, l)) out(p, q) += c * cp * cq;
        }
    }
  return out;
}

std::string format_vector(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    const Scalar& c = v[i];
    if (c.is_zero()) continue;
    const std::string& label = labels[i];
    const bool unit_label = label == "1";
    std::string term;
    if (unit_label) {
      term = c.to_string();
      if (!c.is_rational()) term = "(" + term + ")";
    } else if (c.is_one()) {
      term = label;
    } else if (c == Scalar(-1)) {
      term = "-" + label;
    } else if (c.is_rational()) {
      term = c.to_string() + "*" + label;
    } else {
      term = "(" + c.to_string() + ")*" + label;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string HopfAlgebra::format(const Vec& a) const { return format_vector(a, labels_); }

int HopfAlgebra::find_label(std::string_view label) const {
  for (int i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

namespace {

std::string format_tensor2(const HopfAlgebra& h, const Mat& m) {
  std::string out;
  for (int j = 0; j < h.dim(); ++j)
    for (int k = 0; k < h.dim(); ++k) {
      if (m(j, k).is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string c = m(j, k).is_one() ? "" : "(" + m(j, k).to_string() + ")*";
      out += c + h.labels()[j] + "⊗" + h.labels()[k];
    }
  return out.empty() ? "0" : out;
}

std::string format_tensor3(const HopfAlgebra& h, const std::vector<Scalar>& t) {
  const int d = h.dim();
  std::string out;
  for (int i = 0; i < d * d * d; ++i) {
    if (t[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = t[i].is_one() ? "" : "(" + t[i].to_string() + ")*";
    out += c + h.labels()[i / (d * d)] + "⊗" + h.labels()[(i / d) % d] + "⊗" + h.labels()[i % d];
  }
  return out.empty() ? "0" : out;
}

bool equal_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool equal_mat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

ValidationReport validate_hopf(HopfAlgebra& h) {
  ValidationReport rep;
  const int d = h.dim();
  h.antipode_inv_.reset();
  if (d == 0) {
    rep.fail({"dimension", {}, "0", ">= 1"});
    return rep;
  }
  const Vec one = h.unit();

  // Associativity: (e_i e_j) e_k = e_i (e_j e_k).
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec ij = h.zero();
      for (const auto& [k, c] : h.product(i, j)) ij[k] += c;
      for (int k = 0; k < d; ++k) {
        Vec lhs = h.zero();
        for (int p = 0; p < d; ++p) {
          if (ij[p].is_zero()) continue;
          for (const auto& [q, c] : h.product(p, k)) lhs[q] += ij[p] * c;
        }
        Vec rhs = h.zero();
        for (const auto& [p, c] : h.product(j, k))
          for (const auto& [q, c2] : h.product(i, p)) rhs[q] += c * c2;
        if (!equal_vec(lhs, rhs)) rep.fail({"associativity", {i, j, k}, h.format(lhs), h.format(rhs)});
      }
    }

  // Unit.
  for (int i = 0; i < d; ++i) {
    Vec e = h.basis(i);
    Vec l = h.multiply(one, e);
    Vec r = h.multiply(e, one);
    if (!equal_vec(l, e)) rep.fail({"unit", {i}, h.format(l), h.format(e)});
    if (!equal_vec(r, e)) rep.fail({"unit", {i}, h.format(r), h.format(e)});
  }

  std::vector<Mat> delta(d);
  for (int i = 0; i < d; ++i) delta[i] = h.comultiply(h.basis(i));

  // Coassociativity.
  for (int i = 0; i < d; ++i) {
    std::vector<Scalar> lhs(static_cast<std::size_t>(d) * d * d, Scalar(0));
    std::vector<Scalar> rhs(static_cast<std::size_t>(d) * d * d, Scalar(0));
    for (const auto& t : h.coproduct(i)) {
      for (const auto& s : h.coproduct(t.left)) lhs[(s.left * d + s.right) * d + t.right] += t.coef * s.coef;
      for (const auto& s : h.coproduct(t.right)) rhs[(t.left * d + s.left) * d + s.right] += t.coef * s.coef;
    }
    if (lhs != rhs) rep.fail({"coassociativity", {i}, format_tensor3(h, lhs), format_tensor3(h, rhs)});
  }

  // Counit: (ε⊗id)Δ = id = (id⊗ε)Δ.
  for (int i = 0; i < d; ++i) {
    Vec l = h.zero(), r = h.zero();
    for (const auto& t : h.coproduct(i)) {
      l[t.right] += h.counit(t.left) * t.coef;
      r[t.left] += h.counit(t.right) * t.coef;
    }
    Vec e = h.basis(i);
    if (!equal_vec(l, e)) rep.fail({"counit", {i}, h.format(l), h.format(e)});
    if (!equal_vec(r, e)) rep.fail({"counit", {i}, h.format(r), h.format(e)});
  }

  // Bialgebra compatibility.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec ij = h.zero();
      for (const auto& [k, c] : h.product(i, j)) ij[k] += c;
      Mat lhs = h.comultiply(ij);
      Mat rhs = h.tensor_multiply(delta[i], delta[j]);
      if (!equal_mat(lhs, rhs))
        rep.fail({"bialgebra_coproduct", {i, j}, format_tensor2(h, lhs), format_tensor2(h, rhs)});
      Scalar el = h.counit_of(ij);
      Scalar er = h.counit(i) * h.counit(j);
      if (el != er) rep.fail({"bialgebra_counit", {i, j}, el.to_string(), er.to_string()});
    }
  {
    Mat lhs = h.comultiply(one);
    Mat rhs = zero_matrix<Scalar>(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!one[j].is_zero() && !one[k].is_zero()) rhs(j, k) = one[j] * one[k];
    if (!equal_mat(lhs, rhs)) rep.fail({"coproduct_of_unit", {}, format_tensor2(h, lhs), format_tensor2(h, rhs)});
    Scalar e1 = h.counit_of(one);
    if (!e1.is_one()) rep.fail({"counit_of_unit", {}, e1.to_string(), "1"});
  }

  // Antipode: Σ S(h1) h2 = ε(h)1 = Σ h1 S(h2).
  for (int i = 0; i < d; ++i) {
    Vec l = h.zero(), r = h.zero();
    for (const auto& t : h.coproduct(i)) {
      Vec s_left = h.antipode(h.basis(t.left));
      Vec s_right = h.antipode(h.basis(t.right));
      Vec x = h.multiply(s_left, h.basis(t.right));
      Vec y = h.multiply(h.basis(t.left), s_right);
      for (int k = 0; k < d; ++k) {
        if (!x[k].is_zero()) l[k] += t.coef * x[k];
        if (!y[k].is_zero()) r[k] += t.coef * y[k];
      }
    }
    Vec expected = one;
    const Scalar& eps = h.counit(i);
    for (int k = 0; k < d; ++k) expected[k] = expected[k] * eps;
    if (!equal_vec(l, expected)) rep.fail({"antipode_left", {i}, h.format(l), h.format(expected)});
    if (!equal_vec(r, expected)) rep.fail({"antipode_right", {i}, h.format(r), h.format(expected)});
  }

  // Bijectivity of S.
  auto r = rref<Scalar>(h.antipode_matrix());
  if (r.rank < d) {
    rep.fail({"antipode_bijective", {}, "rank " + std::to_string(r.rank), "rank " + std::to_string(d)});
  } else if (rep.passed) {
    Mat aug(d, 2 * d);
    aug.leftCols(d) = h.antipode_matrix();
    aug.rightCols(d) = identity_matrix<Scalar>(d);
    auto rr = rref<Scalar>(aug);
    h.antipode_inv_ = rr.reduced.rightCols(d);
  }
  return rep;
}

Vec adjoint_on_H(const HopfAlgebra& h, const Vec& a, const Vec& l) {
  Vec out = h.zero();
  Mat delta = h.comultiply(a);
  for (int j = 0; j < h.dim(); ++j)
    for (int k = 0; k < h.dim(); ++k) {
      if (delta(j, k).is_zero()) continue;
      Vec t = h.multiply(h.multiply(h.basis(j), l), h.antipode(h.basis(k)));
      for (int p = 0; p < h.dim(); ++p)
        if (!t[p].is_zero()) out[p] += delta(j, k) * t[p];
    }
  return out;
}

HopfAlgebra group_algebra(const std::vector<std::vector<int>>& table, const std::vector<int>& inverse, int field_order,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("table entry " + std::to_string(v) + " out of range");
  }
  if (static_cast<int>(inverse.size()) != n) throw NotAGroup("inverse table has wrong length");
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity < 0) throw NotAGroup("no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAGroup("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ")");
  for (int g = 0; g < n; ++g) {
    int gi = inverse[g];
    if (gi < 0 || gi >= n || table[g][gi] != identity || table[gi][g] != identity)
      throw NotAGroup("inverse table wrong at " + std::to_string(g));
  }
  if (labels.empty()) {
    for (int g = 0; g < n; ++g) labels.push_back(g == identity ? "1" : "g" + std::to_string(g));
  }
  HopfAlgebra h(field_order, std::move(labels));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.set_product(a, b, {{table[a][b], Scalar(1)}});
  for (int g = 0; g < n; ++g) {
    h.set_coproduct(g, {{g, g, Scalar(1)}});
    h.set_counit(g, Scalar(1));
    h.set_antipode(g, h.basis(inverse[g]));
  }
  h.set_unit(h.basis(identity));
  auto rep = validate_hopf(h);
  if (!rep.passed) throw NotAGroup("group algebra failed validation: " + rep.failures.front().axiom);
  return h;
}

}  // namespace pbw
