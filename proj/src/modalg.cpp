#include "pbw/modalg.hpp"

#include <deque>

#include "pbw/errors.hpp"

namespace pbw {
namespace {

using SparseCol = std::vector<std::pair<int, Scalar>>;

std::vector<std::vector<SparseCol>> action_columns(const ModuleAlgebra& b) {
  std::vector<std::vector<SparseCol>> cols(b.action.size(), std::vector<SparseCol>(b.vdim));
  for (std::size_t i = 0; i < b.action.size(); ++i)
    for (int v = 0; v < b.vdim; ++v)
      for (int w = 0; w < b.vdim; ++w)
        if (!b.action[i](w, v).is_zero()) cols[i][v].emplace_back(w, b.action[i](w, v));
  return cols;
}

bool equal_mat(const Mat& a, const Mat& b) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::string format_matrix(const Mat& m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    s += i ? "; " : "";
    for (Index j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
  }
  return s + "]";
}

}  // namespace

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<Mat> extend_action(const HopfAlgebra& h, const std::vector<std::pair<Vec, Mat>>& generators) {
  const int d = h.dim();
  if (generators.empty()) throw ValidationError("action needs at least one generator");
  const Index vdim = generators.front().second.rows();
  for (const auto& [g, m] : generators) {
    if (g.size() != d) throw DimensionMismatch("action generator is not an element of H");
    if (m.rows() != vdim || m.cols() != vdim) throw DimensionMismatch("action matrices must be square of size dim V");
  }
  // Breadth-first over words; keep the elements that enlarge the span.
  std::vector<Vec> span_elems;
  std::vector<Mat> span_images;
  SparseEchelon<Scalar> ech(d);
  std::deque<std::pair<Vec, Mat>> queue{{h.unit(), identity_matrix<Scalar>(vdim)}};
  while (!queue.empty() && static_cast<int>(span_elems.size()) < d) {
    auto [e, m] = std::move(queue.front());
    queue.pop_front();
    if (ech.insert(to_sparse<Scalar>(e)) < 0) continue;
    for (const auto& [g, mg] : generators) queue.emplace_back(h.multiply(e, g), multiply<Scalar>(m, mg));
    span_elems.push_back(std::move(e));
    span_images.push_back(std::move(m));
  }
  if (static_cast<int>(span_elems.size()) < d)
    throw ValidationError("the listed action generators span only a " + std::to_string(span_elems.size()) +
                          "-dimensional subalgebra of H");
  Mat basis(d, d);
  for (int k = 0; k < d; ++k) basis.col(k) = span_elems[k];
  std::vector<Mat> out;
  for (int i = 0; i < d; ++i) {
    auto sol = solve<Scalar>(basis, h.basis(i));
    Mat rho = zero_matrix<Scalar>(vdim, vdim);
    for (int k = 0; k < d; ++k)
      if (!sol->particular[k].is_zero()) rho += span_images[k] * sol->particular[k];
    out.push_back(std::move(rho));
  }
  return out;
}

ModuleAlgebra make_module_algebra(const HopfAlgebra& h, std::vector<std::string> vlabels,
                                  const std::vector<Vec>& relation_span,
                                  const std::vector<std::pair<Vec, Mat>>& generator_action, int cutoff) {
  ModuleAlgebra b;
  b.vdim = static_cast<int>(vlabels.size());
  b.vlabels = std::move(vlabels);
  for (const auto& r : relation_span)
    if (r.size() != b.vdim * b.vdim) throw DimensionMismatch("relation is not an element of V⊗V");
  b.relations = Subspace<Scalar>::span(relation_span, b.vdim * b.vdim);
  b.action = extend_action(h, generator_action);
  b.cutoff = cutoff;
  return b;
}

Vec act_on_tensor(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& t, int m) {
  const long long n = ipow(b.vdim, m);
  if (t.size() != n) throw DimensionMismatch("tensor length does not match V^{⊗m}");
  Vec out = zero_vector<Scalar>(n);
  if (m == 0) {
    out[0] = h.counit_of(a) * t[0];
    return out;
  }
  const auto cols = action_columns(b);
  const auto delta = h.comultiply_iterated(a, m);
  std::vector<std::pair<long long, Scalar>> partial, next;
  for (long long w = 0; w < n; ++w) {
    if (t[w].is_zero()) continue;
    for (const auto& [legs, c] : delta) {
      partial.assign(1, {0, c * t[w]});
      for (int k = 0; k < m; ++k) {
        const int letter = static_cast<int>((w / ipow(b.vdim, m - 1 - k)) % b.vdim);
        next.clear();
        for (const auto& [word, pc] : partial)
          for (const auto& [img, ic] : cols[legs[k]][letter]) next.emplace_back(word * b.vdim + img, pc * ic);
        partial.swap(next);
      }
      for (const auto& [word, pc] : partial) out[word] += pc;
    }
  }
  return out;
}

Vec act_on_tensor(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& t) {
  int m = 0;
  long long n = 1;
  while (n < t.size()) {
    n *= b.vdim;
    ++m;
  }
  if (n != t.size() || (b.vdim == 1 && t.size() != 1)) throw DimensionMismatch("tensor length is not a power of dim V");
  return act_on_tensor(h, b, a, t, m);
}

ValidationReport validate_action(const HopfAlgebra& h, const ModuleAlgebra& b) {
  const int d = h.dim();
  if (static_cast<int>(b.action.size()) != d) throw DimensionMismatch("one action matrix per basis element of H");
  if (b.relations.ambient_dim() != b.vdim * b.vdim) throw DimensionMismatch("relations must live in V⊗V");
  ValidationReport rep;
  Mat rho_one = zero_matrix<Scalar>(b.vdim, b.vdim);
  for (int i = 0; i < d; ++i)
    if (!h.unit()[i].is_zero()) rho_one += b.action[i] * h.unit()[i];
  if (!equal_mat(rho_one, identity_matrix<Scalar>(b.vdim)))
    rep.fail({"module_unit", {}, format_matrix(rho_one), "identity"});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat lhs = zero_matrix<Scalar>(b.vdim, b.vdim);
      for (const auto& [k, c] : h.product(i, j)) lhs += b.action[k] * c;
      Mat rhs = multiply<Scalar>(b.action[i], b.action[j]);
      if (!equal_mat(lhs, rhs)) rep.fail({"module_associativity", {i, j}, format_matrix(lhs), format_matrix(rhs)});
    }
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < b.relation_count(); ++a) {
      Vec img = act_on_tensor(h, b, h.basis(i), b.relation(a), 2);
      if (!membership(img, b.relations))
        rep.fail({"relation_stability", {i, a}, format_tensor(img, b.vlabels, 2), "an element of I"});
    }
  return rep;
}

long long graded_dim(const ModuleAlgebra& b, int n) {
  if (n < 0) throw DimensionMismatch("degree must be nonnegative");
  if (n > b.cutoff) throw CutoffExceeded("degree " + std::to_string(n) + " exceeds cutoff " + std::to_string(b.cutoff));
  const long long total = ipow(b.vdim, n);
  if (n < 2) return total;
  SparseEchelon<Scalar> ech(total);
  const long long vv = static_cast<long long>(b.vdim) * b.vdim;
  std::vector<SparseRow<Scalar>> rels;
  for (int a = 0; a < b.relation_count(); ++a) rels.push_back(to_sparse<Scalar>(b.relation(a)));
  for (int i = 0; i + 2 <= n; ++i) {
    const long long right = ipow(b.vdim, n - 2 - i);
    for (long long p = 0; p < ipow(b.vdim, i); ++p)
      for (long long s = 0; s < right; ++s)
        for (const auto& r : rels) {
          SparseRow<Scalar> row;
          for (const auto& e : r) row.push_back({(p * vv + e.col) * right + s, e.val});
          ech.insert(row);
        }
  }
  return total - ech.rank();
}

Subspace<Scalar> koszul_component(const ModuleAlgebra& b, int i) {
  if (i < 2) throw DimensionMismatch("Koszul components start in degree 2");
  if (i > b.cutoff) throw CutoffExceeded("degree " + std::to_string(i) + " exceeds cutoff " + std::to_string(b.cutoff));
  if (i == 2) return b.relations;
  const long long total = ipow(b.vdim, i);
  const long long vv = static_cast<long long>(b.vdim) * b.vdim;
  Matrix<Scalar> ann = annihilator(b.relations);
  std::vector<SparseRow<Scalar>> constraints;
  for (Index q = 0; q < ann.rows(); ++q) constraints.push_back(to_sparse<Scalar>(ann.row(q).transpose()));
  SparseEchelon<Scalar> ech(total);
  for (int j = 0; j + 2 <= i; ++j) {
    const long long right = ipow(b.vdim, i - 2 - j);
    for (long long p = 0; p < ipow(b.vdim, j); ++p)
      for (long long s = 0; s < right; ++s)
        for (const auto& q : constraints) {
          SparseRow<Scalar> row;
          for (const auto& e : q) row.push_back({(p * vv + e.col) * right + s, e.val});
          ech.insert(row);
        }
  }
  return ech.kernel();
}

std::string format_tensor(const Vec& v, const std::vector<std::string>& vlabels, int m,
                          const std::vector<std::string>& hlabels) {
  const long long vdim = static_cast<long long>(vlabels.size());
  const long long d = hlabels.empty() ? 1 : static_cast<long long>(hlabels.size());
  std::string out;
  for (Index idx = 0; idx < v.size(); ++idx) {
    const Scalar& c = v[idx];
    if (c.is_zero()) continue;
    long long word = idx / d;
    std::vector<std::string> parts(m);
    for (int k = m - 1; k >= 0; --k) {
      parts[k] = vlabels[word % vdim];
      word /= vdim;
    }
    std::string label;
    for (int k = 0; k < m; ++k) label += (k ? "⊗" : "") + parts[k];
    if (!hlabels.empty()) {
      const std::string& hl = hlabels[idx % d];
      if (label.empty())
        label = hl;
      else
        label += "⊗" + hl;
    }
    if (label.empty()) label = "1";
    std::string term;
    if (label == "1") {
      term = c.is_rational() ? c.to_string() : "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      term = label;
    } else if (c == Scalar(-1)) {
      term = "-" + label;
    } else {
      term = (c.is_rational() ? c.to_string() : "(" + c.to_string() + ")") + "*" + label;
    }
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace pbw
