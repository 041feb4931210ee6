#include "pbw/oracle.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <map>

#include "pbw/errors.hpp"
#include "pbw/smash.hpp"

namespace pbw {

const char* oracle_verdict_name(OracleVerdict v) {
  return v == OracleVerdict::consistent ? "CONSISTENT" : "FALSIFIED";
}

namespace {

// Coordinates on T_{≤top} = ⊕_m V^{⊗m}⊗H with the highest degree first, so
// the pivot of an echelon row sits in the row's top degree.
class Layout {
 public:
  Layout(int vdim, int d, int top) : vdim_(vdim), d_(d), offset_(top + 1, 0) {
    long long off = 0;
    for (int m = top; m >= 0; --m) {
      offset_[m] = off;
      off += ipow(vdim, m) * d;
    }
    total_ = off;
  }
  long long total() const { return total_; }
  int top() const { return static_cast<int>(offset_.size()) - 1; }
  long long column(int m, long long word, int hopf) const { return offset_[m] + word * d_ + hopf; }
  int degree(long long col) const {
    for (int m = top(); m > 0; --m)
      if (col < offset_[m - 1]) return m;
    return 0;
  }
  // (degree, word, hopf index) of a column.
  std::tuple<int, long long, int> split(long long col) const {
    const int m = degree(col);
    const long long local = col - offset_[m];
    return {m, local / d_, static_cast<int>(local % d_)};
  }

 private:
  int vdim_, d_;
  std::vector<long long> offset_;
  long long total_ = 0;
};

SparseRow<Scalar> to_row(std::map<long long, Scalar>& acc) {
  SparseRow<Scalar> row;
  for (auto& [c, v] : acc)
    if (!v.is_zero()) row.push_back({c, std::move(v)});
  return row;
}

}  // namespace

FilteredDimReport filtered_dims(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k, int degree_bound,
                                int buffer) {
  if (degree_bound < 2) throw DimensionMismatch("degree bound must be at least 2");
  if (buffer < 0) throw DimensionMismatch("buffer must be nonnegative");
  const int top = degree_bound + buffer;
  if (top > b.cutoff)
    throw CutoffExceeded("degree bound + buffer = " + std::to_string(top) + " exceeds cutoff " +
                         std::to_string(b.cutoff));
  if (k.constant.rows() != b.relation_count() || k.constant.cols() != h.dim() ||
      k.linear.cols() != static_cast<Index>(b.vdim) * h.dim())
    throw DimensionMismatch("κ does not match the relation space");

  const int d = h.dim(), vdim = b.vdim;
  const Layout lay(vdim, d, top);
  SmashProduct sp(h, b);
  SparseEchelon<Scalar> ech(lay.total());

  // Relators r_a - κ^L(r_a) - κ^C(r_a), closed under the adjoint action of H.
  std::vector<std::array<Vec, 3>> relators;
  for (int a = 0; a < b.relation_count(); ++a) {
    Vec top_part = zero_vector<Scalar>(vdim * vdim * d);
    const Vec r = b.relation(a);
    for (Index w = 0; w < r.size(); ++w)
      for (int l = 0; l < d; ++l)
        if (!r[w].is_zero() && !h.unit()[l].is_zero()) top_part[w * d + l] = r[w] * h.unit()[l];
    const Vec lin = -k.linear_of(a), con = -k.constant_of(a);
    for (int i = 0; i < d; ++i)
      relators.push_back({adjoint_on_H(h, h.basis(i), con), sp.adjoint(h.basis(i), lin, 1),
                          sp.adjoint(h.basis(i), top_part, 2)});
  }

  std::vector<Index> fresh;
  auto push = [&](std::map<long long, Scalar>& acc) {
    const Index before = ech.rank();
    if (ech.insert(to_row(acc)) >= 0) fresh.push_back(before);
  };

  // Degree ≤ 2: relators times H on the right.
  for (const auto& q : relators)
    for (int hp = 0; hp < d; ++hp) {
      std::map<long long, Scalar> acc;
      for (int m = 0; m <= 2; ++m)
        for (Index idx = 0; idx < q[m].size(); ++idx) {
          const Scalar& c = q[m][idx];
          if (c.is_zero()) continue;
          for (const auto& [p, pc] : h.product(static_cast<int>(idx % d), hp))
            acc[lay.column(m, idx / d, p)] += c * pc;
        }
      push(acc);
    }

  // Each pass multiplies the previous pass's new rows by a letter on either side.
  for (int step = 3; step <= top; ++step) {
    std::vector<Index> frontier;
    frontier.swap(fresh);
    for (Index r : frontier) {
      const SparseRow<Scalar> row = ech.rows()[r];
      for (int v = 0; v < vdim; ++v) {
        std::map<long long, Scalar> left, right;
        for (const auto& e : row) {
          const auto [m, word, l] = lay.split(e.col);
          left[lay.column(m + 1, v * ipow(vdim, m) + word, l)] += e.val;
          for (const auto& t : sp.commute(l, v)) right[lay.column(m + 1, word * vdim + t.letter, t.hopf)] += e.val * t.coef;
        }
        push(left);
        push(right);
      }
    }
  }

  FilteredDimReport rep;
  rep.degree_bound = degree_bound;
  rep.buffer = buffer;
  std::vector<long long> in_degree(top + 1, 0);
  for (const auto& row : ech.rows()) ++in_degree[lay.degree(row.front().col)];
  long long ambient = 0, spanned = 0, expected = 0;
  for (int m = 0; m <= degree_bound; ++m) {
    ambient += ipow(vdim, m) * d;
    spanned += in_degree[m];
    expected += graded_dim(b, m) * d;
    rep.computed_dims.push_back(ambient - spanned);
    rep.expected_dims.push_back(expected);
    if (!rep.falsified_at && ambient - spanned < expected) {
      rep.verdict = OracleVerdict::falsified;
      rep.falsified_at = m;
    }
  }
  rep.caveat = rep.verdict == OracleVerdict::falsified
                   ? "a deficiency below the expected dimension proves the quotient is not a PBW deformation"
                   : "CONSISTENT is evidence only: spanning to a finite degree cannot exclude cancellations that "
                     "appear higher up";
  return rep;
}

FilteredDimReport pbw_probe(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k, int degree_bound,
                            int max_buffer) {
  FilteredDimReport rep;
  for (int buf = 0; buf <= max_buffer; ++buf) {
    rep = filtered_dims(h, b, k, degree_bound, buf);
    if (rep.verdict == OracleVerdict::falsified) break;
  }
  return rep;
}

}  // namespace pbw
