#include "pbw/deform.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbw/errors.hpp"

namespace pbw {

Kappa Kappa::zero(int relations, int vdim, int hdim) {
  return {zero_matrix<Scalar>(relations, hdim), zero_matrix<Scalar>(relations, static_cast<Index>(vdim) * hdim)};
}

Vec Kappa::flatten() const {
  const Index nc = constant.size(), nl = linear.size();
  Vec v(nc + nl);
  Index k = 0;
  for (Index a = 0; a < constant.rows(); ++a)
    for (Index j = 0; j < constant.cols(); ++j) v[k++] = constant(a, j);
  for (Index a = 0; a < linear.rows(); ++a)
    for (Index j = 0; j < linear.cols(); ++j) v[k++] = linear(a, j);
  return v;
}

Kappa Kappa::unflatten(const Vec& v, int relations, int vdim, int hdim) {
  Kappa k = zero(relations, vdim, hdim);
  const Index nc = k.constant.size();
  if (v.size() != nc && v.size() != nc + k.linear.size()) throw DimensionMismatch("flattened κ has the wrong length");
  Index i = 0;
  for (Index a = 0; a < k.constant.rows(); ++a)
    for (Index j = 0; j < k.constant.cols(); ++j) k.constant(a, j) = v[i++];
  if (v.size() == nc) return k;
  for (Index a = 0; a < k.linear.rows(); ++a)
    for (Index j = 0; j < k.linear.cols(); ++j) k.linear(a, j) = v[i++];
  return k;
}

bool operator==(const Kappa& a, const Kappa& b) {
  if (a.constant.rows() != b.constant.rows() || a.constant.cols() != b.constant.cols() ||
      a.linear.cols() != b.linear.cols())
    return false;
  return a.flatten() == b.flatten();
}

Kappa operator+(const Kappa& a, const Kappa& b) { return {a.constant + b.constant, a.linear + b.linear}; }

Kappa operator*(const Scalar& s, const Kappa& k) { return {k.constant * s, k.linear * s}; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    case Verdict::skipped: return "skipped";
    case Verdict::unchecked: return "unchecked";
  }
  return "?";
}

bool ConditionReport::passed() const {
  for (const auto& c : conditions)
    if (c.verdict == Verdict::fail || c.verdict == Verdict::skipped) return false;
  return true;
}

std::pair<Vec, Vec> apply_kappa(const ModuleAlgebra& b, const Kappa& k, const Vec& x) {
  auto coords = membership(x, b.relations);
  if (!coords) throw ValidationError("element is not in the relation space");
  Vec c = zero_vector<Scalar>(k.constant.cols());
  Vec l = zero_vector<Scalar>(k.linear.cols());
  for (int a = 0; a < k.relations(); ++a) {
    const Scalar& f = (*coords)[a];
    if (f.is_zero()) continue;
    c += k.constant.row(a).transpose() * f;
    l += k.linear.row(a).transpose() * f;
  }
  return {c, l};
}

std::string format_kappa_value(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& constant, const Vec& linear) {
  std::string out;
  if (!is_zero_matrix(constant)) out = h.format(constant);
  if (!is_zero_matrix(linear)) {
    if (!out.empty()) out += " + ";
    out += format_tensor(linear, b.vlabels, 1, h.labels());
  }
  return out.empty() ? "0" : out;
}

namespace {

void check_shape(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k) {
  if (k.constant.rows() != b.relations.dim() || k.linear.rows() != b.relations.dim())
    throw DimensionMismatch("κ needs one row per relation basis vector (" + std::to_string(b.relations.dim()) + ")");
  if (k.constant.cols() != h.dim()) throw DimensionMismatch("κ^C rows must have length dim H");
  if (k.linear.cols() != static_cast<Index>(b.vdim) * h.dim())
    throw DimensionMismatch("κ^L rows must have length dim V · dim H");
}

// Shared data for the overlap conditions: the D'_3 basis and the expansion
// of each basis vector s as Σ c_{a,v} r_a⊗v and as Σ c'_{v,a} v⊗r_a.
struct Overlap {
  const HopfAlgebra& h;
  const ModuleAlgebra& b;
  SmashProduct sp;
  int d, vdim, nrel;
  Subspace<Scalar> d3;
  Mat left_basis;   // columns r_a ⊗ v at a*vdim + v
  Mat right_basis;  // columns v ⊗ r_a at v*nrel + a
  std::vector<Vec> left_coords, right_coords;

  Overlap(const HopfAlgebra& h_, const ModuleAlgebra& b_, bool with_basis = true)
      : h(h_), b(b_), sp(h_, b_), d(h_.dim()), vdim(b_.vdim), nrel(b_.relation_count()) {
    const long long n3 = ipow(vdim, 3), vv = static_cast<long long>(vdim) * vdim;
    left_basis = zero_matrix<Scalar>(n3, static_cast<Index>(nrel) * vdim);
    right_basis = zero_matrix<Scalar>(n3, static_cast<Index>(nrel) * vdim);
    for (int a = 0; a < nrel; ++a) {
      Vec r = b.relation(a);
      for (long long p = 0; p < vv; ++p) {
        if (r[p].is_zero()) continue;
        for (int v = 0; v < vdim; ++v) {
          left_basis(p * vdim + v, a * vdim + v) = r[p];
          right_basis(v * vv + p, v * nrel + a) = r[p];
        }
      }
    }
    if (!with_basis) return;
    d3 = b.cutoff >= 3 ? koszul_component(b, 3) : Subspace<Scalar>::span(std::vector<Vec>{}, n3);
    for (Index i = 0; i < d3.dim(); ++i) {
      auto [l, r] = expand(d3.basis_vector(i));
      left_coords.push_back(std::move(l));
      right_coords.push_back(std::move(r));
    }
  }

  std::pair<Vec, Vec> expand(const Vec& s) const {
    if (s.size() != left_basis.rows()) throw NotInD3("vector does not lie in V⊗V⊗V");
    auto l = solve(left_basis, s);
    if (!l) throw NotInD3("vector is not in I⊗V");
    auto r = solve(right_basis, s);
    if (!r) throw NotInD3("vector is not in V⊗I");
    return {l->particular, r->particular};
  }

  Vec delta_linear(const Mat& lin, const Vec& lc, const Vec& rc) const {
    Vec out = zero_vector<Scalar>(static_cast<Index>(vdim) * vdim * d);
    for (int a = 0; a < nrel; ++a) {
      for (int v = 0; v < vdim; ++v) {
        const Scalar& c = lc[a * vdim + v];
        if (c.is_zero()) continue;
        for (int w = 0; w < vdim; ++w)
          for (int hh = 0; hh < d; ++hh) {
            const Scalar& k = lin(a, w * d + hh);
            if (k.is_zero()) continue;
            for (const auto& t : sp.commute(hh, v)) out[(w * vdim + t.letter) * d + t.hopf] += c * k * t.coef;
          }
      }
      for (int v = 0; v < vdim; ++v) {
        const Scalar& c = rc[v * nrel + a];
        if (c.is_zero()) continue;
        for (int j = 0; j < vdim * d; ++j)
          if (!lin(a, j).is_zero()) out[v * vdim * d + j] -= c * lin(a, j);
      }
    }
    return out;
  }

  Vec delta_constant(const Mat& con, const Vec& lc, const Vec& rc) const {
    Vec out = zero_vector<Scalar>(static_cast<Index>(vdim) * d);
    for (int a = 0; a < nrel; ++a) {
      for (int v = 0; v < vdim; ++v) {
        const Scalar& c = lc[a * vdim + v];
        if (c.is_zero()) continue;
        for (int hh = 0; hh < d; ++hh) {
          const Scalar& k = con(a, hh);
          if (k.is_zero()) continue;
          for (const auto& t : sp.commute(hh, v)) out[t.letter * d + t.hopf] += c * k * t.coef;
        }
      }
      for (int v = 0; v < vdim; ++v) {
        const Scalar& c = rc[v * nrel + a];
        if (c.is_zero()) continue;
        for (int hh = 0; hh < d; ++hh)
          if (!con(a, hh).is_zero()) out[v * d + hh] -= c * con(a, hh);
      }
    }
    return out;
  }

  // Coordinates e(a, h) with delta = Σ r_a ⊗ e(a, h) h, or nullopt with the
  // first H-slice that leaves I.
  std::optional<Mat> slice_coords(const Vec& delta, int* bad_slice = nullptr) const {
    const Index vv = static_cast<Index>(vdim) * vdim;
    Mat e = zero_matrix<Scalar>(nrel, d);
    for (int hh = 0; hh < d; ++hh) {
      Vec y(vv);
      for (Index p = 0; p < vv; ++p) y[p] = delta[p * d + hh];
      if (is_zero_matrix(y)) continue;
      auto c = membership(y, b.relations);
      if (!c) {
        if (bad_slice) *bad_slice = hh;
        return std::nullopt;
      }
      e.col(hh) = *c;
    }
    return e;
  }

  // Σ_{a,h} e(a,h) κ^L(r_a)·h in V⊗H.
  Vec apply_linear(const Mat& lin, const Mat& e) const {
    Vec out = zero_vector<Scalar>(static_cast<Index>(vdim) * d);
    for (int a = 0; a < nrel; ++a)
      for (int hh = 0; hh < d; ++hh) {
        const Scalar& f = e(a, hh);
        if (f.is_zero()) continue;
        for (int w = 0; w < vdim; ++w)
          for (int l = 0; l < d; ++l) {
            const Scalar& k = lin(a, w * d + l);
            if (k.is_zero()) continue;
            for (const auto& [p, c] : h.product(l, hh)) out[w * d + p] += f * k * c;
          }
      }
    return out;
  }

  // Σ_{a,h} e(a,h) κ^C(r_a)·h in H.
  Vec apply_constant(const Mat& con, const Mat& e) const {
    Vec out = zero_vector<Scalar>(d);
    for (int a = 0; a < nrel; ++a)
      for (int hh = 0; hh < d; ++hh) {
        const Scalar& f = e(a, hh);
        if (f.is_zero()) continue;
        for (int l = 0; l < d; ++l) {
          const Scalar& k = con(a, l);
          if (k.is_zero()) continue;
          for (const auto& [p, c] : h.product(l, hh)) out[p] += f * k * c;
        }
      }
    return out;
  }
};

// Coordinates of e_i · r_b in the canonical I-basis: column b of the result.
std::vector<Mat> relation_action(const HopfAlgebra& h, const ModuleAlgebra& b) {
  std::vector<Mat> out;
  const int nrel = b.relation_count();
  for (int i = 0; i < h.dim(); ++i) {
    Mat m = zero_matrix<Scalar>(nrel, nrel);
    for (int a = 0; a < nrel; ++a) {
      auto c = membership(act_on_tensor(h, b, h.basis(i), b.relation(a), 2), b.relations);
      if (!c) throw ValidationError("relation space is not H-stable");
      m.col(a) = *c;
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Sorted by column with duplicate columns summed and zeros dropped.
SparseRow<Scalar> merged(SparseRow<Scalar> r) {
  std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
  SparseRow<Scalar> out;
  for (auto& e : r) {
    if (!out.empty() && out.back().col == e.col)
      out.back().val += e.val;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const auto& e) { return e.val.is_zero(); });
  return out;
}

void add_notes(const ModuleAlgebra& b, const Overlap& ov, std::vector<std::string>& notes) {
  if (b.vdim < 3 && !ov.d3.is_zero())
    notes.push_back("dim V = " + std::to_string(b.vdim) +
                    " < 3 but the overlap space D'_3 is nonzero; conditions (b)-(d) are applied on D'_3");
}

}  // namespace

ConditionReport check_invariance(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k) {
  check_shape(h, b, k);
  SmashProduct sp(h, b);
  ConditionReport rep;
  auto& res = rep.at('a');
  res.verdict = Verdict::pass;
  const auto acts = relation_action(h, b);
  for (int i = 0; i < h.dim(); ++i)
    for (int a = 0; a < b.relation_count(); ++a) {
      Vec lc = adjoint_on_H(h, h.basis(i), k.constant_of(a));
      Vec ll = sp.adjoint(h.basis(i), k.linear_of(a), 1);
      Vec rc = zero_vector<Scalar>(h.dim());
      Vec rl = zero_vector<Scalar>(k.linear.cols());
      for (int c = 0; c < b.relation_count(); ++c) {
        const Scalar& f = acts[i](c, a);
        if (f.is_zero()) continue;
        rc += k.constant_of(c) * f;
        rl += k.linear_of(c) * f;
      }
      if (lc != rc || ll != rl) {
        res.verdict = Verdict::fail;
        res.witnesses.push_back({{i, a}, format_kappa_value(h, b, lc, ll), format_kappa_value(h, b, rc, rl)});
      }
    }
  return rep;
}

OverlapMaps overlap_maps(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k, const Vec& s) {
  check_shape(h, b, k);
  Overlap ov(h, b, false);
  auto [lc, rc] = ov.expand(s);
  return {ov.delta_linear(k.linear, lc, rc), ov.delta_constant(k.constant, lc, rc)};
}

ConditionReport check_overlap(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k) {
  check_shape(h, b, k);
  Overlap ov(h, b);
  ConditionReport rep;
  add_notes(b, ov, rep.notes);
  if (ov.d3.is_zero()) {
    for (char c : {'b', 'c', 'd'}) {
      rep.at(c).verdict = Verdict::vacuous;
      rep.at(c).note = "D'_3 = 0";
    }
    return rep;
  }
  auto& rb = rep.at('b');
  auto& rc = rep.at('c');
  auto& rd = rep.at('d');
  rb.verdict = Verdict::pass;
  std::vector<std::optional<Mat>> coords;
  std::vector<Vec> deltas_l, deltas_c;
  for (Index i = 0; i < ov.d3.dim(); ++i) {
    Vec dl = ov.delta_linear(k.linear, ov.left_coords[i], ov.right_coords[i]);
    Vec dc = ov.delta_constant(k.constant, ov.left_coords[i], ov.right_coords[i]);
    int bad = -1;
    auto e = ov.slice_coords(dl, &bad);
    if (!e) {
      rb.verdict = Verdict::fail;
      rb.witnesses.push_back({{static_cast<int>(i)}, format_tensor(dl, b.vlabels, 2, h.labels()),
                              "an element of I⊗H (H-coordinate " + h.labels()[bad] + " leaves I)"});
    }
    coords.push_back(std::move(e));
    deltas_l.push_back(std::move(dl));
    deltas_c.push_back(std::move(dc));
  }
  if (rb.verdict == Verdict::fail) {
    for (auto* r : {&rc, &rd}) {
      r->verdict = Verdict::skipped;
      r->note = "condition (b) fails, so κ cannot be applied to the overlap image";
    }
    return rep;
  }
  rc.verdict = Verdict::pass;
  rd.verdict = Verdict::pass;
  for (Index i = 0; i < ov.d3.dim(); ++i) {
    Vec lhs = ov.apply_linear(k.linear, *coords[i]);
    Vec rhs = -deltas_c[i];
    if (lhs != rhs) {
      rc.verdict = Verdict::fail;
      rc.witnesses.push_back({{static_cast<int>(i)}, format_tensor(lhs, b.vlabels, 1, h.labels()),
                              format_tensor(rhs, b.vlabels, 1, h.labels())});
    }
    Vec dv = ov.apply_constant(k.constant, *coords[i]);
    if (!is_zero_matrix(dv)) {
      rd.verdict = Verdict::fail;
      rd.witnesses.push_back({{static_cast<int>(i)}, h.format(dv), "0"});
    }
  }
  return rep;
}

ConditionReport check_pbw(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k) {
  ConditionReport rep = check_overlap(h, b, k);
  rep.at('a') = check_invariance(h, b, k).at('a');
  return rep;
}

KappaFamily solve_kappa(const HopfAlgebra& h, const ModuleAlgebra& b, const SolveOptions& opts) {
  const int d = h.dim(), vdim = b.vdim, nrel = b.relation_count();
  const Index nc = static_cast<Index>(nrel) * d;
  const Index nl = opts.force_linear_zero ? 0 : static_cast<Index>(nrel) * vdim * d;
  const Index nunk = nc + nl;
  const Index vd = static_cast<Index>(vdim) * d;
  Overlap ov(h, b);
  KappaFamily fam;
  fam.force_linear_zero = opts.force_linear_zero;
  fam.overlap_dim = static_cast<int>(ov.d3.dim());
  add_notes(b, ov, fam.notes);
  auto to_kappa = [&](const Vec& v) { return Kappa::unflatten(v, nrel, vdim, d); };
  auto full = [&](const Vec& v) {
    if (!opts.force_linear_zero) return v;
    Vec w = zero_vector<Scalar>(nc + static_cast<Index>(nrel) * vd);
    w.head(nc) = v;
    return w;
  };

  // Condition (a): ad_i κ(r_b) = Σ_a A_i(a, b) κ(r_a) for every basis e_i.
  const auto acts = relation_action(h, b);
  SparseEchelon<Scalar> inv(nunk);
  for (int i = 0; i < d; ++i) {
    Mat adh(d, d);
    for (int l = 0; l < d; ++l) adh.col(l) = adjoint_on_H(h, h.basis(i), h.basis(l));
    Mat advh;
    if (nl) {
      advh.resize(vd, vd);
      for (Index j = 0; j < vd; ++j) advh.col(j) = ov.sp.adjoint(h.basis(i), unit_vector<Scalar>(vd, j), 1);
    }
    for (int rb = 0; rb < nrel; ++rb) {
      for (int row = 0; row < d; ++row) {
        SparseRow<Scalar> r;
        for (int l = 0; l < d; ++l)
          if (!adh(row, l).is_zero()) r.push_back({rb * d + l, adh(row, l)});
        for (int a = 0; a < nrel; ++a)
          if (!acts[i](a, rb).is_zero()) r.push_back({a * d + row, -acts[i](a, rb)});
        inv.insert(merged(std::move(r)));
      }
      for (Index row = 0; row < (nl ? vd : 0); ++row) {
        SparseRow<Scalar> r;
        const Index base = nc + static_cast<Index>(rb) * vd;
        for (Index l = 0; l < vd; ++l)
          if (!advh(row, l).is_zero()) r.push_back({base + l, advh(row, l)});
        for (int a = 0; a < nrel; ++a)
          if (!acts[i](a, rb).is_zero()) r.push_back({nc + a * vd + row, -acts[i](a, rb)});
        inv.insert(merged(std::move(r)));
      }
    }
  }
  const Subspace<Scalar> wa = inv.kernel();
  fam.invariant_dim = static_cast<int>(wa.dim());
  for (int a = 0; a < nrel; ++a) {
    BlockDims bd;
    if (wa.dim() > 0) {
      bd.constant = static_cast<int>(rank<Scalar>(wa.basis().middleCols(a * d, d)));
      if (nl) bd.linear = static_cast<int>(rank<Scalar>(wa.basis().middleCols(nc + a * vd, vd)));
    }
    fam.invariant_blocks.push_back(bd);
  }

  // Condition (b) on the span of the invariant solutions.
  const Index k0 = wa.dim();
  std::vector<Kappa> wk;
  for (Index j = 0; j < k0; ++j) wk.push_back(to_kappa(full(wa.basis_vector(j))));
  Subspace<Scalar> w = wa;
  if (!ov.d3.is_zero() && nl && k0 > 0) {
    Mat ann = annihilator(b.relations);
    const Index vv = static_cast<Index>(vdim) * vdim;
    std::vector<Vec> cons_cols;
    for (Index j = 0; j < k0; ++j) {
      std::vector<Scalar> col;
      for (Index s = 0; s < ov.d3.dim(); ++s) {
        Vec dl = ov.delta_linear(wk[j].linear, ov.left_coords[s], ov.right_coords[s]);
        for (int hh = 0; hh < d; ++hh) {
          Vec y(vv);
          for (Index p = 0; p < vv; ++p) y[p] = dl[p * d + hh];
          Vec z = multiply<Scalar>(ann, y);
          for (Index q = 0; q < z.size(); ++q) col.push_back(z[q]);
        }
      }
      Vec c(static_cast<Index>(col.size()));
      for (Index q = 0; q < c.size(); ++q) c[q] = col[q];
      cons_cols.push_back(std::move(c));
    }
    Mat cons(cons_cols.front().size(), k0);
    for (Index j = 0; j < k0; ++j) cons.col(j) = cons_cols[j];
    auto ker = kernel(cons);
    std::vector<Vec> vecs;
    for (Index t = 0; t < ker.dim(); ++t) vecs.push_back(multiply<Scalar>(Mat(wa.basis().transpose()), ker.basis_vector(t)));
    w = Subspace<Scalar>::span(vecs, nunk);
  }
  for (Index j = 0; j < w.dim(); ++j) fam.linear_basis.push_back(to_kappa(full(w.basis_vector(j))));
  const int k = static_cast<int>(w.dim());

  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      fam.residual_monomials.push_back(i == j ? "t" + std::to_string(i + 1) + "^2"
                                              : "t" + std::to_string(i + 1) + "*t" + std::to_string(j + 1));
  for (int i = 0; i < k; ++i) fam.residual_monomials.push_back("t" + std::to_string(i + 1));
  const Index nquad = static_cast<Index>(k) * (k + 1) / 2;
  const Index nmono = nquad + k;
  auto quad_index = [k](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<Index>(i) * k - static_cast<Index>(i) * (i - 1) / 2 + (j - i);
  };

  // Conditions (c) and (d) as polynomials in the coordinates t of `w`.
  std::vector<Vec> rows;
  if (!ov.d3.is_zero() && k > 0) {
    const auto& basis = fam.linear_basis;
    for (Index s = 0; s < ov.d3.dim(); ++s) {
      std::vector<Mat> y;
      std::vector<Vec> dc;
      for (int j = 0; j < k; ++j) {
        Vec dl = ov.delta_linear(basis[j].linear, ov.left_coords[s], ov.right_coords[s]);
        auto e = ov.slice_coords(dl);
        if (!e) throw std::logic_error("condition (b) solution leaves I⊗H");
        y.push_back(std::move(*e));
        dc.push_back(ov.delta_constant(basis[j].constant, ov.left_coords[s], ov.right_coords[s]));
      }
      std::vector<Vec> c_rows(vd, zero_vector<Scalar>(nmono));
      std::vector<Vec> d_rows(d, zero_vector<Scalar>(nmono));
      for (int i = 0; i < k; ++i) {
        for (Index q = 0; q < vd; ++q)
          if (!dc[i][q].is_zero()) c_rows[q][nquad + i] += dc[i][q];
        if (basis[i].is_zero()) continue;
        for (int j = 0; j < k; ++j) {
          if (!basis[i].linear_is_zero()) {
            Vec q = ov.apply_linear(basis[i].linear, y[j]);
            for (Index p = 0; p < vd; ++p)
              if (!q[p].is_zero()) c_rows[p][quad_index(i, j)] += q[p];
          }
          Vec r = ov.apply_constant(basis[i].constant, y[j]);
          for (int p = 0; p < d; ++p)
            if (!r[p].is_zero()) d_rows[p][quad_index(i, j)] += r[p];
        }
      }
      for (auto& r : c_rows)
        if (!is_zero_matrix(r)) rows.push_back(std::move(r));
      for (auto& r : d_rows)
        if (!is_zero_matrix(r)) rows.push_back(std::move(r));
    }
  }
  Subspace<Scalar> residual = Subspace<Scalar>::span(rows, nmono);
  fam.residual_system = residual.basis();
  fam.quadratic_vanishes = true;
  for (Index r = 0; r < residual.dim(); ++r)
    for (Index q = 0; q < nquad; ++q)
      if (!residual.basis()(r, q).is_zero()) fam.quadratic_vanishes = false;
  if (!fam.quadratic_vanishes) return fam;

  Mat lin = residual.basis().rightCols(k);
  Subspace<Scalar> tk = residual.dim() ? kernel(lin) : Subspace<Scalar>::span(identity_matrix<Scalar>(k));
  std::vector<Vec> vecs;
  for (Index t = 0; t < tk.dim(); ++t) vecs.push_back(multiply<Scalar>(Mat(w.basis().transpose()), tk.basis_vector(t)));
  Subspace<Scalar> fsp = Subspace<Scalar>::span(vecs, nunk);
  fam.family_dim = static_cast<int>(fsp.dim());
  for (Index j = 0; j < fsp.dim(); ++j) fam.family_basis.push_back(to_kappa(full(fsp.basis_vector(j))));
  return fam;
}

}  // namespace pbw
