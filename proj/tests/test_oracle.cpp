#include <gtest/gtest.h>

#include <random>

#include "pbw/errors.hpp"
#include "pbw/oracle.hpp"
#include "pbw/smash.hpp"
#include "support.hpp"

using namespace pbw;
using namespace pbw::testing;

namespace {

Kappa zero_kappa(const Problem& p) {
  return Kappa::zero(p.algebra.relation_count(), p.algebra.vdim, p.hopf.dim());
}

Kappa taft_member(const Problem& p, int n, int i) {
  Kappa k = zero_kappa(p);
  k.constant(0, i + n * (n - 1)) = Scalar(1);
  k.linear(0, i + n * (n - 1)) = Scalar(1);
  return k;
}

// dim F_m by brute force: span every product (w h) p_a (w' h') with smash_mult,
// flatten with the highest degree first, and count pivots per degree.
std::vector<long long> brute_force_dims(const Problem& p, const Kappa& k, int degree_bound, int buffer) {
  const int top = degree_bound + buffer;
  const HopfAlgebra& h = p.hopf;
  const int d = h.dim(), vdim = p.algebra.vdim;
  ModuleAlgebra b = p.algebra;
  b.cutoff = top;
  SmashProduct sp(h, b);
  std::vector<long long> offset(top + 1);
  long long total = 0;
  for (int m = top; m >= 0; --m) {
    offset[m] = total;
    total += sp.component_size(m);
  }
  auto flatten = [&](const NormalElement& e) {
    Vec v = zero_vector<Scalar>(total);
    for (int m = 0; m <= top; ++m) v.segment(offset[m], sp.component_size(m)) = e.components[m];
    return v;
  };
  std::vector<NormalElement> factors;
  for (int m = 0; m <= top - 2; ++m)
    for (long long idx = 0; idx < sp.component_size(m); ++idx)
      factors.push_back(sp.from_component(m, unit_vector<Scalar>(sp.component_size(m), idx)));
  auto degree_of = [&](const NormalElement& e) {
    int deg = 0;
    for (int m = 0; m <= top; ++m)
      if (!is_zero_matrix(e.components[m])) deg = m;
    return deg;
  };
  std::vector<Vec> rows;
  for (int a = 0; a < b.relation_count(); ++a) {
    NormalElement rel = sp.zero();
    Vec r = b.relation(a);
    for (Index w = 0; w < r.size(); ++w)
      for (int l = 0; l < d; ++l) rel.components[2][w * d + l] = r[w] * h.unit()[l];
    rel.components[1] = -k.linear_of(a);
    rel.components[0] = -k.constant_of(a);
    for (const auto& x : factors)
      for (const auto& y : factors) {
        if (degree_of(x) + degree_of(y) + 2 > top) continue;
        rows.push_back(flatten(sp.multiply(sp.multiply(x, rel), y)));
      }
  }
  Mat m(static_cast<Index>(rows.size()), total);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
  auto red = rref<Scalar>(m);
  std::vector<long long> in_degree(top + 1, 0);
  for (Index c : red.pivot_cols) {
    int deg = 0;
    for (int mm = top; mm >= 0; --mm)
      if (c >= offset[mm]) deg = mm;
    ++in_degree[deg];
  }
  std::vector<long long> out;
  long long ambient = 0, spanned = 0;
  for (int mm = 0; mm <= degree_bound; ++mm) {
    ambient += ipow(vdim, mm) * d;
    spanned += in_degree[mm];
    out.push_back(ambient - spanned);
  }
  return out;
}

}  // namespace

TEST(FilteredDims, SweedlerZeroKappa) {
  Problem p = preset_problem("sweedler");
  auto r = filtered_dims(p.hopf, p.algebra, zero_kappa(p), 3, 1);
  std::vector<long long> expected;
  long long acc = 0;
  for (int m = 0; m <= 3; ++m) expected.push_back((acc += m + 1) * 4);
  EXPECT_EQ(r.expected_dims, expected);
  EXPECT_EQ(r.computed_dims, expected);
  EXPECT_EQ(r.verdict, OracleVerdict::consistent);
  EXPECT_FALSE(r.falsified_at.has_value());
  EXPECT_FALSE(r.caveat.empty());
}

TEST(FilteredDims, SweedlerNonInvariantConstant) {
  Problem p = preset_problem("sweedler");
  Kappa k = zero_kappa(p);
  k.constant(0, 0) = Scalar(1);
  for (int buf : {1, 2}) {
    auto r = filtered_dims(p.hopf, p.algebra, k, 3, buf);
    ASSERT_EQ(r.verdict, OracleVerdict::falsified);
    EXPECT_LE(*r.falsified_at, 3);
  }
}

TEST(FilteredDims, TaftFamilyMember) {
  Problem p = preset_problem("taft-3");
  auto r = filtered_dims(p.hopf, p.algebra, taft_member(p, 3, 1), 3, 1);
  EXPECT_EQ(r.computed_dims, (std::vector<long long>{9, 27, 54, 90}));
  EXPECT_EQ(r.expected_dims, (std::vector<long long>{9, 27, 54, 90}));
  EXPECT_EQ(r.verdict, OracleVerdict::consistent);
}

TEST(FilteredDims, MatchesBruteForce) {
  struct Case {
    const char* name;
    int which;  // 0 zero κ, 1 preset sample, 2 non-invariant constant
  };
  for (const Case& c : {Case{"sweedler", 0}, Case{"sweedler", 1}, Case{"sweedler", 2}, Case{"cbh-cyclic-3", 1},
                        Case{"cbh-cyclic-2", 2}, Case{"taft-3", 1}}) {
    Problem p = preset_problem(c.name, true);
    Kappa k = c.which == 0 ? zero_kappa(p) : *p.kappa;
    if (c.which == 2) {
      k = zero_kappa(p);
      k.constant(0, 0) = Scalar(1);
      k.linear(0, 0) = Scalar(1);
    }
    for (int buf = 0; buf <= 1; ++buf) {
      auto r = filtered_dims(p.hopf, p.algebra, k, 2, buf);
      EXPECT_EQ(r.computed_dims, brute_force_dims(p, k, 2, buf)) << c.name << " " << c.which << " buffer " << buf;
    }
  }
}

TEST(FilteredDims, Errors) {
  Problem p = preset_problem("sweedler", false, 4);
  EXPECT_THROW(filtered_dims(p.hopf, p.algebra, zero_kappa(p), 3, 2), CutoffExceeded);
  EXPECT_THROW(filtered_dims(p.hopf, p.algebra, zero_kappa(p), 1, 0), DimensionMismatch);
  EXPECT_THROW(filtered_dims(p.hopf, p.algebra, Kappa::zero(2, 2, 4), 3, 0), DimensionMismatch);
}

TEST(FilteredDims, BaselineAndMonotone) {
  for (const auto& name : preset_names()) {
    Problem p = preset_problem(name, true);
    auto base = filtered_dims(p.hopf, p.algebra, zero_kappa(p), 3, 0);
    EXPECT_EQ(base.computed_dims, base.expected_dims) << name;
    std::vector<long long> prev;
    for (int buf = 0; buf <= 2; ++buf) {
      auto r = filtered_dims(p.hopf, p.algebra, *p.kappa, 3, buf);
      if (!prev.empty())
        for (std::size_t m = 0; m < prev.size(); ++m) EXPECT_LE(r.computed_dims[m], prev[m]) << name;
      prev = r.computed_dims;
    }
  }
}

TEST(Probe, ZeroKappaConsistentOnPresets) {
  for (const auto& name : preset_names()) {
    Problem p = preset_problem(name);
    EXPECT_EQ(pbw_probe(p.hopf, p.algebra, zero_kappa(p)).verdict, OracleVerdict::consistent) << name;
  }
}

TEST(Probe, Ha1ConditionCFailureFalsified) {
  Problem p = preset_problem("ha1");
  Kappa k = zero_kappa(p);
  k.constant(5, p.hopf.find_label("xz")) = Scalar(1);
  k.constant(5, p.hopf.find_label("xyz")) = Scalar(-1);
  auto r = pbw_probe(p.hopf, p.algebra, k, 3, 2);
  ASSERT_EQ(r.verdict, OracleVerdict::falsified);
  EXPECT_LE(*r.falsified_at, 3);
}

TEST(Probe, SoundOnFamilyMembers) {
  std::mt19937 rng(19);
  for (const auto& name : preset_names()) {
    Problem p = preset_problem(name);
    KappaFamily f = solve_kappa(p.hopf, p.algebra);
    for (int trial = 0; trial < 2; ++trial) {
      Kappa k = zero_kappa(p);
      for (const auto& basis : f.family_basis) k = k + small_scalar(rng) * basis;
      ASSERT_TRUE(check_pbw(p.hopf, p.algebra, k).passed());
      EXPECT_EQ(pbw_probe(p.hopf, p.algebra, k, 3, 1).verdict, OracleVerdict::consistent) << name;
    }
  }
}
