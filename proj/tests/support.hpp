#pragma once

#include <random>
#include <string>
#include <vector>

#include "pbw/exactla.hpp"
#include "pbw/problem.hpp"

namespace pbw::testing {

inline Vec vec_of(std::initializer_list<long long> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long long x : xs) v[i++] = Scalar(x);
  return v;
}

inline Vec hvec(const HopfAlgebra& h, std::initializer_list<std::pair<const char*, Scalar>> terms) {
  Vec v = h.zero();
  for (const auto& [label, c] : terms) {
    const int i = h.find_label(label);
    if (i < 0) throw std::invalid_argument(std::string("no basis element ") + label);
    v[i] += c;
  }
  return v;
}

inline Scalar small_scalar(std::mt19937& rng, int lo = -3, int hi = 3) {
  return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Vec random_vec(std::mt19937& rng, Index n, double density = 1.0) {
  std::bernoulli_distribution keep(density);
  Vec v = zero_vector<Scalar>(n);
  for (Index i = 0; i < n; ++i)
    if (keep(rng)) v[i] = small_scalar(rng);
  return v;
}

/// Smallest H-stable subspace of V⊗V containing the seeds.
inline std::vector<Vec> stable_closure(const HopfAlgebra& h, const ModuleAlgebra& b, std::vector<Vec> seeds) {
  const Index n = static_cast<Index>(b.vdim) * b.vdim;
  Subspace<Scalar> cur = Subspace<Scalar>::span(seeds, n);
  while (true) {
    std::vector<Vec> gen;
    for (Index k = 0; k < cur.dim(); ++k) {
      gen.push_back(cur.basis_vector(k));
      for (int i = 0; i < h.dim(); ++i) gen.push_back(act_on_tensor(h, b, h.basis(i), cur.basis_vector(k), 2));
    }
    Subspace<Scalar> next = Subspace<Scalar>::span(gen, n);
    if (next.dim() == cur.dim()) break;
    cur = next;
  }
  std::vector<Vec> out;
  for (Index k = 0; k < cur.dim(); ++k) out.push_back(cur.basis_vector(k));
  return out;
}

/// Random quadratic H-module algebra built on one of the preset actions, or on
/// a diagonal cyclic action on three variables, with I the H-closure of one or
/// two random quadratic tensors.
inline Problem random_stable_problem(std::mt19937& rng, int cutoff = 6) {
  static const std::vector<std::string> bases{"sweedler", "taft-3", "h8", "cbh-cyclic-3", "ha1", "cyclic3-on-3"};
  const std::string pick = bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
  Problem p;
  if (pick == "cyclic3-on-3") {
    Problem base = preset_problem("cbh-cyclic-3");
    const Scalar z = Scalar::root_of_unity(3, 1);
    Mat rho = zero_matrix<Scalar>(3, 3);
    rho(0, 0) = z;
    rho(1, 1) = z * z;
    rho(2, 2) = Scalar(3, Rational(1));
    std::vector<std::pair<Vec, Mat>> gens{{base.hopf.basis(1), rho}};
    ModuleAlgebra b = make_module_algebra(base.hopf, {"a", "b", "c"}, {}, gens, cutoff);
    p = Problem{pick, base.hopf, b, gens, std::nullopt};
  } else {
    p = preset_problem(pick, false, cutoff);
  }
  const Index n = static_cast<Index>(p.algebra.vdim) * p.algebra.vdim;
  std::vector<Vec> seeds{random_vec(rng, n, 0.4)};
  if (std::bernoulli_distribution(0.5)(rng)) seeds.push_back(random_vec(rng, n, 0.4));
  std::vector<Vec> rels = stable_closure(p.hopf, p.algebra, seeds);
  p.algebra = make_module_algebra(p.hopf, p.algebra.vlabels, rels, p.action_generators, cutoff);
  p.name = pick + "-random";
  return p;
}

}  // namespace pbw::testing
