#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbw/hopf.hpp"

namespace pbw {

/// Quadratic algebra B = T(V)/(I) with an action of H on V.
///
/// Words in V^{⊗m} are indexed lexicographically with the first letter most
/// significant: v_{i_1}⊗...⊗v_{i_m} sits at i_1 vdim^{m-1} + ... + i_m.
struct ModuleAlgebra {
  int vdim = 0;
  std::vector<std::string> vlabels;
  /// Canonical (RREF) basis of I ⊆ V⊗V.
  Subspace<Scalar> relations;
  /// ρ(e_i) for every basis element e_i of H.
  std::vector<Mat> action;
  int cutoff = 6;

  int relation_count() const { return static_cast<int>(relations.dim()); }
  Vec relation(int a) const { return relations.basis_vector(a); }
};

long long ipow(long long base, int exp);

/// Extends an action given on algebra generators of H to all of H by
/// multiplying out words in the generators. Throws ValidationError when the
/// listed elements do not generate H.
std::vector<Mat> extend_action(const HopfAlgebra& h, const std::vector<std::pair<Vec, Mat>>& generators);

/// Canonicalizes the relation spanning set and derives the full action.
ModuleAlgebra make_module_algebra(const HopfAlgebra& h, std::vector<std::string> vlabels,
                                  const std::vector<Vec>& relation_span,
                                  const std::vector<std::pair<Vec, Mat>>& generator_action, int cutoff = 6);

/// Unital algebra map H → End(V) and H-stability of I.
ValidationReport validate_action(const HopfAlgebra& h, const ModuleAlgebra& b);

/// ρ^{⊗m} ∘ Δ^{(m-1)}(a) applied to t ∈ V^{⊗m}; m is inferred from the length of t.
Vec act_on_tensor(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& t);
Vec act_on_tensor(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& t, int m);

/// dim B_n = vdim^n − dim Σ_i V^{⊗i}⊗I⊗V^{⊗(n−2−i)}. Throws CutoffExceeded.
long long graded_dim(const ModuleAlgebra& b, int n);

/// D'_i = ⋂_j V^{⊗j}⊗I⊗V^{⊗(i−2−j)} ⊆ V^{⊗i}. Throws CutoffExceeded for i
/// above the cutoff and DimensionMismatch for i < 2.
Subspace<Scalar> koszul_component(const ModuleAlgebra& b, int i);

/// "c*u⊗v⊗h + ..." for a vector in V^{⊗m} (hlabels empty) or V^{⊗m}⊗H.
std::string format_tensor(const Vec& v, const std::vector<std::string>& vlabels, int m,
                          const std::vector<std::string>& hlabels = {});

}  // namespace pbw
