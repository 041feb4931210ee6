#pragma once

#include <tuple>
#include <vector>

#include "pbw/hopf.hpp"
#include "pbw/modalg.hpp"

namespace pbw {

/// Element of T(V)#H of filtration degree at most `cutoff`, written with all
/// H factors on the right: component m lies in V^{⊗m}⊗H, index word*d + h.
struct NormalElement {
  int cutoff = 0;
  std::vector<Vec> components;

  bool is_zero() const;
  friend bool operator==(const NormalElement& a, const NormalElement& b);
};

/// One commutation step h·v = Σ (h_1·v) ⊗ h_2, entries (v', h', coefficient).
struct CommuteTerm {
  int letter;
  int hopf;
  Scalar coef;
};

/// Normal-form arithmetic in T(V)#H. Holds references to `h` and `b`, which
/// must outlive it.
class SmashProduct {
 public:
  SmashProduct(const HopfAlgebra& h, const ModuleAlgebra& b);

  const HopfAlgebra& hopf() const { return *h_; }
  const ModuleAlgebra& algebra() const { return *b_; }
  int cutoff() const { return b_->cutoff; }
  long long component_size(int m) const { return ipow(b_->vdim, m) * h_->dim(); }

  NormalElement zero() const;
  NormalElement one() const;
  /// The element with a single nonzero component in degree m.
  NormalElement from_component(int m, const Vec& v) const;

  const std::vector<CommuteTerm>& commute(int hopf_index, int letter) const {
    return table_[static_cast<std::size_t>(hopf_index) * b_->vdim + letter];
  }

  /// a ⊗ t ↦ Σ (a_1·t_1)⊗...⊗(a_m·t_m)⊗a_{m+1} for t ∈ V^{⊗m}.
  Vec straighten(const Vec& a, const Vec& t, int m) const;
  /// Product in T(V)#H; throws CutoffExceeded when a nonzero term would
  /// land above the cutoff.
  NormalElement multiply(const NormalElement& x, const NormalElement& y) const;
  /// Adjoint action Σ a_1 X S(a_2) on an element of V^{⊗m}⊗H.
  Vec adjoint(const Vec& a, const Vec& w, int m) const;

 private:
  const HopfAlgebra* h_;
  const ModuleAlgebra* b_;
  std::vector<std::vector<CommuteTerm>> table_;
};

Vec straighten(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& t);
NormalElement smash_mult(const HopfAlgebra& h, const ModuleAlgebra& b, const NormalElement& lhs,
                         const NormalElement& rhs);
/// Σ (a_1·v) ⊗ a_2 ℓ S(a_3) on V⊗H.
Vec adjoint_on_VH(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& w);

}  // namespace pbw
