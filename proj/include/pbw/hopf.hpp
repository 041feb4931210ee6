#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbw/exactla.hpp"
#include "pbw/scalar.hpp"

namespace pbw {

using Vec = Vector<Scalar>;
using Mat = Matrix<Scalar>;
using SparseVec = std::vector<std::pair<int, Scalar>>;
/// Multi-index tensor in sparse form: (i_1, ..., i_k) -> coefficient.
using SparseTensor = std::map<std::vector<int>, Scalar>;

struct CoproductTerm {
  int left;
  int right;
  Scalar coef;
};

struct Failure {
  std::string axiom;
  std::vector<int> witness;
  std::string lhs;
  std::string rhs;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Failure> failures;

  void fail(Failure f) {
    passed = false;
    failures.push_back(std::move(f));
  }
  bool has(std::string_view axiom) const {
    for (const auto& f : failures)
      if (f.axiom == axiom) return true;
    return false;
  }
  void merge(const ValidationReport& other) {
    for (const auto& f : other.failures) fail(f);
  }
};

/// Finite-dimensional Hopf algebra given by structure constants on a basis
/// e_0..e_{d-1}. The antipode inverse is filled in by validate_hopf.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(int field_order, std::vector<std::string> labels);

  int field_order() const { return order_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(int i, int j, SparseVec value);
  void set_coproduct(int i, std::vector<CoproductTerm> terms);
  void set_unit(Vec unit) { unit_ = std::move(unit); }
  void set_counit(int i, Scalar value) { counit_.at(i) = std::move(value); }
  void set_antipode(int i, const Vec& image);

  /// e_i e_j in sparse form.
  const SparseVec& product(int i, int j) const { return mult_[i * dim_ + j]; }
  const std::vector<CoproductTerm>& coproduct(int i) const { return comult_[i]; }
  const Vec& unit() const { return unit_; }
  const Scalar& counit(int i) const { return counit_[i]; }
  /// Column j is S(e_j).
  const Mat& antipode_matrix() const { return antipode_; }
  const std::optional<Mat>& antipode_inverse_matrix() const { return antipode_inv_; }

  Vec basis(int i) const { return unit_vector<Scalar>(dim_, i); }
  Vec zero() const { return zero_vector<Scalar>(dim_); }

  Vec multiply(const Vec& a, const Vec& b) const;
  /// Δ(a) as a d x d coefficient matrix: entry (j, k) multiplies e_j ⊗ e_k.
  Mat comultiply(const Vec& a) const;
  /// Δ applied legs-1 times, left-nested ((Δ⊗id)...)Δ; legs >= 1.
  SparseTensor comultiply_iterated(const Vec& a, int legs) const;
  Scalar counit_of(const Vec& a) const;
  Vec antipode(const Vec& a) const;
  /// Requires a validated algebra.
  Vec antipode_inverse(const Vec& a) const;

  /// Matrix of left multiplication by a.
  Mat left_multiplication(const Vec& a) const;
  /// (x ⊗ y)(z ⊗ w) in H⊗H, both as d x d coefficient matrices.
  Mat tensor_multiply(const Mat& a, const Mat& b) const;

  /// "c1*label1 + c2*label2" rendering.
  std::string format(const Vec& a) const;
  /// Index of the basis element with this label, or -1.
  int find_label(std::string_view label) const;

 private:
  friend ValidationReport validate_hopf(HopfAlgebra& h);

  int order_ = 1;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> mult_;
  std::vector<std::vector<CoproductTerm>> comult_;
  Vec unit_;
  std::vector<Scalar> counit_;
  Mat antipode_;
  std::optional<Mat> antipode_inv_;
};

/// Renders a coefficient vector against basis labels. "1" acts as the empty label.
std::string format_vector(const Vec& v, const std::vector<std::string>& labels);

/// Exhaustive check of every Hopf axiom over basis tuples plus bijectivity of
/// S. On success the antipode inverse is stored in `h`.
ValidationReport validate_hopf(HopfAlgebra& h);

/// Σ a_1 ℓ S(a_2).
Vec adjoint_on_H(const HopfAlgebra& h, const Vec& a, const Vec& l);

/// kΓ for the group with the given multiplication table (entry [i][j] is the
/// index of g_i g_j) and inverse table. Throws NotAGroup with a witness.
HopfAlgebra group_algebra(const std::vector<std::vector<int>>& mult_table, const std::vector<int>& inverse_table,
                          int field_order = 1, std::vector<std::string> labels = {});

/// Built-in Hopf algebras: "sweedler", "taft(n)" / "taft-n", "h8", "ha1",
/// "cyclic(n)" / "cyclic-n". field_order = 0 selects the natural field.
/// The result is validated. Throws UnknownPreset or FieldTooSmall.
HopfAlgebra preset_hopf(std::string_view name, int field_order = 0);

}  // namespace pbw
