#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pbw/hopf.hpp"
#include "pbw/modalg.hpp"
#include "pbw/smash.hpp"

namespace pbw {

/// κ = κ^C + κ^L on the canonical basis r_0..r_{k-1} of I.
/// Row a of `constant` is κ^C(r_a) ∈ H; row a of `linear` is κ^L(r_a) ∈ V⊗H
/// with index v*d + h.
struct Kappa {
  Mat constant;
  Mat linear;

  static Kappa zero(int relations, int vdim, int hdim);
  int relations() const { return static_cast<int>(constant.rows()); }
  bool is_zero() const { return is_zero_matrix(constant) && is_zero_matrix(linear); }
  bool linear_is_zero() const { return is_zero_matrix(linear); }
  Vec constant_of(int a) const { return constant.row(a).transpose(); }
  Vec linear_of(int a) const { return linear.row(a).transpose(); }

  /// Coordinates in the solver layout: all κ^C entries, then all κ^L entries.
  Vec flatten() const;
  static Kappa unflatten(const Vec& v, int relations, int vdim, int hdim);

  friend bool operator==(const Kappa& a, const Kappa& b);
  friend Kappa operator+(const Kappa& a, const Kappa& b);
  friend Kappa operator*(const Scalar& s, const Kappa& k);
};

enum class Verdict { pass, fail, vacuous, skipped, unchecked };
const char* verdict_name(Verdict v);

struct Witness {
  /// (H-basis index, I-basis index) for condition (a); the D'_3 basis index for (b)-(d).
  std::vector<int> indices;
  std::string lhs;
  std::string rhs;
};

struct ConditionResult {
  Verdict verdict = Verdict::unchecked;
  std::vector<Witness> witnesses;
  std::string note;
};

struct ConditionReport {
  std::array<ConditionResult, 4> conditions;
  /// Observations about the input that do not affect the verdict.
  std::vector<std::string> notes;

  ConditionResult& at(char c) { return conditions.at(c - 'a'); }
  const ConditionResult& at(char c) const { return conditions.at(c - 'a'); }
  bool passed() const;
};

struct OverlapMaps {
  /// κ^L⊗id − id⊗κ^L on s, straightened, in V⊗V⊗H.
  Vec delta_linear;
  /// κ^C⊗id − id⊗κ^C on s, straightened, in V⊗H.
  Vec delta_constant;
};

/// h·κ(r) = κ(h·r) for every basis h of H and r of I.
ConditionReport check_invariance(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k);
/// Throws NotInD3 unless s ∈ (I⊗V) ∩ (V⊗I).
OverlapMaps overlap_maps(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k, const Vec& s);
/// Conditions (b)-(d) over a basis of D'_3.
ConditionReport check_overlap(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k);
ConditionReport check_pbw(const HopfAlgebra& h, const ModuleAlgebra& b, const Kappa& k);

struct SolveOptions {
  bool force_linear_zero = false;
};

struct BlockDims {
  int constant = 0;
  int linear = 0;
};

struct KappaFamily {
  bool force_linear_zero = false;
  int overlap_dim = 0;
  /// Solutions of condition (a) alone, and per-relation ranks of its
  /// projections onto κ^C(r_a) and κ^L(r_a).
  int invariant_dim = 0;
  std::vector<BlockDims> invariant_blocks;
  /// Basis (RREF in the flattened layout) of the solutions of (a) and (b).
  std::vector<Kappa> linear_basis;
  bool quadratic_vanishes = true;
  /// Residual constraints in the family coordinates t_1..t_k of
  /// `linear_basis`, one row per equation, RREF, columns per `residual_monomials`.
  Mat residual_system;
  std::vector<std::string> residual_monomials;
  /// Known when the residual system is linear.
  std::optional<int> family_dim;
  std::vector<Kappa> family_basis;
  std::vector<std::string> notes;
};

KappaFamily solve_kappa(const HopfAlgebra& h, const ModuleAlgebra& b, const SolveOptions& opts = {});

/// κ(x) for an arbitrary x ∈ I as (κ^C(x), κ^L(x)). Throws ValidationError if x ∉ I.
std::pair<Vec, Vec> apply_kappa(const ModuleAlgebra& b, const Kappa& k, const Vec& x);

/// Human-readable κ(r_a), e.g. "x + gx + u⊗x".
std::string format_kappa_value(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& constant, const Vec& linear);

}  // namespace pbw
