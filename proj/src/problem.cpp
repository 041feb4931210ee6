#include "pbw/problem.hpp"

#include <regex>

#include "pbw/errors.hpp"

namespace pbw {
namespace {

Vec sparse_vec(Index n, std::initializer_list<std::pair<Index, Scalar>> entries) {
  Vec v = zero_vector<Scalar>(n);
  for (const auto& [i, c] : entries) v[i] += c;
  return v;
}

Mat diag(const std::vector<Scalar>& d) {
  Mat m = zero_matrix<Scalar>(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat swap_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  Mat m = zero_matrix<Scalar>(n, n);
  for (const auto& [a, b] : pairs) {
    m(a, b) = Scalar(1);
    m(b, a) = Scalar(1);
  }
  return m;
}

// uv - vu on V = span{u, v}.
Vec commutator(int vdim, int a, int b, const Scalar& sign = Scalar(-1)) {
  return sparse_vec(vdim * vdim, {{a * vdim + b, Scalar(1)}, {b * vdim + a, sign}});
}

Problem finish(std::string name, HopfAlgebra h, std::vector<std::string> vlabels, std::vector<Vec> relations,
               std::vector<std::pair<Vec, Mat>> gens, int cutoff) {
  ModuleAlgebra b = make_module_algebra(h, std::move(vlabels), relations, gens, cutoff);
  return Problem{std::move(name), std::move(h), std::move(b), std::move(gens), std::nullopt};
}

// k[u,v] with g·u = u, g·v = ζv, x·u = 0, x·v = u.
Problem taft_problem(const std::string& name, int n, bool with_kappa, int cutoff) {
  HopfAlgebra h = preset_hopf(n == 2 ? "sweedler" : "taft-" + std::to_string(n));
  const int d = h.dim();
  const Scalar zeta = n == 2 ? Scalar(-1) : Scalar::root_of_unity(h.field_order(), h.field_order() / n);
  Mat rho_x = zero_matrix<Scalar>(2, 2);
  rho_x(0, 1) = Scalar(1);
  Problem p = finish(name, h, {"u", "v"}, {commutator(2, 0, 1)},
                     {{h.basis(1), diag({Scalar(1), zeta})}, {h.basis(n), rho_x}}, cutoff);
  if (with_kappa) {
    Kappa k = Kappa::zero(1, 2, d);
    const int top = (n - 1) + n;  // g^{n-1}x
    if (n == 2) {
      k.constant(0, 2) = k.constant(0, 3) = Scalar(1);
      k.linear(0, 2) = k.linear(0, 3) = Scalar(1);
    } else {
      k.constant(0, top) = Scalar(1);
      k.linear(0, top) = Scalar(1);
    }
    p.kappa = k;
  }
  return p;
}

Problem h8_problem(bool with_kappa, int cutoff) {
  HopfAlgebra h = preset_hopf("h8");
  Problem p = finish("h8", h, {"u", "v"}, {sparse_vec(4, {{0, Scalar(1)}, {3, Scalar(1)}})},
                     {{h.basis(1), diag({Scalar(-1), Scalar(1)})},
                      {h.basis(2), diag({Scalar(1), Scalar(-1)})},
                      {h.basis(4), swap_pairs(2, {{0, 1}})}},
                     cutoff);
  if (with_kappa) {
    Kappa k = Kappa::zero(1, 2, 8);
    k.constant(0, 4) = k.constant(0, 7) = Scalar(1);  // z + xyz
    p.kappa = k;
  }
  return p;
}

Problem ha1_problem(bool with_kappa, int cutoff) {
  HopfAlgebra h = preset_hopf("ha1");
  const Scalar i = Scalar::root_of_unity(h.field_order(), h.field_order() / 4);
  // t, u, v, w; t and u commute with v, anticommute with w; vw = wv.
  std::vector<Vec> rels{commutator(4, 0, 1), commutator(4, 0, 2), commutator(4, 0, 3, Scalar(1)),
                        commutator(4, 1, 2), commutator(4, 1, 3, Scalar(1)), commutator(4, 2, 3)};
  Problem p = finish("ha1", h, {"t", "u", "v", "w"}, rels,
                     {{h.basis(1), diag({i, -i, Scalar(1), Scalar(-1)})},
                      {h.basis(4), diag({Scalar(-1), Scalar(-1), Scalar(-1), Scalar(-1)})},
                      {h.basis(8), swap_pairs(4, {{0, 1}, {2, 3}})}},
                     cutoff);
  if (with_kappa) {
    Kappa k = Kappa::zero(6, 4, 16);
    k.constant(0, 0) = k.constant(0, 2) = Scalar(1);  // 1 + x^2 on r_tu
    p.kappa = k;
  }
  return p;
}

// kZ_n acting on k[u,v] by g = diag(ζ, ζ^{-1}).
Problem cyclic_problem(const std::string& name, int n, bool with_kappa, int cutoff) {
  HopfAlgebra h = preset_hopf("cyclic-" + std::to_string(n));
  const int order = h.field_order();
  const Scalar zeta = n == 2 ? Scalar(-1) : Scalar::root_of_unity(order, order / n);
  Problem p = finish(name, h, {"u", "v"}, {commutator(2, 0, 1)},
                     {{h.basis(n > 1 ? 1 : 0), diag({zeta, zeta.inverse()})}}, cutoff);
  if (with_kappa) {
    Kappa k = Kappa::zero(1, 2, n);
    k.constant(0, 0) = Scalar(1);
    if (n > 1) k.constant(0, 1) = Scalar(1);
    p.kappa = k;
  }
  return p;
}

}  // namespace

Problem preset_problem(std::string_view name, bool with_kappa, int cutoff) {
  const std::string s(name);
  static const std::regex taft_re(R"(taft-(\d+))"), cbh_re(R"(cbh-cyclic-(\d+))");
  std::smatch m;
  if (s == "sweedler") return taft_problem(s, 2, with_kappa, cutoff);
  if (s == "h8") return h8_problem(with_kappa, cutoff);
  if (s == "ha1") return ha1_problem(with_kappa, cutoff);
  if (std::regex_match(s, m, taft_re)) {
    const int n = std::stoi(m[1]);
    if (n < 2) throw UnknownPreset("taft-n needs n >= 2");
    return taft_problem(s, n, with_kappa, cutoff);
  }
  if (std::regex_match(s, m, cbh_re)) {
    const int n = std::stoi(m[1]);
    if (n < 1) throw UnknownPreset("cbh-cyclic-n needs n >= 1");
    return cyclic_problem(s, n, with_kappa, cutoff);
  }
  throw UnknownPreset("unknown preset '" + s + "'");
}

std::vector<std::string> preset_names() {
  return {"sweedler", "taft-3", "taft-4", "taft-5", "h8", "ha1", "cbh-cyclic-2", "cbh-cyclic-3", "cbh-cyclic-4"};
}

}  // namespace pbw
