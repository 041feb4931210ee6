#include "pbw/smash.hpp"

#include <map>
#include <optional>

#include "pbw/errors.hpp"

namespace pbw {

bool NormalElement::is_zero() const {
  for (const auto& c : components)
    if (!is_zero_matrix(c)) return false;
  return true;
}

bool operator==(const NormalElement& a, const NormalElement& b) {
  const std::size_t n = std::max(a.components.size(), b.components.size());
  for (std::size_t m = 0; m < n; ++m) {
    const bool ha = m < a.components.size(), hb = m < b.components.size();
    if (ha && hb) {
      if (a.components[m].size() != b.components[m].size()) return false;
      for (Index i = 0; i < a.components[m].size(); ++i)
        if (a.components[m][i] != b.components[m][i]) return false;
    } else if (ha && !is_zero_matrix(a.components[m])) {
      return false;
    } else if (hb && !is_zero_matrix(b.components[m])) {
      return false;
    }
  }
  return true;
}

SmashProduct::SmashProduct(const HopfAlgebra& h, const ModuleAlgebra& b) : h_(&h), b_(&b) {
  const int d = h.dim(), vdim = b.vdim;
  if (static_cast<int>(b.action.size()) != d) throw DimensionMismatch("action does not match the Hopf algebra");
  table_.resize(static_cast<std::size_t>(d) * vdim);
  for (int i = 0; i < d; ++i)
    for (int v = 0; v < vdim; ++v) {
      std::map<std::pair<int, int>, Scalar> acc;
      for (const auto& t : h.coproduct(i))
        for (int w = 0; w < vdim; ++w) {
          const Scalar& a = b.action[t.left](w, v);
          if (!a.is_zero()) acc[{w, t.right}] += t.coef * a;
        }
      auto& out = table_[static_cast<std::size_t>(i) * vdim + v];
      for (auto& [key, c] : acc)
        if (!c.is_zero()) out.push_back({key.first, key.second, std::move(c)});
    }
}

NormalElement SmashProduct::zero() const {
  NormalElement e;
  e.cutoff = cutoff();
  for (int m = 0; m <= cutoff(); ++m) e.components.push_back(zero_vector<Scalar>(component_size(m)));
  return e;
}

NormalElement SmashProduct::one() const {
  NormalElement e = zero();
  e.components[0] = h_->unit();
  return e;
}

NormalElement SmashProduct::from_component(int m, const Vec& v) const {
  if (m > cutoff()) throw CutoffExceeded("degree " + std::to_string(m) + " exceeds cutoff " + std::to_string(cutoff()));
  if (v.size() != component_size(m)) throw DimensionMismatch("component has the wrong length");
  NormalElement e = zero();
  e.components[m] = v;
  return e;
}

Vec SmashProduct::straighten(const Vec& a, const Vec& t, int m) const {
  const int d = h_->dim(), vdim = b_->vdim;
  const long long words = ipow(vdim, m);
  if (t.size() != words) throw DimensionMismatch("tensor length does not match V^{⊗m}");
  if (a.size() != d) throw DimensionMismatch("not an element of H");
  Vec out = zero_vector<Scalar>(words * d);
  using State = std::map<std::pair<long long, int>, Scalar>;
  for (long long w = 0; w < words; ++w) {
    if (t[w].is_zero()) continue;
    State state;
    for (int i = 0; i < d; ++i)
      if (!a[i].is_zero()) state[{0, i}] = a[i] * t[w];
    for (int k = 0; k < m; ++k) {
      const int letter = static_cast<int>((w / ipow(vdim, m - 1 - k)) % vdim);
      State next;
      for (const auto& [key, c] : state)
        for (const auto& term : commute(key.second, letter))
          next[{key.first * vdim + term.letter, term.hopf}] += c * term.coef;
      state.clear();
      for (auto& [key, c] : next)
        if (!c.is_zero()) state.emplace(key, std::move(c));
    }
    for (const auto& [key, c] : state) out[key.first * d + key.second] += c;
  }
  return out;
}

NormalElement SmashProduct::multiply(const NormalElement& x, const NormalElement& y) const {
  const int d = h_->dim(), vdim = b_->vdim;
  NormalElement out = zero();
  for (std::size_t m1 = 0; m1 < x.components.size(); ++m1) {
    const Vec& X = x.components[m1];
    if (is_zero_matrix(X)) continue;
    for (std::size_t m2 = 0; m2 < y.components.size(); ++m2) {
      const Vec& Y = y.components[m2];
      if (is_zero_matrix(Y)) continue;
      const int m = static_cast<int>(m1 + m2);
      if (m > cutoff())
        throw CutoffExceeded("product reaches degree " + std::to_string(m) + " above cutoff " +
                             std::to_string(cutoff()));
      const long long words2 = ipow(vdim, static_cast<int>(m2));
      Vec& target = out.components[m];
      for (long long w2 = 0; w2 < words2; ++w2) {
        Vec right = Y.segment(w2 * d, d);
        if (is_zero_matrix(right)) continue;
        Vec word = unit_vector<Scalar>(words2, w2);
        // e_{h'} · right, cached per h'.
        std::vector<std::optional<Vec>> tail(d);
        for (int h1 = 0; h1 < d; ++h1) {
          bool any = false;
          for (long long w1 = 0; w1 < X.size() / d && !any; ++w1) any = !X[w1 * d + h1].is_zero();
          if (!any) continue;
          Vec s = straighten(h_->basis(h1), word, static_cast<int>(m2));
          for (long long w1 = 0; w1 < X.size() / d; ++w1) {
            const Scalar& xc = X[w1 * d + h1];
            if (xc.is_zero()) continue;
            for (Index idx = 0; idx < s.size(); ++idx) {
              if (s[idx].is_zero()) continue;
              const long long w2p = idx / d;
              const int hp = static_cast<int>(idx % d);
              if (!tail[hp]) tail[hp] = h_->multiply(h_->basis(hp), right);
              const Scalar c = xc * s[idx];
              const long long base = (w1 * words2 + w2p) * d;
              for (int k = 0; k < d; ++k)
                if (!(*tail[hp])[k].is_zero()) target[base + k] += c * (*tail[hp])[k];
            }
          }
        }
      }
    }
  }
  return out;
}

Vec SmashProduct::adjoint(const Vec& a, const Vec& w, int m) const {
  const int d = h_->dim();
  const long long words = ipow(b_->vdim, m);
  if (w.size() != words * d) throw DimensionMismatch("not an element of V^{⊗m}⊗H");
  Vec out = zero_vector<Scalar>(words * d);
  const auto delta = h_->comultiply_iterated(a, 3);
  std::map<int, std::vector<Vec>> acted;  // j1 -> image of each word
  for (const auto& [legs, c] : delta) {
    const int j1 = legs[0], j2 = legs[1], j3 = legs[2];
    auto it = acted.find(j1);
    if (it == acted.end()) {
      std::vector<Vec> images(words);
      for (long long word = 0; word < words; ++word) {
        bool any = false;
        for (int l = 0; l < d && !any; ++l) any = !w[word * d + l].is_zero();
        if (any) images[word] = act_on_tensor(*h_, *b_, h_->basis(j1), unit_vector<Scalar>(words, word), m);
      }
      it = acted.emplace(j1, std::move(images)).first;
    }
    const Vec s3 = h_->antipode_matrix().col(j3);
    for (long long word = 0; word < words; ++word) {
      Vec ell = w.segment(word * d, d);
      if (is_zero_matrix(ell)) continue;
      Vec hpart = h_->multiply(h_->multiply(h_->basis(j2), ell), s3);
      if (is_zero_matrix(hpart)) continue;
      const Vec& img = it->second[word];
      for (long long w2 = 0; w2 < words; ++w2) {
        if (img[w2].is_zero()) continue;
        const Scalar f = c * img[w2];
        for (int k = 0; k < d; ++k)
          if (!hpart[k].is_zero()) out[w2 * d + k] += f * hpart[k];
      }
    }
  }
  return out;
}

Vec straighten(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& t) {
  SmashProduct sp(h, b);
  int m = 0;
  while (ipow(b.vdim, m) < t.size()) ++m;
  return sp.straighten(a, t, m);
}

NormalElement smash_mult(const HopfAlgebra& h, const ModuleAlgebra& b, const NormalElement& lhs,
                         const NormalElement& rhs) {
  return SmashProduct(h, b).multiply(lhs, rhs);
}

Vec adjoint_on_VH(const HopfAlgebra& h, const ModuleAlgebra& b, const Vec& a, const Vec& w) {
  return SmashProduct(h, b).adjoint(a, w, 1);
}

}  // namespace pbw
