#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke/p1bundles/bundle.hpp"

namespace hecke {

/// Sum of the residues of phi dt over all finite points.
template <class F>
typename F::Element residue_sum(const RatFunc<F>& phi) {
  const F& f = phi.field();
  if (phi.is_zero() || phi.is_poly()) return f.zero();
  const Poly<F> rem = phi.num() % phi.den();
  const int n = phi.den().degree();
  return rem.coeff(n - 1) / phi.den().lc();
}

template <class F>
RatFunc<F> dot(const RatVector<F>& a, const RatVector<F>& b) {
  RatFunc<F> s = zero_like(a.front());
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// h^0 and h^1 with explicit bases in the split model of V.
/// Sections: t^m B e_i, 0 <= m <= a_i. H^1 basis: classes of t^{-j} B e_i, 1 <= j <= -a_i - 1.
template <class F>
struct Cohomology {
  Bundle<F> V;
  Splitting<F> split;
  std::vector<std::pair<size_t, int>> section_tags;
  std::vector<std::pair<size_t, int>> h1_tags;
  std::vector<RatVector<F>> sections;

  size_t h0() const { return section_tags.size(); }
  size_t h1() const { return h1_tags.size(); }
  /// Representative rational section of the k-th H^1 basis class.
  RatVector<F> h1_representative(size_t k) const {
    auto [i, j] = h1_tags[k];
    RatVector<F> g = split.B.col(i);
    for (auto& x : g) x = x * RatFunc<F>::power(V.field, -j);
    return g;
  }
};

template <class F>
Cohomology<F> cohomology(const Bundle<F>& V) {
  Cohomology<F> c{V, split_lattices(V.A0, V.Ainf), {}, {}, {}};
  const auto& a = c.split.exponents;
  for (size_t i = 0; i < a.size(); ++i) {
    for (int m = 0; m <= a[i]; ++m) {
      c.section_tags.emplace_back(i, m);
      RatVector<F> s = c.split.B.col(i);
      for (auto& x : s) x = x * RatFunc<F>::power(V.field, m);
      c.sections.push_back(std::move(s));
    }
    for (int j = 1; j <= -a[i] - 1; ++j) c.h1_tags.emplace_back(i, j);
  }
  return c;
}

/// Coordinates of a rational section in the split frame B.
template <class F>
RatVector<F> split_coords(const Cohomology<F>& c, const RatVector<F>& g) {
  return c.split.Binv * g;
}

/// Coordinates of a global section in the section basis; throws if g is not global.
template <class F>
std::vector<typename F::Element> section_coords(const Cohomology<F>& c, const RatVector<F>& g) {
  RatVector<F> s = split_coords(c, g);
  std::vector<typename F::Element> out;
  for (auto [i, m] : c.section_tags) out.push_back(s[i].num().coeff(m));
  const auto& a = c.split.exponents;
  for (size_t i = 0; i < s.size(); ++i)
    if (!s[i].is_zero() && (!s[i].is_poly() || s[i].num().degree() > a[i]))
      throw std::domain_error("vector is not a global section");
  return out;
}

/// Class in H^1 of the finite principal parts of the rational section g.
template <class F>
std::vector<typename F::Element> h1_class(const Cohomology<F>& c, const RatVector<F>& g) {
  const F& f = c.V.field;
  std::vector<typename F::Element> out(c.h1(), f.zero());
  if (c.h1() == 0) return out;
  RatVector<F> s = split_coords(c, g);
  const auto inf = CurvePoint<F>::infinity(f);
  const auto& a = c.split.exponents;
  size_t k = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (a[i] > -2) continue;
    LaurentJet<F> jet = laurent_expand(s[i], inf, -a[i]);
    for (int j = 1; j <= -a[i] - 1; ++j) out[k++] = jet.coeff(j);
  }
  return out;
}

/// Coboundary of the principal part of p_hat at x, p_hat written in the uniformiser at x in
/// the chart frame of V (columns of A0 at finite points, of Ainf at infinity).
template <class F>
std::vector<typename F::Element> coboundary(const Cohomology<F>& c, const CurvePoint<F>& x,
                                            const RatVector<F>& p_hat) {
  RatVector<F> global;
  for (const auto& e : p_hat) global.push_back(from_local(e, x));
  auto cls = h1_class(c, (x.at_infinity ? c.V.Ainf : c.V.A0) * global);
  if (x.at_infinity)
    for (auto& e : cls) e = -e;
  return cls;
}

/// P[k][l] = sum of finite residues of <h1 representative k, section l of K (x) V*>.
template <class F>
Matrix<typename F::Element> serre_pairing(const Cohomology<F>& c, const Cohomology<F>& dual_c) {
  Matrix<typename F::Element> P(c.h1(), dual_c.h0(), c.V.field.zero());
  for (size_t k = 0; k < c.h1(); ++k) {
    RatVector<F> g = c.h1_representative(k);
    for (size_t l = 0; l < dual_c.h0(); ++l) P(k, l) = residue_sum(dot(g, dual_c.sections[l]));
  }
  return P;
}

/// Pairing of an H^1 coordinate vector with a section of K (x) V*.
template <class F>
typename F::Element pair_class(const Cohomology<F>& c, const std::vector<typename F::Element>& cls,
                               const RatVector<F>& eta) {
  auto acc = c.V.field.zero();
  for (size_t k = 0; k < cls.size(); ++k)
    if (!cls[k].is_zero()) acc += cls[k] * residue_sum(dot(c.h1_representative(k), eta));
  return acc;
}

}  // namespace hecke
