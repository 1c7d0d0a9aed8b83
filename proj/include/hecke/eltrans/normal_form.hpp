#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hecke/eltrans/principal.hpp"

namespace hecke {

/// Generators v_j / z^{k_j} at one point with independent leading vectors, plus an adapted
/// frame (v_1..v_s completed by standard vectors) and its dual frame, both modulo z^K.
template <class F>
struct NormalForm {
  CurvePoint<F> x;
  std::vector<PrincipalPart<F>> gens;  // k_1 >= ... >= k_s
  int K = 0;                           // k_1
  std::vector<std::vector<Poly<F>>> frame;       // r columns
  std::vector<std::vector<Poly<F>>> dual_frame;  // r columns, <frame_i, dual_j> = delta mod z^K

  size_t s() const { return gens.size(); }
  int degree() const {
    int d = 0;
    for (const auto& g : gens) d += g.order;
    return d;
  }
};

namespace detail {

template <class F>
bool lex_less(const std::vector<typename F::Element>& a, const std::vector<typename F::Element>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <class F>
void sort_generators(std::vector<PrincipalPart<F>>& g) {
  std::stable_sort(g.begin(), g.end(), [](const PrincipalPart<F>& a, const PrincipalPart<F>& b) {
    if (a.order != b.order) return a.order > b.order;
    return lex_less<F>(a.leading(), b.leading());
  });
}

/// Rescale by a local unit so the first coordinate not vanishing at 0 becomes 1.
template <class F>
PrincipalPart<F> unit_normalize(PrincipalPart<F> p) {
  for (size_t i = 0; i < p.numer.size(); ++i) {
    if (p.numer[i].coeff(0).is_zero()) continue;
    const Poly<F> u = series_inverse(p.numer[i], p.order);
    for (auto& x : p.numer) x = mul_trunc(x, u, p.order);
    break;
  }
  return p;
}

}  // namespace detail

/// Reduce generators at one point until their leading vectors are independent.
template <class F>
NormalForm<F> normal_form_of(const CurvePoint<F>& x, std::vector<PrincipalPart<F>> g, size_t r) {
  if (g.empty()) throw std::invalid_argument("no generators at the point");
  const F f = g.front().numer.front().field();
  for (auto& p : g) p = canonical_part(p);
  while (true) {
    g.erase(std::remove_if(g.begin(), g.end(), [](const auto& p) { return p.is_zero(); }), g.end());
    detail::sort_generators(g);
    Matrix<typename F::Element> lead(r, g.size(), f.zero());
    for (size_t j = 0; j < g.size(); ++j)
      for (size_t i = 0; i < r; ++i) lead(i, j) = g[j].numer[i].coeff(0);
    Matrix<typename F::Element> ker = kernel(lead);
    if (ker.cols() == 0) break;
    size_t l = g.size();
    while (l-- > 0)
      if (!ker(l, 0).is_zero()) break;
    // p_l' = p_l + sum_j (a_j / a_l) z^{k_j - k_l} p_j has a pole of order < k_l
    const int kl = g[l].order;
    const auto inv = ker(l, 0).inverse();
    std::vector<Poly<F>> v = g[l].numer;
    for (size_t j = 0; j < l; ++j) {
      if (ker(j, 0).is_zero()) continue;
      const auto c = ker(j, 0) * inv;
      for (size_t i = 0; i < r; ++i) v[i] += g[j].numer[i].truncated(kl) * c;
    }
    g[l] = make_part(x, kl, std::move(v));
  }
  for (auto& p : g) p = detail::unit_normalize(p);
  detail::sort_generators(g);

  NormalForm<F> nf{x, g, g.front().order, {}, {}};
  const int K = nf.K;
  RatMatrix<F> phi(r, r, RatFunc<F>(f));
  Matrix<typename F::Element> phi0(r, 0, f.zero());
  size_t col = 0;
  auto append = [&](const std::vector<Poly<F>>& v) {
    for (size_t i = 0; i < r; ++i) phi(i, col) = RatFunc<F>(v[i]);
    ++col;
    nf.frame.push_back(v);
  };
  for (const auto& p : g) append(p.numer);
  for (const auto& p : g) {
    Matrix<typename F::Element> c(r, 1, f.zero());
    for (size_t i = 0; i < r; ++i) c(i, 0) = p.numer[i].coeff(0);
    phi0 = phi0.hstack(c);
  }
  for (size_t e = 0; e < r && col < r; ++e) {
    Matrix<typename F::Element> c(r, 1, f.zero());
    c(e, 0) = f.one();
    Matrix<typename F::Element> trial = phi0.hstack(c);
    if (rank(trial) == trial.cols()) {
      phi0 = trial;
      std::vector<Poly<F>> v(r, Poly<F>(f));
      v[e] = Poly<F>::constant(f, f.one());
      append(v);
    }
  }
  const RatMatrix<F> dual = inverse(phi).transpose();
  for (size_t j = 0; j < r; ++j) {
    std::vector<Poly<F>> v;
    for (size_t i = 0; i < r; ++i) v.push_back(taylor(dual(i, j), K));
    nf.dual_frame.push_back(std::move(v));
  }
  return nf;
}

template <class F>
NormalForm<F> normal_form(const TorsionModule<F>& tau, const CurvePoint<F>& x) {
  return normal_form_of(x, tau.at(x), tau.V.rank());
}

/// Degree of tau: sum over support points of the normal-form degrees.
template <class F>
int torsion_degree(const TorsionModule<F>& tau) {
  int d = 0;
  for (const auto& x : tau.support()) d += normal_form(tau, x).degree();
  return d;
}

}  // namespace hecke
