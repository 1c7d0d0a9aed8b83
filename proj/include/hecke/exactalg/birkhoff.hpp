#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hecke/exactalg/hermite.hpp"

namespace hecke {

/// Basis adapted to the splitting of the bundle (A0, Ainf):
/// L0 = B k[t]^r and Linf = B diag(t^{a_i}) O_inf^r, exponents descending.
template <class F>
struct Splitting {
  std::vector<int> exponents;
  RatMatrix<F> U;     // unimodular over k[t]; B = A0 U
  RatMatrix<F> B;
  RatMatrix<F> Binv;
};

template <class F>
struct BirkhoffFactors {
  RatMatrix<F> U;  // unimodular over k[t]
  std::vector<int> exponents;
  RatMatrix<F> W;  // unimodular over the local ring at infinity
};

namespace detail {

// Row-reduction of a polynomial basis against the valuation at infinity: the columns
// b_i of U are modified until the leading vectors of G^{-1} b_i are independent.
template <class F>
std::pair<RatMatrix<F>, std::vector<int>> reduce_at_infinity(const RatMatrix<F>& Ginv) {
  const size_t r = Ginv.rows();
  const F& f = Ginv.zero().field();
  RatMatrix<F> U = RatMatrix<F>::identity(r, Ginv.zero());
  RatMatrix<F> C = Ginv;  // C = Ginv * U, kept in sync
  std::vector<int> d(r);
  while (true) {
    Matrix<typename F::Element> lv(r, r, f.zero());
    for (size_t j = 0; j < r; ++j) {
      int m = kZeroFunctionDegree;
      for (size_t i = 0; i < r; ++i) m = std::max(m, C(i, j).deg_inf());
      d[j] = m;
      for (size_t i = 0; i < r; ++i)
        if (C(i, j).deg_inf() == m) lv(i, j) = C(i, j).lc_inf();
    }
    Matrix<typename F::Element> ker = kernel(lv);
    if (ker.cols() == 0) break;
    size_t jmax = r;
    for (size_t j = 0; j < r; ++j)
      if (!ker(j, 0).is_zero() && (jmax == r || d[j] >= d[jmax])) jmax = j;
    const auto inv = ker(jmax, 0).inverse();
    for (size_t i = 0; i < r; ++i) {
      if (i == jmax || ker(i, 0).is_zero()) continue;
      RatFunc<F> coef = RatFunc<F>::power(f, d[jmax] - d[i]) * (ker(i, 0) * inv);
      for (size_t k = 0; k < r; ++k) {
        if (!U(k, i).is_zero()) U(k, jmax) += coef * U(k, i);
        if (!C(k, i).is_zero()) C(k, jmax) += coef * C(k, i);
      }
    }
  }
  return {U, d};
}

}  // namespace detail

/// Grothendieck splitting of the bundle with lattice bases A0 (finite chart) and Ainf.
template <class F>
Splitting<F> split_lattices(const RatMatrix<F>& A0, const RatMatrix<F>& Ainf) {
  const size_t r = A0.rows();
  const RatMatrix<F> Ginv = inverse(Ainf) * A0;
  auto [U, d] = detail::reduce_at_infinity(Ginv);
  std::vector<size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return d[x] < d[y]; });
  Splitting<F> s{{}, U.select_columns(order), A0, A0};
  for (size_t k : order) s.exponents.push_back(-d[k]);
  s.B = A0 * s.U;
  s.Binv = inverse(s.B);
  return s;
}

/// G = U diag(t^{a_i}) W with U in GL_r(k[t]), W in GL_r(O_inf), a_1 >= ... >= a_r.
template <class F>
BirkhoffFactors<F> birkhoff_factorize(const RatMatrix<F>& G) {
  const size_t r = G.rows();
  if (G.cols() != r) throw std::invalid_argument("Birkhoff factorization needs a square matrix");
  if (determinant(G).is_zero()) throw std::domain_error("singular matrix");
  Splitting<F> s = split_lattices(RatMatrix<F>::identity(r, G.zero()), G);
  const F& f = G.zero().field();
  std::vector<RatFunc<F>> dinv;
  for (int a : s.exponents) dinv.push_back(RatFunc<F>::power(f, -a));
  RatMatrix<F> W = RatMatrix<F>::diagonal(dinv) * s.Binv * G;
  return {s.U, s.exponents, W};
}

}  // namespace hecke
