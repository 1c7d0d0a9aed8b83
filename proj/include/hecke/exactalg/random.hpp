#pragma once

#include <vector>

#include "hecke/exactalg/hermite.hpp"

namespace hecke {

template <class F>
Poly<F> random_poly(const F& f, Rng& rng, int max_degree) {
  std::vector<typename F::Element> c;
  for (int i = 0; i <= max_degree; ++i) c.push_back(f.random(rng));
  return Poly<F>(f, std::move(c));
}

/// Product of random elementary column operations, a permutation and a scalar diagonal:
/// an element of GL_r(k[t]) with small entries.
template <class F>
RatMatrix<F> random_unimodular(const F& f, Rng& rng, size_t r, int steps, int max_degree) {
  RatMatrix<F> U = RatMatrix<F>::identity(r, RatFunc<F>(f));
  if (r == 1) return U.scaled(RatFunc<F>::constant(f, f.random_nonzero(rng)));
  for (int s = 0; s < steps; ++s) {
    size_t i = rng.below(r), j = rng.below(r - 1);
    if (j >= i) ++j;
    RatFunc<F> q(random_poly(f, rng, max_degree));
    for (size_t k = 0; k < r; ++k)
      if (!U(k, i).is_zero()) U(k, j) += q * U(k, i);
  }
  std::vector<size_t> perm(r);
  for (size_t k = 0; k < r; ++k) perm[k] = k;
  for (size_t k = r; k-- > 1;) std::swap(perm[k], perm[rng.below(k + 1)]);
  U = U.select_columns(perm);
  for (size_t j = 0; j < r; ++j) {
    RatFunc<F> c = RatFunc<F>::constant(f, f.random_nonzero(rng));
    for (size_t k = 0; k < r; ++k) U(k, j) = U(k, j) * c;
  }
  return U;
}

/// An element of GL_r(k[1/t]).
template <class F>
RatMatrix<F> random_unimodular_at_infinity(const F& f, Rng& rng, size_t r, int steps, int max_degree) {
  return invert_variable(random_unimodular(f, rng, r, steps, max_degree));
}

template <class T>
Matrix<T> random_matrix(size_t rows, size_t cols, const auto& field, Rng& rng) {
  Matrix<T> m(rows, cols, field.zero());
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = field.random(rng);
  return m;
}

}  // namespace hecke
