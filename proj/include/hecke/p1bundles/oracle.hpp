#pragma once

#include <algorithm>
#include <vector>

#include "hecke/p1bundles/cohomology.hpp"

namespace hecke {

/// h^0 by direct linear algebra: polynomial vectors u of degree <= bound with
/// (A0^{-1} Ainf)^{-1} u regular at infinity. Does not use the splitting.
/// The bound is raised to max deg of the transition, which always suffices.
template <class F>
size_t oracle_h0(const Bundle<F>& V, int bound = 0) {
  const F& f = V.field;
  const size_t r = V.rank();
  const RatMatrix<F> G = inverse(V.A0) * V.Ainf;
  const RatMatrix<F> M = inverse(G);
  int N = bound;
  int D = kZeroFunctionDegree;
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) {
      N = std::max(N, G(i, k).deg_inf());
      D = std::max(D, M(i, k).deg_inf());
    }
  N = std::max(N, 0);
  if (D + N < 1) return r * static_cast<size_t>(N + 1);
  const auto inf = CurvePoint<F>::infinity(f);
  // coefficient of t^e, 1 <= e <= D + N, of (M u)_i
  const size_t unknowns = r * static_cast<size_t>(N + 1);
  Matrix<typename F::Element> A(r * static_cast<size_t>(D + N), unknowns, f.zero());
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) {
      if (M(i, k).is_zero()) continue;
      // t^e coefficients of M_ik for e >= 1 - N, i.e. s-exponents <= N - 1
      LaurentJet<F> jet = laurent_expand(M(i, k), inf, N);
      for (int e = 1; e <= D + N; ++e)
        for (int n = 0; n <= N; ++n)
          A(i * static_cast<size_t>(D + N) + static_cast<size_t>(e - 1), k * static_cast<size_t>(N + 1) + static_cast<size_t>(n)) =
              jet.coeff(n - e);
    }
  return unknowns - rank(A);
}

struct PsiEmbeddingReport {
  bool holds = true;
  bool exhaustive = false;  // false: divisors were sampled, verdict is heuristic
  size_t divisors_checked = 0;
};

/// h^0(K V*(-x-y)) = h^0(K V*) - 2r for every effective degree-2 divisor x + y.
/// Over F_p: all rational pairs (with x = y and infinity) and all irreducible monic quadratics.
template <class F>
PsiEmbeddingReport psi_embedding_check(const Bundle<F>& V, size_t samples = 12) {
  const F& f = V.field;
  const size_t r = V.rank();
  const Bundle<F> KV = canonical_twist(dual(V));
  const size_t h = cohomology(KV).h0();
  PsiEmbeddingReport rep;
  rep.exhaustive = f.finite();
  auto expect = [&](const Bundle<F>& W) {
    ++rep.divisors_checked;
    const size_t got = cohomology(W).h0();
    if (h < 2 * r || got != h - 2 * r) rep.holds = false;
  };
  const size_t npts = f.finite() ? static_cast<size_t>(f.size()) : samples;
  std::vector<CurvePoint<F>> pts;
  for (size_t i = 0; i < npts; ++i) pts.push_back(CurvePoint<F>::finite(f.element(i)));
  pts.push_back(CurvePoint<F>::infinity(f));
  for (size_t i = 0; i < pts.size() && rep.holds; ++i)
    for (size_t j = i; j < pts.size() && rep.holds; ++j)
      expect(twist(twist(KV, pts[i], -1), pts[j], -1));
  // closed points of degree 2: t^2 + b t + c without roots
  const size_t nq = f.finite() ? static_cast<size_t>(f.size()) : 3;
  for (size_t b = 0; b < nq && rep.holds; ++b)
    for (size_t c = 0; c < nq && rep.holds; ++c) {
      Poly<F> q(f, {f.finite() ? f.element(c) : f.from_int(static_cast<int64_t>(c) + 1),
                    f.finite() ? f.element(b) : f.from_int(static_cast<int64_t>(b)), f.one()});
      bool irreducible = true;
      if (f.finite()) {
        for (size_t x = 0; x < nq && irreducible; ++x)
          if (q.eval(f.element(x)).is_zero()) irreducible = false;
      } else {
        // b^2 - 4c < 0 for the sampled (b, c) = (b, c + 1) with b <= 2
        irreducible = static_cast<int64_t>(b * b) < 4 * static_cast<int64_t>(c + 1);
      }
      if (irreducible) expect(twist_down(KV, q));
    }
  return rep;
}

/// A bundle isomorphic to O(a_1) + ... + O(a_r) presented by scrambled lattice bases:
/// A0 = M U, Ainf = M U diag(t^a) W with M polynomial, U in GL(k[t]), W in GL(k[1/t]).
template <class F>
Bundle<F> random_bundle(const F& f, Rng& rng, const std::vector<int>& exponents, int steps = 2,
                        int max_degree = 1) {
  const size_t r = exponents.size();
  RatMatrix<F> M(r, r, RatFunc<F>(f));
  do {
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        M(i, j) = RatFunc<F>(i == j || rng.below(2) ? random_poly(f, rng, max_degree) : Poly<F>(f));
  } while (determinant(M).is_zero());
  std::vector<RatFunc<F>> d;
  for (int a : exponents) d.push_back(RatFunc<F>::power(f, a));
  const RatMatrix<F> A0 = M * random_unimodular(f, rng, r, steps, max_degree);
  const RatMatrix<F> Ainf =
      A0 * RatMatrix<F>::diagonal(d) * random_unimodular_at_infinity(f, rng, r, steps, max_degree);
  return Bundle<F>{f, A0, Ainf};
}

}  // namespace hecke
