#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "hecke/exactalg/exactalg.hpp"

namespace hecke {

/// Rank-r bundle on P^1: L0 = A0 k[t]^r on the finite chart, Linf = Ainf O_inf^r at infinity,
/// both inside k(t)^r.
template <class F>
struct Bundle {
  F field;
  RatMatrix<F> A0;
  RatMatrix<F> Ainf;

  size_t rank() const { return A0.rows(); }
  friend bool operator==(const Bundle& a, const Bundle& b) {
    return a.field == b.field && a.A0 == b.A0 && a.Ainf == b.Ainf;
  }
};

template <class F>
Bundle<F> make_bundle(const RatMatrix<F>& A0, const RatMatrix<F>& Ainf) {
  const size_t r = A0.rows();
  if (r == 0 || A0.cols() != r || Ainf.rows() != r || Ainf.cols() != r)
    throw std::invalid_argument("lattice matrices must be square of equal size");
  if (determinant(A0).is_zero() || determinant(Ainf).is_zero()) throw degenerate_lattice();
  return Bundle<F>{A0.zero().field(), A0, Ainf};
}

/// O(a_1) + ... + O(a_r): A0 = identity, Ainf = diag(t^{a_i}).
template <class F>
Bundle<F> split_bundle(const F& f, const std::vector<int>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("rank must be positive");
  std::vector<RatFunc<F>> d;
  for (int a : exponents) d.push_back(RatFunc<F>::power(f, a));
  return Bundle<F>{f, RatMatrix<F>::identity(exponents.size(), RatFunc<F>(f)), RatMatrix<F>::diagonal(d)};
}

template <class F>
Bundle<F> trivial_bundle(const F& f, size_t r) { return split_bundle(f, std::vector<int>(r, 0)); }

/// deg det of the transition A0^{-1} Ainf, read at infinity.
template <class F>
int degree(const Bundle<F>& V) {
  return (determinant(V.Ainf) / determinant(V.A0)).deg_inf();
}

template <class F>
Bundle<F> dual(const Bundle<F>& V) {
  return Bundle<F>{V.field, inverse(V.A0).transpose(), inverse(V.Ainf).transpose()};
}

template <class F>
Bundle<F> tensor(const Bundle<F>& V, const Bundle<F>& W) {
  return Bundle<F>{V.field, kronecker(V.A0, W.A0), kronecker(V.Ainf, W.Ainf)};
}

/// V (m x), sections allowed poles of order m at x.
template <class F>
Bundle<F> twist(const Bundle<F>& V, const CurvePoint<F>& x, int m) {
  const F& f = V.field;
  if (x.at_infinity) return Bundle<F>{f, V.A0, V.Ainf.scaled(RatFunc<F>::power(f, m))};
  RatFunc<F> z(Poly<F>::linear(f, x.a));
  RatFunc<F> factor = RatFunc<F>::power(f, 0);
  for (int i = 0; i < std::abs(m); ++i) factor = factor * z;
  return Bundle<F>{f, V.A0.scaled(m >= 0 ? factor.inverse() : factor), V.Ainf};
}

/// V(-D) for the effective divisor D of a monic polynomial q on the finite chart.
template <class F>
Bundle<F> twist_down(const Bundle<F>& V, const Poly<F>& q) {
  return Bundle<F>{V.field, V.A0.scaled(RatFunc<F>(q)), V.Ainf};
}

/// K = O(-2), trivialised by dt on the finite chart and by ds = -t^{-2} dt at infinity.
template <class F>
Bundle<F> canonical_bundle(const F& f) {
  RatMatrix<F> A0 = RatMatrix<F>::identity(1, RatFunc<F>(f));
  RatMatrix<F> Ainf(1, 1, RatFunc<F>(f));
  Ainf(0, 0) = -RatFunc<F>::power(f, -2);
  return Bundle<F>{f, A0, Ainf};
}

template <class F>
Bundle<F> canonical_twist(const Bundle<F>& V) { return tensor(V, canonical_bundle(V.field)); }

/// End V = V* (x) V; ambient index (a, b) -> a * r + b with a the dual index.
template <class F>
Bundle<F> end_bundle(const Bundle<F>& V) { return tensor(dual(V), V); }

template <class F>
struct BundleInvariants {
  size_t rank;
  int degree;
  Splitting<F> splitting;
};

template <class F>
BundleInvariants<F> bundle_invariants(const Bundle<F>& V) {
  return {V.rank(), degree(V), split_lattices(V.A0, V.Ainf)};
}

}  // namespace hecke
