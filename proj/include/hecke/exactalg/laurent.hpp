#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/exactalg/ratfunc.hpp"

namespace hecke {

/// A rational point of P^1: a finite value a (uniformiser z = t - a) or infinity (s = 1/t).
template <class F>
struct CurvePoint {
  using K = typename F::Element;
  bool at_infinity = false;
  K a;

  static CurvePoint finite(const K& value) { return CurvePoint{false, value}; }
  static CurvePoint infinity(const F& f) { return CurvePoint{true, f.zero()}; }

  friend bool operator==(const CurvePoint& x, const CurvePoint& y) {
    return x.at_infinity == y.at_infinity && (x.at_infinity || x.a == y.a);
  }
  /// Finite points in field order, infinity last.
  friend std::strong_ordering operator<=>(const CurvePoint& x, const CurvePoint& y) {
    if (x.at_infinity != y.at_infinity) return x.at_infinity ? std::strong_ordering::greater
                                                             : std::strong_ordering::less;
    if (x.at_infinity) return std::strong_ordering::equal;
    return x.a <=> y.a;
  }
  std::string to_string() const { return at_infinity ? std::string("inf") : a.to_string(); }
};

/// f written in the uniformiser at x: f(z + a), or f(1/s) at infinity.
template <class F>
RatFunc<F> to_local(const RatFunc<F>& f, const CurvePoint<F>& x) {
  return x.at_infinity ? f.invert_variable() : f.shift(x.a);
}
/// Inverse of to_local.
template <class F>
RatFunc<F> from_local(const RatFunc<F>& g, const CurvePoint<F>& x) {
  return x.at_infinity ? g.invert_variable() : g.shift(-x.a);
}

/// Order of f at x.
template <class F>
int order_at(const RatFunc<F>& f, const CurvePoint<F>& x) {
  if (f.is_zero()) return kInfiniteOrder;
  if (x.at_infinity) return -f.deg_inf();
  return to_local(f, x).ord0();
}

/// Power series of a local function regular at z = 0, modulo z^n.
template <class F>
Poly<F> taylor(const RatFunc<F>& g, int n) {
  if (n <= 0) return Poly<F>(g.field());
  if (g.is_poly()) return (g.num() * g.den().coeff(0).inverse()).truncated(n);
  return mul_trunc(g.num(), series_inverse(g.den(), n), n);
}

/// Truncated Laurent expansion sum_{i} c[i] z^{start+i}, exponents below precision.
template <class F>
struct LaurentJet {
  using K = typename F::Element;
  CurvePoint<F> point;
  int start = 0;
  std::vector<K> c;
  int precision = 0;

  bool is_zero() const { return c.empty(); }
  K coeff(int e) const {
    int i = e - start;
    if (i < 0 || i >= static_cast<int>(c.size())) return zero_like(point.a);
    return c[static_cast<size_t>(i)];
  }
};

/// Laurent expansion of f at x, truncated strictly below `precision`.
template <class F>
LaurentJet<F> laurent_expand(const RatFunc<F>& f, const CurvePoint<F>& x, int precision) {
  LaurentJet<F> jet{x, precision, {}, precision};
  if (f.is_zero()) return jet;
  RatFunc<F> g = to_local(f, x);
  const int vn = g.num().valuation(), vd = g.den().valuation();
  const int v = vn - vd;
  if (v >= precision) return jet;
  Poly<F> n = g.num().shifted(-vn), d = g.den().shifted(-vd);
  const int terms = precision - v;
  Poly<F> series = mul_trunc(n, series_inverse(d, terms), terms);
  jet.start = v;
  jet.c.assign(static_cast<size_t>(terms), f.field().zero());
  for (int i = 0; i < terms; ++i) jet.c[static_cast<size_t>(i)] = series.coeff(i);
  return jet;
}

/// Product of two jets at the same point, valid to the smaller guaranteed precision.
template <class F>
LaurentJet<F> jet_product(const LaurentJet<F>& a, const LaurentJet<F>& b) {
  if (!(a.point == b.point)) throw std::invalid_argument("jets anchored at different points");
  // a known modulo z^{pa}, b modulo z^{pb}: product known modulo z^{min(pa + vb, pb + va)}
  const int prec = std::min(a.precision + (b.is_zero() ? b.precision : b.start),
                            b.precision + (a.is_zero() ? a.precision : a.start));
  LaurentJet<F> r{a.point, prec, {}, prec};
  if (a.is_zero() || b.is_zero()) return r;
  r.start = a.start + b.start;
  if (r.start >= prec) {
    r.start = prec;
    return r;
  }
  const auto zero = zero_like(a.c.front());
  r.c.assign(static_cast<size_t>(prec - r.start), zero);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) {
      size_t e = i + j;
      if (e < r.c.size()) r.c[e] += a.c[i] * b.c[j];
    }
  return r;
}

}  // namespace hecke
