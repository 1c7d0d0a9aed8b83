#pragma once

#include <gmpxx.h>

#include <algorithm>

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "hecke/exactalg/poly.hpp"

namespace hecke {

template <class F>
using RootList = std::vector<std::pair<typename F::Element, int>>;

namespace detail {

template <class F>
int strip_root(Poly<F>& p, const typename F::Element& a) {
  const Poly<F> lin = Poly<F>::linear(p.field(), a);
  int m = 0;
  while (!p.is_zero() && p.eval(a).is_zero()) {
    p = p / lin;
    ++m;
  }
  return m;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > mpz_class("1000000000000")) throw std::domain_error("root search budget exceeded");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Roots of p in the base field with multiplicities, in increasing order (zero p throws).
/// Prime fields are searched exhaustively; over Q the rational root theorem is used.
template <class F>
RootList<F> rational_roots(Poly<F> p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const F& f = p.field();
  RootList<F> out;
  if constexpr (std::is_same_v<typename F::Element, Fp>) {
    if (f.size() > 1000000) throw std::domain_error("root search budget exceeded");
    for (uint64_t i = 0; i < f.size() && p.degree() > 0; ++i) {
      const auto a = f.element(i);
      if (int m = detail::strip_root(p, a)) out.emplace_back(a, m);
    }
  } else {
    if (int m = detail::strip_root(p, f.zero())) out.emplace_back(f.zero(), m);
    if (p.degree() > 0) {
      mpz_class den = 1;
      for (const auto& c : p.coeffs()) den = lcm(den, mpz_class(c.value().get_den()));
      const mpz_class a0 = mpz_class(p.coeff(0).value() * den), an = mpz_class(p.lc().value() * den);
      std::vector<typename F::Element> cands;
      for (const auto& u : detail::divisors(a0))
        for (const auto& v : detail::divisors(an))
          for (int sign : {1, -1}) cands.emplace_back(mpq_class(mpz_class(sign * u), v));
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (const auto& a : cands) {
        if (p.degree() <= 0) break;
        if (int m = detail::strip_root(p, a)) out.emplace_back(a, m);
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return out;
}

/// Whether p is a constant times the product of (t - a)^m over the listed roots.
template <class F>
bool splits(const Poly<F>& p, const RootList<F>& roots) {
  int d = 0;
  for (const auto& r : roots) d += r.second;
  return d == p.degree();
}

}  // namespace hecke
