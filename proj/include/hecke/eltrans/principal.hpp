#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke/p1bundles/p1bundles.hpp"

namespace hecke {

/// Principal part numer(z) / z^order at a point, in the chart frame of the base bundle
/// (columns of A0 at finite points, of Ainf at infinity). Canonical: deg numer < order and
/// numer(0) != 0; the zero part has order 0.
template <class F>
struct PrincipalPart {
  CurvePoint<F> point;
  int order = 0;
  std::vector<Poly<F>> numer;

  bool is_zero() const { return order == 0; }
  size_t rank() const { return numer.size(); }
  /// Leading vector numer(0).
  std::vector<typename F::Element> leading() const {
    std::vector<typename F::Element> v;
    for (const auto& p : numer) v.push_back(p.coeff(0));
    return v;
  }
  /// numer / z^order as rational functions of the uniformiser.
  RatVector<F> local_vector() const {
    RatVector<F> out;
    for (const auto& p : numer)
      out.push_back(RatFunc<F>(p) * RatFunc<F>::power(p.field(), -order));
    return out;
  }
};

/// Reduce modulo regular germs and strip common powers of z.
template <class F>
PrincipalPart<F> canonical_part(PrincipalPart<F> p) {
  for (auto& x : p.numer) x = x.truncated(p.order);
  while (p.order > 0) {
    bool divisible = std::all_of(p.numer.begin(), p.numer.end(),
                                 [](const Poly<F>& x) { return x.coeff(0).is_zero(); });
    if (!divisible) break;
    for (auto& x : p.numer) x = x.shifted(-1);
    --p.order;
  }
  return p;
}

template <class F>
PrincipalPart<F> make_part(const CurvePoint<F>& x, int order, std::vector<Poly<F>> numer) {
  return canonical_part(PrincipalPart<F>{x, order, std::move(numer)});
}

/// Principal part at x of a vector given in local frame coordinates (functions of z).
template <class F>
PrincipalPart<F> part_of_local(const CurvePoint<F>& x, const RatVector<F>& v) {
  int k = 0;
  for (const auto& e : v)
    if (!e.is_zero()) k = std::max(k, -e.ord0());
  const F& f = v.front().field();
  std::vector<Poly<F>> numer;
  const CurvePoint<F> origin = CurvePoint<F>::finite(f.zero());
  for (const auto& e : v) {
    std::vector<typename F::Element> c(static_cast<size_t>(k), f.zero());
    if (k > 0 && !e.is_zero()) {
      LaurentJet<F> jet = laurent_expand(e, origin, 0);
      for (int i = -k; i < 0; ++i) c[static_cast<size_t>(i + k)] = jet.coeff(i);
    }
    numer.emplace_back(f, std::move(c));
  }
  return make_part(x, k, std::move(numer));
}

/// Chart frame of V at x.
template <class F>
const RatMatrix<F>& chart_frame(const Bundle<F>& V, const CurvePoint<F>& x) {
  return x.at_infinity ? V.Ainf : V.A0;
}

/// Principal part at x of a rational section g (ambient coordinates) of V.
template <class F>
PrincipalPart<F> principal_part(const Bundle<F>& V, const CurvePoint<F>& x, const RatVector<F>& g) {
  RatVector<F> loc;
  for (const auto& e : inverse(chart_frame(V, x)) * g) loc.push_back(to_local(e, x));
  return part_of_local(x, loc);
}

/// A rational section (ambient coordinates) with principal part p at p.point and no other
/// poles on the same chart.
template <class F>
RatVector<F> ambient_section(const Bundle<F>& V, const PrincipalPart<F>& p) {
  RatVector<F> g;
  for (const auto& e : p.local_vector()) g.push_back(from_local(e, p.point));
  return chart_frame(V, p.point) * g;
}

/// Skyscraper quotient Vtilde / V given by generators per support point.
template <class F>
struct TorsionModule {
  Bundle<F> V;
  std::vector<std::pair<CurvePoint<F>, std::vector<PrincipalPart<F>>>> parts;  // sorted by point

  void add(const PrincipalPart<F>& p) {
    if (p.is_zero()) return;
    if (p.rank() != V.rank()) throw std::invalid_argument("principal part rank mismatch");
    auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& e) { return e.first == p.point; });
    if (it == parts.end()) {
      parts.push_back({p.point, {p}});
      std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    } else {
      it->second.push_back(p);
    }
  }
  std::vector<CurvePoint<F>> support() const {
    std::vector<CurvePoint<F>> s;
    for (const auto& e : parts) s.push_back(e.first);
    return s;
  }
  const std::vector<PrincipalPart<F>>& at(const CurvePoint<F>& x) const {
    for (const auto& e : parts)
      if (e.first == x) return e.second;
    throw std::invalid_argument("point not in the support of the torsion module");
  }
};

template <class F>
TorsionModule<F> torsion_module(const Bundle<F>& V, const std::vector<PrincipalPart<F>>& gens) {
  TorsionModule<F> t{V, {}};
  for (const auto& p : gens) t.add(canonical_part(p));
  return t;
}

/// <p, f> modulo regular germs, for f a section of V* (ambient coordinates) regular at p.point.
template <class F>
PrincipalPart<F> pairing_principal(const Bundle<F>& V, const PrincipalPart<F>& p, const RatVector<F>& f) {
  const RatVector<F> fhat = chart_frame(V, p.point).transpose() * f;
  const F& fld = V.field;
  Poly<F> acc(fld);
  for (size_t i = 0; i < fhat.size(); ++i) {
    RatFunc<F> loc = to_local(fhat[i], p.point);
    if (!loc.is_zero() && loc.ord0() < 0) throw std::domain_error("not a regular covector");
    if (p.order > 0) acc += mul_trunc(p.numer[i], taylor(loc, p.order), p.order);
  }
  return make_part(p.point, p.order, std::vector<Poly<F>>{acc});
}

}  // namespace hecke
