#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hecke/eltrans/eltrans.hpp"

namespace hecke {

/// Curvilinear cluster of PV: the point x with the fiber direction jet(z) to order k.
/// `jet` is in the chart frame of V at x, each entry of degree < k, normalized by a unit
/// so its first coordinate not vanishing at z = 0 is the constant 1.
template <class F>
struct Cluster {
  CurvePoint<F> x;
  int k = 1;
  std::vector<Poly<F>> jet;

  std::vector<typename F::Element> value() const {
    std::vector<typename F::Element> v;
    for (const auto& p : jet) v.push_back(p.coeff(0));
    return v;
  }
  friend bool operator==(const Cluster& a, const Cluster& b) {
    return a.x == b.x && a.k == b.k && a.jet == b.jet;
  }
};

struct NormalizedCluster {
  bool changed = false;  // input was not already in normal form
};

/// Bring a cluster to normal form; throws if the jet vanishes at z = 0.
template <class F>
Cluster<F> normalize_cluster(Cluster<F> c, NormalizedCluster* info = nullptr) {
  if (c.k < 1) throw std::invalid_argument("cluster length must be positive");
  const Cluster<F> before = c;
  for (auto& p : c.jet) p = p.truncated(c.k);
  PrincipalPart<F> p{c.x, c.k, c.jet};
  if (std::all_of(c.jet.begin(), c.jet.end(), [](const Poly<F>& q) { return q.coeff(0).is_zero(); }))
    throw std::invalid_argument("cluster jet vanishes at the base point");
  c.jet = detail::unit_normalize(p).numer;
  if (info) info->changed = !(c == before);
  return c;
}

/// Zero-dimensional curvilinear subscheme of PV, a union of clusters with distinct branch points.
template <class F>
struct ZScheme {
  std::vector<Cluster<F>> clusters;

  int length() const {
    int d = 0;
    for (const auto& c : clusters) d += c.k;
    return d;
  }
  std::vector<CurvePoint<F>> base_points() const {
    std::vector<CurvePoint<F>> s;
    for (const auto& c : clusters)
      if (std::find(s.begin(), s.end(), c.x) == s.end()) s.push_back(c.x);
    std::sort(s.begin(), s.end());
    return s;
  }
  friend bool operator==(const ZScheme& a, const ZScheme& b) { return a.clusters == b.clusters; }
};

/// Normalize every cluster, sort (point, then length descending, then branch point), and
/// check that branch points are distinct.
template <class F>
ZScheme<F> make_zscheme(std::vector<Cluster<F>> clusters) {
  for (auto& c : clusters) c = normalize_cluster(std::move(c));
  std::sort(clusters.begin(), clusters.end(), [](const Cluster<F>& a, const Cluster<F>& b) {
    if (!(a.x == b.x)) return a.x < b.x;
    if (a.k != b.k) return a.k > b.k;
    return detail::lex_less<F>(a.value(), b.value());
  });
  for (size_t i = 0; i + 1 < clusters.size(); ++i)
    for (size_t j = i + 1; j < clusters.size() && clusters[j].x == clusters[i].x; ++j)
      if (clusters[i].value() == clusters[j].value())
        throw std::invalid_argument("clusters share a branch point");
  return ZScheme<F>{std::move(clusters)};
}

template <class F>
std::vector<JetCondition<F>> conditions_of(const ZScheme<F>& Z) {
  std::vector<JetCondition<F>> out;
  for (const auto& c : Z.clusters) out.push_back({c.x, c.k, c.jet});
  return out;
}

/// One cluster per normal-form generator of tau.
template <class F>
ZScheme<F> quot_to_hilb(const TorsionModule<F>& tau) {
  std::vector<Cluster<F>> cs;
  for (const auto& x : tau.support())
    for (const auto& g : normal_form(tau, x).gens) cs.push_back({x, g.order, g.numer});
  return make_zscheme(std::move(cs));
}

template <class F>
struct AlphaResult {
  Bundle<F> VZ;
  TorsionModule<F> tauZ;
  QuotPoint<F> q;
};

/// V_Z* = sections of V* whose pairing with every jet vanishes to the cluster's order.
template <class F>
AlphaResult<F> alpha(const Bundle<F>& V, const ZScheme<F>& Z) {
  QuotPoint<F> q = quot_from_conditions(V, conditions_of(Z));
  Bundle<F> VZ = bundle_of_quot(q);
  TorsionModule<F> tauZ = torsion_of_quot(q, Z.base_points());
  return {std::move(VZ), std::move(tauZ), std::move(q)};
}

struct PiDefect {
  int by_degree = 0;  // length - (deg V_Z - deg V)
  int by_rank = 0;    // length - sum over points of the rank of the local condition map
  bool consistent() const { return by_degree == by_rank; }
  int value() const {
    if (!consistent()) throw std::logic_error("pi-defect routes disagree");
    return by_degree;
  }
  bool nondefective() const { return value() == 0; }
};

/// Rank of f -> (coefficients of <f, jet> mod z^k per cluster) on (k[z]/z^K)^r at x.
template <class F>
size_t local_condition_rank(const F& f, size_t r, const std::vector<Cluster<F>>& at_x) {
  int K = 0;
  size_t rows = 0;
  for (const auto& c : at_x) {
    K = std::max(K, c.k);
    rows += static_cast<size_t>(c.k);
  }
  Matrix<typename F::Element> A(rows, r * static_cast<size_t>(K), f.zero());
  size_t row = 0;
  for (const auto& c : at_x) {
    for (size_t comp = 0; comp < r; ++comp)
      for (int e = 0; e < c.k; ++e)
        for (int i = e; i < c.k; ++i)
          A(row + static_cast<size_t>(i), comp * static_cast<size_t>(K) + static_cast<size_t>(e)) =
              c.jet[comp].coeff(i - e);
    row += static_cast<size_t>(c.k);
  }
  return rank(A);
}

template <class F>
PiDefect pi_defect(const Bundle<F>& V, const ZScheme<F>& Z) {
  const AlphaResult<F> a = alpha(V, Z);
  PiDefect d;
  d.by_degree = Z.length() - (degree(a.VZ) - degree(V));
  int r = 0;
  for (const auto& x : Z.base_points()) {
    std::vector<Cluster<F>> at_x;
    for (const auto& c : Z.clusters)
      if (c.x == x) at_x.push_back(c);
    r += static_cast<int>(local_condition_rank(V.field, V.rank(), at_x));
  }
  d.by_rank = Z.length() - r;
  return d;
}

/// alpha(quot_to_hilb(tau)) recovers the quot point of tau.
template <class F>
bool roundtrip_check(const Bundle<F>& V, const TorsionModule<F>& tau) {
  return quot_equal(alpha(V, quot_to_hilb(tau)).q, vtilde_from_tau(V, tau).q);
}

}  // namespace hecke
