#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/hilbquot/zscheme.hpp"

namespace hecke {

/// Serialized canonical form of a quot point; equal keys iff quot_equal over the same base.
template <class F>
std::string quot_key(const QuotPoint<F>& q) {
  return q.finite.to_string() + "|" + q.infinity.to_string();
}

struct CensusReport {
  uint64_t q = 0;
  size_t r = 0;
  int d = 0;
  size_t torsion_count = 0;  // reduced tau of degree d
  size_t scheme_count = 0;   // reduced Z of length d with distinct base points
  size_t distinct_from_torsion = 0;
  size_t distinct_from_schemes = 0;
  bool images_agree = false;   // the two sets of quot points coincide
  bool inverse_ok = false;     // quot_to_hilb and alpha invert each other on every instance
  bool bijection() const {
    return torsion_count == scheme_count && distinct_from_torsion == torsion_count &&
           distinct_from_schemes == scheme_count && images_agree && inverse_ok;
  }
};

class census_budget_exceeded : public std::invalid_argument {
 public:
  census_budget_exceeded() : std::invalid_argument("census budget exceeded") {}
};

/// Points of P^1(F_p), finite points first.
inline std::vector<CurvePoint<PrimeField>> rational_points(const PrimeField& f) {
  std::vector<CurvePoint<PrimeField>> pts;
  for (uint64_t i = 0; i < f.size(); ++i) pts.push_back(CurvePoint<PrimeField>::finite(f.element(i)));
  pts.push_back(CurvePoint<PrimeField>::infinity(f));
  return pts;
}

/// Points of P^{r-1}(F_p), first nonzero coordinate 1.
inline std::vector<std::vector<Fp>> projective_points(const PrimeField& f, size_t r) {
  std::vector<std::vector<Fp>> out;
  for (size_t lead = 0; lead < r; ++lead) {
    const size_t free = r - lead - 1;
    uint64_t n = 1;
    for (size_t i = 0; i < free; ++i) n *= f.size();
    for (uint64_t code = 0; code < n; ++code) {
      std::vector<Fp> v(r, f.zero());
      v[lead] = f.one();
      uint64_t c = code;
      for (size_t i = lead + 1; i < r; ++i, c /= f.size()) v[i] = f.element(c % f.size());
      out.push_back(std::move(v));
    }
  }
  return out;
}

/// Exhaustive comparison of reduced torsion quotients of O^r and reduced subschemes of PO^r
/// of degree d with distinct base points, over F_p.
inline CensusReport enumerate_reduced(uint64_t p, size_t r, int d, size_t budget = 20000) {
  if (!is_prime(p)) throw std::invalid_argument("census needs a prime field size");
  if (r < 1 || d < 1) throw std::invalid_argument("census needs r >= 1 and d >= 1");
  const PrimeField f(p);
  const auto pts = rational_points(f);
  const auto dirs = projective_points(f, r);
  if (static_cast<size_t>(d) > pts.size()) throw std::invalid_argument("d exceeds the number of rational points");
  // C(|P^1|, d) * |P^{r-1}|^d instances per side
  double total = 1;
  for (int i = 0; i < d; ++i) total = total * static_cast<double>(pts.size() - static_cast<size_t>(i)) / (i + 1);
  for (int i = 0; i < d; ++i) total *= static_cast<double>(dirs.size());
  if (total > static_cast<double>(budget)) throw census_budget_exceeded();

  const Bundle<PrimeField> V = trivial_bundle(f, r);
  CensusReport rep{p, r, d};
  rep.inverse_ok = true;
  std::set<std::string> from_tau, from_z;
  std::vector<size_t> subset(static_cast<size_t>(d));
  for (size_t i = 0; i < subset.size(); ++i) subset[i] = i;
  auto poly = [&](const Fp& a) { return Poly<PrimeField>::constant(f, a); };
  while (true) {
    std::vector<size_t> choice(subset.size(), 0);
    while (true) {
      std::vector<PrincipalPart<PrimeField>> parts;
      std::vector<Cluster<PrimeField>> clusters;
      for (size_t i = 0; i < subset.size(); ++i) {
        std::vector<Poly<PrimeField>> v;
        for (const auto& c : dirs[choice[i]]) v.push_back(poly(c));
        parts.push_back(make_part(pts[subset[i]], 1, v));
        clusters.push_back({pts[subset[i]], 1, v});
      }
      // torsion side
      const auto tau = torsion_module(V, parts);
      const auto qt = vtilde_from_tau(V, tau).q;
      from_tau.insert(quot_key(qt));
      ++rep.torsion_count;
      const ZScheme<PrimeField> Zt = quot_to_hilb(tau);
      if (!quot_equal(alpha(V, Zt).q, qt)) rep.inverse_ok = false;
      // scheme side
      const ZScheme<PrimeField> Z = make_zscheme(clusters);
      const auto a = alpha(V, Z);
      from_z.insert(quot_key(a.q));
      ++rep.scheme_count;
      if (!(quot_to_hilb(a.tauZ) == Z)) rep.inverse_ok = false;

      size_t i = 0;
      while (i < choice.size() && ++choice[i] == dirs.size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
    // next d-subset of the points
    int i = d - 1;
    while (i >= 0 && subset[static_cast<size_t>(i)] == pts.size() - static_cast<size_t>(d - i)) --i;
    if (i < 0) break;
    ++subset[static_cast<size_t>(i)];
    for (size_t j = static_cast<size_t>(i) + 1; j < subset.size(); ++j) subset[j] = subset[j - 1] + 1;
  }
  rep.distinct_from_torsion = from_tau.size();
  rep.distinct_from_schemes = from_z.size();
  rep.images_agree = from_tau == from_z;
  return rep;
}

}  // namespace hecke
