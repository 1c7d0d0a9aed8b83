#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hecke/brillnoether/brillnoether.hpp"
#include "hecke/cli/serialize.hpp"

namespace hecke {

/// Parameters shared by all verification suites. samples == 0 selects the suite default.
struct SuiteConfig {
  FieldDescriptor field{false, 101};
  uint64_t seed = 1;
  size_t samples = 0;
  size_t max_counterexamples = 5;
  size_t census_budget = 20000;  // torsion modules enumerated per census case
};

/// Outcome of one suite. Reports carry no timing so that equal seeds give equal bytes.
struct SuiteResult {
  std::string name;
  std::string field;
  uint64_t seed = 0;
  size_t samples = 0;
  size_t passed = 0;
  size_t failed = 0;
  Json stats = Json::object();
  std::vector<Json> counterexamples;

  bool ok() const { return samples > 0 && failed == 0; }
  Json to_json() const {
    Json ce = Json::array();
    for (const auto& c : counterexamples) ce.push_back(c);
    return Json{{"suite", name}, {"field", field},       {"seed", seed},   {"samples", samples},
                {"passed", passed}, {"failed", failed}, {"stats", stats}, {"counterexamples", ce}};
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ggrr",   "roundtrip", "census",        "spans",  "relggrr",
                                              "pidefect", "samespan", "serre",        "oracle", "bn_span",
                                              "secant", "petri_duality"};
  return names;
}

inline size_t default_samples(const std::string& suite) {
  if (suite == "ggrr" || suite == "roundtrip" || suite == "pidefect") return 500;
  if (suite == "spans") return 300;
  if (suite == "relggrr" || suite == "serre" || suite == "oracle") return 200;
  if (suite == "census") return 3;
  return 100;
}

/// Stable per-suite stream: FNV-1a of the suite name.
inline uint64_t suite_stream(const std::string& suite) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ull;
  return h;
}

inline uint64_t instance_seed(uint64_t seed, const std::string& suite, size_t index) {
  return Rng::derive(Rng::derive(seed, suite_stream(suite)), index);
}

class unknown_suite : public std::invalid_argument {
 public:
  explicit unknown_suite(const std::string& s) : std::invalid_argument("unknown suite '" + s + "'") {}
};

namespace suites {

inline void bump(Json& stats, const std::string& key, int64_t by = 1) {
  if (!stats.contains(key)) stats[key] = 0;
  stats[key] = stats[key].get<int64_t>() + by;
}

template <class F>
CurvePoint<F> random_point(const F& f, Rng& rng) {
  return rng.below(5) == 0 ? CurvePoint<F>::infinity(f) : CurvePoint<F>::finite(f.random(rng));
}

template <class F>
std::vector<typename F::Element> random_nonzero_vector(const F& f, Rng& rng, size_t n) {
  while (true) {
    std::vector<typename F::Element> v;
    bool nz = false;
    for (size_t i = 0; i < n; ++i) {
      v.push_back(f.random(rng));
      nz = nz || !v.back().is_zero();
    }
    if (nz) return v;
  }
}

template <class F>
std::vector<int> random_exponents(Rng& rng, size_t rmax, int lo, int hi) {
  const size_t r = 1 + rng.below(rmax);
  std::vector<int> a;
  for (size_t i = 0; i < r; ++i) a.push_back(static_cast<int>(rng.between(lo, hi)));
  return a;
}

/// Random bundle with exponents in [lo, hi], resampled until h^1 > 0.
template <class F>
Bundle<F> bundle_with_h1(const F& f, Rng& rng, size_t rmax, int lo, int hi) {
  while (true) {
    auto a = random_exponents<F>(rng, rmax, lo, hi);
    bool h1 = false;
    for (int x : a) h1 = h1 || x <= -2;
    if (h1) return random_bundle(f, rng, a);
  }
}

/// Random pair (V, F) with h^1(V (x) F) > 0.
template <class F>
std::pair<Bundle<F>, Bundle<F>> pair_with_h1(const F& f, Rng& rng, size_t rv, int vlo, int vhi, size_t rf, int flo,
                                             int fhi) {
  while (true) {
    auto a = random_exponents<F>(rng, rv, vlo, vhi);
    auto b = random_exponents<F>(rng, rf, flo, fhi);
    bool h1 = false;
    for (int x : a)
      for (int y : b) h1 = h1 || x + y <= -2;
    if (h1) return {random_bundle(f, rng, a), random_bundle(f, rng, b)};
  }
}

template <class F>
Json vector_json(const std::vector<typename F::Element>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

// Each instance fills `inst` with its inputs before computing, so a failure record is
// self-contained, and returns whether the checked property holds.

template <class F>
bool ggrr(const F& f, Rng& rng, Json& inst, Json& stats) {
  const auto V = bundle_with_h1(f, rng, 3, -6, -1);
  const auto tau = random_torsion(V, rng, TorsionShape<F>{});
  inst["torsion"] = to_json(tau);
  const auto rep = ggrr_check(V, tau);
  inst["lhs"] = rep.lhs;
  inst["rhs"] = rep.rhs;
  if (rep.rhs > 0) bump(stats, "positive_defect");
  return rep.holds();
}

template <class F>
bool roundtrip(const F& f, Rng& rng, Json& inst, Json& stats) {
  const auto V = random_bundle(f, rng, random_exponents<F>(rng, 3, -4, 2));
  TorsionShape<F> shape;
  shape.reduced = rng.below(3) == 0;
  const auto tau = random_torsion(V, rng, shape);
  inst["torsion"] = to_json(tau);
  if (shape.reduced) bump(stats, "reduced");
  return roundtrip_check(V, tau);
}

template <class F>
bool spans(const F& f, Rng& rng, Json& inst, Json& stats) {
  if (rng.coin()) {
    const auto V = bundle_with_h1(f, rng, 3, -5, -1);
    ZShape shape;
    if (V.rank() > 1 && rng.coin()) shape.fiber_stack = static_cast<int>(V.rank()) + 1;
    const auto Z = random_zscheme(f, V.rank(), rng, shape);
    inst["bundle"] = to_json(V);
    inst["zscheme"] = to_json(Z);
    const auto s = span_of(V, Z);
    if (!s.routes_agree()) return false;
    inst["defect"] = s.defect();
    if (s.defect() > 0) bump(stats, "defective");
    return s.defect() >= 0;
  }
  const auto [V, Fb] = pair_with_h1(f, rng, 2, -5, -1, 2, -1, 2);
  ZShape shape;
  shape.max_length = 4;
  const auto Z = random_zscheme(f, V.rank(), rng, shape);
  inst["bundle"] = to_json(V);
  inst["twist"] = to_json(Fb);
  inst["zscheme"] = to_json(Z);
  bump(stats, "relative");
  const auto s = rel_span(V, Fb, Z);
  if (!s.routes_agree()) return false;
  inst["defect"] = s.defect();
  return s.defect() >= 0;
}

template <class F>
bool relggrr(const F& f, Rng& rng, Json& inst, Json& stats) {
  const auto [V, Fb] = pair_with_h1(f, rng, 2, -6, -1, 2, -1, 2);
  const auto tau = random_torsion(V, rng, TorsionShape<F>{});
  inst["torsion"] = to_json(tau);
  inst["twist"] = to_json(Fb);
  const auto rep = relggrr_check(V, Fb, tau);
  inst["lhs"] = rep.lhs;
  inst["rhs"] = rep.rhs;
  if (rep.rhs > 0) bump(stats, "positive_defect");
  return rep.holds();
}

/// E = O(3) + O, V = E*, F = E, tau from Lambda = <(t^3 - t, 0), (2, 1)>: both sides equal 4.
template <class F>
bool relggrr_worked(const F& f, Json& inst) {
  using RF = RatFunc<F>;
  const auto E = split_bundle(f, {3, 0});
  const RF zero(f), one = RF::constant(f, f.one());
  const auto L = make_section_subspace(
      E, {{RF::power(f, 3) - RF::power(f, 1), zero}, {RF::constant(f, f.from_int(2)), one}});
  const auto zl = zlambda(E, L);
  inst["torsion"] = to_json(zl.tau);
  inst["twist"] = to_json(E);
  const auto rep = relggrr_check(dual(E), E, zl.tau);
  inst["lhs"] = rep.lhs;
  inst["rhs"] = rep.rhs;
  return rep.lhs == 4 && rep.rhs == 4;
}

template <class F>
bool pidefect(const F& f, Rng& rng, Json& inst, Json& stats) {
  const auto V = random_bundle(f, rng, random_exponents<F>(rng, 3, -4, 1));
  ZShape shape;
  if (V.rank() > 1 && rng.coin()) shape.fiber_stack = static_cast<int>(V.rank()) + 1;
  const auto Z = random_zscheme(f, V.rank(), rng, shape);
  inst["bundle"] = to_json(V);
  inst["zscheme"] = to_json(Z);
  const auto d = pi_defect(V, Z);
  inst["by_degree"] = d.by_degree;
  inst["by_rank"] = d.by_rank;
  if (d.by_degree > 0) bump(stats, "defective");
  return d.consistent() && d.by_degree >= 0;
}

/// Three length-1 clusters in the fiber of O^2 over one point: defect 1 and q = V(x).
template <class F>
bool pidefect_fiber(const F& f, Json& inst) {
  const auto V = trivial_bundle(f, 2);
  const auto x = CurvePoint<F>::finite(f.zero());
  auto c = [&](int a, int b) {
    return Cluster<F>{x, 1, {Poly<F>::constant(f, f.from_int(a)), Poly<F>::constant(f, f.from_int(b))}};
  };
  const auto Z = make_zscheme<F>({c(1, 0), c(0, 1), c(1, 1)});
  inst["bundle"] = to_json(V);
  inst["zscheme"] = to_json(Z);
  const auto d = pi_defect(V, Z);
  inst["by_degree"] = d.by_degree;
  inst["by_rank"] = d.by_rank;
  const auto full = torsion_module(V, {make_part(x, 1, {Poly<F>::constant(f, f.one()), Poly<F>(f)}),
                                       make_part(x, 1, {Poly<F>(f), Poly<F>::constant(f, f.one())})});
  return d.by_degree == 1 && d.by_rank == 1 && quot_equal(alpha(V, Z).q, vtilde_from_tau(V, full).q);
}

template <class F>
bool samespan(const F& f, Rng& rng, Json& inst, Json& stats) {
  // rank >= 2: a line bundle has a single branch over each point
  auto V = bundle_with_h1(f, rng, 3, -5, -2);
  while (V.rank() < 2) V = bundle_with_h1(f, rng, 3, -5, -2);
  const size_t r = V.rank();
  const auto x = random_point(f, rng);
  std::vector<Cluster<F>> z1, z2;
  if (rng.coin()) {
    // the full fiber over x, in the frame basis and in a random basis
    bump(stats, "frame_change");
    while (true) {
      Matrix<typename F::Element> M(r, r, f.zero());
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) M(i, j) = f.random(rng);
      if (rank(M) < r) continue;
      z1.clear();
      z2.clear();
      for (size_t j = 0; j < r; ++j) {
        std::vector<Poly<F>> e(r, Poly<F>(f)), m;
        e[j] = Poly<F>::constant(f, f.one());
        for (size_t i = 0; i < r; ++i) m.push_back(Poly<F>::constant(f, M(i, j)));
        z1.push_back({x, 1, e});
        z2.push_back({x, 1, m});
      }
      if (!(make_zscheme(z1) == make_zscheme(z2))) break;
    }
  } else {
    // two clusters a, b at x with k_a > k_b; jet_a is replaced by jet_a + c z^(k_a - k_b) jet_b
    bump(stats, "modified_jet");
    while (true) {
      const int ka = 2 + static_cast<int>(rng.below(2));
      const int kb = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(ka - 1)));
      std::vector<Poly<F>> ja, jb;
      for (size_t i = 0; i < r; ++i) {
        ja.push_back(random_poly(f, rng, ka - 1));
        jb.push_back(random_poly(f, rng, kb - 1));
      }
      const auto c = f.random_nonzero(rng);
      std::vector<Poly<F>> ja2 = ja;
      for (size_t i = 0; i < r; ++i) ja2[i] += jb[i].shifted(ka - kb) * c;
      try {
        z1 = {{x, ka, ja}, {x, kb, jb}};
        z2 = {{x, ka, ja2}, {x, kb, jb}};
        if (!(make_zscheme(z1) == make_zscheme(z2))) break;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  const auto Z1 = make_zscheme(z1), Z2 = make_zscheme(z2);
  inst["bundle"] = to_json(V);
  inst["zscheme"] = to_json(Z1);
  inst["zscheme2"] = to_json(Z2);
  return !(Z1 == Z2) && same_span_check(V, Z1, Z2);
}

template <class F>
bool serre(const F& f, Rng& rng, Json& inst, Json& stats) {
  const auto W = bundle_with_h1(f, rng, 3, -6, 2);
  inst["bundle"] = to_json(W);
  const SerreData<F> S(W);
  const size_t h1 = S.h1();
  inst["h1"] = h1;
  if (rank(S.P) != h1 || S.dc.h0() != h1) return false;
  // the representatives have unit coordinates
  for (size_t k = 0; k < h1; ++k) {
    auto cls = h1_class(S.c, S.c.h1_representative(k));
    for (size_t i = 0; i < h1; ++i)
      if (!(cls[i] == (i == k ? f.one() : f.zero()))) return false;
  }
  // a Cech coboundary A0 p + Ainf q with p regular on the finite chart, q at infinity
  const size_t r = W.rank();
  RatVector<F> p, q;
  for (size_t i = 0; i < r; ++i) {
    p.push_back(RatFunc<F>(random_poly(f, rng, 2)));
    q.push_back(RatFunc<F>(random_poly(f, rng, 2)).invert_variable());
  }
  const RatVector<F> g = W.A0 * p, gi = W.Ainf * q;
  RatVector<F> sum;
  for (size_t i = 0; i < r; ++i) sum.push_back(g[i] + gi[i]);
  Json cob = Json::array();
  for (const auto& e : sum) cob.push_back(to_json(e));
  inst["coboundary"] = cob;
  const auto cls = h1_class(S.c, sum);
  bool zero = true;
  for (const auto& e : cls) zero = zero && e.is_zero();
  bump(stats, "coboundaries");
  return zero;
}

template <class F>
bool oracle(const F& f, Rng& rng, Json& inst, Json&) {
  const auto V = random_bundle(f, rng, random_exponents<F>(rng, 3, -5, 5));
  inst["bundle"] = to_json(V);
  const auto c = cohomology(V);
  const size_t o0 = oracle_h0(V), o1 = oracle_h0(canonical_twist(dual(V)));
  inst["h0"] = c.h0();
  inst["h1"] = c.h1();
  inst["oracle_h0"] = o0;
  inst["oracle_h1"] = o1;
  return o0 == c.h0() && o1 == c.h1();
}

inline const std::vector<std::vector<int>>& bn_types() {
  static const std::vector<std::vector<int>> t{{2, 0}, {3, 0}, {4, 0}, {5, 0},    {3, 1},   {4, 1},
                                               {5, 1}, {4, 2}, {2, 1, 0}, {3, 0, 0}, {3, 1, 0}};
  return t;
}

/// Lambda with split determinant: random first (finite fields only; over Q the determinant
/// almost never splits and root finding is costly), then sections triangular in the split
/// frame whose diagonal entries are products of random linear factors.
template <class F>
SectionSubspace<F> split_lambda(const Bundle<F>& E, Rng& rng, Json& stats) {
  const size_t r = E.rank();
  for (int tries = 0; tries < (E.field.finite() ? 20 : 0); ++tries) {
    auto L = random_section_subspace(E, r, rng);
    try {
      zlambda(E, L);
      return L;
    } catch (const std::domain_error&) {
      bump(stats, "lambda_resamples");
    }
  }
  bump(stats, "triangular_lambda");
  const F& f = E.field;
  const auto c = cohomology(E);
  const auto& a = c.split.exponents;
  while (true) {
    std::vector<RatVector<F>> basis;
    for (size_t j = 0; j < r; ++j) {
      RatVector<F> coords(r, RatFunc<F>(f));
      Poly<F> d = Poly<F>::constant(f, f.one());
      for (int m = 0; m < a[j]; ++m) d = d * Poly<F>::linear(f, f.random(rng));
      coords[j] = RatFunc<F>(d);
      for (size_t i = 0; i < j; ++i) coords[i] = RatFunc<F>(random_poly(f, rng, a[i]));
      basis.push_back(c.split.B * coords);
    }
    try {
      auto L = make_section_subspace(E, basis);
      zlambda(E, L);
      return L;
    } catch (const std::exception&) {
    }
  }
}

template <class F>
bool bn_span(const F& f, Rng& rng, Json& inst, Json& stats) {
  const auto& types = bn_types();
  const size_t ti = rng.below(types.size());
  const auto E = random_bundle(f, rng, types[ti]);
  inst["bundle"] = to_json(E);
  const auto L = split_lambda(E, rng, stats);
  Json lb = Json::array();
  for (const auto& s : L.basis) {
    Json v = Json::array();
    for (const auto& e : s) v.push_back(to_json(e));
    lb.push_back(v);
  }
  inst["lambda"] = lb;
  bump(stats, "type_" + std::to_string(ti));
  const auto rep = bn_span_identity_check(E, L);
  const auto g = genrks_defect_check(E, L);
  inst["defect"] = g.defect;
  inst["expected"] = g.expected;
  inst["literal"] = g.literal;
  if (g.simple) bump(stats, "simple");
  if (g.literal == g.defect) bump(stats, "literal_matches");
  return rep.holds() && g.holds();
}

template <class F>
bool secant(const F& f, Rng& rng, Json& inst, Json& stats) {
  Bundle<F> V = split_bundle(f, {-6, -4}), Fb = split_bundle(f, {0, 1});
  if (rng.coin()) {
    std::tie(V, Fb) = pair_with_h1(f, rng, 2, -6, -2, 2, -1, 1);
    bump(stats, "random_pair");
  }
  ZShape shape;
  shape.max_length = 4;
  const auto Z = random_zscheme(f, V.rank(), rng, shape);
  std::vector<DeltaPoint<F>> pts;
  Json pj = Json::array();
  for (const auto& c : Z.clusters) {
    if (!pts.empty() && rng.coin()) continue;
    auto v = c.value();
    const auto s = f.random_nonzero(rng);
    for (auto& e : v) e *= s;
    DeltaPoint<F> d{c.x, v, random_nonzero_vector(f, rng, Fb.rank())};
    pj.push_back(Json{{"x", to_json(d.x)}, {"v", vector_json<F>(d.v)}, {"w", vector_json<F>(d.w)}});
    pts.push_back(std::move(d));
  }
  inst["bundle"] = to_json(V);
  inst["twist"] = to_json(Fb);
  inst["zscheme"] = to_json(Z);
  inst["points"] = pj;
  if (!secant_membership(V, Fb, pts, Z)) return false;
  // monotone under dropping a cluster
  if (Z.clusters.size() > 1) {
    const size_t drop = rng.below(Z.clusters.size());
    std::vector<Cluster<F>> rest;
    for (size_t i = 0; i < Z.clusters.size(); ++i)
      if (i != drop) rest.push_back(Z.clusters[i]);
    bump(stats, "monotone_checks");
    if (!rel_span(V, Fb, Z).span().contains(rel_span(V, Fb, make_zscheme(rest)).span())) return false;
  }
  return true;
}

template <class F>
bool petri_duality(const F& f, Rng& rng, Json& inst, Json& stats) {
  while (true) {
    std::vector<int> a = random_exponents<F>(rng, 2, -3, 3);
    if (a.size() == 1) a.push_back(static_cast<int>(rng.between(-3, 3)));
    if (rng.coin()) a.push_back(static_cast<int>(rng.between(-3, 3)));
    const auto E = random_bundle(f, rng, a);
    const size_t h0 = cohomology(E).h0();
    if (h0 == 0) continue;
    const size_t m = 1 + rng.below(std::min(h0, E.rank()));
    const auto L = random_section_subspace(E, m, rng);
    inst["bundle"] = to_json(E);
    inst["m"] = m;
    const auto C = restricted_cup(E, L);
    if (rank(C) > 0) bump(stats, "nonzero_cup");
    return cup_petri_duality_check(E, L);
  }
}

template <class F>
using InstanceFn = bool (*)(const F&, Rng&, Json&, Json&);

template <class F>
InstanceFn<F> instance_fn(const std::string& suite) {
  if (suite == "ggrr") return &ggrr<F>;
  if (suite == "roundtrip") return &roundtrip<F>;
  if (suite == "spans") return &spans<F>;
  if (suite == "relggrr") return &relggrr<F>;
  if (suite == "pidefect") return &pidefect<F>;
  if (suite == "samespan") return &samespan<F>;
  if (suite == "serre") return &serre<F>;
  if (suite == "oracle") return &oracle<F>;
  if (suite == "bn_span") return &bn_span<F>;
  if (suite == "secant") return &secant<F>;
  if (suite == "petri_duality") return &petri_duality<F>;
  throw unknown_suite(suite);
}

template <class Fn>
bool guarded(Fn&& fn, Json& inst) {
  try {
    return fn();
  } catch (const std::exception& e) {
    inst["error"] = e.what();
    return false;
  }
}

inline void record(SuiteResult& res, bool ok, Json inst, size_t cap) {
  ++res.samples;
  if (ok) {
    ++res.passed;
    return;
  }
  ++res.failed;
  if (res.counterexamples.size() < cap) res.counterexamples.push_back(std::move(inst));
}

/// C(q + 1, d) ((q^r - 1) / (q - 1))^d: reduced points on P^1(F_q), one fiber direction each.
inline uint64_t census_closed_form(uint64_t q, size_t r, int d) {
  uint64_t binom = 1;
  for (int i = 0; i < d; ++i) binom = binom * (q + 1 - static_cast<uint64_t>(i)) / static_cast<uint64_t>(i + 1);
  uint64_t dirs = 0, pw = 1;
  for (size_t i = 0; i < r; ++i) {
    dirs += pw;
    pw *= q;
  }
  uint64_t out = binom;
  for (int i = 0; i < d; ++i) out *= dirs;
  return out;
}

inline SuiteResult run_census(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "census";
  res.field = "Fp:2,Fp:3";
  res.seed = cfg.seed;
  const std::vector<std::tuple<uint64_t, size_t, int>> cases{{2, 2, 1}, {2, 2, 2}, {3, 2, 2}};
  for (const auto& [q, r, d] : cases) {
    Json inst{{"q", q}, {"r", r}, {"d", d}};
    const bool ok = guarded(
        [&, q = q, r = r, d = d] {
          const auto rep = enumerate_reduced(q, r, d, cfg.census_budget);
          const uint64_t expect = census_closed_form(q, r, d);
          inst["torsion_count"] = rep.torsion_count;
          inst["scheme_count"] = rep.scheme_count;
          inst["closed_form"] = expect;
          return rep.bijection() && rep.torsion_count == expect;
        },
        inst);
    record(res, ok, inst, cfg.max_counterexamples);
  }
  return res;
}

}  // namespace suites

/// Runs one instance from its seed; used by the suite runner and for replay.
template <class F>
bool run_instance(const std::string& suite, const F& f, uint64_t seed, Json& inst, Json& stats) {
  const auto fn = suites::instance_fn<F>(suite);
  Rng rng(seed);
  inst["suite"] = suite;
  inst["field"] = f.name();
  inst["instance_seed"] = seed;
  return suites::guarded([&] { return fn(f, rng, inst, stats); }, inst);
}

inline SuiteResult run_suite(const std::string& suite, const SuiteConfig& cfg) {
  if (cfg.census_budget == 0) throw std::invalid_argument("census budget must be positive");
  if (suite == "census") return suites::run_census(cfg);
  const size_t n = cfg.samples ? cfg.samples : default_samples(suite);
  return with_field(cfg.field, [&](const auto& f) {
    using Fld = std::decay_t<decltype(f)>;
    suites::instance_fn<Fld>(suite);
    SuiteResult res;
    res.name = suite;
    res.field = f.name();
    res.seed = cfg.seed;
    for (size_t i = 0; i < n; ++i) {
      Json inst{{"index", i}};
      const bool ok = run_instance(suite, f, instance_seed(cfg.seed, suite, i), inst, res.stats);
      suites::record(res, ok, std::move(inst), cfg.max_counterexamples);
    }
    if (suite == "relggrr") {
      Json inst{{"index", "worked"}};
      const bool ok = suites::guarded([&] { return suites::relggrr_worked(f, inst); }, inst);
      suites::record(res, ok, std::move(inst), cfg.max_counterexamples);
    }
    if (suite == "pidefect") {
      Json inst{{"index", "fiber"}};
      const bool ok = suites::guarded([&] { return suites::pidefect_fiber(f, inst); }, inst);
      suites::record(res, ok, std::move(inst), cfg.max_counterexamples);
    }
    return res;
  });
}

/// Replays a counterexample record (suite, field, instance_seed).
inline bool replay_instance(const Json& record, Json& out) {
  const Json& s = detail::member(record, "suite", "");
  const Json& fl = detail::member(record, "field", "");
  const Json& sd = detail::member(record, "instance_seed", "");
  if (!s.is_string() || !fl.is_string() || !sd.is_number_unsigned())
    throw io_error("/: replay needs string suite and field and an unsigned instance_seed");
  const FieldDescriptor fd = parse_field_descriptor(fl.get<std::string>());
  return with_field(fd, [&](const auto& f) {
    Json stats = Json::object();
    return run_instance(s.get<std::string>(), f, sd.get<uint64_t>(), out, stats);
  });
}

inline Json report_json(const std::vector<SuiteResult>& results, const SuiteConfig& cfg) {
  Json suites = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    suites.push_back(r.to_json());
    ok = ok && r.ok();
  }
  return make_document("report", Json{{"field", cfg.field.name()}, {"seed", cfg.seed}, {"ok", ok}, {"suites", suites}});
}

}  // namespace hecke
