#include <gtest/gtest.h>

#include "hecke/hilbquot/hilbquot.hpp"

namespace {

using namespace hecke;

using QF = RationalField;
using PF = PrimeField;
using Q = Rational;
using RF = RatFunc<QF>;
using RM = RatMatrix<QF>;

const QF kQ{};
const PF kF101{101};

Poly<QF> P(std::vector<long> c) {
  std::vector<Q> v;
  for (long x : c) v.emplace_back(x);
  return Poly<QF>(kQ, v);
}
CurvePoint<QF> pt(long a) { return CurvePoint<QF>::finite(Q(a)); }
Cluster<QF> cl(long a, int k, std::vector<std::vector<long>> jet) {
  std::vector<Poly<QF>> j;
  for (auto& c : jet) j.push_back(P(c));
  return {pt(a), k, j};
}
PrincipalPart<QF> part(long a, int k, std::vector<std::vector<long>> numer) {
  std::vector<Poly<QF>> n;
  for (auto& c : numer) n.push_back(P(c));
  return make_part(pt(a), k, n);
}

TEST(QuotToHilb, ReducedSupport) {
  auto V = trivial_bundle(kQ, 2);
  auto tau = torsion_module(V, {part(0, 1, {{2}, {1}}), part(1, 1, {{0}, {3}}), part(5, 1, {{1}, {1}})});
  auto Z = quot_to_hilb(tau);
  ASSERT_EQ(Z.clusters.size(), 3u);
  for (const auto& c : Z.clusters) EXPECT_EQ(c.k, 1);
  EXPECT_EQ(Z.clusters[0].jet, (std::vector<Poly<QF>>{P({1}), Poly<QF>::constant(kQ, Q(1) / Q(2))}));
}

TEST(QuotToHilb, OrderTwoGenerator) {
  auto V = trivial_bundle(kQ, 2);
  auto Z = quot_to_hilb(torsion_module(V, {part(0, 2, {{1}, {0, 1}})}));
  ASSERT_EQ(Z.clusters.size(), 1u);
  EXPECT_EQ(Z.clusters[0], cl(0, 2, {{1}, {0, 1}}));
}

TEST(QuotToHilb, FullFiberGivesFrameDirections) {
  auto V = trivial_bundle(kQ, 2);
  auto Z = quot_to_hilb(torsion_module(V, {part(0, 1, {{1}, {0}}), part(0, 1, {{0}, {1}})}));
  ASSERT_EQ(Z.clusters.size(), 2u);
  EXPECT_EQ(Z.clusters[0], cl(0, 1, {{0}, {1}}));
  EXPECT_EQ(Z.clusters[1], cl(0, 1, {{1}, {0}}));
}

TEST(Alpha, SingleHyperplane) {
  auto V = trivial_bundle(kQ, 2);
  auto a = alpha(V, make_zscheme<QF>({cl(0, 1, {{1}, {0}})}));
  EXPECT_EQ(cohomology(a.VZ).split.exponents, (std::vector<int>{1, 0}));
  RM expect = RM::identity(2, RF(kQ));
  expect(0, 0) = RF::power(kQ, 1);
  EXPECT_EQ(a.q.finite, expect);
}

TEST(Alpha, ThreePointsInOneFiber) {
  auto V = trivial_bundle(kQ, 2);
  auto Z = make_zscheme<QF>({cl(0, 1, {{1}, {0}}), cl(0, 1, {{0}, {1}}), cl(0, 1, {{1}, {1}})});
  auto a = alpha(V, Z);
  EXPECT_EQ(degree(a.VZ), 2);
  EXPECT_EQ(a.q.finite, RM::identity(2, RF(kQ)).scaled(RF::power(kQ, 1)));
  auto d = pi_defect(V, Z);
  EXPECT_EQ(d.by_degree, 1);
  EXPECT_EQ(d.by_rank, 1);
  EXPECT_FALSE(d.nondefective());
  // as a quot point this is V(x)
  auto full = vtilde_from_tau(V, torsion_module(V, {part(0, 1, {{1}, {0}}), part(0, 1, {{0}, {1}})}));
  EXPECT_TRUE(quot_equal(a.q, full.q));
}

TEST(Alpha, LengthTwoCluster) {
  auto V = trivial_bundle(kQ, 2);
  auto a = alpha(V, make_zscheme<QF>({cl(0, 2, {{1}, {0, 1}})}));
  EXPECT_EQ(degree(a.VZ), 2);
  EXPECT_EQ(oracle_h0(a.VZ), 4u);
  EXPECT_EQ(cohomology(a.VZ).h0(), 4u);
}

TEST(ZSchemeValidation, NormalizesAndRejects) {
  NormalizedCluster info;
  auto c = normalize_cluster(cl(0, 2, {{0}, {3, 6}}), &info);
  EXPECT_TRUE(info.changed);
  EXPECT_EQ(c.jet, (std::vector<Poly<QF>>{P({0}), P({1})}));
  normalize_cluster(c, &info);
  EXPECT_FALSE(info.changed);
  EXPECT_THROW(normalize_cluster(cl(0, 2, {{0, 1}, {0}})), std::invalid_argument);
  EXPECT_THROW(make_zscheme<QF>({cl(0, 1, {{1}, {2}}), cl(0, 2, {{2}, {4, 1}})}), std::invalid_argument);
  EXPECT_NO_THROW(make_zscheme<QF>({cl(0, 1, {{1}, {2}}), cl(1, 2, {{2}, {4, 1}})}));
}

TEST(PiDefect, GenericAndFromQuot) {
  auto V = trivial_bundle(kQ, 2);
  EXPECT_EQ(pi_defect(V, make_zscheme<QF>({cl(0, 1, {{1}, {2}}), cl(1, 1, {{1}, {0}}), cl(2, 1, {{1}, {5}})})).value(), 0);
  Rng rng(3);
  auto W = random_bundle(kF101, rng, {-1, -3, 0});
  for (int it = 0; it < 30; ++it) {
    auto tau = random_torsion(W, rng, TorsionShape<PF>{});
    EXPECT_EQ(pi_defect(W, quot_to_hilb(tau)).value(), 0);
  }
}

TEST(PiDefect, RoutesAgreeOnRandomSchemes) {
  Rng rng(11);
  int defective = 0;
  for (int it = 0; it < 120; ++it) {
    const size_t r = 1 + rng.below(3);
    std::vector<int> a;
    for (size_t i = 0; i < r; ++i) a.push_back(static_cast<int>(rng.between(-4, 1)));
    auto V = random_bundle(kF101, rng, a);
    ZShape shape;
    shape.fiber_stack = (it % 3 == 0 && r > 1) ? static_cast<int>(r) + 1 : 0;
    auto Z = random_zscheme(kF101, r, rng, shape);
    auto d = pi_defect(V, Z);
    EXPECT_TRUE(d.consistent()) << d.by_degree << " vs " << d.by_rank;
    EXPECT_GE(d.by_degree, 0);
    if (d.by_degree > 0) ++defective;
    auto az = alpha(V, Z);
    EXPECT_EQ(torsion_degree(az.tauZ), Z.length() - d.by_degree);
    // dropping a cluster enlarges V_Z*
    if (Z.clusters.size() > 1) {
      ZScheme<PF> sub{std::vector<Cluster<PF>>(Z.clusters.begin() + 1, Z.clusters.end())};
      auto as = alpha(V, sub);
      EXPECT_LE(degree(as.VZ), degree(az.VZ));
      EXPECT_GE(pi_defect(V, sub).value(), 0);
      EXPECT_TRUE(column_space_contains(as.q.finite, az.q.finite));
    }
  }
  EXPECT_GT(defective, 10);
}

TEST(Roundtrip, Examples) {
  auto V = trivial_bundle(kQ, 2);
  EXPECT_TRUE(roundtrip_check(V, torsion_module(V, {part(0, 1, {{2}, {1}}), part(3, 1, {{0}, {1}})})));
  EXPECT_TRUE(roundtrip_check(V, torsion_module(V, {part(0, 2, {{1}, {0, 1}})})));
}

TEST(Roundtrip, RandomOverF101) {
  Rng rng(2024);
  for (int it = 0; it < 150; ++it) {
    const size_t r = 1 + rng.below(3);
    std::vector<int> a;
    for (size_t i = 0; i < r; ++i) a.push_back(static_cast<int>(rng.between(-4, 2)));
    auto V = random_bundle(kF101, rng, a);
    auto tau = random_torsion(V, rng, TorsionShape<PF>{});
    EXPECT_TRUE(roundtrip_check(V, tau));
    // Z -> alpha -> quot_to_hilb recovers the quot point, and Z itself when every fiber
    // carries a single length-1 cluster (otherwise the generators are not unique)
    auto Z = quot_to_hilb(tau);
    auto az = alpha(V, Z);
    auto Z2 = quot_to_hilb(az.tauZ);
    EXPECT_TRUE(quot_equal(alpha(V, Z2).q, az.q));
    if (static_cast<int>(Z.base_points().size()) == Z.length()) EXPECT_EQ(Z2, Z);
  }
}

size_t binomial(size_t n, size_t k) {
  size_t b = 1;
  for (size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}
size_t census_formula(size_t q, size_t r, size_t d) {
  size_t dirs = 0, pw = 1;
  for (size_t i = 0; i < r; ++i, pw *= q) dirs += pw;  // (q^r - 1)/(q - 1)
  size_t n = binomial(q + 1, d);
  for (size_t i = 0; i < d; ++i) n *= dirs;
  return n;
}

TEST(Census, SmallFields) {
  for (auto [q, d] : std::vector<std::pair<uint64_t, int>>{{2, 1}, {2, 2}, {3, 2}}) {
    auto rep = enumerate_reduced(q, 2, d);
    EXPECT_EQ(rep.torsion_count, census_formula(q, 2, static_cast<size_t>(d)));
    EXPECT_EQ(rep.scheme_count, rep.torsion_count);
    EXPECT_TRUE(rep.bijection());
  }
  EXPECT_EQ(enumerate_reduced(2, 2, 1).torsion_count, 9u);
  EXPECT_EQ(enumerate_reduced(2, 2, 2).torsion_count, 27u);
  EXPECT_THROW(enumerate_reduced(101, 3, 4), census_budget_exceeded);
  EXPECT_THROW(enumerate_reduced(4, 2, 1), std::invalid_argument);
}

}  // namespace
