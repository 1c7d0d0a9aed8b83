#include <gtest/gtest.h>

#include "hecke/spans/spans.hpp"

namespace {

using namespace hecke;

using QF = RationalField;
using PF = PrimeField;
using Q = Rational;

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

TEST(SpanOf, LineBundleTwoPoints) {
  auto V = split_bundle(kQ, {-3});
  auto s = span_of(V, make_zscheme<QF>({cl(0, 1, {{1}}), cl(2, 1, {{1}})}));
  EXPECT_TRUE(s.routes_agree());
  EXPECT_EQ(s.span().projective_dim(), 1);
  EXPECT_EQ(s.defect(), 0);
}

TEST(SpanOf, TwoPointsInOneFiberSpanTheFiber) {
  auto V = split_bundle(kQ, {-3, -3});
  auto s = span_of(V, make_zscheme<QF>({cl(1, 1, {{1}, {2}}), cl(1, 1, {{1}, {-1}})}));
  auto fiber = span_of(V, make_zscheme<QF>({cl(1, 1, {{1}, {0}}), cl(1, 1, {{0}, {1}})}));
  EXPECT_TRUE(s.routes_agree());
  EXPECT_EQ(s.span(), fiber.span());
  EXPECT_EQ(s.span().dim(), 2u);
}

TEST(SpanOf, EmptySchemeAndEmptyAmbient) {
  auto V = split_bundle(kQ, {-4});
  auto s = span_of(V, ZScheme<QF>{});
  EXPECT_EQ(s.span().projective_dim(), -1);
  EXPECT_EQ(s.defect(), 0);
  EXPECT_THROW(span_of(trivial_bundle(kQ, 2), make_zscheme<QF>({cl(0, 1, {{1}, {0}})})), empty_ambient);
}

TEST(SpanOf, LengthTwoClusterAtInfinity) {
  auto V = split_bundle(kQ, {-4, -2});
  Cluster<QF> c{CurvePoint<QF>::infinity(kQ), 2, {P({1, 3}), P({2, 1})}};
  auto s = span_of(V, make_zscheme<QF>({c, cl(0, 1, {{1}, {1}})}));
  EXPECT_TRUE(s.routes_agree());
  EXPECT_EQ(s.span().dim(), 3u);
}

TEST(Ggrr, Examples) {
  auto V = split_bundle(kQ, {-3});
  auto tau = torsion_module(V, {part(0, 1, {{1}}), part(1, 1, {{1}}), part(2, 1, {{1}})});
  auto rep = ggrr_check(V, tau);
  EXPECT_EQ(rep.lhs, 1);
  EXPECT_EQ(rep.rhs, 1);
  auto W = split_bundle(kQ, {-2, -2});
  auto rep2 = ggrr_check(W, torsion_module(W, {part(0, 1, {{1}, {0}}), part(0, 1, {{0}, {1}})}));
  EXPECT_TRUE(rep2.holds());
  EXPECT_EQ(rep2.lhs, 0);
  EXPECT_THROW(ggrr_check(trivial_bundle(kQ, 2), torsion_module(trivial_bundle(kQ, 2), {part(0, 1, {{1}, {0}})})),
               empty_ambient);
}

template <class F>
Bundle<F> random_negative_bundle(const F& f, Rng& rng, size_t rmax, int lo, int hi) {
  const size_t r = 1 + rng.below(rmax);
  std::vector<int> a;
  for (size_t i = 0; i < r; ++i) a.push_back(static_cast<int>(rng.between(lo, hi)));
  return random_bundle(f, rng, a);
}

TEST(Ggrr, RandomInstances) {
  Rng rng(77);
  for (int it = 0; it < 60; ++it) {
    auto V = random_negative_bundle(kF101, rng, 3, -6, -1);
    if (cohomology(V).h1() == 0) continue;
    auto tau = random_torsion(V, rng, TorsionShape<PF>{});
    auto rep = ggrr_check(V, tau);
    EXPECT_TRUE(rep.holds()) << rep.lhs << " vs " << rep.rhs;
    // dim Span + 1 = h1(V) - h1(V_Z)
    auto Z = quot_to_hilb(tau);
    auto s = span_of(V, Z);
    EXPECT_EQ(s.span().dim(), cohomology(V).h1() - cohomology(alpha(V, Z).VZ).h1());
  }
}

TEST(SpanOf, RoutesAgreeIncludingDefective) {
  Rng rng(78);
  for (int it = 0; it < 60; ++it) {
    auto V = random_negative_bundle(kF101, rng, 3, -5, -1);
    if (cohomology(V).h1() == 0) continue;
    ZShape shape;
    shape.fiber_stack = (V.rank() > 1 && it % 2) ? static_cast<int>(V.rank()) + 1 : 0;
    auto Z = random_zscheme(kF101, V.rank(), rng, shape);
    auto s = span_of(V, Z);
    EXPECT_TRUE(s.routes_agree());
    EXPECT_GE(s.defect(), 0);
    // monotone under dropping a cluster
    if (Z.clusters.size() > 1) {
      ZScheme<PF> sub{std::vector<Cluster<PF>>(Z.clusters.begin() + 1, Z.clusters.end())};
      EXPECT_TRUE(s.span().contains(span_of(V, sub).span()));
    }
  }
}

TEST(SameSpan, FramePermutedFullFiber) {
  auto V = split_bundle(kQ, {-3, -2});
  auto Z1 = make_zscheme<QF>({cl(2, 1, {{1}, {0}}), cl(2, 1, {{0}, {1}})});
  auto Z2 = make_zscheme<QF>({cl(2, 1, {{1}, {1}}), cl(2, 1, {{1}, {-1}})});
  EXPECT_FALSE(Z1 == Z2);
  EXPECT_TRUE(same_span_check(V, Z1, Z2));
  EXPECT_TRUE(same_span_check(V, Z1, Z1));
  auto Z3 = make_zscheme<QF>({cl(2, 1, {{1}, {1}})});
  EXPECT_THROW(same_span_check(V, Z1, Z3), std::invalid_argument);
}

TEST(SameSpan, GeneratorOrderPermutations) {
  Rng rng(79);
  for (int it = 0; it < 40; ++it) {
    auto V = random_negative_bundle(kF101, rng, 3, -5, -2);
    auto tau = random_torsion(V, rng, TorsionShape<PF>{});
    TorsionModule<PF> shuffled{V, tau.parts};
    for (auto& [x, gens] : shuffled.parts) {
      std::reverse(gens.begin(), gens.end());
      // add a redundant generator: a combination of the existing ones
      if (gens.size() > 1) {
        const auto& a = gens[0].order >= gens[1].order ? gens[0] : gens[1];
        const auto& b = gens[0].order >= gens[1].order ? gens[1] : gens[0];
        auto g = a;  // a + 3 b
        for (size_t i = 0; i < g.numer.size(); ++i)
          g.numer[i] += b.numer[i].shifted(a.order - b.order) * kF101.from_int(3);
        gens.push_back(canonical_part(g));
      }
    }
    auto Z1 = quot_to_hilb(tau), Z2 = quot_to_hilb(shuffled);
    EXPECT_TRUE(same_span_check(V, Z1, Z2));
  }
}

TEST(RelSpan, TrivialLineReducesToSpan) {
  Rng rng(80);
  for (int it = 0; it < 15; ++it) {
    auto V = random_negative_bundle(kF101, rng, 2, -5, -2);
    auto Z = random_zscheme(kF101, V.rank(), rng, ZShape{});
    auto a = span_of(V, Z), b = rel_span(V, trivial_bundle(kF101, 1), Z);
    EXPECT_TRUE(b.routes_agree());
    EXPECT_EQ(a.span(), b.span());
    EXPECT_EQ(a.defect(), b.defect());
  }
}

TEST(RelSpan, ProperSubspace) {
  auto V = split_bundle(kQ, {-6, -4});
  auto Fb = split_bundle(kQ, {0, 1});
  auto Z = make_zscheme<QF>({cl(0, 1, {{1}, {2}}), cl(3, 1, {{1}, {-1}})});
  auto s = rel_span(V, Fb, Z);
  EXPECT_TRUE(s.routes_agree());
  EXPECT_EQ(s.span().ambient, 14u);
  EXPECT_LT(s.span().dim(), 14u);
  EXPECT_EQ(s.span().dim(), 4u);
}

TEST(RelGgrr, RandomInstances) {
  Rng rng(81);
  for (int it = 0; it < 40; ++it) {
    auto V = random_negative_bundle(kF101, rng, 2, -6, -1);
    auto Fb = random_negative_bundle(kF101, rng, 2, -1, 2);
    if (cohomology(tensor(V, Fb)).h1() == 0) continue;
    auto tau = random_torsion(V, rng, TorsionShape<PF>{});
    auto rep = relggrr_check(V, Fb, tau);
    EXPECT_TRUE(rep.holds()) << rep.lhs << " vs " << rep.rhs;
    auto one = trivial_bundle(kF101, 1);
    if (cohomology(V).h1() > 0) EXPECT_EQ(relggrr_check(V, one, tau).holds(), ggrr_check(V, tau).holds());
  }
}

TEST(Psi, Examples) {
  auto V = split_bundle(kQ, {-2});
  auto a = psi_point(V, cl(0, 1, {{1}})), b = psi_point(V, cl(5, 1, {{1}}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_FALSE(a[0].is_zero());
  EXPECT_FALSE(b[0].is_zero());
  // four fiber directions over two points span P^3
  auto W = split_bundle(kQ, {-3, -3});
  Matrix<Q> m(4, 0, Q(0));
  for (auto c : {cl(0, 1, {{1}, {0}}), cl(0, 1, {{0}, {1}}), cl(1, 1, {{1}, {0}}), cl(1, 1, {{1}, {1}})}) {
    auto v = psi_point(W, c);
    Matrix<Q> col(4, 1, Q(0));
    for (size_t i = 0; i < 4; ++i) col(i, 0) = v[i];
    m = m.hstack(col);
  }
  EXPECT_EQ(rank(m), 4u);
  // psi_delta with F trivial is psi_point
  DeltaPoint<QF> d{pt(1), {Q(1), Q(1)}, {Q(1)}};
  EXPECT_EQ(psi_delta(W, trivial_bundle(kQ, 1), d), psi_point(W, cl(1, 1, {{1}, {1}})));
}

TEST(Psi, DeltaPointsLieInRelSpan) {
  auto V = split_bundle(kQ, {-6, -4});
  auto Fb = split_bundle(kQ, {0, 1});
  auto Z = make_zscheme<QF>({cl(0, 1, {{1}, {2}}), cl(3, 1, {{1}, {-1}})});
  auto s = rel_span(V, Fb, Z).span();
  std::vector<std::vector<Q>> pts;
  pts.push_back(psi_delta(V, Fb, DeltaPoint<QF>{pt(0), {Q(1), Q(2)}, {Q(3), Q(1)}}));
  pts.push_back(psi_delta(V, Fb, DeltaPoint<QF>{pt(3), {Q(1), Q(-1)}, {Q(1), Q(-7)}}));
  EXPECT_TRUE(s.contains(subspace_of(kQ, s.ambient, pts)));
  // a point over a different branch is not in the span
  auto off = psi_delta(V, Fb, DeltaPoint<QF>{pt(0), {Q(0), Q(1)}, {Q(1), Q(0)}});
  EXPECT_FALSE(s.contains(subspace_of(kQ, s.ambient, {off})));
}

}  // namespace
