#include <gtest/gtest.h>

#include "hecke/exactalg/exactalg.hpp"

namespace {

using namespace hecke;

using QF = RationalField;
using Q = Rational;
using RF = RatFunc<QF>;
using RM = RatMatrix<QF>;

const QF kQ{};
const PrimeField kF5{5};
const PrimeField kF101{101};

Poly<QF> P(std::vector<long> c) {
  std::vector<Q> v;
  for (long x : c) v.emplace_back(x);
  return Poly<QF>(kQ, v);
}
RF T(int n) { return RF::power(kQ, n); }
RF C(long a) { return RF::constant(kQ, Q(a)); }

RM mat2(RF a, RF b, RF c, RF d) {
  RM m(2, 2, RF(kQ));
  m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
  return m;
}

TEST(Poly, DivisionAndGcd) {
  auto a = P({-1, 0, 1}), b = P({1, 1});
  auto [q, r] = a.divmod(b);
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  auto [g, u, v] = xgcd(P({0, 1}), P({1, 1}));
  EXPECT_TRUE(g.is_one());
  EXPECT_EQ(u * P({0, 1}) + v * P({1, 1}), g);
  EXPECT_EQ(Poly<QF>(kQ).degree(), kZeroDegree);
}

TEST(Poly, ShiftMatchesComposition) {
  auto p = P({3, -2, 0, 5});
  auto s = p.shift(Q(2));
  for (long x = -3; x <= 3; ++x) EXPECT_EQ(s.eval(Q(x)), p.eval(Q(x + 2)));
}

TEST(RatFunc, CanonicalFormIsIdempotent) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    auto n = random_poly(kF101, rng, 3), d = random_poly(kF101, rng, 3);
    if (d.is_zero()) continue;
    RatFunc<PrimeField> f(n * d, d * d);
    RatFunc<PrimeField> g(f.num(), f.den());
    EXPECT_EQ(f, g);
    EXPECT_TRUE(f.den().lc().is_one());
    EXPECT_TRUE(gcd(f.num(), f.den()).is_one() || f.num().is_zero());
    EXPECT_EQ(f.invert_variable().invert_variable(), f);
  }
}

TEST(Laurent, SimplePole) {
  auto jet = laurent_expand(RF(P({1}), P({-1, 1})), CurvePoint<QF>::finite(Q(1)), 2);
  EXPECT_EQ(jet.start, -1);
  EXPECT_EQ(jet.coeff(-1), Q(1));
  for (int e = 0; e < 2; ++e) EXPECT_EQ(jet.coeff(e), Q(0));
}

TEST(Laurent, GeometricSeriesTruncation) {
  auto jet = laurent_expand(RF(P({0, 1}), P({1, -1})), CurvePoint<QF>::finite(Q(0)), 3);
  EXPECT_EQ(jet.coeff(0), Q(0));
  EXPECT_EQ(jet.coeff(1), Q(1));
  EXPECT_EQ(jet.coeff(2), Q(1));
  EXPECT_EQ(jet.coeff(3), Q(0));  // beyond precision
}

TEST(Laurent, InfinityUsesReciprocalCoordinate) {
  auto jet = laurent_expand(T(-1), CurvePoint<QF>::infinity(kQ), 3);
  EXPECT_EQ(jet.start, 1);
  EXPECT_EQ(jet.coeff(1), Q(1));
  EXPECT_EQ(jet.coeff(2), Q(0));
}

TEST(Laurent, ProductOfExpansionsIsExpansionOfProduct) {
  Rng rng(5);
  using PF = PrimeField;
  for (int it = 0; it < 40; ++it) {
    auto mk = [&] {
      Poly<PF> n = random_poly(kF101, rng, 3), d = random_poly(kF101, rng, 2);
      while (d.is_zero()) d = random_poly(kF101, rng, 2);
      return RatFunc<PF>(n, d * Poly<PF>::monomial(kF101, kF101.one(), static_cast<int>(rng.below(3))));
    };
    auto f = mk(), g = mk();
    auto x = CurvePoint<PF>::finite(kF101.random(rng));
    auto pf = laurent_expand(f, x, 4), pg = laurent_expand(g, x, 4);
    auto prod = jet_product(pf, pg);
    auto direct = laurent_expand(f * g, x, prod.precision);
    for (int e = prod.start; e < prod.precision; ++e) EXPECT_EQ(prod.coeff(e), direct.coeff(e));
  }
}

TEST(KernelRank, Identity) {
  auto kr = kernel_rank(Matrix<Q>::identity(3, Q(0)));
  EXPECT_EQ(kr.rank, 3u);
  EXPECT_EQ(kr.kernel.cols(), 0u);
}

TEST(KernelRank, ProportionalRows) {
  Matrix<Q> m(2, 2, Q(0));
  m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 4;
  auto kr = kernel_rank(m);
  EXPECT_EQ(kr.rank, 1u);
  ASSERT_EQ(kr.kernel.cols(), 1u);
  // proportional to (2, -1)
  EXPECT_EQ(kr.kernel(0, 0) * Q(-1), kr.kernel(1, 0) * Q(2));
  auto image = m * kr.kernel;
  EXPECT_TRUE(image(0, 0).is_zero() && image(1, 0).is_zero());
}

TEST(KernelRank, RankIsTransposeInvariant) {
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    auto m = random_matrix<Fp>(r, c, kF5, rng);
    auto kr = kernel_rank(m);
    EXPECT_EQ(kr.rank, rank(m.transpose()));
    EXPECT_EQ(kr.rank + kr.kernel.cols(), c);
    auto z = m * kr.kernel;
    for (size_t i = 0; i < z.rows(); ++i)
      for (size_t j = 0; j < z.cols(); ++j) EXPECT_TRUE(z(i, j).is_zero());
  }
}

TEST(Hermite, CanonicalInputIsFixed) {
  auto m = mat2(T(2), C(0), C(0), C(1));
  auto h = hermite_normal_form(m);
  EXPECT_EQ(h.H, m);
  EXPECT_EQ(h.U, RM::identity(2, RF(kQ)));
}

// Lattice membership: v lies in the lattice of H iff H^{-1} v is polynomial.
bool contains(const RM& H, const RM& gens) { return is_polynomial(inverse(H) * gens); }

TEST(Hermite, TwoColumnExample) {
  auto m = mat2(T(1), C(1), T(1), C(0));
  auto h = hermite_normal_form(m);
  EXPECT_EQ(h.H, mat2(C(1), C(0), C(0), T(1)));
  EXPECT_TRUE(contains(h.H, m));
  EXPECT_TRUE(contains(m, h.H));
  EXPECT_EQ(m * h.U, h.H);
}

TEST(Hermite, UnimodularGivesIdentity) {
  Rng rng(8);
  for (int it = 0; it < 20; ++it) {
    auto u = random_unimodular(kQ, rng, 3, 6, 2);
    EXPECT_EQ(hermite_normal_form(u).H, RM::identity(3, RF(kQ)));
  }
}

TEST(Hermite, SingularInputIsRejected) {
  EXPECT_THROW(hermite_normal_form(mat2(T(1), T(2), C(1), T(1))), degenerate_lattice);
}

TEST(Hermite, IdempotentAndBasisIndependent) {
  Rng rng(21);
  using PF = PrimeField;
  for (int it = 0; it < 60; ++it) {
    size_t r = 1 + rng.below(3);
    RatMatrix<PF> m(r, r, RatFunc<PF>(kF5));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) m(i, j) = RatFunc<PF>(random_poly(kF5, rng, 2));
    if (determinant(m).is_zero()) continue;
    auto h = hermite_normal_form(m);
    EXPECT_EQ(m * h.U, h.H);
    EXPECT_EQ(hermite_normal_form(h.H).H, h.H);
    auto v = random_unimodular(kF5, rng, r, 5, 1);
    EXPECT_EQ(hermite_normal_form(m * v).H, h.H);
    for (size_t j = 0; j < r; ++j) {
      EXPECT_TRUE(h.H(j, j).num().lc().is_one());
      for (size_t i = 0; i < j; ++i) EXPECT_LT(h.H(i, j).num().degree(), h.H(i, i).num().degree());
      for (size_t i = j + 1; i < r; ++i) EXPECT_TRUE(h.H(i, j).is_zero());
    }
  }
}

TEST(Hermite, LocalFormAtInfinityIsBasisIndependent) {
  Rng rng(4);
  using PF = PrimeField;
  for (int it = 0; it < 40; ++it) {
    size_t r = 1 + rng.below(3);
    RatMatrix<PF> m(r, r, RatFunc<PF>(kF5));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        m(i, j) = RatFunc<PF>(random_poly(kF5, rng, 2)) * RatFunc<PF>::power(kF5, -static_cast<int>(rng.below(3)));
    if (determinant(m).is_zero()) continue;
    auto h = lattice_canonical_at_infinity(m);
    auto w = random_unimodular_at_infinity(kF5, rng, r, 5, 1);
    EXPECT_EQ(lattice_canonical_at_infinity(m * w), h);
    EXPECT_EQ(lattice_canonical_at_infinity(h), h);
  }
}

TEST(Birkhoff, DiagonalInput) {
  auto b = birkhoff_factorize(mat2(T(2), C(0), C(0), T(-1)));
  EXPECT_EQ(b.exponents, (std::vector<int>{2, -1}));
  EXPECT_EQ(b.U, RM::identity(2, RF(kQ)));
  EXPECT_EQ(b.W, RM::identity(2, RF(kQ)));
}

TEST(Birkhoff, AlreadyUnimodularAtInfinity) {
  auto g = mat2(C(1), T(-1), C(0), C(1));
  auto b = birkhoff_factorize(g);
  EXPECT_EQ(b.exponents, (std::vector<int>{0, 0}));
  EXPECT_EQ(b.U, RM::identity(2, RF(kQ)));
  EXPECT_EQ(b.W, g);
}

// W must be a polynomial matrix in s = 1/t with constant nonzero determinant.
template <class F>
bool unimodular_in_s(const RatMatrix<F>& w) {
  auto ws = invert_variable(w);
  if (!is_polynomial(ws)) return false;
  auto d = determinant(ws);
  return !d.is_zero() && d.is_poly() && d.num().degree() == 0;
}

TEST(Birkhoff, RecoversConstructedExponents) {
  Rng rng(99);
  using PF = PrimeField;
  for (int it = 0; it < 60; ++it) {
    size_t r = 1 + rng.below(3);
    std::vector<int> a;
    std::vector<RatFunc<PF>> diag;
    for (size_t i = 0; i < r; ++i) a.push_back(static_cast<int>(rng.between(-4, 4)));
    for (int x : a) diag.push_back(RatFunc<PF>::power(kF101, x));
    auto u0 = random_unimodular(kF101, rng, r, 4, 2);
    auto w0 = random_unimodular_at_infinity(kF101, rng, r, 4, 2);
    auto g = u0 * RatMatrix<PF>::diagonal(diag) * w0;
    auto b = birkhoff_factorize(g);
    std::sort(a.rbegin(), a.rend());
    EXPECT_EQ(b.exponents, a);
    std::vector<RatFunc<PF>> d2;
    for (int x : b.exponents) d2.push_back(RatFunc<PF>::power(kF101, x));
    EXPECT_EQ(b.U * RatMatrix<PF>::diagonal(d2) * b.W, g);
    EXPECT_TRUE(is_polynomial(b.U));
    EXPECT_TRUE(unimodular_in_s(b.W));
    // exponents are invariant under further unimodular twists on either side
    auto g2 = random_unimodular(kF101, rng, r, 3, 1) * g * random_unimodular_at_infinity(kF101, rng, r, 3, 1);
    EXPECT_EQ(birkhoff_factorize(g2).exponents, a);
  }
}

}  // namespace
