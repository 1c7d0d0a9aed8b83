#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hecke/spans/spans.hpp"

namespace hecke {

/// A linear subspace of H^0(E), given by independent global sections (ambient coordinates).
template <class F>
struct SectionSubspace {
  Bundle<F> E;
  std::vector<RatVector<F>> basis;
  size_t dim() const { return basis.size(); }
};

template <class F>
SectionSubspace<F> make_section_subspace(const Bundle<F>& E, std::vector<RatVector<F>> basis) {
  const Cohomology<F> c = cohomology(E);
  Matrix<typename F::Element> m(c.h0(), basis.size(), E.field.zero());
  for (size_t j = 0; j < basis.size(); ++j) m.set_col(j, section_coords(c, basis[j]));
  if (rank(m) != basis.size()) throw std::invalid_argument("sections are not independent");
  return {E, std::move(basis)};
}

/// Combination sum coeffs[i] * sections[i].
template <class F>
RatVector<F> combine_sections(const F& f, const std::vector<RatVector<F>>& sections,
                              const std::vector<typename F::Element>& coeffs) {
  RatVector<F> v(sections.front().size(), RatFunc<F>(f));
  for (size_t i = 0; i < sections.size(); ++i)
    if (!coeffs[i].is_zero())
      for (size_t k = 0; k < v.size(); ++k) v[k] += sections[i][k] * RatFunc<F>::constant(f, coeffs[i]);
  return v;
}

/// m random combinations of the H^0(E) basis (resampled until independent).
template <class F>
SectionSubspace<F> random_section_subspace(const Bundle<F>& E, size_t m, Rng& rng) {
  const Cohomology<F> c = cohomology(E);
  if (m > c.h0()) throw std::invalid_argument("subspace dimension exceeds h0");
  while (true) {
    std::vector<RatVector<F>> basis;
    for (size_t j = 0; j < m; ++j) {
      std::vector<typename F::Element> a;
      for (size_t i = 0; i < c.h0(); ++i) a.push_back(E.field.random(rng));
      basis.push_back(combine_sections(E.field, c.sections, a));
    }
    try {
      return make_section_subspace(E, std::move(basis));
    } catch (const std::invalid_argument&) {
    }
  }
}

/// All subspaces spanned by m vectors of the fixed H^0(E) basis.
template <class F>
std::vector<SectionSubspace<F>> coordinate_subspaces(const Bundle<F>& E, size_t m) {
  const Cohomology<F> c = cohomology(E);
  std::vector<SectionSubspace<F>> out;
  const size_t n = c.h0();
  if (m > n) return out;
  std::vector<size_t> idx(m);
  for (size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    std::vector<RatVector<F>> basis;
    for (size_t i : idx) basis.push_back(c.sections[i]);
    out.push_back({E, std::move(basis)});
    size_t i = m;
    while (i-- > 0 && idx[i] == n - m + i) {
    }
    if (i == static_cast<size_t>(-1)) break;
    ++idx[i];
    for (size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Petri map and the restricted cup product

/// mu: Lambda (x) H^0(K E*) -> H^0(K (x) End E). End E is identified with its dual by the
/// trace, so products s (x) eta land in K (x) E (x) E* with index a * r + b (a the E index).
template <class F>
struct PetriData {
  size_t domain = 0;
  size_t codomain = 0;
  Matrix<typename F::Element> mu;  // codomain x domain, column m * h0(K E*) + l
  size_t rank = 0;
  bool injective() const { return rank == domain; }
};

template <class F>
Bundle<F> petri_target(const Bundle<F>& E) {
  return canonical_twist(dual(end_bundle(E)));
}

template <class F>
PetriData<F> petri_rank(const Bundle<F>& E, const std::optional<SectionSubspace<F>>& lambda = std::nullopt) {
  const Cohomology<F> cE = cohomology(E);
  const Cohomology<F> cK = cohomology(canonical_twist(dual(E)));
  const Cohomology<F> cT = cohomology(petri_target(E));
  const std::vector<RatVector<F>>& secs = lambda ? lambda->basis : cE.sections;
  PetriData<F> d{secs.size() * cK.h0(), cT.h0(), Matrix<typename F::Element>(cT.h0(), secs.size() * cK.h0(), E.field.zero()), 0};
  for (size_t m = 0; m < secs.size(); ++m)
    for (size_t l = 0; l < cK.h0(); ++l)
      d.mu.set_col(m * cK.h0() + l, section_coords(cT, kronecker(secs[m], cK.sections[l])));
  d.rank = rank(d.mu);
  return d;
}

struct PetriInjectivity {
  size_t sampled = 0;
  size_t coordinate = 0;
  size_t injective = 0;
  bool all() const { return injective == sampled + coordinate; }
};

/// Petri m-injectivity probed on N random subspaces and all coordinate subspaces.
template <class F>
PetriInjectivity petri_m_injectivity(const Bundle<F>& E, size_t m, size_t samples, Rng& rng) {
  PetriInjectivity rep;
  for (const auto& L : coordinate_subspaces(E, m)) {
    ++rep.coordinate;
    if (petri_rank(E, std::optional<SectionSubspace<F>>(L)).injective()) ++rep.injective;
  }
  for (size_t i = 0; i < samples; ++i) {
    ++rep.sampled;
    if (petri_rank(E, std::optional<SectionSubspace<F>>(random_section_subspace(E, m, rng))).injective())
      ++rep.injective;
  }
  return rep;
}

/// H^1(End E) -> Hom(Lambda, H^1(E)): row m * h1(E) + i, column k of the H^1(End E) basis.
template <class F>
Matrix<typename F::Element> restricted_cup(const Bundle<F>& E, const SectionSubspace<F>& lambda) {
  const size_t r = E.rank();
  const Cohomology<F> cE = cohomology(E);
  const Cohomology<F> cEnd = cohomology(end_bundle(E));
  Matrix<typename F::Element> C(lambda.dim() * cE.h1(), cEnd.h1(), E.field.zero());
  for (size_t k = 0; k < cEnd.h1(); ++k) {
    const RatVector<F> phi = cEnd.h1_representative(k);
    for (size_t m = 0; m < lambda.dim(); ++m) {
      const RatVector<F>& s = lambda.basis[m];
      RatVector<F> v(r, RatFunc<F>(E.field));
      for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b)
          if (!phi[a * r + b].is_zero() && !s[a].is_zero()) v[b] += phi[a * r + b] * s[a];
      const auto cls = h1_class(cE, v);
      for (size_t i = 0; i < cE.h1(); ++i) C(m * cE.h1() + i, k) = cls[i];
    }
  }
  return C;
}

/// Serre duality: <cup(xi, s), eta>_E = <xi, mu(s (x) eta)>_{End E} for all basis elements.
template <class F>
bool cup_petri_duality_check(const Bundle<F>& E, const SectionSubspace<F>& lambda) {
  const Cohomology<F> cE = cohomology(E), cK = cohomology(canonical_twist(dual(E)));
  const Cohomology<F> cEnd = cohomology(end_bundle(E)), cT = cohomology(petri_target(E));
  const auto C = restricted_cup(E, lambda);
  const auto PE = serre_pairing(cE, cK), PEnd = serre_pairing(cEnd, cT);
  const auto mu = petri_rank(E, std::optional<SectionSubspace<F>>(lambda)).mu;
  const size_t h1E = cE.h1();
  for (size_t m = 0; m < lambda.dim(); ++m)
    for (size_t l = 0; l < cK.h0(); ++l)
      for (size_t k = 0; k < cEnd.h1(); ++k) {
        auto lhs = E.field.zero(), rhs = E.field.zero();
        for (size_t i = 0; i < h1E; ++i) lhs += C(m * h1E + i, k) * PE(i, l);
        for (size_t j = 0; j < cT.h0(); ++j) rhs += PEnd(k, j) * mu(j, m * cK.h0() + l);
        if (!(lhs == rhs)) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// The subscheme Z_Lambda of PE*

template <class F>
struct ZLambda {
  TorsionModule<F> tau;  // over E*
  ZScheme<F> Z;
  Poly<F> det;           // determinant of the evaluation matrix in the finite chart frame
  int order_at_infinity = 0;
  bool reduced = false;  // Lambda in U_1
};

class nonsplit_determinant : public std::domain_error {
 public:
  nonsplit_determinant() : std::domain_error("determinant does not split over the base field") {}
};

/// tau_Lambda = coker(E* -> O (x) Lambda*), read off from the inverse transposed evaluation
/// matrix at the zeros of its determinant.
template <class F>
ZLambda<F> zlambda(const Bundle<F>& E, const SectionSubspace<F>& lambda) {
  const size_t r = E.rank();
  if (lambda.dim() != r) throw std::invalid_argument("Lambda must have dimension rk E");
  const RatMatrix<F> S = RatMatrix<F>::from_columns(lambda.basis, r, RatFunc<F>(E.field));
  const RatMatrix<F> S0 = inverse(E.A0) * S;
  const RatFunc<F> det0 = determinant(S0);
  if (det0.is_zero()) throw std::domain_error("evaluation generically degenerate");
  const RatMatrix<F> Sinf = inverse(E.Ainf) * S;
  const RatFunc<F> detinf = determinant(Sinf);
  const Bundle<F> V = dual(E);
  ZLambda<F> out{TorsionModule<F>{V, {}}, {}, det0.num() * det0.den().lc().inverse(), 0, true};
  const auto roots = rational_roots(out.det);
  if (!splits(out.det, roots)) throw nonsplit_determinant();
  const RatMatrix<F> M0 = inverse(S0).transpose();
  for (const auto& [a, m] : roots) {
    if (m > 1) out.reduced = false;
    for (const auto& p : column_parts(M0, CurvePoint<F>::finite(a))) out.tau.add(p);
  }
  out.order_at_infinity = order_at(detinf, CurvePoint<F>::infinity(E.field));
  if (out.order_at_infinity > 0) {
    if (out.order_at_infinity > 1) out.reduced = false;
    for (const auto& p : column_parts(inverse(Sinf).transpose(), CurvePoint<F>::infinity(E.field))) out.tau.add(p);
  }
  out.Z = quot_to_hilb(out.tau);
  return out;
}

// ---------------------------------------------------------------------------
// Kernel / span identities

/// Kernel of H^1(V (x) F) -> H^1(V_Z (x) F) as a subspace.
template <class F>
H1Subspace<F> restriction_kernel(const Bundle<F>& V, const Bundle<F>& Fb, const ZScheme<F>& Z) {
  const Cohomology<F> c = cohomology(tensor(V, Fb));
  const Cohomology<F> cz = cohomology(tensor(alpha(V, Z).VZ, Fb));
  Matrix<typename F::Element> M(cz.h1(), c.h1(), V.field.zero());
  for (size_t k = 0; k < c.h1(); ++k) M.set_col(k, h1_class(cz, c.h1_representative(k)));
  return {c.h1(), column_space_canonical(kernel(M))};
}

template <class F>
struct BnSpanReport {
  H1Subspace<F> cup_kernel;
  H1Subspace<F> restriction;  // kernel of H^1(End E) -> H^1(V_Z (x) E)
  SpanResult<F> rel;
  bool holds() const {
    return rel.routes_agree() && cup_kernel == rel.span() && restriction == rel.span();
  }
};

/// P Ker(restricted cup) = Span(Z_Lambda x_X PE) inside PH^1(End E).
template <class F>
BnSpanReport<F> bn_span_identity_check(const Bundle<F>& E, const SectionSubspace<F>& lambda) {
  const ZLambda<F> zl = zlambda(E, lambda);
  const Bundle<F> V = dual(E);
  auto rel = rel_span(V, E, zl.Z);
  const auto C = restricted_cup(E, lambda);
  H1Subspace<F> ker{rel.by_evaluation.ambient, column_space_canonical(kernel(C))};
  return {std::move(ker), restriction_kernel(V, E, zl.Z), std::move(rel)};
}

/// The same identity for an arbitrary (V, F, Z): kernel of restriction equals the relative span.
template <class F>
bool kernel_span_identity_check(const Bundle<F>& V, const Bundle<F>& Fb, const ZScheme<F>& Z) {
  const auto rel = rel_span(V, Fb, Z);
  return rel.routes_agree() && restriction_kernel(V, Fb, Z) == rel.span();
}

struct GenRksReport {
  int defect = 0;          // relative defect of Z_Lambda x_X PE
  int expected = 0;        // r h^0(E) - h^0(End E)
  int literal = 0;         // k r - 1 with k = h^0(E); valid only for simple E
  bool simple = false;     // h^0(End E) = 1
  bool holds() const { return defect == expected; }
};

template <class F>
GenRksReport genrks_defect_check(const Bundle<F>& E, const SectionSubspace<F>& lambda) {
  const ZLambda<F> zl = zlambda(E, lambda);
  GenRksReport rep;
  rep.defect = rel_span(dual(E), E, zl.Z).defect();
  const int r = static_cast<int>(E.rank());
  const int h0E = static_cast<int>(cohomology(E).h0());
  const int h0End = static_cast<int>(cohomology(end_bundle(E)).h0());
  rep.expected = r * h0E - h0End;
  rep.literal = h0E * r - 1;
  rep.simple = h0End == 1;
  return rep;
}

// ---------------------------------------------------------------------------
// Secants

namespace detail {

template <class F>
bool same_direction(const std::vector<typename F::Element>& a, const std::vector<typename F::Element>& b) {
  Matrix<typename F::Element> m(a.size(), 2, a.front() - a.front());
  for (size_t i = 0; i < a.size(); ++i) {
    m(i, 0) = a[i];
    m(i, 1) = b[i];
  }
  return rank(m) == 1;
}

}  // namespace detail

/// span{psi_delta(points)} is contained in the relative span of Z.
template <class F>
bool secant_membership(const Bundle<F>& V, const Bundle<F>& Fb, const std::vector<DeltaPoint<F>>& points,
                       const ZScheme<F>& Z) {
  for (const auto& d : points) {
    bool found = false;
    for (const auto& c : Z.clusters)
      if (c.x == d.x && detail::same_direction<F>(c.value(), d.v)) found = true;
    if (!found) throw std::invalid_argument("point not supported on Z");
  }
  const auto s = rel_span(V, Fb, Z).span();
  std::vector<std::vector<typename F::Element>> vs;
  for (const auto& d : points) vs.push_back(psi_delta(V, Fb, d));
  return s.contains(subspace_of(V.field, s.ambient, vs));
}

/// Directions nu_i in the fiber of E* at x_i (chart frame of E*).
template <class F>
struct FiberDirection {
  CurvePoint<F> x;
  std::vector<typename F::Element> nu;
};

/// Sections s of E with <s(x_i), nu_i> = 0 for every i, as combinations of the H^0(E) basis.
template <class F>
std::vector<RatVector<F>> sections_through(const Bundle<F>& E, const std::vector<FiberDirection<F>>& dirs) {
  const Cohomology<F> c = cohomology(E);
  const F& f = E.field;
  Matrix<typename F::Element> A(dirs.size(), c.h0(), f.zero());
  for (size_t i = 0; i < dirs.size(); ++i) {
    const auto& x = dirs[i].x;
    const RatMatrix<F> frame_inv = inverse(x.at_infinity ? E.Ainf : E.A0);
    for (size_t l = 0; l < c.h0(); ++l) {
      const RatVector<F> sh = frame_inv * c.sections[l];
      auto acc = f.zero();
      for (size_t k = 0; k < sh.size(); ++k) {
        const RatFunc<F> loc = to_local(sh[k], x);
        if (!loc.is_zero()) acc += dirs[i].nu[k] * taylor(loc, 1).coeff(0);
      }
      A(i, l) = acc;
    }
  }
  const auto ker = kernel(A);
  std::vector<RatVector<F>> out;
  for (size_t j = 0; j < ker.cols(); ++j) out.push_back(combine_sections(f, c.sections, ker.col(j)));
  return out;
}

/// A Lambda in U whose Z_Lambda passes through every (x_i, nu_i), searched by random
/// combinations of the solution space.
template <class F>
std::optional<SectionSubspace<F>> find_lambda_through(const Bundle<F>& E, const std::vector<FiberDirection<F>>& dirs,
                                                      Rng& rng, int tries = 50) {
  const auto sols = sections_through(E, dirs);
  const size_t r = E.rank();
  if (sols.size() < r) return std::nullopt;
  for (int t = 0; t < tries; ++t) {
    std::vector<RatVector<F>> basis;
    for (size_t j = 0; j < r; ++j) {
      std::vector<typename F::Element> a;
      for (size_t i = 0; i < sols.size(); ++i) a.push_back(E.field.random(rng));
      basis.push_back(combine_sections(E.field, sols, a));
    }
    try {
      SectionSubspace<F> L = make_section_subspace(E, std::move(basis));
      const ZLambda<F> zl = zlambda(E, L);
      bool ok = true;
      for (const auto& d : dirs) {
        bool found = false;
        for (const auto& c : zl.Z.clusters)
          if (c.x == d.x && detail::same_direction<F>(c.value(), d.nu)) found = true;
        ok = ok && found;
      }
      if (ok) return L;
    } catch (const std::domain_error&) {
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Test bundles as elementary transformations of split bundles

template <class F>
struct MerindolReport {
  Bundle<F> E;
  size_t h0 = 0;
  std::vector<int> exponents;
  bool generically_generated = false;
};

/// Rank of the evaluation matrix of H^0(E) over k(t).
template <class F>
size_t generic_evaluation_rank(const Bundle<F>& E) {
  const Cohomology<F> c = cohomology(E);
  if (c.h0() == 0) return 0;
  return rank(RatMatrix<F>::from_columns(c.sections, E.rank(), RatFunc<F>(E.field)));
}

/// E = Vtilde for a random reduced torsion module of degree f over the split bundle.
template <class F>
MerindolReport<F> merindol_construct(const F& fld, const std::vector<int>& degrees, int f, Rng& rng) {
  const Bundle<F> base = split_bundle(fld, degrees);
  Bundle<F> E = base;
  if (f > 0) {
    std::vector<CurvePoint<F>> pts;
    while (static_cast<int>(pts.size()) < f) {
      const auto x = CurvePoint<F>::finite(fld.random(rng));
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    TorsionModule<F> tau{base, {}};
    for (const auto& x : pts) {
      std::vector<Poly<F>> v;
      do {
        v.clear();
        for (size_t i = 0; i < degrees.size(); ++i) v.push_back(Poly<F>::constant(fld, fld.random(rng)));
      } while (std::all_of(v.begin(), v.end(), [](const Poly<F>& p) { return p.is_zero(); }));
      tau.add(make_part(x, 1, v));
    }
    E = vtilde_from_tau(base, tau).Vtilde;
  }
  MerindolReport<F> rep{E, 0, {}, false};
  const Cohomology<F> c = cohomology(E);
  rep.h0 = c.h0();
  rep.exponents = c.split.exponents;
  rep.generically_generated = generic_evaluation_rank(E) == E.rank();
  return rep;
}

}  // namespace hecke
