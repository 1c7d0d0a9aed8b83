#pragma once

#include <stdexcept>
#include <vector>

#include "hecke/hilbquot/hilbquot.hpp"

namespace hecke {

/// Linear subspace of H^1(W) in the split-model coordinates of W, stored as a canonical basis.
template <class F>
struct H1Subspace {
  size_t ambient = 0;
  Matrix<typename F::Element> basis;  // ambient x dim

  size_t dim() const { return basis.cols(); }
  int projective_dim() const { return static_cast<int>(dim()) - 1; }
  friend bool operator==(const H1Subspace& a, const H1Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
  bool contains(const H1Subspace& o) const { return column_space_contains(basis, o.basis); }
};

template <class F>
H1Subspace<F> subspace_of(const F& f, size_t ambient, const std::vector<std::vector<typename F::Element>>& vecs) {
  Matrix<typename F::Element> m(ambient, vecs.size(), f.zero());
  for (size_t j = 0; j < vecs.size(); ++j) m.set_col(j, vecs[j]);
  return {ambient, column_space_canonical(m)};
}

class empty_ambient : public std::domain_error {
 public:
  empty_ambient() : std::domain_error("empty ambient") {}
};

/// H^1(W) together with H^0(K (x) W*) and the Serre pairing between them.
template <class F>
struct SerreData {
  Cohomology<F> c;
  Cohomology<F> dc;
  Matrix<typename F::Element> P;     // h1 x h0(K W*)
  Matrix<typename F::Element> Pinv;

  explicit SerreData(const Bundle<F>& W)
      : c(cohomology(W)), dc(cohomology(canonical_twist(dual(W)))), P(serre_pairing(c, dc)), Pinv(P) {
    if (c.h1() == 0) throw empty_ambient();
    Pinv = inverse(P);
  }
  const F& field() const { return c.V.field; }
  size_t h1() const { return c.h1(); }

  /// eta_hat(z) of a section of K (x) W* in the chart frame at x, as a local function vector.
  RatVector<F> local_covector(const CurvePoint<F>& x, const RatVector<F>& eta) const {
    const Bundle<F>& W = c.V;
    RatVector<F> out;
    if (x.at_infinity) {
      const RatFunc<F> k = -RatFunc<F>::power(W.field, 2);
      for (const auto& e : W.Ainf.transpose() * eta) out.push_back((e * k).invert_variable());
    } else {
      for (const auto& e : W.A0.transpose() * eta) out.push_back(e.shift(x.a));
    }
    return out;
  }

  /// Functionals eta -> coefficient of z^i in <eta_hat, jet>, i < k, as rows over the
  /// H^0(K (x) W*) basis.
  Matrix<typename F::Element> evaluation_rows(const std::vector<JetCondition<F>>& jets) const {
    size_t rows = 0;
    for (const auto& j : jets) rows += static_cast<size_t>(j.k);
    Matrix<typename F::Element> Ev(rows, dc.h0(), field().zero());
    size_t row = 0;
    for (const auto& j : jets) {
      for (size_t l = 0; l < dc.h0(); ++l) {
        const RatVector<F> eh = local_covector(j.x, dc.sections[l]);
        Poly<F> acc(field());
        for (size_t i = 0; i < eh.size(); ++i)
          if (!j.nu[i].is_zero()) acc += mul_trunc(taylor(eh[i], j.k), j.nu[i], j.k);
        for (int i = 0; i < j.k; ++i) Ev(row + static_cast<size_t>(i), l) = acc.coeff(i);
      }
      row += static_cast<size_t>(j.k);
    }
    return Ev;
  }

  /// Route A: the classes whose pairings are the evaluation functionals, P^{-T} Ev^T.
  H1Subspace<F> span_by_evaluation(const std::vector<JetCondition<F>>& jets) const {
    const auto Ev = evaluation_rows(jets);
    return {h1(), column_space_canonical(Pinv.transpose() * Ev.transpose())};
  }

  /// Route B: coboundaries of the principal parts z^i v / z^k, i < k.
  H1Subspace<F> span_by_coboundary(const std::vector<PrincipalPart<F>>& gens) const {
    std::vector<std::vector<typename F::Element>> cls;
    for (const auto& g : gens)
      for (int i = 0; i < g.order; ++i) {
        PrincipalPart<F> p = make_part(g.point, g.order - i, g.numer);
        cls.push_back(coboundary(c, p.point, p.local_vector()));
      }
    return subspace_of(field(), h1(), cls);
  }
};

template <class F>
struct SpanResult {
  H1Subspace<F> by_evaluation;
  H1Subspace<F> by_coboundary;
  int length = 0;  // length(Z) times rk F in the relative case
  bool routes_agree() const { return by_evaluation == by_coboundary; }
  const H1Subspace<F>& span() const {
    if (!routes_agree()) throw std::logic_error("span routes disagree");
    return by_evaluation;
  }
  int defect() const { return length - 1 - span().projective_dim(); }
};

namespace detail {

template <class F>
std::vector<PrincipalPart<F>> normal_generators(const TorsionModule<F>& tau) {
  std::vector<PrincipalPart<F>> out;
  for (const auto& x : tau.support())
    for (const auto& g : normal_form(tau, x).gens) out.push_back(g);
  return out;
}

template <class F>
std::vector<Poly<F>> unit_vector(const F& f, size_t n, size_t b) {
  std::vector<Poly<F>> v(n, Poly<F>(f));
  v[b] = Poly<F>::constant(f, f.one());
  return v;
}

template <class F>
std::vector<Poly<F>> kron_jet(const std::vector<Poly<F>>& a, const std::vector<Poly<F>>& b) {
  std::vector<Poly<F>> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

}  // namespace detail

/// Span of Z in PH^1(V) by jet evaluation and by coboundaries of H^0(tau_Z).
template <class F>
SpanResult<F> span_of(const Bundle<F>& V, const ZScheme<F>& Z) {
  const SerreData<F> S(V);
  const auto tauZ = alpha(V, Z).tauZ;
  return {S.span_by_evaluation(conditions_of(Z)), S.span_by_coboundary(detail::normal_generators(tauZ)),
          Z.length()};
}

/// Span of Z x_X PF in PH^1(V (x) F); ambient index i_V * rk F + i_F.
template <class F>
SpanResult<F> rel_span(const Bundle<F>& V, const Bundle<F>& Fb, const ZScheme<F>& Z) {
  const F& f = V.field;
  const size_t rf = Fb.rank();
  const SerreData<F> S(tensor(V, Fb));
  std::vector<JetCondition<F>> jets;
  for (const auto& c : Z.clusters)
    for (size_t b = 0; b < rf; ++b) jets.push_back({c.x, c.k, detail::kron_jet(c.jet, detail::unit_vector(f, rf, b))});
  std::vector<PrincipalPart<F>> gens;
  for (const auto& g : detail::normal_generators(alpha(V, Z).tauZ))
    for (size_t b = 0; b < rf; ++b)
      gens.push_back(make_part(g.point, g.order, detail::kron_jet(g.numer, detail::unit_vector(f, rf, b))));
  return {S.span_by_evaluation(jets), S.span_by_coboundary(gens), static_cast<int>(rf) * Z.length()};
}

struct IdentityReport {
  int lhs = 0;  // h^0 difference
  int rhs = 0;  // defect
  bool holds() const { return lhs == rhs; }
};

/// h^0(V_Z) - h^0(V) = def(Z) for Z = quot_to_hilb(tau).
template <class F>
IdentityReport ggrr_check(const Bundle<F>& V, const TorsionModule<F>& tau) {
  const ZScheme<F> Z = quot_to_hilb(tau);
  const auto vt = vtilde_from_tau(V, tau);
  IdentityReport rep;
  rep.lhs = static_cast<int>(cohomology(vt.Vtilde).h0()) - static_cast<int>(cohomology(V).h0());
  rep.rhs = span_of(V, Z).defect();
  return rep;
}

/// h^0(V_Z (x) F) - h^0(V (x) F) = relative defect of Z.
template <class F>
IdentityReport relggrr_check(const Bundle<F>& V, const Bundle<F>& Fb, const TorsionModule<F>& tau) {
  const ZScheme<F> Z = quot_to_hilb(tau);
  const auto vt = vtilde_from_tau(V, tau);
  IdentityReport rep;
  rep.lhs = static_cast<int>(cohomology(tensor(vt.Vtilde, Fb)).h0()) -
            static_cast<int>(cohomology(tensor(V, Fb)).h0());
  rep.rhs = rel_span(V, Fb, Z).defect();
  return rep;
}

/// Span(Z) = Span(Z') whenever alpha(Z) and alpha(Z') are the same quot point.
template <class F>
bool same_span_check(const Bundle<F>& V, const ZScheme<F>& Z, const ZScheme<F>& Z2) {
  if (!quot_equal(alpha(V, Z).q, alpha(V, Z2).q)) throw std::invalid_argument("different Quot points");
  return span_of(V, Z).span() == span_of(V, Z2).span();
}

/// psi of a point of PV: the class of nu(0) / z at x. Zero iff a base point of psi.
template <class F>
std::vector<typename F::Element> psi_point(const Bundle<F>& V, const Cluster<F>& nu) {
  const Cohomology<F> c = cohomology(V);
  if (c.h1() == 0) throw empty_ambient();
  PrincipalPart<F> p = make_part(nu.x, 1, nu.jet);
  return coboundary(c, p.point, p.local_vector());
}

/// A point of PV x_X PF.
template <class F>
struct DeltaPoint {
  CurvePoint<F> x;
  std::vector<typename F::Element> v;
  std::vector<typename F::Element> w;
};

/// psi on the decomposable locus: the class of (v (x) w) / z at x in H^1(V (x) F).
template <class F>
std::vector<typename F::Element> psi_delta(const Bundle<F>& V, const Bundle<F>& Fb, const DeltaPoint<F>& d) {
  const Cohomology<F> c = cohomology(tensor(V, Fb));
  if (c.h1() == 0) throw empty_ambient();
  const F& f = V.field;
  std::vector<Poly<F>> numer;
  for (const auto& a : d.v)
    for (const auto& b : d.w) numer.push_back(Poly<F>::constant(f, a * b));
  PrincipalPart<F> p = make_part(d.x, 1, std::move(numer));
  if (p.is_zero()) throw std::invalid_argument("zero direction");
  return coboundary(c, p.point, p.local_vector());
}

}  // namespace hecke
