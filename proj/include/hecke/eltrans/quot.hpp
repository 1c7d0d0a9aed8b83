#pragma once

#include <stdexcept>
#include <vector>

#include "hecke/eltrans/normal_form.hpp"

namespace hecke {

/// The subsheaf Vtilde* of V*, stored as canonical lattice bases in the chart frames of V*:
/// `finite` is a Hermite basis over k[t], `infinity` a canonical basis over O_inf (in t).
template <class F>
struct QuotPoint {
  Bundle<F> base;
  RatMatrix<F> finite;
  RatMatrix<F> infinity;
  int colength = 0;
};

class different_base : public std::invalid_argument {
 public:
  different_base() : std::invalid_argument("quot points over different base bundles") {}
};

template <class F>
bool quot_equal(const QuotPoint<F>& a, const QuotPoint<F>& b) {
  if (!(a.base == b.base)) throw different_base();
  return a.finite == b.finite && a.infinity == b.infinity;
}

/// Jet condition <f(z), nu(z)> = 0 mod z^k on covectors f in the chart frame at x.
template <class F>
struct JetCondition {
  CurvePoint<F> x;
  int k = 0;
  std::vector<Poly<F>> nu;
};

namespace detail {

template <class F>
int local_degree_of_det(const RatMatrix<F>& m, bool at_infinity) {
  RatFunc<F> d = determinant(m);
  return at_infinity ? d.invert_variable().ord0() : d.num().degree() - d.den().degree();
}

// Bases of the finite-chart and infinity-chart lattices {f : all conditions hold},
// as canonical forms in the frame coordinates of V*.
template <class F>
std::pair<RatMatrix<F>, RatMatrix<F>> annihilator(const F& f, size_t r, const std::vector<JetCondition<F>>& conds) {
  using K = typename F::Element;
  const RatFunc<F> zero(f);
  RatMatrix<F> fin = RatMatrix<F>::identity(r, zero), inf = RatMatrix<F>::identity(r, zero);

  // finite points: unknown polynomial vectors of degree < deg P, P = prod (t - a)^{K_a}
  std::vector<std::pair<K, int>> pts;
  bool any_inf = false;
  int K_inf = 0;
  for (const auto& c : conds) {
    if (c.k <= 0) continue;
    if (c.x.at_infinity) {
      any_inf = true;
      K_inf = std::max(K_inf, c.k);
      continue;
    }
    auto it = std::find_if(pts.begin(), pts.end(), [&](const auto& p) { return p.first == c.x.a; });
    if (it == pts.end()) pts.push_back({c.x.a, c.k});
    else it->second = std::max(it->second, c.k);
  }
  auto solve = [&](const std::vector<JetCondition<F>>& cs, int n, auto&& local_powers) {
    // columns: coefficient vectors of a basis of solutions, unknown (c, e) -> f_c = t^e
    size_t rows = 0;
    for (const auto& c : cs) rows += static_cast<size_t>(c.k);
    Matrix<K> A(rows, r * static_cast<size_t>(n), f.zero());
    size_t row = 0;
    for (const auto& c : cs) {
      for (size_t comp = 0; comp < r; ++comp) {
        for (int e = 0; e < n; ++e) {
          const Poly<F> prod = mul_trunc(local_powers(c, e), c.nu[comp], c.k);
          for (int i = 0; i < c.k; ++i) A(row + static_cast<size_t>(i), comp * static_cast<size_t>(n) + static_cast<size_t>(e)) = prod.coeff(i);
        }
      }
      row += static_cast<size_t>(c.k);
    }
    return kernel(A);
  };
  if (!pts.empty()) {
    Poly<F> P = Poly<F>::constant(f, f.one());
    for (auto [a, k] : pts)
      for (int i = 0; i < k; ++i) P = P * Poly<F>::linear(f, a);
    const int n = P.degree();
    std::vector<JetCondition<F>> cs;
    for (const auto& c : conds)
      if (!c.x.at_infinity && c.k > 0) cs.push_back(c);
    // (z + a)^e modulo z^k
    auto powers = [&](const JetCondition<F>& c, int e) {
      return Poly<F>::monomial(f, f.one(), e).shift(c.x.a).truncated(c.k);
    };
    Matrix<K> ker = solve(cs, n, powers);
    RatMatrix<F> gens(r, ker.cols() + r, zero);
    for (size_t j = 0; j < ker.cols(); ++j)
      for (size_t comp = 0; comp < r; ++comp) {
        std::vector<K> c;
        for (int e = 0; e < n; ++e) c.push_back(ker(comp * static_cast<size_t>(n) + static_cast<size_t>(e), j));
        gens(comp, j) = RatFunc<F>(Poly<F>(f, std::move(c)));
      }
    for (size_t comp = 0; comp < r; ++comp) gens(comp, ker.cols() + comp) = RatFunc<F>(P);
    fin = lattice_canonical(gens);
  }
  if (any_inf) {
    std::vector<JetCondition<F>> cs;
    for (const auto& c : conds)
      if (c.x.at_infinity && c.k > 0) cs.push_back(c);
    auto powers = [&](const JetCondition<F>& c, int e) {
      return Poly<F>::monomial(f, f.one(), e).truncated(c.k);
    };
    Matrix<K> ker = solve(cs, K_inf, powers);
    RatMatrix<F> gens(r, ker.cols() + r, zero);
    for (size_t j = 0; j < ker.cols(); ++j)
      for (size_t comp = 0; comp < r; ++comp) {
        std::vector<K> c;
        for (int e = 0; e < K_inf; ++e) c.push_back(ker(comp * static_cast<size_t>(K_inf) + static_cast<size_t>(e), j));
        gens(comp, j) = RatFunc<F>(Poly<F>(f, std::move(c)));
      }
    for (size_t comp = 0; comp < r; ++comp) gens(comp, ker.cols() + comp) = RatFunc<F>::power(f, K_inf);
    inf = invert_variable(local_canonical(gens));
  }
  return {fin, inf};
}

template <class F>
QuotPoint<F> make_quot(const Bundle<F>& V, RatMatrix<F> fin, RatMatrix<F> inf) {
  int d = local_degree_of_det(fin, false) + local_degree_of_det(inf, true);
  return QuotPoint<F>{V, std::move(fin), std::move(inf), d};
}

}  // namespace detail

/// Vtilde* = {f in V* : <p, f> regular for every listed jet}, as a quot point of V*.
template <class F>
QuotPoint<F> quot_from_conditions(const Bundle<F>& V, const std::vector<JetCondition<F>>& conds) {
  auto [fin, inf] = detail::annihilator(V.field, V.rank(), conds);
  return detail::make_quot(V, std::move(fin), std::move(inf));
}

/// Vtilde = (Vtilde*)^dual as a bundle.
template <class F>
Bundle<F> bundle_of_quot(const QuotPoint<F>& q) {
  return Bundle<F>{q.base.field, q.base.A0 * inverse(q.finite).transpose(),
                   q.base.Ainf * inverse(q.infinity).transpose()};
}

template <class F>
struct VtildeResult {
  Bundle<F> Vtilde;
  QuotPoint<F> q;
  int degree = 0;  // deg Vtilde - deg V
};

/// Vtilde = V + (sections with the generators of tau as principal parts), lattice by lattice.
template <class F>
VtildeResult<F> vtilde_from_tau(const Bundle<F>& V, const TorsionModule<F>& tau) {
  const F& f = V.field;
  const size_t r = V.rank();
  const RatFunc<F> zero(f);
  std::vector<RatVector<F>> fin_cols, inf_cols;
  for (const auto& [x, gens] : tau.parts)
    for (const auto& p : gens) {
      if (p.is_zero()) continue;
      RatVector<F> v;
      for (const auto& e : p.local_vector()) v.push_back(x.at_infinity ? e : from_local(e, x));
      (x.at_infinity ? inf_cols : fin_cols).push_back(std::move(v));
    }
  RatMatrix<F> H = RatMatrix<F>::identity(r, zero), Hinf_s = RatMatrix<F>::identity(r, zero);
  if (!fin_cols.empty())
    H = lattice_canonical(H.hstack(RatMatrix<F>::from_columns(fin_cols, r, zero)));
  if (!inf_cols.empty())
    Hinf_s = local_canonical(Hinf_s.hstack(RatMatrix<F>::from_columns(inf_cols, r, zero)));
  const RatMatrix<F> Hinf = invert_variable(Hinf_s);
  Bundle<F> Vt{f, V.A0 * H, V.Ainf * Hinf};
  RatMatrix<F> qfin = lattice_canonical(inverse(H).transpose());
  RatMatrix<F> qinf = lattice_canonical_at_infinity(inverse(Hinf).transpose());
  QuotPoint<F> q = detail::make_quot(V, std::move(qfin), std::move(qinf));
  return {Vt, q, degree(Vt) - degree(V)};
}

/// Jet conditions <p_j, f> regular, one per generator of tau.
template <class F>
std::vector<JetCondition<F>> conditions_of(const TorsionModule<F>& tau) {
  std::vector<JetCondition<F>> out;
  for (const auto& [x, gens] : tau.parts)
    for (const auto& p : gens)
      if (!p.is_zero()) out.push_back({x, p.order, p.numer});
  return out;
}

/// Route 2: the pairing kernel {f : <p, f> = 0 in Prin(O) for all generators p}.
template <class F>
QuotPoint<F> quot_by_pairing_kernel(const Bundle<F>& V, const TorsionModule<F>& tau) {
  return quot_from_conditions(V, conditions_of(tau));
}

/// Route 3: locally spanned by z^{k_j} f_j (j <= s), f_j (j > s) in the dual adapted frame.
template <class F>
QuotPoint<F> quot_by_adapted_frame(const Bundle<F>& V, const TorsionModule<F>& tau) {
  const F& f = V.field;
  const size_t r = V.rank();
  const RatFunc<F> zero(f);
  RatMatrix<F> dual_sum(r, 0, zero);  // sum of the duals of the local lattices
  RatMatrix<F> inf = RatMatrix<F>::identity(r, zero);
  bool any_finite = false;
  for (const auto& x : tau.support()) {
    NormalForm<F> nf = normal_form(tau, x);
    RatMatrix<F> loc(r, 2 * r, zero);  // in the uniformiser
    for (size_t j = 0; j < r; ++j) {
      const int e = j < nf.s() ? nf.gens[j].order : 0;
      for (size_t i = 0; i < r; ++i) {
        loc(i, j) = RatFunc<F>(nf.dual_frame[j][i]) * RatFunc<F>::power(f, e);
        if (i == j) loc(i, r + j) = RatFunc<F>::power(f, nf.K);
      }
    }
    if (x.at_infinity) {
      inf = invert_variable(local_canonical(loc));
      continue;
    }
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < 2 * r; ++j) loc(i, j) = from_local(loc(i, j), x);
    RatMatrix<F> N = lattice_canonical(loc);
    dual_sum = dual_sum.hstack(inverse(N).transpose());
    any_finite = true;
  }
  RatMatrix<F> fin = RatMatrix<F>::identity(r, zero);
  if (any_finite) fin = lattice_canonical(inverse(lattice_canonical(dual_sum)).transpose());
  return detail::make_quot(V, std::move(fin), std::move(inf));
}

/// Principal parts at x of the columns of a lattice basis M (frame coordinates, functions of t).
template <class F>
std::vector<PrincipalPart<F>> column_parts(const RatMatrix<F>& M, const CurvePoint<F>& x) {
  std::vector<PrincipalPart<F>> out;
  for (size_t j = 0; j < M.cols(); ++j) {
    RatVector<F> v;
    for (size_t i = 0; i < M.rows(); ++i) v.push_back(to_local(M(i, j), x));
    PrincipalPart<F> p = part_of_local(x, v);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

/// Torsion module Vtilde / V of a quot point, with generators the principal parts of the
/// columns of the Vtilde lattice bases at the given points.
template <class F>
TorsionModule<F> torsion_of_quot(const QuotPoint<F>& q, const std::vector<CurvePoint<F>>& points) {
  TorsionModule<F> t{q.base, {}};
  const RatMatrix<F> fin = inverse(q.finite).transpose(), inf = inverse(q.infinity).transpose();
  for (const auto& x : points)
    for (const auto& p : column_parts(x.at_infinity ? inf : fin, x)) t.add(p);
  return t;
}

}  // namespace hecke
