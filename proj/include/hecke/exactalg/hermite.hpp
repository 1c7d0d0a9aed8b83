#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke/exactalg/laurent.hpp"
#include "hecke/exactalg/matrix.hpp"

namespace hecke {

template <class F>
using RatMatrix = Matrix<RatFunc<F>>;
template <class F>
using RatVector = std::vector<RatFunc<F>>;

/// Raised when a set of generators does not span a full-rank lattice.
class degenerate_lattice : public std::domain_error {
 public:
  degenerate_lattice() : std::domain_error("degenerate lattice") {}
};

template <class F>
struct HermiteResult {
  RatMatrix<F> H;
  RatMatrix<F> U;  // only filled for square input: H = M * U
};

namespace detail {

template <class F>
using PolyCol = std::vector<Poly<F>>;

// Column-style Hermite reduction of polynomial columns (each of length r).
// On return cols[piv[i]] holds the i-th column of H; the remaining columns are zero.
// `track` receives the same column operations.
template <class F>
std::vector<size_t> hermite_columns(std::vector<PolyCol<F>>& cols, std::vector<PolyCol<F>>* track,
                                    size_t r) {
  const size_t n = cols.size();
  std::vector<bool> active(n, true);
  std::vector<size_t> piv(r);
  auto axpy = [&](size_t dst, size_t src, const Poly<F>& q) {  // col_dst -= q col_src
    for (size_t k = 0; k < r; ++k)
      if (!cols[src][k].is_zero()) cols[dst][k] -= q * cols[src][k];
    if (track)
      for (size_t k = 0; k < (*track)[0].size(); ++k)
        if (!(*track)[src][k].is_zero()) (*track)[dst][k] -= q * (*track)[src][k];
  };
  for (size_t i = r; i-- > 0;) {
    size_t pc = n;
    for (size_t j = 0; j < n; ++j) {
      if (!active[j] || cols[j][i].is_zero()) continue;
      if (pc == n) {
        pc = j;
        continue;
      }
      // make cols[j][i] vanish, accumulating the gcd in cols[pc][i]
      if (cols[pc][i].divides(cols[j][i])) {
        axpy(j, pc, cols[j][i] / cols[pc][i]);
        continue;
      }
      const Poly<F> a = cols[pc][i], b = cols[j][i];
      auto [g, u, v] = xgcd(a, b);
      const Poly<F> ag = a / g, bg = b / g;
      auto combine = [&](std::vector<PolyCol<F>>& cs, size_t len) {
        for (size_t k = 0; k < len; ++k) {
          Poly<F> x = cs[pc][k], y = cs[j][k];
          cs[pc][k] = u * x + v * y;
          cs[j][k] = bg * x - ag * y;
        }
      };
      combine(cols, r);
      if (track) combine(*track, (*track)[0].size());
    }
    if (pc == n) throw degenerate_lattice();
    active[pc] = false;
    piv[i] = pc;
    const auto inv = cols[pc][i].lc().inverse();
    if (!inv.is_one()) {
      for (auto& x : cols[pc]) x = x * inv;
      if (track)
        for (auto& x : (*track)[pc]) x = x * inv;
    }
  }
  for (size_t j = 0; j < r; ++j)
    for (size_t i = j; i-- > 0;) {
      const Poly<F>& d = cols[piv[i]][i];
      if (cols[piv[j]][i].degree() >= d.degree()) axpy(piv[j], piv[i], cols[piv[j]][i] / d);
    }
  return piv;
}

template <class F>
Poly<F> common_denominator(const RatMatrix<F>& m) {
  const F& f = m.zero().field();
  Poly<F> d = Poly<F>::constant(f, f.one());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      const Poly<F>& e = m(i, j).den();
      if (e.degree() > 0) d = d * (e / gcd(d, e));
    }
  return d;
}

}  // namespace detail

/// Canonical column basis of the k[t]-lattice spanned by the columns of M (r x n, n >= r).
/// Upper triangular, monic diagonal, entries right of the diagonal reduced modulo it.
/// For square M also returns U with H = M U.
template <class F>
HermiteResult<F> hermite_normal_form(const RatMatrix<F>& M, bool with_transform = true) {
  const size_t r = M.rows(), n = M.cols();
  if (n < r) throw degenerate_lattice();
  const F& f = M.zero().field();
  const Poly<F> D = detail::common_denominator(M);
  std::vector<detail::PolyCol<F>> cols(n, detail::PolyCol<F>(r, Poly<F>(f)));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < r; ++i) {
      const RatFunc<F>& e = M(i, j);
      cols[j][i] = e.num() * (D / e.den());
    }
  const bool track = with_transform && n == r;
  std::vector<detail::PolyCol<F>> u;
  if (track) {
    u.assign(n, detail::PolyCol<F>(n, Poly<F>(f)));
    for (size_t j = 0; j < n; ++j) u[j][j] = Poly<F>::constant(f, f.one());
  }
  auto piv = detail::hermite_columns<F>(cols, track ? &u : nullptr, r);
  const RatFunc<F> zero(f);
  HermiteResult<F> out{RatMatrix<F>(r, r, zero), RatMatrix<F>(track ? n : 0, track ? n : 0, zero)};
  for (size_t j = 0; j < r; ++j)
    for (size_t i = 0; i < r; ++i) out.H(i, j) = RatFunc<F>(cols[piv[j]][i], D);
  if (track)
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i) out.U(i, j) = RatFunc<F>(u[piv[j]][i]);
  return out;
}

template <class F>
RatMatrix<F> lattice_canonical(const RatMatrix<F>& generators) {
  return hermite_normal_form(generators, false).H;
}

/// Whether every entry is a polynomial.
template <class F>
bool is_polynomial(const RatMatrix<F>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_poly()) return false;
  return true;
}

/// Whether every entry is regular at s = 0 (entries read as functions of s).
template <class F>
bool is_local_integral(const RatMatrix<F>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && m(i, j).den().coeff(0).is_zero()) return false;
  return true;
}

/// Canonical basis of the lattice over the local ring k[s]_(s) spanned by the columns of M
/// (entries are functions of s). Upper triangular with diagonal s^{v_i}; the entry (i, j),
/// j > i, is the Laurent tail of exponents < v_i.
template <class F>
RatMatrix<F> local_canonical(const RatMatrix<F>& M) {
  const size_t r = M.rows(), n = M.cols();
  if (n < r) throw degenerate_lattice();
  const F& f = M.zero().field();
  std::vector<RatVector<F>> cols = M.columns();
  std::vector<bool> active(n, true);
  std::vector<size_t> piv(r);
  std::vector<int> val(r);
  for (size_t i = r; i-- > 0;) {
    size_t pc = n;
    int best = kInfiniteOrder;
    for (size_t j = 0; j < n; ++j) {
      if (!active[j] || cols[j][i].is_zero()) continue;
      int o = cols[j][i].ord0();
      if (o < best) {
        best = o;
        pc = j;
      }
    }
    if (pc == n) throw degenerate_lattice();
    const RatFunc<F> scale = RatFunc<F>::power(f, best) / cols[pc][i];
    for (auto& x : cols[pc]) x = x * scale;
    for (size_t j = 0; j < n; ++j) {
      if (!active[j] || j == pc || cols[j][i].is_zero()) continue;
      const RatFunc<F> q = cols[j][i] / cols[pc][i];
      for (size_t k = 0; k < r; ++k)
        if (!cols[pc][k].is_zero()) cols[j][k] -= q * cols[pc][k];
    }
    active[pc] = false;
    piv[i] = pc;
    val[i] = best;
  }
  for (size_t j = 0; j < r; ++j)
    for (size_t i = j; i-- > 0;) {
      const RatFunc<F>& h = cols[piv[j]][i];
      if (h.is_zero()) continue;
      const CurvePoint<F> origin = CurvePoint<F>::finite(f.zero());
      LaurentJet<F> jet = laurent_expand(h, origin, val[i]);
      RatFunc<F> tail(f);
      if (!jet.is_zero()) {
        Poly<F> p(f, jet.c);
        tail = RatFunc<F>(p) * RatFunc<F>::power(f, jet.start);
      }
      const RatFunc<F> q = (h - tail) / RatFunc<F>::power(f, val[i]);
      if (q.is_zero()) continue;
      for (size_t k = 0; k < r; ++k)
        if (!cols[piv[i]][k].is_zero()) cols[piv[j]][k] -= q * cols[piv[i]][k];
    }
  RatMatrix<F> H(r, r, RatFunc<F>(f));
  for (size_t j = 0; j < r; ++j) H.set_col(j, cols[piv[j]]);
  return H;
}

/// Entrywise substitution t -> 1/t.
template <class F>
RatMatrix<F> invert_variable(const RatMatrix<F>& m) {
  RatMatrix<F> out = m;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).invert_variable();
  return out;
}

/// Canonical basis (in t) of the lattice over the local ring at infinity spanned by columns of M.
template <class F>
RatMatrix<F> lattice_canonical_at_infinity(const RatMatrix<F>& M) {
  return invert_variable(local_canonical(invert_variable(M)));
}

}  // namespace hecke
