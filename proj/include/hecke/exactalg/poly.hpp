#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hecke/exactalg/field.hpp"

namespace hecke {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;
/// Valuation reported for the zero polynomial / function.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// Dense univariate polynomial over F, coefficients ascending, no trailing zeros.
template <class F>
class Poly {
 public:
  using K = typename F::Element;

  explicit Poly(const F& f) : f_(f) {}
  Poly(const F& f, std::vector<K> c) : f_(f), c_(std::move(c)) { trim(); }

  static Poly constant(const F& f, const K& a) { return Poly(f, {a}); }
  static Poly monomial(const F& f, const K& a, int n) {
    std::vector<K> c(static_cast<size_t>(n) + 1, f.zero());
    c.back() = a;
    return Poly(f, std::move(c));
  }
  static Poly variable(const F& f) { return monomial(f, f.one(), 1); }
  /// t - a
  static Poly linear(const F& f, const K& a) { return Poly(f, {-a, f.one()}); }

  const F& field() const { return f_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? f_.zero() : c_[static_cast<size_t>(i)];
  }
  K lc() const { return c_.empty() ? f_.zero() : c_.back(); }
  /// Order of vanishing at t = 0.
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return kInfiniteOrder;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly operator+(const Poly& o) const {
    std::vector<K> c(std::max(c_.size(), o.c_.size()), f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(f_, std::move(c));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<K> c(c_.size() + o.c_.size() - 1, f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(f_, std::move(c));
  }
  Poly operator*(const K& a) const {
    if (a.is_zero()) return Poly(f_);
    Poly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(f_), *this};
    std::vector<K> r = c_;
    std::vector<K> q(c_.size() - d.c_.size() + 1, f_.zero());
    const K inv = d.lc().inverse();
    const size_t dd = d.c_.size() - 1;
    for (size_t i = r.size(); i-- > dd;) {
      if (r[i].is_zero()) continue;
      K coef = r[i] * inv;
      q[i - dd] = coef;
      for (size_t j = 0; j <= dd; ++j) r[i - dd + j] -= coef * d.c_[j];
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(dd), r.end());
    return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& o) const { return (o % *this).is_zero(); }

  K eval(const K& x) const {
    K acc = f_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  /// p(t + a), by repeated synthetic division.
  Poly shift(const K& a) const {
    if (a.is_zero()) return *this;
    std::vector<K> c = c_;
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
    return Poly(f_, std::move(c));
  }
  /// t^n p(1/t); requires n >= degree.
  Poly reversed(int n) const {
    if (n < degree()) throw std::invalid_argument("reversal length below degree");
    std::vector<K> c(static_cast<size_t>(n) + 1, f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) c[static_cast<size_t>(n) - i] = c_[i];
    return Poly(f_, std::move(c));
  }
  /// p mod t^n
  Poly truncated(int n) const {
    if (n <= 0) return Poly(f_);
    if (static_cast<size_t>(n) >= c_.size()) return *this;
    return Poly(f_, std::vector<K>(c_.begin(), c_.begin() + n));
  }
  /// p * t^n for n >= 0; for n < 0 drops the low coefficients (floor division by t^-n).
  Poly shifted(int n) const {
    if (is_zero()) return *this;
    if (n >= 0) {
      std::vector<K> c(static_cast<size_t>(n), f_.zero());
      c.insert(c.end(), c_.begin(), c_.end());
      return Poly(f_, std::move(c));
    }
    if (static_cast<size_t>(-n) >= c_.size()) return Poly(f_);
    return Poly(f_, std::vector<K>(c_.begin() - n, c_.end()));
  }
  Poly monic() const { return is_zero() ? *this : *this * lc().inverse(); }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<K> c(c_.size() - 1, f_.zero());
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * f_.from_int(static_cast<int64_t>(i));
    return Poly(f_, std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      if (i == 0 || !c_[i].is_one()) s += c_[i].to_string();
      if (i > 0) {
        if (!c_[i].is_one()) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  F f_;
  std::vector<K> c_;
};

template <class F>
Poly<F> one_like(const Poly<F>& p) { return Poly<F>::constant(p.field(), p.field().one()); }
template <class F>
Poly<F> zero_like(const Poly<F>& p) { return Poly<F>(p.field()); }

/// Monic gcd (zero if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> u0 = Poly<F>::constant(f, f.one()), u1(f);
  Poly<F> v0(f), v1 = Poly<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const auto inv = r0.lc().inverse();
  return {r0 * inv, u0 * inv, v0 * inv};
}

/// a * b mod z^n
template <class F>
Poly<F> mul_trunc(const Poly<F>& a, const Poly<F>& b, int n) {
  return (a.truncated(n) * b.truncated(n)).truncated(n);
}

/// Inverse of a power series with nonzero constant term, modulo z^n.
template <class F>
Poly<F> series_inverse(const Poly<F>& u, int n) {
  const F& f = u.field();
  if (u.coeff(0).is_zero()) throw std::domain_error("series is not a unit");
  using K = typename F::Element;
  std::vector<K> w(static_cast<size_t>(std::max(n, 0)), f.zero());
  if (n <= 0) return Poly<F>(f);
  const K inv0 = u.coeff(0).inverse();
  w[0] = inv0;
  for (int k = 1; k < n; ++k) {
    K acc = f.zero();
    for (int j = 1; j <= k && j <= u.degree(); ++j) acc += u.coeff(j) * w[static_cast<size_t>(k - j)];
    w[static_cast<size_t>(k)] = -acc * inv0;
  }
  return Poly<F>(f, std::move(w));
}

}  // namespace hecke
