#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "hecke/exactalg/poly.hpp"

namespace hecke {

/// deg_inf of the zero function: below every genuine degree.
inline constexpr int kZeroFunctionDegree = std::numeric_limits<int>::min() / 4;

/// Element of k(t) in lowest terms with monic denominator.
template <class F>
class RatFunc {
 public:
  using K = typename F::Element;
  using P = Poly<F>;

  explicit RatFunc(const F& f) : num_(f), den_(P::constant(f, f.one())) {}
  RatFunc(P num) : num_(std::move(num)), den_(P::constant(num_.field(), num_.field().one())) {}  // NOLINT
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static RatFunc constant(const F& f, const K& a) { return RatFunc(P::constant(f, a)); }
  static RatFunc variable(const F& f) { return RatFunc(P::variable(f)); }
  /// t^n for any integer n.
  static RatFunc power(const F& f, int n) {
    if (n >= 0) return RatFunc(P::monomial(f, f.one(), n));
    return RatFunc(P::constant(f, f.one()), P::monomial(f, f.one(), -n));
  }

  const F& field() const { return num_.field(); }
  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, Raw{}); }
  RatFunc operator+(const RatFunc& o) const {
    if (is_poly() && o.is_poly()) return RatFunc(num_ + o.num_);
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    if (is_poly() && o.is_poly()) return RatFunc(num_ * o.num_);
    return RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc operator*(const K& a) const { return RatFunc(num_ * a, den_, Raw{}); }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const { return RatFunc(den_, num_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Degree at infinity: deg num - deg den (minus the order of vanishing at infinity).
  int deg_inf() const { return is_zero() ? kZeroFunctionDegree : num_.degree() - den_.degree(); }
  /// Coefficient of t^deg_inf in the expansion at infinity.
  K lc_inf() const { return is_zero() ? field().zero() : num_.lc() / den_.lc(); }
  /// Order of vanishing at t = 0.
  int ord0() const { return is_zero() ? kInfiniteOrder : num_.valuation() - den_.valuation(); }

  /// f(t + a)
  RatFunc shift(const K& a) const {
    if (is_poly()) return RatFunc(num_.shift(a));
    return RatFunc(num_.shift(a), den_.shift(a));
  }
  /// f(1/t); an involution.
  RatFunc invert_variable() const {
    const F& f = field();
    if (is_zero()) return *this;
    const int dn = num_.degree(), dd = den_.degree();
    P n = num_.reversed(dn), d = den_.reversed(dd);
    if (dd >= dn) n = n * P::monomial(f, f.one(), dd - dn);
    else d = d * P::monomial(f, f.one(), dn - dd);
    return RatFunc(std::move(n), std::move(d));
  }
  K eval(const K& a) const {
    K d = den_.eval(a);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_.eval(a) / d;
  }

  std::string to_string() const {
    if (is_poly()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  struct Raw {};
  RatFunc(P num, P den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = P::constant(field(), field().one());
      return;
    }
    if (den_.degree() > 0) {
      P g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    if (!den_.lc().is_one()) {
      K inv = den_.lc().inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  P num_, den_;
};

template <class F>
RatFunc<F> one_like(const RatFunc<F>& x) { return RatFunc<F>::constant(x.field(), x.field().one()); }
template <class F>
RatFunc<F> zero_like(const RatFunc<F>& x) { return RatFunc<F>(x.field()); }

}  // namespace hecke
