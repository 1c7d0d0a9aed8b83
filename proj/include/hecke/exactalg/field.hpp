#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

/// Raised when a textual scalar, polynomial or document cannot be parsed.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of the prime field F_p, stored as its canonical representative in [0, p).
class Fp {
 public:
  Fp(uint64_t value, uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator+(const Fp& o) const {
    uint64_t s = v_ + o.v_;
    return raw(s >= p_ ? s - p_ : s);
  }
  Fp operator-(const Fp& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
  Fp operator*(const Fp& o) const {
    return raw(static_cast<uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_));
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // Fermat: a^(p-2)
    return pow(p_ - 2);
  }
  Fp pow(uint64_t e) const {
    Fp base = *this, acc = raw(1 % p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) { return a.v_ <=> b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  Fp raw(uint64_t v) const {
    Fp r = *this;
    r.v_ = v;
    return r;
  }
  uint64_t v_;
  uint64_t p_;
};

/// Element of Q backed by a GMP rational in canonical form.
class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero in Q");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

/// Deterministic, platform-independent random source used by every sampler.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound) by rejection, independent of the standard
  /// library's distribution implementation.
  uint64_t below(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do { x = engine_(); } while (x >= limit);
    return x % bound;
  }
  int64_t between(int64_t lo, int64_t hi) {  // inclusive
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  bool coin() { return below(2) == 1; }

  /// splitmix64, used to derive independent per-instance seeds from a master seed.
  static uint64_t derive(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

// Unit and zero of the ring an element lives in; generic code (matrices,
// elimination) uses these instead of carrying a ring object around.
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p. Elements carry their modulus so arithmetic needs no context.
struct PrimeField {
  using Element = Fp;
  uint64_t p;

  explicit PrimeField(uint64_t prime) : p(prime) {
    if (!is_prime(prime) || prime >= (uint64_t{1} << 32))
      throw std::invalid_argument("F_p requires a prime p < 2^32, got " + std::to_string(prime));
  }

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(int64_t n) const {
    int64_t r = n % static_cast<int64_t>(p);
    if (r < 0) r += static_cast<int64_t>(p);
    return Fp(static_cast<uint64_t>(r), p);
  }
  Fp parse(std::string_view text) const {
    // Accept "a" or "a/b"; both reduced mod p.
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return reduce(parse_int(text));
    Fp den = reduce(parse_int(text.substr(slash + 1)));
    if (den.is_zero()) throw parse_error("denominator vanishes mod p in '" + std::string(text) + "'");
    return reduce(parse_int(text.substr(0, slash))) / den;
  }
  Fp random(Rng& rng) const { return Fp(rng.below(p), p); }
  Fp random_nonzero(Rng& rng) const { return Fp(1 + rng.below(p - 1), p); }

  bool finite() const { return true; }
  uint64_t size() const { return p; }
  /// The i-th element in canonical order, for exhaustive enumeration.
  Fp element(uint64_t i) const { return Fp(i, p); }
  std::string name() const { return "Fp:" + std::to_string(p); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }

 private:
  Fp reduce(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return Fp(r.get_ui(), p);
  }
  static mpz_class parse_int(std::string_view s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw parse_error("malformed integer '" + std::string(s) + "'");
    for (size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw parse_error("malformed integer '" + std::string(s) + "'");
    return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s), 10);
  }
};

/// The rational numbers.
struct RationalField {
  using Element = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(int64_t n) const { return Rational(static_cast<long>(n)); }
  Rational parse(std::string_view text) const {
    std::string s(text);
    if (s.empty()) throw parse_error("empty rational");
    for (size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && (c == '-' || c == '+'));
      if (!ok) throw parse_error("malformed rational '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw parse_error("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(q);
  }
  /// Small-height random rationals: numerators in [-9, 9], denominators in [1, 3].
  Rational random(Rng& rng) const {
    mpq_class q(rng.between(-9, 9), rng.between(1, 3));
    return Rational(q);
  }
  Rational random_nonzero(Rng& rng) const {
    Rational r = random(rng);
    while (r.is_zero()) r = random(rng);
    return r;
  }

  bool finite() const { return false; }
  uint64_t size() const { return 0; }
  /// Enumerates 0, 1, -1, 2, -2, ... for sampling distinct points.
  Rational element(uint64_t i) const {
    long n = static_cast<long>((i + 1) / 2);
    return Rational(i % 2 == 1 ? n : -n);
  }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace hecke
