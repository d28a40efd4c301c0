#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qha {

struct ArithmeticOverflow : std::runtime_error {
  ArithmeticOverflow() : std::runtime_error("rational arithmetic overflow (128-bit)") {}
};

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 a) { return a < 0 ? -a : a; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string to_string128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = char('0' + (int)(u % 10));
    u /= 10;
  }
  std::string s(buf + pos, 48 - pos);
  return neg ? "-" + s : s;
}

inline int128 parse128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  bool neg = s[0] == '-';
  size_t i = neg || s[0] == '+' ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal");
  int128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal");
    int128 nv;
    if (__builtin_mul_overflow(v, (int128)10, &nv)) throw ArithmeticOverflow();
    if (__builtin_add_overflow(nv, (int128)(s[i] - '0'), &nv)) throw ArithmeticOverflow();
    v = nv;
  }
  return neg ? -v : v;
}

}  // namespace detail

/// Exact rational number.  Numerator and denominator are kept in canonical
/// form (gcd one, denominator positive) in 128-bit integers; every operation
/// checks for overflow and throws instead of wrapping.  The values handled by
/// this library (structure constants, cocycle values, elimination pivots on
/// matrices of dimension at most a few dozen) stay far below the 128-bit
/// range in practice.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : Rational((detail::int128)n, (detail::int128)d) {}
  Rational(detail::int128 n, detail::int128 d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  detail::int128 num() const { return num_; }
  detail::int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    detail::int128 a, b, n, d;
    if (__builtin_mul_overflow(num_, o.den_, &a)) throw ArithmeticOverflow();
    if (__builtin_mul_overflow(o.num_, den_, &b)) throw ArithmeticOverflow();
    if (__builtin_add_overflow(a, b, &n)) throw ArithmeticOverflow();
    if (__builtin_mul_overflow(den_, o.den_, &d)) throw ArithmeticOverflow();
    return Rational(n, d);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }

  Rational operator*(const Rational& o) const {
    // Cross-reduce first: keeps intermediates small.
    detail::int128 g1 = detail::gcd128(num_, o.den_);
    detail::int128 g2 = detail::gcd128(o.num_, den_);
    detail::int128 n1 = g1 > 1 ? num_ / g1 : num_;
    detail::int128 d2 = g1 > 1 ? o.den_ / g1 : o.den_;
    detail::int128 n2 = g2 > 1 ? o.num_ / g2 : o.num_;
    detail::int128 d1 = g2 > 1 ? den_ / g2 : den_;
    detail::int128 n, d;
    if (__builtin_mul_overflow(n1, n2, &n)) throw ArithmeticOverflow();
    if (__builtin_mul_overflow(d1, d2, &d)) throw ArithmeticOverflow();
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw DivisionByZero();
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return *this * inv;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    detail::int128 a, b;
    if (__builtin_mul_overflow(num_, o.den_, &a)) throw ArithmeticOverflow();
    if (__builtin_mul_overflow(o.num_, den_, &b)) throw ArithmeticOverflow();
    return a < b;
  }

  std::string str() const {
    if (den_ == 1) return detail::to_string128(num_);
    return detail::to_string128(num_) + "/" + detail::to_string128(den_);
  }

  /// Parses "n" or "n/d".
  static Rational parse(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse128(s), (detail::int128)1);
    return Rational(detail::parse128(s.substr(0, slash)), detail::parse128(s.substr(slash + 1)));
  }

  double to_double() const { return (double)num_ / (double)den_; }

 private:
  detail::int128 num_, den_;
};

}  // namespace qha
