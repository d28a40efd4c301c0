#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qha/rational.hpp"

namespace qha {

struct BadOrder : std::runtime_error {
  explicit BadOrder(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

/// Integer polynomials, little-endian coefficient order.  Only what the
/// cyclotomic-polynomial construction needs.
using IntPoly = std::vector<long long>;

inline IntPoly ipoly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Exact division of integer polynomials; both arguments must be such that
/// the quotient is again integral (true for products of cyclotomics).
inline IntPoly ipoly_div(IntPoly num, const IntPoly& den) {
  num = ipoly_trim(num);
  IntPoly d = ipoly_trim(den);
  if (d.empty()) throw DivisionByZero();
  IntPoly q(num.size() >= d.size() ? num.size() - d.size() + 1 : 0, 0);
  while (num.size() >= d.size() && !num.empty()) {
    long long c = num.back() / d.back();
    size_t shift = num.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) num[shift + i] -= c * d[i];
    num = ipoly_trim(num);
  }
  if (!num.empty()) throw std::logic_error("non-exact cyclotomic division");
  return q;
}

/// n-th cyclotomic polynomial via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline IntPoly cyclotomic_poly(int n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = ipoly_div(p, cyclotomic_poly(d));
  }
  return p;
}

}  // namespace detail

/// Global description of the coefficient field Q(zeta_L).  One order L is
/// fixed per process (default 12, which contains all roots of unity of order
/// 2, 3, 4, 6 used by the catalog); it can be overridden before any scalar is
/// created, via the CLI flag or the QHA_CYCLOTOMIC_ORDER environment
/// variable.
class CycField {
 public:
  // phi(L) is capped so scalars can live in fixed-size storage.
  static constexpr int kMaxPhi = 8;

  static const CycField& get() { return *instance_ptr(); }

  static void set_global_order(int order) {
    instance_ptr() = std::make_shared<const CycField>(order);
  }

  explicit CycField(int order) : order_(order) {
    if (order < 1) throw BadOrder("cyclotomic order must be positive");
    detail::IntPoly phi_poly = detail::cyclotomic_poly(order);
    phi_ = (int)phi_poly.size() - 1;
    if (phi_ > kMaxPhi)
      throw BadOrder("cyclotomic order " + std::to_string(order) +
                     " has degree phi=" + std::to_string(phi_) +
                     " > supported maximum " + std::to_string(kMaxPhi));
    min_poly_.assign(phi_poly.begin(), phi_poly.end());

    // Reduction rows: x^k mod Phi_L for k in [phi, 2*phi-2].
    std::vector<Rational> cur(phi_, Rational(0));  // x^phi reduced
    for (int i = 0; i < phi_; ++i) cur[i] = Rational(-min_poly_[i]);
    red_rows_.push_back(cur);
    for (int k = phi_ + 1; k <= 2 * phi_ - 2; ++k) {
      std::vector<Rational> nxt(phi_, Rational(0));
      for (int i = phi_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
      Rational top = cur[phi_ - 1];
      if (!top.is_zero())
        for (int i = 0; i < phi_; ++i) nxt[i] += top * Rational(-min_poly_[i]);
      red_rows_.push_back(nxt);
      cur = nxt;
    }

    // Powers zeta^k for k in [0, L).
    zeta_pow_.assign(order_, std::vector<Rational>(phi_, Rational(0)));
    zeta_pow_[0][0] = Rational(1);
    for (int k = 1; k < order_; ++k) {
      if (k < phi_) {
        zeta_pow_[k][k] = Rational(1);
      } else {
        // zeta^k = zeta * zeta^(k-1), reduced.
        const auto& prev = zeta_pow_[k - 1];
        std::vector<Rational> raw(phi_ + 1, Rational(0));
        for (int i = 0; i < phi_; ++i) raw[i + 1] = prev[i];
        std::vector<Rational> out(phi_, Rational(0));
        for (int i = 0; i < phi_; ++i) out[i] = raw[i];
        if (!raw[phi_].is_zero())
          for (int i = 0; i < phi_; ++i) out[i] += raw[phi_] * red_rows_[0][i];
        zeta_pow_[k] = out;
      }
    }
  }

  int order() const { return order_; }
  int phi() const { return phi_; }
  const std::vector<long long>& min_poly() const { return min_poly_; }
  const std::vector<Rational>& reduction_row(int k) const { return red_rows_[k - phi_]; }
  const std::vector<Rational>& zeta_power(int k) const { return zeta_pow_[((k % order_) + order_) % order_]; }

 private:
  static std::shared_ptr<const CycField>& instance_ptr() {
    static std::shared_ptr<const CycField> inst = std::make_shared<const CycField>(12);
    return inst;
  }

  int order_;
  int phi_;
  std::vector<long long> min_poly_;
  std::vector<std::vector<Rational>> red_rows_;
  std::vector<std::vector<Rational>> zeta_pow_;
};

/// Element of Q(zeta_L) in the power basis 1, zeta, ..., zeta^(phi-1),
/// coefficients always fully reduced, so equality is coefficient-wise.
class Cyc {
 public:
  Cyc() : n_((uint8_t)CycField::get().phi()) { c_.fill(Rational(0)); }
  Cyc(long long v) : Cyc() { c_[0] = Rational(v); }
  Cyc(const Rational& v) : Cyc() { c_[0] = v; }
  Cyc(long long num, long long den) : Cyc() { c_[0] = Rational(num, den); }

  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(1); }

  /// zeta_L^k (any integer k).
  static Cyc zeta_pow(int k) {
    const CycField& f = CycField::get();
    Cyc r;
    const auto& row = f.zeta_power(k);
    for (int i = 0; i < f.phi(); ++i) r.c_[i] = row[i];
    return r;
  }

  /// Primitive n-th root of unity raised to k, i.e. zeta_L^(kL/n).
  /// Throws BadOrder when n does not divide L.
  static Cyc root_of_unity(int n, int k = 1) {
    const CycField& f = CycField::get();
    if (n <= 0 || f.order() % n != 0)
      throw BadOrder("root order " + std::to_string(n) + " does not divide cyclotomic order " +
                     std::to_string(f.order()));
    long long step = f.order() / n;
    long long e = ((long long)k % n + n) % n;
    return zeta_pow((int)(e * step));
  }

  int phi() const { return n_; }
  const Rational& coeff(int i) const { return c_[i]; }
  Rational& coeff(int i) { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (int i = 1; i < n_; ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (int i = 1; i < n_; ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Rational rational_part() const { return c_[0]; }

  bool operator==(const Cyc& o) const {
    for (int i = 0; i < n_; ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc operator-() const {
    Cyc r = *this;
    for (int i = 0; i < n_; ++i) r.c_[i] = -r.c_[i];
    return r;
  }
  Cyc operator+(const Cyc& o) const {
    Cyc r = *this;
    for (int i = 0; i < n_; ++i) r.c_[i] += o.c_[i];
    return r;
  }
  Cyc operator-(const Cyc& o) const {
    Cyc r = *this;
    for (int i = 0; i < n_; ++i) r.c_[i] -= o.c_[i];
    return r;
  }

  Cyc operator*(const Cyc& o) const {
    // Fast path: purely rational factor.
    if (is_rational()) {
      if (c_[0].is_zero()) return Cyc();
      Cyc r = o;
      for (int i = 0; i < n_; ++i) r.c_[i] *= c_[0];
      return r;
    }
    if (o.is_rational()) {
      if (o.c_[0].is_zero()) return Cyc();
      Cyc r = *this;
      for (int i = 0; i < n_; ++i) r.c_[i] *= o.c_[0];
      return r;
    }
    const CycField& f = CycField::get();
    std::array<Rational, 2 * CycField::kMaxPhi> raw;
    int m = 2 * n_ - 1;
    for (int i = 0; i < m; ++i) raw[i] = Rational(0);
    for (int i = 0; i < n_; ++i) {
      if (c_[i].is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.c_[j].is_zero()) continue;
        raw[i + j] += c_[i] * o.c_[j];
      }
    }
    Cyc r;
    for (int i = 0; i < n_; ++i) r.c_[i] = raw[i];
    for (int k = n_; k < m; ++k) {
      if (raw[k].is_zero()) continue;
      const auto& row = f.reduction_row(k);
      for (int i = 0; i < n_; ++i) r.c_[i] += raw[k] * row[i];
    }
    return r;
  }

  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  /// Multiplicative inverse via the extended Euclidean algorithm on the
  /// power-basis representative against the minimal polynomial.
  Cyc inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Cyc(Rational(1) / c_[0]);
    const CycField& f = CycField::get();
    // Polynomials over Q, little-endian.
    std::vector<Rational> a(f.min_poly().size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = Rational(f.min_poly()[i]);
    std::vector<Rational> b(c_.begin(), c_.begin() + n_);
    while (!b.empty() && b.back().is_zero()) b.pop_back();
    // Bezout: s*a + t*b = gcd; we track only the coefficient of b.
    std::vector<Rational> t0, t1{Rational(1)};
    std::vector<Rational> r0 = a, r1 = b;
    auto trim = [](std::vector<Rational>& p) {
      while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    while (true) {
      trim(r1);
      if (r1.empty()) throw std::logic_error("element not invertible modulo cyclotomic polynomial");
      if (r1.size() == 1) break;
      // r0 = q*r1 + r2
      std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
      std::vector<Rational> rem = r0;
      while (rem.size() >= r1.size()) {
        Rational c = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        q[shift] = c;
        for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
        trim(rem);
        if (rem.empty()) break;
      }
      // t2 = t0 - q*t1
      std::vector<Rational> qt(q.size() + t1.size(), Rational(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) continue;
        for (size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
      }
      std::vector<Rational> t2(std::max(t0.size(), qt.size()), Rational(0));
      for (size_t i = 0; i < t0.size(); ++i) t2[i] += t0[i];
      for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
      r0 = r1;
      r1 = rem;
      t0 = t1;
      t1 = t2;
    }
    Rational lead = r1[0];
    Cyc out;
    for (size_t i = 0; i < t1.size() && (int)i < n_; ++i) out.c_[i] = t1[i] / lead;
    // Degrees >= phi cannot occur: deg t1 < deg a - deg gcd = phi.
    return out;
  }

  /// Complex image under zeta -> exp(2*pi*i*emb/L); emb must be coprime to L.
  std::complex<double> embed(int emb = 1) const {
    const CycField& f = CycField::get();
    std::complex<double> z = 0;
    for (int i = 0; i < n_; ++i) {
      if (c_[i].is_zero()) continue;
      double arg = 2.0 * M_PI * (double)((long long)emb * i % f.order()) / f.order();
      z += c_[i].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
  }

  /// Galois conjugate zeta -> zeta^a (a coprime to L).
  Cyc galois(int a) const {
    Cyc out;
    for (int i = 0; i < n_; ++i) {
      if (c_[i].is_zero()) continue;
      Cyc term = zeta_pow(a * i);
      for (int j = 0; j < n_; ++j) out.c_[j] += c_[i] * term.c_[j];
    }
    return out;
  }

  /// Wire form: list of [power, numerator, denominator] triples, ascending
  /// power, zero coefficients omitted.
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += c_[i].str();
      if (i > 0) s += "*z^" + std::to_string(i);
    }
    return s;
  }

 private:
  std::array<Rational, CycField::kMaxPhi> c_;
  uint8_t n_;
};

inline Cyc operator*(long long a, const Cyc& b) { return Cyc(a) * b; }

/// Family entry point used by tests and the CLI: add/mul/neg/inv/eq live on
/// the type; inv(0) throws DivisionByZero.
inline Cyc cyc_inv(const Cyc& a) { return a.inverse(); }

}  // namespace qha
