#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// A value is stored as a rational coefficient vector in the power basis
// 1, z, ..., z^(phi(m)-1) of Q(z), z = exp(2 pi i / m), reduced modulo the
// m-th cyclotomic polynomial. Binary operations lift both operands into
// Q(zeta_lcm). Character values of the catalog groups all live in such fields,
// so every tau value computed from them is exact.

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/rational.hpp"

namespace wordlab {

namespace detail {

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
inline const std::vector<long long>& cyclotomic_polynomial(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<long long>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by every Phi_d, d | m, d < m.
  std::vector<long long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    // Exact division by a monic polynomial.
    std::size_t dn = den.size() - 1;
    std::vector<long long> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      long long c = num[i];
      quot[i - dn] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(num)).first->second;
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_{Rational(0)} {}
  Cyclotomic(const Rational& q) : order_(1), coeffs_{q} {}  // NOLINT
  Cyclotomic(long long q) : order_(1), coeffs_{Rational(q)} {}  // NOLINT

  // zeta_m^k.
  static Cyclotomic root_of_unity(int m, long long k) {
    if (m < 1) throw Error("root of unity order must be positive");
    long long e = ((k % m) + m) % m;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
    poly[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(m, std::move(poly));
  }

  // re + i*im.
  static Cyclotomic gaussian(const Rational& re, const Rational& im) {
    return Cyclotomic(re) + Cyclotomic(im) * root_of_unity(4, 1);
  }

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return false;
    }
    return true;
  }

  Rational rational() const {
    if (!is_rational()) throw InvariantViolation("cyclotomic value is not rational");
    return coeffs_[0];
  }

  // Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const {
    std::vector<Rational> poly(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      std::size_t e = (order_ - static_cast<int>(i)) % order_;
      poly[e] += coeffs_[i];
    }
    return Cyclotomic(order_, std::move(poly));
  }

  // Real and imaginary parts when the value lies in Q(i).
  bool gaussian_parts(Rational& re, Rational& im) const {
    Cyclotomic c = conj();
    Cyclotomic r = (*this + c) * Cyclotomic(Rational(1, 2));
    Cyclotomic j = (*this - c) * root_of_unity(4, 3) * Cyclotomic(Rational(1, 2));
    if (!r.is_rational() || !j.is_rational()) return false;
    re = r.rational();
    im = j.rational();
    return true;
  }

  std::complex<double> to_complex() const {
    std::complex<double> out = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
      out += to_double(coeffs_[i]) * std::polar(1.0, angle);
    }
    return out;
  }

  Cyclotomic lifted(int target) const {
    if (target % order_ != 0) throw Error("cyclotomic lift to a non-multiple order");
    if (target == order_) return *this;
    std::size_t step = static_cast<std::size_t>(target / order_);
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
    return Cyclotomic(target, std::move(poly));
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    x.shrink();
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic x = a;
    for (auto& c : x.coeffs_) c = -c;
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.order_ == 1) {
      Cyclotomic x = a;
      for (auto& c : x.coeffs_) c *= b.coeffs_[0];
      x.shrink();
      return x;
    }
    if (a.order_ == 1) return b * a;
    int m = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    std::vector<Rational> poly(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        poly[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return Cyclotomic(m, std::move(poly));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return (a - b).is_zero();
  }

 private:
  Cyclotomic(int m, std::vector<Rational> poly) : order_(m) {
    const auto& phi = detail::cyclotomic_polynomial(m);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
      if (poly[i] == 0) continue;
      Rational c = poly[i];
      for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg);
    if (poly.empty()) poly.emplace_back(0);
    coeffs_ = std::move(poly);
    shrink();
  }

  // Drop to Q when the value is rational; keeps orders from growing.
  void shrink() {
    if (order_ != 1 && is_rational()) {
      Rational c = coeffs_[0];
      order_ = 1;
      coeffs_.assign(1, c);
    }
  }

  int order_;
  std::vector<Rational> coeffs_;
};

// Exact "p/q" for rational values, otherwise "re+im*i" when in Q(i), otherwise
// a decimal approximation prefixed with "~".
inline std::string to_string(const Cyclotomic& z) {
  if (z.is_rational()) return to_string(z.rational());
  Rational re, im;
  if (z.gaussian_parts(re, im)) return to_string(re) + "+" + to_string(im) + "*i";
  auto c = z.to_complex();
  return "~" + std::to_string(c.real()) + "+" + std::to_string(c.imag()) + "*i";
}

}  // namespace wordlab
