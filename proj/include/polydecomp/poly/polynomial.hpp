#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a pluggable coefficient domain.
 *
 * Coefficient i is the coefficient of x^i. The stored list is always
 * normalized: its last entry is nonzero, and the zero polynomial stores
 * nothing. A Polynomial<T> is itself a coefficient domain, so Z[t][x] is
 * Polynomial<Polynomial<Integer>>.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polydecomp/errors.hpp"
#include "polydecomp/poly/coefficient.hpp"
#include "polydecomp/poly/degree.hpp"

namespace polydecomp {

template <Ring T>
class Polynomial {
 public:
  using coefficient_type = T;

  Polynomial() = default;

  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  /// c * x^k
  static Polynomial monomial(const T& c, std::size_t k) {
    if (polydecomp::is_zero(c)) return Polynomial();
    std::vector<T> v(k + 1, polydecomp::zero_like(c));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  /// The indeterminate x over the domain of `like`.
  static Polynomial variable(const T& like) { return monomial(polydecomp::one_like(like), 1); }

  std::span<const T> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Degree degree() const {
    if (coeffs_.empty()) return Degree::minus_infinity();
    return Degree(coeffs_.size() - 1);
  }

  const T& leading_coefficient() const {
    require_nonzero("leading_coefficient");
    return coeffs_.back();
  }

  T constant_term() const { return coefficient(0); }

  /// Coefficient of x^i; zero past the degree. The zero polynomial has no
  /// domain to draw a zero from, so asking it throws.
  T coefficient(std::size_t i) const {
    require_nonzero("coefficient");
    if (i < coeffs_.size()) return coeffs_[i];
    return polydecomp::zero_like(coeffs_.back());
  }

  /// Any coefficient, used as a domain prototype.
  const T& prototype() const { return leading_coefficient(); }

  bool is_monic() const { return !coeffs_.empty() && polydecomp::is_one(coeffs_.back()); }

  Polynomial operator-() const {
    std::vector<T> v;
    v.reserve(coeffs_.size());
    for (const T& c : coeffs_) v.push_back(T(-c));
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), polydecomp::zero_like(rhs.coeffs_.back()));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] + rhs.coeffs_[i]);
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), polydecomp::zero_like(rhs.coeffs_.back()));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] - rhs.coeffs_[i]);
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<T> v(lhs.size() + rhs.size() - 1, polydecomp::zero_like(lhs.coeffs_.back()));
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (polydecomp::is_zero(lhs.coeffs_[i])) continue;
      for (std::size_t j = 0; j < rhs.size(); ++j) v[i + j] = T(v[i + j] + lhs.coeffs_[i] * rhs.coeffs_[j]);
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const T& c, const Polynomial& p) {
    std::vector<T> v;
    v.reserve(p.size());
    for (const T& x : p.coeffs_) v.push_back(T(c * x));
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& p, const T& c) { return c * p; }

  friend Polynomial operator+(Polynomial p, const T& c) { return p += constant(c); }
  friend Polynomial operator-(Polynomial p, const T& c) { return p -= constant(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && polydecomp::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  void require_nonzero(const char* what) const {
    if (coeffs_.empty()) throw PreconditionError(std::string(what) + " of the zero polynomial");
  }

  std::vector<T> coeffs_;
};

// Polynomials over a domain form a domain of the same tier, except that a
// polynomial ring is never a field.
template <Ring T>
struct coefficient_traits<Polynomial<T>> {
  static constexpr Tier tier = coefficient_traits<T>::tier >= Tier::QAlgebra ? Tier::QAlgebra : Tier::Ring;

  static Polynomial<T> zero_like(const Polynomial<T>&) { return {}; }
  static Polynomial<T> one_like(const Polynomial<T>& p) { return from_integer_like(p, 1); }
  static Polynomial<T> from_integer_like(const Polynomial<T>& p, std::int64_t n) {
    if (n == 0) return {};
    if (!p.is_zero()) return Polynomial<T>::constant(polydecomp::from_integer_like(p.prototype(), n));
    // A default-constructed T (Z, Q, nested polynomials) knows its domain.
    if constexpr (std::is_default_constructible_v<T>) {
      return Polynomial<T>::constant(polydecomp::from_integer_like(T(), n));
    } else {
      throw PreconditionError("the zero polynomial does not determine its coefficient domain");
    }
  }
  static bool is_zero(const Polynomial<T>& p) { return p.is_zero(); }

  static Polynomial<T> divide_by_integer(const Polynomial<T>& p, std::int64_t n)
    requires QAlgebra<T>
  {
    std::vector<T> v;
    v.reserve(p.size());
    for (const T& c : p.coefficients()) v.push_back(polydecomp::divide_by_integer(c, n));
    return Polynomial<T>(std::move(v));
  }
};

/// p^n by repeated squaring; p^0 needs a nonzero p to know the domain.
template <Ring T>
Polynomial<T> pow(const Polynomial<T>& p, std::size_t n) {
  if (n == 0) return Polynomial<T>::constant(one_like(p.prototype()));
  Polynomial<T> result;
  Polynomial<T> base = p;
  bool first = true;
  while (n > 0) {
    if (n & 1U) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

/// g(h(x)) by Horner's rule.
template <Ring T>
Polynomial<T> compose(const Polynomial<T>& g, const Polynomial<T>& h) {
  if (g.is_zero()) return {};
  auto coeffs = g.coefficients();
  Polynomial<T> acc = Polynomial<T>::constant(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * h + coeffs[i];
  return acc;
}

template <Ring T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.size() <= 1) return {};
  auto coeffs = p.coefficients();
  std::vector<T> v;
  v.reserve(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) v.push_back(scale(coeffs[i], static_cast<std::int64_t>(i)));
  return Polynomial<T>(std::move(v));
}

/// k-th derivative.
template <Ring T>
Polynomial<T> derivative(Polynomial<T> p, std::size_t k) {
  for (std::size_t i = 0; i < k && !p.is_zero(); ++i) p = derivative(p);
  return p;
}

template <Ring T>
T eval(const Polynomial<T>& p, const T& x0) {
  T acc = zero_like(x0);
  auto coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = T(acc * x0 + coeffs[i]);
  return acc;
}

template <Ring T>
struct DivRem {
  Polynomial<T> quotient;
  Polynomial<T> remainder;
};

/// Division with remainder by a monic divisor; exact over any ring.
template <Ring T>
DivRem<T> divrem_monic(const Polynomial<T>& f, const Polynomial<T>& h) {
  if (!h.is_monic() || h.size() < 2) throw PreconditionError("divrem_monic: divisor must be monic of degree >= 1");
  const std::size_t dh = h.size() - 1;
  if (f.size() <= dh) return {Polynomial<T>(), f};

  std::vector<T> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<T> quot(rem.size() - dh, zero_like(h.prototype()));
  auto hc = h.coefficients();
  for (std::size_t k = rem.size(); k-- > dh;) {
    const T q = rem[k];
    if (is_zero(q)) continue;
    quot[k - dh] = q;
    for (std::size_t j = 0; j <= dh; ++j) rem[k - dh + j] = T(rem[k - dh + j] - q * hc[j]);
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dh), rem.end());
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Digits a_0..a_k with deg a_i < deg h and f = sum a_i h^i. Zero f has no digits.
template <Ring T>
std::vector<Polynomial<T>> hadic_digits(Polynomial<T> f, const Polynomial<T>& h) {
  std::vector<Polynomial<T>> digits;
  while (!f.is_zero()) {
    auto [q, r] = divrem_monic(f, h);
    digits.push_back(std::move(r));
    f = std::move(q);
  }
  return digits;
}

/// Inverse of hadic_digits: sum digits[i] * h^i.
template <Ring T>
Polynomial<T> from_hadic_digits(const std::vector<Polynomial<T>>& digits, const Polynomial<T>& h) {
  Polynomial<T> acc;
  for (std::size_t i = digits.size(); i-- > 0;) acc = acc * h + digits[i];
  return acc;
}

/// Coefficientwise map between coefficient domains.
template <class To, class From, class Fn>
Polynomial<To> map_coefficients(const Polynomial<From>& p, Fn&& fn) {
  std::vector<To> v;
  v.reserve(p.size());
  for (const From& c : p.coefficients()) v.push_back(fn(c));
  return Polynomial<To>(std::move(v));
}

/// Coefficientwise partial map; empty if any coefficient fails to map.
template <class To, class From, class Fn>
std::optional<Polynomial<To>> try_map_coefficients(const Polynomial<From>& p, Fn&& fn) {
  std::vector<To> v;
  v.reserve(p.size());
  for (const From& c : p.coefficients()) {
    std::optional<To> m = fn(c);
    if (!m) return std::nullopt;
    v.push_back(std::move(*m));
  }
  return Polynomial<To>(std::move(v));
}

}  // namespace polydecomp
