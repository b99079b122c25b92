#pragma once

/**
 * @file quadratic.hpp
 * @brief Imaginary-quadratic orders O_d and their fraction fields Q(sqrt(d)).
 *
 * A ring element is stored in the integral basis of its order:
 *   SqrtBasis  a + b*sqrt(d)          (d = 2, 3 mod 4)
 *   HalfBasis  a + b*(1 + sqrt(d))/2  (d = 1 mod 4)
 * Field elements are always stored as x + y*sqrt(d) with rational x, y.
 *
 * Only d < 0 is supported: the norm is then positive definite, which makes
 * the norm equation finite and divisor enumeration complete.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polydecomp/domains/integer.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/poly/coefficient.hpp"

namespace polydecomp {

enum class QuadraticBasis { Sqrt, Half };

class QuadraticRing {
 public:
  /// The maximal order of Q(sqrt(d)), d < 0 squarefree.
  static QuadraticRing imaginary(std::int64_t d) {
    return QuadraticRing(d, mod4(d) == 1 ? QuadraticBasis::Half : QuadraticBasis::Sqrt);
  }

  QuadraticRing(std::int64_t d, QuadraticBasis basis) : d_(d), basis_(basis) {
    if (d >= 0) throw PreconditionError("only imaginary quadratic rings (d < 0) are supported, got d = " + std::to_string(d));
    if (!squarefree(-d)) throw PreconditionError("d must be squarefree, got d = " + std::to_string(d));
    const bool half_ok = mod4(d) == 1;
    if ((basis == QuadraticBasis::Half) != half_ok)
      throw PreconditionError(half_ok ? "d = 1 mod 4 requires the half-integer basis (1+sqrt(d))/2"
                                      : "the half-integer basis requires d = 1 mod 4");
  }

  std::int64_t d() const { return d_; }
  QuadraticBasis basis() const { return basis_; }

  /// Ring descriptor, e.g. "Z[sqrt(-5)]" or "O(-3)".
  std::string name() const {
    if (basis_ == QuadraticBasis::Sqrt) return "Z[sqrt(" + std::to_string(d_) + ")]";
    return "O(" + std::to_string(d_) + ")";
  }

  /// Fraction field descriptor, e.g. "Q(sqrt(-5))".
  std::string field_name() const { return "Q(sqrt(" + std::to_string(d_) + "))"; }

  friend bool operator==(const QuadraticRing&, const QuadraticRing&) = default;

 private:
  static int mod4(std::int64_t d) { return static_cast<int>(((d % 4) + 4) % 4); }

  static bool squarefree(std::int64_t n) {
    for (std::int64_t p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  }

  std::int64_t d_;
  QuadraticBasis basis_;
};

inline void require_same_ring(const QuadraticRing& x, const QuadraticRing& y) {
  if (!(x == y)) throw DomainMismatch("mixed quadratic rings " + x.name() + " and " + y.name());
}

class QuadraticRat;

/// Element of an imaginary-quadratic order.
class QuadraticInt {
 public:
  QuadraticInt(QuadraticRing ring, Integer a, Integer b = Integer(0))
      : ring_(ring), a_(std::move(a)), b_(std::move(b)) {}

  /// sqrt(d) as a ring element.
  static QuadraticInt sqrt_d(const QuadraticRing& ring) {
    if (ring.basis() == QuadraticBasis::Sqrt) return {ring, Integer(0), Integer(1)};
    return {ring, Integer(-1), Integer(2)};  // 2*omega - 1
  }

  const QuadraticRing& ring() const { return ring_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  QuadraticInt conjugate() const {
    if (ring_.basis() == QuadraticBasis::Sqrt) return {ring_, a_, Integer(-b_)};
    return {ring_, Integer(a_ + b_), Integer(-b_)};  // conj(omega) = 1 - omega
  }

  inline QuadraticRat to_field() const;

  QuadraticInt operator-() const { return {ring_, Integer(-a_), Integer(-b_)}; }

  friend QuadraticInt operator+(const QuadraticInt& x, const QuadraticInt& y) {
    require_same_ring(x.ring_, y.ring_);
    return {x.ring_, Integer(x.a_ + y.a_), Integer(x.b_ + y.b_)};
  }

  friend QuadraticInt operator-(const QuadraticInt& x, const QuadraticInt& y) {
    require_same_ring(x.ring_, y.ring_);
    return {x.ring_, Integer(x.a_ - y.a_), Integer(x.b_ - y.b_)};
  }

  friend QuadraticInt operator*(const QuadraticInt& x, const QuadraticInt& y) {
    require_same_ring(x.ring_, y.ring_);
    const Integer d = make_integer(x.ring_.d());
    const Integer bb = x.b_ * y.b_;
    if (x.ring_.basis() == QuadraticBasis::Sqrt)
      return {x.ring_, Integer(x.a_ * y.a_ + d * bb), Integer(x.a_ * y.b_ + x.b_ * y.a_)};
    // omega^2 = omega + (d - 1)/4
    const Integer k = (d - 1) / 4;
    return {x.ring_, Integer(x.a_ * y.a_ + k * bb), Integer(x.a_ * y.b_ + x.b_ * y.a_ + bb)};
  }

  friend bool operator==(const QuadraticInt& x, const QuadraticInt& y) {
    return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Lexicographic order on basis coordinates.
  friend bool lex_less(const QuadraticInt& x, const QuadraticInt& y) {
    return std::tie(x.a_, x.b_) < std::tie(y.a_, y.b_);
  }

 private:
  QuadraticRing ring_;
  Integer a_;
  Integer b_;
};

/// Element x + y*sqrt(d) of Q(sqrt(d)).
class QuadraticRat {
 public:
  QuadraticRat(QuadraticRing ring, Rational x, Rational y = Rational(0))
      : ring_(ring), x_(std::move(x)), y_(std::move(y)) {}

  static QuadraticRat sqrt_d(const QuadraticRing& ring) { return {ring, Rational(0), Rational(1)}; }

  const QuadraticRing& ring() const { return ring_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  QuadraticRat conjugate() const { return {ring_, x_, Rational(-y_)}; }

  Rational norm() const { return Rational(x_ * x_ - Rational(make_integer(ring_.d())) * y_ * y_); }

  bool is_zero() const { return x_ == 0 && y_ == 0; }

  QuadraticRat inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    const Rational n = norm();
    return {ring_, Rational(x_ / n), Rational(-y_ / n)};
  }

  /// The element as a member of the order, if it is one.
  std::optional<QuadraticInt> in_order() const {
    if (ring_.basis() == QuadraticBasis::Sqrt) {
      if (!is_integral(x_) || !is_integral(y_)) return std::nullopt;
      return QuadraticInt(ring_, Integer(x_.get_num()), Integer(y_.get_num()));
    }
    // x + y sqrt(d) = (x - y) + 2y * omega
    const Rational b = 2 * y_;
    const Rational a = x_ - y_;
    if (!is_integral(a) || !is_integral(b)) return std::nullopt;
    return QuadraticInt(ring_, Integer(a.get_num()), Integer(b.get_num()));
  }

  QuadraticRat operator-() const { return {ring_, Rational(-x_), Rational(-y_)}; }

  friend QuadraticRat operator+(const QuadraticRat& p, const QuadraticRat& q) {
    require_same_ring(p.ring_, q.ring_);
    return {p.ring_, Rational(p.x_ + q.x_), Rational(p.y_ + q.y_)};
  }

  friend QuadraticRat operator-(const QuadraticRat& p, const QuadraticRat& q) {
    require_same_ring(p.ring_, q.ring_);
    return {p.ring_, Rational(p.x_ - q.x_), Rational(p.y_ - q.y_)};
  }

  friend QuadraticRat operator*(const QuadraticRat& p, const QuadraticRat& q) {
    require_same_ring(p.ring_, q.ring_);
    const Rational d(make_integer(p.ring_.d()));
    return {p.ring_, Rational(p.x_ * q.x_ + d * p.y_ * q.y_), Rational(p.x_ * q.y_ + p.y_ * q.x_)};
  }

  friend QuadraticRat operator/(const QuadraticRat& p, const QuadraticRat& q) { return p * q.inverse(); }

  friend bool operator==(const QuadraticRat& p, const QuadraticRat& q) {
    return p.ring_ == q.ring_ && p.x_ == q.x_ && p.y_ == q.y_;
  }

 private:
  QuadraticRing ring_;
  Rational x_;
  Rational y_;
};

inline QuadraticRat QuadraticInt::to_field() const {
  if (ring_.basis() == QuadraticBasis::Sqrt) return {ring_, Rational(a_), Rational(b_)};
  // a + b (1 + sqrt d)/2
  const Rational half_b = make_rational(b_, Integer(2));
  return {ring_, Rational(Rational(a_) + half_b), half_b};
}

template <>
struct coefficient_traits<QuadraticInt> {
  static constexpr Tier tier = Tier::Ring;
  static QuadraticInt zero_like(const QuadraticInt& x) { return {x.ring(), Integer(0)}; }
  static QuadraticInt one_like(const QuadraticInt& x) { return {x.ring(), Integer(1)}; }
  static QuadraticInt from_integer_like(const QuadraticInt& x, std::int64_t n) { return {x.ring(), make_integer(n)}; }
  static bool is_zero(const QuadraticInt& x) { return x.a() == 0 && x.b() == 0; }
};

template <>
struct coefficient_traits<QuadraticRat> {
  static constexpr Tier tier = Tier::Field;
  static QuadraticRat zero_like(const QuadraticRat& x) { return {x.ring(), Rational(0)}; }
  static QuadraticRat one_like(const QuadraticRat& x) { return {x.ring(), Rational(1)}; }
  static QuadraticRat from_integer_like(const QuadraticRat& x, std::int64_t n) {
    return {x.ring(), Rational(make_integer(n))};
  }
  static bool is_zero(const QuadraticRat& x) { return x.is_zero(); }
  static QuadraticRat divide_by_integer(const QuadraticRat& x, std::int64_t n) {
    if (n == 0) throw PreconditionError("division by zero");
    const Rational r(make_integer(n));
    return {x.ring(), Rational(x.x() / r), Rational(x.y() / r)};
  }
  static QuadraticRat inverse(const QuadraticRat& x) { return x.inverse(); }
};

/// N(x) = x * conj(x), a nonnegative integer since d < 0.
inline Integer norm(const QuadraticInt& x) {
  const Integer d = make_integer(x.ring().d());
  if (x.ring().basis() == QuadraticBasis::Sqrt) return Integer(x.a() * x.a() - d * x.b() * x.b());
  // a^2 + ab + b^2 (1 - d)/4
  return Integer(x.a() * x.a() + x.a() * x.b() + x.b() * x.b() * ((1 - d) / 4));
}

/// q with y = q*x, if q lies in the order.
inline std::optional<QuadraticInt> divides_exact(const QuadraticInt& x, const QuadraticInt& y) {
  require_same_ring(x.ring(), y.ring());
  if (is_zero(x)) throw PreconditionError("divides_exact: zero divisor");
  const Integer n = norm(x);
  const QuadraticInt t = y * x.conjugate();
  auto qa = divides_exact(n, t.a());
  auto qb = divides_exact(n, t.b());
  if (!qa || !qb) return std::nullopt;
  return QuadraticInt(x.ring(), std::move(*qa), std::move(*qb));
}

inline bool divides(const QuadraticInt& x, const QuadraticInt& y) { return divides_exact(x, y).has_value(); }

inline bool is_unit(const QuadraticInt& x) { return norm(x) == 1; }

inline bool are_associates(const QuadraticInt& x, const QuadraticInt& y) {
  require_same_ring(x.ring(), y.ring());
  if (is_zero(x) || is_zero(y)) return is_zero(x) && is_zero(y);
  return divides(x, y) && divides(y, x);
}

/// All elements of norm k, sorted by basis coordinates. Complete because d < 0.
inline std::vector<QuadraticInt> elements_of_norm(const Integer& k, const QuadraticRing& ring) {
  std::vector<QuadraticInt> out;
  if (k <= 0) {
    if (k == 0) out.emplace_back(ring, Integer(0));
    return out;
  }
  const Integer abs_d = make_integer(-ring.d());
  if (ring.basis() == QuadraticBasis::Sqrt) {
    // a^2 + |d| b^2 = k
    const Integer b_max = isqrt(Integer(k / abs_d));
    for (Integer b = -b_max; b <= b_max; ++b) {
      auto s = exact_sqrt(Integer(k - abs_d * b * b));
      if (!s) continue;
      out.emplace_back(ring, *s, b);
      if (*s != 0) out.emplace_back(ring, Integer(-*s), b);
    }
  } else {
    // (2a + b)^2 + |d| b^2 = 4k
    const Integer four_k = 4 * k;
    const Integer b_max = isqrt(Integer(four_k / abs_d));
    for (Integer b = -b_max; b <= b_max; ++b) {
      auto s = exact_sqrt(Integer(four_k - abs_d * b * b));
      if (!s) continue;
      for (const Integer& t : {Integer(*s), Integer(-*s)}) {
        const Integer twice_a = t - b;
        if (!mpz_even_p(twice_a.get_mpz_t())) continue;
        out.emplace_back(ring, Integer(twice_a / 2), b);
        if (*s == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadraticInt& x, const QuadraticInt& y) { return lex_less(x, y); });
  return out;
}

inline std::vector<QuadraticInt> units(const QuadraticRing& ring) { return elements_of_norm(Integer(1), ring); }

/// Representative of the associate class of x: the lexicographically greatest
/// (a, b) among its unit multiples, so units map to 1 and 2 maps to 2.
inline QuadraticInt associate_representative(const QuadraticInt& x) {
  QuadraticInt best = x;
  for (const QuadraticInt& u : units(x.ring())) {
    QuadraticInt candidate = u * x;
    if (lex_less(best, candidate)) best = std::move(candidate);
  }
  return best;
}

inline constexpr std::int64_t kDefaultDivisorNormBound = 1000000;

/// One representative per associate class of divisors of x, ordered by
/// ascending norm and then by basis coordinates.
inline std::vector<QuadraticInt> divisors_up_to_associates(const QuadraticInt& x,
                                                           std::int64_t norm_bound = kDefaultDivisorNormBound) {
  if (is_zero(x)) throw PreconditionError("divisors of zero");
  const Integer n = norm(x);
  if (n > make_integer(norm_bound))
    throw PreconditionError("divisor search: norm " + n.get_str() + " exceeds bound " + std::to_string(norm_bound));
  std::vector<QuadraticInt> out;
  for (const Integer& k : positive_divisors(n)) {
    for (const QuadraticInt& e : elements_of_norm(k, x.ring())) {
      if (!(associate_representative(e) == e)) continue;
      if (divides(e, x)) out.push_back(e);
    }
  }
  return out;
}

/// Irreducible: nonzero nonunit whose only divisors are units and associates.
inline bool is_irreducible(const QuadraticInt& x) {
  if (is_zero(x)) throw PreconditionError("is_irreducible: zero");
  if (is_unit(x)) throw PreconditionError("is_irreducible: unit");
  // one class of units, one class of associates of x
  return divisors_up_to_associates(x).size() == 2;
}

/// y in Q(sqrt(d)) with y^2 = x, if one exists. Solves
/// (p + q sqrt d)^2 = x0 + y0 sqrt d coordinatewise; the returned root has
/// p > 0, or p = 0 and q > 0.
inline std::optional<QuadraticRat> integral_sqrt_descent(const QuadraticRat& x) {
  const QuadraticRing& ring = x.ring();
  if (x.is_zero()) return x;
  const Rational d(make_integer(ring.d()));
  auto accept = [&](const Rational& p, const Rational& q) -> std::optional<QuadraticRat> {
    QuadraticRat r(ring, p, q);
    if (!(r * r == x)) return std::nullopt;
    if (p < 0 || (p == 0 && q < 0)) r = -r;
    return r;
  };
  if (x.y() == 0) {
    // q = 0: p^2 = x0, or p = 0: d q^2 = x0
    if (auto p = exact_sqrt(x.x())) return accept(*p, Rational(0));
    if (auto q = exact_sqrt(Rational(x.x() / d))) return accept(Rational(0), *q);
    return std::nullopt;
  }
  // p != 0, q = y0 / 2p, and p^2 = (x0 +- sqrt(N(x))) / 2
  auto s = exact_sqrt(x.norm());
  if (!s) return std::nullopt;
  for (const Rational& p2 : {Rational((x.x() + *s) / 2), Rational((x.x() - *s) / 2)}) {
    if (p2 <= 0) continue;
    if (auto p = exact_sqrt(p2)) {
      if (auto r = accept(*p, Rational(x.y() / (2 * *p)))) return r;
    }
  }
  return std::nullopt;
}

/// "a", "a+b*w", "b*w" with w = sqrt(d); rationals render as p/q.
inline std::string to_string(const QuadraticRat& v) {
  auto coef_w = [](const Rational& y) -> std::string {
    if (y == 1) return "w";
    if (y == -1) return "-w";
    return y.get_str() + "*w";
  };
  if (v.y() == 0) return v.x().get_str();
  if (v.x() == 0) return coef_w(v.y());
  std::string w = coef_w(v.y());
  if (w.front() != '-') w = "+" + w;
  return v.x().get_str() + w;
}

inline std::string to_string(const QuadraticInt& v) { return to_string(v.to_field()); }

}  // namespace polydecomp
