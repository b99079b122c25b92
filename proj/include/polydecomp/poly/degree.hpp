#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>

#include "polydecomp/errors.hpp"

namespace polydecomp {

/// Polynomial degree: a natural number, or minus infinity for the zero polynomial.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(std::size_t n) : value_(n) {}

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const { return value_.has_value(); }

  std::size_t value() const {
    if (!value_) throw PreconditionError("degree of the zero polynomial is minus infinity");
    return *value_;
  }

  // minus infinity compares below every finite degree
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.value_ && b.value_) return *a.value_ <=> *b.value_;
    return a.value_.has_value() <=> b.value_.has_value();
  }
  friend constexpr bool operator==(const Degree&, const Degree&) = default;

  friend constexpr bool operator==(const Degree& a, std::size_t n) { return a.value_ && *a.value_ == n; }

  /// Degree of a product.
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return Degree();
    return Degree(*a.value_ + *b.value_);
  }

  /// Degree of a composition of nonzero polynomials.
  friend constexpr Degree operator*(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return Degree();
    return Degree(*a.value_ * *b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Degree& d) {
    if (d.value_) return os << *d.value_;
    return os << "-inf";
  }

 private:
  std::optional<std::size_t> value_;
};

}  // namespace polydecomp
