#pragma once

// Polynomials in an auxiliary indeterminate t, used as coefficient domains
// for polynomials in x: Z[t] and Q[t].

#include <optional>
#include <vector>

#include "polydecomp/domains/integer.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

using IntPolyT = Polynomial<Integer>;
using RatPolyT = Polynomial<Rational>;

inline RatPolyT to_rational(const IntPolyT& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const Integer& c : p.coefficients()) v.emplace_back(c);
  return RatPolyT(std::move(v));
}

inline std::optional<IntPolyT> to_integral(const RatPolyT& p) {
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const Rational& c : p.coefficients()) {
    if (!is_integral(c)) return std::nullopt;
    v.emplace_back(c.get_num());
  }
  return IntPolyT(std::move(v));
}

}  // namespace polydecomp
