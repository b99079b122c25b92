#pragma once

// Text rendering in the CLI expression grammar, e.g. "(1+w)*x^2-3/2*x+7".
// Nested polynomial coefficients use the indeterminate t.

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "polydecomp/domains/integer.hpp"
#include "polydecomp/domains/quadratic.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

template <Ring T>
std::string to_string(const Polynomial<T>& p, std::string_view var = "x");

namespace detail {

template <class T>
std::string coefficient_text(const T& c) {
  return to_string(c);
}

template <Ring T>
std::string coefficient_text(const Polynomial<T>& c) {
  return to_string(c, "t");
}

inline bool is_compound(const std::string& s) {
  const std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  return s.find_first_of("+-", start) != std::string::npos;
}

}  // namespace detail

template <Ring T>
std::string to_string(const Polynomial<T>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  auto coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (is_zero(coeffs[k])) continue;
    std::string c = detail::coefficient_text(coeffs[k]);
    std::string term;
    if (k == 0) {
      term = c;
    } else {
      std::string power(var);
      if (k > 1) power += "^" + std::to_string(k);
      if (c == "1")
        term = power;
      else if (c == "-1")
        term = "-" + power;
      else if (detail::is_compound(c))
        term = "(" + c + ")*" + power;
      else
        term = c + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

template <Ring T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
  return os << to_string(p);
}

}  // namespace polydecomp
