#pragma once

// Per-ring adapters for the command line. Each adapter names the ring type R,
// the Q-algebra A it is parsed in, and the conversions between them.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "polydecomp/cli/parser.hpp"
#include "polydecomp/cli/ring_spec.hpp"
#include "polydecomp/domains/order.hpp"
#include "polydecomp/domains/poly_t.hpp"
#include "polydecomp/domains/quadratic.hpp"
#include "polydecomp/domains/subring.hpp"
#include "polydecomp/format.hpp"

namespace polydecomp::cli {

using Json = nlohmann::ordered_json;

// Coefficients as coordinate pairs [a, b] meaning a + b*w (w = sqrt(d)),
// exact rationals as strings. Coefficients in Z[t]-style rings are arrays
// of t-coefficients, ascending.
inline Json coefficient_json(const Integer& x) { return Json::array({x.get_str(), "0"}); }
inline Json coefficient_json(const Rational& x) { return Json::array({x.get_str(), "0"}); }
inline Json coefficient_json(const QuadraticRat& x) { return Json::array({x.x().get_str(), x.y().get_str()}); }
inline Json coefficient_json(const QuadraticInt& x) { return coefficient_json(x.to_field()); }

template <class T>
Json coefficient_json(const Polynomial<T>& p) {
  Json out = Json::array();
  for (const T& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

/// Polynomial in x as an ascending array of coefficients.
template <Ring T>
Json polynomial_json(const Polynomial<T>& p) {
  Json out = Json::array();
  for (const T& c : p.coefficients()) out.push_back(coefficient_json(c));
  return out;
}

template <class R, class A>
struct DomainBase {
  using Ring = R;
  using Ambient = A;
  RingSpec spec;

  std::string ring_name() const { return spec.name(); }
  std::string ambient_name() const { return spec.ambient_name(); }
};

struct IntegerDomain : DomainBase<Integer, Rational> {
  Symbols<Rational> symbols() const { return {[](const Rational& r) { return r; }, {}, {}, ring_name()}; }
  static Rational lift(const Integer& x) { return Rational(x); }
  static std::optional<Integer> lower(const Rational& x) { return order_traits<Integer>::from_field(x); }
};

struct RationalDomain : DomainBase<Rational, Rational> {
  Symbols<Rational> symbols() const { return {[](const Rational& r) { return r; }, {}, {}, ring_name()}; }
  static Rational lift(const Rational& x) { return x; }
  static std::optional<Rational> lower(const Rational& x) { return x; }
};

struct OrderDomain : DomainBase<QuadraticInt, QuadraticRat> {
  Symbols<QuadraticRat> symbols() const {
    const QuadraticRing r = *spec.quadratic;
    return {[r](const Rational& x) { return QuadraticRat(r, x); }, {}, QuadraticRat::sqrt_d(r), ring_name()};
  }
  static QuadraticRat lift(const QuadraticInt& x) { return x.to_field(); }
  static std::optional<QuadraticInt> lower(const QuadraticRat& x) { return x.in_order(); }
};

struct QuadraticFieldDomain : DomainBase<QuadraticRat, QuadraticRat> {
  Symbols<QuadraticRat> symbols() const {
    const QuadraticRing r = *spec.quadratic;
    return {[r](const Rational& x) { return QuadraticRat(r, x); }, {}, QuadraticRat::sqrt_d(r), ring_name()};
  }
  static QuadraticRat lift(const QuadraticRat& x) { return x; }
  static std::optional<QuadraticRat> lower(const QuadraticRat& x) { return x; }
};

/// Z[t] and Z[t^2,t^3], both parsed in Q[t].
struct IntPolyTDomain : DomainBase<IntPolyT, RatPolyT> {
  Symbols<RatPolyT> symbols() const {
    return {[](const Rational& r) { return RatPolyT::constant(r); }, RatPolyT::variable(Rational(1)), {}, ring_name()};
  }
  static RatPolyT lift(const IntPolyT& x) { return to_rational(x); }
  std::optional<IntPolyT> lower(const RatPolyT& x) const {
    auto r = to_integral(x);
    if (r && spec.kind == RingKind::Zt23 && !SubringDescriptor::zt23_in_zt().contains(*r)) return std::nullopt;
    return r;
  }
};

struct RatPolyTDomain : DomainBase<RatPolyT, RatPolyT> {
  Symbols<RatPolyT> symbols() const {
    return {[](const Rational& r) { return RatPolyT::constant(r); }, RatPolyT::variable(Rational(1)), {}, ring_name()};
  }
  static RatPolyT lift(const RatPolyT& x) { return x; }
  static std::optional<RatPolyT> lower(const RatPolyT& x) { return x; }
};

/// Parses `text` as a polynomial in x with coefficients in the domain's ring.
template <class D>
Polynomial<typename D::Ring> parse_poly(const D& dom, std::string_view text) {
  const ExprPtr ast = parse_expression(text);
  const auto ambient = lower(*ast, dom.symbols());
  auto ring = try_map_coefficients<typename D::Ring>(ambient, [&](const typename D::Ambient& c) { return dom.lower(c); });
  if (!ring) {
    for (const auto& c : ambient.coefficients())
      if (!dom.lower(c))
        throw PreconditionError("coefficient " + polydecomp::detail::coefficient_text(c) + " of '" + std::string(text) +
                                "' is not in " + dom.ring_name());
  }
  return std::move(*ring);
}

/// Parses an x-free expression as a single ring element.
template <class D>
typename D::Ring parse_element(const D& dom, std::string_view text) {
  auto p = parse_poly(dom, text);
  if (!p.is_constant()) throw PreconditionError("'" + std::string(text) + "' must not contain x");
  if (p.is_zero()) return dom.lower(dom.symbols().constant(Rational(0))).value();
  return p.constant_term();
}

template <class D>
Polynomial<typename D::Ambient> lift_poly(const D& dom, const Polynomial<typename D::Ring>& p) {
  return map_coefficients<typename D::Ambient>(p, [&](const typename D::Ring& c) { return dom.lift(c); });
}

/// Calls fn with the adapter matching the descriptor.
template <class Fn>
decltype(auto) with_domain(const RingSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case RingKind::Z: return fn(IntegerDomain{{spec}});
    case RingKind::Q: return fn(RationalDomain{{spec}});
    case RingKind::Order: return fn(OrderDomain{{spec}});
    case RingKind::QuadraticField: return fn(QuadraticFieldDomain{{spec}});
    case RingKind::Zt:
    case RingKind::Zt23: return fn(IntPolyTDomain{{spec}});
    case RingKind::Qt: return fn(RatPolyTDomain{{spec}});
  }
  throw std::logic_error("with_domain: unknown ring kind");
}

}  // namespace polydecomp::cli
