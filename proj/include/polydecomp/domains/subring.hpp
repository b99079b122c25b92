#pragma once

/**
 * @file subring.hpp
 * @brief Named subrings R of an ambient domain A with exact membership tests.
 *
 * Z[t^2, t^3] is the set of integer polynomials in t without a t^1 term:
 * it contains 1, t^2, t^3, and every t^k with k >= 2 is a product of t^2 and
 * t^3; conversely products and sums of such polynomials never create a t^1
 * term. Q.Z[t^2, t^3] is the same set with rational coefficients.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "polydecomp/domains/integer.hpp"
#include "polydecomp/domains/poly_t.hpp"
#include "polydecomp/domains/quadratic.hpp"
#include "polydecomp/errors.hpp"

namespace polydecomp {

class SubringDescriptor {
 public:
  enum class Kind {
    IntegersInRationals,    // Z in Q
    OrderInQuadraticField,  // O_d in Q(sqrt d)
    Zt23InZt,               // Z[t^2,t^3] in Z[t]
    QZt23InQt,              // Q.Z[t^2,t^3] in Q[t]
    RationalSpan,           // Q.R for a base descriptor R
  };

  static SubringDescriptor integers_in_rationals() { return SubringDescriptor(Kind::IntegersInRationals); }
  static SubringDescriptor order_in_field(const QuadraticRing& ring) {
    SubringDescriptor s(Kind::OrderInQuadraticField);
    s.ring_ = ring;
    return s;
  }
  static SubringDescriptor zt23_in_zt() { return SubringDescriptor(Kind::Zt23InZt); }
  static SubringDescriptor qzt23_in_qt() { return SubringDescriptor(Kind::QZt23InQt); }
  static SubringDescriptor rational_span(const SubringDescriptor& base) {
    if (base.kind_ == Kind::RationalSpan) return base;
    SubringDescriptor s(Kind::RationalSpan);
    s.base_ = std::make_shared<const SubringDescriptor>(base);
    return s;
  }

  Kind kind() const { return kind_; }

  std::string name() const {
    switch (kind_) {
      case Kind::IntegersInRationals: return "Z_in_Q";
      case Kind::OrderInQuadraticField: return "O_d_in_QsqrtD(d=" + std::to_string(ring_->d()) + ")";
      case Kind::Zt23InZt: return "Zt23_in_Zt";
      case Kind::QZt23InQt: return "QZt23_in_Qt";
      case Kind::RationalSpan: return "QtimesR_of(" + base_->name() + ")";
    }
    return "?";
  }

  bool contains(const Rational& x) const {
    switch (kind_) {
      case Kind::IntegersInRationals: return is_integral(x);
      case Kind::RationalSpan:
        if (base_->kind_ == Kind::IntegersInRationals) return true;  // Q.Z = Q
        break;
      default: break;
    }
    throw mismatch("Q");
  }

  bool contains(const QuadraticRat& x) const {
    const QuadraticRing* ring = nullptr;
    if (kind_ == Kind::OrderInQuadraticField) ring = &*ring_;
    if (kind_ == Kind::RationalSpan && base_->kind_ == Kind::OrderInQuadraticField) ring = &*base_->ring_;
    if (ring == nullptr) throw mismatch(x.ring().field_name());
    require_same_ring(*ring, x.ring());
    if (kind_ == Kind::RationalSpan) return true;  // Q.O_d = Q(sqrt d)
    return x.in_order().has_value();
  }

  bool contains(const IntPolyT& x) const {
    if (kind_ != Kind::Zt23InZt) throw mismatch("Z[t]");
    return x.size() < 2 || x.coefficients()[1] == 0;
  }

  bool contains(const RatPolyT& x) const {
    const bool qzt23 = kind_ == Kind::QZt23InQt || (kind_ == Kind::RationalSpan && base_->kind_ == Kind::Zt23InZt);
    if (!qzt23) throw mismatch("Q[t]");
    return x.size() < 2 || x.coefficients()[1] == 0;
  }

 private:
  explicit SubringDescriptor(Kind kind) : kind_(kind) {}

  DomainMismatch mismatch(const std::string& ambient) const {
    return DomainMismatch("subring " + name() + " does not live in ambient " + ambient);
  }

  Kind kind_;
  std::optional<QuadraticRing> ring_;
  std::shared_ptr<const SubringDescriptor> base_;
};

}  // namespace polydecomp
