#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "polydecomp/polydecomp.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

using namespace polydecomp;
using pdtest::Gen;
using pdtest::qi;
using pdtest::z5;
using pdtest::zpoly;

std::vector<std::pair<long, long>> coords(const std::vector<QuadraticInt>& xs) {
  std::vector<std::pair<long, long>> out;
  for (const auto& x : xs) out.emplace_back(x.a().get_si(), x.b().get_si());
  return out;
}

TEST(QuadraticRing, RejectsUnsupportedParameters) {
  EXPECT_THROW(QuadraticRing::imaginary(5), PreconditionError);
  EXPECT_THROW(QuadraticRing::imaginary(2), PreconditionError);
  EXPECT_THROW(QuadraticRing::imaginary(-4), PreconditionError);
  EXPECT_THROW(QuadraticRing::imaginary(-12), PreconditionError);
  EXPECT_THROW(QuadraticRing(-3, QuadraticBasis::Sqrt), PreconditionError);
  EXPECT_THROW(QuadraticRing(-5, QuadraticBasis::Half), PreconditionError);
  EXPECT_EQ(QuadraticRing::imaginary(-3).basis(), QuadraticBasis::Half);
  EXPECT_EQ(QuadraticRing::imaginary(-5).name(), "Z[sqrt(-5)]");
  EXPECT_EQ(QuadraticRing::imaginary(-15).name(), "O(-15)");
}

TEST(QuadraticInt, HalfBasisArithmetic) {
  const auto R = QuadraticRing::imaginary(-3);
  const QuadraticInt omega(R, Integer(0), Integer(1));  // (1 + sqrt(-3))/2
  // omega^2 = omega - 1 when d = -3
  EXPECT_EQ(omega * omega, QuadraticInt(R, Integer(-1), Integer(1)));
  EXPECT_EQ(omega.to_field(), QuadraticRat(R, make_rational(1, 2), make_rational(1, 2)));
  EXPECT_EQ(QuadraticInt::sqrt_d(R).to_field(), QuadraticRat::sqrt_d(R));
  EXPECT_EQ(norm(omega), Integer(1));
  EXPECT_EQ(units(R).size(), 6u);
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm(qi(1, 1)), Integer(6));
  EXPECT_EQ(norm(qi(2, 0)), Integer(4));
  EXPECT_EQ(norm(qi(0, 0)), Integer(0));
}

TEST(Norm, MultiplicativeAndMatchesDefinition) {
  Gen gen(21);
  for (long d : {-5L, -1L, -3L, -15L}) {
    const auto R = QuadraticRing::imaginary(d);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = gen.quad_int(R, 30);
      const auto y = gen.quad_int(R, 30);
      ASSERT_EQ(norm(x * y), norm(x) * norm(y));
      ASSERT_EQ(Rational(norm(x)), pdtest::norm_by_definition(x));
      ASSERT_GE(norm(x), 0);
    }
  }
}

TEST(DividesExact, Examples) {
  EXPECT_EQ(divides_exact(qi(2, 0), qi(6, 0)), qi(3, 0));
  EXPECT_FALSE(divides_exact(qi(2, 0), qi(1, 1)).has_value());
  // (1 - sqrt(-5))^2 = -4 - 2 sqrt(-5)
  EXPECT_EQ(qi(1, -1) * qi(1, -1), qi(-4, -2));
  EXPECT_EQ(divides_exact(qi(1, -1), qi(-4, -2)), qi(1, -1));
  EXPECT_THROW(divides_exact(qi(0, 0), qi(1, 0)), PreconditionError);
}

TEST(DividesExact, QuotientReconstructs) {
  Gen gen(22);
  for (long d : {-5L, -15L}) {
    const auto R = QuadraticRing::imaginary(d);
    for (int trial = 0; trial < 500; ++trial) {
      const auto x = gen.nonzero_quad_int(R, 6);
      const auto y = gen.coin() ? gen.quad_int(R, 6) * x : gen.quad_int(R, 20);
      if (auto q = divides_exact(x, y)) {
        ASSERT_EQ(*q * x, y);
      }
      const auto m = gen.quad_int(R, 6) * x;
      ASSERT_TRUE(divides(x, m));
    }
  }
}

TEST(Units, Examples) {
  EXPECT_TRUE(is_unit(qi(-1, 0)));
  EXPECT_FALSE(is_unit(qi(1, 1)));
  EXPECT_TRUE(are_associates(qi(3, 0), qi(-3, 0)));
  EXPECT_FALSE(are_associates(qi(1, 1), qi(1, -1)));
  EXPECT_EQ(associate_representative(qi(-1, 0)), qi(1, 0));
  EXPECT_EQ(associate_representative(qi(-2, 0)), qi(2, 0));
  EXPECT_EQ(associate_representative(qi(-1, 1)), qi(1, -1));
}

TEST(ElementsOfNorm, Examples) {
  EXPECT_TRUE(elements_of_norm(Integer(2), z5()).empty());
  EXPECT_EQ(coords(elements_of_norm(Integer(6), z5())),
            (std::vector<std::pair<long, long>>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
  EXPECT_EQ(coords(elements_of_norm(Integer(1), z5())), (std::vector<std::pair<long, long>>{{-1, 0}, {1, 0}}));
}

TEST(ElementsOfNorm, CompleteAgainstDoubleLoop) {
  for (long d : {-5L, -1L, -2L, -3L, -15L}) {
    const auto R = QuadraticRing::imaginary(d);
    for (long k = 1; k <= 50; ++k)
      ASSERT_EQ(elements_of_norm(Integer(k), R), pdtest::brute_elements_of_norm(k, R)) << "d=" << d << " k=" << k;
  }
}

std::set<std::pair<long, long>> brute_divisor_classes(const QuadraticInt& x) {
  std::set<std::pair<long, long>> out;
  for (const auto& e : pdtest::brute_divisors(x)) {
    // pick the lexicographically greatest unit multiple, by enumeration
    QuadraticInt best = e;
    for (const auto& u : pdtest::brute_elements_of_norm(1, x.ring(), 2))
      if (lex_less(best, u * e)) best = u * e;
    out.emplace(best.a().get_si(), best.b().get_si());
  }
  return out;
}

TEST(Divisors, Examples) {
  EXPECT_EQ(coords(divisors_up_to_associates(qi(2, 0))), (std::vector<std::pair<long, long>>{{1, 0}, {2, 0}}));
  EXPECT_EQ(coords(divisors_up_to_associates(qi(-1, 0))), (std::vector<std::pair<long, long>>{{1, 0}}));

  // Divisors of 6, frozen from the cofactor-search oracle.
  const auto six = divisors_up_to_associates(qi(6, 0));
  const std::vector<std::pair<long, long>> expected{{1, 0}, {2, 0}, {3, 0}, {1, 1}, {1, -1}, {6, 0}};
  const auto six_coords = coords(six);
  std::set<std::pair<long, long>> got(six_coords.begin(), six_coords.end());
  const std::set<std::pair<long, long>> expected_set(expected.begin(), expected.end());
  ASSERT_EQ(brute_divisor_classes(qi(6, 0)), expected_set);
  EXPECT_EQ(got, brute_divisor_classes(qi(6, 0)));
  // ascending norm order
  for (std::size_t i = 1; i < six.size(); ++i) EXPECT_LE(norm(six[i - 1]), norm(six[i]));
}

TEST(Divisors, AgreeWithCofactorSearch) {
  Gen gen(23);
  for (long d : {-5L, -6L, -15L}) {
    const auto R = QuadraticRing::imaginary(d);
    for (int trial = 0; trial < 8; ++trial) {
      const auto x = gen.nonzero_quad_int(R, 3);
      const auto ours = coords(divisors_up_to_associates(x));
      const std::set<std::pair<long, long>> ours_set(ours.begin(), ours.end());
      EXPECT_EQ(ours_set, brute_divisor_classes(x))
          << "d=" << d << " x=" << to_string(x);
    }
  }
}

TEST(Divisors, Errors) {
  EXPECT_THROW(divisors_up_to_associates(qi(0, 0)), PreconditionError);
  EXPECT_THROW(divisors_up_to_associates(qi(2000, 0)), PreconditionError);  // norm 4e6 > 1e6
  EXPECT_NO_THROW(divisors_up_to_associates(qi(2000, 0), 5000000));
}

TEST(Irreducible, ClassicNonUniqueFactorization) {
  EXPECT_TRUE(is_irreducible(qi(2, 0)));
  EXPECT_TRUE(is_irreducible(qi(3, 0)));
  EXPECT_TRUE(is_irreducible(qi(1, 1)));
  EXPECT_TRUE(is_irreducible(qi(1, -1)));
  EXPECT_FALSE(is_irreducible(qi(6, 0)));
  EXPECT_EQ(qi(2, 0) * qi(3, 0), qi(1, 1) * qi(1, -1));
  EXPECT_THROW(is_irreducible(qi(0, 0)), PreconditionError);
  EXPECT_THROW(is_irreducible(qi(1, 0)), PreconditionError);
}

TEST(Membership, Examples) {
  const auto zt23 = SubringDescriptor::zt23_in_zt();
  EXPECT_TRUE(zt23.contains(zpoly({0, 0, 1, 5})));
  EXPECT_FALSE(zt23.contains(zpoly({0, 1})));
  EXPECT_FALSE(SubringDescriptor::integers_in_rationals().contains(make_rational(3, 2)));
  EXPECT_TRUE(SubringDescriptor::integers_in_rationals().contains(Rational(-7)));
  EXPECT_TRUE(SubringDescriptor::rational_span(SubringDescriptor::integers_in_rationals()).contains(make_rational(3, 2)));

  const auto order = SubringDescriptor::order_in_field(z5());
  EXPECT_TRUE(order.contains(QuadraticRat(z5(), Rational(1), Rational(-1))));
  EXPECT_FALSE(order.contains(QuadraticRat(z5(), make_rational(1, 2), make_rational(1, 2))));
  const auto o15 = SubringDescriptor::order_in_field(QuadraticRing::imaginary(-15));
  EXPECT_TRUE(o15.contains(QuadraticRat(QuadraticRing::imaginary(-15), make_rational(1, 2), make_rational(1, 2))));
  EXPECT_TRUE(SubringDescriptor::rational_span(order).contains(QuadraticRat(z5(), make_rational(1, 3))));
}

TEST(Membership, AmbientMismatch) {
  EXPECT_THROW(SubringDescriptor::zt23_in_zt().contains(Rational(1)), DomainMismatch);
  EXPECT_THROW(SubringDescriptor::integers_in_rationals().contains(zpoly({1})), DomainMismatch);
  EXPECT_THROW(SubringDescriptor::order_in_field(z5()).contains(QuadraticRat(QuadraticRing::imaginary(-6), Rational(1))),
               DomainMismatch);
}

TEST(Membership, Zt23IsASubring) {
  Gen gen(24);
  const auto sub = SubringDescriptor::zt23_in_zt();
  for (int trial = 0; trial < 500; ++trial) {
    auto x = gen.int_poly_t(5, 5);
    auto y = gen.int_poly_t(5, 5);
    if (x.size() > 1) x = x - IntPolyT::monomial(x.coefficients()[1], 1);
    if (y.size() > 1) y = y - IntPolyT::monomial(y.coefficients()[1], 1);
    ASSERT_TRUE(sub.contains(x) && sub.contains(y));
    ASSERT_TRUE(sub.contains(x + y));
    ASSERT_TRUE(sub.contains(x * y));
    ASSERT_TRUE(sub.contains(-x));
  }
}

TEST(Membership, RationalSpanMeetsZtInR) {
  Gen gen(25);
  const auto qr = SubringDescriptor::qzt23_in_qt();
  const auto r = SubringDescriptor::zt23_in_zt();
  for (int trial = 0; trial < 1000; ++trial) {
    const IntPolyT s = gen.int_poly_t(6, 4);
    const RatPolyT as_rational = to_rational(s);
    const bool in_s = to_integral(as_rational).has_value();
    ASSERT_EQ(qr.contains(as_rational) && in_s, r.contains(s));
  }
}

TEST(IntegralSqrt, Examples) {
  const auto root = integral_sqrt_descent(QuadraticRat(z5(), Rational(-4), Rational(-2)));
  ASSERT_TRUE(root.has_value());
  EXPECT_EQ(*root, QuadraticRat(z5(), Rational(1), Rational(-1)));
  EXPECT_EQ(integral_sqrt_descent(QuadraticRat(z5(), Rational(4))), QuadraticRat(z5(), Rational(2)));
  EXPECT_FALSE(integral_sqrt_descent(QuadraticRat::sqrt_d(z5())).has_value());
  EXPECT_EQ(integral_sqrt_descent(QuadraticRat(z5(), Rational(-5))), QuadraticRat::sqrt_d(z5()));
  EXPECT_FALSE(integral_sqrt_descent(QuadraticRat(z5(), Rational(2))).has_value());
}

TEST(IntegralSqrt, RecoversSquares) {
  Gen gen(26);
  for (long d : {-5L, -3L}) {
    const auto R = QuadraticRing::imaginary(d);
    for (int trial = 0; trial < 300; ++trial) {
      const auto y = gen.quad_rat(R);
      const auto root = integral_sqrt_descent(y * y);
      ASSERT_TRUE(root.has_value());
      ASSERT_TRUE(*root == y || *root == -y);
    }
  }
}

TEST(OrderTraits, IntegerRing) {
  using T = order_traits<Integer>;
  EXPECT_EQ(T::divisors_up_to_associates(Integer(-12)),
            (std::vector<Integer>{Integer(1), Integer(2), Integer(3), Integer(4), Integer(6), Integer(12)}));
  EXPECT_TRUE(T::is_irreducible(Integer(-7)));
  EXPECT_FALSE(T::is_irreducible(Integer(9)));
  EXPECT_EQ(T::from_field(make_rational(6, 3)), Integer(2));
  EXPECT_FALSE(T::from_field(make_rational(1, 3)).has_value());
}

}  // namespace
