#include <gtest/gtest.h>

#include "hilbertkit/groebner.hpp"
#include "hilbertkit/ideal.hpp"
#include "hilbertkit/parse.hpp"

using namespace hk;

namespace {

PolyRingPtr xy() { return make_poly_ring(32003, {"x", "y"}); }
PolyRingPtr xyz() { return make_poly_ring(32003, {"x", "y", "z"}); }

Monomial mono(std::initializer_list<unsigned> e) {
  std::vector<unsigned> v(e);
  return Monomial(std::span<const unsigned>(v));
}

}  // namespace

TEST(Field, InverseAndSignedValue) {
  PrimeField F;
  for (Coeff a = 1; a < 200; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  EXPECT_EQ(F.signed_value(32002), -1);
  EXPECT_THROW(F.inv(0), Error);
  EXPECT_THROW(PrimeField(32004), Error);
}

TEST(Monomial, DegrevlexOrdering) {
  auto ord = TermOrder::degrevlex();
  // x^2 > xy > y^2 > x > y > 1 in two variables
  std::vector<Monomial> desc{mono({2, 0}), mono({1, 1}), mono({0, 2}), mono({1, 0}), mono({0, 1}), mono({0, 0})};
  for (std::size_t i = 0; i + 1 < desc.size(); ++i) EXPECT_TRUE(ord.less(desc[i + 1], desc[i]));
  // reverse lex tie-break in three variables: x*z < y^2
  EXPECT_TRUE(ord.less(mono({1, 0, 1}), mono({0, 2, 0})));
}

TEST(Monomial, MismatchedArityIsStructuralError) {
  EXPECT_THROW((void)(mono({1, 0}) * mono({1, 0, 0})), Error);
}

TEST(Polynomial, ArithmeticIsCanonical) {
  auto R = xy();
  auto f = parse_poly("(x + y)^3", R);
  auto g = parse_poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3", R);
  EXPECT_EQ(f, g);
  EXPECT_TRUE((f - g).is_zero());
  EXPECT_EQ(parse_poly("x^5*y + x^2*y^4", R).to_string(), "x^5*y + x^2*y^4");
  EXPECT_EQ(parse_poly("-x + 32004", R), parse_poly("1 - x", R));
}

TEST(Parser, ReportsPositionOfUnknownVariable) {
  auto R = xy();
  try {
    parse_poly("x + w", R, 3, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), Error::Kind::Parse);
    EXPECT_NE(std::string(e.what()).find("3:14"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("unknown variable 'w'"), std::string::npos);
  }
}

TEST(Parser, RejectsJuxtaposition) { EXPECT_THROW(parse_poly("2x", xy()), Error); }

TEST(Groebner, ReducedBasisSatisfiesCriterion) {
  auto R = xyz();
  std::vector<Polynomial> gens{parse_poly("x^2 - y*z", R), parse_poly("x*y - z^2", R), parse_poly("y^3 - x*z^2", R)};
  auto G = buchberger(gens);
  EXPECT_TRUE(satisfies_buchberger_criterion(G));
  EXPECT_TRUE(is_reduced(G));
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G).is_zero());
}

TEST(Groebner, CornerTruncationAgreesWithExplicitPower) {
  auto R = xy();
  std::vector<Polynomial> gens{parse_poly("x^3 + y^4", R), parse_poly("x*y^2 - x^4", R)};
  auto with_m5 = gens;
  detail::monomials_of_degree(2, 3u, 5, [&](const Monomial& m) { with_m5.push_back(Polynomial::monomial(R, m)); });
  auto plain = buchberger(with_m5);
  auto cornered = buchberger(gens, TermOrder::degrevlex(), Corner{5, 3u});
  EXPECT_EQ(plain.working_elements(), cornered.working_elements());
}

TEST(Groebner, StandardMonomialsOfMonomialIdeal) {
  auto R = xy();
  auto G = buchberger({parse_poly("x^3", R), parse_poly("x*y", R), parse_poly("y^4", R)});
  auto s = standard_monomials(G);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->size(), 6u);  // 1, x, x^2, y, y^2, y^3
  auto inf = buchberger({parse_poly("x^3", R)});
  EXPECT_FALSE(standard_monomials(inf));
}

TEST(Ideal, IntersectionOfMonomialIdealsIsLcmIdeal) {
  auto R = make_ring(32003, {"x", "y"});
  auto A = Ideal::parse(R, {"x^2", "y^3"});
  auto B = Ideal::parse(R, {"x*y", "y^5"});
  auto C = ideal_intersect(A, B);
  auto expected = Ideal::parse(R, {"x^2*y", "x*y^3", "y^5"});
  EXPECT_TRUE(ideal_equals(C, expected));
}

TEST(Ideal, ColonByPolynomial) {
  auto R = make_ring(32003, {"x", "y"});
  auto A = Ideal::parse(R, {"x^3", "x*y", "y^3"});
  auto C = colon_poly(A, parse_poly("x", R->base()));
  EXPECT_TRUE(ideal_equals(C, Ideal::parse(R, {"x^2", "y"})));
  EXPECT_TRUE(colon_poly(A, parse_poly("x^3", R->base())).is_unit());
}

TEST(Ideal, MPrimaryDetection) {
  auto R = make_ring(32003, {"x", "y"});
  EXPECT_TRUE(is_m_primary(Ideal::parse(R, {"x^2", "y^2"})));
  EXPECT_FALSE(is_m_primary(Ideal::parse(R, {"x^2"})));
  // leading terms look m-primary, but the ideal also vanishes at (1, 1)
  EXPECT_FALSE(is_m_primary(Ideal::parse(R, {"x^2 - x", "y^2 - y", "x*y - x"})));
  EXPECT_THROW(is_m_primary(Ideal::unit(R)), Error);
}

TEST(Ideal, LocalizeDropsPointsAwayFromOrigin) {
  auto R = make_ring(32003, {"x", "y"});
  // (x - x^2, y) is the product of the origin and (1, 0)
  auto J = Ideal::parse(R, {"x - x^2", "y"});
  auto L = localize(J);
  EXPECT_EQ(colength(L), 1u);
  EXPECT_TRUE(ideal_equals(L, Ideal::parse(R, {"x", "y"})));
}

TEST(Ideal, PowerLadderColengths) {
  auto R = make_ring(32003, {"x", "y"});
  auto m = with_exact_corner(Ideal::parse(R, {"x", "y"}));
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(colength(ideal_power(m, n)), n * (n + 1) / 2);
}
