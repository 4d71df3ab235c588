#include <gtest/gtest.h>

#include "hilbertkit/closure.hpp"
#include "examples.hpp"

using namespace hk;

TEST(MonomialClosure, MaximalSquareIsClosed) {
  const Ideal I = ex::m_squared();
  EXPECT_TRUE(ideal_equals(monomial_integral_closure(I), I));
}

TEST(MonomialClosure, ParameterIdealGainsTheMixedTerm) {
  const Ideal I = ex::parameter_xy();
  const Ideal bar = monomial_integral_closure(I);
  EXPECT_TRUE(contains_poly(bar, parse_poly("x*y", I.base())));
  EXPECT_TRUE(ideal_equals(bar, ex::m_squared()));
}

TEST(MonomialClosure, StaircaseClosureIsPowerOfMaximalIdeal) {
  const Ideal I = ex::staircase_24();
  const Ideal m6 = Ideal::maximal_power(I.ring(), 6);
  EXPECT_TRUE(ideal_equals(monomial_integral_closure(I), m6));
}

TEST(RatliffRush, ParameterIdealIsFixed) {
  const Ideal I = ex::parameter_xy();
  EXPECT_TRUE(ideal_equals(ratliff_rush(I), I));
}

TEST(RatliffRush, BinomialExampleGrows) {
  const Ideal I = ex::binomial_xy();
  const Ideal rr = ratliff_rush(I);
  EXPECT_TRUE(contains(rr, I));
  EXPECT_FALSE(ideal_equals(rr, I));
  EXPECT_TRUE(contains_poly(rr, parse_poly("x^4*y^3", I.base())));
}

TEST(WitnessSearch, FindsIntegralMonomial) {
  const Ideal I = ex::parameter_xy();
  const auto w = integrality_witness_search(I, 3);
  ASSERT_TRUE(w);
  EXPECT_FALSE(contains_poly(I, w->g));
  EXPECT_TRUE(reduction_index(PowerLadder(ideal_sum(I, Ideal(I.ring(), {w->g}))), Ideal(I.ring(), I.gens())));
}

TEST(WitnessSearch, NoneForClosedIdeal) { EXPECT_FALSE(integrality_witness_search(ex::m_squared(), 3)); }

TEST(Verdict, BinomialExampleNotClosedWithVerifiedWitness) {
  PowerLadder L(ex::binomial_xy());
  const auto rep = is_integrally_closed(L);
  EXPECT_EQ(rep.verdict, ClosureReport::Verdict::NotClosed);
  ASSERT_TRUE(rep.witness);
  const Ideal& I = L.base();
  EXPECT_FALSE(contains_poly(I, *rep.witness));
  EXPECT_TRUE(reduction_index(PowerLadder(ideal_sum(I, Ideal(I.ring(), {*rep.witness}))), Ideal(I.ring(), I.gens())));
}

TEST(Verdict, MonomialIdealsAreDecidedExactly) {
  EXPECT_EQ(is_integrally_closed(PowerLadder(ex::m_squared())).verdict, ClosureReport::Verdict::Closed);
  const auto rep = is_integrally_closed(PowerLadder(ex::staircase_22()));
  EXPECT_EQ(rep.verdict, ClosureReport::Verdict::NotClosed);
  EXPECT_EQ(rep.method, ClosureReport::Method::MonomialExact);
}

TEST(Verdict, QuadricsNotClosed) {
  const auto rep = is_integrally_closed(PowerLadder(ex::quadrics_xyz()));
  EXPECT_EQ(rep.verdict, ClosureReport::Verdict::NotClosed);
  EXPECT_TRUE(rep.witness);
}
