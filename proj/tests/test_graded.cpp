#include <gtest/gtest.h>

#include "hilbertkit/graded.hpp"
#include "examples.hpp"

using namespace hk;

namespace {

struct Analysed {
  PowerLadder L;
  HilbertData hd;
  ReductionData rd;
};

Analysed analyse(const Ideal& I, std::uint64_t seed = 1) {
  PowerLadder L(I);
  auto hd = hilbert_coefficients(L);
  auto rd = reduction_index(L, random_candidate_reduction(L.base(), seed));
  if (!rd) throw std::runtime_error("no reduction");
  return {PowerLadder(I), hd, *rd};
}

ReductionAnalysis full(const Analysed& a) {
  ReductionAnalysis r;
  r.rd = a.rd;
  r.deficits = deficits(a.hd, a.rd);
  r.vv = vv_check(a.L, a.rd);
  r.b = b_sequence(a.L, a.rd);
  r.guerrieri = guerrieri_sum(a.L, a.rd);
  return r;
}

}  // namespace

TEST(Deficits, BinomialExample) {
  const auto a = analyse(ex::binomial_xy());
  const auto d = deficits(a.hd, a.rd);
  EXPECT_EQ(d.e1_deficit, 1);
  EXPECT_EQ(d.e2_deficit, 3);
  EXPECT_FALSE(vv_check(a.L, a.rd));
}

TEST(Deficits, StaircasesOfColength22And23) {
  EXPECT_EQ(deficits(analyse(ex::staircase_22()).hd, analyse(ex::staircase_22()).rd).e2_deficit, 2);
  const auto b = analyse(ex::staircase_23b());
  EXPECT_EQ(deficits(b.hd, b.rd).e1_deficit, 2);
  EXPECT_EQ(deficits(b.hd, b.rd).e2_deficit, 4);
}

TEST(Deficits, VanishWhenValabregaVallaHolds) {
  for (const auto& I : {ex::parameter_xy(), ex::m_squared()}) {
    const auto r = full(analyse(I));
    EXPECT_TRUE(*r.vv);
    EXPECT_EQ(r.deficits.e1_deficit, 0);
    EXPECT_EQ(r.deficits.e2_deficit, 0);
    EXPECT_EQ(r.guerrieri->total(), 0);
  }
}

TEST(BSequence, SumMatchesE1Deficit) {
  for (const auto& I : {ex::binomial_xy(), ex::staircase_22(), ex::staircase_23a(), ex::staircase_23b()}) {
    const auto r = full(analyse(I));
    EXPECT_EQ(r.b->sum(), r.deficits.e1_deficit) << I.to_string();
  }
}

TEST(BSequence, SingleNonzeroTermOnBinomialExample) {
  const auto r = full(analyse(ex::binomial_xy()));
  EXPECT_EQ(r.b->values, (std::vector<std::int64_t>{0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(r.b->weighted_sum(), 2);
  EXPECT_EQ(r.guerrieri->total(), 1);
}

TEST(BSequence, RequiresDimensionTwo) {
  const auto a = analyse(ex::quadrics_xyz());
  EXPECT_THROW(b_sequence(a.L, a.rd), Error);
}

TEST(DepthBounds, ExactZeroFromE1Deficit) {
  DepthInputs in;
  in.d = 2;
  in.analyses.push_back(full(analyse(ex::binomial_xy())));
  const auto c = depth_bounds(in);
  EXPECT_TRUE(c.exact());
  EXPECT_EQ(c.upper.value, 0u);
  EXPECT_EQ(c.upper.tag, DepthTag::HM_e1);
}

TEST(DepthBounds, FullDepthFromValabregaValla) {
  DepthInputs in;
  in.d = 2;
  in.analyses.push_back(full(analyse(ex::parameter_xy())));
  const auto c = depth_bounds(in);
  EXPECT_EQ(c.lower.value, 2u);
  EXPECT_TRUE(c.consistent());
}

TEST(DepthBounds, ExcludingACriterionNeverTightensBounds) {
  DepthInputs in;
  in.d = 2;
  in.analyses.push_back(full(analyse(ex::staircase_22())));
  const auto all = depth_bounds(in);
  for (auto tag : {DepthTag::VV, DepthTag::HM_e1, DepthTag::CPR_e2, DepthTag::Wang, DepthTag::GSum}) {
    const auto c = depth_bounds(in, {tag});
    EXPECT_LE(c.lower.value, all.lower.value);
    EXPECT_GE(c.upper.value, all.upper.value);
    EXPECT_TRUE(c.consistent());
  }
}

TEST(DepthBounds, RatliffRushWitnessOnQuadrics) {
  PowerLadder L(ex::quadrics_xyz());
  const auto k = rr_powers_witness(L, 6);
  ASSERT_TRUE(k);
  EXPECT_LE(*k, 6u);
  DepthInputs in;
  in.d = 3;
  in.rr_witness_power = k;
  const auto c = depth_bounds(in);
  EXPECT_EQ(c.upper.value, 0u);
  EXPECT_EQ(c.upper.tag, DepthTag::RRPowers);
}

TEST(DimensionReduce, PreservesLeadingCoefficients) {
  const auto dr = dimension_reduce(ex::quadrics_xyz(), 1, 1);
  EXPECT_EQ(dr.after.e(0), 8);
  EXPECT_EQ(dr.after.e(1), 4);
  EXPECT_EQ(dr.elements.size(), 1u);
  EXPECT_EQ(dr.image.ring()->dimension(), 2u);
}

TEST(Claims, IdentifiersRoundTrip) {
  for (const auto& [id, name] : claim_names()) {
    EXPECT_EQ(parse_claim_id(name), id);
    EXPECT_STREQ(to_string(id), name);
  }
  EXPECT_FALSE(parse_claim_id("THM-9.99"));
}

TEST(Claims, BinomialExampleIsOutsideTheE1Statement) {
  ClaimContext ctx;
  ctx.d = 2;
  const auto a = analyse(ex::binomial_xy());
  ctx.hilbert = a.hd;
  ctx.colength = a.L.colength(1);
  ctx.depth.d = 2;
  ctx.depth.analyses.push_back(full(a));
  ctx.r_values = {a.rd.r};
  ctx.closed = ClosureReport::Verdict::NotClosed;
  const auto r = verify_claim(ClaimId::Thm310, ctx);
  EXPECT_FALSE(r.applicable);
  EXPECT_EQ(r.status, ClaimResult::Status::NotApplicable);
  EXPECT_EQ(verify_claim(ClaimId::Rem39Gap, ctx).status, ClaimResult::Status::Verified);
  EXPECT_EQ(verify_claim(ClaimId::Prop36, ctx).status, ClaimResult::Status::Verified);
}

TEST(Claims, UnknownClosureMakesHypothesesUnverifiable) {
  ClaimContext ctx;
  ctx.d = 2;
  const auto a = analyse(ex::binomial_xy());
  ctx.hilbert = a.hd;
  ctx.colength = a.L.colength(1);
  ctx.depth.d = 2;
  ctx.depth.analyses.push_back(full(a));
  ctx.r_values = {a.rd.r};
  ctx.closed = ClosureReport::Verdict::Unknown;
  EXPECT_EQ(verify_claim(ClaimId::Thm310, ctx).status, ClaimResult::Status::HypothesesUnverifiable);
}

TEST(Claims, E1StatementVerifiedOnStaircase) {
  ClaimContext ctx;
  ctx.d = 2;
  const auto a = analyse(ex::staircase_22());
  ctx.hilbert = a.hd;
  ctx.colength = a.L.colength(1);
  ctx.depth.d = 2;
  ctx.depth.analyses.push_back(full(a));
  ctx.r_values = {2, 2};
  const auto r = verify_claim(ClaimId::Thm310, ctx);
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.status, ClaimResult::Status::Verified);
  EXPECT_EQ(verify_claim(ClaimId::Thm312, ctx).status, ClaimResult::Status::Verified);
}
