#include <gtest/gtest.h>

#include "hilbertkit/hilbert.hpp"
#include "hilbertkit/reduction.hpp"
#include "examples.hpp"

using namespace hk;

namespace {

std::vector<std::int64_t> coeffs(const Ideal& I) { return hilbert_coefficients(I).coefficients; }

}  // namespace

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(HilbertCoefficients, ParameterIdealAndMaximalSquare) {
  EXPECT_EQ(coeffs(ex::parameter_xy()), (std::vector<std::int64_t>{4, 0, 0}));
  EXPECT_EQ(coeffs(ex::m_squared()), (std::vector<std::int64_t>{4, 1, 0}));
}

TEST(HilbertCoefficients, BinomialExample) {
  const auto hd = hilbert_coefficients(ex::binomial_xy());
  EXPECT_EQ(hd.coefficients, (std::vector<std::int64_t>{36, 15, 11}));
  for (std::size_t n = hd.postulation; n < hd.table.size(); ++n)
    EXPECT_EQ(hd.polynomial(static_cast<std::int64_t>(n)), static_cast<std::int64_t>(hd.table[n]));
}

TEST(HilbertCoefficients, QuadricsInThreeVariables) {
  const auto hd = hilbert_coefficients(ex::quadrics_xyz());
  EXPECT_EQ(hd.e(0), 8);
  EXPECT_EQ(hd.e(1), 4);
  EXPECT_EQ(hd.e(2), 0);
  EXPECT_EQ(hd.table[1], 5u);
}

TEST(HilbertCoefficients, Staircases) {
  struct Case {
    Ideal I;
    std::size_t colength;
  };
  for (const auto& c : {Case{ex::staircase_22(), 22}, Case{ex::staircase_23a(), 23}, Case{ex::staircase_23b(), 23},
                        Case{ex::staircase_24(), 24}}) {
    const auto hd = hilbert_coefficients(c.I);
    EXPECT_EQ(hd.e(0), 36);
    EXPECT_EQ(hd.e(1), 15);
    EXPECT_EQ(hd.table[1], c.colength);
  }
}

TEST(HilbertFunction, RejectsIdealsThatAreNotMPrimary) {
  const Ideal I = ex::ideal({"x", "y"}, {"x^2"});
  EXPECT_THROW(hilbert_function(I, 1), Error);
  try {
    hilbert_coefficients(I);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), Error::Kind::NotMPrimary);
  }
}

TEST(HilbertCoefficients, CapIsReportedWithPartialTable) {
  HilbertOptions opt;
  opt.cap = 3;
  EXPECT_THROW(hilbert_coefficients(ex::binomial_xy(), opt), PostulationError);
}

TEST(FitPolynomial, RecoversKnownCoefficients) {
  std::vector<std::int64_t> vals;
  HilbertData hd;
  hd.dim = 2;
  hd.coefficients = {36, 15, 11};
  for (std::int64_t n = 4; n < 9; ++n) vals.push_back(hd.polynomial(n));
  EXPECT_EQ(detail::fit_hilbert_polynomial(4, vals, 2), hd.coefficients);
  vals.back() += 1;
  EXPECT_FALSE(detail::fit_hilbert_polynomial(4, vals, 2));
}

TEST(Northcott, BoundaryMatchesSquareEqualsJI) {
  for (const auto& I : {ex::parameter_xy(), ex::m_squared(), ex::binomial_xy(), ex::staircase_22()}) {
    PowerLadder L(I);
    const auto hd = hilbert_coefficients(L);
    auto rd = reduction_index(L, random_candidate_reduction(L.base(), 3));
    ASSERT_TRUE(rd);
    const auto rep = northcott_huneke_check(L, hd, *rd);
    EXPECT_TRUE(rep.northcott_holds);
    EXPECT_TRUE(rep.consistent()) << I.to_string();
  }
}
