#include <gtest/gtest.h>

#include "printers.hpp"

#include "yangian/errors.hpp"
#include "yangian/transport.hpp"
#include "yangian/ysl2.hpp"

using namespace yangian;

namespace {

const ReducedWord kG2Word{1, 2, 1, 2, 1, 2};

AffineRoot root(Rational slope, Rational intercept) { return {slope, intercept}; }

const Rational third = Rational(1) / 3;
const Rational half = Rational(1) / 2;

std::vector<std::vector<AffineRoot>> rows_of(const WalkReport& r) {
  std::vector<std::vector<AffineRoot>> out;
  for (const auto& s : r.steps) {
    EXPECT_TRUE(s.roots.has_value());
    out.push_back(s.roots.value_or(std::vector<AffineRoot>{}));
  }
  return out;
}

}  // namespace

TEST(Walk, G2FirstFundamentalTable) {
  const auto r = run_walk(cartan_g2(), kG2Word, 1);
  const std::vector<std::vector<AffineRoot>> expected{
      {root(third, 0)},
      {root(1, -half), root(1, half), root(1, 3 * half)},
      {root(third, third), root(third, 2 * third)},
      {root(1, 3 * half), root(1, 5 * half), root(1, 7 * half)},
      {root(third, 1)},
  };
  EXPECT_EQ(rows_of(r), expected);
  const std::vector<int> nodes{1, 2, 1, 2, 1}, rescale{3, 1, 3, 1, 3};
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    EXPECT_EQ(r.steps[k].node, nodes[k]);
    EXPECT_EQ(r.steps[k].rescale, rescale[k]);
  }
  EXPECT_EQ(describe_vector(r.steps[3].prefix), "(x_{1,0}^-)^2 (x_{2,0}^-)^3 x_{1,0}^- v^+");
}

TEST(Walk, G2SecondFundamentalTable) {
  const auto r = run_walk(cartan_g2(), kG2Word, 2);
  const std::vector<std::vector<AffineRoot>> expected{
      {root(1, 0)},
      {root(third, half)},
      {root(1, 2), root(1, 3)},
      {root(third, Rational(7) / 6)},
      {root(1, 5)},
  };
  EXPECT_EQ(rows_of(r), expected);
  EXPECT_EQ(describe_vector(r.steps[4].prefix), "x_{1,0}^- (x_{2,0}^-)^2 x_{1,0}^- x_{2,0}^- v^+");
}

TEST(Walk, CrosschecksAndFinalWeight) {
  for (int i = 1; i <= 2; ++i) {
    const auto r = run_walk(cartan_g2(), kG2Word, i, 8);
    for (const auto& s : r.steps) {
      EXPECT_TRUE(s.highest_check);
      EXPECT_TRUE(s.lowest_check);
    }
    Weight expected(2, 0);
    expected[i - 1] = -1;  // w0 = -1 for G2
    EXPECT_EQ(r.final_weight, expected);
  }
}

TEST(Walk, IntermediateEigenvalues) {
  const ParamPoly a = ParamPoly::variable();
  const auto r1 = run_walk(cartan_g2(), kG2Word, 1);
  // Third row acts with node 1 on (x_{2,0}^-)^3 x_{1,0}^- v^+.
  const auto& before = r1.steps[2].series_before[0];
  EXPECT_EQ(before.level(1), Rational(6) * a);
  EXPECT_EQ(before.level(2), Rational(6) * a * a + ParamPoly(6));
  // Fourth row: h_{2,1} = 3(a + 7/2) on (x_{1,0}^-)^2 (x_{2,0}^-)^3 x_{1,0}^- v^+.
  const auto h2 = series_exp(r1.steps[3].series_before[1]);
  EXPECT_EQ(h2.level(1), Rational(3) * a + ParamPoly(Rational(21) / 2));
}

TEST(Walk, AlternativeWordKeepsCrosschecks) {
  const auto r = run_walk(cartan_g2(), {2, 1, 2, 1, 2, 1}, 1);
  EXPECT_FALSE(r.steps.empty());
  for (const auto& s : r.steps) EXPECT_TRUE(s.lowest_check);
}

TEST(Walk, A1MatchesEvaluationModule) {
  // One step: Y_1(v^+) on V_a(omega_1) is V_1(a); its h(u) on the lowest
  // vector must agree with the explicit 2x2 module at several values of a.
  const auto r = run_walk(cartan_a1(), {1}, 1, 6);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0].roots, (std::vector<AffineRoot>{root(1, 0)}));
  for (const Rational x : {Rational(0), Rational(2), Rational(-5) / 4}) {
    const sl2::EvalModule mod(1, x, 6);
    const auto explicit_low = sl2::h_series_on_basis(mod, 0, 6);
    const auto& symbolic = series_exp(r.steps[0].series_after[0]);
    for (unsigned k = 0; k <= 6; ++k) EXPECT_EQ(symbolic[k].evaluate(x), explicit_low[k].evaluate(x)) << k;
  }
}

TEST(Walk, A2FinalWeightIsW0) {
  const auto c = cartan_a2();
  const ReducedWord word{1, 2, 1};
  const auto r1 = run_walk(c, word, 1);
  EXPECT_EQ(r1.final_weight, (Weight{0, -1}));
  const auto r2 = run_walk(c, word, 2);
  EXPECT_EQ(r2.final_weight, (Weight{-1, 0}));
  for (const auto& s : r1.steps) EXPECT_TRUE(s.lowest_check && s.highest_check);
}

TEST(Walk, RejectsBadInput) {
  EXPECT_THROW(run_walk(cartan_g2(), {1, 2, 1}, 1), InputError);
  EXPECT_THROW(run_walk(cartan_g2(), kG2Word, 3), InputError);
  EXPECT_THROW(run_walk(cartan_g2(), kG2Word, 1, 4), InputError);  // needs order >= 5
}

TEST(Step, InitialSeriesAndExtraction) {
  const auto c = cartan_g2();
  const auto state = init_walk(c, 1, 6);
  // h_1(u) = (u - (a - 3))/(u - a) on V_a(omega_1), h_2 = 1.
  const ParamPoly a = ParamPoly::variable();
  const auto h1 = series_exp(state.node_series(1));
  ParamPoly power(1);
  for (unsigned k = 1; k <= 6; ++k) {
    EXPECT_EQ(h1[k], Rational(3) * power) << k;
    power *= a;
  }
  EXPECT_EQ(state.node_series(2), ParamSeries::constant(6, ParamPoly(0)));
  const auto step = extract_step_poly(state, 1, 1);
  EXPECT_EQ(step.unscaled, UniPoly::from_roots({a}));
  EXPECT_THROW(extract_step_poly(state, 1, 2), InvariantViolation);  // H_{1,0} is 3, not 6
  EXPECT_THROW(extract_step_poly(state, 1, 7), InputError);
}
