#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "yangian/errors.hpp"
#include "yangian/symmetric.hpp"

using namespace yangian;

namespace {

const ParamPoly a = ParamPoly::variable();

std::vector<ParamPoly> random_affine_roots(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> slope(0, 3), num(-9, 9), den(1, 6);
  std::vector<ParamPoly> out;
  for (unsigned i = 0; i < n; ++i) {
    out.push_back(ParamPoly::affine(Rational(slope(rng)) / 3, Rational(num(rng)) / den(rng)));
  }
  return out;
}

}  // namespace

TEST(PowerSums, DirectSums) {
  const std::vector<ParamPoly> roots{a, a + ParamPoly(1), a + ParamPoly(2)};
  const auto p = power_sums_of_roots(roots, 3);
  EXPECT_EQ(p.p(1), Rational(3) * a + ParamPoly(3));
  EXPECT_EQ(p.p(2), Rational(3) * a * a + Rational(6) * a + ParamPoly(5));
}

TEST(PowerSums, ElementaryOfThreeRoots) {
  const std::vector<ParamPoly> r{ParamPoly(1), ParamPoly(2), ParamPoly(4)};
  const auto e = elementary_from_power_sums(power_sums_of_roots(r, 3));
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[1], ParamPoly(7));
  EXPECT_EQ(e[2], ParamPoly(14));
  EXPECT_EQ(e[3], ParamPoly(8));
}

TEST(PowerSumsProperty, NewtonRoundTrip) {
  std::mt19937 rng(555);
  for (unsigned deg = 1; deg <= 6; ++deg) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto roots = random_affine_roots(rng, deg);
      const auto p = power_sums_of_roots(roots, deg);
      EXPECT_EQ(power_sums_to_monic(p), UniPoly::from_roots(roots));
      const auto extended = extend_power_sums(p, deg + 3);
      EXPECT_EQ(extended.sums, power_sums_of_roots(roots, deg + 3).sums);
      EXPECT_TRUE(power_sums_consistent(extended));
    }
  }
}

TEST(PowerSums, InconsistentSumsDetected) {
  auto p = power_sums_of_roots({ParamPoly(1), ParamPoly(2)}, 4);
  p.sums[3] += ParamPoly(1);
  EXPECT_FALSE(power_sums_consistent(p));
}

TEST(RationalRoots, Basic) {
  // 6x^3 - 11x^2 + 6x - 1 = (x - 1)(2x - 1)(3x - 1), lowest-first coefficients.
  auto roots = rational_roots({-1, 6, -11, 6});
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<Rational>{Rational(1) / 3, Rational(1) / 2, 1}));
  EXPECT_THROW(rational_roots({-2, 0, 1}), SymbolicRootsUnavailable);
}

TEST(AffineRootsProperty, ReexpansionRecoversRoots) {
  std::mt19937 rng(31337);
  for (unsigned deg = 1; deg <= 5; ++deg) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto roots = random_affine_roots(rng, deg);
      const auto found = roots_affine_in_param(UniPoly::from_roots(roots));
      ASSERT_EQ(found.size(), deg);
      std::vector<ParamPoly> back;
      for (const auto& r : found) back.push_back(r.as_poly());
      EXPECT_EQ(UniPoly::from_roots(back), UniPoly::from_roots(roots));
    }
  }
}

TEST(AffineRoots, NonAffineRejected) {
  // u^2 - a has roots +-sqrt(a).
  const UniPoly q({ParamPoly(0) - a, ParamPoly(0), ParamPoly(1)});
  EXPECT_THROW(roots_affine_in_param(q), SymbolicRootsUnavailable);
}

TEST(AffineRoots, CrossingLines) {
  // a and 2 - a meet at a = 1; a/3 + 1 meets a at a = 3/2.
  const std::vector<ParamPoly> roots{a, ParamPoly::affine(-1, 2), ParamPoly::affine(Rational(1) / 3, 1)};
  const auto found = roots_affine_in_param(UniPoly::from_roots(roots));
  // Sorted by slope, then intercept.
  EXPECT_EQ(found, (std::vector<AffineRoot>{{-1, 2}, {Rational(1) / 3, 1}, {1, 0}}));
}
