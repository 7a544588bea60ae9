#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "yangian/cyclicity.hpp"
#include "yangian/errors.hpp"

using namespace yangian;

namespace {

const SSetTable& g2_table() {
  static const SSetTable table = derive_s_sets(cartan_g2(), {1, 2, 1, 2, 1, 2});
  return table;
}

std::vector<Rational> rationals(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Rational> out;
  for (auto [p, q] : xs) out.push_back(Rational(p) / q);
  return out;
}

GaussianRational g(Rational re, Rational im = 0) { return {re, im}; }

// Brute-force membership oracle over the published S sets.
bool forbidden(int b, int c, const GaussianRational& diff) {
  static const std::vector<Rational> s11 = rationals({{3, 1}, {4, 1}, {5, 1}, {6, 1}});
  static const std::vector<Rational> s12 = rationals({{1, 2}, {3, 2}, {5, 2}, {7, 2}, {9, 2}});
  static const std::vector<Rational> s21 = rationals({{9, 2}, {13, 2}});
  static const std::vector<Rational> s22 = rationals({{1, 1}, {3, 1}, {4, 1}, {6, 1}});
  const auto& s = b == 1 ? (c == 1 ? s11 : s12) : (c == 1 ? s21 : s22);
  return diff.im == 0 && std::find(s.begin(), s.end(), diff.re) != s.end();
}

bool oracle_certified(const std::vector<TensorFactor>& f, bool irreducible) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i == j || (!irreducible && j < i)) continue;
      if (forbidden(f[i].node, f[j].node, f[j].parameter - f[i].parameter)) return false;
    }
  }
  return true;
}

std::vector<std::vector<GaussianRational>> random_roots(std::mt19937& rng) {
  std::uniform_int_distribution<int> total(0, 6), node(0, 1), num(-12, 12), den(1, 2), coin(0, 3);
  std::vector<std::vector<GaussianRational>> roots(2);
  const int n = total(rng);
  for (int t = 0; t < n; ++t) {
    GaussianRational z{Rational(num(rng)) / den(rng), coin(rng) == 0 ? Rational(num(rng)) / 3 : Rational(0)};
    roots[node(rng)].push_back(z);
  }
  return roots;
}

}  // namespace

TEST(SSets, G2MatchPublishedValues) {
  const auto& t = g2_table();
  EXPECT_EQ(t.at(1, 1), rationals({{3, 1}, {4, 1}, {5, 1}, {6, 1}}));
  EXPECT_EQ(t.at(1, 2), rationals({{1, 2}, {3, 2}, {5, 2}, {7, 2}, {9, 2}}));
  EXPECT_EQ(t.at(2, 1), rationals({{9, 2}, {13, 2}}));
  EXPECT_EQ(t.at(2, 2), rationals({{1, 1}, {3, 1}, {4, 1}, {6, 1}}));
}

TEST(SSets, A1SingleStep) {
  const auto t = derive_s_sets(cartan_a1(), {1});
  EXPECT_EQ(t.at(1, 1), rationals({{1, 1}}));
}

TEST(SSets, AllPositive) {
  for (const auto& s : g2_table().all()) {
    for (const auto& x : s.differences) EXPECT_GT(x, 0);
  }
}

TEST(TSets, SlopesAreInverseSymmetrizers) {
  const auto c = cartan_g2();
  std::vector<WalkReport> reports{run_walk(c, {1, 2, 1, 2, 1, 2}, 1), run_walk(c, {1, 2, 1, 2, 1, 2}, 2)};
  for (const auto& t : compute_t_sets(reports, c)) {
    for (const auto& r : t.roots) EXPECT_EQ(r.slope, Rational(1) / c.d(t.acting_node));
  }
}

TEST(QMap, DiagonalSets) {
  EXPECT_EQ(q_exponents(g2_table().at(1, 1)), rationals({{6, 1}, {8, 1}, {10, 1}, {12, 1}}));
  EXPECT_EQ(q_exponents(g2_table().at(2, 2)), rationals({{2, 1}, {6, 1}, {8, 1}, {12, 1}}));
}

TEST(Cyclicity, WorkedExamples) {
  const auto& t = g2_table();
  std::vector<TensorFactor> f{{1, g(0)}, {1, g(3)}};
  auto r = check_cyclicity(f, t, CyclicityMode::HighestWeight);
  ASSERT_FALSE(r.certified);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].i, 1u);
  EXPECT_EQ(r.violations[0].j, 2u);
  EXPECT_EQ(r.violations[0].matched, 3);

  f = {{1, g(0)}, {1, g(Rational(7) / 2)}};
  EXPECT_TRUE(check_cyclicity(f, t, CyclicityMode::HighestWeight).certified);

  f = {{1, g(3)}, {1, g(0)}};
  EXPECT_TRUE(check_cyclicity(f, t, CyclicityMode::HighestWeight).certified);
  EXPECT_FALSE(check_cyclicity(f, t, CyclicityMode::Irreducible).certified);

  f = {{1, g(0)}, {3, g(1)}};
  EXPECT_THROW(check_cyclicity(f, t, CyclicityMode::HighestWeight), InputError);
}

TEST(Cyclicity, ImaginaryDifferenceNeverMatches) {
  std::vector<TensorFactor> f{{1, g(0)}, {1, g(3, 1)}};
  EXPECT_TRUE(check_cyclicity(f, g2_table(), CyclicityMode::Irreducible).certified);
}

TEST(CyclicityProperty, AgreesWithOracleAndIsShiftInvariant) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> len(0, 5), node(1, 2), num(-14, 14), den(1, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<TensorFactor> f;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) f.push_back({node(rng), g(Rational(num(rng)) / den(rng))});
    const GaussianRational shift{Rational(num(rng)) / 3, Rational(num(rng)) / 5};
    auto shifted = f;
    for (auto& x : shifted) x.parameter = x.parameter + shift;
    for (bool irr : {false, true}) {
      const auto mode = irr ? CyclicityMode::Irreducible : CyclicityMode::HighestWeight;
      const auto r = check_cyclicity(f, g2_table(), mode);
      EXPECT_EQ(r.certified, oracle_certified(f, irr));
      EXPECT_EQ(r.certified, r.violations.empty());
      EXPECT_EQ(check_cyclicity(shifted, g2_table(), mode).certified, r.certified);
    }
  }
}

TEST(OrderedProduct, Example) {
  const auto spec = build_ordered_product({{g(0), g(4)}, {g(2)}}, g2_table());
  ASSERT_EQ(spec.product.size(), 3u);
  EXPECT_EQ(spec.product[0].node, 1);
  EXPECT_EQ(spec.product[0].parameter, g(4));
  EXPECT_EQ(spec.product[1].node, 2);
  EXPECT_EQ(spec.product[2].parameter, g(0));
  EXPECT_EQ(spec.lambda, (Weight{2, 1}));
  EXPECT_TRUE(spec.report.certified);
}

TEST(OrderedProduct, EmptyAndTies) {
  const auto empty = build_ordered_product({{}, {}}, g2_table());
  EXPECT_TRUE(empty.product.empty());
  EXPECT_TRUE(empty.report.certified);
  const auto tie = build_ordered_product({{g(2)}, {g(2)}}, g2_table());
  EXPECT_EQ(tie.product[0].node, 1);
  EXPECT_EQ(tie.product[1].node, 2);
}

TEST(OrderedProductProperty, RandomMultisetsAreCertified) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto roots = random_roots(rng);
    const auto spec = build_ordered_product(roots, g2_table());
    EXPECT_TRUE(spec.report.certified) << trial;
    EXPECT_TRUE(oracle_certified(spec.product, false)) << trial;
    for (std::size_t k = 1; k < spec.product.size(); ++k) {
      EXPECT_GE(spec.product[k - 1].parameter.re, spec.product[k].parameter.re);
    }
    for (auto& r : roots) std::shuffle(r.begin(), r.end(), rng);
    const auto again = build_ordered_product(roots, g2_table());
    ASSERT_EQ(again.product.size(), spec.product.size());
    for (std::size_t k = 0; k < spec.product.size(); ++k) {
      EXPECT_EQ(again.product[k].node, spec.product[k].node);
      EXPECT_EQ(again.product[k].parameter, spec.product[k].parameter);
    }
  }
}

TEST(Dimension, Bound) {
  const std::vector<BigInt> dims{15, 7};
  EXPECT_EQ(dimension_bound(std::vector<std::int64_t>{0, 0}, dims), 1);
  EXPECT_EQ(dimension_bound(std::vector<std::int64_t>{2, 0}, dims), 225);
  EXPECT_EQ(dimension_bound(std::vector<std::int64_t>{1, 3}, dims), 15 * 343);
}
