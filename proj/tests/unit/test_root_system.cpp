#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "yangian/errors.hpp"
#include "yangian/root_system.hpp"

using namespace yangian;

namespace {

// Dihedral oracle: for rank 2 with a12*a21 = 0,1,2,3 the Coxeter number m is
// 2,3,4,6 and |W| = 2m.
std::size_t dihedral_order(const CartanData& c) {
  const std::int64_t prod = c.a(1, 2) * c.a(2, 1);
  const int m[] = {2, 3, 4, 6};
  return 2 * m[prod];
}

}  // namespace

TEST(Cartan, Builtins) {
  const auto g2 = cartan_g2();
  EXPECT_EQ(g2.rank(), 2);
  EXPECT_EQ(g2.a(1, 2), -1);
  EXPECT_EQ(g2.a(2, 1), -3);
  EXPECT_EQ(g2.d(1), 3);
  EXPECT_EQ(g2.d(2), 1);
  EXPECT_EQ(builtin_cartan("a1").rank(), 1);
  EXPECT_THROW(builtin_cartan("e9"), InputError);
}

TEST(Cartan, ValidationRejectsBadData) {
  EXPECT_THROW(validate_cartan({{2, -1}, {-2, 2}}, {1, 1}), InputError);       // DA not symmetric
  EXPECT_THROW(validate_cartan({{2, -1}, {0, 2}}, {1, 1}), InputError);        // zero pattern
  EXPECT_THROW(validate_cartan({{2, -2}, {-2, 2}}, {1, 1}), InputError);       // affine, not finite
  EXPECT_THROW(validate_cartan({{3, -1}, {-1, 2}}, {1, 1}), InputError);       // diagonal
  EXPECT_THROW(validate_cartan({{2, -1}, {-1, 2}}, {2, 2}), InputError);       // not primitive
  EXPECT_NO_THROW(validate_cartan({{2, -1}, {-2, 2}}, {2, 1}));                // B2
}

TEST(Weyl, OrdersMatchDihedralOracle) {
  for (const auto& c : {cartan_a2(), cartan_g2(), validate_cartan({{2, -1}, {-2, 2}}, {2, 1}, "b2"),
                        validate_cartan({{2, 0}, {0, 2}}, {1, 1}, "a1xa1")}) {
    const auto w = weyl_longest(c);
    EXPECT_EQ(w.group_order, dihedral_order(c)) << c.name;
    EXPECT_EQ(w.word.size(), dihedral_order(c) / 2) << c.name;
    EXPECT_EQ(positive_roots(c).size(), w.word.size()) << c.name;
  }
}

TEST(Weyl, A3HasOrder24) {
  const auto a3 = validate_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, "a3");
  const auto w = weyl_longest(a3);
  EXPECT_EQ(w.group_order, 24u);
  EXPECT_EQ(w.word.size(), 6u);
}

TEST(Weyl, ReflectionsAreInvolutions) {
  const auto c = cartan_g2();
  for (int i = 1; i <= 2; ++i) {
    const auto s = simple_reflection(c, i);
    EXPECT_EQ(compose(s, s).matrix, identity_element(2).matrix);
    // s_i(alpha_i) = -alpha_i
    auto alpha = c.simple_root(i);
    auto image = s.apply(alpha);
    for (auto& x : alpha) x = -x;
    EXPECT_EQ(image, alpha);
  }
}

TEST(Weyl, LongestWordG2) {
  const auto c = cartan_g2();
  const auto w = weyl_longest(c);
  EXPECT_EQ(w.word, (ReducedWord{1, 2, 1, 2, 1, 2}));
  EXPECT_TRUE(is_reduced_word_for_longest(c, {2, 1, 2, 1, 2, 1}));
  EXPECT_FALSE(is_reduced_word_for_longest(c, {1, 1, 2, 1, 2, 1}));
  EXPECT_FALSE(is_reduced_word_for_longest(c, {1, 2, 1, 2}));
}

TEST(Paths, G2Exponents) {
  const auto c = cartan_g2();
  const ReducedWord word{1, 2, 1, 2, 1, 2};
  EXPECT_EQ(path_exponents(c, word, 1).exponents, (std::vector<int>{1, 3, 2, 3, 1, 0}));
  EXPECT_EQ(path_exponents(c, word, 2).exponents, (std::vector<int>{0, 1, 1, 2, 1, 1}));
  EXPECT_THROW(path_exponents(c, {1, 2, 1}, 1), InputError);
}

TEST(Paths, ExponentsSumToHeightOfTwiceRhoPairing) {
  // sum_j m_j alpha_{r_j} = omega_i - w0(omega_i); for G2, w0 = -1.
  const auto c = cartan_g2();
  const ReducedWord word{2, 1, 2, 1, 2, 1};
  for (int i = 1; i <= 2; ++i) {
    const auto p = path_exponents(c, word, i);
    Weight total(2, 0);
    for (std::size_t j = 0; j < word.size(); ++j) {
      const auto alpha = c.simple_root(word[j]);
      for (int k = 0; k < 2; ++k) total[k] += p.exponents[j] * alpha[k];
    }
    Weight expected = c.fundamental_weight(i);
    for (auto& x : expected) x *= 2;
    EXPECT_EQ(total, expected) << i;
  }
}

TEST(WeylDim, G2HandFormula) {
  // G2 with alpha_1 long: pairing lambda + rho with the positive coroots gives
  // dim V(m,n) = (m+1)(n+1)(m+n+2)(2m+n+3)(3m+n+4)(3m+2n+5)/120.
  const auto c = cartan_g2();
  for (std::int64_t m = 0; m <= 3; ++m) {
    for (std::int64_t n = 0; n <= 3; ++n) {
      const BigInt expected = BigInt((m + 1) * (n + 1) * (m + n + 2) * (2 * m + n + 3) * (3 * m + n + 4) *
                                     (3 * m + 2 * n + 5)) /
                              120;
      EXPECT_EQ(weyl_dim(c, {m, n}), expected) << m << "," << n;
    }
  }
  EXPECT_EQ(weyl_dim(c, {1, 0}), 14);
  EXPECT_EQ(weyl_dim(c, {0, 1}), 7);
  EXPECT_THROW(weyl_dim(c, {-1, 0}), InputError);
}

TEST(WeylDim, A2HandFormula) {
  const auto c = cartan_a2();
  for (std::int64_t m = 0; m <= 4; ++m) {
    for (std::int64_t n = 0; n <= 4; ++n) {
      EXPECT_EQ(weyl_dim(c, {m, n}), BigInt((m + 1) * (n + 1) * (m + n + 2) / 2));
    }
  }
}
