#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yangian/rational.hpp"

namespace yangian {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
// Weight in fundamental-weight coordinates.
using Weight = std::vector<std::int64_t>;
// Node labels are 1-based throughout the public API, as in Dynkin diagrams.
using ReducedWord = std::vector<int>;

// Validated finite-type Cartan data. Convention: a_ij = <alpha_j, alpha_i^vee>,
// so column j of A holds alpha_j in fundamental-weight coordinates.
struct CartanData {
  std::string name;
  IntMatrix cartan;
  std::vector<int> symmetrizer;

  int rank() const { return static_cast<int>(cartan.size()); }
  std::int64_t a(int i, int j) const { return cartan.at(i - 1).at(j - 1); }
  int d(int i) const { return symmetrizer.at(i - 1); }
  // alpha_j in fundamental-weight coordinates.
  Weight simple_root(int j) const;
  Weight fundamental_weight(int i) const;
  bool has_node(int i) const { return i >= 1 && i <= rank(); }
};

// Throws InputError on any violated axiom (shape, a_ii = 2, sign pattern,
// D*A symmetric, d_i coprime, positive definiteness).
CartanData validate_cartan(IntMatrix cartan, std::vector<int> symmetrizer, std::string name = "custom");

CartanData cartan_a1();
CartanData cartan_a2();
// Node 1 long, node 2 short: A = (2 -1; -3 2), D = diag(3, 1).
CartanData cartan_g2();
// "a1", "a2", "g2"; throws InputError otherwise.
CartanData builtin_cartan(const std::string& name);

struct WeylElement {
  IntMatrix matrix;  // acts on weights (fundamental-weight coordinates)

  Weight apply(const Weight& w) const;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

WeylElement identity_element(int rank);
WeylElement simple_reflection(const CartanData& c, int i);
WeylElement compose(const WeylElement& x, const WeylElement& y);  // x after y
// s_{r_1} s_{r_2} ... s_{r_p}
WeylElement word_product(const CartanData& c, const ReducedWord& word);

struct LongestElement {
  std::size_t group_order = 0;
  WeylElement w0;
  ReducedWord word;  // lexicographically least among the shortest words for w0
};

// Enumerates W by closure under simple reflections (guarded at 10^6 elements).
LongestElement weyl_longest(const CartanData& c);

// Positive roots in simple-root coordinates.
std::vector<std::vector<std::int64_t>> positive_roots(const CartanData& c);

// True if `word` has length |Phi+| and multiplies out to w0.
bool is_reduced_word_for_longest(const CartanData& c, const ReducedWord& word);

// Exponents along the extremal path v^- = (x^-_{r_1})^{m_1} ... (x^-_{r_p})^{m_p} v^+.
struct PathExponents {
  int fundamental = 0;
  ReducedWord word;
  std::vector<int> exponents;  // m_1..m_p, aligned with word
};

// m_j is coordinate r_j of s_{r_{j+1}} ... s_{r_p}(omega_i).
// Throws InputError if the word is not a reduced word of w0.
PathExponents path_exponents(const CartanData& c, const ReducedWord& word, int fundamental);

// Weyl dimension formula. Throws InputError for non-dominant weights.
BigInt weyl_dim(const CartanData& c, const Weight& highest);

}  // namespace yangian
