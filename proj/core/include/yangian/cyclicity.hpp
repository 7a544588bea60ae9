#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "yangian/rational.hpp"
#include "yangian/root_system.hpp"
#include "yangian/symmetric.hpp"
#include "yangian/transport.hpp"

namespace yangian {

// Roots (rescaled, affine in a) of every step at `acting_node` in the walk of
// omega_{earlier_node}, duplicates collapsed, sorted by intercept.
struct TSet {
  int earlier_node = 0;
  int acting_node = 0;
  std::vector<AffineRoot> roots;
};

// Forbidden differences a_j - a_i for a factor at node `acting_node` placed
// after one at `earlier_node`. Sorted ascending.
struct SSet {
  int earlier_node = 0;
  int acting_node = 0;
  std::vector<Rational> differences;
};

// `reports` holds one walk per fundamental weight (any order). Throws
// SymbolicRootsUnavailable if a step has no affine roots, InvariantViolation
// if a root's slope differs from 1/d_c.
std::vector<TSet> compute_t_sets(std::span<const WalkReport> reports, const CartanData& c);

// rho = a/d_c + beta  gives the difference d_c (1 + beta).
std::vector<SSet> compute_s_sets(std::span<const TSet> tsets, const CartanData& c);

class SSetTable {
 public:
  SSetTable() = default;
  SSetTable(int rank, std::span<const SSet> sets);

  int rank() const { return rank_; }
  const std::vector<Rational>& at(int earlier, int acting) const;
  std::vector<SSet> all() const;

 private:
  int rank_ = 0;
  std::map<std::pair<int, int>, std::vector<Rational>> sets_;
};

// Walks every fundamental weight and derives the S sets.
SSetTable derive_s_sets(const CartanData& c, const ReducedWord& word, unsigned order = kDefaultOrder);

struct TensorFactor {
  int node = 0;
  GaussianRational parameter;
  friend bool operator==(const TensorFactor&, const TensorFactor&) = default;
};

enum class CyclicityMode { HighestWeight, Irreducible };

struct Violation {
  std::size_t i = 0;  // 1-based factor positions, a_j - a_i in S(b_i, b_j)
  std::size_t j = 0;
  GaussianRational difference;
  Rational matched;
};

// The test is a sufficient condition only: `certified == false` means
// "not certified", not "fails to be highest weight".
struct CyclicityReport {
  CyclicityMode mode = CyclicityMode::HighestWeight;
  bool certified = true;
  std::vector<Violation> violations;
};

// Highest-weight mode tests ordered pairs i < j, irreducible mode all i != j.
// Throws InputError for nodes outside the table's rank.
CyclicityReport check_cyclicity(std::span<const TensorFactor> factors, const SSetTable& s, CyclicityMode mode);

struct WeylModuleSpec {
  std::vector<std::vector<GaussianRational>> roots;  // roots of pi_1, ..., pi_l
  std::vector<TensorFactor> product;
  Weight lambda;
  CyclicityReport report;
};

// Orders all roots by (real part desc, imaginary part desc, node asc, input
// order) and checks the highest-weight condition on the result.
WeylModuleSpec build_ordered_product(const std::vector<std::vector<GaussianRational>>& roots, const SSetTable& s);

// D_1^{m_1} ... D_l^{m_l}
BigInt dimension_bound(std::span<const std::int64_t> lambda, std::span<const BigInt> fundamental_dims);

// s -> 2s; the exponents of q for the correspondence a_j - a_i = s  <->  q^{2s}.
std::vector<Rational> q_exponents(const std::vector<Rational>& differences);

}  // namespace yangian
