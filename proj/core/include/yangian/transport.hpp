#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yangian/root_system.hpp"
#include "yangian/series.hpp"
#include "yangian/symmetric.hpp"

namespace yangian {

/// Symbolic state of a walk down the extremal path of V_a(omega_i).
///
/// The extremal vector itself is never materialized. It is represented by the
/// eigenvalue series of H_i(u) = log h_i(u) for every node i, with coefficients
/// polynomial in the spectral parameter `a`. Extremal weight spaces are
/// one-dimensional, so these series determine everything the walk needs.
struct WalkState {
  CartanData cartan;
  unsigned order = 0;
  std::vector<ParamSeries> log_series;  // per node; level k at index k + 1
  Weight weight;                        // current extremal weight
  std::size_t steps_taken = 0;

  const ParamSeries& node_series(int i) const { return log_series.at(i - 1); }
};

inline constexpr unsigned kDefaultOrder = 8;

// On v^+ of V_a(omega_i0): h_i0(u) = (u - (a - d_i0)) / (u - a), all other h_i(u) = 1.
WalkState init_walk(const CartanData& c, int fundamental, unsigned order = kDefaultOrder);

struct StepPolynomial {
  UniPoly rescaled;      // monic in the sl2-normalized variable u/d_c
  UniPoly unscaled;      // monic in u, roots R_t = d_c * (rescaled roots)
  PowerSums power_sums;  // of the unscaled roots, extended through index `order`
};

/// Associated polynomial of the node-c sl2 submodule generated by the current
/// extremal vector, assumed highest weight for that copy with degree m.
///
/// On such a vector h_c(u) = pi(u + d_c)/pi(u) in unscaled roots, so
///   (k+1) H_{c,k} = -sum_{s=0}^{k} C(k+1, s) (-d_c)^{k+1-s} p_s,   p_0 = m,
/// which is triangular in p_1..p_m (the p_k coefficient is (k+1) d_c).
/// Throws InputError if m + 1 > order, InvariantViolation if H_{c,0} != d_c m.
StepPolynomial extract_step_poly(const WalkState& state, int node, unsigned m);

/// Moves the state across (x^-_{c,0})^m.
///
/// Uses the commutator of H_{i,k} with x^-_{c,l} in closed form:
///   H_{i,k} -= b p_k + sum_{0<=s<=k-2, k+s even} 2^{s-k} b^{k+1-s} C(k+1,s)/(k+1) p_s,
/// with b = d_i a_ic. Symmetrized insertions of x^-_{c,s} among the m copies of
/// x^-_{c,0} act on the highest vector by the unscaled power sum p_s.
WalkState apply_step(WalkState state, int node, unsigned m, const PowerSums& p);

// Per-step lowest-vector check: log h_c(u) == log(pi(u - d_c)/pi(u)).
bool lowest_vector_consistent(const WalkState& after, int node, const UniPoly& unscaled);
// Highest-vector check before a step: log h_c(u) == log(pi(u + d_c)/pi(u)).
bool highest_vector_consistent(const WalkState& before, int node, const UniPoly& unscaled);

struct StepRecord {
  std::size_t item = 0;        // 1-based row number among steps with m > 0
  std::size_t word_index = 0;  // j in r_1..r_p (1-based)
  int node = 0;
  unsigned exponent = 0;
  int rescale = 1;  // d_c; polynomials are in u/d_c
  UniPoly rescaled;
  UniPoly unscaled;
  PowerSums power_sums;
  std::optional<std::vector<AffineRoot>> roots;  // rescaled roots, when affine in a
  // (node, exponent) of the steps already applied, in application order.
  std::vector<std::pair<int, unsigned>> prefix;
  Weight weight_before;
  std::vector<ParamSeries> series_before;  // log series of every node on the step's vector
  std::vector<ParamSeries> series_after;
  bool highest_check = false;
  bool lowest_check = false;
};

struct WalkReport {
  int fundamental = 0;
  PathExponents path;
  unsigned order = 0;
  std::vector<StepRecord> steps;
  Weight final_weight;
};

// Full walk r_p, r_{p-1}, ..., r_1 with all crosschecks. Steps with m_j = 0
// produce no record. Throws InputError for bad words or order < max m_j + 2,
// InvariantViolation (with a diagnostic) on any failed crosscheck.
WalkReport run_walk(const CartanData& c, const ReducedWord& word, int fundamental, unsigned order = kDefaultOrder);

// "(x_{2,0}^-)^3 x_{1,0}^- v^+" for the given applied steps.
std::string describe_vector(const std::vector<std::pair<int, unsigned>>& prefix);

}  // namespace yangian
