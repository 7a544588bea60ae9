#pragma once

#include <compare>
#include <string>
#include <vector>

#include "yangian/param_poly.hpp"

namespace yangian {

// Power sums p_k = sum_t R_t^k of a root multiset of size `degree`.
// sums[k - 1] holds p_k; p_0 is the multiset size.
struct PowerSums {
  unsigned degree = 0;
  std::vector<ParamPoly> sums;

  ParamPoly p(unsigned k) const;
  unsigned available() const { return static_cast<unsigned>(sums.size()); }
  friend bool operator==(const PowerSums&, const PowerSums&) = default;
};

PowerSums power_sums_of_roots(const std::vector<ParamPoly>& roots, unsigned count);

// Newton's identities: e_1..e_m from p_1..p_m (e_0 = 1).
std::vector<ParamPoly> elementary_from_power_sums(const PowerSums& p);

// Monic degree-m polynomial whose root multiset has the given power sums.
UniPoly power_sums_to_monic(const PowerSums& p);

// Fills p_{m+1}..p_K from the recurrence p_k = sum_{i=1}^m (-1)^{i-1} e_i p_{k-i}.
PowerSums extend_power_sums(const PowerSums& p, unsigned count);

// True when every stored p_k with k > degree satisfies the recurrence.
bool power_sums_consistent(const PowerSums& p);

// A root of the form slope*a + intercept.
struct AffineRoot {
  Rational slope;
  Rational intercept;

  ParamPoly as_poly() const { return ParamPoly::affine(slope, intercept); }
  std::string to_string() const { return as_poly().to_string(); }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend std::strong_ordering operator<=>(const AffineRoot& x, const AffineRoot& y) {
    if (x.slope != y.slope) return x.slope < y.slope ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.intercept != y.intercept) {
      return x.intercept < y.intercept ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
};

// Rational roots (with multiplicity, ascending) of a univariate polynomial with
// rational coefficients, lowest power first. Throws SymbolicRootsUnavailable if
// the polynomial does not split over Q.
std::vector<Rational> rational_roots(std::vector<Rational> coefficients);

// Roots of a monic q(u) with ParamPoly coefficients, each affine in `a`.
//
// `a` is specialized at deg(q)+1 points, each specialization is split over Q,
// roots are paired across specializations by ascending order, interpolated and
// finally re-expanded against q. Any failure throws SymbolicRootsUnavailable.
// The result is sorted (slope, then intercept).
std::vector<AffineRoot> roots_affine_in_param(const UniPoly& q);

}  // namespace yangian
