#pragma once

#include <string>
#include <vector>

#include "yangian/param_poly.hpp"

namespace yangian {

// Truncated series c_0 + c_1 u^-1 + ... + c_N u^-N with ParamPoly coefficients.
//
// Eigenvalue series of h_i(u) = 1 + sum_r h_{i,r} u^{-r-1} and of its
// logarithm H_i(u) = sum_k H_{i,k} u^{-k-1} are both stored this way, so the
// level-k generator sits at index k + 1. Binary operations on series of
// different orders truncate to the smaller one.
class ParamSeries {
 public:
  ParamSeries() : coeffs_(1) {}
  explicit ParamSeries(unsigned order) : coeffs_(order + 1) {}
  ParamSeries(unsigned order, std::vector<ParamPoly> coefficients);

  static ParamSeries constant(unsigned order, ParamPoly value);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const ParamPoly& operator[](std::size_t power) const { return coeffs_.at(power); }
  ParamPoly& operator[](std::size_t power) { return coeffs_.at(power); }
  const std::vector<ParamPoly>& coefficients() const { return coeffs_; }

  // Eigenvalue of the level-k generator: the coefficient of u^{-k-1}.
  const ParamPoly& level(unsigned k) const { return coeffs_.at(k + 1); }

  ParamSeries truncated(unsigned order) const;

  ParamSeries& operator+=(const ParamSeries& rhs);
  ParamSeries& operator-=(const ParamSeries& rhs);
  friend ParamSeries operator+(ParamSeries lhs, const ParamSeries& rhs) { return lhs += rhs; }
  friend ParamSeries operator-(ParamSeries lhs, const ParamSeries& rhs) { return lhs -= rhs; }
  friend ParamSeries operator*(const ParamSeries& lhs, const ParamSeries& rhs);
  friend bool operator==(const ParamSeries&, const ParamSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<ParamPoly> coeffs_;
};

// num(u)/den(u) expanded in u^-1. Both must be monic of the same degree, so
// the constant term is 1.
ParamSeries series_from_poly_ratio(const UniPoly& num, const UniPoly& den, unsigned order);

// Requires constant term 1. Result has constant term 0.
ParamSeries series_log(const ParamSeries& s);

// Requires constant term 0. Result has constant term 1.
ParamSeries series_exp(const ParamSeries& s);

// Substitutes u = d*v: coefficient k is divided by d^k. This is the passage
// from h_i(u) to the sl2-normalized h~_i(v) for a node with symmetrizer d.
ParamSeries series_rescale(const ParamSeries& s, int d);

}  // namespace yangian
