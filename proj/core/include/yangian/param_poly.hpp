#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "yangian/rational.hpp"

namespace yangian {

/// Polynomial over Q in the formal spectral parameter `a`.
///
/// Every eigenvalue produced along an extremal path is of this form, so all
/// coefficient arithmetic in the engine happens here. Coefficients are
/// stored lowest power first with trailing zeros trimmed; the zero polynomial
/// has no coefficients and degree() == -1.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(Rational constant);  // NOLINT: implicit promotion of scalars is intended
  ParamPoly(int constant) : ParamPoly(Rational(constant)) {}  // NOLINT
  explicit ParamPoly(std::vector<Rational> coefficients);

  // The polynomial `a`.
  static ParamPoly variable();
  // slope*a + intercept
  static ParamPoly affine(const Rational& slope, const Rational& intercept);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t term_count() const;

  Rational coefficient(std::size_t power) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& a) const;

  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const ParamPoly& rhs);
  ParamPoly& operator*=(const Rational& rhs);
  ParamPoly& operator/=(const Rational& rhs);

  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(ParamPoly lhs, const ParamPoly& rhs) { return lhs *= rhs; }
  friend ParamPoly operator*(ParamPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend ParamPoly operator*(const Rational& lhs, ParamPoly rhs) { return rhs *= lhs; }
  friend ParamPoly operator/(ParamPoly lhs, const Rational& rhs) { return lhs /= rhs; }
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  // Descending powers, e.g. "6*a^2 + 6", "1/3*a + 7/6", "-a - 1/2", "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in u with ParamPoly coefficients (lowest power of u first).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ParamPoly> coefficients);

  static UniPoly one() { return UniPoly({ParamPoly(1)}); }
  // (u - r_1)(u - r_2)...; the empty product is 1.
  static UniPoly from_roots(const std::vector<ParamPoly>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;

  const ParamPoly& coefficient(std::size_t power) const;
  const std::vector<ParamPoly>& coefficients() const { return coeffs_; }

  // p(u + shift)
  UniPoly shifted(const ParamPoly& shift) const;
  // p(factor * u) / factor^deg: the monic polynomial whose roots are the
  // roots of p divided by factor.
  UniPoly scaled_variable(const Rational& factor) const;
  // Coefficients in u after substituting a = value.
  std::vector<Rational> specialize(const Rational& value) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Canonical form: descending powers of u, e.g. "u^2 + (-2/3*a - 1)*u + (1/9*a^2 + 1/3*a + 2/9)".
  std::string to_string() const;

 private:
  void trim();
  std::vector<ParamPoly> coeffs_;
};

}  // namespace yangian
