#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace yangian {

using BigInt = boost::multiprecision::cpp_int;
// Always reduced, denominator positive.
using Rational = boost::multiprecision::cpp_rational;

BigInt numerator_of(const Rational& r);
BigInt denominator_of(const Rational& r);

// "p" or "p/q".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

// Grammar: [-]digits[/digits]. Throws InputError.
Rational parse_rational(std::string_view text);

Rational ipow(const Rational& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

// Exact complex number with rational parts. Used for spectral parameters.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_real() const { return im == 0; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {Rational(x.re + y.re), Rational(x.im + y.im)};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {Rational(x.re - y.re), Rational(x.im - y.im)};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {Rational(x.re * y.re - x.im * y.im), Rational(x.re * y.im + x.im * y.re)};
  }
};

// Renders in the same grammar parse_gaussian accepts, e.g. "-1+2/3i", "5/2".
std::string to_string(const GaussianRational& z);

// Grammar: [-]p[/q][(+|-)r[/s]i]. Whitespace is ignored. Throws InputError.
GaussianRational parse_gaussian(std::string_view text);

}  // namespace yangian
