#include "yangian/rational.hpp"

#include <cctype>

#include "yangian/errors.hpp"

namespace yangian {

BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

Rational ipow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string out = to_string(z.re);
  if (z.im < 0) {
    out += "-" + to_string(Rational(-z.im));
  } else {
    out += "+" + to_string(z.im);
  }
  return out + "i";
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputError("empty spectral parameter");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));

  // Split at the sign that starts the imaginary part; a leading '-' belongs to the real part.
  auto split = s.find_last_of("+-");
  if (split == std::string::npos || split == 0) {
    throw InputError("malformed spectral parameter '" + std::string(text) + "' (real part required)");
  }
  Rational re = parse_rational(std::string_view(s).substr(0, split));
  std::string_view imag = std::string_view(s).substr(split + 1, s.size() - split - 2);
  Rational im = parse_rational(imag);
  if (s[split] == '-') im = -im;
  return {re, im};
}

}  // namespace yangian
