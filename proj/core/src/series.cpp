#include "yangian/series.hpp"

#include <algorithm>

#include "yangian/errors.hpp"

namespace yangian {

ParamSeries::ParamSeries(unsigned order, std::vector<ParamPoly> coefficients) : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

ParamSeries ParamSeries::constant(unsigned order, ParamPoly value) {
  ParamSeries s(order);
  s.coeffs_[0] = std::move(value);
  return s;
}

ParamSeries ParamSeries::truncated(unsigned order) const {
  ParamSeries out(std::min(order, this->order()));
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

ParamSeries& ParamSeries::operator+=(const ParamSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

ParamSeries& ParamSeries::operator-=(const ParamSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

ParamSeries operator*(const ParamSeries& lhs, const ParamSeries& rhs) {
  const unsigned n = std::min(lhs.order(), rhs.order());
  ParamSeries out(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

std::string ParamSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const ParamPoly& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term = c.term_count() > 1 ? "(" + c.to_string() + ")" : c.to_string();
    bool negative = false;
    if (c.term_count() == 1 && term.front() == '-') {
      negative = true;
      term.erase(0, 1);
    }
    if (k > 0) {
      const std::string power = "u^-" + std::to_string(k);
      term = term == "1" ? power : term + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out + " + O(u^-" + std::to_string(coeffs_.size()) + ")";
}

namespace {

// Coefficients of x^k in p(1/x) * x^deg for a monic p: the reversed coefficient list.
std::vector<ParamPoly> reversed(const UniPoly& p, unsigned order) {
  std::vector<ParamPoly> out(order + 1);
  const auto n = static_cast<std::size_t>(p.degree());
  for (std::size_t k = 0; k <= n && k <= order; ++k) out[k] = p.coefficient(n - k);
  return out;
}

}  // namespace

ParamSeries series_from_poly_ratio(const UniPoly& num, const UniPoly& den, unsigned order) {
  if (!num.is_monic() || !den.is_monic()) throw InputError("series_from_poly_ratio: polynomials must be monic");
  if (num.degree() != den.degree()) throw InputError("series_from_poly_ratio: degree mismatch");

  const auto n = reversed(num, order);
  const auto d = reversed(den, order);  // d[0] == 1
  std::vector<ParamPoly> q(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    ParamPoly acc = n[k];
    for (unsigned j = 1; j <= k; ++j) acc -= d[j] * q[k - j];
    q[k] = std::move(acc);
  }
  return ParamSeries(order, std::move(q));
}

ParamSeries series_log(const ParamSeries& s) {
  if (s[0] != ParamPoly(1)) throw InputError("series_log: constant term must be 1");
  const unsigned n = s.order();
  // L' = S'/S in x = u^-1, then integrate.
  std::vector<ParamPoly> q(n);
  for (unsigned k = 0; k < n; ++k) {
    ParamPoly acc = s[k + 1] * Rational(k + 1);
    for (unsigned j = 1; j <= k; ++j) acc -= s[j] * q[k - j];
    q[k] = std::move(acc);
  }
  ParamSeries out(n);
  for (unsigned k = 1; k <= n; ++k) out[k] = q[k - 1] / Rational(k);
  return out;
}

ParamSeries series_exp(const ParamSeries& s) {
  if (!s[0].is_zero()) throw InputError("series_exp: constant term must be 0");
  const unsigned n = s.order();
  ParamSeries out(n);
  out[0] = ParamPoly(1);
  for (unsigned k = 1; k <= n; ++k) {
    ParamPoly acc;
    for (unsigned j = 1; j <= k; ++j) acc += s[j] * out[k - j] * Rational(j);
    out[k] = acc / Rational(k);
  }
  return out;
}

ParamSeries series_rescale(const ParamSeries& s, int d) {
  if (d <= 0) throw InputError("series_rescale: scale factor must be a positive integer");
  ParamSeries out = s;
  Rational scale = 1;
  for (unsigned k = 1; k <= s.order(); ++k) {
    scale *= d;
    out[k] = s[k] / scale;
  }
  return out;
}

}  // namespace yangian
