#include "yangian/param_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace yangian {

// ---- ParamPoly ----

ParamPoly::ParamPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

ParamPoly::ParamPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ParamPoly ParamPoly::variable() { return ParamPoly(std::vector<Rational>{0, 1}); }

ParamPoly ParamPoly::affine(const Rational& slope, const Rational& intercept) {
  return ParamPoly(std::vector<Rational>{intercept, slope});
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t ParamPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational ParamPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational ParamPoly::evaluate(const Rational& a) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it;
  }
  return acc;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator/=(const Rational& rhs) {
  if (rhs == 0) throw std::domain_error("ParamPoly division by zero");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string ParamPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    std::string term;
    if (k == 0) {
      term = yangian::to_string(mag);
    } else {
      if (mag != 1) term = yangian::to_string(mag) + "*";
      term += "a";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ---- UniPoly ----

UniPoly::UniPoly(std::vector<ParamPoly> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_roots(const std::vector<ParamPoly>& roots) {
  UniPoly result = one();
  for (const auto& r : roots) result *= UniPoly({-r, ParamPoly(1)});
  return result;
}

bool UniPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == ParamPoly(1); }

const ParamPoly& UniPoly::coefficient(std::size_t power) const {
  static const ParamPoly zero;
  return power < coeffs_.size() ? coeffs_[power] : zero;
}

UniPoly UniPoly::shifted(const ParamPoly& shift) const {
  // Horner in (u + shift).
  UniPoly acc;
  const UniPoly step({shift, ParamPoly(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += UniPoly({*it});
  }
  return acc;
}

UniPoly UniPoly::scaled_variable(const Rational& factor) const {
  if (factor == 0) throw std::domain_error("scaled_variable: zero factor");
  if (is_zero()) return {};
  const auto n = coeffs_.size() - 1;
  std::vector<ParamPoly> out(coeffs_.size());
  for (std::size_t k = 0; k <= n; ++k) {
    // coefficient of u^k picks up factor^k / factor^n
    out[k] = coeffs_[k] / ipow(factor, static_cast<unsigned>(n - k));
  }
  return UniPoly(std::move(out));
}

std::vector<Rational> UniPoly::specialize(const Rational& value) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.evaluate(value));
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<ParamPoly> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const ParamPoly& c = coeffs_[k];
    if (c.is_zero()) continue;
    const std::string power = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
    std::string term;
    bool negative = false;
    if (c.term_count() > 1) {
      term = "(" + c.to_string() + ")";
      if (k > 0) term += "*" + power;
    } else {
      std::string s = c.to_string();
      if (s.front() == '-') {
        negative = true;
        s.erase(0, 1);
      }
      if (k == 0) {
        term = s;
      } else if (s == "1") {
        term = power;
      } else {
        term = s + "*" + power;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace yangian
