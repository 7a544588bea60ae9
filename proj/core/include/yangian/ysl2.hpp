#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yangian/rational.hpp"
#include "yangian/series.hpp"

// Explicit evaluation modules V_m(a) of Y(sl2) over Q. Everything here works
// with a concrete rational `a` and dense matrices; it is the brute-force
// reference the symbolic walk is checked against.
namespace yangian::sl2 {

enum class GenKind { XPlus, XMinus, H };

struct GeneratorLabel {
  GenKind kind;
  unsigned level;
};

std::string to_string(const GeneratorLabel& g);

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }
inline Matrix anticommutator(const Matrix& x, const Matrix& y) { return x * y + y * x; }

// Coordinates in the basis w_0..w_m.
using ModuleVector = std::vector<Rational>;

// V_m(a), basis w_0..w_m:
//   x+_k w_s = (s+a)^k (s+1) w_{s+1}
//   x-_k w_s = (s+a-1)^k (m-s+1) w_{s-1}
//   h_k  w_s = ((s+a-1)^k s(m-s+1) - (s+a)^k (s+1)(m-s)) w_s
// w_m is the highest weight vector, with roots a, a+1, ..., a+m-1.
class EvalModule {
 public:
  static constexpr unsigned kDefaultMaxLevel = 8;

  EvalModule(unsigned m, Rational a, unsigned max_level = kDefaultMaxLevel);

  unsigned m() const { return m_; }
  const Rational& a() const { return a_; }
  std::size_t dimension() const { return m_ + 1; }
  unsigned max_level() const { return max_level_; }

  // h levels may go up to 2*max_level (needed by [x+_r, x-_s] = h_{r+s}).
  Matrix matrix(GeneratorLabel g) const;
  ModuleVector act(GeneratorLabel g, const ModuleVector& v) const;

  ModuleVector basis_vector(unsigned s) const;
  ModuleVector highest() const { return basis_vector(m_); }
  ModuleVector lowest() const { return basis_vector(0); }

  // Roots a, a+1, ..., a+m-1 of the associated polynomial.
  std::vector<Rational> drinfeld_roots() const;

 private:
  unsigned m_;
  Rational a_;
  unsigned max_level_;
};

struct RelationReport {
  bool ok = true;
  std::string relation;  // empty when ok
  unsigned r = 0;
  unsigned s = 0;
  Matrix residual;
  std::size_t checked = 0;

  std::string describe() const;
};

// All rank-1 defining-relation families, r, s <= max_level:
//   [h_r, h_s] = 0
//   [h_0, x±_s] = ±2 x±_s
//   [x+_r, x-_s] = h_{r+s}
//   [h_{r+1}, x±_s] - [h_r, x±_{s+1}] = ±(h_r x±_s + x±_s h_r)
//   [x±_{r+1}, x±_s] - [x±_r, x±_{s+1}] = ±(x±_r x±_s + x±_s x±_r)
// Stops at the first violation.
RelationReport check_relations(unsigned m, const Rational& a, unsigned max_level);

struct InsertionReport {
  bool ok = true;
  ModuleVector lhs;
  ModuleVector rhs;
  Rational power_sum;
  std::string describe() const;
};

// sum_{t=0}^{m-1} (x-_0)^t x-_k (x-_0)^{m-1-t} w_m  ==  p_k (x-_0)^m w_m,
// p_k = sum_{t=1}^m (a+t-1)^k, by explicit matrix products.
InsertionReport symmetrized_insertion_check(unsigned m, const Rational& a, unsigned k);

struct SeriesReport {
  bool ok = true;
  ParamSeries highest_actual, highest_expected;
  ParamSeries lowest_actual, lowest_expected;
  std::string describe() const;
};

// h(u) on w_m equals pi(u+1)/pi(u) and on w_0 equals pi(u-1)/pi(u),
// pi(u) = prod_{t=0}^{m-1} (u - (a+t)), to order N.
SeriesReport extremal_series_check(unsigned m, const Rational& a, unsigned order);

// Eigenvalue series 1 + sum_k h_k u^{-k-1} of a basis vector, read off the diagonal.
ParamSeries h_series_on_basis(const EvalModule& mod, unsigned s, unsigned order);

}  // namespace yangian::sl2
