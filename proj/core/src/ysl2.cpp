#include "yangian/ysl2.hpp"

#include <sstream>

#include "yangian/errors.hpp"

namespace yangian::sl2 {

std::string to_string(const GeneratorLabel& g) {
  const char* name = g.kind == GenKind::XPlus ? "x+" : (g.kind == GenKind::XMinus ? "x-" : "h");
  return std::string(name) + "_" + std::to_string(g.level);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  const std::size_t n = lhs.n_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = lhs(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += x * rhs(k, j);
    }
  }
  return out;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << yangian::to_string((*this)(i, j));
    os << "]";
  }
  return os.str();
}

EvalModule::EvalModule(unsigned m, Rational a, unsigned max_level) : m_(m), a_(std::move(a)), max_level_(max_level) {
  if (m == 0) throw InputError("V_m(a) requires m >= 1");
}

Matrix EvalModule::matrix(GeneratorLabel g) const {
  const unsigned bound = g.kind == GenKind::H ? 2 * max_level_ : max_level_;
  if (g.level > bound) throw InputError("generator level " + std::to_string(g.level) + " exceeds configured maximum");
  const unsigned k = g.level;
  Matrix out(dimension());
  for (unsigned s = 0; s <= m_; ++s) {
    const Rational up = ipow(Rational(s + a_), k);           // (s+a)^k
    const Rational down = ipow(Rational(s + a_ - 1), k);     // (s+a-1)^k
    switch (g.kind) {
      case GenKind::XPlus:
        if (s + 1 <= m_) out(s + 1, s) = up * (s + 1);
        break;
      case GenKind::XMinus:
        if (s >= 1) out(s - 1, s) = down * (m_ - s + 1);
        break;
      case GenKind::H:
        out(s, s) = down * s * (m_ - s + 1) - up * (s + 1) * (m_ - s);
        break;
    }
  }
  return out;
}

ModuleVector EvalModule::act(GeneratorLabel g, const ModuleVector& v) const {
  if (v.size() != dimension()) throw InputError("vector dimension does not match module");
  const Matrix mat = matrix(g);
  ModuleVector out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = 0; j < dimension(); ++j) out[i] += mat(i, j) * v[j];
  }
  return out;
}

ModuleVector EvalModule::basis_vector(unsigned s) const {
  ModuleVector v(dimension());
  v.at(s) = 1;
  return v;
}

std::vector<Rational> EvalModule::drinfeld_roots() const {
  std::vector<Rational> out;
  for (unsigned t = 0; t < m_; ++t) out.emplace_back(a_ + t);
  return out;
}

std::string RelationReport::describe() const {
  if (ok) return "all relations hold (" + std::to_string(checked) + " identities)";
  return relation + " fails at r=" + std::to_string(r) + ", s=" + std::to_string(s) + "; residual " + residual.to_string();
}

RelationReport check_relations(unsigned m, const Rational& a, unsigned max_level) {
  // Families 3 and 4 need level max_level + 1 on the left-hand sides.
  const EvalModule mod(m, a, max_level + 1);
  const unsigned top = max_level + 1;
  std::vector<Matrix> xp, xm, h;
  for (unsigned k = 0; k <= top; ++k) {
    xp.push_back(mod.matrix({GenKind::XPlus, k}));
    xm.push_back(mod.matrix({GenKind::XMinus, k}));
  }
  for (unsigned k = 0; k <= 2 * top; ++k) h.push_back(mod.matrix({GenKind::H, k}));

  RelationReport report;
  auto expect_zero = [&](const Matrix& residual, const char* name, unsigned r, unsigned s) {
    ++report.checked;
    if (report.ok && !residual.is_zero()) {
      report.ok = false;
      report.relation = name;
      report.r = r;
      report.s = s;
      report.residual = residual;
    }
  };

  for (unsigned r = 0; r <= max_level && report.ok; ++r) {
    for (unsigned s = 0; s <= max_level && report.ok; ++s) {
      expect_zero(commutator(h[r], h[s]), "[h_r, h_s] = 0", r, s);
      expect_zero(commutator(h[0], xp[s]) - Rational(2) * xp[s], "[h_0, x+_s] = 2 x+_s", r, s);
      expect_zero(commutator(h[0], xm[s]) + Rational(2) * xm[s], "[h_0, x-_s] = -2 x-_s", r, s);
      expect_zero(commutator(xp[r], xm[s]) - h[r + s], "[x+_r, x-_s] = h_{r+s}", r, s);
      expect_zero(commutator(h[r + 1], xp[s]) - commutator(h[r], xp[s + 1]) - anticommutator(h[r], xp[s]),
                  "[h_{r+1}, x+_s] - [h_r, x+_{s+1}] = h_r x+_s + x+_s h_r", r, s);
      expect_zero(commutator(h[r + 1], xm[s]) - commutator(h[r], xm[s + 1]) + anticommutator(h[r], xm[s]),
                  "[h_{r+1}, x-_s] - [h_r, x-_{s+1}] = -(h_r x-_s + x-_s h_r)", r, s);
      expect_zero(commutator(xp[r + 1], xp[s]) - commutator(xp[r], xp[s + 1]) - anticommutator(xp[r], xp[s]),
                  "[x+_{r+1}, x+_s] - [x+_r, x+_{s+1}] = x+_r x+_s + x+_s x+_r", r, s);
      expect_zero(commutator(xm[r + 1], xm[s]) - commutator(xm[r], xm[s + 1]) + anticommutator(xm[r], xm[s]),
                  "[x-_{r+1}, x-_s] - [x-_r, x-_{s+1}] = -(x-_r x-_s + x-_s x-_r)", r, s);
    }
  }
  return report;
}

namespace {

std::string vector_string(const ModuleVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + yangian::to_string(v[i]);
  return out + ")";
}

ModuleVector multiply(const Matrix& mat, const ModuleVector& v) {
  ModuleVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += mat(i, j) * v[j];
  }
  return out;
}

}  // namespace

std::string InsertionReport::describe() const {
  return std::string(ok ? "match" : "MISMATCH") + ": lhs " + vector_string(lhs) + ", p_k = " +
         yangian::to_string(power_sum) + ", rhs " + vector_string(rhs);
}

InsertionReport symmetrized_insertion_check(unsigned m, const Rational& a, unsigned k) {
  const EvalModule mod(m, a, std::max(k, EvalModule::kDefaultMaxLevel));
  const Matrix x0 = mod.matrix({GenKind::XMinus, 0});
  const Matrix xk = mod.matrix({GenKind::XMinus, k});

  std::vector<Matrix> powers{Matrix::identity(mod.dimension())};
  for (unsigned t = 1; t <= m; ++t) powers.push_back(powers.back() * x0);

  Matrix sum(mod.dimension());
  for (unsigned t = 0; t < m; ++t) sum += powers[t] * xk * powers[m - 1 - t];

  InsertionReport report;
  for (unsigned t = 1; t <= m; ++t) report.power_sum += ipow(Rational(a + t - 1), k);
  report.lhs = multiply(sum, mod.highest());
  report.rhs = multiply(report.power_sum * powers[m], mod.highest());
  report.ok = report.lhs == report.rhs;
  return report;
}

ParamSeries h_series_on_basis(const EvalModule& mod, unsigned s, unsigned order) {
  ParamSeries out(order);
  out[0] = ParamPoly(1);
  for (unsigned k = 0; k + 1 <= order; ++k) out[k + 1] = ParamPoly(mod.matrix({GenKind::H, k})(s, s));
  return out;
}

std::string SeriesReport::describe() const {
  if (ok) return "highest and lowest series match";
  return "highest: " + highest_actual.to_string() + " vs " + highest_expected.to_string() + "; lowest: " +
         lowest_actual.to_string() + " vs " + lowest_expected.to_string();
}

SeriesReport extremal_series_check(unsigned m, const Rational& a, unsigned order) {
  const EvalModule mod(m, a, std::max((order + 1) / 2, EvalModule::kDefaultMaxLevel));
  std::vector<ParamPoly> roots;
  for (const auto& r : mod.drinfeld_roots()) roots.emplace_back(r);
  const UniPoly pi = UniPoly::from_roots(roots);

  SeriesReport report;
  report.highest_actual = h_series_on_basis(mod, m, order);
  report.lowest_actual = h_series_on_basis(mod, 0, order);
  report.highest_expected = series_from_poly_ratio(pi.shifted(ParamPoly(1)), pi, order);
  report.lowest_expected = series_from_poly_ratio(pi.shifted(ParamPoly(-1)), pi, order);
  report.ok = report.highest_actual == report.highest_expected && report.lowest_actual == report.lowest_expected;
  return report;
}

}  // namespace yangian::sl2
