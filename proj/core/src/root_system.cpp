#include "yangian/root_system.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "yangian/errors.hpp"

namespace yangian {

Weight CartanData::simple_root(int j) const {
  Weight out(rank());
  for (int k = 1; k <= rank(); ++k) out[k - 1] = a(k, j);
  return out;
}

Weight CartanData::fundamental_weight(int i) const {
  Weight out(rank());
  out.at(i - 1) = 1;
  return out;
}

namespace {

// Leading principal minors of a symmetric rational matrix, via elimination.
bool positive_definite(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace

CartanData validate_cartan(IntMatrix cartan, std::vector<int> symmetrizer, std::string name) {
  const std::size_t n = cartan.size();
  if (n == 0) throw InputError("Cartan matrix is empty");
  for (const auto& row : cartan) {
    if (row.size() != n) throw InputError("Cartan matrix must be square");
  }
  if (symmetrizer.size() != n) throw InputError("symmetrizer length must equal the rank");
  for (int d : symmetrizer) {
    if (d <= 0) throw InputError("symmetrizer entries must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw InputError("diagonal Cartan entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw InputError("off-diagonal Cartan entries must be non-positive");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) throw InputError("a_ij = 0 must imply a_ji = 0");
      if (symmetrizer[i] * cartan[i][j] != symmetrizer[j] * cartan[j][i]) {
        throw InputError("D*A is not symmetric");
      }
    }
  }
  int g = 0;
  for (int d : symmetrizer) g = std::gcd(g, d);
  if (g != 1) throw InputError("symmetrizer entries are not coprime");

  std::vector<std::vector<Rational>> form(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) form[i][j] = Rational(symmetrizer[i] * cartan[i][j]);
  }
  if (!positive_definite(form)) throw InputError("Cartan matrix is not of finite type");
  return CartanData{std::move(name), std::move(cartan), std::move(symmetrizer)};
}

CartanData cartan_a1() { return validate_cartan({{2}}, {1}, "a1"); }
CartanData cartan_a2() { return validate_cartan({{2, -1}, {-1, 2}}, {1, 1}, "a2"); }
CartanData cartan_g2() { return validate_cartan({{2, -1}, {-3, 2}}, {3, 1}, "g2"); }

CartanData builtin_cartan(const std::string& name) {
  if (name == "a1") return cartan_a1();
  if (name == "a2") return cartan_a2();
  if (name == "g2") return cartan_g2();
  throw InputError("unknown built-in algebra '" + name + "'");
}

Weight WeylElement::apply(const Weight& w) const {
  Weight out(matrix.size(), 0);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) out[i] += matrix[i][j] * w[j];
  }
  return out;
}

WeylElement identity_element(int rank) {
  IntMatrix m(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return {m};
}

WeylElement simple_reflection(const CartanData& c, int i) {
  // s_i(lambda) = lambda - lambda_i * alpha_i
  WeylElement s = identity_element(c.rank());
  for (int k = 1; k <= c.rank(); ++k) s.matrix[k - 1][i - 1] -= c.a(k, i);
  return s;
}

WeylElement compose(const WeylElement& x, const WeylElement& y) {
  const std::size_t n = x.matrix.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x.matrix[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) m[i][j] += x.matrix[i][k] * y.matrix[k][j];
    }
  }
  return {m};
}

WeylElement word_product(const CartanData& c, const ReducedWord& word) {
  WeylElement w = identity_element(c.rank());
  for (int r : word) {
    if (!c.has_node(r)) throw InputError("word letter " + std::to_string(r) + " is not a node");
    w = compose(w, simple_reflection(c, r));
  }
  return w;
}

LongestElement weyl_longest(const CartanData& c) {
  constexpr std::size_t kMaxElements = 1'000'000;
  std::vector<WeylElement> gens;
  for (int i = 1; i <= c.rank(); ++i) gens.push_back(simple_reflection(c, i));

  // Breadth-first in lexicographic order of words: the first word that reaches
  // an element is its lexicographically least shortest word.
  std::map<IntMatrix, ReducedWord> seen;
  std::deque<std::pair<WeylElement, ReducedWord>> queue;
  WeylElement e = identity_element(c.rank());
  seen.emplace(e.matrix, ReducedWord{});
  queue.emplace_back(e, ReducedWord{});
  while (!queue.empty()) {
    auto [w, word] = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= c.rank(); ++i) {
      WeylElement next = compose(w, gens[i - 1]);
      if (seen.count(next.matrix)) continue;
      ReducedWord next_word = word;
      next_word.push_back(i);
      seen.emplace(next.matrix, next_word);
      if (seen.size() > kMaxElements) throw InputError("Weyl group exceeds enumeration guard");
      queue.emplace_back(std::move(next), std::move(next_word));
    }
  }

  // w0 sends every fundamental weight into the closed antidominant cone.
  for (const auto& [matrix, word] : seen) {
    bool antidominant = true;
    for (const auto& row : matrix) {
      for (auto x : row) antidominant = antidominant && x <= 0;
    }
    if (antidominant) return LongestElement{seen.size(), WeylElement{matrix}, word};
  }
  throw InvariantViolation("no longest element found");
}

std::vector<std::vector<std::int64_t>> positive_roots(const CartanData& c) {
  using Root = std::vector<std::int64_t>;
  const int n = c.rank();
  std::set<Root> roots;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    roots.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      std::int64_t pairing = 0;  // <r, alpha_i^vee>
      for (int j = 1; j <= n; ++j) pairing += r[j - 1] * c.a(i, j);
      Root next = r;
      next[i - 1] -= pairing;
      if (roots.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Root> positive;
  for (const auto& r : roots) {
    bool nonneg = true;
    for (auto x : r) nonneg = nonneg && x >= 0;
    if (nonneg) positive.push_back(r);
  }
  return positive;
}

bool is_reduced_word_for_longest(const CartanData& c, const ReducedWord& word) {
  for (int r : word) {
    if (!c.has_node(r)) return false;
  }
  if (word.size() != positive_roots(c).size()) return false;
  return word_product(c, word) == weyl_longest(c).w0;
}

PathExponents path_exponents(const CartanData& c, const ReducedWord& word, int fundamental) {
  if (!c.has_node(fundamental)) throw InputError("fundamental index out of range");
  if (!is_reduced_word_for_longest(c, word)) throw InputError("word is not a reduced expression of w0");
  PathExponents out{fundamental, word, std::vector<int>(word.size())};
  Weight current = c.fundamental_weight(fundamental);  // sigma_p(omega_i) = omega_i
  for (std::size_t j = word.size(); j-- > 0;) {
    const int r = word[j];
    const auto m = current[r - 1];
    if (m < 0) throw InvariantViolation("negative path exponent");
    out.exponents[j] = static_cast<int>(m);
    current = simple_reflection(c, r).apply(current);
  }
  return out;
}

BigInt weyl_dim(const CartanData& c, const Weight& highest) {
  if (static_cast<int>(highest.size()) != c.rank()) throw InputError("weight has wrong rank");
  for (auto x : highest) {
    if (x < 0) throw InputError("weight is not dominant");
  }
  // (omega_i, alpha_j) = delta_ij d_j, so (lambda, alpha) = sum_j lambda_j c_j d_j.
  Rational dim = 1;
  for (const auto& root : positive_roots(c)) {
    std::int64_t shifted = 0;
    std::int64_t rho = 0;
    for (int j = 0; j < c.rank(); ++j) {
      shifted += (highest[j] + 1) * root[j] * c.symmetrizer[j];
      rho += root[j] * c.symmetrizer[j];
    }
    dim *= Rational(shifted, rho);
  }
  if (denominator_of(dim) != 1) throw InvariantViolation("Weyl dimension is not an integer");
  return numerator_of(dim);
}

}  // namespace yangian
