#include "yangian/symmetric.hpp"

#include <algorithm>
#include <set>

#include "yangian/errors.hpp"

namespace yangian {

ParamPoly PowerSums::p(unsigned k) const {
  if (k == 0) return ParamPoly(static_cast<int>(degree));
  if (k > sums.size()) throw InputError("power sum p_" + std::to_string(k) + " not available");
  return sums[k - 1];
}

PowerSums power_sums_of_roots(const std::vector<ParamPoly>& roots, unsigned count) {
  PowerSums out{static_cast<unsigned>(roots.size()), std::vector<ParamPoly>(count)};
  std::vector<ParamPoly> powers(roots.size(), ParamPoly(1));
  for (unsigned k = 1; k <= count; ++k) {
    ParamPoly acc;
    for (std::size_t t = 0; t < roots.size(); ++t) {
      powers[t] *= roots[t];
      acc += powers[t];
    }
    out.sums[k - 1] = std::move(acc);
  }
  return out;
}

std::vector<ParamPoly> elementary_from_power_sums(const PowerSums& p) {
  const unsigned m = p.degree;
  if (p.available() < m) throw InputError("need p_1..p_m to recover a degree-m polynomial");
  std::vector<ParamPoly> e(m + 1);
  e[0] = ParamPoly(1);
  for (unsigned k = 1; k <= m; ++k) {
    ParamPoly acc;
    for (unsigned i = 1; i <= k; ++i) {
      ParamPoly term = e[k - i] * p.sums[i - 1];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc / Rational(k);
  }
  return e;
}

UniPoly power_sums_to_monic(const PowerSums& p) {
  const unsigned m = p.degree;
  const auto e = elementary_from_power_sums(p);
  std::vector<ParamPoly> coeffs(m + 1);
  for (unsigned k = 0; k <= m; ++k) coeffs[m - k] = k % 2 == 0 ? e[k] : -e[k];
  return UniPoly(std::move(coeffs));
}

namespace {

ParamPoly newton_next(const std::vector<ParamPoly>& e, const std::vector<ParamPoly>& sums, unsigned k) {
  // p_k for k > m; sums is 0-based (sums[k-1] = p_k)
  const auto m = static_cast<unsigned>(e.size() - 1);
  ParamPoly acc;
  for (unsigned i = 1; i <= m; ++i) {
    ParamPoly term = e[i] * sums[k - i - 1];
    if (i % 2 == 1) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

PowerSums extend_power_sums(const PowerSums& p, unsigned count) {
  PowerSums out = p;
  if (count <= out.available()) return out;
  const auto e = elementary_from_power_sums(p);
  out.sums.resize(std::max(out.sums.size(), static_cast<std::size_t>(p.degree)));
  for (unsigned k = out.available() + 1; k <= count; ++k) {
    out.sums.push_back(p.degree == 0 ? ParamPoly() : newton_next(e, out.sums, k));
  }
  return out;
}

bool power_sums_consistent(const PowerSums& p) {
  if (p.available() < p.degree) return false;
  const auto e = elementary_from_power_sums(p);
  for (unsigned k = p.degree + 1; k <= p.available(); ++k) {
    const ParamPoly expected = p.degree == 0 ? ParamPoly() : newton_next(e, p.sums, k);
    if (p.sums[k - 1] != expected) return false;
  }
  return true;
}

// ---- rational roots ----

namespace {

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (u - r); r must be a root.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  const std::size_t n = c.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (std::size_t k = n; k-- > 0;) {
    carry = c[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

// Largest magnitude for which divisors are enumerated by trial division.
const BigInt kDivisorSearchLimit = BigInt(1) << 40;

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > kDivisorSearchLimit) {
    throw SymbolicRootsUnavailable("coefficients too large for rational root search");
  }
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw SymbolicRootsUnavailable("zero polynomial has no root multiset");

  std::vector<Rational> roots;
  while (c.size() > 1 && c.front() == 0) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  if (c.size() > 1) {
    BigInt lcm = 1;
    for (const auto& x : c) {
      BigInt den = denominator_of(x);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    const BigInt low = numerator_of(c.front() * lcm);
    const BigInt high = numerator_of(c.back() * lcm);
    std::set<Rational> candidates;
    for (const auto& num : positive_divisors(low)) {
      for (const auto& den : positive_divisors(high)) {
        Rational r(num, den);
        candidates.insert(r);
        candidates.insert(Rational(-r));
      }
    }
    for (const auto& r : candidates) {
      while (c.size() > 1 && horner(c, r) == 0) {
        roots.push_back(r);
        c = deflate(c, r);
      }
      if (c.size() == 1) break;
    }
  }
  if (c.size() != 1) throw SymbolicRootsUnavailable("polynomial does not split over the rationals");
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<AffineRoot> roots_affine_in_param(const UniPoly& q) {
  if (!q.is_monic()) throw InputError("roots_affine_in_param: polynomial must be monic");
  if (q.degree() <= 0) return {};

  // Every affine root passes through a root at a = 0 and a root at a = 1, so
  // the candidate lines are the pairs (r0, r1). Each candidate is confirmed
  // by exact division, which also settles multiplicities and crossings.
  const auto at0 = rational_roots(q.specialize(Rational(0)));
  const auto at1 = rational_roots(q.specialize(Rational(1)));
  std::vector<AffineRoot> candidates;
  for (const auto& r0 : at0) {
    for (const auto& r1 : at1) {
      AffineRoot c{r1 - r0, r0};
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
    }
  }

  std::vector<ParamPoly> rest;
  for (int k = 0; k <= q.degree(); ++k) rest.push_back(q.coefficient(static_cast<unsigned>(k)));
  std::vector<AffineRoot> roots;
  bool progress = true;
  while (rest.size() > 1 && progress) {
    progress = false;
    for (const auto& c : candidates) {
      // Synthetic division by (u - c); the remainder must vanish identically.
      const ParamPoly x = c.as_poly();
      std::vector<ParamPoly> quotient(rest.size() - 1);
      ParamPoly carry = rest.back();
      for (std::size_t k = rest.size() - 1; k-- > 0;) {
        quotient[k] = carry;
        carry = rest[k] + x * carry;
      }
      if (carry.is_zero()) {
        roots.push_back(c);
        rest = std::move(quotient);
        progress = true;
        break;
      }
    }
  }
  if (rest.size() > 1) throw SymbolicRootsUnavailable("roots are not affine in the parameter");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace yangian
