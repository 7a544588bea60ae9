#include "yangian/cyclicity.hpp"

#include <algorithm>
#include <numeric>

#include "yangian/errors.hpp"

namespace yangian {

std::vector<TSet> compute_t_sets(std::span<const WalkReport> reports, const CartanData& c) {
  std::vector<TSet> out;
  std::vector<const WalkReport*> ordered;
  for (const auto& r : reports) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const WalkReport* x, const WalkReport* y) { return x->fundamental < y->fundamental; });

  for (const WalkReport* report : ordered) {
    for (int node = 1; node <= c.rank(); ++node) {
      TSet t{report->fundamental, node, {}};
      const Rational slope(1, c.d(node));
      for (const auto& step : report->steps) {
        if (step.node != node) continue;
        if (!step.roots) {
          throw SymbolicRootsUnavailable("step " + std::to_string(step.item) + " of the omega_" +
                                         std::to_string(report->fundamental) + " walk has no affine roots");
        }
        for (const auto& root : *step.roots) {
          if (root.slope != slope) {
            throw InvariantViolation("root " + root.to_string() + " at node " + std::to_string(node) +
                                     " does not have slope 1/d");
          }
          t.roots.push_back(root);
        }
      }
      std::sort(t.roots.begin(), t.roots.end());
      t.roots.erase(std::unique(t.roots.begin(), t.roots.end()), t.roots.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<SSet> compute_s_sets(std::span<const TSet> tsets, const CartanData& c) {
  std::vector<SSet> out;
  for (const auto& t : tsets) {
    const int d = c.d(t.acting_node);
    SSet s{t.earlier_node, t.acting_node, {}};
    for (const auto& root : t.roots) {
      if (root.slope != Rational(1, d)) throw InvariantViolation("T set root " + root.to_string() + " has wrong slope");
      s.differences.emplace_back(d * (1 + root.intercept));
    }
    std::sort(s.differences.begin(), s.differences.end());
    s.differences.erase(std::unique(s.differences.begin(), s.differences.end()), s.differences.end());
    out.push_back(std::move(s));
  }
  return out;
}

SSetTable::SSetTable(int rank, std::span<const SSet> sets) : rank_(rank) {
  for (int b = 1; b <= rank; ++b) {
    for (int c = 1; c <= rank; ++c) sets_[{b, c}];
  }
  for (const auto& s : sets) sets_[{s.earlier_node, s.acting_node}] = s.differences;
}

const std::vector<Rational>& SSetTable::at(int earlier, int acting) const {
  auto it = sets_.find({earlier, acting});
  if (it == sets_.end()) {
    throw InputError("no S set for node pair (" + std::to_string(earlier) + ", " + std::to_string(acting) + ")");
  }
  return it->second;
}

std::vector<SSet> SSetTable::all() const {
  std::vector<SSet> out;
  for (const auto& [key, diffs] : sets_) out.push_back({key.first, key.second, diffs});
  return out;
}

SSetTable derive_s_sets(const CartanData& c, const ReducedWord& word, unsigned order) {
  std::vector<WalkReport> reports;
  for (int i = 1; i <= c.rank(); ++i) reports.push_back(run_walk(c, word, i, order));
  const auto t = compute_t_sets(reports, c);
  const auto s = compute_s_sets(t, c);
  return SSetTable(c.rank(), s);
}

CyclicityReport check_cyclicity(std::span<const TensorFactor> factors, const SSetTable& s, CyclicityMode mode) {
  for (const auto& f : factors) {
    if (f.node < 1 || f.node > s.rank()) throw InputError("factor node " + std::to_string(f.node) + " out of range");
  }
  CyclicityReport report;
  report.mode = mode;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (i == j) continue;
      if (mode == CyclicityMode::HighestWeight && j < i) continue;
      const GaussianRational diff = factors[j].parameter - factors[i].parameter;
      if (!diff.is_real()) continue;  // S sets are rational
      const auto& set = s.at(factors[i].node, factors[j].node);
      if (std::binary_search(set.begin(), set.end(), diff.re)) {
        report.violations.push_back({i + 1, j + 1, diff, diff.re});
      }
    }
  }
  report.certified = report.violations.empty();
  return report;
}

WeylModuleSpec build_ordered_product(const std::vector<std::vector<GaussianRational>>& roots, const SSetTable& s) {
  if (static_cast<int>(roots.size()) > s.rank()) throw InputError("more root lists than nodes");
  struct Entry {
    TensorFactor factor;
    std::size_t input_index;
  };
  std::vector<Entry> entries;
  WeylModuleSpec spec;
  spec.roots = roots;
  spec.roots.resize(s.rank());
  spec.lambda.assign(s.rank(), 0);
  std::size_t counter = 0;
  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    spec.lambda[i] = static_cast<std::int64_t>(spec.roots[i].size());
    for (const auto& r : spec.roots[i]) entries.push_back({{static_cast<int>(i + 1), r}, counter++});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    const auto& p = x.factor.parameter;
    const auto& q = y.factor.parameter;
    if (p.re != q.re) return p.re > q.re;
    if (p.im != q.im) return p.im > q.im;
    if (x.factor.node != y.factor.node) return x.factor.node < y.factor.node;
    return x.input_index < y.input_index;
  });
  for (const auto& e : entries) spec.product.push_back(e.factor);
  spec.report = check_cyclicity(spec.product, s, CyclicityMode::HighestWeight);
  return spec;
}

BigInt dimension_bound(std::span<const std::int64_t> lambda, std::span<const BigInt> fundamental_dims) {
  if (lambda.size() != fundamental_dims.size()) throw InputError("lambda and fundamental dimensions differ in length");
  BigInt out = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw InputError("lambda must be dominant");
    if (fundamental_dims[i] <= 0) throw InputError("fundamental dimensions must be positive");
    out *= boost::multiprecision::pow(fundamental_dims[i], static_cast<unsigned>(lambda[i]));
  }
  return out;
}

std::vector<Rational> q_exponents(const std::vector<Rational>& differences) {
  std::vector<Rational> out;
  for (const auto& s : differences) out.emplace_back(2 * s);
  return out;
}

}  // namespace yangian
