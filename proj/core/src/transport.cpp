#include "yangian/transport.hpp"

#include <algorithm>

#include "yangian/errors.hpp"

namespace yangian {

namespace {

ParamSeries log_ratio(const UniPoly& num, const UniPoly& den, unsigned order) {
  return series_log(series_from_poly_ratio(num, den, order));
}

}  // namespace

WalkState init_walk(const CartanData& c, int fundamental, unsigned order) {
  if (!c.has_node(fundamental)) throw InputError("fundamental index out of range");
  if (order < 2) throw InputError("series order must be at least 2");
  WalkState state{c, order, std::vector<ParamSeries>(c.rank(), ParamSeries(order)), c.fundamental_weight(fundamental), 0};
  const ParamPoly a = ParamPoly::variable();
  const UniPoly den = UniPoly::from_roots({a});
  const UniPoly num = UniPoly::from_roots({a - ParamPoly(c.d(fundamental))});
  state.log_series[fundamental - 1] = log_ratio(num, den, order);
  return state;
}

StepPolynomial extract_step_poly(const WalkState& state, int node, unsigned m) {
  if (!state.cartan.has_node(node)) throw InputError("node out of range");
  if (m + 1 > state.order) {
    throw InputError("degree " + std::to_string(m) + " exceeds available series order " + std::to_string(state.order));
  }
  const ParamSeries& series = state.node_series(node);
  const int d = state.cartan.d(node);
  if (series.level(0) != ParamPoly(d * static_cast<int>(m))) {
    throw InvariantViolation("node " + std::to_string(node) + ": H_0 eigenvalue " + series.level(0).to_string() +
                             " does not match d*m = " + std::to_string(d * static_cast<int>(m)));
  }

  PowerSums p{m, {}};
  for (unsigned k = 1; k <= m; ++k) {
    ParamPoly rhs = series.level(k) * Rational(k + 1);
    for (unsigned s = 0; s < k; ++s) {
      rhs += p.p(s) * Rational(binomial(k + 1, s)) * ipow(Rational(-d), k + 1 - s);
    }
    p.sums.push_back(rhs / Rational((k + 1) * d));
  }

  // Rescaled roots are R_t / d, so rescaled power sums are p_k / d^k.
  PowerSums rescaled{m, {}};
  for (unsigned k = 1; k <= m; ++k) rescaled.sums.push_back(p.sums[k - 1] / ipow(Rational(d), k));

  StepPolynomial out;
  out.unscaled = power_sums_to_monic(p);
  out.rescaled = power_sums_to_monic(rescaled);
  out.power_sums = extend_power_sums(p, state.order);
  return out;
}

WalkState apply_step(WalkState state, int node, unsigned m, const PowerSums& p) {
  if (!state.cartan.has_node(node)) throw InputError("node out of range");
  if (m == 0) return state;
  if (p.degree != m || p.available() + 1 < state.order) throw InputError("power sums must be extended through the series order");

  for (int i = 1; i <= state.cartan.rank(); ++i) {
    const std::int64_t b = state.cartan.d(i) * state.cartan.a(i, node);
    if (b == 0) continue;
    ParamSeries& series = state.log_series[i - 1];
    for (unsigned k = 0; k + 1 <= state.order; ++k) {
      ParamPoly delta = p.p(k) * Rational(b);
      for (unsigned s = 0; s + 2 <= k; ++s) {
        if ((k + s) % 2 != 0) continue;
        Rational coeff = ipow(Rational(1, 2), k - s) * ipow(Rational(b), k + 1 - s) * Rational(binomial(k + 1, s)) /
                         Rational(k + 1);
        delta += p.p(s) * coeff;
      }
      series[k + 1] -= delta;
    }
  }
  const Weight alpha = state.cartan.simple_root(node);
  for (std::size_t i = 0; i < state.weight.size(); ++i) state.weight[i] -= static_cast<std::int64_t>(m) * alpha[i];
  ++state.steps_taken;
  return state;
}

bool lowest_vector_consistent(const WalkState& after, int node, const UniPoly& unscaled) {
  const ParamPoly shift(-after.cartan.d(node));
  return after.node_series(node) == log_ratio(unscaled.shifted(shift), unscaled, after.order);
}

bool highest_vector_consistent(const WalkState& before, int node, const UniPoly& unscaled) {
  const ParamPoly shift(before.cartan.d(node));
  return before.node_series(node) == log_ratio(unscaled.shifted(shift), unscaled, before.order);
}

namespace {

void check_weight_bookkeeping(const WalkState& state) {
  for (int i = 1; i <= state.cartan.rank(); ++i) {
    const ParamPoly expected(static_cast<int>(state.cartan.d(i) * state.weight[i - 1]));
    if (state.node_series(i).level(0) != expected) {
      throw InvariantViolation("weight bookkeeping failed at node " + std::to_string(i) + ": H_0 = " +
                               state.node_series(i).level(0).to_string() + ", expected " + expected.to_string());
    }
  }
}

}  // namespace

WalkReport run_walk(const CartanData& c, const ReducedWord& word, int fundamental, unsigned order) {
  WalkReport report;
  report.fundamental = fundamental;
  report.path = path_exponents(c, word, fundamental);
  report.order = order;
  const int max_m = report.path.exponents.empty()
                        ? 0
                        : *std::max_element(report.path.exponents.begin(), report.path.exponents.end());
  if (order < static_cast<unsigned>(max_m) + 2) {
    throw InputError("series order " + std::to_string(order) + " too small; need at least " +
                     std::to_string(max_m + 2));
  }

  WalkState state = init_walk(c, fundamental, order);
  std::vector<std::pair<int, unsigned>> applied;
  for (std::size_t j = word.size(); j-- > 0;) {
    const int node = word[j];
    const auto m = static_cast<unsigned>(report.path.exponents[j]);
    if (m == 0) continue;

    StepRecord rec;
    rec.item = report.steps.size() + 1;
    rec.word_index = j + 1;
    rec.node = node;
    rec.exponent = m;
    rec.rescale = c.d(node);
    rec.prefix = applied;
    rec.weight_before = state.weight;
    rec.series_before = state.log_series;

    const StepPolynomial poly = extract_step_poly(state, node, m);
    rec.rescaled = poly.rescaled;
    rec.unscaled = poly.unscaled;
    rec.power_sums = poly.power_sums;
    rec.highest_check = highest_vector_consistent(state, node, poly.unscaled);
    if (!rec.highest_check) {
      throw InvariantViolation("highest-vector crosscheck failed at step " + std::to_string(rec.item) + " (node " +
                               std::to_string(node) + "): series " + state.node_series(node).to_string() +
                               " is not log(pi(u+d)/pi(u)) for pi = " + poly.unscaled.to_string());
    }
    try {
      rec.roots = roots_affine_in_param(poly.rescaled);
    } catch (const SymbolicRootsUnavailable&) {
      rec.roots.reset();
    }

    state = apply_step(std::move(state), node, m, poly.power_sums);
    check_weight_bookkeeping(state);
    rec.lowest_check = lowest_vector_consistent(state, node, poly.unscaled);
    if (!rec.lowest_check) {
      throw InvariantViolation("lowest-vector crosscheck failed at step " + std::to_string(rec.item) + " (node " +
                               std::to_string(node) + "): series " + state.node_series(node).to_string() +
                               " is not log(pi(u-d)/pi(u)) for pi = " + poly.unscaled.to_string());
    }
    rec.series_after = state.log_series;
    applied.emplace_back(node, m);
    report.steps.push_back(std::move(rec));
  }
  report.final_weight = state.weight;
  return report;
}

std::string describe_vector(const std::vector<std::pair<int, unsigned>>& prefix) {
  std::string out;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    std::string x = "x_{" + std::to_string(it->first) + ",0}^-";
    out += it->second == 1 ? x : "(" + x + ")^" + std::to_string(it->second);
    out += " ";
  }
  return out + "v^+";
}

}  // namespace yangian
