#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "yangian/cli.hpp"
#include "yangian/errors.hpp"
#include "yangian/suites.hpp"
#include "yangian/transport.hpp"

namespace yangian::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string algebra = "g2";
  std::string algebra_positional;
  std::string word;
  unsigned order = kDefaultOrder;
  std::string format = "text";
  std::string config;
};

struct Context {
  std::string command;
  AlgebraSpec algebra;
  unsigned order;
  bool json;
};

Json json_integer(const BigInt& n) {
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& items, const std::string& sep = ",") {
  std::vector<std::string> s;
  for (const auto& x : items) s.push_back(std::to_string(x));
  return join(s, sep);
}

std::vector<std::string> rational_strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> root_strings(const std::vector<AffineRoot>& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}

std::string variable_name(int rescale) { return rescale == 1 ? "u" : "u/" + std::to_string(rescale); }

Json envelope(const Context& ctx, Json inputs, Json results) {
  Json env;
  env["command"] = ctx.command;
  env["algebra"] = {
      {"name", ctx.algebra.cartan.name},
      {"cartan", ctx.algebra.cartan.cartan},
      {"symmetrizer", ctx.algebra.cartan.symmetrizer},
      {"word", ctx.algebra.word},
  };
  env["experimental"] = ctx.algebra.experimental;
  env["inputs"] = std::move(inputs);
  env["results"] = std::move(results);
  env["engine_version"] = kEngineVersion;
  env["truncation_order"] = ctx.order;
  return env;
}

void text_header(std::ostream& out, const Context& ctx) {
  out << "algebra " << ctx.algebra.cartan.name << "  word " << join_numbers(ctx.algebra.word) << "  order "
      << ctx.order;
  if (ctx.algebra.experimental) out << "  [experimental]";
  out << "\n";
}

// ---- path ----

int cmd_path(const Context& ctx, std::optional<int> weight, std::ostream& out) {
  const CartanData& c = ctx.algebra.cartan;
  const auto longest = weyl_longest(c);
  Json results;
  results["group_order"] = longest.group_order;
  results["longest_word"] = longest.word;
  results["paths"] = Json::array();
  for (int i = 1; i <= c.rank(); ++i) {
    if (weight && *weight != i) continue;
    const auto path = path_exponents(c, ctx.algebra.word, i);
    std::vector<std::pair<int, unsigned>> steps;
    for (std::size_t j = path.word.size(); j-- > 0;) {
      if (path.exponents[j] > 0) steps.emplace_back(path.word[j], path.exponents[j]);
    }
    results["paths"].push_back({{"fundamental", i}, {"exponents", path.exponents}, {"lowest_vector", describe_vector(steps)}});
  }
  if (ctx.json) {
    out << envelope(ctx, {{"weight", weight ? Json(*weight) : Json()}}, results).dump(2) << "\n";
    return kSuccess;
  }
  text_header(out, ctx);
  out << "group_order " << longest.group_order << "\n";
  out << "longest_word " << join_numbers(longest.word) << "\n";
  for (const auto& p : results["paths"]) {
    out << "fundamental " << p["fundamental"].get<int>() << "  exponents "
        << join_numbers(p["exponents"].get<std::vector<int>>()) << "\n";
    out << "  v^- = " << p["lowest_vector"].get<std::string>() << "\n";
  }
  return kSuccess;
}

// ---- walk ----

Json walk_json(const WalkReport& report) {
  Json rows = Json::array();
  for (const auto& step : report.steps) {
    Json row;
    row["item"] = step.item;
    row["module"] = "Y_" + std::to_string(step.node) + "(" + describe_vector(step.prefix) + ")";
    row["node"] = step.node;
    row["exponent"] = step.exponent;
    row["word_index"] = step.word_index;
    row["rescale"] = step.rescale;
    row["variable"] = variable_name(step.rescale);
    row["polynomial"] = step.rescaled.to_string();
    if (step.roots) {
      row["factored"] = factored_form(*step.roots);
      row["roots"] = root_strings(*step.roots);
    } else {
      row["factored"] = nullptr;
      row["roots"] = nullptr;
    }
    row["unscaled_polynomial"] = step.unscaled.to_string();
    std::vector<std::string> sums;
    for (unsigned k = 1; k <= step.exponent; ++k) sums.push_back(step.power_sums.p(k).to_string());
    row["power_sums"] = sums;
    row["crosschecks"] = {{"highest", step.highest_check}, {"lowest", step.lowest_check}};
    rows.push_back(std::move(row));
  }
  return {
      {"fundamental", report.fundamental},
      {"path_exponents", report.path.exponents},
      {"rows", rows},
      {"final_weight", report.final_weight},
  };
}

void walk_text(const Json& w, std::ostream& out) {
  out << "walk of omega_" << w["fundamental"].get<int>() << "  path exponents "
      << join_numbers(w["path_exponents"].get<std::vector<int>>()) << "\n";
  for (const auto& row : w["rows"]) {
    out << "[" << row["item"].get<std::size_t>() << "] " << row["module"].get<std::string>() << "\n";
    out << "    node " << row["node"].get<int>() << "  exponent " << row["exponent"].get<unsigned>() << "  word_index "
        << row["word_index"].get<std::size_t>() << "  rescale " << row["rescale"].get<int>() << "  variable "
        << row["variable"].get<std::string>() << "\n";
    out << "    polynomial: " << row["polynomial"].get<std::string>() << "\n";
    if (!row["factored"].is_null()) {
      out << "    factored:   " << row["factored"].get<std::string>() << "\n";
      out << "    roots:      " << join(row["roots"].get<std::vector<std::string>>(), "; ") << "\n";
    } else {
      out << "    roots:      not affine in a\n";
    }
    out << "    unscaled_polynomial: " << row["unscaled_polynomial"].get<std::string>() << "\n";
    out << "    power_sums: " << join(row["power_sums"].get<std::vector<std::string>>(), "; ") << "\n";
    out << "    crosschecks: highest=" << (row["crosschecks"]["highest"].get<bool>() ? "true" : "false")
        << " lowest=" << (row["crosschecks"]["lowest"].get<bool>() ? "true" : "false") << "\n";
  }
  out << "final_weight " << join_numbers(w["final_weight"].get<std::vector<std::int64_t>>()) << "\n";
}

int cmd_walk(const Context& ctx, std::optional<int> weight, std::ostream& out) {
  const CartanData& c = ctx.algebra.cartan;
  Json walks = Json::array();
  for (int i = 1; i <= c.rank(); ++i) {
    if (weight && *weight != i) continue;
    walks.push_back(walk_json(run_walk(c, ctx.algebra.word, i, ctx.order)));
  }
  if (weight && walks.empty()) throw InputError("fundamental index out of range");
  if (ctx.json) {
    out << envelope(ctx, {{"weight", weight ? Json(*weight) : Json()}}, {{"walks", walks}}).dump(2) << "\n";
    return kSuccess;
  }
  text_header(out, ctx);
  for (const auto& w : walks) walk_text(w, out);
  return kSuccess;
}

// ---- tables ----

int cmd_tables(const Context& ctx, std::ostream& out) {
  const CartanData& c = ctx.algebra.cartan;
  std::vector<WalkReport> reports;
  for (int i = 1; i <= c.rank(); ++i) reports.push_back(run_walk(c, ctx.algebra.word, i, ctx.order));
  const auto tsets = compute_t_sets(reports, c);
  const auto ssets = compute_s_sets(tsets, c);

  Json t = Json::array();
  for (const auto& ts : tsets) {
    t.push_back({{"b", ts.earlier_node}, {"c", ts.acting_node}, {"roots", root_strings(ts.roots)}});
  }
  Json s = Json::array();
  for (const auto& ss : ssets) {
    s.push_back({{"b", ss.earlier_node}, {"c", ss.acting_node}, {"differences", rational_strings(ss.differences)}});
  }
  if (ctx.json) {
    out << envelope(ctx, Json::object(), {{"t_sets", t}, {"s_sets", s}}).dump(2) << "\n";
    return kSuccess;
  }
  text_header(out, ctx);
  for (const auto& x : t) {
    out << "T(" << x["b"].get<int>() << "," << x["c"].get<int>() << ") = {"
        << join(x["roots"].get<std::vector<std::string>>(), ", ") << "}\n";
  }
  for (const auto& x : s) {
    out << "S(" << x["b"].get<int>() << "," << x["c"].get<int>() << ") = {"
        << join(x["differences"].get<std::vector<std::string>>(), ", ") << "}\n";
  }
  return kSuccess;
}

// ---- cyclicity ----

Json factors_json(const std::vector<TensorFactor>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back({{"node", f.node}, {"parameter", to_string(f.parameter)}});
  return out;
}

Json report_json(const CyclicityReport& r, const std::vector<TensorFactor>& factors) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({
        {"i", v.i},
        {"j", v.j},
        {"nodes", {factors[v.i - 1].node, factors[v.j - 1].node}},
        {"difference", to_string(v.difference)},
        {"s_element", to_string(v.matched)},
    });
  }
  return {
      {"mode", r.mode == CyclicityMode::HighestWeight ? "hw" : "irr"},
      {"certified", r.certified},
      {"verdict", r.certified ? "certified" : "not certified"},
      {"violations", violations},
  };
}

void report_text(const Json& r, std::ostream& out) {
  out << "mode " << r["mode"].get<std::string>() << "  verdict " << r["verdict"].get<std::string>()
      << "  certified=" << (r["certified"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& v : r["violations"]) {
    out << "  pair (" << v["i"].get<std::size_t>() << "," << v["j"].get<std::size_t>() << ")  nodes ("
        << v["nodes"][0].get<int>() << "," << v["nodes"][1].get<int>() << ")  difference "
        << v["difference"].get<std::string>() << "  in S as " << v["s_element"].get<std::string>() << "\n";
  }
}

SSetTable s_table(const Context& ctx) { return derive_s_sets(ctx.algebra.cartan, ctx.algebra.word, ctx.order); }

int cmd_cyclicity(const Context& ctx, const std::string& factor_spec, const std::string& mode_name,
                  std::ostream& out) {
  CyclicityMode mode;
  if (mode_name == "hw") {
    mode = CyclicityMode::HighestWeight;
  } else if (mode_name == "irr") {
    mode = CyclicityMode::Irreducible;
  } else {
    throw InputError("mode must be hw or irr");
  }
  const auto factors = parse_factors(factor_spec, ctx.algebra.cartan.rank());
  const auto report = check_cyclicity(factors, s_table(ctx), mode);
  const Json r = report_json(report, factors);
  if (ctx.json) {
    out << envelope(ctx, {{"factors", factors_json(factors)}, {"mode", mode_name}}, r).dump(2) << "\n";
  } else {
    text_header(out, ctx);
    out << "factors";
    for (const auto& f : factors) out << " " << f.node << ":" << to_string(f.parameter);
    out << "\n";
    report_text(r, out);
  }
  return report.certified ? kSuccess : kNotCertified;
}

// ---- dimensions ----

std::optional<std::vector<BigInt>> read_config_dims(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!cfg.contains("fundamental_dimensions")) return std::nullopt;
  std::vector<BigInt> dims;
  for (const auto& x : cfg["fundamental_dimensions"]) {
    if (!x.is_number_integer()) throw InputError("fundamental_dimensions must be integers");
    dims.emplace_back(x.get<std::int64_t>());
  }
  return dims;
}

std::vector<BigInt> parse_dims(const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& p : parse_parameters(text)) {
    if (!p.is_real() || denominator_of(p.re) != 1) throw InputError("dimensions must be integers");
    out.push_back(numerator_of(p.re));
  }
  return out;
}

std::optional<std::vector<BigInt>> fundamental_dims(const std::string& flag, const std::string& config, int rank) {
  std::optional<std::vector<BigInt>> dims;
  if (!flag.empty()) {
    dims = parse_dims(flag);
  } else {
    dims = read_config_dims(config);
  }
  if (dims && static_cast<int>(dims->size()) != rank) {
    throw InputError("expected " + std::to_string(rank) + " fundamental dimensions");
  }
  return dims;
}

Json dimension_json(const CartanData& c, const Weight& lambda, const std::optional<std::vector<BigInt>>& dims) {
  Json reference = Json::array();
  for (int i = 1; i <= c.rank(); ++i) reference.push_back(json_integer(weyl_dim(c, c.fundamental_weight(i))));
  Json out;
  out["lambda"] = lambda;
  if (dims) {
    Json d = Json::array();
    for (const auto& x : *dims) d.push_back(json_integer(x));
    out["fundamental_dimensions"] = d;
    out["bound"] = json_integer(dimension_bound(lambda, *dims));
  } else {
    out["fundamental_dimensions"] = nullptr;
    out["bound"] = nullptr;
  }
  out["reference_weyl_dimensions"] = reference;
  out["reference_weyl_dimension_of_lambda"] = json_integer(weyl_dim(c, lambda));
  return out;
}

void dimension_text(const Json& d, std::ostream& out) {
  out << "lambda " << join_numbers(d["lambda"].get<std::vector<std::int64_t>>()) << "\n";
  if (d["bound"].is_null()) {
    out << "bound unavailable (supply --fund-dims or a config file)\n";
  } else {
    out << "fundamental_dimensions " << d["fundamental_dimensions"].dump() << "\n";
    out << "bound " << d["bound"].dump() << "\n";
  }
  out << "reference_weyl_dimensions " << d["reference_weyl_dimensions"].dump() << "\n";
  out << "reference_weyl_dimension_of_lambda " << d["reference_weyl_dimension_of_lambda"].dump() << "\n";
}

int cmd_weyl_module(const Context& ctx, const std::vector<std::string>& pis, const std::string& dims_flag,
                    const std::string& config, std::ostream& out) {
  const CartanData& c = ctx.algebra.cartan;
  std::vector<std::vector<GaussianRational>> roots;
  for (std::size_t i = 0; i < pis.size(); ++i) {
    auto params = parse_parameters(pis[i]);
    if (!params.empty() && static_cast<int>(i) >= c.rank()) {
      throw InputError("--pi" + std::to_string(i + 1) + " given but the algebra has rank " + std::to_string(c.rank()));
    }
    if (static_cast<int>(i) < c.rank()) roots.push_back(std::move(params));
  }
  const auto spec = build_ordered_product(roots, s_table(ctx));
  const auto dims = fundamental_dims(dims_flag, config, c.rank());

  Json inputs;
  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    std::vector<std::string> r;
    for (const auto& x : spec.roots[i]) r.push_back(to_string(x));
    inputs["pi" + std::to_string(i + 1)] = r;
  }
  Json results;
  results["ordering"] = factors_json(spec.product);
  results["cyclicity"] = report_json(spec.report, spec.product);
  results["dimension"] = dimension_json(c, spec.lambda, dims);
  if (ctx.json) {
    out << envelope(ctx, inputs, results).dump(2) << "\n";
  } else {
    text_header(out, ctx);
    out << "ordering";
    if (spec.product.empty()) out << " (empty product)";
    for (const auto& f : spec.product) out << " " << f.node << ":" << to_string(f.parameter);
    out << "\n";
    report_text(results["cyclicity"], out);
    dimension_text(results["dimension"], out);
  }
  return spec.report.certified ? kSuccess : kNotCertified;
}

int cmd_dim(const Context& ctx, const std::string& lambda_text, const std::string& dims_flag, const std::string& config,
            std::ostream& out) {
  const CartanData& c = ctx.algebra.cartan;
  Weight lambda;
  for (const auto& p : parse_parameters(lambda_text)) {
    if (!p.is_real() || denominator_of(p.re) != 1) throw InputError("lambda entries must be integers");
    lambda.push_back(numerator_of(p.re).convert_to<std::int64_t>());
  }
  if (static_cast<int>(lambda.size()) != c.rank()) throw InputError("lambda must have one entry per node");
  const auto dims = fundamental_dims(dims_flag, config, c.rank());
  if (!dims) throw InputError("fundamental dimensions are required (--fund-dims or --config)");
  const Json results = dimension_json(c, lambda, dims);
  if (ctx.json) {
    out << envelope(ctx, {{"lambda", lambda}}, results).dump(2) << "\n";
  } else {
    text_header(out, ctx);
    dimension_text(results, out);
  }
  return kSuccess;
}

// ---- verify ----

int cmd_verify(const Context& ctx, const std::string& suite, std::ostream& out) {
  const auto checks = run_suite(suite, ctx.algebra, ctx.order);
  std::size_t failed = 0;
  Json list = Json::array();
  for (const auto& c : checks) {
    if (!c.ok) ++failed;
    list.push_back({{"suite", c.suite}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  if (ctx.json) {
    Json results = {{"checks", list}, {"passed", checks.size() - failed}, {"failed", failed}};
    out << envelope(ctx, {{"suite", suite}}, results).dump(2) << "\n";
  } else {
    text_header(out, ctx);
    for (const auto& c : checks) {
      out << (c.ok ? "PASS " : "FAIL ") << "[" << c.suite << "] " << c.name;
      if (!c.ok && !c.detail.empty()) out << " -- " << c.detail;
      out << "\n";
    }
    out << "passed " << checks.size() - failed << "  failed " << failed << "\n";
  }
  return failed == 0 ? kSuccess : kInvariantViolation;
}

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("algebra_name", opts.algebra_positional, "Algebra (same as --algebra)");
  sub->add_option("--algebra", opts.algebra, "g2, a1, a2 or a path to an algebra file")->capture_default_str();
  sub->add_option("--word", opts.word, "Reduced word of w0, e.g. 1,2,1,2,1,2");
  sub->add_option("--order", opts.order, "Series truncation order")->capture_default_str()->check(CLI::Range(2U, 64U));
  sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_option("--config", opts.config, "JSON config file (fundamental_dimensions)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associated polynomials, cyclicity sets and local Weyl modules for Yangians", "yangian"};
  app.require_subcommand(1);
  CommonOptions opts;

  std::optional<int> weight;
  auto* path = app.add_subcommand("path", "Reduced word of w0 and extremal path exponents");
  add_common(path, opts);
  path->add_option("--weight", weight, "Fundamental weight index");

  auto* walk = app.add_subcommand("walk", "Associated polynomials along the extremal path");
  add_common(walk, opts);
  walk->add_option("--weight", weight, "Fundamental weight index (default: all)");

  auto* tables = app.add_subcommand("tables", "T and S sets for every node pair");
  add_common(tables, opts);

  std::string factors, mode = "hw";
  auto* cyc = app.add_subcommand("cyclicity", "Check an ordered tensor product of fundamental modules");
  add_common(cyc, opts);
  cyc->add_option("--factors", factors, "Comma-separated node:param tokens, e.g. \"1:0,2:3/2+1i\"")->required();
  cyc->add_option("--mode", mode, "hw (highest weight) or irr (irreducible)")
      ->check(CLI::IsMember({"hw", "irr"}))
      ->capture_default_str();

  std::vector<std::string> pis(4);
  std::string dims;
  auto* weyl = app.add_subcommand("weyl-module", "Ordered tensor product realizing a local Weyl module");
  add_common(weyl, opts);
  for (std::size_t i = 0; i < pis.size(); ++i) {
    weyl->add_option("--pi" + std::to_string(i + 1), pis[i], "Roots of pi_" + std::to_string(i + 1) + "(u), comma-separated");
  }
  weyl->add_option("--fund-dims", dims, "Dimensions of the fundamental modules, comma-separated");

  std::string lambda;
  auto* dim = app.add_subcommand("dim", "Dimension bound D_1^{m_1} ... D_l^{m_l}");
  add_common(dim, opts);
  dim->add_option("--lambda", lambda, "Dominant weight m_1,...,m_l")->required();
  dim->add_option("--fund-dims", dims, "Dimensions of the fundamental modules, comma-separated");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  add_common(verify, opts);
  verify->add_option("--suite", suite, "all, sl2, roots, walk or tables")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    std::string algebra_name = opts.algebra;
    if (!opts.algebra_positional.empty()) algebra_name = opts.algebra_positional;
    std::optional<ReducedWord> word;
    if (!opts.word.empty()) word = parse_word(opts.word);

    CLI::App* active = app.get_subcommands().front();
    Context ctx{active->get_name(), resolve_algebra(algebra_name, word), opts.order, opts.format == "json"};

    if (active == path) return cmd_path(ctx, weight, out);
    if (active == walk) return cmd_walk(ctx, weight, out);
    if (active == tables) return cmd_tables(ctx, out);
    if (active == cyc) return cmd_cyclicity(ctx, factors, mode, out);
    if (active == weyl) return cmd_weyl_module(ctx, pis, dims, opts.config, out);
    if (active == dim) return cmd_dim(ctx, lambda, dims, opts.config, out);
    if (active == verify) return cmd_verify(ctx, suite, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const SymbolicRootsUnavailable& e) {
    err << "symbolic roots unavailable: " << e.what() << "\n";
    return kInvariantViolation;
  }
  return kInputError;
}

}  // namespace yangian::cli
