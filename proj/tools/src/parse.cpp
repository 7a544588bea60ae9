#include <cctype>
#include <fstream>
#include <sstream>

#include "yangian/cli.hpp"
#include "yangian/errors.hpp"

namespace yangian::cli {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("malformed ") + what + " '" + text + "'");
  }
  if (used != text.size()) throw InputError(std::string("malformed ") + what + " '" + text + "'");
  return value;
}

std::vector<std::vector<std::int64_t>> read_integer_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open algebra file '" + path + "'");
  std::vector<std::vector<std::int64_t>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (is >> tok) row.push_back(parse_int(tok, "integer in algebra file"));
    if (!row.empty()) lines.push_back(std::move(row));
  }
  return lines;
}

}  // namespace

ReducedWord parse_word(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw InputError("empty word");
  ReducedWord word;
  for (const auto& tok : split(s, ',')) word.push_back(parse_int(tok, "word letter"));
  return word;
}

AlgebraSpec resolve_algebra(const std::string& name_or_path, const std::optional<ReducedWord>& word_override) {
  AlgebraSpec spec;
  std::optional<ReducedWord> file_word;
  if (name_or_path == "g2" || name_or_path == "a1" || name_or_path == "a2") {
    spec.cartan = builtin_cartan(name_or_path);
  } else {
    const auto lines = read_integer_lines(name_or_path);
    if (lines.empty()) throw InputError("algebra file '" + name_or_path + "' is empty");
    const std::size_t rank = lines.front().size();
    if (lines.size() < rank + 1) throw InputError("algebra file needs " + std::to_string(rank) + " matrix rows and a symmetrizer line");
    IntMatrix cartan(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(rank));
    std::vector<int> d(lines[rank].begin(), lines[rank].end());
    if (lines.size() > rank + 2) throw InputError("unexpected trailing lines in algebra file");
    if (lines.size() == rank + 2) file_word = ReducedWord(lines[rank + 1].begin(), lines[rank + 1].end());
    spec.cartan = validate_cartan(std::move(cartan), std::move(d), name_or_path);
  }

  const ReducedWord default_word = weyl_longest(spec.cartan).word;
  if (word_override) {
    spec.word = *word_override;
  } else if (file_word) {
    spec.word = *file_word;
  } else {
    spec.word = default_word;
  }
  if (!is_reduced_word_for_longest(spec.cartan, spec.word)) {
    throw InputError("word is not a reduced expression of the longest element");
  }
  const bool certified = (name_or_path == "g2" || name_or_path == "a1") && spec.word == default_word;
  spec.experimental = !certified;
  return spec;
}

std::vector<TensorFactor> parse_factors(std::string_view text, int rank) {
  const std::string s = strip_spaces(text);
  std::vector<TensorFactor> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw InputError("factor '" + tok + "' must have the form node:param");
    const int node = parse_int(tok.substr(0, colon), "factor node");
    if (node < 1 || node > rank) {
      throw InputError("factor node " + std::to_string(node) + " out of range 1.." + std::to_string(rank));
    }
    out.push_back({node, parse_gaussian(tok.substr(colon + 1))});
  }
  return out;
}

std::vector<GaussianRational> parse_parameters(std::string_view list) {
  const std::string s = strip_spaces(list);
  std::vector<GaussianRational> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_gaussian(tok));
  return out;
}

std::string factored_form(const std::vector<AffineRoot>& roots) {
  if (roots.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    const ParamPoly r = roots[i].as_poly();
    std::string factor;
    if (r.is_zero()) {
      factor = "u";
    } else if (r.term_count() > 1) {
      factor = "(u - (" + r.to_string() + "))";
    } else if (r.to_string().front() == '-') {
      factor = "(u + " + r.to_string().substr(1) + ")";
    } else {
      factor = "(u - " + r.to_string() + ")";
    }
    if (j - i > 1) factor += "^" + std::to_string(j - i);
    out += factor;
    i = j;
  }
  return out;
}

}  // namespace yangian::cli
