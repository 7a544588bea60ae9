#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yangian/cyclicity.hpp"
#include "yangian/root_system.hpp"

namespace yangian::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotCertified = 1,
  kInputError = 2,
  kInvariantViolation = 3,
};

inline constexpr const char* kEngineVersion = "0.4.0";

struct AlgebraSpec {
  CartanData cartan;
  ReducedWord word;
  // Anything other than the built-in G2 / A1 data with their default words.
  bool experimental = false;
};

// "g2", "a1", "a2", or a path to an algebra file:
//
//   # comments and blank lines are ignored
//   2 -1        <- Cartan matrix rows (rank = entries in the first row)
//   -3 2
//   3 1         <- symmetrizer diagonal
//   1 2 1 2 1 2 <- optional reduced word of w0
//
// `word_override` (from --word) wins over a word in the file.
AlgebraSpec resolve_algebra(const std::string& name_or_path, const std::optional<ReducedWord>& word_override);

// "1,2,1" -> {1, 2, 1}
ReducedWord parse_word(std::string_view text);

// Comma-separated `node:param` tokens, whitespace ignored. Throws InputError
// for malformed literals or nodes outside 1..rank.
std::vector<TensorFactor> parse_factors(std::string_view spec, int rank);

// Comma-separated Gaussian-rational literals; empty input gives an empty list.
std::vector<GaussianRational> parse_parameters(std::string_view list);

// Factored display, e.g. "(u - (1/3*a + 1/3))(u - (1/3*a + 2/3))".
std::string factored_form(const std::vector<AffineRoot>& roots);

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yangian::cli
