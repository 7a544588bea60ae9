#pragma once

#include <string>
#include <vector>

#include "yangian/cli.hpp"

namespace yangian::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool ok = false;
  std::string detail;
};

// Suites: "sl2", "roots", "walk", "tables", or "all".
// Throws InputError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const AlgebraSpec& algebra, unsigned order);

// Reference G2 data the "walk" and "tables" suites compare against.
namespace g2_reference {

// Rescaled roots of each nonzero step of the omega_1 / omega_2 walks, in walk order.
std::vector<std::vector<AffineRoot>> walk_rows(int fundamental);
// Differences of S(b, c).
std::vector<Rational> s_set(int b, int c);
// Rescaled roots of T(b, c).
std::vector<AffineRoot> t_set(int b, int c);
// q-exponents of the diagonal sets S(1,1) and S(2,2) in the quantum-loop setting.
std::vector<int> q_exponents(int node);

}  // namespace g2_reference

}  // namespace yangian::cli
