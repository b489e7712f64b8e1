#pragma once

#include <string>
#include <vector>

#include "lfw/config.hpp"

namespace lfw {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed error
  double tolerance = 0.0;
  std::string detail;      // where the worst error occurred, or the exception text
  double seconds = 0.0;
};

// Property suite: functional equation, Gauss identities, orthogonality,
// residue bridge, derivative checks, sieve, Stieltjes, bump quadrature,
// summation by parts and the meowing decomposition. Exceptions inside a
// check turn that check into a failure.
std::vector<SelftestCheck> run_selftest(const RunConfig& cfg);

}  // namespace lfw
