#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sparsegroup/enumerate.hpp"

namespace sparsegroup {

struct VerifyOptions {
  Int max_genus = 8;
  /// Pairwise intersection checks run over genus <= min(pair_genus, max_genus).
  Int pair_genus = 8;
  Int genus_cap = kDefaultGenusCap;
};

/// Outcome of checking one structural fact over every semigroup in a census.
struct TheoremCheck {
  std::string name;
  std::string statement;
  Int instances = 0;
  std::optional<std::string> counterexample;  // first failure, if any

  bool passed() const noexcept { return !counterexample; }
};

/// Runs every check over all semigroups of genus <= options.max_genus.
std::vector<TheoremCheck> verify_theorems(const VerifyOptions& options);

}  // namespace sparsegroup
