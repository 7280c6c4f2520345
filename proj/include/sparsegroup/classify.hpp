#pragma once

#include <string>
#include <vector>

#include "sparsegroup/kappa.hpp"
#include "sparsegroup/leaps.hpp"
#include "sparsegroup/semigroup.hpp"

namespace sparsegroup {

/// Where a semigroup sits in the nested picture
/// trivial < ordinary < Arf < sparse < kappa-sparse, plus its pure class.
struct Classification {
  Int genus = 0;
  Int conductor = 0;
  Int frobenius = -1;
  Int multiplicity = 1;
  bool hyperelliptic = true;
  bool ordinary = true;
  bool arf = true;
  bool sparse = true;
  Int sparseness_index = 1;
  LeapProfile profile;

  /// Every class label that applies, most specific first, ending in "pure-<kappa>".
  std::vector<std::string> labels() const;
};

Classification classify(const NumericalSemigroup& h);

}  // namespace sparsegroup
