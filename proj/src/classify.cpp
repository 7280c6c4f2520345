#include "sparsegroup/classify.hpp"

#include "sparsegroup/ideals.hpp"

namespace sparsegroup {

std::vector<std::string> Classification::labels() const {
  std::vector<std::string> out;
  if (genus == 0) out.emplace_back("trivial");
  if (ordinary) out.emplace_back("ordinary");
  if (arf) out.emplace_back("arf");
  if (sparse) out.emplace_back("sparse");
  out.push_back("pure-" + std::to_string(sparseness_index));
  return out;
}

Classification classify(const NumericalSemigroup& h) {
  Classification c;
  c.genus = h.genus();
  c.conductor = h.conductor();
  c.frobenius = h.frobenius();
  c.multiplicity = h.multiplicity();
  c.hyperelliptic = is_hyperelliptic(h);
  c.ordinary = h.conductor() == h.genus() + 1 || h.genus() == 0;
  c.arf = is_arf_definition(h);
  c.sparse = is_sparse(h);
  c.sparseness_index = sparseness_index(h);
  c.profile = leap_profile(h);
  return c;
}

}  // namespace sparsegroup
