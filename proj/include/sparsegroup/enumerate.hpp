#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sparsegroup/leaps.hpp"
#include "sparsegroup/semigroup.hpp"

namespace sparsegroup {

inline constexpr Int kDefaultGenusCap = 18;

/// Which semigroups an enumeration reports.
enum class Population {
  All,
  KappaSparse,      // members of the kappa-sparse class; subtrees pruned
  PureKappaSparse,  // pure kappa-sparse; walks the pruned kappa-sparse tree
  Arf,
};

enum class Emit { CountOnly, Full };

struct TraversalOptions {
  Int genus_cap = kDefaultGenusCap;
  unsigned threads = 1;
};

struct EnumerationRequest {
  Int max_genus = 0;
  std::optional<Int> kappa;
  Population mode = Population::All;
  Emit emit = Emit::CountOnly;
  TraversalOptions traversal;
};

/// Throws InvalidParameters when the genus exceeds the cap, kappa < 1, or a
/// kappa mode is requested without a kappa.
void validate(const EnumerationRequest& request);

struct CensusRow {
  Int genus = 0;
  Int total = 0;
  /// "arf", "sparse", and with a kappa also "kappa_sparse", "pure_kappa_sparse".
  std::map<std::string, Int> per_class;
  std::map<LeapProfile, Int> profile_histogram;
};

/// H \ {x} for every minimal generator x > frobenius(H), by ascending x.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& h);

using Visitor = std::function<void(const NumericalSemigroup&)>;
using Keep = std::function<bool(const NumericalSemigroup&)>;

/// Depth-first preorder walk from N_0 over every semigroup of genus at most
/// `max_genus`. A node failing `keep` is skipped together with its subtree;
/// that is only sound when `keep` describes a Frobenius variety.
void walk_tree(Int max_genus, const Visitor& visit, const Keep& keep = {});

/// Every semigroup of genus exactly g, each once, in depth-first tree order.
std::vector<NumericalSemigroup> enumerate_genus(Int g, const TraversalOptions& options = {});

/// Genus-g members of the kappa-sparse class, found on the pruned tree.
std::vector<NumericalSemigroup> enumerate_kappa_sparse(Int g, Int kappa,
                                                       const TraversalOptions& options = {});

/// Genus-`max_genus` members of the requested population, in tree order.
std::vector<NumericalSemigroup> select(const EnumerationRequest& request);

/// Streams the same sequence as select() without materializing it.
void stream(const EnumerationRequest& request, const Visitor& visit);

/// One row per genus 0..max_genus for the requested population.
std::vector<CensusRow> census(const EnumerationRequest& request);

}  // namespace sparsegroup
