#include "sparsegroup/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "sparsegroup/ideals.hpp"
#include "sparsegroup/kappa.hpp"

namespace sparsegroup {
namespace {

// Subtrees below this genus are handed to worker threads.
constexpr Int kSplitGenus = 6;

void walk_from(const NumericalSemigroup& node, Int max_genus, const Visitor& visit,
               const Keep& keep) {
  if (keep && !keep(node)) return;
  visit(node);
  if (node.genus() >= max_genus) return;
  for (const auto& child : children(node)) walk_from(child, max_genus, visit, keep);
}

// Runs `visit(acc, node)` over the (kept) tree down to max_genus. With more
// than one thread the nodes at kSplitGenus become independent subtrees, each
// folded into its own accumulator; accumulators are merged in tree order so
// the result does not depend on scheduling.
template <class Acc, class Visit, class Merge>
Acc fold_tree(Int max_genus, const Keep& keep, unsigned threads, Acc init, Visit visit,
              Merge merge) {
  Acc acc = init;
  if (threads <= 1 || max_genus < kSplitGenus) {
    walk_tree(max_genus, [&](const NumericalSemigroup& h) { visit(acc, h); }, keep);
    return acc;
  }

  std::vector<NumericalSemigroup> frontier;
  walk_tree(
      kSplitGenus,
      [&](const NumericalSemigroup& h) {
        if (h.genus() == kSplitGenus) {
          frontier.push_back(h);
        } else {
          visit(acc, h);
        }
      },
      keep);

  std::vector<Acc> parts(frontier.size(), init);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(frontier.size()));
    for (unsigned t = 0; t < count; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
          walk_from(frontier[i], max_genus,
                    [&](const NumericalSemigroup& h) { visit(parts[i], h); }, keep);
        }
      });
    }
  }
  for (auto& part : parts) merge(acc, std::move(part));
  return acc;
}

void check_genus(Int g, const TraversalOptions& options) {
  if (g < 0 || g > options.genus_cap) {
    throw SemigroupError(ErrorCode::InvalidParameters,
                         "genus " + std::to_string(g) + " outside [0, " +
                             std::to_string(options.genus_cap) + "]");
  }
}

Keep pruning_for(const EnumerationRequest& request) {
  if (request.mode == Population::KappaSparse || request.mode == Population::PureKappaSparse) {
    const Int kappa = *request.kappa;
    return [kappa](const NumericalSemigroup& h) { return is_kappa_sparse(h, kappa); };
  }
  return {};
}

std::function<bool(const NumericalSemigroup&)> member_of(const EnumerationRequest& request) {
  switch (request.mode) {
    case Population::PureKappaSparse: {
      const Int kappa = *request.kappa;
      return [kappa](const NumericalSemigroup& h) { return is_pure_kappa_sparse(h, kappa); };
    }
    case Population::Arf:
      return [](const NumericalSemigroup& h) { return is_arf_definition(h); };
    case Population::All:
    case Population::KappaSparse:
      break;
  }
  return [](const NumericalSemigroup&) { return true; };
}

using Slice = std::vector<NumericalSemigroup>;

}  // namespace

void validate(const EnumerationRequest& request) {
  check_genus(request.max_genus, request.traversal);
  if (request.kappa && *request.kappa < 1) {
    throw SemigroupError(ErrorCode::InvalidParameters, "kappa must be a positive integer");
  }
  const bool needs_kappa =
      request.mode == Population::KappaSparse || request.mode == Population::PureKappaSparse;
  if (needs_kappa && !request.kappa) {
    throw SemigroupError(ErrorCode::InvalidParameters, "kappa mode requested without a kappa");
  }
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& h) {
  std::vector<NumericalSemigroup> out;
  for (auto x : h.minimal_generators()) {
    if (x > h.frobenius()) out.push_back(h.remove_generator(x));
  }
  return out;
}

void walk_tree(Int max_genus, const Visitor& visit, const Keep& keep) {
  if (max_genus < 0) return;
  walk_from(NumericalSemigroup{}, max_genus, visit, keep);
}

std::vector<NumericalSemigroup> enumerate_genus(Int g, const TraversalOptions& options) {
  EnumerationRequest request;
  request.max_genus = g;
  request.traversal = options;
  return select(request);
}

std::vector<NumericalSemigroup> enumerate_kappa_sparse(Int g, Int kappa,
                                                       const TraversalOptions& options) {
  EnumerationRequest request;
  request.max_genus = g;
  request.kappa = kappa;
  request.mode = Population::KappaSparse;
  request.traversal = options;
  return select(request);
}

std::vector<NumericalSemigroup> select(const EnumerationRequest& request) {
  validate(request);
  const Int g = request.max_genus;
  const auto member = member_of(request);
  return fold_tree(
      g, pruning_for(request), request.traversal.threads, Slice{},
      [&](Slice& slice, const NumericalSemigroup& h) {
        if (h.genus() == g && member(h)) slice.push_back(h);
      },
      [](Slice& into, Slice&& part) {
        into.insert(into.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
      });
}

void stream(const EnumerationRequest& request, const Visitor& visit) {
  validate(request);
  const Int g = request.max_genus;
  if (request.traversal.threads > 1) {
    for (const auto& h : select(request)) visit(h);
    return;
  }
  const auto member = member_of(request);
  walk_tree(
      g,
      [&](const NumericalSemigroup& h) {
        if (h.genus() == g && member(h)) visit(h);
      },
      pruning_for(request));
}

std::vector<CensusRow> census(const EnumerationRequest& request) {
  validate(request);
  using Rows = std::vector<CensusRow>;
  Rows init(static_cast<std::size_t>(request.max_genus) + 1);
  for (std::size_t g = 0; g < init.size(); ++g) {
    init[g].genus = static_cast<Int>(g);
    init[g].per_class = {{"arf", 0}, {"sparse", 0}};
    if (request.kappa) {
      init[g].per_class["kappa_sparse"] = 0;
      init[g].per_class["pure_kappa_sparse"] = 0;
    }
  }
  const auto member = member_of(request);
  const auto kappa = request.kappa;
  return fold_tree(
      request.max_genus, pruning_for(request), request.traversal.threads, init,
      [&](Rows& rows, const NumericalSemigroup& h) {
        if (!member(h)) return;
        auto& row = rows[static_cast<std::size_t>(h.genus())];
        ++row.total;
        if (is_arf_definition(h)) ++row.per_class["arf"];
        if (is_sparse(h)) ++row.per_class["sparse"];
        if (kappa) {
          if (is_kappa_sparse(h, *kappa)) ++row.per_class["kappa_sparse"];
          if (is_pure_kappa_sparse(h, *kappa)) ++row.per_class["pure_kappa_sparse"];
        }
        ++row.profile_histogram[leap_profile(h)];
      },
      [](Rows& into, Rows&& part) {
        for (std::size_t g = 0; g < into.size(); ++g) {
          into[g].total += part[g].total;
          for (const auto& [label, n] : part[g].per_class) into[g].per_class[label] += n;
          for (const auto& [profile, n] : part[g].profile_histogram) {
            into[g].profile_histogram[profile] += n;
          }
        }
      });
}

}  // namespace sparsegroup
