// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sparsegroup/enumerate.hpp"
#include "sparsegroup/ideals.hpp"
#include "sparsegroup/kappa.hpp"
#include "sparsegroup/leaps.hpp"

using namespace sparsegroup;

namespace {

// A criterion returns an empty string on success, otherwise the first problem found.
using Criterion = std::function<std::string()>;

std::vector<std::vector<NumericalSemigroup>> levels_up_to(Int max_genus) {
  std::vector<std::vector<NumericalSemigroup>> levels(static_cast<std::size_t>(max_genus) + 1);
  walk_tree(max_genus, [&](const NumericalSemigroup& h) {
    levels[static_cast<std::size_t>(h.genus())].push_back(h);
  });
  return levels;
}

const std::vector<std::vector<NumericalSemigroup>>& census12() {
  static const auto levels = levels_up_to(12);
  return levels;
}

std::string show(const NumericalSemigroup& h) {
  std::ostringstream out;
  out << "gaps {";
  for (std::size_t i = 0; i < h.gaps().size(); ++i) out << (i ? "," : "") << h.gaps()[i];
  out << "}";
  return out.str();
}

oracle::GapSet as_set(const NumericalSemigroup& h) { return {h.gaps().begin(), h.gaps().end()}; }

// Membership in S_kappa, decided by the oracle's run length.
bool oracle_kappa_sparse(const NumericalSemigroup& h, Int kappa) {
  return oracle::longest_inner_run(as_set(h)) <= kappa - 1;
}

std::string oracle_census() {
  for (int g = 0; g <= 7; ++g) {
    const auto tree = enumerate_genus(g);
    const auto brute = oracle::semigroups_of_genus(g);
    if (tree.size() != brute.size()) {
      return "genus " + std::to_string(g) + ": tree " + std::to_string(tree.size()) + " vs oracle " +
             std::to_string(brute.size());
    }
    std::vector<oracle::GapSet> sets;
    for (const auto& h : tree) sets.push_back(as_set(h));
    std::sort(sets.begin(), sets.end());
    if (sets != brute) return "genus " + std::to_string(g) + ": different gap sets";
  }
  return {};
}

std::string arf_equivalence() {
  for (const auto& level : levels_up_to(10)) {
    for (const auto& h : level) {
      const bool a = is_arf_definition(h);
      if (a != is_arf_double(h) || a != is_arf_stable(h)) return show(h);
    }
  }
  return {};
}

std::string kappa_equivalence() {
  for (const auto& level : census12()) {
    for (const auto& h : level) {
      for (Int kappa = 2; kappa <= h.genus() + 2; ++kappa) {
        const bool p = is_kappa_sparse_profile(h, kappa);
        if (p != is_kappa_sparse_gapdiff(h, kappa) || p != is_kappa_sparse_nongap(h, kappa) ||
            p != is_kappa_sparse_run(h, kappa) || p != oracle_kappa_sparse(h, kappa)) {
          return show(h) + " kappa " + std::to_string(kappa);
        }
      }
    }
  }
  return {};
}

std::string frobenius_from_leaps() {
  for (const auto& level : census12()) {
    for (const auto& h : level) {
      // Weighted sum straight from the oracle's leap sizes.
      long long sum = 0;
      for (auto m : oracle::leap_sizes(as_set(h))) sum += m;
      const long long frobenius = h.gaps().empty() ? -1 : h.gaps().back();
      if (frobenius_from_profile(leap_profile(h)) != frobenius || sum - 1 != frobenius) {
        return show(h);
      }
    }
  }
  return {};
}

std::string leap_biconditionals() {
  for (const auto& level : census12()) {
    for (const auto& h : level) {
      const Int g = h.genus();
      const auto p = leap_profile(h);
      const Int v1 = p.count(1), v2 = p.count(2);
      const bool trivial = g == 0;
      const bool ordinary = trivial || h.conductor() == g + 1;
      const bool sparse = oracle::longest_inner_run(as_set(h)) <= 1;
      const bool ok =
          (trivial || (is_hyperelliptic(h) == (v1 == 0 && v2 == g))) &&
          ((v2 == 0) == trivial) && (trivial || ordinary == (v1 == g - 1 && v2 == 1)) &&
          (is_sparse(h) == sparse) && (sparse == (v1 + v2 == g)) &&
          (!sparse || h.frobenius() == v1 + 2 * v2 - 1) &&
          (trivial || sparse == (v1 == (2 * g - h.frobenius()) - 1 &&
                                 v2 == g - (2 * g - h.frobenius()) + 1));
      if (!ok) return show(h);
    }
  }
  return {};
}

std::string frobenius_variety() {
  std::vector<NumericalSemigroup> small;
  for (Int g = 0; g <= 8; ++g) {
    for (const auto& h : census12()[static_cast<std::size_t>(g)]) small.push_back(h);
  }
  for (Int kappa = 2; kappa <= 4; ++kappa) {
    std::vector<NumericalSemigroup> members;
    for (const auto& h : small) {
      if (is_kappa_sparse(h, kappa)) members.push_back(h);
    }
    for (const auto& a : members) {
      for (const auto& b : members) {
        const auto both = intersect(a, b);
        if (!oracle::is_closed_complement(as_set(both)) || !oracle_kappa_sparse(both, kappa)) {
          return "kappa " + std::to_string(kappa) + ": " + show(a) + " with " + show(b);
        }
      }
    }
    for (const auto& level : census12()) {
      for (const auto& h : level) {
        if (h.genus() == 0 || !is_kappa_sparse(h, kappa)) continue;
        const auto parent = adjoin_frobenius(h);
        if (!oracle_kappa_sparse(parent, kappa)) {
          return "kappa " + std::to_string(kappa) + ": adjoin to " + show(h);
        }
      }
    }
  }
  return {};
}

std::string pruned_equals_filtered() {
  const auto levels = levels_up_to(10);
  for (Int g = 0; g <= 10; ++g) {
    for (Int kappa = 1; kappa <= 6; ++kappa) {
      std::set<NumericalSemigroup> filtered;
      for (const auto& h : levels[static_cast<std::size_t>(g)]) {
        if (oracle_kappa_sparse(h, kappa)) filtered.insert(h);
      }
      const auto pruned = enumerate_kappa_sparse(g, kappa);
      const std::set<NumericalSemigroup> pruned_set(pruned.begin(), pruned.end());
      if (pruned_set != filtered || pruned_set.size() != pruned.size()) {
        return "g " + std::to_string(g) + " kappa " + std::to_string(kappa);
      }
    }
  }
  return {};
}

std::string chain_and_partition() {
  for (Int kappa = 1; kappa <= 6; ++kappa) {
    const auto witness = kappa == 1 ? NumericalSemigroup::ordinary(1)
                                    : example_family(kappa + 1, kappa + 1);
    if (!is_kappa_sparse(witness, kappa + 1) || is_kappa_sparse(witness, kappa)) {
      return "no witness for kappa " + std::to_string(kappa);
    }
  }
  for (const auto& level : census12()) {
    const Int g = level.front().genus();
    Int sum = 0;
    for (Int kappa = 1; kappa <= g + 2; ++kappa) {
      for (const auto& h : level) sum += is_pure_kappa_sparse(h, kappa);
    }
    if (sum != static_cast<Int>(level.size())) return "genus " + std::to_string(g);
  }
  return {};
}

std::string example_family_uniqueness() {
  for (Int kappa = 3; kappa <= 6; ++kappa) {
    for (Int a = kappa; a <= kappa + 4; ++a) {
      const auto h = example_family(a, kappa);
      const Int g = 2 * a - kappa;
      const std::string tag = "a " + std::to_string(a) + " kappa " + std::to_string(kappa);
      if (h.genus() != g || h.element(1) != a || h.element(kappa) != 2 * a) return tag;
      Int matches = 0;
      bool found = false;
      for (const auto& other : enumerate_genus(g)) {
        if (other.element(1) == a && other.element(kappa) == 2 * a &&
            is_pure_kappa_sparse(other, kappa)) {
          ++matches;
          found = found || other == h;
        }
      }
      if (matches != 1 || !found) return tag + ": " + std::to_string(matches) + " matches";
    }
  }
  return {};
}

std::string arf_implies_sparse() {
  for (const auto& level : levels_up_to(10)) {
    for (const auto& h : level) {
      if (is_arf_definition(h) && sparseness_index(h) > 2) return show(h);
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"1 tree census matches brute-force oracle, genus <= 7", oracle_census},
      {"2 three Arf procedures agree, genus <= 10", arf_equivalence},
      {"3 four kappa-sparse characterizations agree, genus <= 12", kappa_equivalence},
      {"4 sum m*v_m - 1 equals the Frobenius number, genus <= 12", frobenius_from_leaps},
      {"5 leap-profile biconditionals, genus <= 12", leap_biconditionals},
      {"6 kappa-sparse classes closed under intersection and adjoining", frobenius_variety},
      {"7 pruned enumeration equals filtered, genus <= 10, kappa <= 6", pruned_equals_filtered},
      {"8 strict chain witnesses and pure-class partition", chain_and_partition},
      {"9 example family parameters and uniqueness", example_family_uniqueness},
      {"10 Arf implies sparse, genus <= 10", arf_implies_sparse},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty()) {
      std::printf("PASS  %s  (%.2fs)\n", name.c_str(), seconds);
    } else {
      std::printf("FAIL  %s  (%.2fs): %s\n", name.c_str(), seconds, problem.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
