#include "sparsegroup/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace sparsegroup {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGap: return "InvalidGap";
    case ErrorCode::NotASemigroup: return "NotASemigroup";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(Trusted{}, {}) {}

NumericalSemigroup::NumericalSemigroup(Trusted, std::vector<Int> gaps) : gaps_(std::move(gaps)) {
  const Int c = conductor();
  member_.assign(static_cast<std::size_t>(c) + 1, true);
  for (auto gap : gaps_) member_[static_cast<std::size_t>(gap)] = false;
  small_.reserve(static_cast<std::size_t>(c - genus()) + 1);
  for (Int n = 0; n <= c; ++n) {
    if (member_[static_cast<std::size_t>(n)]) small_.push_back(n);
  }
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Int> gaps, Limits limits) {
  std::vector<Int> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0) {
    throw SemigroupError(ErrorCode::InvalidGap,
                         "gap " + std::to_string(sorted.front()) + " is not a positive integer");
  }
  if (!sorted.empty() && sorted.back() + 1 > limits.max_conductor) {
    throw SemigroupError(ErrorCode::ConductorTooLarge,
                         "conductor " + std::to_string(sorted.back() + 1) + " exceeds cap " +
                             std::to_string(limits.max_conductor));
  }
  NumericalSemigroup h(Trusted{}, std::move(sorted));
  const auto& small = h.small_;
  // Sums reaching the conductor are members automatically.
  const Int c = h.conductor();
  for (std::size_t i = 1; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size() && small[i] + small[j] < c; ++j) {
      const Int sum = small[i] + small[j];
      if (!h.member_[static_cast<std::size_t>(sum)]) {
        throw SemigroupError(ErrorCode::NotASemigroup,
                             std::to_string(small[i]) + " + " + std::to_string(small[j]) + " = " +
                                 std::to_string(sum) + " is listed as a gap");
      }
    }
  }
  return h;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> generators,
                                                       Limits limits) {
  if (generators.empty()) {
    throw SemigroupError(ErrorCode::InvalidParameters, "generator set is empty");
  }
  Int divisor = 0;
  for (auto gen : generators) {
    if (gen <= 0) {
      throw SemigroupError(ErrorCode::InvalidParameters,
                           "generator " + std::to_string(gen) + " is not a positive integer");
    }
    divisor = std::gcd(divisor, gen);
  }
  if (divisor != 1) {
    throw SemigroupError(ErrorCode::NotCofinite,
                         "generators have gcd " + std::to_string(divisor) + ", complement is infinite");
  }
  const Int smallest = *std::min_element(generators.begin(), generators.end());
  // 1, ..., m - 1 are gaps whenever m > 1, so c >= m.
  if (smallest > 1 && smallest > limits.max_conductor) {
    throw SemigroupError(ErrorCode::ConductorTooLarge,
                         "multiplicity " + std::to_string(smallest) + " exceeds conductor cap");
  }

  // Reachable sums until a run of `smallest` consecutive members appears; from
  // there on every integer is reachable by adding the smallest generator.
  std::vector<bool> reachable{true};
  std::vector<Int> gaps;
  Int run = 1;
  for (Int n = 1; run < smallest; ++n) {
    if (n > limits.max_conductor + smallest) {
      throw SemigroupError(ErrorCode::ConductorTooLarge,
                           "conductor exceeds cap " + std::to_string(limits.max_conductor));
    }
    bool in = false;
    for (auto gen : generators) {
      if (gen <= n && reachable[static_cast<std::size_t>(n - gen)]) {
        in = true;
        break;
      }
    }
    reachable.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(n);
    }
  }
  if (!gaps.empty() && gaps.back() + 1 > limits.max_conductor) {
    throw SemigroupError(ErrorCode::ConductorTooLarge,
                         "conductor " + std::to_string(gaps.back() + 1) + " exceeds cap " +
                             std::to_string(limits.max_conductor));
  }
  return NumericalSemigroup(Trusted{}, std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::ordinary(Int genus) {
  if (genus < 0) {
    throw SemigroupError(ErrorCode::InvalidParameters, "genus must be non-negative");
  }
  std::vector<Int> gaps(static_cast<std::size_t>(genus));
  std::iota(gaps.begin(), gaps.end(), Int{1});
  return from_gaps(gaps);
}

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0) return false;
  if (n >= conductor()) return true;
  return member_[static_cast<std::size_t>(n)];
}

Int NumericalSemigroup::element(Int k) const noexcept {
  const Int last = static_cast<Int>(small_.size()) - 1;
  if (k <= last) return small_[static_cast<std::size_t>(k)];
  return conductor() + (k - last);
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  // Every minimal generator is at most c + n_1 (equality only for N_0).
  const Int bound = conductor() + multiplicity();
  std::vector<Int> generators;
  for (Int h = 1; h <= bound; ++h) {
    if (!contains(h)) continue;
    bool decomposable = false;
    for (const Int* a = small_.data() + 1; a != small_.data() + small_.size() && 2 * *a <= h; ++a) {
      if (contains(h - *a)) {
        decomposable = true;
        break;
      }
    }
    // Summands a <= h / 2 <= (c + n_1) / 2 never exceed c, so small_ suffices.
    if (!decomposable) generators.push_back(h);
  }
  return generators;
}

NumericalSemigroup NumericalSemigroup::remove_generator(Int x) const {
  const auto generators = minimal_generators();
  if (!std::binary_search(generators.begin(), generators.end(), x)) {
    throw SemigroupError(ErrorCode::InvalidParameters,
                         std::to_string(x) + " is not a minimal generator");
  }
  std::vector<Int> gaps = gaps_;
  gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), x), x);
  NumericalSemigroup child(Trusted{}, std::move(gaps));
  assert(child.is_closed());
  return child;
}

bool NumericalSemigroup::is_closed() const noexcept {
  const Int c = conductor();
  for (std::size_t i = 1; i < small_.size(); ++i) {
    for (std::size_t j = i; j < small_.size() && small_[i] + small_[j] < c; ++j) {
      if (!member_[static_cast<std::size_t>(small_[i] + small_[j])]) return false;
    }
  }
  return true;
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  std::vector<Int> gaps;
  gaps.reserve(a.gaps().size() + b.gaps().size());
  std::set_union(a.gaps().begin(), a.gaps().end(), b.gaps().begin(), b.gaps().end(),
                 std::back_inserter(gaps));
  NumericalSemigroup result(NumericalSemigroup::Trusted{}, std::move(gaps));
  assert(result.is_closed());
  return result;
}

NumericalSemigroup adjoin_frobenius(const NumericalSemigroup& h) {
  if (h.genus() == 0) {
    throw SemigroupError(ErrorCode::TrivialSemigroup, "N_0 has no Frobenius gap to adjoin");
  }
  std::vector<Int> gaps(h.gaps().begin(), h.gaps().end() - 1);
  NumericalSemigroup parent(NumericalSemigroup::Trusted{}, std::move(gaps));
  assert(parent.is_closed());
  return parent;
}

}  // namespace sparsegroup
