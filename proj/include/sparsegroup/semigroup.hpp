#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sparsegroup/error.hpp"

namespace sparsegroup {

using Int = std::int64_t;

/// Bounds enforced at the construction trust boundary.
struct Limits {
  Int max_conductor = 1'000'000;
};

/// A numerical semigroup H, stored canonically as its sorted gap sequence.
///
/// The membership table over [0, c] and the list of small elements
/// n_0 < n_1 < ... < n_{c-g} = c are caches derived from the gaps. Every
/// value of this type is a valid semigroup: the named constructors validate
/// additive closure, and the remaining operations only produce semigroups.
class NumericalSemigroup {
 public:
  /// The trivial semigroup N_0 (no gaps, conductor 0, Frobenius number -1).
  NumericalSemigroup();

  /// Builds H from its gap set. Input order and duplicates are irrelevant.
  /// Throws InvalidGap for values <= 0, NotASemigroup if the complement is
  /// not additively closed, ConductorTooLarge above `limits.max_conductor`.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps, Limits limits = {});

  /// Smallest semigroup containing `generators`. Throws NotCofinite when
  /// gcd(generators) != 1 and InvalidParameters for empty or non-positive input.
  static NumericalSemigroup from_generators(std::span<const Int> generators,
                                            Limits limits = {});

  /// N_g = {0} u {n >= g + 1}.
  static NumericalSemigroup ordinary(Int genus);

  const std::vector<Int>& gaps() const noexcept { return gaps_; }

  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  Int conductor() const noexcept { return gaps_.empty() ? 0 : gaps_.back() + 1; }
  /// Largest gap, or -1 for N_0.
  Int frobenius() const noexcept { return conductor() - 1; }
  Int multiplicity() const noexcept { return element(1); }

  bool contains(Int n) const noexcept;

  /// n_0, ..., n_{c-g}: every element up to and including the conductor.
  const std::vector<Int>& small_elements() const noexcept { return small_; }

  /// n_k for any k >= 0; elements past the conductor are c + (k - (c - g)).
  Int element(Int k) const noexcept;

  /// Minimal generating set, ascending.
  std::vector<Int> minimal_generators() const;

  /// H \ {x} for a minimal generator x. Throws InvalidParameters otherwise.
  NumericalSemigroup remove_generator(Int x) const;

  /// Recomputes closure from scratch; true for every constructed value.
  bool is_closed() const noexcept;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.gaps_ == b.gaps_;
  }
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                          const NumericalSemigroup& b) noexcept {
    return a.gaps_ <=> b.gaps_;
  }

 private:
  struct Trusted {};
  NumericalSemigroup(Trusted, std::vector<Int> gaps);

  friend NumericalSemigroup intersect(const NumericalSemigroup&, const NumericalSemigroup&);
  friend NumericalSemigroup adjoin_frobenius(const NumericalSemigroup&);

  std::vector<Int> gaps_;
  std::vector<bool> member_;
  std::vector<Int> small_;
};

/// Gap set is the union of both gap sets.
NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// H u {frobenius(H)}. Throws TrivialSemigroup for N_0.
NumericalSemigroup adjoin_frobenius(const NumericalSemigroup& h);

}  // namespace sparsegroup

template <>
struct std::hash<sparsegroup::NumericalSemigroup> {
  std::size_t operator()(const sparsegroup::NumericalSemigroup& h) const noexcept {
    std::size_t seed = h.gaps().size();
    for (auto gap : h.gaps()) {
      seed ^= std::hash<sparsegroup::Int>{}(gap) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};
