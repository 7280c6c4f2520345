#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sparsegroup/semigroup.hpp"

namespace sparsegroup {

/// Consecutive gaps (lo, hi); lo is -1 for the first leap.
struct Leap {
  Int lo = -1;
  Int hi = 0;

  Int size() const noexcept { return hi - lo; }

  friend auto operator<=>(const Leap&, const Leap&) = default;
};

/// Leap counts v_m keyed by leap size m. Sizes with no leaps are absent.
class LeapProfile {
 public:
  LeapProfile() = default;
  /// Zero counts are dropped; negative counts or sizes < 1 throw InvalidParameters.
  explicit LeapProfile(std::map<Int, Int> counts);

  /// v_m (0 when absent).
  Int count(Int m) const noexcept;
  /// Sum of v_m over all m, which is the genus.
  Int total() const noexcept;
  /// Sum of v_m over m <= bound.
  Int total_up_to(Int bound) const noexcept;
  /// Sum of m * v_m over m <= bound.
  Int weighted_up_to(Int bound) const noexcept;
  /// Largest m with v_m != 0, or 0 for the empty profile.
  Int max_size() const noexcept;

  const std::map<Int, Int>& counts() const noexcept { return counts_; }

  /// "m:v,m:v,..." in ascending m; empty string for N_0.
  std::string key() const;

  friend bool operator==(const LeapProfile&, const LeapProfile&) = default;
  friend auto operator<=>(const LeapProfile& a, const LeapProfile& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::map<Int, Int> counts_;
};

std::vector<Leap> leap_set(const NumericalSemigroup& h);

LeapProfile leap_profile(const NumericalSemigroup& h);

/// Sum of m * v_m, minus 1.
Int frobenius_from_profile(const LeapProfile& profile);

/// 2 in H.
bool is_hyperelliptic(const NumericalSemigroup& h);

/// Every leap has size at most 2; N_0 counts as sparse.
bool is_sparse(const NumericalSemigroup& h);

}  // namespace sparsegroup
