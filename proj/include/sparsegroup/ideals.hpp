#pragma once

#include <vector>

#include "sparsegroup/semigroup.hpp"

namespace sparsegroup {

/// A cofinite set of integers bounded below, used for relative ideals E with
/// E + H a subset of E.
///
/// Stored as its minimum `base`, a membership table over [base, threshold),
/// and `threshold`, the least integer from which every integer is a member.
/// The representation is normalized (threshold is tight), so equality is
/// structural.
class RelativeIdeal {
 public:
  /// {base, base + 1, ...}
  explicit RelativeIdeal(Int base);

  /// Members below `threshold` are listed explicitly; every integer at or
  /// above `threshold` is a member. `below` must be non-empty or `threshold`
  /// is taken as the base.
  RelativeIdeal(std::vector<Int> below, Int threshold);

  /// H viewed as a relative ideal of itself.
  static RelativeIdeal of(const NumericalSemigroup& h);

  Int base() const noexcept { return base_; }
  Int threshold() const noexcept { return threshold_; }
  bool contains(Int n) const noexcept;

  /// Members strictly below the threshold, ascending.
  std::vector<Int> members_below_threshold() const;

  /// E + z.
  RelativeIdeal translate(Int z) const;

  /// E + H is contained in E.
  bool is_relative_ideal_of(const NumericalSemigroup& h) const;

  /// Set inclusion.
  bool is_subset_of(const RelativeIdeal& other) const;

  /// Reads a set containing 0 as a numerical semigroup. Throws
  /// InvalidParameters when the base is not 0 and NotASemigroup when the set
  /// is not additively closed.
  NumericalSemigroup as_semigroup() const;

  friend bool operator==(const RelativeIdeal&, const RelativeIdeal&) = default;

 private:
  void normalize();

  Int base_ = 0;
  Int threshold_ = 0;
  std::vector<bool> members_;  // index n - base_, for n in [base_, threshold_)
};

/// H(n_k) = {h in H : h >= n_k}; H itself for k = 0.
RelativeIdeal ideal_at(const NumericalSemigroup& h, Int k);

/// (E - F) = {z : F + z is a subset of E}.
RelativeIdeal ideal_difference(const RelativeIdeal& e, const RelativeIdeal& f);

/// H(n_k) = (H(n_k) - H(n_k)) + n_k, for k >= 1.
bool is_stable(const NumericalSemigroup& h, Int k);

/// n_i + n_j - n_k in H for all 0 <= k <= j <= i <= c - g.
bool is_arf_definition(const NumericalSemigroup& h);

/// 2 n_i - n_j in H for all 0 <= j <= i <= c - g.
bool is_arf_double(const NumericalSemigroup& h);

/// H(n_k) stable for every 1 <= k <= c - g.
bool is_arf_stable(const NumericalSemigroup& h);

inline bool is_arf(const NumericalSemigroup& h) { return is_arf_definition(h); }

}  // namespace sparsegroup
