#pragma once

#include <optional>

#include "sparsegroup/leaps.hpp"
#include "sparsegroup/semigroup.hpp"

namespace sparsegroup {

// Four equivalent tests for membership in the class of kappa-sparse
// semigroups (every leap has size at most kappa). The profile and gap
// difference forms accept kappa >= 1; the non-gap spacing and run forms are
// only meaningful for kappa >= 2 and throw InvalidParameters below that.

/// v_1 + ... + v_kappa = g.
bool is_kappa_sparse_profile(const NumericalSemigroup& h, Int kappa);

/// l_i - l_{i-1} <= kappa for every leap.
bool is_kappa_sparse_gapdiff(const NumericalSemigroup& h, Int kappa);

/// n_{i+kappa-2} - n_{i-1} >= kappa for 1 <= i <= c - g - kappa + 2.
bool is_kappa_sparse_nongap(const NumericalSemigroup& h, Int kappa);

/// No run n_i, n_i + 1, ..., n_i + kappa - 1 in H starts at a positive n_i < c.
bool is_kappa_sparse_run(const NumericalSemigroup& h, Int kappa);

inline bool is_kappa_sparse(const NumericalSemigroup& h, Int kappa) {
  return is_kappa_sparse_profile(h, kappa);
}

/// kappa-sparse with v_kappa != 0. For kappa = 1 the pure class is {N_0}.
bool is_pure_kappa_sparse(const NumericalSemigroup& h, Int kappa);

/// kappa-sparse and some positive n_i < c starts a run n_i, ..., n_i + kappa - 2
/// inside H. Agrees with is_pure_kappa_sparse for kappa >= 3; throws
/// InvalidParameters for smaller kappa.
bool is_pure_kappa_sparse_run(const NumericalSemigroup& h, Int kappa);

/// The unique kappa for which H is pure kappa-sparse: the largest leap, or 1 for N_0.
Int sparseness_index(const NumericalSemigroup& h);

/// {0} u {a, ..., a + kappa - 2} u {n >= 2a}, pure kappa-sparse of genus 2a - kappa.
/// Requires kappa >= 3 and a >= kappa.
NumericalSemigroup example_family(Int a, Int kappa);

/// With K = 2g - l_g: sum_{m<=kappa} m v_m = 2g - K + 1 and
/// sum_{2<=m<=kappa} (m - 1) v_m = g - K + 1. Requires g > 0 and kappa >= 2.
bool frobenius_identity_check(const NumericalSemigroup& h, Int kappa);

struct KappaChecks {
  Int kappa = 0;
  bool profile = false;
  bool gap_difference = false;
  std::optional<bool> nongap;  // kappa >= 2 only
  std::optional<bool> run;     // kappa >= 2 only

  bool agree() const noexcept {
    return profile == gap_difference && nongap.value_or(profile) == profile &&
           run.value_or(profile) == profile;
  }
};

struct SparsenessReport {
  Int kappa_index = 1;
  std::optional<Leap> pure_witness;  // first leap of size kappa_index; none for N_0
  std::optional<KappaChecks> checks;
};

KappaChecks kappa_checks(const NumericalSemigroup& h, Int kappa);

SparsenessReport sparseness_report(const NumericalSemigroup& h,
                                   std::optional<Int> kappa = std::nullopt);

}  // namespace sparsegroup
