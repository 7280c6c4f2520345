#include "sparsegroup/kappa.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace sparsegroup {
namespace {

void require_kappa(Int kappa, Int minimum) {
  if (kappa < minimum) {
    throw SemigroupError(ErrorCode::InvalidParameters,
                         "kappa = " + std::to_string(kappa) + " must be at least " +
                             std::to_string(minimum));
  }
}

// Some positive n_i < c has n_i, n_i + 1, ..., n_i + length - 1 all in H.
bool has_run_below_conductor(const NumericalSemigroup& h, Int length) {
  const Int c = h.conductor();
  const auto& small = h.small_elements();
  for (std::size_t i = 1; i < small.size() && small[i] < c; ++i) {
    Int offset = 1;
    while (offset < length && h.contains(small[i] + offset)) ++offset;
    if (offset == length) return true;
  }
  return false;
}

}  // namespace

bool is_kappa_sparse_profile(const NumericalSemigroup& h, Int kappa) {
  require_kappa(kappa, 1);
  return leap_profile(h).total_up_to(kappa) == h.genus();
}

bool is_kappa_sparse_gapdiff(const NumericalSemigroup& h, Int kappa) {
  require_kappa(kappa, 1);
  Int previous = -1;
  for (auto gap : h.gaps()) {
    if (gap - previous > kappa) return false;
    previous = gap;
  }
  return true;
}

bool is_kappa_sparse_nongap(const NumericalSemigroup& h, Int kappa) {
  require_kappa(kappa, 2);
  const Int last = h.conductor() - h.genus() - kappa + 2;
  for (Int i = 1; i <= last; ++i) {
    if (h.element(i + kappa - 2) - h.element(i - 1) < kappa) return false;
  }
  return true;
}

bool is_kappa_sparse_run(const NumericalSemigroup& h, Int kappa) {
  require_kappa(kappa, 2);
  return !has_run_below_conductor(h, kappa);
}

bool is_pure_kappa_sparse(const NumericalSemigroup& h, Int kappa) {
  require_kappa(kappa, 1);
  if (kappa == 1) return h.genus() == 0;
  const LeapProfile profile = leap_profile(h);
  const bool pure = profile.total_up_to(kappa) == h.genus() && profile.count(kappa) != 0;
  assert(kappa < 3 || pure == is_pure_kappa_sparse_run(h, kappa));
  return pure;
}

bool is_pure_kappa_sparse_run(const NumericalSemigroup& h, Int kappa) {
  require_kappa(kappa, 3);
  return is_kappa_sparse_gapdiff(h, kappa) && has_run_below_conductor(h, kappa - 1);
}

Int sparseness_index(const NumericalSemigroup& h) {
  if (h.genus() == 0) return 1;
  Int widest = 0;
  Int previous = -1;
  for (auto gap : h.gaps()) {
    widest = std::max(widest, gap - previous);
    previous = gap;
  }
  return widest;
}

NumericalSemigroup example_family(Int a, Int kappa) {
  if (kappa < 3 || a < kappa) {
    throw SemigroupError(ErrorCode::InvalidParameters,
                         "family needs kappa >= 3 and a >= kappa, got a = " + std::to_string(a) +
                             ", kappa = " + std::to_string(kappa));
  }
  std::vector<Int> gaps;
  for (Int n = 1; n < a; ++n) gaps.push_back(n);
  for (Int n = a + kappa - 1; n < 2 * a; ++n) gaps.push_back(n);
  return NumericalSemigroup::from_gaps(gaps);
}

bool frobenius_identity_check(const NumericalSemigroup& h, Int kappa) {
  require_kappa(kappa, 2);
  if (h.genus() == 0) {
    throw SemigroupError(ErrorCode::InvalidParameters, "identity check needs genus > 0");
  }
  const Int g = h.genus();
  const Int defect = 2 * g - h.frobenius();  // K
  const LeapProfile profile = leap_profile(h);
  const Int weighted = profile.weighted_up_to(kappa);
  const Int excess = weighted - profile.total_up_to(kappa);  // sum of (m - 1) v_m, m >= 2
  return weighted == 2 * g - defect + 1 && excess == g - defect + 1;
}

KappaChecks kappa_checks(const NumericalSemigroup& h, Int kappa) {
  KappaChecks checks;
  checks.kappa = kappa;
  checks.profile = is_kappa_sparse_profile(h, kappa);
  checks.gap_difference = is_kappa_sparse_gapdiff(h, kappa);
  if (kappa >= 2) {
    checks.nongap = is_kappa_sparse_nongap(h, kappa);
    checks.run = is_kappa_sparse_run(h, kappa);
  }
  return checks;
}

SparsenessReport sparseness_report(const NumericalSemigroup& h, std::optional<Int> kappa) {
  SparsenessReport report;
  report.kappa_index = sparseness_index(h);
  for (const auto& leap : leap_set(h)) {
    if (leap.size() == report.kappa_index) {
      report.pure_witness = leap;
      break;
    }
  }
  if (kappa) report.checks = kappa_checks(h, *kappa);
  return report;
}

}  // namespace sparsegroup
