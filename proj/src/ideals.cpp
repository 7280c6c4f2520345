#include "sparsegroup/ideals.hpp"

#include <algorithm>
#include <string>

namespace sparsegroup {

RelativeIdeal::RelativeIdeal(Int base) : base_(base), threshold_(base) {}

RelativeIdeal::RelativeIdeal(std::vector<Int> below, Int threshold) : threshold_(threshold) {
  std::sort(below.begin(), below.end());
  below.erase(std::unique(below.begin(), below.end()), below.end());
  below.erase(std::lower_bound(below.begin(), below.end(), threshold), below.end());
  base_ = below.empty() ? threshold : below.front();
  members_.assign(static_cast<std::size_t>(threshold_ - base_), false);
  for (auto n : below) members_[static_cast<std::size_t>(n - base_)] = true;
  normalize();
}

void RelativeIdeal::normalize() {
  while (!members_.empty() && members_.back()) {
    members_.pop_back();
    --threshold_;
  }
}

RelativeIdeal RelativeIdeal::of(const NumericalSemigroup& h) { return ideal_at(h, 0); }

bool RelativeIdeal::contains(Int n) const noexcept {
  if (n < base_) return false;
  if (n >= threshold_) return true;
  return members_[static_cast<std::size_t>(n - base_)];
}

std::vector<Int> RelativeIdeal::members_below_threshold() const {
  std::vector<Int> out;
  for (Int n = base_; n < threshold_; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

RelativeIdeal RelativeIdeal::translate(Int z) const {
  RelativeIdeal moved = *this;
  moved.base_ += z;
  moved.threshold_ += z;
  return moved;
}

bool RelativeIdeal::is_relative_ideal_of(const NumericalSemigroup& h) const {
  for (Int e = base_; e < threshold_; ++e) {
    if (!contains(e)) continue;
    for (Int s = 1; e + s < threshold_; ++s) {
      if (h.contains(s) && !contains(e + s)) return false;
    }
  }
  return true;
}

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  const Int end = std::max(threshold_, other.threshold_);
  for (Int n = base_; n < end; ++n) {
    if (contains(n) && !other.contains(n)) return false;
  }
  return true;
}

NumericalSemigroup RelativeIdeal::as_semigroup() const {
  if (base_ != 0) {
    throw SemigroupError(ErrorCode::InvalidParameters,
                         "set with minimum " + std::to_string(base_) + " is not based at 0");
  }
  std::vector<Int> gaps;
  for (Int n = 1; n < threshold_; ++n) {
    if (!contains(n)) gaps.push_back(n);
  }
  return NumericalSemigroup::from_gaps(gaps);
}

RelativeIdeal ideal_at(const NumericalSemigroup& h, Int k) {
  if (k < 0) {
    throw SemigroupError(ErrorCode::InvalidParameters, "ideal index must be non-negative");
  }
  const Int start = h.element(k);
  const Int c = h.conductor();
  std::vector<Int> below;
  for (auto n : h.small_elements()) {
    if (n >= start && n < c) below.push_back(n);
  }
  return RelativeIdeal(std::move(below), std::max(c, start));
}

RelativeIdeal ideal_difference(const RelativeIdeal& e, const RelativeIdeal& f) {
  // z < base(E) - base(F) moves base(F) outside E; z >= threshold(E) - base(F)
  // moves all of F past the threshold of E.
  const Int first = e.base() - f.base();
  const Int last = e.threshold() - f.base();
  std::vector<Int> below;
  for (Int z = first; z < last; ++z) {
    bool fits = true;
    for (Int x = f.base(); x + z < e.threshold(); ++x) {
      if (f.contains(x) && !e.contains(x + z)) {
        fits = false;
        break;
      }
    }
    if (fits) below.push_back(z);
  }
  return RelativeIdeal(std::move(below), last);
}

bool is_stable(const NumericalSemigroup& h, Int k) {
  if (k < 1) {
    throw SemigroupError(ErrorCode::InvalidParameters, "stability is checked for k >= 1");
  }
  const RelativeIdeal ideal = ideal_at(h, k);
  return ideal_difference(ideal, ideal).translate(h.element(k)) == ideal;
}

bool is_arf_definition(const NumericalSemigroup& h) {
  const auto& n = h.small_elements();
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t k = 0; k <= j; ++k) {
        if (!h.contains(n[i] + n[j] - n[k])) return false;
      }
    }
  }
  return true;
}

bool is_arf_double(const NumericalSemigroup& h) {
  const auto& n = h.small_elements();
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!h.contains(2 * n[i] - n[j])) return false;
    }
  }
  return true;
}

bool is_arf_stable(const NumericalSemigroup& h) {
  const Int last = h.conductor() - h.genus();
  for (Int k = 1; k <= last; ++k) {
    if (!is_stable(h, k)) return false;
  }
  return true;
}

}  // namespace sparsegroup
