#include "sparsegroup/leaps.hpp"

#include <sstream>

namespace sparsegroup {

LeapProfile::LeapProfile(std::map<Int, Int> counts) {
  for (auto [m, v] : counts) {
    if (m < 1 || v < 0) {
      throw SemigroupError(ErrorCode::InvalidParameters,
                           "leap profile entry " + std::to_string(m) + ":" + std::to_string(v) +
                               " is out of range");
    }
    if (v != 0) counts_.emplace(m, v);
  }
}

Int LeapProfile::count(Int m) const noexcept {
  auto it = counts_.find(m);
  return it == counts_.end() ? 0 : it->second;
}

Int LeapProfile::total() const noexcept {
  Int sum = 0;
  for (auto [m, v] : counts_) sum += v;
  return sum;
}

Int LeapProfile::total_up_to(Int bound) const noexcept {
  Int sum = 0;
  for (auto [m, v] : counts_) {
    if (m > bound) break;
    sum += v;
  }
  return sum;
}

Int LeapProfile::weighted_up_to(Int bound) const noexcept {
  Int sum = 0;
  for (auto [m, v] : counts_) {
    if (m > bound) break;
    sum += m * v;
  }
  return sum;
}

Int LeapProfile::max_size() const noexcept {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

std::string LeapProfile::key() const {
  std::ostringstream out;
  bool first = true;
  for (auto [m, v] : counts_) {
    if (!first) out << ',';
    out << m << ':' << v;
    first = false;
  }
  return out.str();
}

std::vector<Leap> leap_set(const NumericalSemigroup& h) {
  std::vector<Leap> leaps;
  leaps.reserve(h.gaps().size());
  Int previous = -1;
  for (auto gap : h.gaps()) {
    leaps.push_back({previous, gap});
    previous = gap;
  }
  return leaps;
}

LeapProfile leap_profile(const NumericalSemigroup& h) {
  std::map<Int, Int> counts;
  for (const auto& leap : leap_set(h)) ++counts[leap.size()];
  return LeapProfile(std::move(counts));
}

Int frobenius_from_profile(const LeapProfile& profile) {
  Int sum = 0;
  for (auto [m, v] : profile.counts()) sum += m * v;
  return sum - 1;
}

bool is_hyperelliptic(const NumericalSemigroup& h) { return h.contains(2); }

bool is_sparse(const NumericalSemigroup& h) {
  Int previous = -1;
  for (auto gap : h.gaps()) {
    if (gap - previous > 2) return false;
    previous = gap;
  }
  return true;
}

}  // namespace sparsegroup
