#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockalg/gen_index.hpp"

namespace blockalg {

/// A partition: non-decreasing sequence of generator indices under the Q
/// order.  The empty sequence is the null partition (length 0, degree (0,1)).
class Partition {
 public:
  Partition() = default;

  /// Wraps an already sorted sequence; throws if it is not non-decreasing or
  /// contains a non-generator.
  static Partition from_sorted(std::vector<GenIndex> parts) {
    for (const auto& p : parts) require_generator(p, "Partition");
    if (!std::is_sorted(parts.begin(), parts.end()))
      throw std::invalid_argument("Partition: parts not sorted non-decreasingly");
    Partition r;
    r.parts_ = std::move(parts);
    return r;
  }

  /// Sorts the given parts into a partition.
  static Partition sorted(std::vector<GenIndex> parts) {
    for (const auto& p : parts) require_generator(p, "Partition");
    std::sort(parts.begin(), parts.end());
    Partition r;
    r.parts_ = std::move(parts);
    return r;
  }

  std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<GenIndex>& parts() const { return parts_; }

  /// lambda(alpha): multiplicity of alpha among the parts.
  std::int64_t mult(GenIndex alpha) const {
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), alpha);
    return hi - lo;
  }

  /// lambda{i}: the first i parts, 0 <= i <= length.
  Partition prefix(std::int64_t i) const {
    check_range(i, 0, length(), "prefix");
    Partition r;
    r.parts_.assign(parts_.begin(), parts_.begin() + i);
    return r;
  }

  /// lambda[j]: drop the first j parts, 0 <= j <= length.
  Partition suffix(std::int64_t j) const {
    check_range(j, 0, length(), "suffix");
    Partition r;
    r.parts_.assign(parts_.begin() + j, parts_.end());
    return r;
  }

  /// lambda<i>: remove the i-th part (1-based), 1 <= i <= length.
  Partition removed(std::int64_t i) const {
    check_range(i, 1, length(), "removed");
    Partition r;
    r.parts_ = parts_;
    r.parts_.erase(r.parts_.begin() + (i - 1));
    return r;
  }

  /// Copy with one more part inserted at its sorted position.
  Partition with_part(GenIndex alpha) const {
    require_generator(alpha, "with_part");
    Partition r;
    r.parts_ = parts_;
    r.parts_.insert(std::upper_bound(r.parts_.begin(), r.parts_.end(), alpha), alpha);
    return r;
  }

  /// |lambda| = lambda_1 * ... * lambda_r in Q; (0,1) for the null partition.
  QDegree degree() const {
    QDegree d = q_identity();
    for (const auto& p : parts_) d = star(d, p);
    return d;
  }

  std::int64_t pi_degree() const { return pi(degree()); }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Lexicographic by parts; deterministic key order for canonical maps.
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
    return std::lexicographical_compare_three_way(x.parts_.begin(), x.parts_.end(),
                                                  y.parts_.begin(), y.parts_.end());
  }

  std::string str() const {
    if (parts_.empty()) return "()";
    std::string s;
    for (const auto& p : parts_) s += gen_to_string(p);
    return s;
  }

 private:
  static void check_range(std::int64_t v, std::int64_t lo, std::int64_t hi, const char* who) {
    if (v < lo || v > hi)
      throw std::out_of_range(std::string("Partition::") + who + ": index " +
                              std::to_string(v) + " out of range");
  }

  std::vector<GenIndex> parts_;
};

}  // namespace blockalg
