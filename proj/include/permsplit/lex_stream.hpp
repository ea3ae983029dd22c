#pragma once

#include <cstddef>
#include <vector>

#include "permsplit/counting.hpp"

namespace permsplit {

// Streams every arrangement of a set of distinct integers in lexicographic
// order with O(size) working state. The empty set yields one empty
// arrangement.
class LexArrangementStream {
 public:
  explicit LexArrangementStream(std::vector<int> ground_set);

  // Restriction to lexicographic ranks [lo, hi), 0 <= lo <= hi <= size!.
  LexArrangementStream(std::vector<int> ground_set, const ExactCount& lo, const ExactCount& hi);

  bool next(std::vector<int>& out);
  std::size_t state_bytes() const;

  static ExactCount arrangement_count(std::size_t set_size);

  // rank-th arrangement of the sorted ground set, factorial number system.
  static std::vector<int> unrank(const std::vector<int>& sorted_ground, ExactCount rank);
  static ExactCount rank_of(const std::vector<int>& sorted_ground,
                            const std::vector<int>& arrangement);

 private:
  std::vector<int> current_;
  bool exhausted_ = false;
  bool ranged_ = false;
  ExactCount remaining_ = 0;
};

}  // namespace permsplit
