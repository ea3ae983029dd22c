#pragma once

#include <memory>
#include <vector>

#include "permsplit/subgroup.hpp"

namespace permsplit {

// |S_n : H| along the merge-counting route:
//   (ell-1)! * (n-k-ell)! * C(k+ell, ell) * C(n, n-k-ell)
// with (ell-1)! read as 1 when ell = 0. Equals n!/|H| exactly.
ExactCount transversal_index(const SubgroupSpec& spec);

// True iff g is the lexicographically least base image of its left coset gH:
// the values 1..k appear in increasing order in the image vector and the
// value k+1 appears before each of k+2..k+ell. Those are exactly the base
// images that pick the smallest point of every orbit along H's stabilizer
// chain (first-block points stay one orbit, the cycle block shatters after
// its least point, the tail is fixed).
bool is_coset_minimal(const Permutation& g, const SubgroupSpec& spec);

namespace detail {

// Enumerates the C(length, ones) bit masks with `ones` of `length` bits set
// in ascending numeric value. Bit j addresses position length-1-j, so
// ascending masks enumerate two-list merges in lexicographic pattern order.
struct MaskCursor {
  int length = 0;
  int ones = 0;
  unsigned __int128 mask = 0;

  void reset(int len, int set_bits);
  bool advance();  // false on wrap
  bool take_second(int position) const {
    return (mask >> (length - 1 - position)) & 1;
  }
};

}  // namespace detail

// Streaming transversal of H in S_n. Outputs, in a fixed canonical order,
// every image vector that keeps 1..k in increasing order and k+1 ahead of
// k+2..k+ell: the coset-minimal base images, one per left coset of H.
//
// Loop structure, outermost first:
//   1. arrangements of the cycle block that start with its least point
//      ("head arrangements", lexicographic),
//   2. arrangements of the tail block (lexicographic),
//   3. merge pattern of the first block with the cycle block (ascending),
//   4. merge pattern of that prefix with the tail block (ascending).
// State stays O(n); degree is limited to 64 by the mask width.
class TransversalStream final : public PermStream {
 public:
  explicit TransversalStream(const SubgroupSpec& spec);

  // Slice covering head-arrangement ranks [lo, hi). Slices are disjoint,
  // jointly exhaustive, and concatenate to the canonical order.
  TransversalStream(const SubgroupSpec& spec, const ExactCount& head_lo, const ExactCount& head_hi);

  // Splits by head-arrangement rank; when there is only one head
  // arrangement, falls back to slicing the tail-arrangement ranks.
  static std::vector<std::unique_ptr<PermStream>> partition(const SubgroupSpec& spec,
                                                            int max_slices);

  bool next(Permutation& out) override;
  std::size_t state_bytes() const override;

 private:
  struct TailRange {
    ExactCount lo, hi;
  };
  TransversalStream(const SubgroupSpec& spec, const ExactCount& head_lo, const ExactCount& head_hi,
                    const TailRange* tail_range);

  bool advance_head();
  bool advance_tail();
  LexArrangementStream fresh_tail_stream() const;
  void build(Permutation& out);

  SubgroupSpec spec_;
  std::vector<int> tail_ground_;
  bool tail_ranged_ = false;
  ExactCount tail_lo_, tail_hi_;

  LexArrangementStream head_rest_;  // cycle-block points after the least one
  std::vector<int> head_;           // current head arrangement, ell values
  LexArrangementStream tail_;
  std::vector<int> tail_cur_;
  detail::MaskCursor merge_head_;  // first block vs cycle block
  detail::MaskCursor merge_tail_;  // merged prefix vs tail block
  std::vector<int> prefix_;        // k + ell values
  std::vector<int> out_;
  bool done_ = false;
};

}  // namespace permsplit
