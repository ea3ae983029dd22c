#pragma once

#include <memory>
#include <vector>

#include "permsplit/counting.hpp"
#include "permsplit/lex_stream.hpp"
#include "permsplit/perm_stream.hpp"

namespace permsplit {

// Parameters (k, ell) of the subgroup H <= S_n generated by the symmetric
// group on the first k points together with the ell-cycle on the next ell
// points. |H| = k! when ell = 0 and ell * k! when ell >= 2. ell = 1 gives
// the same group as ell = 0 and is normalized away, so after construction
// ell is 0 or >= 2 and k + ell >= 1.
struct SubgroupSpec {
  int n = 0;
  int k = 0;
  int ell = 0;
  ExactCount order;

  // Validates 0 <= k <= n, 0 <= ell <= n-k, k+ell >= 1; normalizes ell = 1.
  static SubgroupSpec make(int n, int k, int ell);

  // n! / order, by exact division. transversal_index() computes the same
  // number along the combinatorial route.
  ExactCount index() const;
};

// Generating set of H as degree-n permutations: the transposition of the
// first two points and the k-cycle for k >= 2 (deduplicated when k = 2),
// plus the ell-cycle for ell >= 2. The trivial group gets an empty list.
std::vector<Permutation> subgroup_generators(const SubgroupSpec& spec);

// Scans all admissible (k, ell) in O(n^2) incremental log arithmetic and
// returns the spec whose order is closest to the target in log distance.
// Ties prefer the smaller exact order, then the larger k; both resolved by
// exact integer comparison. `target` must lie in [log 1, log n!].
SubgroupSpec choose_subgroup_params(int n, LogMagnitude target);

// Enumeration of H: arrangements of the first k points in lexicographic
// order, each composed with the successive powers of the ell-cycle. Yields
// exactly |H| permutations, all fixing points beyond k + ell, with O(n)
// state.
class SubgroupStream final : public PermStream {
 public:
  explicit SubgroupStream(const SubgroupSpec& spec);

  // Restriction to S_k-arrangement ranks [lo, hi); used for partitioning.
  SubgroupStream(const SubgroupSpec& spec, const ExactCount& lo, const ExactCount& hi);

  // Disjoint, jointly exhaustive slices whose concatenation is the canonical
  // order. At most max_slices, fewer when the arrangement space is small.
  static std::vector<std::unique_ptr<PermStream>> partition(const SubgroupSpec& spec,
                                                            int max_slices);

  bool next(Permutation& out) override;
  std::size_t state_bytes() const override;

 private:
  SubgroupSpec spec_;
  LexArrangementStream arrangements_;
  std::vector<int> arrangement_;
  int power_ = 0;
  bool have_arrangement_ = false;
  bool exhausted_ = false;
  std::vector<int> out_;
};

// Balanced contiguous split of [0, total) into at most `parts` ranges.
std::vector<std::pair<ExactCount, ExactCount>> chunk_ranges(const ExactCount& total, int parts);

}  // namespace permsplit
