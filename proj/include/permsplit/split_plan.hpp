#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permsplit/transversal.hpp"

namespace permsplit {

enum class SplitKind { subgroup_transversal, bidirectional, randomized };

std::string to_string(SplitKind kind);

// Description of a factorization of S_n into two sets whose pairwise
// products cover the group: every g is compose(f, s) with f from the first
// factor and s from the second (uniquely for the deterministic kinds).
//
// size_a/size_b follow the conventional labels: for subgroup_transversal,
// A is the transversal and B the subgroup; for bidirectional, A is the
// (n)_k prefix side and B the (n-k)! suffix side. Under this library's
// compose-left-first convention the bidirectional factorization runs
// suffix side first (it is the subgroup fixing the first k points), so
// there first = B-side and second = A-side; the other kinds have
// first = A-side, second = B-side.
class SplitPlan {
 public:
  static SplitPlan make_subgroup_transversal(const SubgroupSpec& spec);

  SplitKind kind() const { return kind_; }
  int degree() const { return n_; }
  bool deterministic() const { return kind_ != SplitKind::randomized; }

  const ExactCount& size_a() const { return size_a_; }
  const ExactCount& size_b() const { return size_b_; }
  const ExactCount& size_first() const;
  const ExactCount& size_second() const;

  std::unique_ptr<PermStream> first_stream() const;
  std::unique_ptr<PermStream> second_stream() const;
  std::vector<std::unique_ptr<PermStream>> first_slices(int max_slices) const;
  std::vector<std::unique_ptr<PermStream>> second_slices(int max_slices) const;

  // kind-specific parameters
  const std::optional<SubgroupSpec>& subgroup_spec() const { return spec_; }
  int split_point() const { return split_point_; }          // bidirectional k
  std::uint64_t sample_count() const { return sample_count_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Permutation>& samples_a() const { return *samples_a_; }
  const std::vector<Permutation>& samples_b() const { return *samples_b_; }

 private:
  friend SplitPlan bidirectional_split(int n);
  friend SplitPlan random_split(int n, std::uint64_t count, std::uint64_t seed);
  SplitPlan() = default;

  SplitKind kind_ = SplitKind::subgroup_transversal;
  int n_ = 0;
  ExactCount size_a_, size_b_;
  std::optional<SubgroupSpec> spec_;
  int split_point_ = 0;
  std::uint64_t sample_count_ = 0;
  std::uint64_t seed_ = 0;
  std::shared_ptr<const std::vector<Permutation>> samples_a_, samples_b_;
};

// Splits the image vector at the point where the remaining suffix length is
// round(x), x the real solution of x! = sqrt(n!), clamped so the prefix is
// never empty. A-side (n)_k injective prefixes, B-side (n-k)! suffixes.
SplitPlan bidirectional_split(int n);

// count distinct uniform samples for each side, drawn independently with a
// deterministic generator; duplicates are redrawn. count may not exceed n!
// (checked in log space).
SplitPlan random_split(int n, std::uint64_t count, std::uint64_t seed);

// 1 - exp(-count^2 / group_order): lower bound on the probability that a
// fixed element lands in the product of two random count-element sets.
double coverage_lower_bound(double count, double group_order);

// All (n)_k injective k-prefixes of an image vector in lexicographic order,
// completed by appending the unused points in increasing order.
class PrefixCompletionStream final : public PermStream {
 public:
  PrefixCompletionStream(int n, int k);
  PrefixCompletionStream(int n, int k, const ExactCount& lo, const ExactCount& hi);
  static std::vector<std::unique_ptr<PermStream>> partition(int n, int k, int max_slices);

  bool next(Permutation& out) override;
  std::size_t state_bytes() const override;

 private:
  void seat(std::size_t slot, int value);
  void fill_ascending_from(std::size_t slot);

  int n_ = 0, k_ = 0;
  std::vector<int> prefix_;
  std::uint64_t used_ = 0;
  bool done_ = false;
  bool ranged_ = false;
  ExactCount remaining_;
  std::vector<int> out_;
};

// Permutations fixing the first k points, suffix arrangements in
// lexicographic order.
class FixedPrefixStream final : public PermStream {
 public:
  FixedPrefixStream(int n, int k);
  FixedPrefixStream(int n, int k, const ExactCount& lo, const ExactCount& hi);
  static std::vector<std::unique_ptr<PermStream>> partition(int n, int k, int max_slices);

  bool next(Permutation& out) override;
  std::size_t state_bytes() const override;

 private:
  int n_ = 0, k_ = 0;
  LexArrangementStream suffixes_;
  std::vector<int> suffix_;
  std::vector<int> out_;
};

}  // namespace permsplit
