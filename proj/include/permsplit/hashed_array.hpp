#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permsplit/solver.hpp"

namespace permsplit {

// Keyed injective hash over ordered arrays of n distinguishable objects.
// The value is a mixed function of the array's rank after a hidden
// relabeling of the object identities, so distinct arrays always get
// distinct values while the values themselves reveal nothing usable about
// the arrangement. Supports n <= 20 (ranks fit 64 bits).
class HashedArrayOracle {
 public:
  HashedArrayOracle(int n, std::uint64_t seed);

  int length() const { return n_; }
  std::uint64_t hash(const std::vector<int>& arrangement) const;

  // same length, key and hidden relabeling
  bool shares_key_with(const HashedArrayOracle& other) const;

 private:
  int n_ = 0;
  std::uint64_t key_ = 0;
  std::vector<int> relabel_;
};

// One ordered array together with the hash oracle that may be queried
// about its rearrangements.
struct HashedArrayInstance {
  HashedArrayOracle oracle;
  std::vector<int> array;
};

// Action of S_n on arrays by moving the object at slot i to slot i^g. The
// solver only ever compares oracle outputs; the array contents act as an
// opaque handle.
class HashedArrayAction {
 public:
  using State = std::vector<int>;

  explicit HashedArrayAction(const HashedArrayOracle& oracle) : oracle_(&oracle) {}
  int degree() const { return oracle_->length(); }
  State apply(const Permutation& g, const State& s) const;
  std::string encode(const State& s) const;

 private:
  const HashedArrayOracle* oracle_;
};

// Meet-in-the-middle search for the permutation aligning the first array
// with the second, consulting only the shared hash. Both instances must
// carry the same n and hash key.
SolveReport hashed_array_solve(const HashedArrayInstance& r, const HashedArrayInstance& s,
                               std::uint64_t budget_bytes, int threads = 1);

}  // namespace permsplit
