#pragma once

#include <cstddef>
#include <vector>

#include "permsplit/permutation.hpp"

namespace permsplit {

// Single-consumer cursor over a sequence of permutations. Streams keep
// O(degree) working state and never materialize the sequence. A stream
// instance must not be shared between threads; independent streams may run
// in parallel.
class PermStream {
 public:
  virtual ~PermStream() = default;

  // Writes the next element and returns true, or returns false once
  // exhausted.
  virtual bool next(Permutation& out) = 0;

  // Current cursor footprint in bytes, for memory assertions in tests.
  virtual std::size_t state_bytes() const = 0;
};

// Drains a stream into a vector. Intended for tests and small demos; throws
// std::length_error beyond `limit` elements (default 10!, so any degree <= 10
// set fits).
std::vector<Permutation> collect_all(PermStream& stream, std::size_t limit = 3628800);

}  // namespace permsplit
