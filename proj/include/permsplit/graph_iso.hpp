#pragma once

#include <cstdint>
#include <optional>

#include "permsplit/graph.hpp"
#include "permsplit/solver.hpp"

namespace permsplit {

struct RandomizedSearch {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct GraphIsoOptions {
  std::uint64_t budget_bytes = std::uint64_t(256) << 20;
  int threads = 1;
  // When set, searches the product of two random sample sets instead of the
  // deterministic factorization; an empty result is then evidence only.
  std::optional<RandomizedSearch> randomized;
};

struct GraphIsoResult {
  std::optional<Permutation> witness;  // verified relabeling when present
  bool conclusive = false;             // empty + conclusive = proof of non-isomorphism
  SolveReport report;
};

// Finds g with apply(g, M) == N via the collision solver over the
// conjugation action, sizing the stored side from the byte budget. Unequal
// vertex counts short-circuit to a proof of non-isomorphism. A budget too
// small for a single table entry raises MemoryCapError.
GraphIsoResult graph_iso(const AdjacencyMatrix& m, const AdjacencyMatrix& n,
                         const GraphIsoOptions& options = {});

}  // namespace permsplit
