#include "permsplit/graph_iso.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace permsplit {

GraphIsoResult graph_iso(const AdjacencyMatrix& m, const AdjacencyMatrix& n,
                         const GraphIsoOptions& options) {
  GraphIsoResult result;
  if (m.vertex_count() != n.vertex_count()) {
    result.conclusive = true;
    return result;
  }
  const int degree = m.vertex_count();
  const ConjugationAction action(degree);
  SolveOptions solve_options;
  solve_options.memory_cap_bytes = options.budget_bytes;
  solve_options.threads = options.threads;

  if (options.randomized) {
    const SplitPlan plan = random_split(degree, options.randomized->samples,
                                        options.randomized->seed);
    result.report = solve(action, m, n, plan, solve_options);
  } else {
    const std::uint64_t entry_bytes = CollisionTable::estimate_entry_bytes(
        action.encode(m).size(), degree);
    ExactCount budget_elements = ExactCount(options.budget_bytes) / entry_bytes;
    const ExactCount half_space = boost::multiprecision::sqrt(factorial(degree));
    if (budget_elements > half_space) budget_elements = half_space;
    if (budget_elements < 1)
      throw MemoryCapError("graph_iso: byte budget below a single table entry");
    result.report = solve_tradeoff(action, m, n, static_cast<std::uint64_t>(budget_elements),
                                   solve_options);
  }
  result.witness = result.report.witness;
  result.conclusive = result.report.conclusive;
  return result;
}

}  // namespace permsplit
