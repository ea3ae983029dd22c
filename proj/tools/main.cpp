#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permsplit/graph_iso.hpp"
#include "permsplit/solver.hpp"

namespace {

using permsplit::AdjacencyMatrix;
using permsplit::ExactCount;
using permsplit::LogMagnitude;
using permsplit::Permutation;
using permsplit::SubgroupSpec;

struct PlanRow {
  SubgroupSpec spec;
  ExactCount size_a, size_b;
  double ratio = 0.0;  // max(|A|, |B|) / sqrt(n!), always >= 1
};

double sqrt_factorial(int n) {
  return std::sqrt(static_cast<double>(permsplit::factorial(n)));
}

PlanRow best_plan(int n, std::optional<double> target_log) {
  PlanRow row;
  const double t = target_log.value_or(permsplit::log_factorial(n).value / 2.0);
  row.spec = permsplit::choose_subgroup_params(n, LogMagnitude{t});
  row.size_a = row.spec.index();
  row.size_b = row.spec.order;
  const double target = target_log ? std::exp(*target_log) : sqrt_factorial(n);
  const double order = static_cast<double>(row.spec.order);
  row.ratio = order >= target ? order / target : target / order;
  return row;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int cmd_plan(int n, std::optional<double> target_log, bool as_json) {
  const PlanRow row = best_plan(n, target_log);
  if (as_json) {
    nlohmann::json out{{"n", n},
                       {"kind", "subgroup_transversal"},
                       {"k", row.spec.k},
                       {"l", row.spec.ell},
                       {"size_a", row.size_a.str()},
                       {"size_b", row.size_b.str()},
                       {"ratio", row.ratio}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "n=" << n << " kind=subgroup_transversal k=" << row.spec.k
              << " l=" << row.spec.ell << " |A|=" << row.size_a << " |B|=" << row.size_b
              << " ratio=" << fmt6(row.ratio) << '\n';
  }
  return 0;
}

int cmd_enum(int n, const std::string& which, std::uint64_t limit,
             std::optional<double> target_log, bool as_json) {
  const PlanRow row = best_plan(n, target_log);
  std::unique_ptr<permsplit::PermStream> stream;
  if (which == "subgroup")
    stream = std::make_unique<permsplit::SubgroupStream>(row.spec);
  else
    stream = std::make_unique<permsplit::TransversalStream>(row.spec);
  Permutation g = Permutation::identity(1);
  std::uint64_t emitted = 0;
  while (emitted < limit && stream->next(g)) {
    if (as_json)
      std::cout << nlohmann::json{{"perm", g.to_line()}}.dump() << '\n';
    else
      std::cout << g.to_line() << '\n';
    ++emitted;
  }
  return 0;
}

int cmd_table(int max_n, bool as_json) {
  double ratio_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const PlanRow row = best_plan(n, std::nullopt);
    ratio_sum += row.ratio;
    const double avg = ratio_sum / n;
    if (as_json) {
      nlohmann::json out{{"n", n},          {"k", row.spec.k},   {"l", row.spec.ell},
                         {"order", row.size_b.str()}, {"ratio", row.ratio}, {"avg", avg}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "n=" << n << " k=" << row.spec.k << " l=" << row.spec.ell
                << " order=" << row.size_b << " ratio=" << fmt6(row.ratio)
                << " avg=" << fmt6(avg) << '\n';
    }
  }
  return 0;
}

int cmd_gi(const std::string& path_m, const std::string& path_n, std::uint64_t budget_bytes,
           int threads, bool randomized, std::uint64_t samples, std::uint64_t seed,
           bool as_json) {
  const AdjacencyMatrix m = AdjacencyMatrix::load_file(path_m);
  const AdjacencyMatrix n = AdjacencyMatrix::load_file(path_n);
  permsplit::GraphIsoOptions options;
  options.budget_bytes = budget_bytes;
  options.threads = threads;
  if (randomized) {
    if (samples == 0)
      samples = static_cast<std::uint64_t>(
          std::ceil(std::sqrt(2.0 * static_cast<double>(permsplit::factorial(m.vertex_count())))));
    if (m.vertex_count() <= 20) {
      const auto full = static_cast<std::uint64_t>(permsplit::factorial(m.vertex_count()));
      samples = std::min(samples, full);
    }
    options.randomized = permsplit::RandomizedSearch{samples, seed};
  }
  const permsplit::GraphIsoResult result = permsplit::graph_iso(m, n, options);

  // timings and scan counters are not part of the deterministic stdout
  std::cerr << "stored=" << result.report.stored_count
            << " scanned=" << result.report.scanned_count
            << " seconds=" << result.report.wall_seconds << '\n';

  std::string outcome;
  int exit_code = 0;
  if (result.witness) {
    outcome = "found";
    exit_code = 0;
  } else if (result.conclusive) {
    outcome = "non_isomorphic";
    exit_code = 1;
  } else {
    outcome = "unknown_randomized";
    exit_code = 2;
  }

  if (as_json) {
    nlohmann::json out{{"outcome", outcome}, {"stored_count", result.report.stored_count}};
    if (result.witness) {
      out["witness"] = result.witness->to_line();
      out["verified"] = true;
    }
    std::cout << out.dump() << '\n';
  } else {
    if (result.witness)
      std::cout << result.witness->to_line() << '\n' << "VERIFIED" << '\n';
    else if (result.conclusive)
      std::cout << "non-isomorphic" << '\n';
    else
      std::cout << "unknown (randomized)" << '\n';
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitting-set planner and group-action collision solver for S_n"};
  app.require_subcommand(1);

  int n = 0;
  int max_n = 30;
  std::optional<double> target_log;
  std::string which;
  std::uint64_t limit = UINT64_MAX;
  std::uint64_t budget_bytes = std::uint64_t(256) << 20;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  int threads = 1;
  bool as_json = false;
  bool randomized = false;
  std::string path_m, path_n;

  CLI::App* plan = app.add_subcommand("plan", "choose the subgroup/transversal split for S_n");
  plan->add_option("--n", n, "degree")->required()->check(CLI::Range(1, 64));
  plan->add_option("--target-log", target_log, "log of the wanted subgroup order (default: log sqrt(n!))");
  plan->add_flag("--json", as_json, "machine-readable output");

  CLI::App* enumerate = app.add_subcommand("enum", "stream one side of the split, one permutation per line");
  enumerate->add_option("--n", n, "degree")->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--which", which, "subgroup | transversal")
      ->required()
      ->check(CLI::IsMember({"subgroup", "transversal"}));
  enumerate->add_option("--limit", limit, "stop after this many lines")->check(CLI::PositiveNumber);
  enumerate->add_option("--target-log", target_log, "log of the wanted subgroup order");
  enumerate->add_flag("--json", as_json, "machine-readable output");

  CLI::App* gi = app.add_subcommand("gi", "graph isomorphism via the collision solver");
  gi->add_option("graph_m", path_m, "first graph file")->required();
  gi->add_option("graph_n", path_n, "second graph file")->required();
  gi->add_option("--budget-bytes", budget_bytes, "memory budget for the stored side");
  gi->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
  gi->add_flag("--randomized", randomized, "search a random sample product instead of the deterministic split");
  gi->add_option("--samples", samples, "random samples per side (default ~ sqrt(2 n!))");
  gi->add_option("--seed", seed, "seed for the randomized search");
  gi->add_flag("--json", as_json, "machine-readable output");

  CLI::App* table = app.add_subcommand("table", "best split ratio per degree with running average");
  table->add_option("--max-n", max_n, "last degree")->check(CLI::Range(1, 64));
  table->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (plan->parsed()) return cmd_plan(n, target_log, as_json);
    if (enumerate->parsed()) return cmd_enum(n, which, limit, target_log, as_json);
    if (gi->parsed())
      return cmd_gi(path_m, path_n, budget_bytes, threads, randomized, samples, seed, as_json);
    if (table->parsed()) return cmd_table(max_n, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 64;
}
