#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "upse/digraph.hpp"
#include "upse/point_set.hpp"
#include "upse/tree_upse.hpp"

namespace upse {

/// Tree or outerplanar route, as the CLI does it.
std::optional<UpseResult> decide_any(const Digraph& g, const ConvexPointSet& s,
                                     const TreeUpseOptions& opt = {}, std::string* reason = nullptr);

struct Disagreement {
  Digraph graph;
  ConvexPointSet points;
  bool algorithm = false;
  bool oracle = false;
};

struct DiffReport {
  long instances = 0;
  long yes = 0;
  long disagreements = 0;
  long invalid_witnesses = 0;
  std::optional<Disagreement> minimal;  ///< fewest vertices, first found among equals

  bool ok() const { return disagreements == 0 && invalid_witnesses == 0; }
  void merge(const DiffReport& other);
};

/// Compares decide_any with brute_force_upse on one instance and records the outcome.
void diff_instance(const Digraph& g, const ConvexPointSet& s, DiffReport& rep,
                   const TreeUpseOptions& opt = {});

/// Every deduplicated directed tree with n vertices times every tagging.
DiffReport diff_exhaustive_trees(int n, const TreeUpseOptions& opt = {});

/// Seeded random outerplanar DAGs with 1 <= n <= max_n, random taggings.
DiffReport diff_random_outerplanar(int count, int max_n, std::uint64_t seed);

struct BenchRow {
  int size = 0;
  std::string variant;
  double median_ms = 0;
};

/// Variants: "optimized" (path reuse), "naive" (no reuse), "naive-dp" (no
/// reuse, eager windows). All run every source/sink pair.
TreeUpseOptions bench_variant(const std::string& name);

/// Median wall time of tree_upse_all over `reps` seeded random trees per size.
std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int reps, std::uint64_t seed,
                                const std::vector<std::string>& variants);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace upse
