// upse: decide, embed, gen, oracle, bench.
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "upse/harness.hpp"
#include "upse/io.hpp"
#include "upse/oracle.hpp"
#include "upse/outerplanar.hpp"
#include "upse/tree_upse.hpp"

using namespace upse;

namespace {

enum Exit { kYes = 0, kNo = 1, kError = 2 };

struct RunConfig {
  std::string graph_path, points_path;
  int source = -1, sink = -1;
  bool naive_dp = false, no_path_reuse = false;
  std::string out_path, svg_path;
  // gen
  std::string kind = "tree";
  int n = 10;
  std::uint64_t seed = 0;
  double left_fraction = 0.5, bias = 0.5;
  std::string graph_out = "graph.json", points_out = "points.json";
  // oracle
  int max_n = 6, count = 200, outerplanar_max_n = 8;
  // bench
  std::vector<int> sizes{16, 24, 32, 48};
  int reps = 5;
  std::vector<std::string> variants{"optimized", "naive"};
  std::string csv_path;
};

TreeUpseOptions tree_options(const RunConfig& c) {
  TreeUpseOptions o;
  o.naive_dp = c.naive_dp;
  o.path_reuse = !c.no_path_reuse;
  return o;
}

struct Decision {
  std::optional<Embedding> embedding;
  Vertex source = -1, sink = -1;
  std::string reason;
};

Decision decide(const RunConfig& c, const Digraph& g, const ConvexPointSet& s) {
  if (g.size() != s.size()) throw InputError("graph has " + std::to_string(g.size()) +
                                             " vertices but the point set has " + std::to_string(s.size()));
  if ((c.source < 0) != (c.sink < 0)) throw InputError("--source and --sink go together");
  Decision d;
  if (c.source >= 0) {
    d.source = c.source;
    d.sink = c.sink;
    d.embedding = g.is_tree() ? tree_upse_fixed(g, s, c.source, c.sink, tree_options(c))
                              : outerplanar_upse_fixed(g, s, c.source, c.sink);
    if (!d.embedding) {
      const auto rep = structural_check(g);
      d.reason = rep.ok ? "pair admits no embedding" : rep.reason;
    }
    return d;
  }
  if (auto r = decide_any(g, s, tree_options(c), &d.reason)) {
    d.embedding = std::move(r->embedding);
    d.source = r->source;
    d.sink = r->sink;
  }
  return d;
}

int cmd_decide(const RunConfig& c, bool write) {
  const Digraph g = parse_graph(read_file(c.graph_path));
  const ConvexPointSet s = parse_points(read_file(c.points_path));
  const auto t0 = std::chrono::steady_clock::now();
  const Decision d = decide(c, g, s);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!d.embedding) {
    std::cout << "NO";
    if (!d.reason.empty()) std::cout << " (" << d.reason << ")";
    std::cout << "\ntime_ms " << ms << "\n";
    return kNo;
  }
  std::cout << "YES source " << d.source << " sink " << d.sink << "\ntime_ms " << ms << "\n";
  if (write) {
    const auto report = validate_upse(g, s, *d.embedding);
    if (!report.ok()) throw std::logic_error("constructed embedding failed validation");
    if (!c.out_path.empty()) write_file(c.out_path, format_embedding(*d.embedding));
    if (!c.svg_path.empty()) write_file(c.svg_path, render_svg(g, s, *d.embedding));
  }
  return kYes;
}

int cmd_gen(const RunConfig& c) {
  InstanceSpec spec{parse_instance_kind(c.kind), c.n, c.seed, c.left_fraction, c.bias};
  const Instance inst = generate(spec);
  write_file(c.graph_out, format_graph(inst.graph));
  write_file(c.points_out, format_points(inst.points));
  std::cout << "wrote " << c.graph_out << " and " << c.points_out << "\n";
  return 0;
}

void print_report(const std::string& name, const DiffReport& r) {
  std::cout << name << ": " << r.instances << " instances, " << r.yes << " yes, " << r.disagreements
            << " disagreements, " << r.invalid_witnesses << " invalid witnesses\n";
}

int cmd_oracle(const RunConfig& c) {
  if (c.max_n > oracle_max_n() || c.outerplanar_max_n > oracle_max_n())
    throw InputError("bounds exceed the oracle limit " + std::to_string(oracle_max_n()) +
                     " (set UPSE_ORACLE_MAX_N to raise it)");
  DiffReport all;
  for (int n = 1; n <= c.max_n; ++n) {
    const auto r = diff_exhaustive_trees(n);
    print_report("trees n=" + std::to_string(n), r);
    all.merge(r);
  }
  if (c.count > 0 && c.outerplanar_max_n > 0) {
    const auto r = diff_random_outerplanar(c.count, c.outerplanar_max_n, c.seed);
    print_report("outerplanar n<=" + std::to_string(c.outerplanar_max_n), r);
    all.merge(r);
  }
  print_report("total", all);
  if (all.minimal) {
    std::cout << "minimal disagreement: algorithm " << (all.minimal->algorithm ? "YES" : "NO")
              << ", oracle " << (all.minimal->oracle ? "YES" : "NO") << "\n"
              << format_graph(all.minimal->graph) << format_points(all.minimal->points);
  }
  return all.ok() ? 0 : 1;
}

int cmd_bench(const RunConfig& c) {
  const auto rows = run_bench(c.sizes, c.reps, c.seed, c.variants);
  std::ostringstream csv;
  csv << "size,variant,median_ms\n";
  for (const auto& r : rows) csv << r.size << ',' << r.variant << ',' << r.median_ms << '\n';
  std::ostream& summary = c.csv_path.empty() ? std::cerr : std::cout;
  if (c.csv_path.empty()) std::cout << csv.str();
  else write_file(c.csv_path, csv.str());
  if (c.sizes.size() < 2) return 0;
  for (const auto& v : c.variants) {
    std::vector<double> x, y;
    for (const auto& r : rows) {
      if (r.variant != v) continue;
      x.push_back(r.size);
      y.push_back(r.median_ms);
    }
    summary << "slope " << v << " " << loglog_slope(x, y) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upward point-set embeddings of trees and outerplanar DAGs into convex point sets"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("graph", c.graph_path, "graph JSON")->required();
    sub->add_option("points", c.points_path, "point-set JSON")->required();
    sub->add_option("--source", c.source, "fix the vertex on the lowest point");
    sub->add_option("--sink", c.sink, "fix the vertex on the highest point");
    sub->add_flag("--naive-dp", c.naive_dp, "tree DP without pruning");
    sub->add_flag("--no-path-reuse", c.no_path_reuse, "recompute every source/sink pair");
  };
  auto* decide_cmd = app.add_subcommand("decide", "decide whether an embedding exists");
  add_instance(decide_cmd);
  auto* embed_cmd = app.add_subcommand("embed", "construct an embedding and render it");
  add_instance(embed_cmd);
  embed_cmd->add_option("--out", c.out_path, "embedding JSON to write");
  embed_cmd->add_option("--svg", c.svg_path, "SVG drawing to write");

  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--kind", c.kind, "tree, caterpillar, outerplanar-dag or path");
  gen_cmd->add_option("--n", c.n, "vertex count");
  gen_cmd->add_option("--seed", c.seed);
  gen_cmd->add_option("--left-fraction", c.left_fraction, "probability of an L tag");
  gen_cmd->add_option("--bias", c.bias, "orientation bias for tree kinds");
  gen_cmd->add_option("--graph-out", c.graph_out);
  gen_cmd->add_option("--points-out", c.points_out);

  auto* oracle_cmd = app.add_subcommand("oracle", "differential test against brute force");
  oracle_cmd->add_option("--max-n", c.max_n, "exhaustive trees up to this size");
  oracle_cmd->add_option("--count", c.count, "random outerplanar instances");
  oracle_cmd->add_option("--outerplanar-max-n", c.outerplanar_max_n);
  oracle_cmd->add_option("--seed", c.seed);

  auto* bench_cmd = app.add_subcommand("bench", "time tree_upse_all across sizes");
  bench_cmd->add_option("--sizes", c.sizes)->delimiter(',');
  bench_cmd->add_option("--reps", c.reps);
  bench_cmd->add_option("--seed", c.seed);
  bench_cmd->add_option("--variants", c.variants, "optimized, naive, naive-dp")->delimiter(',');
  bench_cmd->add_option("--csv", c.csv_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }
  try {
    if (*decide_cmd) return cmd_decide(c, false);
    if (*embed_cmd) return cmd_decide(c, true);
    if (*gen_cmd) return cmd_gen(c);
    if (*oracle_cmd) return cmd_oracle(c);
    if (*bench_cmd) return cmd_bench(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
