#include "upse/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "upse/oracle.hpp"
#include "upse/outerplanar.hpp"

namespace upse {

std::optional<UpseResult> decide_any(const Digraph& g, const ConvexPointSet& s,
                                     const TreeUpseOptions& opt, std::string* reason) {
  if (g.size() != s.size()) throw InputError("graph and point set sizes differ");
  if (g.is_tree()) {
    auto r = tree_upse_all(g, s, opt);
    if (!r && reason) *reason = "no source/sink pair admits an embedding";
    return r;
  }
  return outerplanar_upse_all(g, s, reason);
}

void DiffReport::merge(const DiffReport& other) {
  instances += other.instances;
  yes += other.yes;
  disagreements += other.disagreements;
  invalid_witnesses += other.invalid_witnesses;
  if (other.minimal && (!minimal || other.minimal->graph.size() < minimal->graph.size()))
    minimal = other.minimal;
}

void diff_instance(const Digraph& g, const ConvexPointSet& s, DiffReport& rep,
                   const TreeUpseOptions& opt) {
  ++rep.instances;
  const auto got = decide_any(g, s, opt);
  const bool truth = brute_force_upse(g, s).has_value();
  if (got) {
    ++rep.yes;
    if (!validate_upse(g, s, got->embedding).ok()) ++rep.invalid_witnesses;
  }
  if (got.has_value() != truth) {
    ++rep.disagreements;
    if (!rep.minimal || g.size() < rep.minimal->graph.size())
      rep.minimal = Disagreement{g, s, got.has_value(), truth};
  }
}

DiffReport diff_exhaustive_trees(int n, const TreeUpseOptions& opt) {
  DiffReport rep;
  enumerate_instances(n, EnumMode::Dedup, [&](const Digraph& g, const ConvexPointSet& s) {
    diff_instance(g, s, rep, opt);
  });
  return rep;
}

DiffReport diff_random_outerplanar(int count, int max_n, std::uint64_t seed) {
  DiffReport rep;
  for (int i = 0; i < count; ++i) {
    InstanceSpec spec{InstanceKind::OuterplanarDag, 1 + i % max_n, seed + i};
    const auto inst = generate(spec);
    diff_instance(inst.graph, inst.points, rep);
  }
  return rep;
}

TreeUpseOptions bench_variant(const std::string& name) {
  TreeUpseOptions opt;
  opt.exhaustive = true;
  if (name == "optimized") return opt;
  opt.path_reuse = false;
  if (name == "naive") return opt;
  opt.naive_dp = true;
  if (name == "naive-dp") return opt;
  throw InputError("unknown bench variant '" + name + "'");
}

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int reps, std::uint64_t seed,
                                const std::vector<std::string>& variants) {
  if (reps < 1) throw InputError("reps must be positive");
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    std::vector<Instance> insts;
    for (int r = 0; r < reps; ++r)
      insts.push_back(generate({InstanceKind::Tree, n, seed + static_cast<std::uint64_t>(r) * 7919 + n}));
    for (const auto& name : variants) {
      const auto opt = bench_variant(name);
      std::vector<double> ms;
      for (const auto& inst : insts) {
        const auto t0 = std::chrono::steady_clock::now();
        tree_upse_all(inst.graph, inst.points, opt);
        const auto t1 = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      }
      std::sort(ms.begin(), ms.end());
      const size_t h = ms.size() / 2;
      const double median = ms.size() % 2 ? ms[h] : (ms[h - 1] + ms[h]) / 2;
      rows.push_back({n, name, median});
    }
  }
  return rows;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("slope needs two or more points");
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(std::max(y[i], 1e-9));
  }
  mx /= x.size();
  my /= y.size();
  double num = 0, den = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    num += dx * (std::log(std::max(y[i], 1e-9)) - my);
    den += dx * dx;
  }
  return num / den;
}

}  // namespace upse
