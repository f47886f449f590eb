#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "upse/digraph.hpp"
#include "upse/point_set.hpp"

namespace upse {

/// Largest n the brute force accepts: UPSE_ORACLE_MAX_N, default 9.
int oracle_max_n();

struct OracleConstraints {
  /// pin[v] = required point of v, or -1. Empty means no pins.
  std::vector<PointId> pin;
  /// Each group must occupy consecutive points of a single side; no other
  /// point of that side may fall between its points.
  std::vector<std::vector<Vertex>> groups;
};

/// Exhaustive backtracking over points in ascending y. Throws InputError if
/// sizes differ or n exceeds `bound` (oracle_max_n() when bound < 0).
std::optional<Embedding> brute_force_upse(const Digraph& g, const ConvexPointSet& s,
                                          const OracleConstraints& c = {}, int bound = -1);

/// Restricted UPSE ground truth: r pinned to p_r, every component of G - r on
/// consecutive points of one side.
std::optional<Embedding> brute_force_restricted(const Digraph& g, Vertex r,
                                                const ConvexPointSet& s, PointId p_r,
                                                int bound = -1);

/// Prüfer decoding of all n^(n-2) labeled trees (undirected arc lists, tail < head).
void enumerate_labeled_trees(int n, const std::function<void(const std::vector<Arc>&)>& fn);

/// Directed trees on n vertices. Raw: every labeled tree with every orientation.
/// Dedup: one representative per isomorphism class of directed trees.
enum class EnumMode { Raw, Dedup };
void enumerate_directed_trees(int n, EnumMode mode, const std::function<void(const Digraph&)>& fn);

void enumerate_taggings(int n, const std::function<void(const ConvexPointSet&)>& fn);

/// Directed trees × taggings, deterministic order.
void enumerate_instances(int n, EnumMode mode,
                         const std::function<void(const Digraph&, const ConvexPointSet&)>& fn);

/// Canonical string of a directed tree, equal iff isomorphic.
std::string canonical_directed_tree(const Digraph& t);

enum class InstanceKind { Tree, Caterpillar, OuterplanarDag, Path };

InstanceKind parse_instance_kind(const std::string& name);
std::string instance_kind_name(InstanceKind k);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::Tree;
  int n = 1;
  std::uint64_t seed = 0;
  double left_fraction = 0.5;     ///< probability that a point is tagged L
  double orientation_bias = 0.5;  ///< tree kinds: probability an edge points away from the lower label
};

struct Instance {
  Digraph graph;
  ConvexPointSet points;
};

/// Deterministic in the spec. Throws InputError on bad parameters.
Instance generate(const InstanceSpec& spec);

}  // namespace upse
