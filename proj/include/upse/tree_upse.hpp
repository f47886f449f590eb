#pragma once

#include <optional>
#include <vector>

#include "upse/digraph.hpp"
#include "upse/point_set.hpp"
#include "upse/restricted_dp.hpp"
#include "upse/rooted_tree.hpp"

namespace upse {

/// Indices into RootedTree::subtrees(), in proper order.
using ProperOrdering = std::vector<int>;

ProperOrdering proper_ordering(const RootedTree& t);

/// Vertices of the part of g hanging from v (away from `from`, -1 for none),
/// listed bottom to top as they appear in a one-sided embedding.
std::vector<Vertex> one_sided_order(const Digraph& g, Vertex v, Vertex from = -1);

/// Throws InputError if S is not one-sided or sizes differ.
Embedding one_sided_embed(const RootedTree& t, const ConvexPointSet& s);

/// Restricted UPSE with the root pinned to p_r; nullopt on size mismatch or NO.
std::optional<Embedding> restricted_upse_tree(const RootedTree& t, const ConvexPointSet& s,
                                              PointId p_r);

/// Points that can host the root in a restricted UPSE, ascending.
std::vector<PointId> reachable_roots_tree(const RootedTree& t, const ConvexPointSet& s);

struct PathDecomposition {
  std::vector<Vertex> path;                ///< s = w_1, ..., w_m = t
  std::vector<std::vector<Vertex>> pieces;  ///< pieces[k] = vertices of T_{w_k}, w_k first
};

/// Throws InputError if s is not a source or t not a sink.
PathDecomposition path_decompose(const Digraph& t, Vertex s, Vertex sink);

struct TreeUpseOptions {
  bool naive_dp = false;     ///< eager windows over all (a, b), no pruning
  bool path_reuse = true;    ///< share path prefixes across sinks of one source
  bool exhaustive = false;   ///< tree_upse_all: evaluate every pair, no early exit
};

struct UpseResult {
  Vertex source = -1;
  Vertex sink = -1;
  Embedding embedding;
  int yes_pairs = 0;  ///< filled in exhaustive mode
};

/// Embedding with s on b(S) and t on t(S), if one exists. Throws InputError on
/// size mismatch or role violation, StructureError if T is not a tree.
std::optional<Embedding> tree_upse_fixed(const Digraph& t, const ConvexPointSet& s, Vertex source,
                                         Vertex sink, const TreeUpseOptions& opt = {});

/// Tries source/sink pairs in ascending order.
std::optional<UpseResult> tree_upse_all(const Digraph& t, const ConvexPointSet& s,
                                        const TreeUpseOptions& opt = {});

}  // namespace upse
