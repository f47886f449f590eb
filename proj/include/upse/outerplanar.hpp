#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upse/blocks.hpp"
#include "upse/point_set.hpp"
#include "upse/rooted_tree.hpp"
#include "upse/tree_upse.hpp"

namespace upse {

/// Whether F has an UPSE into every one-sided point set with r on the extreme
/// point (lowest for a source, highest for a sink), by the block conditions:
/// every block regular, every shared cut vertex a switch of at least one of
/// its blocks, auxiliary-tree in-degrees at most one, and r's node a root.
/// Throws StructureError if F has a two-sided or irregular block, InputError
/// if r is neither a source nor a sink.
bool one_side_embeddable(const Digraph& f, Vertex r);

/// One-sided layout with r on the extreme point. Throws InputError if S is
/// not one-sided or sizes differ, StructureError if no such layout exists.
Embedding construct_one_sided(const Digraph& f, Vertex r, const ConvexPointSet& s);

struct UpwardSkeleton {
  RootedTree tree;
  /// Size of each extremal subgraph (without r), in skeleton subtree order.
  std::vector<int> component_sizes;
};

/// Tree standing in for upper(G) (direction Upper) or lower(G) (Lower): one
/// path-shaped subtree per extremal subgraph, with r_i at the same offset as
/// r's nearest neighbour in the subgraph's one-sided layout. nullopt if some
/// extremal subgraph is not one-side embeddable.
std::optional<UpwardSkeleton> upward_skeleton(const Digraph& g, Vertex r, SubtreeKind direction);

/// Restricted UPSE with r on p_r and every component of G - r on consecutive
/// points of one side. Throws StructureError if G is not an outerplanar DAG
/// with regular blocks, has more than one two-sided block, or r is not the
/// single side vertex of a two-sided block's side.
std::optional<Embedding> restricted_upse_outerplanar(const Digraph& g, Vertex r,
                                                     const ConvexPointSet& s, PointId p_r);

std::vector<PointId> reachable_roots_outerplanar(const Digraph& g, Vertex r,
                                                 const ConvexPointSet& s);

/// Embedding with s on b(S) and t on t(S). nullopt when the graph fails
/// structural_check or no embedding exists. Throws InputError on size mismatch
/// or if s is not a source / t not a sink.
std::optional<Embedding> outerplanar_upse_fixed(const Digraph& g, const ConvexPointSet& s,
                                                Vertex source, Vertex sink);

/// Structural check, then every source/sink pair in ascending order. On NO,
/// *reason (if given) says why.
std::optional<UpseResult> outerplanar_upse_all(const Digraph& g, const ConvexPointSet& s,
                                               std::string* reason = nullptr);

}  // namespace upse
