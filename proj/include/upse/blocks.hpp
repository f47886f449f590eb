#pragma once

#include <string>
#include <vector>

#include "upse/digraph.hpp"

namespace upse {

struct Block {
  /// Outer cycle in cyclic order; for a bridge just its two endpoints.
  std::vector<Vertex> cycle;
  std::vector<Arc> arcs;

  bool trivial() const { return cycle.size() == 2; }
  int size() const { return static_cast<int>(cycle.size()); }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;         ///< ascending
  std::vector<std::vector<int>> blocks_at;  ///< per vertex, ascending block ids
  /// False if some block has no Hamiltonian outer cycle (then `cycle` holds
  /// the block's vertices in ascending order).
  bool outerplanar = true;

  bool is_cut_vertex(Vertex v) const { return blocks_at[v].size() > 1; }
};

/// Blocks of the underlying undirected graph; isolated vertices get no block.
/// Block ids are ordered by their smallest vertex, then by size.
BlockDecomposition block_decompose(const Digraph& g);

enum class BlockRole { Source, Sink, Side };

struct BlockShape {
  Vertex source = -1;
  Vertex sink = -1;
  /// Vertices strictly between source and sink, walking the outer cycle
  /// forwards (left) and backwards (right) from the source.
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  /// One source, one sink, and both sides directed paths from source to sink.
  bool regular = false;

  bool one_sided() const { return regular && (left.empty() || right.empty()); }
  BlockRole role(Vertex v) const {
    return v == source ? BlockRole::Source : (v == sink ? BlockRole::Sink : BlockRole::Side);
  }
};

BlockShape block_shape(const Block& b);

struct StructuralReport {
  bool ok = false;
  std::string reason;
  BlockDecomposition decomposition;
  std::vector<BlockShape> shapes;
};

/// Rejects graphs that cannot have an UPSE into any convex point set: cyclic,
/// disconnected, not outerplanar, a block that is not regular, or a vertex that
/// is a side vertex of two blocks.
StructuralReport structural_check(const Digraph& g);

struct AuxiliaryTree {
  std::vector<int> node_of_block;
  int node_count = 0;
  struct Edge {
    int from = 0;
    int to = 0;
    Vertex cut_vertex = 0;
  };
  std::vector<Edge> edges;
  std::vector<int> in_degree;
};

/// Nodes group blocks glued at vertices that are a switch of both blocks; an
/// edge runs from the block where the shared vertex is a side vertex to the
/// block where it is a switch. Throws StructureError if a block is not regular.
AuxiliaryTree auxiliary_tree(const Digraph& f);

}  // namespace upse
