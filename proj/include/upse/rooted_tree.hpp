#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "upse/digraph.hpp"

namespace upse {

/// l-subtrees hang on an arc into the root, h-subtrees on an arc out of it.
enum class SubtreeKind : std::uint8_t { Lower, Upper };

struct Subtree {
  Vertex root = 0;  ///< the root's neighbour r(T_i)
  SubtreeKind kind = SubtreeKind::Lower;
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// A directed tree hung from a root. Every vertex v also acts as the local
/// root of the part below it, and lower_size(v)/upper_size(v) are cached for
/// that local subtree.
class RootedTree {
 public:
  const Digraph& base() const { return base_; }
  Vertex root() const { return root_; }
  int size() const { return base_.size(); }

  /// One entry per neighbour of the root, ascending neighbour id.
  const std::vector<Subtree>& subtrees() const { return subtrees_; }

  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  int subtree_size(Vertex v) const { return subtree_size_[v]; }
  int lower_size(Vertex v) const { return lower_size_[v]; }
  int upper_size(Vertex v) const { return upper_size_[v]; }

  int lower_count() const { return lower_size_[root_]; }
  int upper_count() const { return upper_size_[root_]; }

  /// Kind of the local subtree at v relative to its parent (v != root).
  SubtreeKind kind(Vertex v) const {
    return base_.has_arc(v, parent_[v]) ? SubtreeKind::Lower : SubtreeKind::Upper;
  }

  /// Parents before children.
  const std::vector<Vertex>& preorder() const { return preorder_; }

 private:
  friend RootedTree subtree_decompose(const Digraph& g, Vertex r);

  Digraph base_;
  Vertex root_ = 0;
  std::vector<Subtree> subtrees_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> subtree_size_;
  std::vector<int> lower_size_;
  std::vector<int> upper_size_;
  std::vector<Vertex> preorder_;
};

/// Throws StructureError if g is not a directed tree, InputError for a bad root.
RootedTree subtree_decompose(const Digraph& g, Vertex r);

}  // namespace upse
