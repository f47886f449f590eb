#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace upse {

using Vertex = int;

/// Thrown for malformed graphs, point sets and embeddings.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation requires a structure the input does not have
/// (e.g. a tree decomposition of a graph that is not a tree).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple directed graph on vertices 0..n-1. Self-loops and parallel arcs (in
/// either orientation) are rejected at construction. Immutable afterwards.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n, std::vector<Arc> arcs = {});

  int size() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  /// Undirected neighbourhood, ascending vertex id.
  std::span<const Vertex> neighbors(Vertex v) const { return nbr_[v]; }

  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int degree(Vertex v) const { return in_degree(v) + out_degree(v); }

  bool is_source(Vertex v) const { return in_[v].empty(); }
  bool is_sink(Vertex v) const { return out_[v].empty(); }
  bool has_arc(Vertex tail, Vertex head) const;
  /// True if tail->head or head->tail is an arc.
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;

  bool is_acyclic() const;
  bool is_connected() const;
  /// Connected with exactly n-1 arcs (the empty graph is not a tree).
  bool is_tree() const;

  /// Same vertex set, every arc reversed.
  Digraph reversed() const;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::vector<Vertex>> nbr_;
};

}  // namespace upse
