#include "upse/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace upse {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  out_.assign(n, {});
  in_.assign(n, {});
  nbr_.assign(n, {});
  for (const Arc& a : arcs_) {
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.tail == a.head) {
      throw InputError("self-loop at vertex " + std::to_string(a.tail));
    }
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
    nbr_[a.tail].push_back(a.head);
    nbr_[a.head].push_back(a.tail);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
    auto& nb = nbr_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw InputError("parallel arcs at vertex " + std::to_string(v));
    }
  }
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex id " + std::to_string(v) + " out of range [0," +
                     std::to_string(n_) + ")");
  }
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  const auto& o = out_[tail];
  return std::binary_search(o.begin(), o.end(), head);
}

std::vector<Vertex> Digraph::sources() const {
  std::vector<Vertex> r;
  for (int v = 0; v < n_; ++v)
    if (is_source(v)) r.push_back(v);
  return r;
}

std::vector<Vertex> Digraph::sinks() const {
  std::vector<Vertex> r;
  for (int v = 0; v < n_; ++v)
    if (is_sink(v)) r.push_back(v);
  return r;
}

bool Digraph::is_acyclic() const {
  std::vector<int> indeg(n_);
  std::vector<Vertex> stack;
  for (int v = 0; v < n_; ++v) {
    indeg[v] = in_degree(v);
    if (indeg[v] == 0) stack.push_back(v);
  }
  int seen = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++seen;
    for (Vertex w : out_[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == n_;
}

bool Digraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : nbr_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

bool Digraph::is_tree() const {
  return n_ > 0 && arc_count() == n_ - 1 && is_connected();
}

Digraph Digraph::reversed() const {
  std::vector<Arc> r;
  r.reserve(arcs_.size());
  for (const Arc& a : arcs_) r.push_back({a.head, a.tail});
  return Digraph(n_, std::move(r));
}

}  // namespace upse
