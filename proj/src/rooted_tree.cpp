#include "upse/rooted_tree.hpp"

#include <algorithm>
#include <string>

namespace upse {

RootedTree subtree_decompose(const Digraph& g, Vertex r) {
  if (!g.is_tree()) throw StructureError("graph is not a tree");
  if (r < 0 || r >= g.size()) throw InputError("root " + std::to_string(r) + " out of range");
  const int n = g.size();
  RootedTree t;
  t.base_ = g;
  t.root_ = r;
  t.parent_.assign(n, -1);
  t.children_.assign(n, {});
  t.preorder_.reserve(n);
  std::vector<Vertex> stack{r};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    t.preorder_.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (w == t.parent_[v]) continue;
      t.parent_[w] = v;
      t.children_[v].push_back(w);
    }
    const auto& ch = t.children_[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  t.subtree_size_.assign(n, 1);
  t.lower_size_.assign(n, 1);
  t.upper_size_.assign(n, 1);
  for (auto it = t.preorder_.rbegin(); it != t.preorder_.rend(); ++it) {
    const Vertex v = *it;
    for (Vertex c : t.children_[v]) {
      t.subtree_size_[v] += t.subtree_size_[c];
      (g.has_arc(c, v) ? t.lower_size_[v] : t.upper_size_[v]) += t.subtree_size_[c];
    }
  }
  for (Vertex c : t.children_[r]) {
    Subtree st;
    st.root = c;
    st.kind = t.kind(c);
    // Preorder lists each subtree contiguously, starting at its root.
    auto pos = std::find(t.preorder_.begin(), t.preorder_.end(), c);
    st.vertices.assign(pos, pos + t.subtree_size_[c]);
    t.subtrees_.push_back(std::move(st));
  }
  return t;
}

}  // namespace upse
