#include "upse/tree_upse.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

namespace upse {

namespace {

void collect_one_sided(const Digraph& g, Vertex v, Vertex from, std::vector<Vertex>& out) {
  for (Vertex x : g.neighbors(v))
    if (x != from && g.has_arc(x, v)) collect_one_sided(g, x, v, out);
  out.push_back(v);
  for (Vertex x : g.neighbors(v))
    if (x != from && g.has_arc(v, x)) collect_one_sided(g, x, v, out);
}

std::vector<SlotSpec> rooted_slots(const RootedTree& t) {
  std::vector<SlotSpec> slots;
  const auto& subs = t.subtrees();
  for (int i = 0; i < static_cast<int>(subs.size()); ++i) {
    slots.push_back({subs[i].size(), t.lower_size(subs[i].root) - 1, subs[i].kind, i});
  }
  sort_proper(slots);
  return slots;
}

Window whole_window(const ConvexPointSet& s) {
  return {s.points(Side::Left), s.points(Side::Right)};
}

void check_tree_input(const Digraph& t, const ConvexPointSet& s) {
  if (t.size() != s.size()) {
    throw InputError("tree has " + std::to_string(t.size()) + " vertices but point set has " +
                     std::to_string(s.size()) + " points");
  }
  if (t.size() > 0 && !t.is_tree()) throw StructureError("graph is not a tree");
}

std::vector<Vertex> bfs_parents(const Digraph& g, Vertex root) {
  std::vector<Vertex> parent(g.size(), -2);
  parent[root] = -1;
  std::vector<Vertex> queue{root};
  for (size_t h = 0; h < queue.size(); ++h) {
    for (Vertex x : g.neighbors(queue[h])) {
      if (parent[x] != -2) continue;
      parent[x] = queue[h];
      queue.push_back(x);
    }
  }
  return parent;
}

struct Entry {
  PointId point = 0;
  int prev_a = -1;
  int prev_index = -1;
  int take_left = 0;
};

struct Layer {
  int prefix = 0;                        // |T_{s,w_k}|
  std::vector<std::vector<Entry>> by_a;  // keyed by left points used; b = prefix - a
};

struct Piece {
  Vertex root = 0;
  int size = 1;
  std::vector<SlotSpec> slots;
};

class TreeEngine {
 public:
  TreeEngine(const Digraph& g, const ConvexPointSet& s, bool naive)
      : g_(g), s_(s), naive_(naive), edge_(g.size()) {
    const int n = g.size();
    auto parent = bfs_parents(g, 0);
    // Subtree sizes in the tree hung from vertex 0.
    std::vector<int> sub(n, 1);
    {
      std::vector<Vertex> queue{0};
      for (size_t h = 0; h < queue.size(); ++h)
        for (Vertex x : g.neighbors(queue[h]))
          if (parent[x] == queue[h]) queue.push_back(x);
      for (auto it = queue.rbegin(); it != queue.rend(); ++it)
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
    }
    // comp(u, x): size of the component of T - u containing neighbour x.
    auto comp = [&](Vertex u, Vertex x) { return parent[x] == u ? sub[x] : n - sub[u]; };
    std::vector<int> in_total(n, 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex x : g.in(u)) in_total[u] += comp(u, x);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex c : g.neighbors(u)) {
        const bool lower_kind = g.has_arc(c, u);
        const int lower = 1 + in_total[c] - (g.has_arc(u, c) ? comp(c, u) : 0);
        edge_[u].push_back({comp(u, c), lower - 1,
                            lower_kind ? SubtreeKind::Lower : SubtreeKind::Upper, c});
      }
    }
  }

  Piece piece(Vertex w, Vertex ex1, Vertex ex2 = -1) const {
    Piece p;
    p.root = w;
    for (const auto& sl : edge_[w]) {
      if (sl.id == ex1 || sl.id == ex2) continue;
      p.slots.push_back(sl);
      p.size += sl.size;
    }
    sort_proper(p.slots);
    return p;
  }

  Window window(int a0, int i, int b0, int j) const {
    return {s_.points(Side::Left).subspan(a0, i), s_.points(Side::Right).subspan(b0, j)};
  }

  Layer base(const Piece& p) {
    const int nl = s_.left_count();
    const int nr = s_.right_count();
    Layer out;
    out.prefix = p.size;
    out.by_a.assign(nl + 1, {});
    const Side bside = s_.side(s_.bottom());
    for (int a = 0; a <= std::min(p.size, nl); ++a) {
      const int b = p.size - a;
      if (b > nr) continue;
      const Window w = window(0, a, 0, b);
      bool ok;
      if (naive_) {
        const auto roots = dp_.reachable(p.slots, w);
        ok = !roots.empty() && roots.front() == s_.bottom();
      } else {
        ok = !w.side(bside).empty() && dp_.decide(p.slots, w, bside, 0);
      }
      if (ok) out.by_a[a].push_back({s_.bottom(), -1, -1, a});
    }
    return out;
  }

  // prev_below: the path arc points from w_{k-1} to w_k, so q must lie below p.
  Layer step(const Layer& prev, const Piece& p, bool prev_below) {
    const int nl = s_.left_count();
    const int nr = s_.right_count();
    Layer out;
    out.prefix = prev.prefix + p.size;
    out.by_a.assign(nl + 1, {});
    std::vector<char> seen(static_cast<size_t>(nl + 1) * s_.size(), 0);
    auto add = [&](int a, const Entry& e) {
      char& m = seen[static_cast<size_t>(a) * s_.size() + e.point];
      if (m) return;
      m = 1;
      out.by_a[a].push_back(e);
    };
    auto fits = [&](PointId q, PointId pt) { return prev_below ? q < pt : q > pt; };

    if (naive_) {
      for (int a0 = 0; a0 <= nl; ++a0) {
        for (int b0 = 0; b0 <= nr; ++b0) {
          const bool live = b0 == prev.prefix - a0;
          for (int i = 0; i <= p.size; ++i) {
            const int j = p.size - i;
            if (a0 + i > nl || b0 + j > nr) continue;
            const auto roots = dp_.reachable(p.slots, window(a0, i, b0, j));
            if (!live) continue;
            const auto& pred = prev.by_a[a0];
            for (PointId pt : roots) {
              for (int qi = 0; qi < static_cast<int>(pred.size()); ++qi) {
                if (!fits(pred[qi].point, pt)) continue;
                add(a0 + i, {pt, a0, qi, i});
                break;
              }
            }
          }
        }
      }
      return out;
    }

    for (int a0 = 0; a0 <= nl; ++a0) {
      const int b0 = prev.prefix - a0;
      if (b0 < 0 || b0 > nr) continue;
      const auto& pred = prev.by_a[a0];
      if (pred.empty()) continue;
      int best = 0;
      for (int qi = 1; qi < static_cast<int>(pred.size()); ++qi) {
        const bool better = prev_below ? pred[qi].point < pred[best].point
                                       : pred[qi].point > pred[best].point;
        if (better) best = qi;
      }
      const PointId q = pred[best].point;
      for (int i = 0; i <= p.size; ++i) {
        const int j = p.size - i;
        if (a0 + i > nl || b0 + j > nr) continue;
        for (PointId pt : dp_.reachable(p.slots, window(a0, i, b0, j)))
          if (fits(q, pt)) add(a0 + i, {pt, a0, best, i});
      }
    }
    return out;
  }

  int accepting_index(const Layer& last) const {
    const auto& top = last.by_a[s_.left_count()];
    for (int i = 0; i < static_cast<int>(top.size()); ++i)
      if (top[i].point == s_.top()) return i;
    return -1;
  }

  Embedding reconstruct(const std::vector<const Layer*>& layers, const std::vector<Piece>& pieces) {
    Embedding emb;
    emb.map.assign(g_.size(), -1);
    int a = s_.left_count();
    int idx = accepting_index(*layers.back());
    for (int k = static_cast<int>(layers.size()) - 1; k >= 0; --k) {
      const Entry& e = layers[k]->by_a[a][idx];
      const Piece& pc = pieces[k];
      const int a0 = k ? e.prev_a : 0;
      const int b0 = k ? layers[k - 1]->prefix - a0 : 0;
      const Window w = window(a0, e.take_left, b0, pc.size - e.take_left);
      const Side side = s_.side(e.point);
      const int index = s_.side_index(e.point) - (side == Side::Left ? a0 : b0);
      const auto placements = dp_.solve(pc.slots, w, side, index);
      if (!placements) throw std::logic_error("path DP backpointer does not reconstruct");
      emb.map[pc.root] = e.point;
      for (const auto& pl : *placements) {
        std::vector<Vertex> order;
        collect_one_sided(g_, pl.id, pc.root, order);
        const auto run = w.side(pl.side).subspan(pl.begin, order.size());
        for (size_t x = 0; x < order.size(); ++x) emb.map[order[x]] = run[x];
      }
      a = e.prev_a;
      idx = e.prev_index;
    }
    return emb;
  }

  const Digraph& graph() const { return g_; }

 private:
  const Digraph& g_;
  const ConvexPointSet& s_;
  bool naive_;
  std::vector<std::vector<SlotSpec>> edge_;
  RestrictedDp dp_;
};

std::vector<Vertex> path_between(const std::vector<Vertex>& parent, Vertex sink) {
  std::vector<Vertex> path;
  for (Vertex v = sink; v >= 0; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Runs the path DP for one (s, t) pair without sharing anything.
std::optional<Embedding> run_pair(TreeEngine& eng, const std::vector<Vertex>& path) {
  const Digraph& g = eng.graph();
  const int m = static_cast<int>(path.size());
  std::vector<Piece> pieces;
  std::vector<Layer> layers;
  layers.reserve(m);
  for (int k = 0; k < m; ++k) {
    const Vertex prev = k ? path[k - 1] : -1;
    const Vertex next = k + 1 < m ? path[k + 1] : -1;
    pieces.push_back(eng.piece(path[k], prev, next));
    if (k == 0) {
      layers.push_back(eng.base(pieces[0]));
    } else {
      layers.push_back(eng.step(layers.back(), pieces[k], g.has_arc(prev, path[k])));
    }
  }
  if (eng.accepting_index(layers.back()) < 0) return std::nullopt;
  std::vector<const Layer*> ptrs;
  for (const auto& l : layers) ptrs.push_back(&l);
  return eng.reconstruct(ptrs, pieces);
}

}  // namespace

ProperOrdering proper_ordering(const RootedTree& t) {
  ProperOrdering out;
  for (const auto& s : rooted_slots(t)) out.push_back(s.id);
  return out;
}

std::vector<Vertex> one_sided_order(const Digraph& g, Vertex v, Vertex from) {
  std::vector<Vertex> out;
  collect_one_sided(g, v, from, out);
  return out;
}

Embedding one_sided_embed(const RootedTree& t, const ConvexPointSet& s) {
  if (t.size() != s.size()) throw InputError("tree and point set sizes differ");
  if (!s.one_sided()) throw InputError("point set is not one-sided");
  Embedding emb;
  emb.map.assign(t.size(), -1);
  const auto order = one_sided_order(t.base(), t.root());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) emb.map[order[i]] = i;
  return emb;
}

std::optional<Embedding> restricted_upse_tree(const RootedTree& t, const ConvexPointSet& s,
                                              PointId p_r) {
  if (t.size() != s.size()) return std::nullopt;
  if (p_r < 0 || p_r >= s.size()) throw InputError("root point out of range");
  const auto slots = rooted_slots(t);
  RestrictedDp dp;
  const auto placements = dp.solve(slots, whole_window(s), s.side(p_r), s.side_index(p_r));
  if (!placements) return std::nullopt;
  Embedding emb;
  emb.map.assign(t.size(), -1);
  emb.map[t.root()] = p_r;
  for (const auto& pl : *placements) {
    const auto order = one_sided_order(t.base(), t.subtrees()[pl.id].root, t.root());
    const auto run = s.points(pl.side).subspan(pl.begin, order.size());
    for (size_t x = 0; x < order.size(); ++x) emb.map[order[x]] = run[x];
  }
  return emb;
}

std::vector<PointId> reachable_roots_tree(const RootedTree& t, const ConvexPointSet& s) {
  if (t.size() != s.size()) return {};
  RestrictedDp dp;
  return dp.reachable(rooted_slots(t), whole_window(s));
}

PathDecomposition path_decompose(const Digraph& t, Vertex s, Vertex sink) {
  if (!t.is_tree()) throw StructureError("graph is not a tree");
  if (s < 0 || s >= t.size() || !t.is_source(s)) throw InputError("s is not a source");
  if (sink < 0 || sink >= t.size() || !t.is_sink(sink)) throw InputError("t is not a sink");
  PathDecomposition out;
  out.path = path_between(bfs_parents(t, s), sink);
  const int m = static_cast<int>(out.path.size());
  for (int k = 0; k < m; ++k) {
    const Vertex w = out.path[k];
    const Vertex prev = k ? out.path[k - 1] : -1;
    const Vertex next = k + 1 < m ? out.path[k + 1] : -1;
    std::vector<Vertex> piece{w};
    for (Vertex x : t.neighbors(w)) {
      if (x == prev || x == next) continue;
      collect_one_sided(t, x, w, piece);
    }
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

std::optional<Embedding> tree_upse_fixed(const Digraph& t, const ConvexPointSet& s, Vertex source,
                                         Vertex sink, const TreeUpseOptions& opt) {
  check_tree_input(t, s);
  const int n = t.size();
  if (source < 0 || source >= n || !t.is_source(source)) throw InputError("s is not a source");
  if (sink < 0 || sink >= n || !t.is_sink(sink)) throw InputError("t is not a sink");
  if (n == 1) return Embedding{{0}};
  TreeEngine eng(t, s, opt.naive_dp);
  return run_pair(eng, path_between(bfs_parents(t, source), sink));
}

std::optional<UpseResult> tree_upse_all(const Digraph& t, const ConvexPointSet& s,
                                        const TreeUpseOptions& opt) {
  check_tree_input(t, s);
  const int n = t.size();
  if (n == 0) return UpseResult{-1, -1, {}, 1};
  if (n == 1) return UpseResult{0, 0, {{0}}, 1};
  TreeEngine eng(t, s, opt.naive_dp);
  std::optional<UpseResult> found;
  int yes = 0;
  const auto sinks = t.sinks();
  for (Vertex src : t.sources()) {
    const auto parent = bfs_parents(t, src);
    // y[c] holds the layer after the piece of parent(c), with c next on the path.
    std::vector<std::unique_ptr<Layer>> y(n);
    std::vector<Piece> y_piece(n);
    auto get_y = [&](auto&& self, Vertex c) -> const Layer& {
      if (!y[c]) {
        const Vertex v = parent[c];
        if (v == src) {
          y_piece[c] = eng.piece(src, c);
          y[c] = std::make_unique<Layer>(eng.base(y_piece[c]));
        } else {
          const Layer& prev = self(self, v);
          y_piece[c] = eng.piece(v, parent[v], c);
          y[c] = std::make_unique<Layer>(eng.step(prev, y_piece[c], t.has_arc(parent[v], v)));
        }
      }
      return *y[c];
    };
    for (Vertex snk : sinks) {
      const auto path = path_between(parent, snk);
      std::optional<Embedding> emb;
      if (opt.path_reuse) {
        const Layer& before = get_y(get_y, snk);
        Piece last = eng.piece(snk, parent[snk]);
        Layer fin = eng.step(before, last, t.has_arc(parent[snk], snk));
        if (eng.accepting_index(fin) >= 0 && !found) {
          std::vector<const Layer*> layers;
          std::vector<Piece> pieces;
          for (size_t k = 1; k < path.size(); ++k) {
            layers.push_back(y[path[k]].get());
            pieces.push_back(y_piece[path[k]]);
          }
          layers.push_back(&fin);
          pieces.push_back(std::move(last));
          emb = eng.reconstruct(layers, pieces);
        } else if (eng.accepting_index(fin) >= 0) {
          ++yes;
          continue;
        }
      } else {
        emb = run_pair(eng, path);
      }
      if (!emb) continue;
      ++yes;
      if (!found) found = UpseResult{src, snk, std::move(*emb), 0};
      if (!opt.exhaustive) {
        found->yes_pairs = yes;
        return found;
      }
    }
  }
  if (found) found->yes_pairs = yes;
  return found;
}

}  // namespace upse
