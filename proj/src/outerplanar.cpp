#include "upse/outerplanar.hpp"

#include <algorithm>
#include <stdexcept>

#include "upse/restricted_dp.hpp"

namespace upse {

namespace {

Window make_window(Side x, std::span<const PointId> on_x, std::span<const PointId> on_y) {
  return x == Side::Left ? Window{on_x, on_y} : Window{on_y, on_x};
}

// Everything hanging from a root r, minus some excluded blocks at r.
struct RootedPart {
  bool feasible = true;
  int size = 1;
  std::vector<SlotSpec> slots;  // proper order; id indexes chains
  std::vector<std::vector<Vertex>> chains;
  std::vector<SlotSpec> lower_slots;
  std::vector<SlotSpec> upper_slots;
  int lower_total = 0;
  // The side subgraph, if r is a side vertex of one of the blocks.
  bool has_side = false;
  std::vector<Vertex> side_chain;
  std::vector<std::pair<int, bool>> side_arcs;  // (index in side_chain, r is the tail)
};

using Assignment = std::vector<std::pair<Vertex, PointId>>;

class OuterplanarEngine {
 public:
  OuterplanarEngine(const Digraph& g, BlockDecomposition dec, std::vector<BlockShape> shapes)
      : g_(g), dec_(std::move(dec)), shapes_(std::move(shapes)) {}

  const BlockDecomposition& decomposition() const { return dec_; }
  const BlockShape& shape(int b) const { return shapes_[b]; }

  // Components of G - x that avoid block `from`, laid out on one side: lo
  // below x, up above x, both bottom to top.
  bool hang(Vertex x, int from, std::vector<Vertex>& lo, std::vector<Vertex>& up) const {
    for (int b : dec_.blocks_at[x]) {
      if (b == from) continue;
      const BlockRole role = shapes_[b].role(x);
      if (role == BlockRole::Side) return false;
      int anchor;
      if (!block_chain(b, x, role == BlockRole::Source ? up : lo, anchor)) return false;
    }
    return true;
  }

  // Block b seen from its switch x, with everything hanging beyond it,
  // appended bottom to top. anchor = position of x's nearest neighbour.
  bool block_chain(int b, Vertex x, std::vector<Vertex>& out, int& anchor) const {
    const BlockShape& sh = shapes_[b];
    const Block& blk = dec_.blocks[b];
    const bool above = sh.source == x;
    if (!above && sh.sink != x) return false;
    std::vector<Vertex> seq;
    if (blk.trivial()) {
      seq.push_back(blk.cycle[0] == x ? blk.cycle[1] : blk.cycle[0]);
    } else {
      if (!sh.left.empty() && !sh.right.empty()) return false;
      const auto& side = sh.left.empty() ? sh.right : sh.left;
      if (above) {
        seq = side;
        seq.push_back(sh.sink);
      } else {
        seq.push_back(sh.source);
        seq.insert(seq.end(), side.begin(), side.end());
      }
    }
    const Vertex near = above ? seq.front() : seq.back();
    for (Vertex y : seq) {
      std::vector<Vertex> lo, up;
      if (!hang(y, b, lo, up)) return false;
      out.insert(out.end(), lo.begin(), lo.end());
      if (y == near) anchor = static_cast<int>(out.size());
      out.push_back(y);
      out.insert(out.end(), up.begin(), up.end());
    }
    return true;
  }

  RootedPart rooted(Vertex r, int ex1 = -1, int ex2 = -1) const {
    RootedPart part;
    for (int b : dec_.blocks_at[r]) {
      if (b == ex1 || b == ex2) continue;
      const BlockShape& sh = shapes_[b];
      const BlockRole role = sh.role(r);
      if (role != BlockRole::Side) {
        std::vector<Vertex> chain;
        int anchor = 0;
        if (!block_chain(b, r, chain, anchor)) {
          part.feasible = false;
          return part;
        }
        const SlotSpec slot{static_cast<int>(chain.size()), anchor,
                            role == BlockRole::Source ? SubtreeKind::Upper : SubtreeKind::Lower,
                            static_cast<int>(part.chains.size())};
        part.size += slot.size;
        part.slots.push_back(slot);
        (slot.kind == SubtreeKind::Lower ? part.lower_slots : part.upper_slots).push_back(slot);
        if (slot.kind == SubtreeKind::Lower) part.lower_total += slot.size;
        part.chains.push_back(std::move(chain));
        continue;
      }
      if (part.has_side) {
        part.feasible = false;
        return part;
      }
      part.has_side = true;
      const std::vector<Vertex>* other = nullptr;
      if (sh.left.size() == 1 && sh.left[0] == r) other = &sh.right;
      if (sh.right.size() == 1 && sh.right[0] == r) other = &sh.left;
      if (!other) {
        part.feasible = false;
        return part;
      }
      std::vector<Vertex> seq{sh.source};
      seq.insert(seq.end(), other->begin(), other->end());
      seq.push_back(sh.sink);
      std::vector<int> at(g_.size(), -1);
      for (Vertex y : seq) {
        std::vector<Vertex> lo, up;
        if (!hang(y, b, lo, up)) {
          part.feasible = false;
          return part;
        }
        part.side_chain.insert(part.side_chain.end(), lo.begin(), lo.end());
        at[y] = static_cast<int>(part.side_chain.size());
        part.side_chain.push_back(y);
        part.side_chain.insert(part.side_chain.end(), up.begin(), up.end());
      }
      for (const Arc& a : dec_.blocks[b].arcs) {
        if (a.tail == r) part.side_arcs.emplace_back(at[a.head], true);
        if (a.head == r) part.side_arcs.emplace_back(at[a.tail], false);
      }
      part.size += static_cast<int>(part.side_chain.size());
    }
    sort_proper(part.slots);
    sort_proper(part.lower_slots);
    sort_proper(part.upper_slots);
    return part;
  }

  bool decide(const RootedPart& part, const Window& w, Side x, int px) {
    return place(part, w, x, px, nullptr);
  }

  std::optional<Assignment> solve(const RootedPart& part, const Window& w, Side x, int px) {
    Assignment out;
    if (!place(part, w, x, px, &out)) return std::nullopt;
    return out;
  }

  std::vector<PointId> reachable(const RootedPart& part, const Window& w) {
    std::vector<PointId> out;
    if (!part.feasible || w.size() != part.size) return out;
    for (Side x : {Side::Left, Side::Right}) {
      const auto pts = w.side(x);
      for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        if (decide(part, w, x, i)) out.push_back(pts[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void emit(const RootedPart& part, const std::vector<SlotPlacement>& placements, const Window& w,
            Assignment& out) const {
    for (const auto& pl : placements) {
      const auto& chain = part.chains[pl.id];
      const auto run = w.side(pl.side).subspan(pl.begin, chain.size());
      for (size_t i = 0; i < chain.size(); ++i) out.emplace_back(chain[i], run[i]);
    }
  }

  bool place(const RootedPart& part, const Window& w, Side x, int px, Assignment* out) {
    if (!part.feasible || w.size() != part.size) return false;
    if (px < 0 || px >= static_cast<int>(w.side(x).size())) return false;
    if (!part.has_side) {
      if (!out) return dp_.decide(part.slots, w, x, px);
      const auto pl = dp_.solve(part.slots, w, x, px);
      if (!pl) return false;
      emit(part, *pl, w, *out);
      return true;
    }
    const auto wx = w.side(x);
    const auto wy = w.side(opposite(x));
    const int xb = part.lower_total - px;
    const int gs = static_cast<int>(part.side_chain.size());
    if (xb < 0 || xb + gs > static_cast<int>(wy.size())) return false;
    const PointId p = wx[px];
    for (auto [idx, r_tail] : part.side_arcs) {
      const PointId q = wy[xb + idx];
      if (r_tail ? !(p < q) : !(q < p)) return false;
    }
    const Window lo = make_window(x, wx.subspan(0, px + 1), wy.subspan(0, xb));
    const Window hi = make_window(x, wx.subspan(px), wy.subspan(xb + gs));
    if (!out) {
      return dp_.decide(part.lower_slots, lo, x, px) && dp_.decide(part.upper_slots, hi, x, 0);
    }
    const auto pl_lo = dp_.solve(part.lower_slots, lo, x, px);
    if (!pl_lo) return false;
    const auto pl_hi = dp_.solve(part.upper_slots, hi, x, 0);
    if (!pl_hi) return false;
    emit(part, *pl_lo, lo, *out);
    emit(part, *pl_hi, hi, *out);
    const auto run = wy.subspan(xb, gs);
    for (int i = 0; i < gs; ++i) out->emplace_back(part.side_chain[i], run[i]);
    return true;
  }

  const Digraph& g_;
  BlockDecomposition dec_;
  std::vector<BlockShape> shapes_;
  RestrictedDp dp_;
};

// ---------------------------------------------------------------------------
// Path DP between s and t.

struct Component {
  int block = -1;
  bool feasible = true;
  std::vector<Vertex> sides[2];  // interior chains, ascending from the previous path vertex
};

struct Entry {
  PointId point = 0;
  int prev_a = -1;
  int prev_index = -1;
  int take_left = 0;
  int mirror = 0;
};

struct Layer {
  int prefix = 0;
  std::vector<std::vector<Entry>> by_a;
};

class PathSolver {
 public:
  PathSolver(const Digraph& g, OuterplanarEngine& eng, const ConvexPointSet& s)
      : g_(g), eng_(eng), s_(s), pos_(g.size(), -1) {}

  std::optional<Embedding> run(Vertex source, Vertex sink) {
    if (!find_path(source, sink)) return std::nullopt;
    const int m = static_cast<int>(path_.size());
    parts_.clear();
    comps_.assign(m, {});
    for (int k = 0; k < m; ++k) {
      const int before = k ? blocks_[k - 1] : -1;
      const int after = k + 1 < m ? blocks_[k] : -1;
      parts_.push_back(eng_.rooted(path_[k], before, after));
      if (!parts_.back().feasible) return std::nullopt;
      if (k) {
        comps_[k] = component(k);
        if (!comps_[k].feasible) return std::nullopt;
      }
    }
    layers_.clear();
    layers_.push_back(base());
    for (int k = 1; k < m; ++k) {
      layers_.push_back(step(k));
      bool any = false;
      for (const auto& l : layers_.back().by_a) any = any || !l.empty();
      if (!any) return std::nullopt;
    }
    const auto& top = layers_.back().by_a[s_.left_count()];
    for (int i = 0; i < static_cast<int>(top.size()); ++i)
      if (top[i].point == s_.top()) return reconstruct(i);
    return std::nullopt;
  }

 private:
  // Vertex/block path through the block-vertex tree.
  bool find_path(Vertex source, Vertex sink) {
    const auto& dec = eng_.decomposition();
    const int n = g_.size();
    const int nodes = n + static_cast<int>(dec.blocks.size());
    std::vector<int> parent(nodes, -2);
    parent[source] = -1;
    std::vector<int> queue{source};
    for (size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      std::vector<int> next;
      if (u < n) {
        for (int b : dec.blocks_at[u]) next.push_back(n + b);
      } else {
        next = dec.blocks[u - n].cycle;
      }
      for (int x : next) {
        if (parent[x] != -2) continue;
        parent[x] = u;
        queue.push_back(x);
      }
    }
    if (parent[sink] == -2) return false;
    path_.clear();
    blocks_.clear();
    for (int x = sink; x >= 0; x = parent[x]) (x < n ? path_ : blocks_).push_back(x < n ? x : x - n);
    std::reverse(path_.begin(), path_.end());
    std::reverse(blocks_.begin(), blocks_.end());
    return true;
  }

  // Interior of the block between path_[k-1] and path_[k].
  Component component(int k) {
    Component c;
    c.block = blocks_[k - 1];
    const Block& blk = eng_.decomposition().blocks[c.block];
    if (blk.trivial()) return c;
    const int size = blk.size();
    const Vertex from = path_[k - 1], to = path_[k];
    const int start = static_cast<int>(std::find(blk.cycle.begin(), blk.cycle.end(), from) - blk.cycle.begin());
    for (int d = 0; d < 2; ++d) {
      const int step = d == 0 ? 1 : size - 1;
      for (int i = (start + step) % size; blk.cycle[i] != to; i = (i + step) % size) {
        const Vertex y = blk.cycle[i];
        std::vector<Vertex> lo, up;
        if (!eng_.hang(y, c.block, lo, up)) {
          c.feasible = false;
          return c;
        }
        auto& side = c.sides[d];
        side.insert(side.end(), lo.begin(), lo.end());
        side.push_back(y);
        side.insert(side.end(), up.begin(), up.end());
      }
    }
    return c;
  }

  Window window(int a0, int i, int b0, int j) const {
    return {s_.points(Side::Left).subspan(a0, i), s_.points(Side::Right).subspan(b0, j)};
  }

  Layer base() {
    const int nl = s_.left_count(), nr = s_.right_count();
    Layer out;
    out.prefix = parts_[0].size;
    out.by_a.assign(nl + 1, {});
    const Side bside = s_.side(s_.bottom());
    for (int a = 0; a <= std::min(out.prefix, nl); ++a) {
      const int b = out.prefix - a;
      if (b > nr) continue;
      const Window w = window(0, a, 0, b);
      if (!w.side(bside).empty() && eng_.decide(parts_[0], w, bside, 0))
        out.by_a[a].push_back({s_.bottom(), -1, -1, a, 0});
    }
    return out;
  }

  // Places the interior of component k for prefix (a0, b0) and mirror mu into pos_.
  bool place_interior(const Component& c, int a0, int b0, int mu) {
    const auto& on_left = c.sides[mu];
    const auto& on_right = c.sides[1 - mu];
    if (a0 + static_cast<int>(on_left.size()) > s_.left_count() ||
        b0 + static_cast<int>(on_right.size()) > s_.right_count()) {
      return false;
    }
    for (size_t i = 0; i < on_left.size(); ++i) pos_[on_left[i]] = s_.point(Side::Left, a0 + i);
    for (size_t i = 0; i < on_right.size(); ++i) pos_[on_right[i]] = s_.point(Side::Right, b0 + i);
    return true;
  }

  void clear_interior(const Component& c) {
    for (const auto& side : c.sides)
      for (Vertex v : side) pos_[v] = -1;
  }

  Layer step(int k) {
    const Layer& prev = layers_[k - 1];
    const Component& c = comps_[k];
    const RootedPart& part = parts_[k];
    const Vertex from = path_[k - 1], to = path_[k];
    const auto& arcs = eng_.decomposition().blocks[c.block].arcs;
    const int nl = s_.left_count(), nr = s_.right_count();
    const int interior = static_cast<int>(c.sides[0].size() + c.sides[1].size());
    Layer out;
    out.prefix = prev.prefix + interior + part.size;
    out.by_a.assign(nl + 1, {});
    std::vector<char> seen(static_cast<size_t>(nl + 1) * s_.size(), 0);
    const int mirrors = c.sides[0].empty() && c.sides[1].empty() ? 1 : 2;

    for (int a0 = 0; a0 <= nl; ++a0) {
      const int b0 = prev.prefix - a0;
      if (b0 < 0 || b0 > nr || prev.by_a[a0].empty()) continue;
      const auto& pred = prev.by_a[a0];
      for (int mu = 0; mu < mirrors; ++mu) {
        if (!place_interior(c, a0, b0, mu)) continue;
        const int la = a0 + static_cast<int>(c.sides[mu].size());
        const int rb = b0 + static_cast<int>(c.sides[1 - mu].size());
        bool ok = true;
        for (const Arc& e : arcs) {
          if (pos_[e.tail] >= 0 && pos_[e.head] >= 0 && pos_[e.tail] > pos_[e.head]) ok = false;
        }
        for (int i = 0; ok && i <= part.size; ++i) {
          const int j = part.size - i;
          if (la + i > nl || rb + j > nr) continue;
          for (PointId p : eng_.reachable(part, window(la, i, rb, j))) {
            // Bounds on q from arcs at `from`; everything else is fixed.
            PointId q_lo = -1, q_hi = s_.size();
            bool fits = true;
            for (const Arc& e : arcs) {
              const PointId pt = e.tail == to ? p : pos_[e.tail];
              const PointId ph = e.head == to ? p : pos_[e.head];
              if (e.tail == from) q_hi = std::min(q_hi, ph);
              else if (e.head == from) q_lo = std::max(q_lo, pt);
              else if (pt > ph) fits = false;
            }
            if (!fits) continue;
            int qi = -1;
            for (int x = 0; x < static_cast<int>(pred.size()) && qi < 0; ++x)
              if (pred[x].point > q_lo && pred[x].point < q_hi) qi = x;
            if (qi < 0) continue;
            char& mark = seen[static_cast<size_t>(la + i) * s_.size() + p];
            if (mark) continue;
            mark = 1;
            out.by_a[la + i].push_back({p, a0, qi, i, mu});
          }
        }
        clear_interior(c);
      }
    }
    return out;
  }

  Embedding reconstruct(int idx) {
    Embedding emb;
    emb.map.assign(g_.size(), -1);
    int a = s_.left_count();
    for (int k = static_cast<int>(layers_.size()) - 1; k >= 0; --k) {
      const Entry& e = layers_[k].by_a[a][idx];
      int la = 0, rb = 0;
      if (k) {
        const int a0 = e.prev_a;
        const int b0 = layers_[k - 1].prefix - a0;
        const Component& c = comps_[k];
        if (!place_interior(c, a0, b0, e.mirror)) throw std::logic_error("bad interior backpointer");
        for (const auto& side : c.sides)
          for (Vertex v : side) emb.map[v] = pos_[v];
        clear_interior(c);
        la = a0 + static_cast<int>(c.sides[e.mirror].size());
        rb = b0 + static_cast<int>(c.sides[1 - e.mirror].size());
      }
      const Window w = window(la, e.take_left, rb, parts_[k].size - e.take_left);
      const Side side = s_.side(e.point);
      const int index = s_.side_index(e.point) - (side == Side::Left ? la : rb);
      const auto assigned = eng_.solve(parts_[k], w, side, index);
      if (!assigned) throw std::logic_error("outerplanar backpointer does not reconstruct");
      emb.map[path_[k]] = e.point;
      for (auto [v, p] : *assigned) emb.map[v] = p;
      a = e.prev_a;
      idx = e.prev_index;
    }
    return emb;
  }

  const Digraph& g_;
  OuterplanarEngine& eng_;
  const ConvexPointSet& s_;
  std::vector<Vertex> path_;
  std::vector<int> blocks_;  // blocks_[k] joins path_[k] and path_[k + 1]
  std::vector<RootedPart> parts_;
  std::vector<Component> comps_;
  std::vector<Layer> layers_;
  std::vector<PointId> pos_;
};

// Decomposition for the single-graph operations; rejects irregular blocks.
OuterplanarEngine checked_engine(const Digraph& g) {
  if (!g.is_acyclic() || (g.size() > 0 && !g.is_connected())) {
    throw StructureError("graph is not a connected DAG");
  }
  auto dec = block_decompose(g);
  if (!dec.outerplanar) throw StructureError("graph is not outerplanar");
  std::vector<BlockShape> shapes;
  for (const Block& b : dec.blocks) {
    shapes.push_back(block_shape(b));
    if (!shapes.back().regular) throw StructureError("block is not regular");
  }
  return OuterplanarEngine(g, std::move(dec), std::move(shapes));
}

bool two_sided(const Block& b, const BlockShape& sh) {
  return !b.trivial() && !sh.left.empty() && !sh.right.empty();
}

void check_restricted_input(const OuterplanarEngine& eng, Vertex r) {
  const auto& dec = eng.decomposition();
  int count = 0;
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
    if (!two_sided(dec.blocks[b], eng.shape(b))) continue;
    ++count;
    const auto& sh = eng.shape(b);
    const bool single = (sh.left.size() == 1 && sh.left[0] == r) ||
                        (sh.right.size() == 1 && sh.right[0] == r);
    if (!single) throw StructureError("root is not the single side vertex of a two-sided block");
  }
  if (count > 1) throw StructureError("more than one two-sided block");
}

}  // namespace

bool one_side_embeddable(const Digraph& f, Vertex r) {
  if (r < 0 || r >= f.size()) throw InputError("root out of range");
  if (!f.is_source(r) && !f.is_sink(r)) throw InputError("root is neither a source nor a sink");
  auto eng = checked_engine(f);
  const auto& dec = eng.decomposition();
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b)
    if (two_sided(dec.blocks[b], eng.shape(b))) throw StructureError("two-sided block present");
  if (f.size() == 1) return true;
  for (Vertex c : dec.cut_vertices) {
    int side_of = 0;
    for (int b : dec.blocks_at[c])
      if (eng.shape(b).role(c) == BlockRole::Side) ++side_of;
    if (side_of > 1) return false;
  }
  const auto aux = auxiliary_tree(f);
  for (int d : aux.in_degree)
    if (d > 1) return false;
  return aux.in_degree[aux.node_of_block[dec.blocks_at[r][0]]] == 0;
}

Embedding construct_one_sided(const Digraph& f, Vertex r, const ConvexPointSet& s) {
  if (f.size() != s.size()) throw InputError("graph and point set sizes differ");
  if (!s.one_sided()) throw InputError("point set is not one-sided");
  if (r < 0 || r >= f.size()) throw InputError("root out of range");
  if (!f.is_source(r) && !f.is_sink(r)) throw InputError("root is neither a source nor a sink");
  auto eng = checked_engine(f);
  std::vector<Vertex> lo, up;
  if (!eng.hang(r, -1, lo, up)) throw StructureError("graph is not one-side embeddable from root");
  lo.push_back(r);
  lo.insert(lo.end(), up.begin(), up.end());
  Embedding emb;
  emb.map.assign(f.size(), -1);
  for (int i = 0; i < static_cast<int>(lo.size()); ++i) emb.map[lo[i]] = i;
  return emb;
}

std::optional<UpwardSkeleton> upward_skeleton(const Digraph& g, Vertex r, SubtreeKind direction) {
  if (r < 0 || r >= g.size()) throw InputError("root out of range");
  auto eng = checked_engine(g);
  const auto& dec = eng.decomposition();
  std::vector<Arc> arcs;
  std::vector<int> sizes;
  int next = 1;
  for (int b : dec.blocks_at[r]) {
    const BlockRole role = eng.shape(b).role(r);
    if (role == BlockRole::Side) continue;
    if ((role == BlockRole::Source) != (direction == SubtreeKind::Upper)) continue;
    std::vector<Vertex> chain;
    int anchor = 0;
    if (!eng.block_chain(b, r, chain, anchor)) return std::nullopt;
    const int size = static_cast<int>(chain.size());
    // Path chain[0] -> ... -> chain[size-1] with r_i at the anchor.
    const int first = next;
    for (int i = 0; i + 1 < size; ++i) arcs.push_back({first + i, first + i + 1});
    const Vertex ri = first + anchor;
    arcs.push_back(direction == SubtreeKind::Upper ? Arc{0, ri} : Arc{ri, 0});
    next += size;
    sizes.push_back(size);
  }
  return UpwardSkeleton{subtree_decompose(Digraph(next, std::move(arcs)), 0), std::move(sizes)};
}

std::optional<Embedding> restricted_upse_outerplanar(const Digraph& g, Vertex r,
                                                     const ConvexPointSet& s, PointId p_r) {
  if (r < 0 || r >= g.size()) throw InputError("root out of range");
  if (p_r < 0 || p_r >= s.size()) throw InputError("root point out of range");
  auto eng = checked_engine(g);
  check_restricted_input(eng, r);
  if (g.size() != s.size()) return std::nullopt;
  const auto part = eng.rooted(r);
  const Window w{s.points(Side::Left), s.points(Side::Right)};
  const auto assigned = eng.solve(part, w, s.side(p_r), s.side_index(p_r));
  if (!assigned) return std::nullopt;
  Embedding emb;
  emb.map.assign(g.size(), -1);
  emb.map[r] = p_r;
  for (auto [v, p] : *assigned) emb.map[v] = p;
  return emb;
}

std::vector<PointId> reachable_roots_outerplanar(const Digraph& g, Vertex r,
                                                 const ConvexPointSet& s) {
  if (r < 0 || r >= g.size()) throw InputError("root out of range");
  auto eng = checked_engine(g);
  check_restricted_input(eng, r);
  if (g.size() != s.size()) return {};
  return eng.reachable(eng.rooted(r), {s.points(Side::Left), s.points(Side::Right)});
}

std::optional<Embedding> outerplanar_upse_fixed(const Digraph& g, const ConvexPointSet& s,
                                                Vertex source, Vertex sink) {
  if (g.size() != s.size()) throw InputError("graph and point set sizes differ");
  const int n = g.size();
  if (source < 0 || source >= n || !g.is_source(source)) throw InputError("s is not a source");
  if (sink < 0 || sink >= n || !g.is_sink(sink)) throw InputError("t is not a sink");
  auto rep = structural_check(g);
  if (!rep.ok) return std::nullopt;
  if (n == 1) return Embedding{{0}};
  OuterplanarEngine eng(g, std::move(rep.decomposition), std::move(rep.shapes));
  return PathSolver(g, eng, s).run(source, sink);
}

std::optional<UpseResult> outerplanar_upse_all(const Digraph& g, const ConvexPointSet& s,
                                               std::string* reason) {
  if (g.size() != s.size()) throw InputError("graph and point set sizes differ");
  const int n = g.size();
  if (n == 0) return UpseResult{-1, -1, {}, 1};
  auto rep = structural_check(g);
  if (!rep.ok) {
    if (reason) *reason = rep.reason;
    return std::nullopt;
  }
  if (n == 1) return UpseResult{0, 0, {{0}}, 1};
  OuterplanarEngine eng(g, std::move(rep.decomposition), std::move(rep.shapes));
  PathSolver solver(g, eng, s);
  for (Vertex src : g.sources()) {
    for (Vertex snk : g.sinks()) {
      if (auto emb = solver.run(src, snk)) return UpseResult{src, snk, std::move(*emb), 1};
    }
  }
  if (reason) *reason = "no source/sink pair admits an embedding";
  return std::nullopt;
}

}  // namespace upse
