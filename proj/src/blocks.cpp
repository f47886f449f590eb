#include "upse/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace upse {

namespace {

using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, std::size_t>>;
using UEdge = boost::graph_traits<UGraph>::edge_descriptor;

// Outer cycle of a biconnected block on local vertices 0..k-1, read off the
// rotation of an apex vertex joined to every block vertex. The block plus apex
// is 3-connected, so its planar embedding is unique.
std::optional<std::vector<int>> outer_cycle(int k, const std::vector<std::pair<int, int>>& edges) {
  UGraph h(k + 1);
  std::size_t idx = 0;
  std::set<std::pair<int, int>> adj;
  for (auto [u, v] : edges) {
    boost::add_edge(u, v, idx++, h);
    adj.insert({std::min(u, v), std::max(u, v)});
  }
  for (int v = 0; v < k; ++v) boost::add_edge(k, v, idx++, h);
  std::vector<std::vector<UEdge>> emb(k + 1);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = h, boost::boyer_myrvold_params::embedding = &emb[0]);
  if (!planar) return std::nullopt;
  std::vector<int> cycle;
  for (const UEdge& e : emb[k]) {
    const int a = static_cast<int>(boost::source(e, h));
    const int b = static_cast<int>(boost::target(e, h));
    cycle.push_back(a == k ? b : a);
  }
  if (static_cast<int>(cycle.size()) != k) return std::nullopt;
  for (int i = 0; i < k; ++i) {
    const int u = cycle[i], v = cycle[(i + 1) % k];
    if (!adj.count({std::min(u, v), std::max(u, v)})) return std::nullopt;
  }
  return cycle;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

BlockDecomposition block_decompose(const Digraph& g) {
  const int n = g.size();
  BlockDecomposition dec;
  dec.blocks_at.assign(n, {});
  const auto& arcs = g.arcs();
  if (arcs.empty()) return dec;

  UGraph u(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) boost::add_edge(arcs[i].tail, arcs[i].head, i, u);
  std::vector<std::size_t> comp(arcs.size());
  const std::size_t count = boost::biconnected_components(
      u, boost::make_iterator_property_map(comp.begin(), boost::get(boost::edge_index, u)));

  std::vector<std::vector<Arc>> block_arcs(count);
  boost::graph_traits<UGraph>::edge_iterator ei, ee;
  for (std::tie(ei, ee) = boost::edges(u); ei != ee; ++ei) {
    const std::size_t i = boost::get(boost::edge_index, u, *ei);
    block_arcs[comp[i]].push_back(arcs[i]);
  }
  std::vector<std::pair<std::vector<Vertex>, std::vector<Arc>>> raw;
  for (auto& ba : block_arcs) {
    std::vector<Vertex> vs;
    for (const Arc& a : ba) {
      vs.push_back(a.tail);
      vs.push_back(a.head);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(ba.begin(), ba.end(), [](const Arc& a, const Arc& b) {
      return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
    });
    raw.emplace_back(std::move(vs), std::move(ba));
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.first[0] != b.first[0]) return a.first[0] < b.first[0];
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  for (auto& [vs, ba] : raw) {
    Block b;
    b.arcs = std::move(ba);
    if (vs.size() == 2) {
      b.cycle = vs;
    } else {
      std::vector<int> local(n, -1);
      for (int i = 0; i < static_cast<int>(vs.size()); ++i) local[vs[i]] = i;
      std::vector<std::pair<int, int>> edges;
      for (const Arc& a : b.arcs) edges.emplace_back(local[a.tail], local[a.head]);
      const auto cyc = outer_cycle(static_cast<int>(vs.size()), edges);
      if (cyc) {
        for (int i : *cyc) b.cycle.push_back(vs[i]);
        // Fixed orientation: start at the smallest vertex, continue to its smaller cycle neighbour.
        auto it = std::min_element(b.cycle.begin(), b.cycle.end());
        std::rotate(b.cycle.begin(), it, b.cycle.end());
        if (b.cycle[1] > b.cycle.back()) std::reverse(b.cycle.begin() + 1, b.cycle.end());
      } else {
        dec.outerplanar = false;
        b.cycle = vs;
      }
    }
    const int id = static_cast<int>(dec.blocks.size());
    for (Vertex v : vs) dec.blocks_at[v].push_back(id);
    dec.blocks.push_back(std::move(b));
  }
  for (Vertex v = 0; v < n; ++v)
    if (dec.blocks_at[v].size() > 1) dec.cut_vertices.push_back(v);
  return dec;
}

BlockShape block_shape(const Block& b) {
  BlockShape s;
  if (b.trivial()) {
    s.source = b.arcs[0].tail;
    s.sink = b.arcs[0].head;
    s.regular = true;
    return s;
  }
  std::set<Vertex> has_in, has_out;
  std::set<std::pair<Vertex, Vertex>> arc_set;
  for (const Arc& a : b.arcs) {
    has_out.insert(a.tail);
    has_in.insert(a.head);
    arc_set.insert({a.tail, a.head});
  }
  std::vector<Vertex> sources, sinks;
  for (Vertex v : b.cycle) {
    if (!has_in.count(v)) sources.push_back(v);
    if (!has_out.count(v)) sinks.push_back(v);
  }
  if (sources.size() != 1 || sinks.size() != 1) return s;
  s.source = sources[0];
  s.sink = sinks[0];
  const int k = b.size();
  const int start = static_cast<int>(std::find(b.cycle.begin(), b.cycle.end(), s.source) - b.cycle.begin());
  for (int step : {1, k - 1}) {
    auto& side = step == 1 ? s.left : s.right;
    Vertex prev = s.source;
    for (int i = (start + step) % k;; i = (i + step) % k) {
      const Vertex v = b.cycle[i];
      if (!arc_set.count({prev, v})) return s;
      if (v == s.sink) break;
      side.push_back(v);
      prev = v;
    }
  }
  s.regular = true;
  return s;
}

StructuralReport structural_check(const Digraph& g) {
  StructuralReport rep;
  if (!g.is_acyclic()) {
    rep.reason = "graph has a directed cycle";
    return rep;
  }
  if (g.size() > 0 && !g.is_connected()) {
    rep.reason = "graph is disconnected";
    return rep;
  }
  rep.decomposition = block_decompose(g);
  const auto& dec = rep.decomposition;
  if (!dec.outerplanar) {
    rep.reason = "graph is not outerplanar";
    return rep;
  }
  for (const Block& b : dec.blocks) {
    rep.shapes.push_back(block_shape(b));
    if (!rep.shapes.back().regular) {
      std::string vs;
      for (Vertex v : b.cycle) vs += (vs.empty() ? "" : ",") + std::to_string(v);
      rep.reason = "block {" + vs + "} does not have one source, one sink and directed sides";
      return rep;
    }
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    int side_of = 0;
    for (int b : dec.blocks_at[v])
      if (rep.shapes[b].role(v) == BlockRole::Side) ++side_of;
    if (side_of > 1) {
      rep.reason = "vertex " + std::to_string(v) + " is a side vertex of two blocks";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

AuxiliaryTree auxiliary_tree(const Digraph& f) {
  const auto dec = block_decompose(f);
  const int nb = static_cast<int>(dec.blocks.size());
  std::vector<BlockShape> shapes;
  for (const Block& b : dec.blocks) {
    shapes.push_back(block_shape(b));
    if (!shapes.back().regular) throw StructureError("block is not regular");
  }
  std::vector<int> parent(nb);
  std::iota(parent.begin(), parent.end(), 0);
  for (Vertex c : dec.cut_vertices) {
    int first = -1;
    for (int b : dec.blocks_at[c]) {
      if (shapes[b].role(c) == BlockRole::Side) continue;
      if (first < 0) first = b;
      else parent[find(parent, b)] = find(parent, first);
    }
  }
  AuxiliaryTree t;
  t.node_of_block.assign(nb, -1);
  std::vector<int> id_of_root(nb, -1);
  for (int b = 0; b < nb; ++b) {
    const int r = find(parent, b);
    if (id_of_root[r] < 0) id_of_root[r] = t.node_count++;
    t.node_of_block[b] = id_of_root[r];
  }
  t.in_degree.assign(t.node_count, 0);
  for (Vertex c : dec.cut_vertices) {
    for (int side_block : dec.blocks_at[c]) {
      if (shapes[side_block].role(c) != BlockRole::Side) continue;
      std::set<int> targets;
      for (int b : dec.blocks_at[c])
        if (shapes[b].role(c) != BlockRole::Side) targets.insert(t.node_of_block[b]);
      for (int to : targets) {
        t.edges.push_back({t.node_of_block[side_block], to, c});
        t.in_degree[to]++;
      }
    }
  }
  return t;
}

}  // namespace upse
