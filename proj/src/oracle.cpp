#include "upse/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

namespace upse {

int oracle_max_n() {
  if (const char* env = std::getenv("UPSE_ORACLE_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 9;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Digraph& g, const ConvexPointSet& s, const OracleConstraints& c)
      : g_(g), s_(s), n_(g.size()), map_(n_, -1), ready_(n_, 0), group_of_(n_, -1),
        pinned_at_(n_, -1) {
    if (!c.pin.empty()) {
      if (static_cast<int>(c.pin.size()) != n_) throw InputError("pin list has wrong length");
      pin_ = c.pin;
      for (Vertex v = 0; v < n_; ++v) {
        if (pin_[v] < 0) continue;
        if (pin_[v] >= n_) throw InputError("pin outside the point set");
        if (pinned_at_[pin_[v]] >= 0) throw InputError("two vertices pinned to one point");
        pinned_at_[pin_[v]] = v;
      }
    } else {
      pin_.assign(n_, -1);
    }
    groups_.resize(c.groups.size());
    for (size_t gi = 0; gi < c.groups.size(); ++gi) {
      groups_[gi].size = static_cast<int>(c.groups[gi].size());
      for (Vertex v : c.groups[gi]) {
        if (v < 0 || v >= n_ || group_of_[v] >= 0) throw InputError("bad group constraint");
        group_of_[v] = static_cast<int>(gi);
      }
    }
  }

  std::optional<Embedding> run() {
    if (!place(0)) return std::nullopt;
    return Embedding{map_};
  }

 private:
  struct GroupState {
    int size = 0;
    int count = 0;
    Side side = Side::Left;
    int last_index = -1;
  };

  bool place(PointId k) {
    if (k == n_) return true;
    const Side side = s_.side(k);
    const int idx = s_.side_index(k);
    int open = -1;
    for (size_t gi = 0; gi < groups_.size(); ++gi) {
      const auto& gs = groups_[gi];
      if (gs.count > 0 && gs.count < gs.size && gs.side == side) open = static_cast<int>(gi);
    }
    const Vertex forced = pinned_at_[k];
    for (Vertex v = 0; v < n_; ++v) {
      if (map_[v] >= 0 || ready_[v] != g_.in_degree(v)) continue;
      if (forced >= 0 ? v != forced : pin_[v] >= 0) continue;
      const int gi = group_of_[v];
      if (open >= 0 && gi != open) continue;
      if (gi >= 0 && groups_[gi].count > 0 &&
          (groups_[gi].side != side || groups_[gi].last_index != idx - 1)) {
        continue;
      }
      if (!crossing_free(v, k)) continue;

      GroupState saved;
      if (gi >= 0) {
        saved = groups_[gi];
        groups_[gi].count++;
        groups_[gi].side = side;
        groups_[gi].last_index = idx;
      }
      map_[v] = k;
      for (Vertex w : g_.out(v)) ready_[w]++;
      for (Vertex u : g_.in(v)) drawn_.push_back({map_[u], k});
      if (place(k + 1)) return true;
      drawn_.resize(drawn_.size() - g_.in(v).size());
      for (Vertex w : g_.out(v)) ready_[w]--;
      map_[v] = -1;
      if (gi >= 0) groups_[gi] = saved;
    }
    return false;
  }

  bool crossing_free(Vertex v, PointId k) const {
    for (Vertex u : g_.in(v)) {
      const Chord c{map_[u], k};
      for (const Chord& d : drawn_)
        if (chords_cross(s_, c, d)) return false;
    }
    return true;
  }

  const Digraph& g_;
  const ConvexPointSet& s_;
  int n_;
  std::vector<PointId> map_;
  std::vector<int> ready_;
  std::vector<int> group_of_;
  std::vector<Vertex> pinned_at_;
  std::vector<PointId> pin_;
  std::vector<GroupState> groups_;
  std::vector<Chord> drawn_;
};

void check_oracle_size(const Digraph& g, const ConvexPointSet& s, int bound) {
  if (g.size() != s.size()) throw InputError("graph and point set sizes differ");
  const int limit = bound < 0 ? oracle_max_n() : bound;
  if (g.size() > limit) {
    throw InputError("instance has " + std::to_string(g.size()) +
                     " vertices, above the oracle bound " + std::to_string(limit));
  }
}

std::vector<Arc> prufer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int x : seq) degree[x]++;
  std::vector<Arc> arcs;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    arcs.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int u = *leaves.begin();
  const int v = *std::next(leaves.begin());
  arcs.push_back({u, v});
  return arcs;
}

std::string rooted_code(const Digraph& t, Vertex v, Vertex from) {
  std::vector<std::string> parts;
  for (Vertex x : t.neighbors(v)) {
    if (x == from) continue;
    parts.push_back((t.has_arc(x, v) ? "i" : "o") + rooted_code(t, x, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

ConvexPointSet random_tags(std::mt19937_64& rng, int n, double left_fraction) {
  std::bernoulli_distribution left(left_fraction);
  std::vector<Side> tags(n);
  for (auto& t : tags) t = left(rng) ? Side::Left : Side::Right;
  return ConvexPointSet(std::move(tags));
}

Digraph relabel(int n, const std::vector<Arc>& arcs, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Arc> out;
  for (const Arc& a : arcs) out.push_back({perm[a.tail], perm[a.head]});
  return Digraph(n, std::move(out));
}

std::vector<Arc> orient(const std::vector<std::pair<int, int>>& edges, double bias,
                        std::mt19937_64& rng) {
  std::bernoulli_distribution forward(bias);
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) arcs.push_back(forward(rng) ? Arc{u, v} : Arc{v, u});
  return arcs;
}

// One block on the given cycle (cyclic order), with random non-crossing chords,
// oriented with a single source and a single sink whose two sides are directed paths.
void add_block(const std::vector<Vertex>& cycle, std::mt19937_64& rng, std::vector<Arc>& arcs) {
  const int k = static_cast<int>(cycle.size());
  std::uniform_int_distribution<int> pick(0, k - 1);
  const int sp = pick(rng);
  int tp = pick(rng);
  while (tp == sp) tp = pick(rng);
  // Positions along the two sides from sp to tp.
  std::vector<int> side_a, side_b;
  for (int i = (sp + 1) % k; i != tp; i = (i + 1) % k) side_a.push_back(i);
  for (int i = (sp + k - 1) % k; i != tp; i = (i + k - 1) % k) side_b.push_back(i);
  // Random merge of the sides gives a topological order.
  std::vector<int> rank(k, 0);
  int next = 0;
  rank[sp] = next++;
  size_t ia = 0, ib = 0;
  while (ia < side_a.size() || ib < side_b.size()) {
    const bool take_a = ib == side_b.size() || (ia < side_a.size() && (rng() & 1));
    rank[take_a ? side_a[ia++] : side_b[ib++]] = next++;
  }
  rank[tp] = next;
  auto add = [&](int i, int j) {
    arcs.push_back(rank[i] < rank[j] ? Arc{cycle[i], cycle[j]} : Arc{cycle[j], cycle[i]});
  };
  for (int i = 0; i < k; ++i) add(i, (i + 1) % k);
  // Non-crossing chords: recursively split polygon ranges.
  std::vector<std::vector<int>> work{std::vector<int>(k)};
  std::iota(work[0].begin(), work[0].end(), 0);
  std::bernoulli_distribution want_chord(0.5);
  while (!work.empty()) {
    auto poly = std::move(work.back());
    work.pop_back();
    const int m = static_cast<int>(poly.size());
    if (m < 4 || !want_chord(rng)) continue;
    std::uniform_int_distribution<int> pos(0, m - 1);
    const int a = pos(rng);
    int b = pos(rng);
    const int gap = (b - a + m) % m;
    if (gap < 2 || gap > m - 2) continue;
    add(poly[a], poly[b]);
    std::vector<int> p1, p2;
    for (int i = a;; i = (i + 1) % m) {
      p1.push_back(poly[i]);
      if (i == b) break;
    }
    for (int i = b;; i = (i + 1) % m) {
      p2.push_back(poly[i]);
      if (i == a) break;
    }
    work.push_back(std::move(p1));
    work.push_back(std::move(p2));
  }
}

}  // namespace

std::optional<Embedding> brute_force_upse(const Digraph& g, const ConvexPointSet& s,
                                          const OracleConstraints& c, int bound) {
  check_oracle_size(g, s, bound);
  return Backtracker(g, s, c).run();
}

std::optional<Embedding> brute_force_restricted(const Digraph& g, Vertex r,
                                                const ConvexPointSet& s, PointId p_r, int bound) {
  check_oracle_size(g, s, bound);
  const int n = g.size();
  if (r < 0 || r >= n || p_r < 0 || p_r >= n) throw InputError("root or root point out of range");
  OracleConstraints c;
  c.pin.assign(n, -1);
  c.pin[r] = p_r;
  std::vector<int> comp(n, -1);
  comp[r] = -2;
  for (Vertex start : g.neighbors(r)) {
    if (comp[start] != -1) continue;
    const int id = static_cast<int>(c.groups.size());
    c.groups.push_back({});
    std::vector<Vertex> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      c.groups[id].push_back(v);
      for (Vertex x : g.neighbors(v)) {
        if (comp[x] != -1) continue;
        comp[x] = id;
        stack.push_back(x);
      }
    }
  }
  return Backtracker(g, s, c).run();
}

void enumerate_labeled_trees(int n, const std::function<void(const std::vector<Arc>&)>& fn) {
  if (n <= 0) return;
  if (n == 1) {
    fn({});
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    fn(prufer_decode(seq, n));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    seq[i]++;
  }
}

void enumerate_directed_trees(int n, EnumMode mode,
                              const std::function<void(const Digraph&)>& fn) {
  std::set<std::string> seen;
  enumerate_labeled_trees(n, [&](const std::vector<Arc>& edges) {
    const int m = static_cast<int>(edges.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Arc> arcs = edges;
      for (int e = 0; e < m; ++e)
        if (mask >> e & 1) std::swap(arcs[e].tail, arcs[e].head);
      Digraph t(n, std::move(arcs));
      if (mode == EnumMode::Dedup && !seen.insert(canonical_directed_tree(t)).second) continue;
      fn(t);
    }
  });
}

void enumerate_taggings(int n, const std::function<void(const ConvexPointSet&)>& fn) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Side> tags(n);
    for (int i = 0; i < n; ++i) tags[i] = (mask >> i & 1) ? Side::Right : Side::Left;
    fn(ConvexPointSet(std::move(tags)));
  }
}

void enumerate_instances(int n, EnumMode mode,
                         const std::function<void(const Digraph&, const ConvexPointSet&)>& fn) {
  enumerate_directed_trees(n, mode, [&](const Digraph& t) {
    enumerate_taggings(n, [&](const ConvexPointSet& s) { fn(t, s); });
  });
}

std::string canonical_directed_tree(const Digraph& t) {
  std::string best;
  for (Vertex r = 0; r < t.size(); ++r) {
    auto code = rooted_code(t, r, -1);
    if (r == 0 || code < best) best = std::move(code);
  }
  return best;
}

InstanceKind parse_instance_kind(const std::string& name) {
  if (name == "tree") return InstanceKind::Tree;
  if (name == "caterpillar") return InstanceKind::Caterpillar;
  if (name == "outerplanar-dag") return InstanceKind::OuterplanarDag;
  if (name == "path") return InstanceKind::Path;
  throw InputError("unknown instance kind '" + name + "'");
}

std::string instance_kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Tree: return "tree";
    case InstanceKind::Caterpillar: return "caterpillar";
    case InstanceKind::OuterplanarDag: return "outerplanar-dag";
    case InstanceKind::Path: return "path";
  }
  return "?";
}

Instance generate(const InstanceSpec& spec) {
  const int n = spec.n;
  if (n < 0) throw InputError("n must be non-negative");
  if (!(spec.left_fraction >= 0 && spec.left_fraction <= 1) ||
      !(spec.orientation_bias >= 0 && spec.orientation_bias <= 1)) {
    throw InputError("fractions must lie in [0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  Digraph g;
  switch (spec.kind) {
    case InstanceKind::Path: {
      std::vector<Arc> arcs;
      for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
      g = Digraph(n, std::move(arcs));
      break;
    }
    case InstanceKind::Tree: {
      std::vector<std::pair<int, int>> edges;
      if (n >= 2) {
        std::vector<int> seq(n - 2);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (auto& x : seq) x = pick(rng);
        for (const Arc& a : prufer_decode(seq, n)) edges.emplace_back(a.tail, a.head);
      }
      g = Digraph(n, orient(edges, spec.orientation_bias, rng));
      break;
    }
    case InstanceKind::Caterpillar: {
      std::vector<std::pair<int, int>> edges;
      if (n >= 2) {
        const int spine = std::uniform_int_distribution<int>(1, n)(rng);
        for (int v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
        std::uniform_int_distribution<int> pick(0, spine - 1);
        for (int v = spine; v < n; ++v) edges.emplace_back(pick(rng), v);
      }
      g = relabel(n, orient(edges, spec.orientation_bias, rng), rng);
      break;
    }
    case InstanceKind::OuterplanarDag: {
      std::vector<Arc> arcs;
      int count = n > 0 ? 1 : 0;
      while (count < n) {
        const Vertex x = std::uniform_int_distribution<int>(0, count - 1)(rng);
        const int room = n - count;
        const bool edge = room == 1 || std::bernoulli_distribution(0.35)(rng);
        if (edge) {
          arcs.push_back((rng() & 1) ? Arc{x, count} : Arc{count, x});
          ++count;
          continue;
        }
        const int k = std::uniform_int_distribution<int>(3, std::min(7, room + 1))(rng);
        std::vector<Vertex> cycle{x};
        for (int i = 1; i < k; ++i) cycle.push_back(count++);
        add_block(cycle, rng, arcs);
      }
      g = relabel(n, arcs, rng);
      break;
    }
  }
  return {std::move(g), random_tags(rng, n, spec.left_fraction)};
}

}  // namespace upse
