#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "upse/blocks.hpp"
#include "upse/oracle.hpp"

using namespace upse;

TEST_CASE("labeled tree counts") {
  for (int n = 2; n <= 6; ++n) {
    int count = 0, expect = 1;
    for (int i = 0; i < n - 2; ++i) expect *= n;
    std::set<std::vector<std::pair<Vertex, Vertex>>> seen;
    enumerate_labeled_trees(n, [&](const std::vector<Arc>& arcs) {
      ++count;
      std::vector<std::pair<Vertex, Vertex>> key;
      for (const Arc& a : arcs) key.emplace_back(a.tail, a.head);
      seen.insert(key);
      CHECK(Digraph(n, arcs).is_tree());
    });
    CHECK(count == expect);
    CHECK(static_cast<int>(seen.size()) == expect);
  }
}

TEST_CASE("directed tree classes") {
  // Oriented trees up to isomorphism.
  const int expect[] = {1, 1, 3, 8, 27, 91, 350};
  for (int n = 1; n <= 7; ++n) {
    int count = 0;
    std::set<std::string> canon;
    enumerate_directed_trees(n, EnumMode::Dedup, [&](const Digraph& t) {
      ++count;
      canon.insert(canonical_directed_tree(t));
    });
    CAPTURE(n);
    CHECK(count == expect[n - 1]);
    CHECK(static_cast<int>(canon.size()) == count);
  }
  int raw = 0;
  enumerate_directed_trees(4, EnumMode::Raw, [&](const Digraph&) { ++raw; });
  CHECK(raw == 16 * 8);
}

TEST_CASE("canonical form ignores labels") {
  const Digraph a(4, {{0, 1}, {1, 2}, {3, 1}});
  const Digraph b(4, {{2, 0}, {1, 0}, {0, 3}});
  const Digraph c(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(canonical_directed_tree(a) == canonical_directed_tree(b));
  CHECK(canonical_directed_tree(a) != canonical_directed_tree(c));
}

TEST_CASE("taggings") {
  std::set<std::string> seen;
  enumerate_taggings(4, [&](const ConvexPointSet& s) { seen.insert(s.to_string()); });
  CHECK(seen.size() == 16);
  int instances = 0;
  enumerate_instances(3, EnumMode::Dedup, [&](const Digraph&, const ConvexPointSet&) { ++instances; });
  CHECK(instances == 3 * 8);
}

TEST_CASE("brute force basics") {
  // Directed path needs nothing; a sink below everything is impossible.
  const Digraph path(3, {{0, 1}, {1, 2}});
  const auto s = ConvexPointSet::from_string("LRL");
  const auto e = brute_force_upse(path, s);
  REQUIRE(e);
  CHECK(validate_upse(path, s, *e).ok());
  // Two sources joined at a sink: only one vertex can sit on the bottom point.
  const Digraph vee(3, {{0, 2}, {1, 2}});
  CHECK(brute_force_upse(vee, s).has_value());
  OracleConstraints c;
  c.pin = {-1, -1, 0};
  CHECK_FALSE(brute_force_upse(vee, s, c).has_value());
  CHECK_THROWS_AS(brute_force_upse(path, ConvexPointSet::from_string("LR")), InputError);
  CHECK_THROWS_AS(brute_force_upse(Digraph(12), ConvexPointSet(std::vector<Side>(12)), {}, 9), InputError);
}

TEST_CASE("group constraints") {
  // Star with centre 0 and arms 1, 2: restricted forces each arm on one side.
  const Digraph star(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
  const auto s = ConvexPointSet::from_string("LLRLR");
  OracleConstraints c;
  c.pin = {0, -1, -1, -1, -1};
  c.groups = {{1, 2}, {3, 4}};
  const auto e = brute_force_upse(star, s, c);
  if (e) {
    for (const auto& grp : c.groups) CHECK(s.side(e->map[grp[0]]) == s.side(e->map[grp[1]]));
  }
  CHECK(e.has_value() == brute_force_restricted(star, 0, s, 0).has_value());
}

TEST_CASE("mirror symmetry of the oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = generate({InstanceKind::Tree, 6, seed});
    CHECK(brute_force_upse(inst.graph, inst.points).has_value() ==
          brute_force_upse(inst.graph, inst.points.mirrored()).has_value());
  }
}

TEST_CASE("generator is deterministic") {
  for (auto kind : {InstanceKind::Tree, InstanceKind::Caterpillar, InstanceKind::OuterplanarDag,
                    InstanceKind::Path}) {
    const InstanceSpec spec{kind, 20, 42, 0.3, 0.5};
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a.graph.arcs() == b.graph.arcs());
    CHECK(a.points == b.points);
    CHECK(a.graph.size() == 20);
    CHECK(a.points.size() == 20);
    CHECK(parse_instance_kind(instance_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_instance_kind("blob"), InputError);
  CHECK_THROWS_AS(generate({InstanceKind::Tree, -1, 1}), InputError);
}

TEST_CASE("generated shapes") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto tree = generate({InstanceKind::Tree, 15, seed}).graph;
    CHECK(tree.is_tree());
    // Caterpillar: removing the leaves leaves a path.
    const auto cat = generate({InstanceKind::Caterpillar, 15, seed}).graph;
    REQUIRE(cat.is_tree());
    int spine_branch = 0;
    for (Vertex v = 0; v < cat.size(); ++v) {
      if (cat.degree(v) == 1) continue;
      int inner = 0;
      for (Vertex w : cat.neighbors(v))
        if (cat.degree(w) > 1) ++inner;
      if (inner > 2) ++spine_branch;
    }
    CHECK(spine_branch == 0);
    const auto path = generate({InstanceKind::Path, 15, seed}).graph;
    for (Vertex v = 0; v < path.size(); ++v) CHECK(path.degree(v) <= 2);
    const auto op = generate({InstanceKind::OuterplanarDag, 15, seed}).graph;
    CHECK(op.is_acyclic());
    CHECK(op.is_connected());
    const auto dec = block_decompose(op);
    CHECK(dec.outerplanar);
    for (const Block& b : dec.blocks) CHECK(block_shape(b).regular);
  }
  // Some generated graphs are rejected (a vertex on the side of two blocks), some are not.
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    if (structural_check(generate({InstanceKind::OuterplanarDag, 15, seed}).graph).ok) ++ok;
  CHECK(ok > 10);
  CHECK(ok < 100);
}

TEST_CASE("backtracker agrees with plain permutation search") {
  // Every bijection, checked by the validator alone.
  auto by_permutation = [](const Digraph& g, const ConvexPointSet& s) {
    Embedding e;
    e.map.resize(g.size());
    std::iota(e.map.begin(), e.map.end(), 0);
    do {
      if (validate_upse(g, s, e).ok()) return true;
    } while (std::next_permutation(e.map.begin(), e.map.end()));
    return false;
  };
  long no = 0;
  for (int n = 1; n <= 5; ++n) {
    enumerate_instances(n, EnumMode::Dedup, [&](const Digraph& g, const ConvexPointSet& s) {
      CHECK(brute_force_upse(g, s).has_value() == by_permutation(g, s));
    });
  }
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto inst = generate({InstanceKind::OuterplanarDag, 3 + static_cast<int>(seed % 4), seed});
    const bool truth = by_permutation(inst.graph, inst.points);
    if (!truth) ++no;
    CHECK(brute_force_upse(inst.graph, inst.points).has_value() == truth);
  }
  CHECK(no > 20);
}
