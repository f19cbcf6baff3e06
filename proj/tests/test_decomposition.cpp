#include "critcyc/decomposition.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "critcyc/constructors.hpp"
#include "testutil.hpp"

using critcyc::EdgeClass;
using critcyc::ErrorKind;
using critcyc::Graph;
using critcyc::StandardDecomposition;
using testutil::Lcg;
using testutil::mk;
using testutil::random_connected_graph;
using testutil::thrown_kind;

namespace {

Graph hj7() {
  return mk({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 5}, {0, 6}, {5, 6}, {5, 7}, {6, 7}, {3, 7}});
}

int node_with_bag(const StandardDecomposition& dec, const std::set<int>& bag) {
  for (const auto& [t, b] : dec.bags)
    if (b == bag) return t;
  FAIL("no node with the requested bag");
  return -1;
}

std::map<std::pair<int, int>, EdgeClass> classes_at(const StandardDecomposition& dec, int t) {
  std::map<std::pair<int, int>, EdgeClass> out;
  for (const auto& e : dec.virtual_edges.at(t)) out[std::minmax(e.u, e.v)] = e.classification;
  return out;
}

}  // namespace

TEST_CASE("three-connected and cycle inputs decompose into a single node") {
  for (const Graph& g : {critcyc::complete_graph(4), critcyc::cycle_graph(5),
                         critcyc::wheel_graph(5), critcyc::prism_graph(4),
                         critcyc::petersen_graph()}) {
    StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
    REQUIRE(dec.nodes().size() == 1);
    int t = dec.nodes().front();
    auto vs = g.vertices();
    REQUIRE(dec.bags.at(t) == std::set<int>(vs.begin(), vs.end()));
    REQUIRE(dec.adhesions.empty());
    REQUIRE(dec.virtual_edges.at(t).empty());
    REQUIRE(critcyc::torso(dec, t) == g);
  }
}

TEST_CASE("longer cycles are reassembled into a single cycle node") {
  Graph c6 = critcyc::cycle_graph(6);
  StandardDecomposition dec = critcyc::standard_tree_decomposition(c6);
  REQUIRE(dec.nodes().size() == 1);
  REQUIRE(critcyc::torso(dec, dec.nodes().front()) == c6);
}

TEST_CASE("decomposition rejects inputs that are not 2-connected") {
  REQUIRE(thrown_kind([] { critcyc::standard_tree_decomposition(mk({{0, 1}, {1, 2}})); }) ==
          ErrorKind::NotTwoConnected);
  REQUIRE(thrown_kind([] { critcyc::standard_tree_decomposition(mk({{0, 1}})); }) ==
          ErrorKind::NotTwoConnected);
  REQUIRE(thrown_kind([] {
            critcyc::standard_tree_decomposition(
                mk({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
          }) == ErrorKind::NotTwoConnected);
}

TEST_CASE("the two-clique chain splits into a three-node path") {
  Graph g = hj7();
  StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
  REQUIRE(dec.nodes().size() == 3);

  int a = node_with_bag(dec, {0, 1, 2, 3});
  int b = node_with_bag(dec, {0, 3, 7});
  int c = node_with_bag(dec, {0, 5, 6, 7});

  REQUIRE(dec.adhesion(a, b) == std::make_pair(0, 3));
  REQUIRE(dec.adhesion(b, c) == std::make_pair(0, 7));
  REQUIRE(thrown_kind([&] { dec.adhesion(a, c); }) == ErrorKind::BadArgument);
  REQUIRE(dec.tree_neighbors(b) == std::vector<int>{a, c});

  REQUIRE(critcyc::torso(dec, a) == critcyc::complete_graph(4));
  REQUIRE(critcyc::torso(dec, b) == mk({{0, 3}, {0, 7}, {3, 7}}));
  Graph right = critcyc::torso(dec, c);
  REQUIRE(right.n() == 4);
  REQUIRE(right.m() == 6);

  REQUIRE(dec.virtual_edges.at(a).size() == 1);
  REQUIRE(dec.virtual_edges.at(b).size() == 2);
  REQUIRE(dec.virtual_edges.at(c).size() == 1);
  REQUIRE(thrown_kind([&] { critcyc::torso(dec, 99); }) == ErrorKind::BadArgument);
}

TEST_CASE("decomposition of the same graph is deterministic") {
  StandardDecomposition a = critcyc::standard_tree_decomposition(hj7());
  StandardDecomposition b = critcyc::standard_tree_decomposition(hj7());
  REQUIRE(a.bags == b.bags);
  REQUIRE(a.adhesions == b.adhesions);
  REQUIRE(a.tree.parent == b.tree.parent);
}

TEST_CASE("virtual edges of the two-clique chain classify by side") {
  Graph g = hj7();
  StandardDecomposition dec =
      critcyc::classify_virtual_edges(g, critcyc::standard_tree_decomposition(g), 4);

  int a = node_with_bag(dec, {0, 1, 2, 3});
  int b = node_with_bag(dec, {0, 3, 7});
  int c = node_with_bag(dec, {0, 5, 6, 7});

  REQUIRE(classes_at(dec, a) ==
          std::map<std::pair<int, int>, EdgeClass>{{{0, 3}, EdgeClass::Additive}});
  REQUIRE(classes_at(dec, b) ==
          std::map<std::pair<int, int>, EdgeClass>{{{0, 3}, EdgeClass::Contractive},
                                                   {{0, 7}, EdgeClass::Contractive}});
  REQUIRE(classes_at(dec, c) ==
          std::map<std::pair<int, int>, EdgeClass>{{{0, 7}, EdgeClass::Additive}});
}

TEST_CASE("classification fails when a side has no forced type") {
  Graph g = mk({{0, 2}, {0, 3}, {2, 3}, {1, 2}, {1, 3}, {0, 4}, {4, 5}, {5, 1}});
  StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
  REQUIRE(dec.nodes().size() == 2);
  REQUIRE(thrown_kind([&] { critcyc::classify_virtual_edges(g, dec, 4); }) ==
          ErrorKind::TypeClassificationFailed);
}

TEST_CASE("nuclei keep additive edges and contract contractive ones") {
  Graph g = hj7();
  StandardDecomposition dec =
      critcyc::classify_virtual_edges(g, critcyc::standard_tree_decomposition(g), 4);

  int a = node_with_bag(dec, {0, 1, 2, 3});
  int b = node_with_bag(dec, {0, 3, 7});

  critcyc::NucleusResult left = critcyc::nucleus(g, dec, a, 4);
  REQUIRE_FALSE(left.degenerate);
  REQUIRE(left.graph == critcyc::complete_graph(4));
  REQUIRE(left.criticality.has_value());
  REQUIRE(left.criticality->is_critical);
  for (int v : {0, 1, 2, 3}) REQUIRE(left.contraction_map.at(v) == v);

  critcyc::NucleusResult middle = critcyc::nucleus(g, dec, b, 4);
  REQUIRE(middle.degenerate);
  REQUIRE(middle.graph.n() == 1);
  REQUIRE(middle.contraction_map ==
          std::map<int, int>{{0, 0}, {3, 0}, {7, 0}});
  REQUIRE_FALSE(middle.criticality.has_value());
}

TEST_CASE("nuclei require classified virtual edges") {
  Graph g = hj7();
  StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
  int b = node_with_bag(dec, {0, 3, 7});
  REQUIRE(thrown_kind([&] { critcyc::nucleus(g, dec, b, 4); }) == ErrorKind::BadArgument);
}

TEST_CASE("validation flags exactly the degenerate triangle of the two-clique chain") {
  Graph g = hj7();
  StandardDecomposition dec =
      critcyc::classify_virtual_edges(g, critcyc::standard_tree_decomposition(g), 4);
  critcyc::ValidationReport report = critcyc::validate_decomposition(g, dec, 4);

  int b = node_with_bag(dec, {0, 3, 7});
  REQUIRE_FALSE(report.all_pass);
  REQUIRE(report.failing_nodes() == std::vector<int>{b});
  for (const auto& checks : report.nodes) {
    if (checks.node != b) {
      REQUIRE(checks.all_pass());
      continue;
    }
    REQUIRE(checks.bag == std::set<int>{0, 3, 7});
    REQUIRE_FALSE(checks.torso_three_connected);
    REQUIRE_FALSE(checks.nucleus_critical);
    REQUIRE(checks.adhesions_nonadjacent);
    REQUIRE(checks.adhesions_distinct);
    REQUIRE(checks.contractive_forest);
    REQUIRE(checks.edges_bound);
    REQUIRE(checks.degree_bound);
    REQUIRE(checks.nucleus_at_least_induced);
    REQUIRE(checks.torso_path_bound);
    REQUIRE(checks.effective_weight == 3);
  }
}

TEST_CASE("the tree-shaped clique composite decomposes into hub, bridges, leaves") {
  Graph g = critcyc::gallai_regular(4, 1);
  StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
  REQUIRE(dec.nodes().size() == 7);

  std::set<std::set<int>> bags;
  for (const auto& [t, bag] : dec.bags) bags.insert(bag);
  std::set<std::set<int>> expected = {{0, 1, 2, 3},  {0, 1, 4},      {0, 4, 5, 6},
                                      {0, 2, 7},     {0, 7, 8, 9},   {0, 3, 10},
                                      {0, 10, 11, 12}};
  REQUIRE(bags == expected);

  std::set<std::pair<int, int>> pairs;
  for (const auto& [edge, pair] : dec.adhesions) pairs.insert(pair);
  REQUIRE(pairs == std::set<std::pair<int, int>>{
                       {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 7}, {0, 10}});

  dec = critcyc::classify_virtual_edges(g, dec, 4);
  int hub = node_with_bag(dec, {0, 1, 2, 3});
  for (const auto& e : dec.virtual_edges.at(hub))
    REQUIRE(e.classification == EdgeClass::Additive);
  for (const std::set<int>& bag :
       {std::set<int>{0, 1, 4}, std::set<int>{0, 2, 7}, std::set<int>{0, 3, 10}})
    for (const auto& e : dec.virtual_edges.at(node_with_bag(dec, bag)))
      REQUIRE(e.classification == EdgeClass::Contractive);
  for (const std::set<int>& bag : {std::set<int>{0, 4, 5, 6}, std::set<int>{0, 7, 8, 9},
                                   std::set<int>{0, 10, 11, 12}})
    for (const auto& e : dec.virtual_edges.at(node_with_bag(dec, bag)))
      REQUIRE(e.classification == EdgeClass::Additive);

  critcyc::NucleusResult hub_nucleus = critcyc::nucleus(g, dec, hub, 4);
  REQUIRE_FALSE(hub_nucleus.degenerate);
  REQUIRE(hub_nucleus.graph == critcyc::complete_graph(4));

  critcyc::ValidationReport report = critcyc::validate_decomposition(g, dec, 4);
  std::vector<int> bridges = {node_with_bag(dec, {0, 1, 4}), node_with_bag(dec, {0, 2, 7}),
                              node_with_bag(dec, {0, 3, 10})};
  std::sort(bridges.begin(), bridges.end());
  REQUIRE(report.failing_nodes() == bridges);
  for (const auto& checks : report.nodes) {
    if (!std::count(bridges.begin(), bridges.end(), checks.node)) {
      REQUIRE(checks.all_pass());
      continue;
    }
    REQUIRE_FALSE(checks.torso_three_connected);
    REQUIRE_FALSE(checks.nucleus_critical);
    REQUIRE(checks.adhesions_nonadjacent);
    REQUIRE(checks.contractive_forest);
    REQUIRE(checks.edges_bound);
    REQUIRE(checks.torso_path_bound);
  }
}

TEST_CASE("adjacent split pairs stay unmerged and are flagged by validation") {
  Graph g = mk({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
  REQUIRE(dec.nodes().size() == 2);
  for (int t : dec.nodes()) {
    REQUIRE(dec.bags.at(t).size() == 3);
    REQUIRE(dec.virtual_edges.at(t).empty());
  }
  critcyc::ValidationReport report = critcyc::validate_decomposition(g, dec, 4);
  REQUIRE_FALSE(report.all_pass);
  for (const auto& checks : report.nodes) {
    REQUIRE_FALSE(checks.adhesions_nonadjacent);
    REQUIRE_FALSE(checks.nucleus_critical);
  }
}

TEST_CASE("mixed splits keep a clique torso beside a cycle torso") {
  Graph g = mk({{0, 2}, {0, 3}, {2, 3}, {1, 2}, {1, 3}, {0, 4}, {4, 5}, {5, 1}});
  StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
  REQUIRE(dec.nodes().size() == 2);
  int clique = node_with_bag(dec, {0, 1, 2, 3});
  int ring = node_with_bag(dec, {0, 1, 4, 5});
  REQUIRE(critcyc::torso(dec, clique) == critcyc::complete_graph(4));
  REQUIRE(critcyc::is_cycle_graph(critcyc::torso(dec, ring)));
  REQUIRE(dec.adhesion(clique, ring) == std::make_pair(0, 1));
}

TEST_CASE("random 2-connected graphs decompose into sound trees") {
  Lcg rng(20260819);
  int tried = 0;
  for (int trial = 0; trial < 120 && tried < 30; ++trial) {
    int n = 4 + static_cast<int>(rng.next() % 6);
    Graph g = random_connected_graph(rng, n, n);
    if (critcyc::connectivity(g).level < 2) continue;
    ++tried;
    StandardDecomposition dec = critcyc::standard_tree_decomposition(g);
    for (int t : dec.nodes()) {
      Graph h = critcyc::torso(dec, t);
      REQUIRE((critcyc::is_cycle_graph(h) || critcyc::connectivity(h).level >= 3));
    }
    for (const auto& [edge, pair] : dec.adhesions) {
      const std::set<int>& left = dec.bags.at(edge.first);
      const std::set<int>& right = dec.bags.at(edge.second);
      std::set<int> shared;
      std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                            std::inserter(shared, shared.begin()));
      REQUIRE(shared == std::set<int>{pair.first, pair.second});
    }
  }
  REQUIRE(tried >= 20);
}
