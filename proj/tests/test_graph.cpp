#include <critcyc/graph.hpp>
#include <critcyc/numbers.hpp>

#include <catch_amalgamated.hpp>

#include "testutil.hpp"

using critcyc::ErrorKind;
using critcyc::Graph;
using critcyc::RootedTree;
using testutil::mk;
using testutil::thrown_kind;

TEST_CASE("graph construction and basic queries") {
  Graph g = mk({{0, 1}, {1, 2}, {2, 0}}, {5});
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 3);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 0));
  REQUIRE_FALSE(g.has_edge(0, 5));
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.degree(5) == 0);
  REQUIRE(g.vertices() == std::vector<int>{0, 1, 2, 5});
  REQUIRE(g.neighbors(0) == std::vector<int>{1, 2});
  REQUIRE(g.edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  REQUIRE(thrown_kind([&] { g.add_edge(3, 3); }) == ErrorKind::BadArgument);
  REQUIRE(thrown_kind([&] { g.add_vertex(-1); }) == ErrorKind::BadArgument);
  REQUIRE(thrown_kind([&] { g.neighbors(99); }) == ErrorKind::BadArgument);

  g.add_edge(0, 1);
  REQUIRE(g.m() == 3);

  g.remove_edge(0, 1);
  REQUIRE_FALSE(g.has_edge(0, 1));
  REQUIRE(g.m() == 2);

  g.remove_vertex(2);
  REQUIRE_FALSE(g.has_vertex(2));
  REQUIRE(g.m() == 0);
}

TEST_CASE("induced subgraph keeps labels and internal edges") {
  Graph g = mk({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  g.labels[0] = "x_0";
  g.labels[3] = "y_3";
  Graph h = g.induced({0, 1, 2});
  REQUIRE(h.vertices() == std::vector<int>{0, 1, 2});
  REQUIRE(h.edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  REQUIRE(h.labels.at(0) == "x_0");
  REQUIRE(h.labels.count(3) == 0);
}

TEST_CASE("plus_edge and contract_pair") {
  Graph c4 = mk({{0, 1}, {1, 2}, {2, 3}, {3, 0}});

  Graph with_diag = critcyc::plus_edge(c4, 0, 2);
  REQUIRE(with_diag.m() == 5);
  REQUIRE(critcyc::plus_edge(with_diag, 0, 2) == with_diag);

  int merged = -1;
  Graph contracted = critcyc::contract_pair(c4, 0, 2, &merged);
  REQUIRE(merged == 0);
  REQUIRE(contracted.n() == 3);
  REQUIRE(contracted.edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 3}});

  Graph k3 = mk({{0, 1}, {1, 2}, {2, 0}});
  Graph squeezed = critcyc::contract_pair(k3, 1, 2);
  REQUIRE(squeezed.n() == 2);
  REQUIRE(squeezed.edge_list() == std::vector<std::pair<int, int>>{{0, 1}});

  REQUIRE(thrown_kind([&] { critcyc::contract_pair(k3, 0, 0); }) ==
          ErrorKind::BadArgument);
}

TEST_CASE("components and connectivity flag") {
  Graph g = mk({{0, 1}, {2, 3}}, {7});
  auto comps = critcyc::components(g);
  REQUIRE(comps == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {7}});
  REQUIRE_FALSE(critcyc::is_connected(g));
  REQUIRE(critcyc::is_connected(mk({{0, 1}, {1, 2}})));
  REQUIRE_FALSE(critcyc::is_connected(Graph{}));
}

TEST_CASE("dfs spanning tree follows ascending neighbor order") {
  Graph k4 = mk({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  RootedTree t = critcyc::dfs_spanning_tree(k4, 0);
  REQUIRE(t.root == 0);
  REQUIRE(t.dfs_valid);
  REQUIRE(t.parent.at(1) == 0);
  REQUIRE(t.parent.at(2) == 1);
  REQUIRE(t.parent.at(3) == 2);
  REQUIRE(t.max_depth() == 3);
  REQUIRE(critcyc::is_dfs_tree(k4, t));

  Graph path = mk({{0, 1}, {1, 2}});
  RootedTree pt = critcyc::dfs_spanning_tree(path, 0);
  REQUIRE(pt.parent.at(1) == 0);
  REQUIRE(pt.parent.at(2) == 1);

  Graph split = mk({{0, 1}, {2, 3}});
  REQUIRE(thrown_kind([&] { critcyc::dfs_spanning_tree(split, 0); }) ==
          ErrorKind::DisconnectedInput);
}

TEST_CASE("dfs spanning tree with a forced first edge") {
  Graph c4 = mk({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  RootedTree t = critcyc::dfs_spanning_tree(c4, 0, std::pair{0, 3});
  REQUIRE(t.parent.at(3) == 0);
  REQUIRE(t.parent.at(2) == 3);
  REQUIRE(t.parent.at(1) == 2);
  REQUIRE(t.children(0) == std::vector<int>{3});
  REQUIRE(critcyc::is_dfs_tree(c4, t));

  REQUIRE(thrown_kind([&] {
            critcyc::dfs_spanning_tree(c4, 0, std::pair{1, 2});
          }) == ErrorKind::BadFirstEdge);

  Graph star = mk({{0, 1}, {0, 2}});
  REQUIRE(thrown_kind([&] {
            critcyc::dfs_spanning_tree(star, 0, std::pair{0, 1});
          }) == ErrorKind::DisconnectedInput);
}

TEST_CASE("dfs trees of random connected graphs satisfy the ancestor property") {
  testutil::Lcg rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform(2, 12);
    Graph g = testutil::random_connected_graph(rng, n, rng.uniform(0, n));
    int root = rng.uniform(0, n - 1);
    RootedTree t = critcyc::dfs_spanning_tree(g, root);
    REQUIRE(critcyc::is_dfs_tree(g, t));
  }
}

TEST_CASE("rooted tree paths and ancestry") {
  Graph g = mk({{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  RootedTree t = critcyc::dfs_spanning_tree(g, 0);
  REQUIRE(t.is_ancestor(0, 4));
  REQUIRE(t.is_ancestor(1, 2));
  REQUIRE_FALSE(t.is_ancestor(2, 4));
  REQUIRE(t.path_to_root(4) == std::vector<int>{4, 3, 1, 0});
  REQUIRE(t.path(2, 4) == std::vector<int>{2, 1, 3, 4});
  REQUIRE(t.path(4, 2) == std::vector<int>{4, 3, 1, 2});
  REQUIRE(t.path(1, 1) == std::vector<int>{1});
  REQUIRE(t.level_counts() == std::vector<long long>{1, 1, 2, 1});
}

TEST_CASE("path and cycle witness checkers") {
  Graph c5 = mk({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});

  critcyc::PathWitness p;
  p.vertices = {0, 1, 2, 3};
  p.claimed_length = 3;
  REQUIRE_NOTHROW(critcyc::check_path_witness(c5, p));

  p.claimed_length = 4;
  REQUIRE(thrown_kind([&] { critcyc::check_path_witness(c5, p); }) ==
          ErrorKind::BadWitness);

  critcyc::PathWitness skip;
  skip.vertices = {0, 2};
  REQUIRE(thrown_kind([&] { critcyc::check_path_witness(c5, skip); }) ==
          ErrorKind::BadWitness);

  critcyc::PathWitness dup;
  dup.vertices = {0, 1, 0};
  REQUIRE(thrown_kind([&] { critcyc::check_path_witness(c5, dup); }) ==
          ErrorKind::BadWitness);

  critcyc::PathWitness lone;
  lone.vertices = {3};
  REQUIRE_NOTHROW(critcyc::check_path_witness(c5, lone));

  critcyc::CycleWitness c;
  c.vertices = {0, 1, 2, 3, 4};
  c.claimed_length = 5;
  REQUIRE_NOTHROW(critcyc::check_cycle_witness(c5, c));

  critcyc::CycleWitness open_walk;
  open_walk.vertices = {0, 1, 2};
  REQUIRE(thrown_kind([&] { critcyc::check_cycle_witness(c5, open_walk); }) ==
          ErrorKind::BadWitness);

  critcyc::CycleWitness tiny;
  tiny.vertices = {0, 1};
  REQUIRE(thrown_kind([&] { critcyc::check_cycle_witness(c5, tiny); }) ==
          ErrorKind::BadWitness);
}

TEST_CASE("dimacs round trip") {
  std::string text =
      "c toy instance\n"
      "p edge 4 4\n"
      "e 1 2\n"
      "e 2 3\n"
      "e 3 4\n"
      "e 4 1\n";
  Graph g = critcyc::read_dimacs(text);
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 4);
  REQUIRE(g.has_edge(0, 3));

  Graph back = critcyc::read_dimacs(critcyc::to_dimacs(g));
  REQUIRE(back == g);
}

TEST_CASE("dimacs writer renumbers sparse vertex ids") {
  Graph g = mk({{2, 5}, {5, 9}});
  std::string text = critcyc::to_dimacs(g);
  REQUIRE(text == "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("dimacs parse errors") {
  REQUIRE(thrown_kind([] { critcyc::read_dimacs(std::string{"e 1 2\n"}); }) ==
          ErrorKind::ParseError);
  REQUIRE(thrown_kind([] { critcyc::read_dimacs(std::string{"p edge 0 0\n"}); }) ==
          ErrorKind::ParseError);
  REQUIRE(thrown_kind([] {
            critcyc::read_dimacs(std::string{"p edge 2 1\ne 1 3\n"});
          }) == ErrorKind::ParseError);
  REQUIRE(thrown_kind([] {
            critcyc::read_dimacs(std::string{"p edge 2 1\ne 1 1\n"});
          }) == ErrorKind::ParseError);
  REQUIRE(thrown_kind([] {
            critcyc::read_dimacs(std::string{"p edge 2 2\ne 1 2\n"});
          }) == ErrorKind::ParseError);
  REQUIRE(thrown_kind([] {
            critcyc::read_dimacs(std::string{"p edge 2 1\nq 1 2\n"});
          }) == ErrorKind::ParseError);
  REQUIRE(thrown_kind([] { critcyc::read_dimacs(std::string{""}); }) ==
          ErrorKind::ParseError);
}

TEST_CASE("saturating powers compare exactly") {
  REQUIRE(critcyc::sat_pow(3, 4) == 81);
  REQUIRE(critcyc::sat_pow(2, 127) == (critcyc::u128{1} << 127));
  REQUIRE(critcyc::sat_pow(2, 200) == critcyc::kSaturated);
  REQUIRE(critcyc::pow_at_least(3, 4, 81));
  REQUIRE_FALSE(critcyc::pow_at_least(3, 4, 82));
  REQUIRE(critcyc::pow_at_least(4, 1000, 12345));
  REQUIRE(critcyc::pow_at_least(1, 1000, 1));
  REQUIRE_FALSE(critcyc::pow_at_least(1, 1000, 2));
}

TEST_CASE("brute force witness helpers agree on small fixtures") {
  Graph c5 = mk({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  REQUIRE(testutil::brute_longest_cycle(c5) == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE(testutil::brute_longest_path(c5) == std::vector<int>{0, 1, 2, 3, 4});

  Graph tree = mk({{0, 1}, {1, 2}});
  REQUIRE(testutil::brute_longest_cycle(tree).empty());

  Graph k4 = mk({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  REQUIRE(testutil::brute_longest_cycle(k4) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(testutil::brute_longest_path(k4).size() == 4);
}
