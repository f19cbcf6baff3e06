#include <critcyc/linkage.hpp>

#include <functional>
#include <set>
#include <vector>

#include <catch_amalgamated.hpp>

#include <critcyc/constructors.hpp>
#include "testutil.hpp"

using critcyc::CycleWitness;
using critcyc::ErrorKind;
using critcyc::Graph;
using critcyc::Hammock;
using critcyc::Linkage;
using critcyc::LinkageOrHammock;
using critcyc::PathWitness;
using testutil::mk;
using testutil::thrown_kind;

namespace {

Graph complete(int n) {
  Graph g;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph circulant16() {
  Graph g;
  for (int v = 0; v < 16; ++v) {
    g.add_edge(v, (v + 1) % 16);
    g.add_edge(v, (v + 2) % 16);
  }
  return g;
}

PathWitness path_of(std::vector<int> vs) {
  PathWitness w;
  w.vertices = std::move(vs);
  w.claimed_length = static_cast<long long>(w.vertices.size()) - 1;
  return w;
}

CycleWitness cycle_of(std::vector<int> vs) {
  CycleWitness w;
  w.vertices = std::move(vs);
  w.claimed_length = static_cast<long long>(w.vertices.size());
  return w;
}

Hammock hammock_of(std::vector<int> p1, std::vector<int> p2, std::vector<int> r1,
                   std::vector<int> r2) {
  Hammock h;
  h.p1 = path_of(std::move(p1));
  h.p2 = path_of(std::move(p2));
  h.r1 = path_of(std::move(r1));
  h.r2 = path_of(std::move(r2));
  h.X = {h.p1.vertices.front(), h.p2.vertices.front()};
  h.Y = {h.p1.vertices.back(), h.p2.vertices.back()};
  return h;
}

bool trace_mentions(const std::vector<std::string>& trace, const std::string& needle) {
  for (const auto& line : trace)
    if (line.find(needle) != std::string::npos) return true;
  return false;
}

std::vector<std::vector<int>> simple_paths(const Graph& g, int a, int c,
                                           const std::set<int>& forbidden) {
  std::vector<std::vector<int>> out;
  if (forbidden.count(a)) return out;
  std::vector<int> cur{a};
  std::set<int> used{a};
  std::function<void()> go = [&]() {
    if (cur.back() == c) out.push_back(cur);
    for (int w : g.neighbor_set(cur.back())) {
      if (used.count(w) || forbidden.count(w)) continue;
      cur.push_back(w);
      used.insert(w);
      go();
      used.erase(w);
      cur.pop_back();
    }
  };
  go();
  return out;
}

long long best_linkage_total(const Graph& g, std::pair<int, int> X, std::pair<int, int> Y) {
  long long best = -1;
  for (int flip = 0; flip < 2; ++flip) {
    int c = flip ? Y.second : Y.first;
    int d = flip ? Y.first : Y.second;
    for (const auto& p : simple_paths(g, X.first, c, {})) {
      std::set<int> taken(p.begin(), p.end());
      long long len1 = static_cast<long long>(p.size()) - 1;
      for (const auto& q : simple_paths(g, X.second, d, taken)) {
        long long total = len1 + static_cast<long long>(q.size()) - 1;
        best = std::max(best, total);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("check_linkage validates ends and disjointness") {
  Graph k4 = complete(4);
  Linkage lk;
  lk.first = path_of({0, 2});
  lk.second = path_of({1, 3});
  lk.X = {0, 1};
  lk.Y = {2, 3};
  REQUIRE(!thrown_kind([&] { critcyc::check_linkage(k4, lk); }).has_value());
  REQUIRE(lk.length() == 2);

  Linkage shared = lk;
  shared.second = path_of({1, 0, 3});
  REQUIRE(thrown_kind([&] { critcyc::check_linkage(k4, shared); }) == ErrorKind::BadWitness);

  Linkage off = lk;
  off.second = path_of({3, 1});
  REQUIRE(thrown_kind([&] { critcyc::check_linkage(k4, off); }) == ErrorKind::BadWitness);

  Linkage degenerate = lk;
  degenerate.X = {0, 0};
  REQUIRE(thrown_kind([&] { critcyc::check_linkage(k4, degenerate); }) == ErrorKind::BadWitness);

  Linkage trivial;
  trivial.first = path_of({2});
  trivial.second = path_of({1, 3});
  trivial.X = {2, 1};
  trivial.Y = {2, 3};
  REQUIRE(!thrown_kind([&] { critcyc::check_linkage(k4, trivial); }).has_value());
  REQUIRE(trivial.length() == 1);
}

TEST_CASE("check_hammock accepts a plain hammock and rejects structural breaks") {
  Graph host = mk({{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}, {2, 5}});
  Hammock h = hammock_of({0, 1, 2}, {3, 4, 5}, {1, 4}, {2, 5});
  REQUIRE(!thrown_kind([&] { critcyc::check_hammock(host, h); }).has_value());
  REQUIRE(!h.singular());
  REQUIRE(h.length() == 1);
  REQUIRE(h.s1() == 1);
  REQUIRE(h.t2() == 5);

  Hammock out_of_order = hammock_of({0, 1, 2}, {3, 4, 5}, {2, 5}, {1, 4});
  REQUIRE(thrown_kind([&] { critcyc::check_hammock(host, out_of_order); }) ==
          ErrorKind::InvalidHammock);

  Hammock end_order = hammock_of({0, 1, 2}, {5, 4, 3}, {1, 4}, {2, 5});
  REQUIRE(thrown_kind([&] { critcyc::check_hammock(host, end_order); }) ==
          ErrorKind::InvalidHammock);

  Hammock touching = hammock_of({0, 1, 2}, {3, 4, 5}, {1, 2, 5}, {2, 5});
  REQUIRE(thrown_kind([&] { critcyc::check_hammock(host, touching); }) ==
          ErrorKind::InvalidHammock);

  Hammock doubled = hammock_of({0, 1, 2}, {3, 4, 5}, {1, 4}, {1, 4});
  REQUIRE(thrown_kind([&] { critcyc::check_hammock(host, doubled); }) ==
          ErrorKind::InvalidHammock);

  Hammock mislabeled = h;
  mislabeled.X = {0, 4};
  REQUIRE(thrown_kind([&] { critcyc::check_hammock(host, mislabeled); }) ==
          ErrorKind::InvalidHammock);

  Hammock broken = hammock_of({0, 1, 2}, {3, 4, 5}, {1, 5}, {2, 5});
  REQUIRE(thrown_kind([&] { critcyc::check_hammock(host, broken); }) == ErrorKind::BadWitness);
}

TEST_CASE("long_cycle_3connected meets the two fifths guarantee") {
  CycleWitness k4c = critcyc::long_cycle_3connected(complete(4));
  REQUIRE(k4c.length() == 4);
  REQUIRE(k4c.claimed_length == 2);

  CycleWitness pet = critcyc::long_cycle_3connected(critcyc::petersen_graph());
  REQUIRE(pet.length() == 9);
  REQUIRE(pet.claimed_length == 4);

  REQUIRE(thrown_kind([&] { critcyc::long_cycle_3connected(cycle_graph(5)); }) ==
          ErrorKind::NotThreeConnected);
}

TEST_CASE("cycle_to_linkage_or_hammock splits complete graph ends around a cycle") {
  Graph k5 = complete(5);
  LinkageOrHammock got =
      critcyc::cycle_to_linkage_or_hammock(k5, {0, 1}, {2, 3}, cycle_of({0, 1, 2, 3, 4}));
  REQUIRE(got.linkage.has_value());
  REQUIRE(!got.hammock.has_value());
  REQUIRE(got.linkage->first.vertices == std::vector<int>{1, 2});
  REQUIRE(got.linkage->second.vertices == std::vector<int>{0, 4, 3});
  REQUIRE(got.linkage->length() == 3);
  REQUIRE(5 * got.linkage->length() >= 5);

  Graph k4 = complete(4);
  LinkageOrHammock small =
      critcyc::cycle_to_linkage_or_hammock(k4, {0, 1}, {2, 3}, cycle_of({0, 1, 2, 3}));
  REQUIRE(small.linkage.has_value());
  REQUIRE(small.linkage->length() == 2);
}

TEST_CASE("cycle_to_linkage_or_hammock builds a hammock on the long circulant") {
  Graph g = circulant16();
  std::vector<int> ring(16);
  for (int v = 0; v < 16; ++v) ring[v] = v;
  LinkageOrHammock got = critcyc::cycle_to_linkage_or_hammock(g, {0, 7}, {8, 15}, cycle_of(ring));
  REQUIRE(!got.linkage.has_value());
  REQUIRE(got.hammock.has_value());
  const Hammock& h = *got.hammock;
  REQUIRE(h.p1.vertices == std::vector<int>{0, 15});
  REQUIRE(h.p2.vertices == std::vector<int>{7, 8});
  REQUIRE(h.r1.vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  REQUIRE(h.r2.vertices == std::vector<int>{15, 14, 13, 12, 11, 10, 9, 8});
  REQUIRE(h.length() == 7);
  REQUIRE(!h.singular());
  REQUIRE(5 * h.length() >= 2 * 16);
}

TEST_CASE("cycle_to_linkage_or_hammock crosses a three vertex cut on the prism") {
  Graph g = critcyc::prism_graph(3);
  LinkageOrHammock got =
      critcyc::cycle_to_linkage_or_hammock(g, {0, 3}, {4, 5}, cycle_of({0, 1, 2}));
  REQUIRE(got.linkage.has_value());
  REQUIRE(got.linkage->first.vertices == std::vector<int>{3, 4});
  REQUIRE(got.linkage->second.vertices == std::vector<int>{0, 2, 5});
  REQUIRE(trace_mentions(got.linkage->trace, "three vertex cut"));
}

TEST_CASE("cycle_to_linkage_or_hammock rejects overlapping end pairs") {
  critcyc::HammockInstance inst = critcyc::hammock_counterexample(3);
  CycleWitness tri = cycle_of({inst.X.first, inst.Y.first, inst.X.second});
  REQUIRE(thrown_kind([&] {
            critcyc::cycle_to_linkage_or_hammock(inst.graph, inst.X, inst.Y, tri);
          }) == ErrorKind::OverlappingXY);
}

TEST_CASE("hammock_to_nonsingular returns non-singular input unchanged") {
  Graph host = mk({{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}, {2, 5}});
  Hammock h = hammock_of({0, 1, 2}, {3, 4, 5}, {1, 4}, {2, 5});
  LinkageOrHammock got = critcyc::hammock_to_nonsingular(host, h);
  REQUIRE(!got.linkage.has_value());
  REQUIRE(got.hammock.has_value());
  REQUIRE(got.hammock->p1.vertices == h.p1.vertices);
  REQUIRE(got.hammock->r1.vertices == h.r1.vertices);
  REQUIRE(got.hammock->r2.vertices == h.r2.vertices);
}

TEST_CASE("hammock_to_nonsingular resolves a singular hammock in the complete graph") {
  Graph k6 = complete(6);
  Hammock h = hammock_of({0, 1}, {5, 4}, {0, 2, 5}, {0, 3, 4});
  REQUIRE(h.singular());
  LinkageOrHammock got = critcyc::hammock_to_nonsingular(k6, h);
  REQUIRE(got.linkage.has_value());
  REQUIRE(got.linkage->first.vertices == std::vector<int>{0, 3, 4});
  REQUIRE(got.linkage->second.vertices == std::vector<int>{5, 2, 1});
  REQUIRE(2 * got.linkage->length() >= h.length());

  Hammock bad = hammock_of({0, 1}, {5, 4}, {0, 3, 4}, {0, 2, 5});
  REQUIRE(thrown_kind([&] { critcyc::hammock_to_nonsingular(k6, bad); }) ==
          ErrorKind::InvalidHammock);
}

TEST_CASE("nonsingular_to_linkage rejects singular input") {
  Graph k6 = complete(6);
  Hammock h = hammock_of({0, 1}, {5, 4}, {0, 2, 5}, {0, 3, 4});
  REQUIRE(thrown_kind([&] { critcyc::nonsingular_to_linkage(k6, h); }) ==
          ErrorKind::SingularInput);
}

TEST_CASE("nonsingular_to_linkage rebuilds a complete graph hammock") {
  Graph k8 = complete(8);
  Hammock h = hammock_of({0, 1, 2, 3}, {7, 6}, {1, 4, 5, 7}, {2, 6});
  REQUIRE(!h.singular());
  REQUIRE(h.length() == 3);
  Linkage lk = critcyc::nonsingular_to_linkage(k8, h);
  REQUIRE(lk.first.vertices == std::vector<int>{0, 3});
  REQUIRE(lk.second.vertices == std::vector<int>{7, 5, 4, 1, 2, 6});
  REQUIRE(trace_mentions(lk.trace, "free path lands on the first side tail"));
  REQUIRE(std::max(lk.first.length(), lk.second.length()) >= h.length());
  REQUIRE(2 * lk.length() >= h.length());
}

TEST_CASE("nonsingular_to_linkage chains the circulant hammock end to end") {
  Graph g = circulant16();
  std::vector<int> ring(16);
  for (int v = 0; v < 16; ++v) ring[v] = v;
  LinkageOrHammock stage =
      critcyc::cycle_to_linkage_or_hammock(g, {0, 7}, {8, 15}, cycle_of(ring));
  REQUIRE(stage.hammock.has_value());
  LinkageOrHammock same = critcyc::hammock_to_nonsingular(g, *stage.hammock);
  REQUIRE(same.hammock.has_value());
  Linkage lk = critcyc::nonsingular_to_linkage(g, *same.hammock);
  critcyc::check_linkage(g, lk);
  REQUIRE(2 * lk.length() >= stage.hammock->length());
  REQUIRE(std::set<int>{lk.first.vertices.front(), lk.second.vertices.front()} ==
          std::set<int>{0, 7});
  REQUIRE(std::set<int>{lk.first.vertices.back(), lk.second.vertices.back()} ==
          std::set<int>{8, 15});

  Linkage again = critcyc::nonsingular_to_linkage(g, *same.hammock);
  REQUIRE(again.first.vertices == lk.first.vertices);
  REQUIRE(again.second.vertices == lk.second.vertices);
}

TEST_CASE("find_linkage meets the twenty fifth bound on fixed inputs") {
  Graph k5 = complete(5);
  Linkage lk = critcyc::find_linkage(k5, {0, 1}, {2, 3}, path_of({0, 1, 2, 3, 4}));
  REQUIRE(lk.length() >= 1);
  REQUIRE(25 * lk.length() >= 4);
  REQUIRE(std::set<int>{lk.first.vertices.front(), lk.second.vertices.front()} ==
          std::set<int>{0, 1});
  REQUIRE(std::set<int>{lk.first.vertices.back(), lk.second.vertices.back()} ==
          std::set<int>{2, 3});

  critcyc::HammockInstance inst = critcyc::hammock_counterexample(2);
  PathWitness longest = critcyc::longest_path_exact(inst.graph);
  Linkage wide = critcyc::find_linkage(inst.graph, {0, 4}, {1, 5}, longest);
  critcyc::check_linkage(inst.graph, wide);
  REQUIRE(25 * wide.length() >= longest.length());

  REQUIRE(thrown_kind([&] {
            critcyc::find_linkage(inst.graph, inst.X, inst.Y, path_of({inst.X.first, inst.Y.first}));
          }) == ErrorKind::OverlappingXY);

  REQUIRE(thrown_kind([&] {
            critcyc::find_linkage(cycle_graph(5), {0, 1}, {2, 3}, path_of({0, 1, 2, 3}));
          }) == ErrorKind::NotThreeConnected);
}

TEST_CASE("find_linkage sweep over all disjoint end pairs") {
  std::vector<Graph> graphs;
  graphs.push_back(complete(5));
  graphs.push_back(complete(6));
  graphs.push_back(critcyc::wheel_graph(5));
  graphs.push_back(critcyc::prism_graph(3));
  for (const Graph& g : graphs) {
    PathWitness longest = critcyc::longest_path_exact(g);
    std::vector<int> vs = g.vertices();
    int n = static_cast<int>(vs.size());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (c == a || c == b) continue;
          for (int d = c + 1; d < n; ++d) {
            if (d == a || d == b) continue;
            Linkage lk =
                critcyc::find_linkage(g, {vs[a], vs[b]}, {vs[c], vs[d]}, longest);
            critcyc::check_linkage(g, lk);
            REQUIRE(25 * lk.length() >= longest.length());
            REQUIRE(std::set<int>{lk.first.vertices.front(), lk.second.vertices.front()} ==
                    std::set<int>{vs[a], vs[b]});
            REQUIRE(std::set<int>{lk.first.vertices.back(), lk.second.vertices.back()} ==
                    std::set<int>{vs[c], vs[d]});
          }
        }
  }
}

TEST_CASE("overlapping end pairs cap the best linkage on the counterexample") {
  critcyc::HammockInstance inst = critcyc::hammock_counterexample(2);
  REQUIRE(best_linkage_total(inst.graph, inst.X, inst.Y) == 3 * 2 - 1);
}
