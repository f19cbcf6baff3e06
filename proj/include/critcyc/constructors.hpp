#pragma once

#include "graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace critcyc {

inline Graph complete_graph(int n) {
  if (n < 1) fail(ErrorKind::BadArgument, "complete graph needs at least one vertex");
  Graph g;
  g.add_vertex(0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorKind::BadArgument, "cycle needs at least three vertices");
  Graph g;
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph join_graphs(const Graph& a, const Graph& b) {
  Graph g;
  for (int v : a.vertices()) {
    if (b.has_vertex(v))
      fail(ErrorKind::OverlappingVertexSets, "join requires disjoint vertex sets");
    g.add_vertex(v);
  }
  for (int v : b.vertices()) g.add_vertex(v);
  for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) g.add_edge(u, v);
  for (int u : a.vertices())
    for (int v : b.vertices()) g.add_edge(u, v);
  return g;
}

inline Graph wheel_graph(int rim) {
  Graph hub;
  hub.add_vertex(rim);
  return join_graphs(cycle_graph(rim), hub);
}

inline Graph prism_graph(int n) {
  if (n < 3) fail(ErrorKind::BadArgument, "prism needs cycles of length at least three");
  Graph g;
  for (int v = 0; v < n; ++v) {
    g.add_edge(v, (v + 1) % n);
    g.add_edge(n + v, n + (v + 1) % n);
    g.add_edge(v, n + v);
  }
  return g;
}

inline Graph petersen_graph() {
  Graph g;
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline Graph shift_ids(const Graph& g, int offset) {
  Graph out;
  for (int v : g.vertices()) out.add_vertex(v + offset);
  for (auto [u, v] : g.edge_list()) out.add_edge(u + offset, v + offset);
  for (const auto& [v, name] : g.labels) out.labels[v + offset] = name;
  return out;
}

inline Graph hajos_sum(const Graph& K, std::pair<int, int> k_edge, const Graph& L,
                       std::pair<int, int> l_edge) {
  for (int v : K.vertices())
    if (L.has_vertex(v))
      fail(ErrorKind::OverlappingVertexSets, "summands must have disjoint vertex sets");
  auto [k1, k2] = k_edge;
  auto [l1, l2] = l_edge;
  if (!K.has_edge(k1, k2)) fail(ErrorKind::EdgeNotPresent, "first edge not in first summand");
  if (!L.has_edge(l1, l2)) fail(ErrorKind::EdgeNotPresent, "second edge not in second summand");

  Graph g;
  for (int v : K.vertices()) g.add_vertex(v);
  for (int v : L.vertices())
    if (v != l1) g.add_vertex(v);
  for (auto [u, v] : K.edge_list())
    if (std::minmax(u, v) != std::minmax(k1, k2)) g.add_edge(u, v);
  for (auto [u, v] : L.edge_list()) {
    if (std::minmax(u, v) == std::minmax(l1, l2)) continue;
    int a = u == l1 ? k1 : u;
    int b = v == l1 ? k1 : v;
    g.add_edge(a, b);
  }
  g.add_edge(k2, l2);
  for (const auto& [v, name] : K.labels) g.labels[v] = name;
  for (const auto& [v, name] : L.labels)
    if (v != l1) g.labels[v] = name;
  auto tag = [](const Graph& h, int v) {
    auto it = h.labels.find(v);
    return it != h.labels.end() ? it->second : std::to_string(v);
  };
  g.labels[k1] = tag(K, k1) + "=" + tag(L, l1);
  return g;
}

struct GallaiSpec {
  int k = 0;
  RootedTree T;
  int x0 = 0;
  std::map<int, Graph> family;
  std::map<std::pair<int, int>, int> selection;
};

inline Graph gallai_graph(const GallaiSpec& spec) {
  std::vector<int> nodes = spec.T.vertices();
  if (nodes.empty()) fail(ErrorKind::BadArgument, "construction tree is empty");
  std::map<int, std::vector<int>> tree_adj;
  for (int t : nodes) {
    if (t != spec.T.root) tree_adj[t].push_back(spec.T.parent_of(t));
    for (int c : spec.T.children(t)) tree_adj[t].push_back(c);
    std::sort(tree_adj[t].begin(), tree_adj[t].end());
    if (static_cast<int>(tree_adj[t].size()) > spec.k - 1)
      fail(ErrorKind::DegreeTooHigh, "construction tree has a node of degree at least k");
  }

  std::set<int> seen{spec.x0};
  for (int t : nodes) {
    auto it = spec.family.find(t);
    if (it == spec.family.end())
      fail(ErrorKind::BadArgument, "tree node has no assigned graph");
    const Graph& h = it->second;
    if (!h.has_vertex(spec.x0))
      fail(ErrorKind::BadArgument, "assigned graph misses the hub vertex");
    for (int v : h.vertices()) {
      if (v == spec.x0) continue;
      if (!seen.insert(v).second)
        fail(ErrorKind::BadArgument, "assigned graphs overlap outside the hub");
    }
  }

  for (int t : nodes) {
    const Graph& h = spec.family.at(t);
    std::set<int> chosen;
    for (int s : tree_adj[t]) {
      auto it = spec.selection.find({t, s});
      if (it == spec.selection.end())
        fail(ErrorKind::BadSelection, "missing selection for a tree edge");
      int v = it->second;
      if (v == spec.x0 || !h.has_vertex(v) || !h.has_edge(spec.x0, v))
        fail(ErrorKind::BadSelection, "selected vertex is not a hub neighbor");
      if (!chosen.insert(v).second)
        fail(ErrorKind::BadSelection, "selections at one node must be distinct");
    }
  }

  Graph g;
  for (int t : nodes)
    for (auto [u, v] : spec.family.at(t).edge_list()) g.add_edge(u, v);
  for (int t : nodes)
    for (int s : tree_adj[t]) {
      if (s < t) continue;
      int vts = spec.selection.at({t, s});
      int vst = spec.selection.at({s, t});
      g.remove_edge(spec.x0, vts);
      g.remove_edge(spec.x0, vst);
      g.add_edge(vts, vst);
    }
  g.labels[spec.x0] = "x0";
  return g;
}

inline Graph gallai_regular(int k, int h) {
  if (k < 4 || h < 0) fail(ErrorKind::BadArgument, "need k at least 4 and height at least 0");
  GallaiSpec spec;
  spec.k = k;
  spec.x0 = 0;

  std::map<int, int> parent;
  std::vector<int> level{0};
  parent[0] = 0;
  int next_id = 1;
  for (int depth = 0; depth < h; ++depth) {
    std::vector<int> below;
    for (int t : level) {
      int fanout = t == 0 ? k - 1 : k - 2;
      for (int c = 0; c < fanout; ++c) {
        parent[next_id] = t;
        below.push_back(next_id);
        ++next_id;
      }
    }
    level = below;
  }
  spec.T = make_rooted_tree(0, parent);

  std::map<int, std::vector<int>> tree_adj;
  for (auto [t, p] : parent)
    if (t != 0) {
      tree_adj[t].push_back(p);
      tree_adj[p].push_back(t);
    }
  for (auto& [t, lst] : tree_adj) std::sort(lst.begin(), lst.end());

  for (int t = 0; t < next_id; ++t) {
    int base = 1 + (k - 1) * t;
    Graph own;
    own.add_vertex(0);
    for (int j = 0; j < k - 1; ++j) {
      own.add_edge(0, base + j);
      for (int j2 = j + 1; j2 < k - 1; ++j2) own.add_edge(base + j, base + j2);
    }
    spec.family[t] = own;
    int pick = 0;
    for (int s : tree_adj[t]) spec.selection[{t, s}] = base + pick++;
  }
  return gallai_graph(spec);
}

struct HammockInstance {
  Graph graph;
  std::pair<int, int> X;
  std::pair<int, int> Y;
};

inline HammockInstance hammock_counterexample(int t) {
  if (t < 2) fail(ErrorKind::BadArgument, "need t at least 2");
  Graph g;
  for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < t; ++i) {
    int prev = i;
    for (int j = 0; j < t - 1; ++j) {
      int fresh = t + i * (t - 1) + j;
      g.add_edge(prev, fresh);
      prev = fresh;
    }
  }
  int x = t * t, y = t * t + 1, z = t * t + 2;
  g.add_edge(x, y);
  g.add_edge(x, z);
  g.add_edge(y, z);
  for (int v = 0; v < t * t; ++v) {
    g.add_edge(x, v);
    g.add_edge(y, v);
    g.add_edge(z, v);
  }
  g.labels[x] = "x";
  g.labels[y] = "y";
  g.labels[z] = "z";
  return {std::move(g), {x, z}, {y, z}};
}

inline Graph k_critical_of_order(int k, int n) {
  if (k < 4) fail(ErrorKind::BadArgument, "need k at least 4");
  if (n < k) fail(ErrorKind::BadArgument, "order below k is impossible");
  if (n == k + 1)
    fail(ErrorKind::UnsupportedOrder, "no k-critical graph on k+1 vertices exists");

  auto seed_order = [&](int m) { return m >= k && (m - k) % 2 == 0; };
  std::vector<char> reachable(n + 1, 0);
  for (int m = k; m <= n; ++m)
    if (seed_order(m)) reachable[m] = 1;
  for (int m = k; m <= n; ++m) {
    if (reachable[m]) continue;
    for (int a = k; a + k - 1 <= m; ++a)
      if (reachable[a] && reachable[m + 1 - a]) {
        reachable[m] = 2;
        break;
      }
  }
  if (!reachable[n])
    fail(ErrorKind::UnsupportedOrder,
         "order " + std::to_string(n) + " is not reachable from the seed families");

  std::function<Graph(int)> build = [&](int m) -> Graph {
    if (seed_order(m)) {
      int cyc = m - (k - 3);
      if (cyc == 3) return complete_graph(k);
      Graph clique;
      clique.add_vertex(cyc);
      for (int u = cyc; u < m; ++u)
        for (int v = u + 1; v < m; ++v) clique.add_edge(u, v);
      return join_graphs(cycle_graph(cyc), clique);
    }
    for (int a = k; a + k - 1 <= m; ++a) {
      int b = m + 1 - a;
      if (a <= n && b >= k && reachable[a] && reachable[b] && b <= n) {
        Graph first = build(a);
        Graph second = shift_ids(build(b), a);
        auto e1 = first.edge_list().front();
        auto e2 = second.edge_list().front();
        return hajos_sum(first, e1, second, e2);
      }
    }
    fail(ErrorKind::UnsupportedOrder, "internal: reachability marked but not constructible");
  };
  return build(n);
}

}  // namespace critcyc
