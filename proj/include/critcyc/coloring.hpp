#pragma once

#include "graph.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace critcyc {

struct Coloring {
  std::map<int, int> assignment;
  int palette_size = 0;
};

inline bool is_proper_coloring(const Graph& g, const Coloring& col) {
  for (int v : g.vertices()) {
    auto it = col.assignment.find(v);
    if (it == col.assignment.end()) return false;
    if (it->second < 1 || it->second > col.palette_size) return false;
  }
  for (auto [u, v] : g.edge_list())
    if (col.assignment.at(u) == col.assignment.at(v)) return false;
  return true;
}

namespace detail {

struct ColorSearch {
  int n = 0;
  int palette = 0;
  bool capped = false;
  std::vector<int> ids;
  std::vector<std::vector<int>> adj;
  std::vector<int> degree;
  std::vector<int> color;
  std::vector<std::uint64_t> forbidden;
  std::vector<std::vector<int>> neighbor_count;
  long long budget = kDefaultOracleBudget;
  long long nodes = 0;

  ColorSearch(const Graph& g, int c, long long budget_limit)
      : palette(c), budget(budget_limit) {
    ids = g.vertices();
    n = static_cast<int>(ids.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[ids[i]] = i;
    adj.assign(n, {});
    degree.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int w : g.neighbor_set(ids[i])) adj[i].push_back(index.at(w));
      degree[i] = static_cast<int>(adj[i].size());
    }
    color.assign(n, 0);
    forbidden.assign(n, 0);
    neighbor_count.assign(n, std::vector<int>(c + 1, 0));
  }

  int saturation(int v) const { return __builtin_popcountll(forbidden[v]); }

  int pick() const {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      if (best == -1 || saturation(v) > saturation(best) ||
          (saturation(v) == saturation(best) && degree[v] > degree[best]))
        best = v;
    }
    return best;
  }

  void assign(int v, int c) {
    color[v] = c;
    for (int w : adj[v])
      if (++neighbor_count[w][c] == 1) forbidden[w] |= 1ull << c;
  }

  void unassign(int v, int c) {
    color[v] = 0;
    for (int w : adj[v])
      if (--neighbor_count[w][c] == 0) forbidden[w] &= ~(1ull << c);
  }

  bool solve(int colored, int max_used) {
    if (++nodes > budget)
      fail(ErrorKind::BudgetExceeded,
           "coloring search exceeded " + std::to_string(budget) + " nodes");
    if (colored == n) return true;
    int v = pick();
    if (saturation(v) >= palette) return false;
    int cap = capped ? std::min(palette, max_used + 1) : palette;
    for (int c = 1; c <= cap; ++c) {
      if ((forbidden[v] >> c) & 1ull) continue;
      assign(v, c);
      if (solve(colored + 1, std::max(max_used, c))) return true;
      unassign(v, c);
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<Coloring> find_coloring(const Graph& g, int c,
                                             const std::map<int, int>& pin = {},
                                             long long budget = kDefaultOracleBudget) {
  if (c < 1) fail(ErrorKind::BadArgument, "palette must have at least one color");
  if (c > 62) fail(ErrorKind::BadArgument, "palette too large for this solver");
  detail::ColorSearch search(g, c, budget);
  std::map<int, int> index;
  for (int i = 0; i < search.n; ++i) index[search.ids[i]] = i;

  int colored = 0;
  int max_used = 0;
  for (auto [v, col] : pin) {
    if (!g.has_vertex(v)) fail(ErrorKind::InfeasiblePin, "pinned vertex not in graph");
    if (col < 1 || col > c) fail(ErrorKind::InfeasiblePin, "pinned color outside palette");
    int i = index.at(v);
    if ((search.forbidden[i] >> col) & 1ull)
      fail(ErrorKind::InfeasiblePin, "pin assigns adjacent vertices the same color");
    search.assign(i, col);
    ++colored;
    max_used = std::max(max_used, col);
  }
  search.capped = pin.empty();

  if (!search.solve(colored, max_used)) return std::nullopt;

  Coloring out;
  out.palette_size = c;
  for (int i = 0; i < search.n; ++i) out.assignment[search.ids[i]] = search.color[i];
  if (!is_proper_coloring(g, out))
    fail(ErrorKind::BadArgument, "internal: solver produced an improper coloring");
  return out;
}

struct CriticalityReport {
  int k = 0;
  bool is_critical = false;
  std::optional<Coloring> chromatic_witness;
  std::map<std::pair<int, int>, Coloring> per_edge;
};

inline CriticalityReport is_k_critical(const Graph& g, int k,
                                       long long budget = kDefaultOracleBudget) {
  if (k < 2) fail(ErrorKind::BadArgument, "criticality needs k at least 2");
  CriticalityReport report;
  report.k = k;
  report.chromatic_witness = find_coloring(g, k, {}, budget);
  if (find_coloring(g, k - 1, {}, budget).has_value()) return report;
  std::map<std::pair<int, int>, Coloring> certificates;
  for (auto [u, v] : g.edge_list()) {
    Graph h = g;
    h.remove_edge(u, v);
    auto col = find_coloring(h, k - 1, {}, budget);
    if (!col.has_value()) return report;
    certificates[{u, v}] = *col;
  }
  report.is_critical = true;
  report.per_edge = std::move(certificates);
  return report;
}

inline std::pair<bool, bool> two_cut_type(const Graph& g, int u, int v, int c,
                                          long long budget = kDefaultOracleBudget) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
    fail(ErrorKind::BadArgument, "need two distinct graph vertices");
  bool type_one = false;
  if (!g.has_edge(u, v))
    type_one = find_coloring(g, c, {{u, 1}, {v, 1}}, budget).has_value();
  bool type_two = false;
  if (c >= 2) type_two = find_coloring(g, c, {{u, 1}, {v, 2}}, budget).has_value();
  return {type_one, type_two};
}

struct TwoCutSplit {
  int u = 0;
  int v = 0;
  Graph G1;
  Graph G2;
  Graph G1_plus;
  Graph G2_contract;
  int merged_vertex = 0;
};

inline TwoCutSplit split_two_cut(const Graph& g, int u, int v, int k,
                                 long long budget = kDefaultOracleBudget) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
    fail(ErrorKind::BadArgument, "need two distinct graph vertices");
  Graph rest = g;
  rest.remove_vertex(u);
  rest.remove_vertex(v);
  auto comps = components(rest);
  if (comps.size() < 2) fail(ErrorKind::NotACut, "removing the pair leaves the graph connected");
  if (comps.size() > 2)
    fail(ErrorKind::NotExactlyTwoComponents,
         "removing the pair leaves " + std::to_string(comps.size()) + " components");
  if (g.has_edge(u, v))
    fail(ErrorKind::AdjacentCutPair, "cut pair of a critical graph must be non-adjacent");

  auto side = [&](const std::vector<int>& comp) {
    std::set<int> keep(comp.begin(), comp.end());
    keep.insert(u);
    keep.insert(v);
    return g.induced(keep);
  };
  Graph a = side(comps[0]);
  Graph b = side(comps[1]);
  auto ta = two_cut_type(a, u, v, k - 1, budget);
  auto tb = two_cut_type(b, u, v, k - 1, budget);
  if (ta == std::pair{false, true} && tb == std::pair{true, false}) {
    std::swap(a, b);
    std::swap(ta, tb);
  }
  if (ta != std::pair{true, false} || tb != std::pair{false, true})
    fail(ErrorKind::TypeClassificationFailed,
         "sides are not exclusively type one and type two; input is not k-critical");

  TwoCutSplit split;
  split.u = u;
  split.v = v;
  split.G1 = std::move(a);
  split.G2 = std::move(b);
  split.G1_plus = plus_edge(split.G1, u, v);
  split.G2_contract = contract_pair(split.G2, u, v, &split.merged_vertex);

  for (int w : split.G2.neighbor_set(u))
    if (split.G2.has_edge(v, w))
      fail(ErrorKind::TypeClassificationFailed,
           "cut pair shares a neighbor on the type-two side; input is not k-critical");
  if (!is_k_critical(split.G1_plus, k, budget).is_critical)
    fail(ErrorKind::TypeClassificationFailed,
         "type-one side plus the cut edge failed the k-criticality check");
  if (!is_k_critical(split.G2_contract, k, budget).is_critical)
    fail(ErrorKind::TypeClassificationFailed,
         "type-two side with the cut pair identified failed the k-criticality check");
  return split;
}

}  // namespace critcyc
