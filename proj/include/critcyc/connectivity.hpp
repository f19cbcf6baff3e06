#pragma once

#include "graph.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace critcyc {

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;
  std::set<int> cut_vertices;
};

inline BlockDecomposition blocks(const Graph& g) {
  BlockDecomposition out;
  std::map<int, int> num, low;
  int timer = 0;
  std::vector<std::pair<int, int>> estack;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    num[v] = low[v] = ++timer;
    int children = 0;
    for (int w : g.neighbor_set(v)) {
      if (w == parent) continue;
      if (num.count(w) == 0) {
        estack.emplace_back(v, w);
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) {
          if (parent != -1 || children >= 2) out.cut_vertices.insert(v);
          std::set<int> blk;
          while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            blk.insert(a);
            blk.insert(b);
            if (a == v && b == w) break;
          }
          out.blocks.emplace_back(blk.begin(), blk.end());
        }
      } else if (num[w] < num[v]) {
        estack.emplace_back(v, w);
        low[v] = std::min(low[v], num[w]);
      }
    }
  };

  for (int v : g.vertices())
    if (num.count(v) == 0) {
      if (g.degree(v) == 0) {
        out.blocks.push_back({v});
        num[v] = ++timer;
      } else {
        dfs(v, -1);
      }
    }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

struct ConnectivityReport {
  int level = 0;
  std::optional<std::set<int>> separator;
};

inline ConnectivityReport connectivity(const Graph& g) {
  ConnectivityReport rep;
  int n = g.n();
  if (n == 0) return rep;
  if (!is_connected(g)) {
    if (n >= 2) rep.separator = std::set<int>{};
    return rep;
  }
  if (n < 2) return rep;

  BlockDecomposition bd = blocks(g);
  if (n == 2 || !bd.cut_vertices.empty()) {
    rep.level = 1;
    if (!bd.cut_vertices.empty() && n >= 3)
      rep.separator = std::set<int>{*bd.cut_vertices.begin()};
    return rep;
  }

  std::vector<int> vs = g.vertices();
  std::optional<std::set<int>> two_cut;
  for (size_t i = 0; i < vs.size() && !two_cut; ++i)
    for (size_t j = i + 1; j < vs.size() && !two_cut; ++j) {
      Graph h = g;
      h.remove_vertex(vs[i]);
      h.remove_vertex(vs[j]);
      if (h.n() >= 1 && !is_connected(h)) two_cut = std::set<int>{vs[i], vs[j]};
    }

  if (n >= 4 && !two_cut) {
    rep.level = 3;
    return rep;
  }
  rep.level = 2;
  if (n >= 4) rep.separator = two_cut;
  return rep;
}

namespace detail {

struct FlowNetwork {
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  std::vector<int> ids;
  std::map<int, int> index;
  std::vector<int> arc_to;
  std::vector<int> residual;
  std::vector<int> capacity;
  std::vector<std::vector<int>> adj;
  int big = 0;

  int in_node(int v) const { return 2 + 2 * index.at(v); }
  int out_node(int v) const { return 3 + 2 * index.at(v); }

  int add_arc(int from, int to, int cap) {
    int id = static_cast<int>(arc_to.size());
    arc_to.push_back(to);
    residual.push_back(cap);
    capacity.push_back(cap);
    adj[from].push_back(id);
    arc_to.push_back(from);
    residual.push_back(0);
    capacity.push_back(0);
    adj[to].push_back(id + 1);
    return id;
  }

  int flow_on(int arc) const { return capacity[arc] - residual[arc]; }

  void push(int arc, int amount) {
    residual[arc] -= amount;
    residual[arc ^ 1] += amount;
  }
};

inline FlowNetwork build_vertex_flow_network(const Graph& g, const std::set<int>& S,
                                             const std::set<int>& T,
                                             std::map<int, int>* source_arc,
                                             std::map<int, int>* vertex_arc,
                                             std::map<int, int>* sink_arc,
                                             std::map<std::pair<int, int>, int>* edge_arc) {
  FlowNetwork net;
  net.ids = g.vertices();
  for (size_t i = 0; i < net.ids.size(); ++i) net.index[net.ids[i]] = static_cast<int>(i);
  net.adj.assign(2 + 2 * net.ids.size(), {});
  net.big = g.n() + 2;

  for (int v : net.ids)
    if (S.count(v)) (*source_arc)[v] = net.add_arc(FlowNetwork::kSource, net.in_node(v), net.big);
  for (int v : net.ids) (*vertex_arc)[v] = net.add_arc(net.in_node(v), net.out_node(v), 1);
  for (int u : net.ids)
    for (int w : g.neighbor_set(u))
      if (!S.count(w) && !T.count(u))
        (*edge_arc)[{u, w}] = net.add_arc(net.out_node(u), net.in_node(w), net.big);
  for (int v : net.ids)
    if (T.count(v)) (*sink_arc)[v] = net.add_arc(net.out_node(v), FlowNetwork::kSink, net.big);
  return net;
}

inline bool flow_augment_once(FlowNetwork& net) {
  std::vector<int> via(net.adj.size(), -1);
  std::deque<int> queue{FlowNetwork::kSource};
  via[FlowNetwork::kSource] = -2;
  while (!queue.empty() && via[FlowNetwork::kSink] == -1) {
    int u = queue.front();
    queue.pop_front();
    for (int arc : net.adj[u]) {
      int w = net.arc_to[arc];
      if (net.residual[arc] > 0 && via[w] == -1) {
        via[w] = arc;
        queue.push_back(w);
      }
    }
  }
  if (via[FlowNetwork::kSink] == -1) return false;
  for (int node = FlowNetwork::kSink; node != FlowNetwork::kSource;) {
    int arc = via[node];
    net.push(arc, 1);
    node = net.arc_to[arc ^ 1];
  }
  return true;
}

inline std::vector<std::vector<int>> flow_paths(const FlowNetwork& net,
                                                const std::map<int, int>& source_arc) {
  std::vector<std::vector<int>> paths;
  for (const auto& [s, arc] : source_arc) {
    if (net.flow_on(arc) <= 0) continue;
    std::vector<int> path{s};
    while (true) {
      int hop = -2;
      for (int a : net.adj[net.out_node(path.back())]) {
        if ((a & 1) != 0 || net.flow_on(a) <= 0) continue;
        hop = net.arc_to[a] == FlowNetwork::kSink ? -1 : net.ids[(net.arc_to[a] - 2) / 2];
        break;
      }
      if (hop == -2) fail(ErrorKind::BadArgument, "internal: flow walk stalled");
      if (hop == -1) break;
      path.push_back(hop);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace detail

struct MengerResult {
  std::optional<std::vector<std::vector<int>>> paths;
  std::optional<std::set<int>> separator;
};

inline MengerResult menger_paths(const Graph& g, const std::set<int>& S, const std::set<int>& T,
                                 int r) {
  if (r < 1) fail(ErrorKind::BadArgument, "need r >= 1");
  for (int v : S)
    if (!g.has_vertex(v)) fail(ErrorKind::BadArgument, "S vertex not in graph");
  for (int v : T)
    if (!g.has_vertex(v)) fail(ErrorKind::BadArgument, "T vertex not in graph");

  std::map<int, int> source_arc, vertex_arc, sink_arc;
  std::map<std::pair<int, int>, int> edge_arc;
  detail::FlowNetwork net =
      detail::build_vertex_flow_network(g, S, T, &source_arc, &vertex_arc, &sink_arc, &edge_arc);

  int flow = 0;
  while (flow < r && detail::flow_augment_once(net)) ++flow;

  MengerResult result;
  if (flow >= r) {
    result.paths = detail::flow_paths(net, source_arc);
    return result;
  }

  std::set<int> reachable;
  std::deque<int> queue{detail::FlowNetwork::kSource};
  std::vector<char> seen(net.adj.size(), 0);
  seen[detail::FlowNetwork::kSource] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int arc : net.adj[u])
      if (net.residual[arc] > 0 && !seen[net.arc_to[arc]]) {
        seen[net.arc_to[arc]] = 1;
        queue.push_back(net.arc_to[arc]);
      }
  }
  std::set<int> separator;
  for (int v : net.ids)
    if (seen[net.in_node(v)] && !seen[net.out_node(v)]) separator.insert(v);
  result.separator = std::move(separator);
  return result;
}

inline std::vector<std::vector<int>> augment_paths(const Graph& g, const std::set<int>& S,
                                                   const std::set<int>& T,
                                                   const std::vector<std::vector<int>>& given) {
  std::set<int> used, old_starts, old_ends;
  for (const auto& path : given) {
    if (path.empty()) fail(ErrorKind::BadArgument, "empty path in given family");
    if (!S.count(path.front()) || !T.count(path.back()))
      fail(ErrorKind::BadArgument, "given path must run from S to T");
    if (path.size() == 1 && (!S.count(path[0]) || !T.count(path[0])))
      fail(ErrorKind::BadArgument, "single-vertex path needs a vertex in both S and T");
    if (path.size() > 1 && (T.count(path.front()) || S.count(path.back())))
      fail(ErrorKind::BadArgument, "nontrivial given path may not start in T or end in S");
    for (size_t i = 0; i < path.size(); ++i) {
      if (!g.has_vertex(path[i])) fail(ErrorKind::BadArgument, "given path leaves the graph");
      if (i + 1 < path.size() && !g.has_edge(path[i], path[i + 1]))
        fail(ErrorKind::BadArgument, "given path uses a missing edge");
      if (i > 0 && i + 1 < path.size() && (S.count(path[i]) || T.count(path[i])))
        fail(ErrorKind::BadArgument, "given path interior meets S or T");
      if (!used.insert(path[i]).second)
        fail(ErrorKind::BadArgument, "given paths are not vertex-disjoint");
    }
    old_starts.insert(path.front());
    old_ends.insert(path.back());
  }

  std::map<int, int> source_arc, vertex_arc, sink_arc;
  std::map<std::pair<int, int>, int> edge_arc;
  detail::FlowNetwork net =
      detail::build_vertex_flow_network(g, S, T, &source_arc, &vertex_arc, &sink_arc, &edge_arc);

  for (const auto& path : given) {
    net.push(source_arc.at(path.front()), 1);
    for (int v : path) net.push(vertex_arc.at(v), 1);
    for (size_t i = 0; i + 1 < path.size(); ++i) net.push(edge_arc.at({path[i], path[i + 1]}), 1);
    net.push(sink_arc.at(path.back()), 1);
  }

  if (!detail::flow_augment_once(net))
    fail(ErrorKind::NotSufficientlyConnected, "no augmenting path exists");

  std::vector<std::vector<int>> paths = detail::flow_paths(net, source_arc);
  std::set<int> new_starts, new_ends;
  for (const auto& p : paths) {
    new_starts.insert(p.front());
    new_ends.insert(p.back());
  }
  for (int s : old_starts)
    if (!new_starts.count(s)) fail(ErrorKind::BadArgument, "internal: lost a start vertex");
  for (int t : old_ends)
    if (!new_ends.count(t)) fail(ErrorKind::BadArgument, "internal: lost an end vertex");
  return paths;
}

inline std::optional<std::vector<int>> bfs_path(const Graph& g, const std::set<int>& sources,
                                                const std::set<int>& targets,
                                                const std::set<int>& banned = {}) {
  std::map<int, int> via;
  std::deque<int> queue;
  for (int s : sources)
    if (g.has_vertex(s) && !banned.count(s)) {
      via[s] = s;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (targets.count(v)) {
      std::vector<int> path{v};
      while (via.at(path.back()) != path.back()) path.push_back(via.at(path.back()));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : g.neighbor_set(v))
      if (!banned.count(w) && via.count(w) == 0) {
        via[w] = v;
        queue.push_back(w);
      }
  }
  return std::nullopt;
}

}  // namespace critcyc
