#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critcyc {

enum class ErrorKind {
  BadArgument,
  BadWitness,
  ParseError,
  DisconnectedInput,
  BadFirstEdge,
  NotSufficientlyConnected,
  Acyclic,
  BudgetExceeded,
  BipartiteInput,
  InfeasiblePin,
  AdjacentCutPair,
  NotACut,
  NotExactlyTwoComponents,
  TypeClassificationFailed,
  EdgeNotPresent,
  OverlappingVertexSets,
  DegreeTooHigh,
  BadSelection,
  UnsupportedOrder,
  NotTwoConnected,
  NotThreeConnected,
  NotDFSTree,
  AllZeroWeights,
  LevelBoundViolated,
  OverlappingXY,
  InvalidHammock,
  SingularInput,
  VirtualParentEdgeOnPath,
  NotCritical,
  GenerationFailed,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::BadWitness: return "BadWitness";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::BadFirstEdge: return "BadFirstEdge";
    case ErrorKind::NotSufficientlyConnected: return "NotSufficientlyConnected";
    case ErrorKind::Acyclic: return "Acyclic";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BipartiteInput: return "BipartiteInput";
    case ErrorKind::InfeasiblePin: return "InfeasiblePin";
    case ErrorKind::AdjacentCutPair: return "AdjacentCutPair";
    case ErrorKind::NotACut: return "NotACut";
    case ErrorKind::NotExactlyTwoComponents: return "NotExactlyTwoComponents";
    case ErrorKind::TypeClassificationFailed: return "TypeClassificationFailed";
    case ErrorKind::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorKind::OverlappingVertexSets: return "OverlappingVertexSets";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::BadSelection: return "BadSelection";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::NotDFSTree: return "NotDFSTree";
    case ErrorKind::AllZeroWeights: return "AllZeroWeights";
    case ErrorKind::LevelBoundViolated: return "LevelBoundViolated";
    case ErrorKind::OverlappingXY: return "OverlappingXY";
    case ErrorKind::InvalidHammock: return "InvalidHammock";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::VirtualParentEdgeOnPath: return "VirtualParentEdgeOnPath";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline std::pair<int, int> norm_edge(int u, int v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

class Graph {
 public:
  std::map<int, std::string> labels;

  Graph() = default;

  static Graph from_edges(const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& extra_vertices = {}) {
    Graph g;
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (int v : extra_vertices) g.add_vertex(v);
    return g;
  }

  void add_vertex(int v) {
    if (v < 0) fail(ErrorKind::BadArgument, "negative vertex id");
    adj_.try_emplace(v);
  }

  void add_edge(int u, int v) {
    if (u == v) fail(ErrorKind::BadArgument, "loop at vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  void remove_edge(int u, int v) {
    auto iu = adj_.find(u), iv = adj_.find(v);
    if (iu != adj_.end()) iu->second.erase(v);
    if (iv != adj_.end()) iv->second.erase(u);
  }

  void remove_vertex(int v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) return;
    for (int w : it->second) adj_[w].erase(v);
    adj_.erase(it);
    labels.erase(v);
  }

  bool has_vertex(int v) const { return adj_.count(v) > 0; }

  bool has_edge(int u, int v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) > 0;
  }

  int n() const { return static_cast<int>(adj_.size()); }

  long long m() const {
    long long total = 0;
    for (const auto& [v, ns] : adj_) total += static_cast<long long>(ns.size());
    return total / 2;
  }

  std::vector<int> vertices() const {
    std::vector<int> vs;
    vs.reserve(adj_.size());
    for (const auto& [v, ns] : adj_) vs.push_back(v);
    return vs;
  }

  const std::set<int>& neighbor_set(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) fail(ErrorKind::BadArgument, "unknown vertex " + std::to_string(v));
    return it->second;
  }

  std::vector<int> neighbors(int v) const {
    const auto& ns = neighbor_set(v);
    return std::vector<int>(ns.begin(), ns.end());
  }

  int degree(int v) const { return static_cast<int>(neighbor_set(v).size()); }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> es;
    for (const auto& [v, ns] : adj_)
      for (int w : ns)
        if (v < w) es.emplace_back(v, w);
    return es;
  }

  Graph induced(const std::set<int>& keep) const {
    Graph g;
    for (int v : keep)
      if (has_vertex(v)) {
        g.add_vertex(v);
        auto lit = labels.find(v);
        if (lit != labels.end()) g.labels[v] = lit->second;
      }
    for (const auto& [u, v] : edge_list())
      if (keep.count(u) && keep.count(v)) g.add_edge(u, v);
    return g;
  }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  std::map<int, std::set<int>> adj_;
};

inline Graph plus_edge(const Graph& g, int u, int v) {
  Graph h = g;
  if (!h.has_vertex(u) || !h.has_vertex(v))
    fail(ErrorKind::BadArgument, "plus_edge endpoint not in graph");
  if (u != v && !h.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

inline Graph contract_pair(const Graph& g, int u, int v, int* merged_out = nullptr) {
  if (u == v || !g.has_vertex(u) || !g.has_vertex(v))
    fail(ErrorKind::BadArgument, "contract_pair needs two distinct graph vertices");
  int merged = std::min(u, v);
  int gone = std::max(u, v);
  Graph h = g;
  h.remove_edge(u, v);
  for (int w : g.neighbor_set(gone))
    if (w != merged && w != gone) h.add_edge(merged, w);
  h.remove_vertex(gone);
  if (merged_out != nullptr) *merged_out = merged;
  return h;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<int> comp, queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int w : g.neighbor_set(v))
        if (seen.insert(w).second) queue.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.n() >= 1 && components(g).size() == 1;
}

struct RootedTree {
  int root = -1;
  std::map<int, int> parent;
  std::map<int, int> depth;
  bool dfs_valid = false;

  bool has_vertex(int v) const { return parent.count(v) > 0; }

  std::vector<int> vertices() const {
    std::vector<int> vs;
    vs.reserve(parent.size());
    for (const auto& [v, p] : parent) vs.push_back(v);
    return vs;
  }

  int depth_of(int v) const {
    auto it = depth.find(v);
    if (it == depth.end()) fail(ErrorKind::BadArgument, "vertex not in tree");
    return it->second;
  }

  int parent_of(int v) const {
    auto it = parent.find(v);
    if (it == parent.end()) fail(ErrorKind::BadArgument, "vertex not in tree");
    return it->second;
  }

  bool is_ancestor(int a, int d) const {
    int da = depth_of(a);
    int v = d;
    int dv = depth_of(d);
    while (dv > da) {
      v = parent_of(v);
      --dv;
    }
    return v == a;
  }

  std::vector<int> path_to_root(int v) const {
    std::vector<int> p{v};
    while (v != root) {
      v = parent_of(v);
      p.push_back(v);
    }
    return p;
  }

  std::vector<int> path(int u, int v) const {
    std::vector<int> up{u}, down{v};
    int a = u, b = v;
    while (depth_of(a) > depth_of(b)) up.push_back(a = parent_of(a));
    while (depth_of(b) > depth_of(a)) down.push_back(b = parent_of(b));
    while (a != b) {
      up.push_back(a = parent_of(a));
      down.push_back(b = parent_of(b));
    }
    down.pop_back();
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  }

  std::vector<int> children(int v) const {
    std::vector<int> cs;
    for (const auto& [w, p] : parent)
      if (p == v && w != root) cs.push_back(w);
    return cs;
  }

  int max_depth() const {
    int d = 0;
    for (const auto& [v, dv] : depth) d = std::max(d, dv);
    return d;
  }

  std::vector<long long> level_counts() const {
    std::vector<long long> counts(static_cast<size_t>(max_depth()) + 1, 0);
    for (const auto& [v, dv] : depth) ++counts[static_cast<size_t>(dv)];
    return counts;
  }
};

inline RootedTree make_rooted_tree(int root, const std::map<int, int>& parent) {
  RootedTree t;
  t.root = root;
  t.parent = parent;
  auto pit = parent.find(root);
  if (pit == parent.end() || pit->second != root)
    fail(ErrorKind::BadArgument, "root must be its own parent");
  t.depth[root] = 0;
  bool grew = true;
  while (t.depth.size() < parent.size() && grew) {
    grew = false;
    for (const auto& [v, p] : parent) {
      if (t.depth.count(v) || !t.depth.count(p)) continue;
      t.depth[v] = t.depth.at(p) + 1;
      grew = true;
    }
  }
  if (t.depth.size() != parent.size())
    fail(ErrorKind::BadArgument, "parent map does not describe a tree");
  return t;
}

inline RootedTree dfs_spanning_tree(const Graph& g, int root,
                                    std::optional<std::pair<int, int>> first_edge = {}) {
  if (!g.has_vertex(root)) fail(ErrorKind::BadArgument, "root not in graph");
  int forced = -1;
  if (first_edge.has_value()) {
    auto [a, b] = *first_edge;
    int other = a == root ? b : (b == root ? a : -1);
    if (other < 0 || !g.has_edge(root, other))
      fail(ErrorKind::BadFirstEdge, "first edge must join the root to a neighbor");
    forced = other;
  }

  RootedTree t;
  t.root = root;
  t.parent[root] = root;
  t.depth[root] = 0;
  t.dfs_valid = true;

  std::map<int, std::vector<int>> order;
  auto order_of = [&](int v) -> const std::vector<int>& {
    auto it = order.find(v);
    if (it == order.end()) {
      std::vector<int> ns = g.neighbors(v);
      if (v == root && forced >= 0) ns = {forced};
      it = order.emplace(v, std::move(ns)).first;
    }
    return it->second;
  };

  std::vector<int> stack{root};
  std::map<int, size_t> cursor;
  while (!stack.empty()) {
    int v = stack.back();
    const auto& ns = order_of(v);
    size_t& i = cursor[v];
    if (i == ns.size()) {
      stack.pop_back();
      continue;
    }
    int w = ns[i++];
    if (t.parent.count(w) == 0) {
      t.parent[w] = v;
      t.depth[w] = t.depth[v] + 1;
      stack.push_back(w);
    }
  }

  if (static_cast<int>(t.parent.size()) != g.n())
    fail(ErrorKind::DisconnectedInput, "search did not reach every vertex");
  return t;
}

inline bool is_dfs_tree(const Graph& g, const RootedTree& t) {
  if (!t.has_vertex(t.root)) return false;
  if (static_cast<int>(t.parent.size()) != g.n()) return false;
  for (const auto& [v, p] : t.parent) {
    if (!g.has_vertex(v)) return false;
    if (v == t.root) {
      if (p != v || t.depth_of(v) != 0) return false;
      continue;
    }
    if (!g.has_edge(v, p)) return false;
    if (t.depth_of(v) != t.depth_of(p) + 1) return false;
  }
  for (const auto& [u, v] : g.edge_list())
    if (!t.is_ancestor(u, v) && !t.is_ancestor(v, u)) return false;
  return true;
}

struct PathWitness {
  std::vector<int> vertices;
  long long claimed_length = 0;
  std::vector<std::string> trace;

  long long length() const { return static_cast<long long>(vertices.size()) - 1; }
};

struct CycleWitness {
  std::vector<int> vertices;
  long long claimed_length = 0;
  std::vector<std::string> trace;

  long long length() const { return static_cast<long long>(vertices.size()); }
};

inline void check_path_witness(const Graph& g, const PathWitness& w) {
  if (w.vertices.empty()) fail(ErrorKind::BadWitness, "empty path");
  std::set<int> seen;
  for (int v : w.vertices) {
    if (!g.has_vertex(v)) fail(ErrorKind::BadWitness, "path vertex not in host");
    if (!seen.insert(v).second) fail(ErrorKind::BadWitness, "repeated path vertex");
  }
  for (size_t i = 0; i + 1 < w.vertices.size(); ++i)
    if (!g.has_edge(w.vertices[i], w.vertices[i + 1]))
      fail(ErrorKind::BadWitness, "consecutive path vertices not adjacent");
  if (w.length() < w.claimed_length)
    fail(ErrorKind::BadWitness, "path shorter than claimed");
}

inline void check_cycle_witness(const Graph& g, const CycleWitness& w) {
  if (w.vertices.size() < 3) fail(ErrorKind::BadWitness, "cycle needs at least 3 vertices");
  std::set<int> seen;
  for (int v : w.vertices) {
    if (!g.has_vertex(v)) fail(ErrorKind::BadWitness, "cycle vertex not in host");
    if (!seen.insert(v).second) fail(ErrorKind::BadWitness, "repeated cycle vertex");
  }
  for (size_t i = 0; i < w.vertices.size(); ++i)
    if (!g.has_edge(w.vertices[i], w.vertices[(i + 1) % w.vertices.size()]))
      fail(ErrorKind::BadWitness, "consecutive cycle vertices not adjacent");
  if (w.length() < w.claimed_length)
    fail(ErrorKind::BadWitness, "cycle shorter than claimed");
}

inline Graph read_dimacs(std::istream& in) {
  Graph g;
  long long n = -1, m = -1, seen_edges = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      if (n >= 0 || !(ls >> fmt >> n >> m) || fmt != "edge" || n < 1 || m < 0)
        fail(ErrorKind::ParseError, "bad problem line at line " + std::to_string(lineno));
      for (long long v = 0; v < n; ++v) g.add_vertex(static_cast<int>(v));
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (n < 0) fail(ErrorKind::ParseError, "edge before problem line");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
        fail(ErrorKind::ParseError, "bad edge at line " + std::to_string(lineno));
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++seen_edges;
    } else {
      fail(ErrorKind::ParseError, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) fail(ErrorKind::ParseError, "missing problem line");
  if (g.m() != m)
    fail(ErrorKind::ParseError, "edge count mismatch: header says " + std::to_string(m) +
                                    ", found " + std::to_string(g.m()));
  return g;
}

inline Graph read_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

inline std::string to_dimacs(const Graph& g) {
  std::vector<int> vs = g.vertices();
  std::map<int, long long> rank;
  for (size_t i = 0; i < vs.size(); ++i) rank[vs[i]] = static_cast<long long>(i) + 1;
  std::ostringstream out;
  out << "p edge " << g.n() << " " << g.m() << "\n";
  for (const auto& [u, v] : g.edge_list())
    out << "e " << rank[u] << " " << rank[v] << "\n";
  return out.str();
}

}  // namespace critcyc
