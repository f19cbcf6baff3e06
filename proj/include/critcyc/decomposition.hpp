#pragma once

#include "coloring.hpp"
#include "connectivity.hpp"
#include "graph.hpp"
#include "numbers.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace critcyc {

enum class EdgeClass { Unclassified, Additive, Contractive };

struct VirtualEdge {
  int u = 0;
  int v = 0;
  int neighbor = -1;
  EdgeClass classification = EdgeClass::Unclassified;
};

struct StandardDecomposition {
  RootedTree tree;
  std::map<int, std::set<int>> bags;
  std::map<std::pair<int, int>, std::pair<int, int>> adhesions;
  std::map<int, Graph> torsos;
  std::map<int, std::vector<VirtualEdge>> virtual_edges;

  std::vector<int> nodes() const { return tree.vertices(); }

  std::pair<int, int> adhesion(int s, int t) const {
    auto it = adhesions.find(std::minmax(s, t));
    if (it == adhesions.end()) fail(ErrorKind::BadArgument, "nodes are not tree-adjacent");
    return it->second;
  }

  std::vector<int> tree_neighbors(int t) const {
    std::vector<int> out;
    if (t != tree.root) out.push_back(tree.parent_of(t));
    for (int c : tree.children(t)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline bool is_cycle_graph(const Graph& g) {
  if (g.n() < 3 || !is_connected(g)) return false;
  for (int v : g.vertices())
    if (g.degree(v) != 2) return false;
  return true;
}

namespace detail {

inline std::optional<std::pair<int, int>> least_two_cut(const Graph& g) {
  std::vector<int> vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      Graph h = g;
      h.remove_vertex(vs[i]);
      h.remove_vertex(vs[j]);
      if (h.n() > 0 && !is_connected(h)) return std::make_pair(vs[i], vs[j]);
    }
  return std::nullopt;
}

struct DecompositionBuilder {
  const Graph& g;
  int next_id = 0;
  std::map<int, std::set<int>> bags;
  std::vector<std::tuple<int, int, std::pair<int, int>>> links;

  explicit DecompositionBuilder(const Graph& host) : g(host) {}

  std::vector<int> build(const Graph& piece) {
    std::optional<std::pair<int, int>> cut;
    if (!is_cycle_graph(piece)) cut = least_two_cut(piece);
    if (!cut.has_value()) {
      int id = next_id++;
      auto vs = piece.vertices();
      bags[id] = std::set<int>(vs.begin(), vs.end());
      return {id};
    }
    auto [u, v] = *cut;
    Graph rest = piece;
    rest.remove_vertex(u);
    rest.remove_vertex(v);
    auto comps = components(rest);

    std::vector<int> made;
    std::vector<int> attach;
    for (const auto& comp : comps) {
      std::set<int> keep(comp.begin(), comp.end());
      keep.insert(u);
      keep.insert(v);
      Graph side = plus_edge(piece.induced(keep), u, v);
      std::vector<int> sub = build(side);
      int at = -1;
      for (int id : sub)
        if (bags.at(id).count(u) && bags.at(id).count(v) && (at == -1 || id < at)) at = id;
      if (at == -1) fail(ErrorKind::BadArgument, "internal: side lost its split pair");
      attach.push_back(at);
      made.insert(made.end(), sub.begin(), sub.end());
    }
    for (size_t i = 0; i + 1 < attach.size(); ++i)
      links.emplace_back(attach[i], attach[i + 1], std::minmax(u, v));
    return made;
  }

  Graph torso_of(int id) const {
    std::set<int> bag = bags.at(id);
    Graph t = g.induced(bag);
    for (const auto& [a, b, pair] : links) {
      if (a != id && b != id) continue;
      if (pair.first != pair.second) t.add_edge(pair.first, pair.second);
    }
    return t;
  }

  void merge_polygons() {
    bool again = true;
    while (again) {
      again = false;
      std::sort(links.begin(), links.end());
      for (size_t i = 0; i < links.size(); ++i) {
        auto [a, b, pair] = links[i];
        if (g.has_edge(pair.first, pair.second)) continue;
        bool pair_elsewhere = false;
        for (size_t j = 0; j < links.size(); ++j) {
          if (j == i) continue;
          auto [x, y, p] = links[j];
          if (p == pair && (x == a || x == b || y == a || y == b)) pair_elsewhere = true;
        }
        if (pair_elsewhere) continue;
        if (!is_cycle_graph(torso_of(a)) || !is_cycle_graph(torso_of(b))) continue;
        int keep = std::min(a, b), gone = std::max(a, b);
        bags[keep].insert(bags[gone].begin(), bags[gone].end());
        bags.erase(gone);
        std::vector<std::tuple<int, int, std::pair<int, int>>> next;
        for (size_t j = 0; j < links.size(); ++j) {
          if (j == i) continue;
          auto [x, y, p] = links[j];
          if (x == gone) x = keep;
          if (y == gone) y = keep;
          next.emplace_back(std::min(x, y), std::max(x, y), p);
        }
        links = std::move(next);
        again = true;
        break;
      }
    }
  }
};

inline void check_decomposition_axioms(const Graph& g, const StandardDecomposition& dec) {
  std::set<int> covered;
  for (const auto& [t, bag] : dec.bags) covered.insert(bag.begin(), bag.end());
  for (int v : g.vertices())
    if (!covered.count(v)) fail(ErrorKind::BadArgument, "internal: bag cover failed");
  for (auto [u, v] : g.edge_list()) {
    bool found = false;
    for (const auto& [t, bag] : dec.bags)
      if (bag.count(u) && bag.count(v)) {
        found = true;
        break;
      }
    if (!found) fail(ErrorKind::BadArgument, "internal: edge cover failed");
  }
  std::map<int, std::vector<int>> adj;
  for (const auto& [edge, pair] : dec.adhesions) {
    adj[edge.first].push_back(edge.second);
    adj[edge.second].push_back(edge.first);
  }
  for (int x : g.vertices()) {
    std::vector<int> holders;
    for (const auto& [t, bag] : dec.bags)
      if (bag.count(x)) holders.push_back(t);
    std::set<int> seen{holders.front()};
    std::vector<int> queue{holders.front()};
    std::set<int> wanted(holders.begin(), holders.end());
    while (!queue.empty()) {
      int t = queue.back();
      queue.pop_back();
      for (int s : adj[t])
        if (wanted.count(s) && seen.insert(s).second) queue.push_back(s);
    }
    if (seen.size() != wanted.size())
      fail(ErrorKind::BadArgument, "internal: bag trace disconnected");
  }
  for (const auto& [t, torso] : dec.torsos)
    if (!(is_cycle_graph(torso) || connectivity(torso).level >= 3))
      fail(ErrorKind::BadArgument, "internal: torso neither 3-connected nor a cycle");
}

}  // namespace detail

inline StandardDecomposition standard_tree_decomposition(const Graph& g) {
  if (g.n() < 3 || connectivity(g).level < 2)
    fail(ErrorKind::NotTwoConnected, "decomposition needs a 2-connected graph");

  detail::DecompositionBuilder builder(g);
  builder.build(g);
  builder.merge_polygons();

  StandardDecomposition dec;
  dec.bags = builder.bags;
  int root = dec.bags.begin()->first;
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b, pair] : builder.links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    dec.adhesions[std::minmax(a, b)] = pair;
  }
  std::map<int, int> parent{{root, root}};
  std::vector<int> queue{root};
  for (size_t i = 0; i < queue.size(); ++i) {
    int t = queue[i];
    std::sort(adj[t].begin(), adj[t].end());
    for (int s : adj[t])
      if (!parent.count(s)) {
        parent[s] = t;
        queue.push_back(s);
      }
  }
  if (parent.size() != dec.bags.size())
    fail(ErrorKind::BadArgument, "internal: decomposition tree disconnected");
  dec.tree = make_rooted_tree(root, parent);

  for (const auto& [t, bag] : dec.bags) {
    Graph torso = g.induced(bag);
    for (int s : dec.tree_neighbors(t)) {
      auto [u, v] = dec.adhesion(t, s);
      torso.add_edge(u, v);
      if (!g.has_edge(u, v)) dec.virtual_edges[t].push_back({u, v, s, EdgeClass::Unclassified});
    }
    dec.torsos[t] = std::move(torso);
    dec.virtual_edges.try_emplace(t);
  }
  detail::check_decomposition_axioms(g, dec);
  return dec;
}

inline Graph torso(const StandardDecomposition& dec, int t) {
  auto it = dec.torsos.find(t);
  if (it == dec.torsos.end()) fail(ErrorKind::BadArgument, "no such decomposition node");
  return it->second;
}

inline StandardDecomposition classify_virtual_edges(const Graph& g,
                                                    const StandardDecomposition& dec, int k,
                                                    long long budget = kDefaultOracleBudget) {
  StandardDecomposition out = dec;
  std::map<std::pair<int, int>, std::set<int>> type_one_side;
  for (auto& [t, list] : out.virtual_edges) {
    for (VirtualEdge& e : list) {
      std::pair<int, int> key = std::minmax(e.u, e.v);
      auto cached = type_one_side.find(key);
      if (cached == type_one_side.end()) {
        TwoCutSplit split = split_two_cut(g, key.first, key.second, k, budget);
        auto vs = split.G1.vertices();
        cached = type_one_side.emplace(key, std::set<int>(vs.begin(), vs.end())).first;
      }
      const std::set<int>& side = cached->second;
      const std::set<int>& bag = out.bags.at(t);
      bool in_one = true, in_two = true;
      for (int w : bag) {
        if (w == key.first || w == key.second) continue;
        if (side.count(w))
          in_two = false;
        else
          in_one = false;
      }
      if (in_one == in_two)
        fail(ErrorKind::TypeClassificationFailed,
             "bag does not sit inside exactly one side of its adhesion cut");
      e.classification = in_one ? EdgeClass::Additive : EdgeClass::Contractive;
    }
  }
  return out;
}

struct NucleusResult {
  Graph graph;
  std::map<int, int> contraction_map;
  bool degenerate = false;
  std::optional<CriticalityReport> criticality;
};

inline NucleusResult nucleus(const Graph& g, const StandardDecomposition& dec, int t, int k,
                             long long budget = kDefaultOracleBudget) {
  Graph h = torso(dec, t);
  auto it = dec.virtual_edges.find(t);
  const std::vector<VirtualEdge> empty;
  const std::vector<VirtualEdge>& list = it == dec.virtual_edges.end() ? empty : it->second;

  std::map<int, int> rep;
  for (int v : h.vertices()) rep[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };

  NucleusResult out;
  for (const VirtualEdge& e : list) {
    if (e.classification == EdgeClass::Unclassified)
      fail(ErrorKind::BadArgument, "classify virtual edges before building nuclei");
    if (e.classification != EdgeClass::Contractive) continue;
    int a = find(e.u), b = find(e.v);
    if (a == b) {
      out.degenerate = true;
      continue;
    }
    rep[std::max(a, b)] = std::min(a, b);
  }

  Graph n;
  for (int v : h.vertices()) n.add_vertex(find(v));
  for (auto [a, b] : h.edge_list()) {
    bool contracted_pair = false;
    for (const VirtualEdge& e : list)
      if (e.classification == EdgeClass::Contractive &&
          std::minmax(a, b) == std::minmax(e.u, e.v))
        contracted_pair = true;
    if (contracted_pair) continue;
    int ra = find(a), rb = find(b);
    if (ra != rb) n.add_edge(ra, rb);
  }
  for (int v : h.vertices()) out.contraction_map[v] = find(v);
  out.graph = std::move(n);
  if (out.graph.n() < 4) out.degenerate = true;
  if (!out.degenerate) out.criticality = is_k_critical(out.graph, k, budget);
  return out;
}

struct NodeChecks {
  int node = -1;
  std::set<int> bag;
  long long effective_weight = 0;
  bool adhesions_nonadjacent = true;
  bool adhesions_distinct = true;
  bool torso_three_connected = true;
  bool contractive_forest = true;
  bool nucleus_critical = true;
  bool edges_bound = true;
  bool degree_bound = true;
  bool nucleus_at_least_induced = true;
  bool torso_path_bound = true;
  std::string notes;

  bool all_pass() const {
    return adhesions_nonadjacent && adhesions_distinct && torso_three_connected &&
           contractive_forest && nucleus_critical && edges_bound && degree_bound &&
           nucleus_at_least_induced && torso_path_bound;
  }
};

struct ValidationReport {
  std::vector<NodeChecks> nodes;
  bool all_pass = true;

  std::vector<int> failing_nodes() const {
    std::vector<int> out;
    for (const auto& c : nodes)
      if (!c.all_pass()) out.push_back(c.node);
    return out;
  }
};

inline ValidationReport validate_decomposition(const Graph& g,
                                               const StandardDecomposition& dec, int k,
                                               long long budget = kDefaultOracleBudget) {
  ValidationReport report;
  for (int t : dec.nodes()) {
    NodeChecks checks;
    checks.node = t;
    checks.bag = dec.bags.at(t);
    Graph h = torso(dec, t);

    std::vector<std::pair<int, int>> incident;
    for (int s : dec.tree_neighbors(t)) incident.push_back(dec.adhesion(t, s));
    for (auto [u, v] : incident) {
      if (g.has_edge(u, v)) {
        checks.adhesions_nonadjacent = false;
        checks.notes += "adhesion " + std::to_string(u) + "-" + std::to_string(v) +
                        " is a real edge; ";
      }
    }
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : incident)
      if (!seen.insert(std::minmax(u, v)).second) {
        checks.adhesions_distinct = false;
        checks.notes += "adhesion " + std::to_string(u) + "-" + std::to_string(v) +
                        " repeats around the node; ";
      }

    checks.torso_three_connected = connectivity(h).level >= 3;
    if (!checks.torso_three_connected)
      checks.notes += "torso on " + std::to_string(h.n()) + " vertices is not 3-connected; ";

    NucleusResult nuc = nucleus(g, dec, t, k, budget);

    std::map<int, int> rep;
    auto it = dec.virtual_edges.find(t);
    if (it != dec.virtual_edges.end()) {
      for (int v : h.vertices()) rep[v] = v;
      std::function<int(int)> find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
      };
      for (const VirtualEdge& e : it->second) {
        if (e.classification != EdgeClass::Contractive) continue;
        int a = find(e.u), b = find(e.v);
        if (a == b) {
          checks.contractive_forest = false;
          checks.notes += "contractive edges close a cycle in the torso; ";
        } else {
          rep[std::max(a, b)] = std::min(a, b);
        }
      }
    }

    bool cycle_torso = is_cycle_graph(h);
    long long weight =
        cycle_torso ? static_cast<long long>(h.m()) : static_cast<long long>(nuc.graph.m());
    checks.effective_weight = weight;

    checks.nucleus_critical =
        !nuc.degenerate && nuc.criticality.has_value() && nuc.criticality->is_critical;
    if (!checks.nucleus_critical)
      checks.notes += nuc.degenerate ? "nucleus degenerates; " : "nucleus is not k-critical; ";

    checks.edges_bound = static_cast<long long>(h.m()) <= 3 * weight;
    if (!checks.edges_bound) checks.notes += "torso has more than three times the weight; ";

    long long tree_degree = static_cast<long long>(dec.tree_neighbors(t).size());
    checks.degree_bound = tree_degree <= 3 * weight;
    if (!checks.degree_bound) checks.notes += "tree degree exceeds three times the weight; ";

    checks.nucleus_at_least_induced =
        weight >= static_cast<long long>(g.induced(checks.bag).m());
    if (!checks.nucleus_at_least_induced)
      checks.notes += "weight below the induced edge count; ";

    long long path_len = longest_path_exact(h, budget).length();
    checks.torso_path_bound =
        pow_at_least(static_cast<u128>(k), static_cast<std::uint64_t>(2 * path_len),
                     static_cast<u128>(std::max<long long>(weight, 1)));
    if (!checks.torso_path_bound)
      checks.notes += "torso path shorter than half log weight over log k; ";

    report.all_pass = report.all_pass && checks.all_pass();
    report.nodes.push_back(std::move(checks));
  }
  return report;
}

}  // namespace critcyc
