#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "critcyc/coloring.hpp"
#include "critcyc/connectivity.hpp"
#include "critcyc/decomposition.hpp"
#include "critcyc/graph.hpp"
#include "critcyc/linkage.hpp"
#include "critcyc/numbers.hpp"
#include "critcyc/oracle.hpp"

namespace critcyc {

namespace detail {

inline long long min_exponent_reaching(long long base, long long target) {
  require_internal(base >= 2, "internal: exponent base below two");
  long long e = 0;
  while (!pow_at_least(static_cast<u128>(base), static_cast<std::uint64_t>(e),
                       static_cast<u128>(std::max<long long>(target, 1))))
    ++e;
  return e;
}

inline long long hundred_scaled_bound(long long k, long long value) {
  long long L = 0;
  while (!pow_at_least(static_cast<u128>(k), static_cast<std::uint64_t>(100 * L),
                       static_cast<u128>(std::max<long long>(value, 1))))
    ++L;
  return L;
}

inline void require_levels_within(const RootedTree& tree, long long k, const char* what) {
  std::vector<long long> counts = tree.level_counts();
  for (size_t l = 0; l < counts.size(); ++l)
    if (!pow_at_least(static_cast<u128>(k), l, static_cast<u128>(counts[l])))
      fail(ErrorKind::LevelBoundViolated, what);
}

}  // namespace detail

inline PathWitness long_path_via_dfs(const Graph& g, int k) {
  if (k < 4) fail(ErrorKind::BadArgument, "need k at least 4");
  if (g.n() == 0) fail(ErrorKind::BadArgument, "empty graph");
  int root = g.has_vertex(0) ? 0 : g.vertices().front();
  RootedTree tree = dfs_spanning_tree(g, root);
  int deep = root;
  for (int v : tree.vertices())
    if (tree.depth_of(v) > tree.depth_of(deep)) deep = v;

  PathWitness out;
  out.vertices = detail::rev_vec(tree.path_to_root(deep));
  out.claimed_length = detail::min_exponent_reaching(k - 2, g.n());
  out.trace.push_back("depth-first search from vertex " + std::to_string(root));
  out.trace.push_back("deepest vertex " + std::to_string(deep) + " sits at depth " +
                      std::to_string(tree.depth_of(deep)));
  check_path_witness(g, out);
  return out;
}

struct LevelReport {
  int excluded = 0;
  std::vector<long long> counts;
  std::vector<bool> level_ok;
  bool all_ok = true;
};

inline LevelReport level_certificate(const Graph& g, int k, const std::set<int>& excluded,
                                     const RootedTree& tree) {
  if (k < 4) fail(ErrorKind::BadArgument, "need k at least 4");
  std::set<int> keep;
  for (int v : g.vertices())
    if (!excluded.count(v)) keep.insert(v);
  for (int v : excluded)
    if (!g.has_vertex(v)) fail(ErrorKind::BadArgument, "excluded vertex not in the graph");
  if (keep.empty()) fail(ErrorKind::BadArgument, "nothing left once the excluded set is removed");
  Graph reduced = g.induced(keep);
  if (!is_dfs_tree(reduced, tree))
    fail(ErrorKind::NotDFSTree, "tree is not a depth-first spanning tree of the reduced graph");

  LevelReport report;
  report.excluded = static_cast<int>(excluded.size());
  report.counts = tree.level_counts();
  u128 anchor = sat_pow(static_cast<u128>(k - 1), static_cast<std::uint64_t>(report.excluded));
  for (size_t j = 0; j < report.counts.size(); ++j) {
    u128 cap = j == 0   ? u128{1}
               : j == 1 ? anchor
                        : sat_mul(sat_pow(static_cast<u128>(k - 2), j - 2), anchor);
    bool ok = static_cast<u128>(report.counts[j]) <= cap;
    report.level_ok.push_back(ok);
    report.all_ok = report.all_ok && ok;
  }
  return report;
}

inline std::pair<int, int> heavy_vertex(const RootedTree& tree, int root,
                                        const std::map<int, long long>& phi, int k) {
  if (k < 2) fail(ErrorKind::BadArgument, "need k at least 2");
  if (!tree.has_vertex(root) || root != tree.root)
    fail(ErrorKind::BadArgument, "stated root does not match the tree");
  for (const auto& [v, wv] : phi)
    if (wv < 0) fail(ErrorKind::BadArgument, "weights must be nonnegative");
  auto value = [&](int v) {
    auto it = phi.find(v);
    return it == phi.end() ? 0LL : it->second;
  };
  if (value(root) != 0) fail(ErrorKind::BadArgument, "root weight must be zero");

  long long total = 0;
  for (int v : tree.vertices()) total += value(v);
  if (total == 0) fail(ErrorKind::AllZeroWeights, "every vertex weight is zero");
  detail::require_levels_within(tree, k, "a tree level outgrew its k-power cap");

  std::vector<long long> level_sum(static_cast<size_t>(tree.max_depth()) + 1, 0);
  for (int v : tree.vertices()) level_sum[static_cast<size_t>(tree.depth_of(v))] += value(v);
  for (size_t l = 1; l < level_sum.size(); ++l) {
    if (sat_mul(sat_pow(2, l), static_cast<u128>(level_sum[l])) < static_cast<u128>(total))
      continue;
    int best = -1;
    for (int v : tree.vertices()) {
      if (tree.depth_of(v) != static_cast<int>(l)) continue;
      if (best < 0 || value(v) > value(best)) best = v;
    }
    detail::require_internal(best >= 0 && value(best) > 0, "internal: empty heavy level");
    detail::require_internal(
        sat_mul(sat_pow(static_cast<u128>(k), 2 * l), static_cast<u128>(value(best))) >=
            static_cast<u128>(total),
        "internal: heavy vertex misses the power inequality");
    return {best, static_cast<int>(l)};
  }
  detail::require_internal(false, "internal: no level carries its weight share");
  return {-1, -1};
}

struct RootedDecomposition {
  StandardDecomposition dec;
  int root = -1;
  int k = 0;
  std::map<int, std::pair<int, int>> anchors;
  std::map<int, long long> weight;
  std::map<int, long long> subtree_weight;
};

inline RootedDecomposition root_decomposition(const Graph& g, const StandardDecomposition& dec,
                                              int k, long long budget = kDefaultOracleBudget) {
  if (k < 3) fail(ErrorKind::BadArgument, "need k at least 3");
  std::vector<int> nodes = dec.nodes();
  if (nodes.empty()) fail(ErrorKind::BadArgument, "decomposition has no nodes");

  RootedDecomposition out;
  out.dec = dec;
  out.k = k;
  bool unclassified = false;
  for (const auto& [t, list] : dec.virtual_edges)
    for (const VirtualEdge& e : list)
      if (e.classification == EdgeClass::Unclassified) unclassified = true;
  if (unclassified) out.dec = classify_virtual_edges(g, dec, k, budget);

  for (int r : nodes) {
    if (dec.tree_neighbors(r).size() > 1) continue;
    std::set<int> banned;
    for (int s : dec.tree_neighbors(r)) {
      auto [a, b] = dec.adhesion(r, s);
      banned = {a, b};
    }
    const std::set<int>& bag = dec.bags.at(r);
    for (int u : bag) {
      if (banned.count(u)) continue;
      for (int v : bag) {
        if (v <= u || banned.count(v)) continue;
        if (!g.has_edge(u, v)) continue;
        out.root = r;
        out.anchors[r] = {u, v};
        break;
      }
      if (out.root >= 0) break;
    }
    if (out.root >= 0) break;
  }
  if (out.root < 0)
    fail(ErrorKind::BadArgument, "no leaf bag holds an adjacent pair clear of its adhesion");

  std::map<int, int> parent{{out.root, out.root}};
  std::vector<int> order{out.root};
  for (size_t i = 0; i < order.size(); ++i)
    for (int s : dec.tree_neighbors(order[i]))
      if (!parent.count(s)) {
        parent[s] = order[i];
        order.push_back(s);
      }
  if (order.size() != nodes.size())
    fail(ErrorKind::BadArgument, "decomposition tree is not connected");
  out.dec.tree = make_rooted_tree(out.root, parent);

  for (int t : nodes) {
    if (t != out.root) {
      auto [a, b] = out.dec.adhesion(t, out.dec.tree.parent_of(t));
      out.anchors[t] = {std::min(a, b), std::max(a, b)};
    }
    Graph h = torso(out.dec, t);
    long long wt;
    if (is_cycle_graph(h)) {
      wt = h.m();
    } else {
      NucleusResult nuc = nucleus(g, out.dec, t, k, budget);
      wt = nuc.degenerate ? h.m() : nuc.graph.m();
    }
    detail::require_internal(wt > 0, "internal: node weight must be positive");
    out.weight[t] = wt;
  }

  std::vector<int> by_depth = nodes;
  std::sort(by_depth.begin(), by_depth.end(), [&](int a, int b) {
    int da = out.dec.tree.depth_of(a), db = out.dec.tree.depth_of(b);
    return da != db ? da > db : a < b;
  });
  for (int t : by_depth) {
    long long sum = out.weight.at(t);
    for (int c : out.dec.tree.children(t)) sum += out.subtree_weight.at(c);
    out.subtree_weight[t] = sum;
  }
  return out;
}

namespace detail {

inline std::set<int> piece_vertices(const RootedDecomposition& rdec, int t) {
  std::set<int> out;
  std::vector<int> stack{t};
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    const std::set<int>& bag = rdec.dec.bags.at(s);
    out.insert(bag.begin(), bag.end());
    for (int c : rdec.dec.tree.children(s)) stack.push_back(c);
  }
  return out;
}

inline Graph piece_graph(const Graph& g, const RootedDecomposition& rdec, int t) {
  return g.induced(piece_vertices(rdec, t));
}

inline RootedTree bounded_piece_tree(const Graph& g, const RootedDecomposition& rdec, int t,
                                     int deleted, int kept, long long budget) {
  Graph piece = piece_graph(g, rdec, t);
  auto [same_ok, split_ok] = two_cut_type(piece, deleted, kept, rdec.k - 1, budget);
  if (same_ok == split_ok)
    fail(ErrorKind::LevelBoundViolated,
         "piece classification is ambiguous; the host graph is not critical");

  RootedTree tree;
  if (same_ok) {
    Graph reduced = piece;
    reduced.remove_vertex(deleted);
    tree = dfs_spanning_tree(reduced, kept);
  } else {
    int gate = -1;
    for (int y : piece.neighbor_set(kept))
      if (y != deleted) {
        gate = y;
        break;
      }
    if (gate < 0)
      fail(ErrorKind::LevelBoundViolated, "kept separator vertex has no edge into the piece");
    int merged = -1;
    Graph squeezed = contract_pair(piece, deleted, kept, &merged);
    RootedTree raw = dfs_spanning_tree(squeezed, merged, std::pair{merged, gate});
    std::map<int, int> parent;
    for (const auto& [v, p] : raw.parent)
      parent[v == merged ? kept : v] = p == merged ? kept : p;
    tree = make_rooted_tree(kept, parent);
  }

  require_internal(static_cast<long long>(tree.vertices().size()) == piece.n() - 1,
                   "internal: piece tree is not spanning");
  for (const auto& [v, p] : tree.parent)
    if (v != tree.root)
      require_internal(v != deleted && p != deleted && piece.has_edge(v, p),
                       "internal: piece tree uses a phantom edge");
  require_levels_within(tree, rdec.k, "a tree level outgrew its k-power cap");
  return tree;
}

}  // namespace detail

inline RootedTree bounded_spanning_tree(const Graph& g, const RootedDecomposition& rdec, int t,
                                        long long budget = kDefaultOracleBudget) {
  if (!rdec.weight.count(t)) fail(ErrorKind::BadArgument, "no such decomposition node");
  if (t == rdec.root) fail(ErrorKind::BadArgument, "the root has no separator to a parent");
  auto [x, xp] = rdec.anchors.at(t);
  return detail::bounded_piece_tree(g, rdec, t, x, xp, budget);
}

inline PathWitness expand_virtual_path(const Graph& g, const RootedDecomposition& rdec, int t,
                                       const PathWitness& torso_path) {
  if (!rdec.weight.count(t)) fail(ErrorKind::BadArgument, "no such decomposition node");
  Graph h = torso(rdec.dec, t);
  check_path_witness(h, torso_path);
  std::pair<int, int> front_pair = rdec.anchors.at(t);
  bool front_virtual = !g.has_edge(front_pair.first, front_pair.second);

  std::map<std::pair<int, int>, int> owner;
  for (int c : rdec.dec.tree.children(t)) {
    auto [a, b] = rdec.dec.adhesion(t, c);
    owner[{std::min(a, b), std::max(a, b)}] = c;
  }

  std::vector<int> vs{torso_path.vertices.front()};
  long long expanded = 0;
  for (size_t i = 0; i + 1 < torso_path.vertices.size(); ++i) {
    int u = torso_path.vertices[i], v = torso_path.vertices[i + 1];
    if (g.has_edge(u, v)) {
      vs.push_back(v);
      continue;
    }
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (front_virtual && key == front_pair)
      fail(ErrorKind::VirtualParentEdgeOnPath, "path crosses the virtual edge to the parent");
    auto it = owner.find(key);
    if (it == owner.end())
      fail(ErrorKind::BadArgument, "internal: virtual edge has no owning child");
    const std::set<int>& bag = rdec.dec.bags.at(it->second);
    int mid = -1;
    for (int w : bag)
      if (w != u && w != v) {
        mid = w;
        break;
      }
    detail::require_internal(mid >= 0, "internal: child bag has no third vertex");
    Graph piece = detail::piece_graph(g, rdec, it->second);
    std::set<int> hub = piece.neighbor_set(mid);
    Graph cut = piece;
    cut.remove_vertex(mid);
    MengerResult mr = menger_paths(cut, {u, v}, hub, 2);
    if (!mr.paths.has_value())
      fail(ErrorKind::NotSufficientlyConnected,
           "internal: no two disjoint routes around the separator pair");
    std::vector<int> pu = (*mr.paths)[0], pv = (*mr.paths)[1];
    if (pu.front() != u) std::swap(pu, pv);
    detail::require_internal(pu.front() == u && pv.front() == v,
                             "internal: route starts are mismatched");
    std::vector<int> middle =
        detail::glue({pu, std::vector<int>{pu.back(), mid, pv.back()}, detail::rev_vec(pv)});
    vs.insert(vs.end(), middle.begin() + 1, middle.end());
    ++expanded;
  }

  PathWitness out;
  out.vertices = std::move(vs);
  out.claimed_length = torso_path.claimed_length;
  out.trace = torso_path.trace;
  if (expanded > 0)
    out.trace.push_back("expanded " + std::to_string(expanded) +
                        " virtual edges through child pieces");
  detail::require_internal(out.length() >= torso_path.length(),
                           "internal: expansion shortened the path");
  check_path_witness(g, out);
  return out;
}

inline PathWitness key_path(const Graph& g, const RootedDecomposition& rdec, int t,
                            long long budget = kDefaultOracleBudget) {
  if (!rdec.weight.count(t)) fail(ErrorKind::BadArgument, "no such decomposition node");
  auto [x, xp] = rdec.anchors.at(t);
  long long total = rdec.subtree_weight.at(t);
  long long wt = rdec.weight.at(t);
  long long claimed = detail::hundred_scaled_bound(rdec.k, total);
  Graph h = torso(rdec.dec, t);
  std::string header = "node " + std::to_string(t) + ": torso weight " + std::to_string(wt) +
                       ", subtree weight " + std::to_string(total);

  auto finish = [&](PathWitness w, std::vector<std::string> trace) {
    w.claimed_length = claimed;
    trace.insert(trace.end(), w.trace.begin(), w.trace.end());
    w.trace = std::move(trace);
    std::set<int> scope = detail::piece_vertices(rdec, t);
    for (int v : w.vertices)
      detail::require_internal(scope.count(v) > 0, "internal: path left its piece");
    check_path_witness(g, w);
    int lo = std::min(w.vertices.front(), w.vertices.back());
    int hi = std::max(w.vertices.front(), w.vertices.back());
    detail::require_internal(lo == x && hi == xp, "internal: path misses its anchors");
    return w;
  };

  if (is_cycle_graph(h)) {
    std::vector<int> cyc;
    int prev = x, cur = x;
    while (true) {
      cyc.push_back(cur);
      std::vector<int> nb = h.neighbors(cur);
      detail::require_internal(nb.size() == 2, "internal: cycle torso vertex off degree two");
      int nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
      if (cur == x) break;
    }
    std::map<int, int> cpos;
    for (size_t i = 0; i < cyc.size(); ++i) cpos[cyc[i]] = static_cast<int>(i);
    detail::require_internal(cpos.count(xp) > 0, "internal: anchor missing from the cycle torso");
    std::vector<int> fwd = detail::cyc_walk(cyc, 0, cpos.at(xp), 1);
    std::vector<int> bwd = detail::cyc_walk(cyc, 0, cpos.at(xp), -1);
    auto steps_on_pair = [&](const std::vector<int>& arc) {
      for (size_t i = 0; i + 1 < arc.size(); ++i)
        if (std::min(arc[i], arc[i + 1]) == x && std::max(arc[i], arc[i + 1]) == xp) return true;
      return false;
    };
    std::vector<int> arc = fwd.size() >= bwd.size() ? fwd : bwd;
    if (!g.has_edge(x, xp) && steps_on_pair(arc)) arc = arc == fwd ? bwd : fwd;
    detail::require_internal(!(!g.has_edge(x, xp) && steps_on_pair(arc)),
                             "internal: both cycle arcs cross the parent edge");
    PathWitness around;
    around.vertices = arc;
    return finish(expand_virtual_path(g, rdec, t, around),
                  {header, "cycle torso: took the long way around"});
  }

  if (5 * wt >= total) {
    CycleWitness cyc = long_cycle_3connected(h, budget);
    std::set<int> on_cycle(cyc.vertices.begin(), cyc.vertices.end());
    MengerResult mr = menger_paths(h, {x, xp}, on_cycle, 2);
    if (!mr.paths.has_value())
      fail(ErrorKind::NotSufficientlyConnected,
           "internal: no two disjoint routes from the anchors to the cycle");
    std::vector<int> p1 = (*mr.paths)[0], p2 = (*mr.paths)[1];
    if (p1.front() != x) std::swap(p1, p2);
    detail::require_internal(p1.front() == x && p2.front() == xp,
                             "internal: route starts are mismatched");
    std::map<int, int> cpos;
    for (size_t i = 0; i < cyc.vertices.size(); ++i) cpos[cyc.vertices[i]] = static_cast<int>(i);
    std::vector<int> fwd = detail::cyc_walk(cyc.vertices, cpos.at(p1.back()), cpos.at(p2.back()), 1);
    std::vector<int> bwd =
        detail::cyc_walk(cyc.vertices, cpos.at(p1.back()), cpos.at(p2.back()), -1);
    auto steps_on_pair = [&](const std::vector<int>& arc) {
      for (size_t i = 0; i + 1 < arc.size(); ++i)
        if (std::min(arc[i], arc[i + 1]) == x && std::max(arc[i], arc[i + 1]) == xp) return true;
      return false;
    };
    std::vector<int> arc = fwd.size() >= bwd.size() ? fwd : bwd;
    if (!g.has_edge(x, xp) && steps_on_pair(arc)) arc = arc == fwd ? bwd : fwd;
    detail::require_internal(!(!g.has_edge(x, xp) && steps_on_pair(arc)),
                             "internal: both cycle arcs cross the parent edge");
    PathWitness assembled;
    assembled.vertices = detail::glue({p1, arc, detail::rev_vec(p2)});
    return finish(expand_virtual_path(g, rdec, t, assembled),
                  {header, "torso holds a fifth of the subtree weight: walked its long cycle"});
  }

  long long rest = total - wt;
  std::vector<int> clear_children;
  std::map<int, int> partner_of;
  long long clear_sum = 0, low_sum = 0, high_sum = 0;
  for (int c : rdec.dec.tree.children(t)) {
    auto [a, b] = rdec.dec.adhesion(t, c);
    bool hits_low = a == x || b == x, hits_high = a == xp || b == xp;
    if (hits_low && hits_high)
      fail(ErrorKind::BadArgument, "child adhesion equals the parent anchors");
    long long sw = rdec.subtree_weight.at(c);
    if (!hits_low && !hits_high) {
      clear_children.push_back(c);
      clear_sum += sw;
    } else {
      partner_of[c] = hits_low ? (a == x ? b : a) : (a == xp ? b : a);
      (hits_low ? low_sum : high_sum) += sw;
    }
  }
  detail::require_internal(clear_sum + low_sum + high_sum == rest,
                           "internal: child weights do not add up");

  if (4 * clear_sum >= 3 * rest) {
    int heaviest = -1;
    for (int c : clear_children)
      if (heaviest < 0 || rdec.subtree_weight.at(c) > rdec.subtree_weight.at(heaviest))
        heaviest = c;
    detail::require_internal(heaviest >= 0, "internal: no clear child to descend into");
    detail::require_internal(5 * wt * rdec.subtree_weight.at(heaviest) >= total,
                             "internal: heaviest clear child is too light");
    PathWitness spine = longest_path_exact(h, budget);
    Linkage link = find_linkage(h, {x, xp}, rdec.anchors.at(heaviest), spine, budget);
    PathWitness first = link.first, second = link.second;
    if (first.vertices.front() != x) std::swap(first, second);
    first.claimed_length = 0;
    second.claimed_length = 0;
    PathWitness lead = expand_virtual_path(g, rdec, t, first);
    PathWitness tail = expand_virtual_path(g, rdec, t, second);
    PathWitness inner = key_path(g, rdec, heaviest, budget);
    std::vector<int> mid = inner.vertices;
    if (mid.front() != lead.vertices.back()) mid = detail::rev_vec(mid);
    PathWitness assembled;
    assembled.vertices = detail::glue({lead.vertices, mid, detail::rev_vec(tail.vertices)});
    std::vector<std::string> trace{
        header, "descended into the heaviest child clear of the anchors: node " +
                    std::to_string(heaviest)};
    trace.insert(trace.end(), inner.trace.begin(), inner.trace.end());
    return finish(std::move(assembled), std::move(trace));
  }

  int shared = x, far_end = xp;
  if (low_sum < high_sum) std::swap(shared, far_end);
  detail::require_internal(t != rdec.root, "internal: the root cannot reach the spread case");
  detail::require_internal(8 * std::max(low_sum, high_sum) >= rest,
                           "internal: anchor-side children are too light");
  std::map<int, long long> phi;
  std::map<int, int> child_at;
  for (const auto& [c, v] : partner_of) {
    auto [a, b] = rdec.dec.adhesion(t, c);
    if (a != shared && b != shared) continue;
    detail::require_internal(child_at.emplace(v, c).second,
                             "internal: two children share an adhesion");
    phi[v] = rdec.subtree_weight.at(c);
  }
  RootedTree reach = detail::bounded_piece_tree(g, rdec, t, shared, far_end, budget);
  auto [target, depth] = heavy_vertex(reach, far_end, phi, rdec.k);
  std::vector<int> approach = reach.path(far_end, target);
  PathWitness inner = key_path(g, rdec, child_at.at(target), budget);
  std::vector<int> mid = inner.vertices;
  if (mid.front() != target) mid = detail::rev_vec(mid);
  PathWitness assembled;
  assembled.vertices = detail::glue({approach, mid});
  std::vector<std::string> trace{
      header,
      "anchor-side weight concentrates at vertex " + std::to_string(target) + " at depth " +
          std::to_string(depth) + ": descended into node " + std::to_string(child_at.at(target))};
  trace.insert(trace.end(), inner.trace.begin(), inner.trace.end());
  return finish(std::move(assembled), std::move(trace));
}

inline CycleWitness long_cycle_critical(const Graph& g, int k,
                                        long long budget = kDefaultOracleBudget) {
  if (k < 3) fail(ErrorKind::BadArgument, "need k at least 3");
  CriticalityReport crit = is_k_critical(g, k, budget);
  if (!crit.is_critical) fail(ErrorKind::NotCritical, "input graph is not k-critical");

  StandardDecomposition dec = standard_tree_decomposition(g);
  RootedDecomposition rdec = root_decomposition(g, dec, k, budget);
  detail::require_internal(rdec.subtree_weight.at(rdec.root) >= g.m() && g.m() >= g.n(),
                           "internal: aggregate weight fell below the edge count");

  PathWitness spine = key_path(g, rdec, rdec.root, budget);
  CycleWitness out;
  out.vertices = spine.vertices;
  out.claimed_length = detail::hundred_scaled_bound(k, g.n());
  out.trace = spine.trace;
  out.trace.push_back("closed the anchor path with the real edge between its ends");
  check_cycle_witness(g, out);
  return out;
}

}  // namespace critcyc
