#pragma once

#include "graph.hpp"
#include "numbers.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace critcyc {

inline constexpr long long kDefaultOracleBudget = 100'000'000;

inline std::optional<std::map<int, int>> bipartition(const Graph& g) {
  std::map<int, int> side;
  for (int s : g.vertices()) {
    if (side.count(s)) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : g.neighbor_set(v)) {
        auto it = side.find(w);
        if (it == side.end()) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (it->second == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

namespace detail {

inline int mask_popcount(std::uint64_t m) { return __builtin_popcountll(m); }
inline int mask_popcount(u128 m) {
  return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
         __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

inline int mask_ctz(std::uint64_t m) { return __builtin_ctzll(m); }
inline int mask_ctz(u128 m) {
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low != 0) return __builtin_ctzll(low);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
}

template <typename M>
struct ExactSearch {
  int n = 0;
  std::vector<M> adj;
  std::vector<int> ids;
  M full = 0;
  long long budget = kDefaultOracleBudget;
  long long expansions = 0;
  bool corridor = false;

  int best_metric = -1;
  std::vector<int> best;

  static M bit(int i) { return M(1) << i; }

  explicit ExactSearch(const Graph& g, long long budget_limit) : budget(budget_limit) {
    ids = g.vertices();
    n = static_cast<int>(ids.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[ids[i]] = i;
    adj.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int w : g.neighbor_set(ids[i])) adj[i] |= bit(index.at(w));
      full |= bit(i);
    }
    corridor = n >= 20;
  }

  void bump() {
    if (++expansions > budget)
      fail(ErrorKind::BudgetExceeded,
           "search exceeded " + std::to_string(budget) + " expansions");
  }

  M reach(int v, M allowed) const {
    M seen = bit(v) & allowed;
    M frontier = seen;
    while (frontier != 0) {
      M next = 0;
      M f = frontier;
      while (f != 0) {
        int u = mask_ctz(f);
        f &= f - 1;
        next |= adj[u];
      }
      next &= allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  int corridor_bound(int end, M comp) {
    std::vector<M> block_masks;
    std::map<int, std::vector<int>> cut_blocks;
    std::vector<int> num(n, 0), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
      num[v] = low[v] = ++timer;
      M cand = adj[v] & comp;
      while (cand != 0) {
        int w = mask_ctz(cand);
        cand &= cand - 1;
        if (w == parent) continue;
        if (num[w] == 0) {
          estack.emplace_back(v, w);
          dfs(w, v);
          low[v] = std::min(low[v], low[w]);
          if (low[w] >= num[v]) {
            M blk = 0;
            while (true) {
              auto [a, b] = estack.back();
              estack.pop_back();
              blk |= bit(a) | bit(b);
              if (a == v && b == w) break;
            }
            block_masks.push_back(blk);
          }
        } else if (num[w] < num[v]) {
          estack.emplace_back(v, w);
          low[v] = std::min(low[v], num[w]);
        }
      }
    };
    dfs(end, -1);

    if (block_masks.size() <= 1) return mask_popcount(comp) - 1;

    for (size_t b = 0; b < block_masks.size(); ++b) {
      for (size_t b2 = 0; b2 < b; ++b2) {
        M shared = block_masks[b] & block_masks[b2];
        while (shared != 0) {
          int c = mask_ctz(shared);
          shared &= shared - 1;
          auto& lst = cut_blocks[c];
          if (lst.empty()) {
            for (size_t b3 = 0; b3 < block_masks.size(); ++b3)
              if ((block_masks[b3] & bit(c)) != 0) lst.push_back(static_cast<int>(b3));
          }
        }
      }
    }

    std::function<int(int, int)> from_block = [&](int b, int via) -> int {
      int extend = 0;
      M cuts = block_masks[b];
      while (cuts != 0) {
        int c = mask_ctz(cuts);
        cuts &= cuts - 1;
        if (c == via) continue;
        auto it = cut_blocks.find(c);
        if (it == cut_blocks.end()) continue;
        for (int b2 : it->second)
          if (b2 != b) extend = std::max(extend, from_block(b2, c));
      }
      return mask_popcount(block_masks[b]) - 1 + extend;
    };

    int bound = 0;
    auto entry = cut_blocks.find(end);
    if (entry != cut_blocks.end()) {
      for (int b : entry->second) bound = std::max(bound, from_block(b, end));
    } else {
      for (size_t b = 0; b < block_masks.size(); ++b)
        if ((block_masks[b] & bit(end)) != 0)
          bound = std::max(bound, from_block(static_cast<int>(b), end));
    }
    return bound;
  }

  bool prune(int have, int end, M free_with_end) {
    M r = reach(end, free_with_end);
    int cheap = mask_popcount(r) - 1;
    if (have + cheap <= best_metric) return true;
    if (corridor && cheap > 4) {
      int cb = corridor_bound(end, r);
      if (have + cb <= best_metric) return true;
    }
    return false;
  }

  void path_dfs(int v, M visited, std::vector<int>& cur) {
    bump();
    int len = static_cast<int>(cur.size()) - 1;
    if (len > best_metric) {
      best_metric = len;
      best = cur;
    }
    if (prune(len, v, (full & ~visited) | bit(v))) return;
    M cand = adj[v] & ~visited;
    while (cand != 0) {
      int w = mask_ctz(cand);
      cand &= cand - 1;
      cur.push_back(w);
      path_dfs(w, visited | bit(w), cur);
      cur.pop_back();
    }
  }

  void run_paths() {
    for (int s = 0; s < n; ++s) {
      std::vector<int> cur{s};
      path_dfs(s, bit(s), cur);
    }
  }

  void cycle_dfs(int s, int v, M visited, std::vector<int>& cur, bool odd_only) {
    bump();
    int size = static_cast<int>(cur.size());
    if (size >= 3 && (adj[v] & bit(s)) != 0 && (!odd_only || size % 2 == 1) &&
        size > best_metric) {
      best_metric = size;
      best = cur;
    }
    M above = full & ~(bit(s) | (bit(s) - 1));
    M free_with_end = (above & ~visited) | bit(v);
    M r = reach(v, free_with_end);
    if ((r & adj[s]) == 0) return;
    if (prune(size, v, free_with_end)) return;
    M cand = adj[v] & above & ~visited;
    while (cand != 0) {
      int w = mask_ctz(cand);
      cand &= cand - 1;
      cur.push_back(w);
      cycle_dfs(s, w, visited | bit(w), cur, odd_only);
      cur.pop_back();
    }
  }

  void run_cycles(bool odd_only) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> cur{s};
      cycle_dfs(s, s, bit(s), cur, odd_only);
    }
  }

  std::vector<int> best_ids() const {
    std::vector<int> out;
    out.reserve(best.size());
    for (int i : best) out.push_back(ids[i]);
    return out;
  }
};

template <typename Fn>
auto with_mask_kind(const Graph& g, Fn&& fn) {
  if (g.n() <= 64) return fn(static_cast<std::uint64_t>(0));
  if (g.n() <= 128) return fn(static_cast<u128>(0));
  fail(ErrorKind::BadArgument, "exact search supports at most 128 vertices");
}

inline bool is_forest(const Graph& g) {
  return g.m() == static_cast<long long>(g.n()) -
                      static_cast<long long>(components(g).size());
}

}  // namespace detail

inline PathWitness longest_path_exact(const Graph& g,
                                      long long budget = kDefaultOracleBudget) {
  if (g.n() == 0) fail(ErrorKind::BadArgument, "empty graph");
  return detail::with_mask_kind(g, [&](auto mask_kind) {
    using M = decltype(mask_kind);
    detail::ExactSearch<M> search(g, budget);
    search.run_paths();
    PathWitness w;
    w.vertices = search.best_ids();
    w.claimed_length = static_cast<long long>(w.vertices.size()) - 1;
    w.trace.push_back("exact longest path search, " + std::to_string(search.expansions) +
                      " expansions");
    check_path_witness(g, w);
    return w;
  });
}

inline CycleWitness longest_cycle_exact(const Graph& g,
                                        long long budget = kDefaultOracleBudget) {
  if (g.n() == 0) fail(ErrorKind::BadArgument, "empty graph");
  if (detail::is_forest(g)) fail(ErrorKind::Acyclic, "graph has no cycle");
  return detail::with_mask_kind(g, [&](auto mask_kind) {
    using M = decltype(mask_kind);
    detail::ExactSearch<M> search(g, budget);
    search.run_cycles(false);
    CycleWitness w;
    w.vertices = search.best_ids();
    w.claimed_length = static_cast<long long>(w.vertices.size());
    w.trace.push_back("exact longest cycle search, " + std::to_string(search.expansions) +
                      " expansions");
    check_cycle_witness(g, w);
    return w;
  });
}

inline CycleWitness find_long_odd_cycle(const Graph& g, const CycleWitness& c,
                                        long long budget = kDefaultOracleBudget) {
  check_cycle_witness(g, c);
  if (bipartition(g).has_value()) fail(ErrorKind::BipartiteInput, "graph has no odd cycle");
  return detail::with_mask_kind(g, [&](auto mask_kind) {
    using M = decltype(mask_kind);
    detail::ExactSearch<M> search(g, budget);
    search.run_cycles(true);
    CycleWitness w;
    w.vertices = search.best_ids();
    long long guarantee = (c.length() + 1) / 2;
    if (static_cast<long long>(w.vertices.size()) < guarantee)
      fail(ErrorKind::NotTwoConnected,
           "longest odd cycle undercuts the halving bound; input is not 2-connected");
    w.claimed_length = guarantee;
    w.trace.push_back("exact longest odd cycle search, " +
                      std::to_string(search.expansions) + " expansions");
    check_cycle_witness(g, w);
    return w;
  });
}

}  // namespace critcyc
