#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "critcyc/coloring.hpp"
#include "critcyc/constructors.hpp"
#include "critcyc/extraction.hpp"
#include "critcyc/oracle.hpp"

namespace critcyc {

struct BoundReport {
  std::string instance;
  int n = 0;
  int k = 0;
  long long m = 0;
  long long circumference = 0;
  long long longest_path = 0;
  double thm1_lower = 0;
  long long dirac_lower = 0;
  double gallai_upper = 0;
  double gallai_upper_variant = 0;
  std::optional<double> path_upper;
  bool thm1_pass = false;
  bool dirac_pass = false;
  bool gallai_pass = false;
  bool gallai_variant_pass = false;
  std::optional<bool> path_pass;

  bool all_pass() const {
    return thm1_pass && dirac_pass && gallai_pass && gallai_variant_pass &&
           (!path_pass.has_value() || *path_pass);
  }
};

struct FamilyInstance {
  std::string id;
  Graph graph;
  int k = 0;
  bool gallai = false;
};

namespace detail {

struct KeyRange {
  long long lo = 0;
  long long hi = 0;
};

inline long long parse_whole(const std::string& text, const std::string& family) {
  if (text.empty()) fail(ErrorKind::GenerationFailed, family + ": empty number");
  for (char c : text)
    if (c < '0' || c > '9')
      fail(ErrorKind::GenerationFailed, family + ": bad number \"" + text + "\"");
  return std::stoll(text);
}

inline std::map<std::string, KeyRange> parse_family_args(const std::vector<std::string>& words,
                                                         const std::string& family) {
  std::map<std::string, KeyRange> out;
  for (size_t i = 1; i < words.size(); ++i) {
    const std::string& word = words[i];
    size_t eq = word.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::GenerationFailed, family + ": expected key=value, got \"" + word + "\"");
    std::string key = word.substr(0, eq);
    std::string val = word.substr(eq + 1);
    KeyRange range;
    size_t dots = val.find("..");
    if (dots == std::string::npos) {
      range.lo = range.hi = parse_whole(val, family);
    } else {
      range.lo = parse_whole(val.substr(0, dots), family);
      range.hi = parse_whole(val.substr(dots + 2), family);
    }
    if (range.hi < range.lo)
      fail(ErrorKind::GenerationFailed, family + ": empty range \"" + word + "\"");
    if (out.count(key)) fail(ErrorKind::GenerationFailed, family + ": duplicate key " + key);
    out[key] = range;
  }
  return out;
}

inline KeyRange take_range(std::map<std::string, KeyRange>& args, const std::string& key,
                           const std::string& family) {
  auto it = args.find(key);
  if (it == args.end()) fail(ErrorKind::GenerationFailed, family + ": missing " + key + "=...");
  KeyRange range = it->second;
  args.erase(it);
  return range;
}

inline void reject_leftovers(const std::map<std::string, KeyRange>& args,
                             const std::string& family) {
  if (!args.empty())
    fail(ErrorKind::GenerationFailed, family + ": unknown key " + args.begin()->first);
}

inline bool upper_bound_holds(long long base, long long excess, int n, long long pow_n) {
  if (excess <= 0) return true;
  u128 cap = sat_pow(static_cast<u128>(n), static_cast<std::uint64_t>(pow_n));
  require_internal(cap < kSaturated, "internal: comparison cap saturated");
  return !pow_at_least(static_cast<u128>(base), static_cast<std::uint64_t>(excess), cap + 1);
}

inline std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

}  // namespace detail

inline Graph hajos_chain(int k, int len) {
  if (k < 3) fail(ErrorKind::GenerationFailed, "hajos-chain: need k at least 3");
  if (len < 1) fail(ErrorKind::GenerationFailed, "hajos-chain: need len at least 1");
  Graph cur = complete_graph(k);
  for (int step = 0; step < len; ++step) {
    std::vector<int> ids = cur.vertices();
    int shift = *std::max_element(ids.begin(), ids.end()) + 1;
    Graph fresh = shift_ids(complete_graph(k), shift);
    cur = hajos_sum(cur, cur.edge_list().front(), fresh, fresh.edge_list().front());
  }
  return cur;
}

inline std::vector<FamilyInstance> resolve_family(const std::string& family) {
  std::vector<std::string> words;
  std::istringstream in(family);
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) fail(ErrorKind::GenerationFailed, "empty family spec");

  std::vector<FamilyInstance> out;
  std::map<std::string, detail::KeyRange> args = detail::parse_family_args(words, words[0]);
  if (words[0] == "gallai") {
    detail::KeyRange ks = detail::take_range(args, "k", words[0]);
    detail::KeyRange hs = detail::take_range(args, "h", words[0]);
    detail::reject_leftovers(args, words[0]);
    if (ks.lo < 4) fail(ErrorKind::GenerationFailed, "gallai: need k at least 4");
    for (long long k = ks.lo; k <= ks.hi; ++k)
      for (long long h = hs.lo; h <= hs.hi; ++h) {
        FamilyInstance inst;
        inst.id = "gallai-" + std::to_string(k) + "-" + std::to_string(h);
        inst.graph = gallai_regular(static_cast<int>(k), static_cast<int>(h));
        inst.k = static_cast<int>(k);
        inst.gallai = true;
        out.push_back(std::move(inst));
      }
    return out;
  }
  if (words[0] == "hajos-chain") {
    detail::KeyRange ks = detail::take_range(args, "k", words[0]);
    detail::KeyRange ls = detail::take_range(args, "len", words[0]);
    detail::reject_leftovers(args, words[0]);
    if (ks.lo < 4) fail(ErrorKind::GenerationFailed, "hajos-chain: need k at least 4");
    for (long long k = ks.lo; k <= ks.hi; ++k)
      for (long long len = ls.lo; len <= ls.hi; ++len) {
        FamilyInstance inst;
        inst.id = "hajos-chain-" + std::to_string(k) + "-" + std::to_string(len);
        inst.graph = hajos_chain(static_cast<int>(k), static_cast<int>(len));
        inst.k = static_cast<int>(k);
        out.push_back(std::move(inst));
      }
    return out;
  }
  fail(ErrorKind::GenerationFailed, "unknown family \"" + words[0] + "\"");
  return out;
}

inline BoundReport evaluate_bounds(const FamilyInstance& inst,
                                   long long budget = kDefaultOracleBudget) {
  const Graph& g = inst.graph;
  int k = inst.k;
  if (k < 4) fail(ErrorKind::BadArgument, "bound evaluation needs k at least 4");
  CriticalityReport crit = is_k_critical(g, k, budget);
  if (!crit.is_critical)
    fail(ErrorKind::NotCritical, inst.id + ": generated instance is not critical");

  BoundReport r;
  r.instance = inst.id;
  r.n = g.n();
  r.k = k;
  r.m = g.m();
  r.circumference = longest_cycle_exact(g, budget).length();
  r.longest_path = longest_path_exact(g, budget).length();

  double ln_n = std::log(static_cast<double>(r.n));
  r.thm1_lower = ln_n / (100.0 * std::log(static_cast<double>(k)));
  r.dirac_lower = 2LL * k - 2;
  r.gallai_upper = 2.0 * (k - 1) / std::log(static_cast<double>(k - 2)) * ln_n + 2.0 * k;
  r.gallai_upper_variant = 2.0 * (k - 1) / std::log(static_cast<double>(k - 1)) * ln_n + 2.0 * k;

  r.thm1_pass = pow_at_least(static_cast<u128>(k),
                             static_cast<std::uint64_t>(100 * r.circumference),
                             static_cast<u128>(r.n));
  r.dirac_pass = r.n < r.dirac_lower || r.circumference >= r.dirac_lower;
  r.gallai_pass = detail::upper_bound_holds(k - 2, r.circumference - 2 * k, r.n, 2LL * (k - 1));
  r.gallai_variant_pass =
      detail::upper_bound_holds(k - 1, r.circumference - 2 * k, r.n, 2LL * (k - 1));
  if (inst.gallai) {
    r.path_upper = 4.0 * (k - 1) / std::log(static_cast<double>(k - 2)) * ln_n;
    r.path_pass = detail::upper_bound_holds(k - 2, r.longest_path, r.n, 4LL * (k - 1));
  }
  return r;
}

inline std::vector<BoundReport> run_bounds_suite(const std::string& family,
                                                 long long budget = kDefaultOracleBudget) {
  std::vector<FamilyInstance> instances = resolve_family(family);
  std::vector<std::future<BoundReport>> workers;
  workers.reserve(instances.size());
  for (const FamilyInstance& inst : instances)
    workers.push_back(std::async(std::launch::async,
                                 [&inst, budget] { return evaluate_bounds(inst, budget); }));
  std::vector<BoundReport> out;
  out.reserve(workers.size());
  for (auto& w : workers) out.push_back(w.get());
  return out;
}

struct Coro2Report {
  int n = 0;
  int k = 0;
  bool precondition_ok = false;
  std::string note;
  CycleWitness cycle;
  CycleWitness odd_cycle;
  long long odd_floor = 0;
  bool bound_pass = false;
};

inline Coro2Report verify_coro2(const Graph& g, int k, long long budget = kDefaultOracleBudget) {
  Coro2Report report;
  report.n = g.n();
  report.k = k;
  if (k < 3) fail(ErrorKind::BadArgument, "need k at least 3");
  CriticalityReport crit = is_k_critical(g, k, budget);
  if (!crit.is_critical) {
    report.note = "input graph is not " + std::to_string(k) + "-critical";
    return report;
  }
  if (bipartition(g).has_value()) {
    report.note = "input graph is bipartite and has no odd cycle";
    return report;
  }
  report.precondition_ok = true;
  report.note = "ok";
  report.cycle = long_cycle_critical(g, k, budget);
  report.odd_cycle = find_long_odd_cycle(g, report.cycle, budget);
  long long L = 0;
  while (!pow_at_least(static_cast<u128>(k), static_cast<std::uint64_t>(200 * L),
                       static_cast<u128>(std::max(report.n, 1))))
    ++L;
  report.odd_floor = L;
  report.bound_pass = pow_at_least(static_cast<u128>(k),
                                   static_cast<std::uint64_t>(200 * report.odd_cycle.length()),
                                   static_cast<u128>(report.n));
  return report;
}

inline std::string bounds_csv(const std::vector<BoundReport>& reports) {
  std::string out = "instance,n,k,m,circumference,longest_path,thm1_lower,dirac_lower,gallai_upper,status\n";
  for (const BoundReport& r : reports) {
    out += r.instance + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
           std::to_string(r.m) + ',' + std::to_string(r.circumference) + ',' +
           std::to_string(r.longest_path) + ',' + detail::format_real(r.thm1_lower) + ',' +
           std::to_string(r.dirac_lower) + ',' + detail::format_real(r.gallai_upper) + ',' +
           (r.all_pass() ? "pass" : "fail") + '\n';
  }
  return out;
}

inline std::string graph_dimacs(const Graph& g) {
  std::vector<int> ids = g.vertices();
  std::map<int, int> index;
  for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i) + 1;
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edge_list())
    out += "e " + std::to_string(index.at(u)) + " " + std::to_string(index.at(v)) + "\n";
  return out;
}

}  // namespace critcyc
