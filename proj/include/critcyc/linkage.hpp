#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace critcyc {

struct Linkage {
  PathWitness first;
  PathWitness second;
  std::pair<int, int> X{-1, -1};
  std::pair<int, int> Y{-1, -1};
  std::vector<std::string> trace;

  long long length() const { return first.length() + second.length(); }
};

struct Hammock {
  PathWitness p1, p2, r1, r2;
  std::pair<int, int> X{-1, -1};
  std::pair<int, int> Y{-1, -1};
  std::vector<std::string> trace;

  int x1() const { return p1.vertices.front(); }
  int y1() const { return p1.vertices.back(); }
  int x2() const { return p2.vertices.front(); }
  int y2() const { return p2.vertices.back(); }
  int s1() const { return r1.vertices.front(); }
  int t1() const { return r1.vertices.back(); }
  int s2() const { return r2.vertices.front(); }
  int t2() const { return r2.vertices.back(); }
  bool singular() const { return s1() == s2(); }
  long long length() const { return r1.length(); }
};

struct LinkageOrHammock {
  std::optional<Linkage> linkage;
  std::optional<Hammock> hammock;
};

inline void check_linkage(const Graph& g, const Linkage& lk) {
  check_path_witness(g, lk.first);
  check_path_witness(g, lk.second);
  std::set<int> xs{lk.X.first, lk.X.second};
  std::set<int> ys{lk.Y.first, lk.Y.second};
  if (xs.size() != 2 || ys.size() != 2)
    fail(ErrorKind::BadWitness, "linkage end pairs must contain two distinct vertices");
  if (std::set<int>{lk.first.vertices.front(), lk.second.vertices.front()} != xs)
    fail(ErrorKind::BadWitness, "linkage paths must start at the two X vertices");
  if (std::set<int>{lk.first.vertices.back(), lk.second.vertices.back()} != ys)
    fail(ErrorKind::BadWitness, "linkage paths must end at the two Y vertices");
  std::set<int> seen(lk.first.vertices.begin(), lk.first.vertices.end());
  for (int v : lk.second.vertices)
    if (seen.count(v)) fail(ErrorKind::BadWitness, "linkage paths share a vertex");
}

inline void check_hammock(const Graph& g, const Hammock& h) {
  check_path_witness(g, h.p1);
  check_path_witness(g, h.p2);
  check_path_witness(g, h.r1);
  check_path_witness(g, h.r2);
  std::set<int> sp1(h.p1.vertices.begin(), h.p1.vertices.end());
  std::set<int> sp2(h.p2.vertices.begin(), h.p2.vertices.end());
  for (int v : h.p2.vertices)
    if (sp1.count(v)) fail(ErrorKind::InvalidHammock, "side paths share a vertex");
  for (const PathWitness* r : {&h.r1, &h.r2}) {
    if (!sp1.count(r->vertices.front()))
      fail(ErrorKind::InvalidHammock, "cross path must start on the first side path");
    if (!sp2.count(r->vertices.back()))
      fail(ErrorKind::InvalidHammock, "cross path must end on the second side path");
    for (size_t i = 1; i + 1 < r->vertices.size(); ++i)
      if (sp1.count(r->vertices[i]) || sp2.count(r->vertices[i]))
        fail(ErrorKind::InvalidHammock, "cross path interior touches a side path");
  }
  std::set<int> sr1(h.r1.vertices.begin(), h.r1.vertices.end());
  std::set<int> shared;
  for (int v : h.r2.vertices)
    if (sr1.count(v)) shared.insert(v);
  if (h.s1() == h.s2()) {
    if (shared != std::set<int>{h.s1()})
      fail(ErrorKind::InvalidHammock, "cross paths may share only their common start");
  } else if (!shared.empty()) {
    fail(ErrorKind::InvalidHammock, "cross paths of a non-singular hammock must be disjoint");
  }
  auto pos = [](const std::vector<int>& p, int v) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] == v) return static_cast<int>(i);
    return -1;
  };
  if (pos(h.p1.vertices, h.s1()) > pos(h.p1.vertices, h.s2()))
    fail(ErrorKind::InvalidHammock, "cross path starts out of order on the first side path");
  if (pos(h.p2.vertices, h.t1()) > pos(h.p2.vertices, h.t2()))
    fail(ErrorKind::InvalidHammock, "cross path ends out of order on the second side path");
  if (std::set<int>{h.x1(), h.x2()} != std::set<int>{h.X.first, h.X.second})
    fail(ErrorKind::InvalidHammock, "stored X pair does not match the side path starts");
  if (std::set<int>{h.y1(), h.y2()} != std::set<int>{h.Y.first, h.Y.second})
    fail(ErrorKind::InvalidHammock, "stored Y pair does not match the side path ends");
}

namespace detail {

inline void require_internal(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::BadArgument, what);
}

inline int pos_of(const std::vector<int>& path, int v) {
  for (size_t i = 0; i < path.size(); ++i)
    if (path[i] == v) return static_cast<int>(i);
  return -1;
}

inline std::vector<int> seg(const std::vector<int>& path, int i, int j) {
  std::vector<int> out;
  int step = i <= j ? 1 : -1;
  for (int k = i;; k += step) {
    out.push_back(path[k]);
    if (k == j) break;
  }
  return out;
}

inline std::vector<int> rev_vec(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

inline std::vector<int> glue(const std::vector<std::vector<int>>& pieces) {
  std::vector<int> out;
  for (const auto& piece : pieces) {
    require_internal(!piece.empty(), "internal: empty path piece");
    if (out.empty()) {
      out = piece;
      continue;
    }
    require_internal(out.back() == piece.front(), "internal: path pieces do not meet");
    out.insert(out.end(), piece.begin() + 1, piece.end());
  }
  std::set<int> seen(out.begin(), out.end());
  require_internal(seen.size() == out.size(), "internal: assembled path repeats a vertex");
  return out;
}

inline std::vector<int> cyc_walk(const std::vector<int>& cyc, int i, int j, int step) {
  int n = static_cast<int>(cyc.size());
  std::vector<int> out{cyc[i]};
  for (int k = i; k != j;) {
    k = ((k + step) % n + n) % n;
    out.push_back(cyc[k]);
  }
  return out;
}

inline std::vector<int> arc_avoiding(const std::vector<int>& cyc, const std::map<int, int>& cpos,
                                     int a, int b, int avoid) {
  std::vector<int> fwd = cyc_walk(cyc, cpos.at(a), cpos.at(b), 1);
  if (std::find(fwd.begin(), fwd.end(), avoid) == fwd.end()) return fwd;
  std::vector<int> bwd = cyc_walk(cyc, cpos.at(a), cpos.at(b), -1);
  require_internal(std::find(bwd.begin(), bwd.end(), avoid) == bwd.end(),
                   "internal: avoided vertex on both cycle arcs");
  return bwd;
}

inline PathWitness mk_path(const Graph& g, std::vector<int> vs) {
  PathWitness w;
  w.vertices = std::move(vs);
  w.claimed_length = static_cast<long long>(w.vertices.size()) - 1;
  check_path_witness(g, w);
  return w;
}

inline Linkage mk_linkage(const Graph& g, std::vector<int> a, std::vector<int> b,
                          std::pair<int, int> X, std::pair<int, int> Y,
                          std::vector<std::string> trace) {
  auto orient = [&X](std::vector<int>& p) {
    if (p.front() != X.first && p.front() != X.second) std::reverse(p.begin(), p.end());
  };
  orient(a);
  orient(b);
  Linkage lk;
  lk.first = mk_path(g, std::move(a));
  lk.second = mk_path(g, std::move(b));
  lk.X = X;
  lk.Y = Y;
  lk.trace = std::move(trace);
  check_linkage(g, lk);
  return lk;
}

inline Hammock mk_hammock(const Graph& g, std::vector<int> p1, std::vector<int> p2,
                          std::vector<int> r1, std::vector<int> r2,
                          std::vector<std::string> trace) {
  Hammock h;
  h.p1 = mk_path(g, std::move(p1));
  h.p2 = mk_path(g, std::move(p2));
  h.r1 = mk_path(g, std::move(r1));
  h.r2 = mk_path(g, std::move(r2));
  h.X = {h.p1.vertices.front(), h.p2.vertices.front()};
  h.Y = {h.p1.vertices.back(), h.p2.vertices.back()};
  h.trace = std::move(trace);
  check_hammock(g, h);
  return h;
}

inline Hammock swap_sides(const Graph& g, const Hammock& h) {
  std::vector<std::string> trace = h.trace;
  trace.push_back("swapped the side paths");
  return mk_hammock(g, h.p2.vertices, h.p1.vertices, rev_vec(h.r1.vertices),
                    rev_vec(h.r2.vertices), std::move(trace));
}

// Turns a non-singular hammock plus one free connector into a linkage of at
// least half the hammock length.  The connector q must run from a vertex of
// x1P1s1 + R1 + x2P2t1 (other than s1, t1) to a vertex of y1P1s2 + R2 + y2P2t2
// (other than s2), with its interior off all four hammock paths.
inline Linkage linkage_from_free_path(const Graph& g, const Hammock& h0, std::vector<int> q,
                                      long long l, std::vector<std::string> trace) {
  Hammock h = h0;
  int a = q.front();
  require_internal(a != h.s1() && a != h.t1(), "internal: free path starts on an anchor");
  require_internal(q.back() != h.s2(), "internal: free path ends on the far anchor");

  long long rlen = h.r1.length();
  int ja = pos_of(h.r1.vertices, a);
  bool on_r1 = ja > 0 && ja < static_cast<int>(h.r1.vertices.size()) - 1;
  bool in_head1 = pos_of(h.p1.vertices, a) >= 0 &&
                  pos_of(h.p1.vertices, a) < pos_of(h.p1.vertices, h.s1());
  if (!in_head1 && !(on_r1 && 2 * (rlen - ja) >= l)) {
    h = swap_sides(g, h);
    ja = pos_of(h.r1.vertices, a);
    on_r1 = ja > 0 && ja < static_cast<int>(h.r1.vertices.size()) - 1;
    in_head1 = pos_of(h.p1.vertices, a) >= 0 &&
               pos_of(h.p1.vertices, a) < pos_of(h.p1.vertices, h.s1());
  }
  require_internal(in_head1 || (on_r1 && 2 * (rlen - ja) >= l),
                   "internal: free path start fits neither side");

  const auto& p1 = h.p1.vertices;
  const auto& p2 = h.p2.vertices;
  const auto& r1 = h.r1.vertices;
  const auto& r2 = h.r2.vertices;
  int b = q.back();
  int ps1 = pos_of(p1, h.s1()), ps2 = pos_of(p1, h.s2());
  int pt1 = pos_of(p2, h.t1()), pt2 = pos_of(p2, h.t2());
  int last1 = static_cast<int>(p1.size()) - 1;
  int last2 = static_cast<int>(p2.size()) - 1;

  std::vector<int> tailpiece;
  bool on_tail1 = false;
  int jb = pos_of(r2, b);
  if (jb >= 0) {
    tailpiece = glue({seg(r2, jb, static_cast<int>(r2.size()) - 1), seg(p2, pt2, last2)});
  } else if (pos_of(p2, b) > pt2) {
    tailpiece = seg(p2, pos_of(p2, b), last2);
  } else if (pos_of(p1, b) > ps2) {
    on_tail1 = true;
  } else {
    require_internal(false, "internal: free path ends outside the far side");
  }

  std::vector<int> first, second;
  if (in_head1) {
    int pa = pos_of(p1, a);
    if (on_tail1) {
      trace.push_back("free path lands on the first side tail");
      first = glue({seg(p1, 0, pa), q, seg(p1, pos_of(p1, b), last1)});
      second = glue({seg(p2, 0, pt1), rev_vec(r1), seg(p1, ps1, ps2), r2, seg(p2, pt2, last2)});
    } else {
      trace.push_back("free path lands on the far side");
      first = glue({seg(p1, 0, pa), q, tailpiece});
      second = glue({seg(p2, 0, pt1), rev_vec(r1), seg(p1, ps1, last1)});
    }
  } else {
    trace.push_back("free path starts on the long cross path");
    std::vector<int> down = rev_vec(seg(r1, ja, static_cast<int>(r1.size()) - 1));
    if (on_tail1) {
      first = glue({seg(p1, 0, ps2), r2, seg(p2, pt2, last2)});
      second = glue({seg(p2, 0, pt1), down, q, seg(p1, pos_of(p1, b), last1)});
    } else {
      first = p1;
      second = glue({seg(p2, 0, pt1), down, q, tailpiece});
    }
  }
  Linkage lk = mk_linkage(g, first, second, {h.x1(), h.x2()}, {h.y1(), h.y2()}, std::move(trace));
  require_internal(2 * lk.length() >= l, "internal: assembled linkage misses half the length");
  return lk;
}

}  // namespace detail

inline CycleWitness long_cycle_3connected(const Graph& g,
                                          long long budget = kDefaultOracleBudget) {
  if (connectivity(g).level < 3)
    fail(ErrorKind::NotThreeConnected, "long cycle search needs a 3-connected graph");
  PathWitness p = longest_path_exact(g, budget);
  CycleWitness c = longest_cycle_exact(g, budget);
  long long want = (2 * p.length() + 4) / 5;
  detail::require_internal(c.length() >= want, "internal: cycle shorter than two fifths of path");
  c.claimed_length = want;
  c.trace.push_back("longest path length " + std::to_string(p.length()) +
                    " guarantees a cycle of two fifths of it");
  return c;
}

inline LinkageOrHammock cycle_to_linkage_or_hammock(const Graph& g, std::pair<int, int> X,
                                                    std::pair<int, int> Y,
                                                    const CycleWitness& C) {
  for (int v : {X.first, X.second, Y.first, Y.second})
    if (!g.has_vertex(v)) fail(ErrorKind::BadArgument, "end pair vertex not in graph");
  if (X.first == X.second || Y.first == Y.second)
    fail(ErrorKind::BadArgument, "end pair must contain two distinct vertices");
  std::set<int> xs{X.first, X.second}, ys{Y.first, Y.second};
  for (int v : xs)
    if (ys.count(v)) fail(ErrorKind::OverlappingXY, "end pairs must be disjoint");
  if (connectivity(g).level < 3)
    fail(ErrorKind::NotThreeConnected, "linkage extraction needs a 3-connected graph");
  check_cycle_witness(g, C);

  const std::vector<int>& cvs = C.vertices;
  long long l = C.length();
  std::map<int, int> cpos;
  for (size_t i = 0; i < cvs.size(); ++i) cpos[cvs[i]] = static_cast<int>(i);
  std::set<int> ends(xs);
  ends.insert(ys.begin(), ys.end());
  std::set<int> on_cycle(cvs.begin(), cvs.end());

  MengerResult four = menger_paths(g, ends, on_cycle, 4);
  LinkageOrHammock out;
  if (four.paths) {
    const auto& paths = *four.paths;
    detail::require_internal(paths.size() == 4, "internal: expected four disjoint paths");
    std::vector<std::pair<int, int>> marked;
    for (int i = 0; i < 4; ++i) marked.push_back({cpos.at(paths[i].back()), i});
    std::sort(marked.begin(), marked.end());
    auto src = [&](int m) { return paths[marked[m].second]; };
    auto is_x = [&](int m) { return xs.count(src(m).front()) > 0; };
    std::vector<std::vector<int>> arc(4);
    for (int i = 0; i < 4; ++i)
      arc[i] = detail::cyc_walk(cvs, marked[i].first, marked[(i + 1) % 4].first, 1);
    auto arclen = [&](int i) { return static_cast<long long>(arc[i].size()) - 1; };

    if (is_x(0) != is_x(1) && is_x(1) != is_x(2) && is_x(2) != is_x(3)) {
      int start = arclen(0) + arclen(2) >= arclen(1) + arclen(3) ? 0 : 1;
      std::vector<int> pa = detail::glue({src(start), arc[start], detail::rev_vec(src(start + 1))});
      std::vector<int> pb =
          detail::glue({src(start + 2), arc[start + 2], detail::rev_vec(src((start + 3) % 4))});
      Linkage lk = detail::mk_linkage(
          g, pa, pb, X, Y, {"alternating ends around the cycle; opposite arcs form the linkage"});
      detail::require_internal(2 * lk.length() >= l, "internal: alternating linkage too short");
      out.linkage = std::move(lk);
      return out;
    }

    int r = 0;
    while (r < 4 && !(is_x(r) == is_x((r + 1) % 4) && is_x((r + 2) % 4) == is_x((r + 3) % 4) &&
                      is_x(r) != is_x((r + 2) % 4)))
      ++r;
    detail::require_internal(r < 4, "internal: no paired arrangement of cycle ends");
    auto m = [&](int i) { return (r + i) % 4; };
    const std::vector<int>&c12 = arc[m(0)], &c23 = arc[m(1)], &c34 = arc[m(2)], &c41 = arc[m(3)];
    auto elen = [](const std::vector<int>& p) { return static_cast<long long>(p.size()) - 1; };
    if (5 * (elen(c23) + elen(c41)) >= l) {
      std::vector<int> pa = detail::glue({src(m(1)), c23, detail::rev_vec(src(m(2)))});
      std::vector<int> pb =
          detail::glue({src(m(0)), detail::rev_vec(c41), detail::rev_vec(src(m(3)))});
      Linkage lk = detail::mk_linkage(
          g, pa, pb, X, Y, {"cross arcs between the end classes carry a fifth of the cycle"});
      detail::require_internal(5 * lk.length() >= l, "internal: cross arc linkage too short");
      out.linkage = std::move(lk);
      return out;
    }
    if (5 * elen(c12) >= 2 * l) {
      std::vector<int> hp1 =
          detail::glue({src(m(0)), detail::rev_vec(c41), detail::rev_vec(src(m(3)))});
      std::vector<int> hp2 = detail::glue({src(m(1)), c23, detail::rev_vec(src(m(2)))});
      out.hammock = detail::mk_hammock(
          g, hp1, hp2, c12, detail::rev_vec(c34),
          {"long arc between the near same class ends becomes the first cross path"});
      return out;
    }
    detail::require_internal(5 * elen(c34) >= 2 * l, "internal: both same class arcs are short");
    std::vector<int> hp1 = detail::glue({src(m(3)), c41, detail::rev_vec(src(m(0)))});
    std::vector<int> hp2 =
        detail::glue({src(m(2)), detail::rev_vec(c23), detail::rev_vec(src(m(1)))});
    out.hammock = detail::mk_hammock(
        g, hp1, hp2, detail::rev_vec(c34), c12,
        {"long arc between the far same class ends becomes the first cross path"});
    return out;
  }

  detail::require_internal(four.separator && four.separator->size() == 3,
                           "internal: expected a three vertex cut");
  const std::set<int>& cut = *four.separator;
  MengerResult three = menger_paths(g, ends, on_cycle, 3);
  detail::require_internal(three.paths.has_value(), "internal: three disjoint paths must exist");
  std::vector<std::vector<int>> ps = *three.paths;
  detail::require_internal(ps.size() == 3, "internal: expected three disjoint paths");

  std::vector<int> cut_on(3);
  for (int i = 0; i < 3; ++i) {
    int found = 0;
    for (int v : ps[i])
      if (cut.count(v)) {
        cut_on[i] = v;
        ++found;
      }
    detail::require_internal(found == 1, "internal: each path crosses the cut exactly once");
  }

  int xstarts = 0;
  for (const auto& p : ps) xstarts += xs.count(p.front()) ? 1 : 0;
  detail::require_internal(xstarts == 1 || xstarts == 2,
                           "internal: path starts split oddly between the end pairs");
  const std::set<int>& doubled = xstarts == 2 ? xs : ys;
  const std::set<int>& single = xstarts == 2 ? ys : xs;
  std::vector<int> didx, eidx;
  for (int i = 0; i < 3; ++i)
    (doubled.count(ps[i].front()) ? didx : eidx).push_back(i);
  detail::require_internal(didx.size() == 2 && eidx.size() == 1,
                           "internal: doubled class must start two paths");
  if (ps[didx[0]].front() > ps[didx[1]].front()) std::swap(didx[0], didx[1]);
  std::vector<int> pa = ps[didx[0]], pb = ps[didx[1]], pc = ps[eidx[0]];
  int wc = cut_on[eidx[0]];
  int v3 = pc.front(), u3 = pc.back();
  int free_end = *single.begin() == v3 ? *std::next(single.begin()) : *single.begin();
  detail::require_internal(free_end != v3, "internal: no free vertex in the single class");

  int wpos = detail::pos_of(pc, wc);
  std::vector<int> tail = detail::seg(pc, wpos, static_cast<int>(pc.size()) - 1);
  std::set<int> aug_sources{v3, free_end};
  std::set<int> aug_targets(pa.begin(), pa.end());
  aug_targets.insert(pb.begin(), pb.end());
  aug_targets.insert(wc);
  std::vector<std::vector<int>> aug =
      augment_paths(g, aug_sources, aug_targets, {detail::seg(pc, 0, wpos)});
  detail::require_internal(aug.size() == 2, "internal: expected two augmented paths");
  int qi2 = aug[0].back() == wc ? 0 : 1;
  detail::require_internal(aug[qi2].back() == wc, "internal: no augmented path ends at the cut");
  std::vector<int> q2 = aug[qi2], q1 = aug[1 - qi2];
  int z = q1.back();

  std::set<int> in_pb(pb.begin(), pb.end());
  if (in_pb.count(z)) std::swap(pa, pb);
  detail::require_internal(detail::pos_of(pa, z) >= 0,
                           "internal: augmented path misses both side paths");
  int u1 = pa.back(), u2 = pb.back();
  std::vector<int> c23 = detail::arc_avoiding(cvs, cpos, u2, u3, u1);
  auto elen = [](const std::vector<int>& p) { return static_cast<long long>(p.size()) - 1; };

  if (5 * elen(c23) >= l) {
    std::vector<int> first = detail::glue({detail::seg(pa, 0, detail::pos_of(pa, z)),
                                           detail::rev_vec(q1)});
    std::vector<int> second =
        detail::glue({pb, c23, detail::rev_vec(tail), detail::rev_vec(q2)});
    Linkage lk = detail::mk_linkage(
        g, first, second, X, Y,
        {"three vertex cut; the mixed arc already carries a fifth of the cycle"});
    detail::require_internal(5 * lk.length() >= l, "internal: mixed arc linkage too short");
    out.linkage = std::move(lk);
    return out;
  }

  std::vector<int> c12 = detail::arc_avoiding(cvs, cpos, u1, u2, u3);
  std::vector<int> c13 = detail::arc_avoiding(cvs, cpos, u1, u3, u2);
  if (z != u1) {
    detail::require_internal(5 * (elen(c12) + elen(c13)) >= 4 * l,
                             "internal: remaining arcs are too short");
    std::vector<int> first = detail::glue({detail::seg(pa, 0, detail::pos_of(pa, z)),
                                           detail::rev_vec(q1)});
    std::vector<int> second = detail::glue({pb, detail::rev_vec(c12), c13,
                                            detail::rev_vec(tail), detail::rev_vec(q2)});
    Linkage lk = detail::mk_linkage(
        g, first, second, X, Y,
        {"three vertex cut; the free path misses the first cycle end, two arcs serve"});
    detail::require_internal(5 * lk.length() >= 4 * l, "internal: two arc linkage too short");
    out.linkage = std::move(lk);
    return out;
  }

  std::vector<int> hp1 = detail::glue({pa, detail::rev_vec(q1)});
  std::vector<int> hp2 = detail::glue({pb, c23, detail::rev_vec(tail), detail::rev_vec(q2)});
  if (5 * elen(c12) >= 2 * l) {
    out.hammock = detail::mk_hammock(
        g, hp1, hp2, c12, c13,
        {"three vertex cut; the free path pins the first cycle end, singular hammock"});
    return out;
  }
  detail::require_internal(5 * elen(c13) >= 2 * l, "internal: both remaining arcs are short");
  out.hammock = detail::mk_hammock(
      g, detail::rev_vec(hp1), detail::rev_vec(hp2), c13, c12,
      {"three vertex cut; the free path pins the first cycle end, reversed singular hammock"});
  return out;
}

inline LinkageOrHammock hammock_to_nonsingular(const Graph& g, const Hammock& h) {
  check_hammock(g, h);
  LinkageOrHammock out;
  if (!h.singular()) {
    out.hammock = h;
    return out;
  }
  long long l = h.length();
  const auto& p1 = h.p1.vertices;
  const auto& p2 = h.p2.vertices;
  const auto& r1 = h.r1.vertices;
  const auto& r2 = h.r2.vertices;
  int s = h.s1(), t1 = h.t1(), t2 = h.t2();
  int ps = detail::pos_of(p1, s);
  int pt1 = detail::pos_of(p2, t1), pt2 = detail::pos_of(p2, t2);
  int last1 = static_cast<int>(p1.size()) - 1;
  int last2 = static_cast<int>(p2.size()) - 1;
  int rend1 = static_cast<int>(r1.size()) - 1;
  int rend2 = static_cast<int>(r2.size()) - 1;
  auto collect = [](std::set<int>& into, const std::vector<int>& vs) {
    into.insert(vs.begin(), vs.end());
  };

  if (ps > 0) {
    std::set<int> sources, targets, banned{s, t1};
    for (int i = 0; i < ps; ++i) sources.insert(p1[i]);
    collect(targets, p2);
    collect(targets, r1);
    collect(targets, r2);
    for (int i = ps; i <= last1; ++i) targets.insert(p1[i]);
    for (int v : banned) targets.erase(v);
    for (int v : sources) targets.erase(v);
    std::optional<std::vector<int>> qo = bfs_path(g, sources, targets, banned);
    detail::require_internal(qo.has_value(), "internal: no connector from the head side");
    std::vector<int> q = *qo;
    int a = q.front(), b = q.back();
    int pa = detail::pos_of(p1, a);

    if (detail::pos_of(r2, b) >= 0) {
      std::vector<int> first =
          detail::glue({detail::seg(p1, 0, pa), q,
                        detail::seg(r2, detail::pos_of(r2, b), rend2),
                        detail::seg(p2, pt2, last2)});
      std::vector<int> second =
          detail::glue({detail::seg(p2, 0, pt1), detail::rev_vec(r1), detail::seg(p1, ps, last1)});
      Linkage lk =
          detail::mk_linkage(g, first, second, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                             {"head connector joins the second cross path; linkage keeps all of "
                              "the first cross path"});
      detail::require_internal(lk.length() >= l, "internal: head connector linkage too short");
      out.linkage = std::move(lk);
      return out;
    }
    int pb2 = detail::pos_of(p2, b);
    if (pb2 > pt1) {
      std::vector<int> first =
          detail::glue({detail::seg(p1, 0, pa), q, detail::seg(p2, pb2, last2)});
      std::vector<int> second =
          detail::glue({detail::seg(p2, 0, pt1), detail::rev_vec(r1), detail::seg(p1, ps, last1)});
      Linkage lk = detail::mk_linkage(g, first, second, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                                      {"head connector lands beyond the shared anchor on the "
                                       "second side path"});
      detail::require_internal(lk.length() >= l, "internal: head connector linkage too short");
      out.linkage = std::move(lk);
      return out;
    }
    if (pb2 >= 0) {
      out.hammock = detail::mk_hammock(
          g, detail::rev_vec(p1), detail::rev_vec(p2), r1, q,
          {"head connector lands before the shared anchor; hammock runs back to front"});
      detail::require_internal(2 * out.hammock->length() >= l,
                               "internal: reversed hammock too short");
      return out;
    }
    int pb1 = detail::pos_of(p1, b);
    if (pb1 > ps) {
      std::vector<int> first =
          detail::glue({detail::seg(p1, 0, pa), q, detail::seg(p1, pb1, last1)});
      std::vector<int> second = detail::glue({detail::seg(p2, 0, pt1), detail::rev_vec(r1), r2,
                                              detail::seg(p2, pt2, last2)});
      Linkage lk = detail::mk_linkage(g, first, second, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                                      {"head connector bridges the split vertex; cross paths "
                                       "chain through the second side"});
      detail::require_internal(lk.length() >= l, "internal: head connector linkage too short");
      out.linkage = std::move(lk);
      return out;
    }
    int jb = detail::pos_of(r1, b);
    detail::require_internal(jb > 0 && jb < rend1,
                             "internal: head connector lands off the hammock");
    if (2 * (h.r1.length() - jb) >= l) {
      std::vector<int> newr1 = detail::glue({q, detail::seg(r1, jb, rend1)});
      out.hammock = detail::mk_hammock(
          g, p1, p2, newr1, r2,
          {"head connector grabs the far half of the long cross path"});
      detail::require_internal(2 * out.hammock->length() >= l,
                               "internal: far half hammock too short");
      return out;
    }
    detail::require_internal(2 * jb >= l, "internal: neither half of the cross path is long");
    std::vector<int> first = detail::glue({detail::seg(p1, 0, pa), q,
                                           detail::rev_vec(detail::seg(r1, 0, jb)),
                                           detail::seg(p1, ps, last1)});
    Linkage lk = detail::mk_linkage(g, first, p2, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                                    {"head connector grabs the near half of the long cross path"});
    detail::require_internal(2 * lk.length() >= l, "internal: near half linkage too short");
    out.linkage = std::move(lk);
    return out;
  }

  std::set<int> sources;
  for (int i = 1; i <= last1; ++i) sources.insert(p1[i]);
  auto target_set = [&](const std::set<int>& banned) {
    std::set<int> targets;
    collect(targets, p2);
    collect(targets, r1);
    collect(targets, r2);
    for (int v : banned) targets.erase(v);
    for (int v : sources) targets.erase(v);
    return targets;
  };
  std::set<int> banned{s, t2, t1};
  std::optional<std::vector<int>> qo = bfs_path(g, sources, target_set(banned), banned);
  if (!qo) {
    std::set<int> relaxed{s, t2};
    qo = bfs_path(g, sources, target_set(relaxed), relaxed);
    detail::require_internal(qo.has_value(), "internal: no connector from the tail side");
    detail::require_internal(qo->back() != t1,
                             "internal: tail connector pinned to the shared cross end");
  }
  std::vector<int> q = *qo;
  int bp = q.front(), c = q.back();
  int pbp = detail::pos_of(p1, bp);

  int jc2 = detail::pos_of(r2, c);
  if (jc2 > 0 && jc2 < rend2) {
    std::vector<int> newr2 = detail::glue({q, detail::seg(r2, jc2, rend2)});
    out.hammock = detail::mk_hammock(g, p1, p2, r1, newr2,
                                     {"tail connector reroutes the second cross path"});
    detail::require_internal(2 * out.hammock->length() >= l,
                             "internal: rerouted hammock too short");
    return out;
  }
  int pc2 = detail::pos_of(p2, c);
  if (pc2 >= 0 && pc2 < pt1) {
    std::vector<int> first = detail::glue({r1, detail::seg(p2, pt1, last2)});
    std::vector<int> second = detail::glue({detail::seg(p2, 0, pc2), detail::rev_vec(q),
                                            detail::seg(p1, pbp, last1)});
    Linkage lk = detail::mk_linkage(g, first, second, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                                    {"tail connector lands before the shared cross end"});
    detail::require_internal(lk.length() >= l, "internal: tail connector linkage too short");
    out.linkage = std::move(lk);
    return out;
  }
  if (pc2 > pt1) {
    out.hammock = detail::mk_hammock(g, p1, p2, r1, q,
                                     {"tail connector becomes the second cross path"});
    detail::require_internal(2 * out.hammock->length() >= l,
                             "internal: tail connector hammock too short");
    return out;
  }
  int jc1 = detail::pos_of(r1, c);
  detail::require_internal(jc1 > 0 && jc1 < rend1,
                           "internal: tail connector lands off the hammock");
  if (2 * (h.r1.length() - jc1) >= l) {
    std::vector<int> first = detail::glue({r2, detail::seg(p2, pt2, last2)});
    std::vector<int> second =
        detail::glue({detail::seg(p2, 0, pt1), detail::rev_vec(detail::seg(r1, jc1, rend1)),
                      detail::rev_vec(q), detail::seg(p1, pbp, last1)});
    Linkage lk = detail::mk_linkage(g, first, second, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                                    {"tail connector crosses through the far half of the long "
                                     "cross path"});
    detail::require_internal(2 * lk.length() >= l, "internal: crossing linkage too short");
    out.linkage = std::move(lk);
    return out;
  }
  detail::require_internal(2 * jc1 >= l, "internal: neither half of the cross path is long");
  std::vector<int> first = detail::glue({detail::seg(r1, 0, jc1), detail::rev_vec(q),
                                         detail::seg(p1, pbp, last1)});
  Linkage lk = detail::mk_linkage(g, first, p2, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                                  {"tail connector keeps the near half of the long cross path"});
  detail::require_internal(2 * lk.length() >= l, "internal: near half linkage too short");
  out.linkage = std::move(lk);
  return out;
}

inline Linkage nonsingular_to_linkage(const Graph& g, const Hammock& h) {
  check_hammock(g, h);
  if (h.singular()) fail(ErrorKind::SingularInput, "hammock still has a shared cross start");
  long long l = h.length();
  const auto& p1 = h.p1.vertices;
  const auto& p2 = h.p2.vertices;
  int ps1 = detail::pos_of(p1, h.s1()), ps2 = detail::pos_of(p1, h.s2());
  int pt1 = detail::pos_of(p2, h.t1()), pt2 = detail::pos_of(p2, h.t2());
  int last1 = static_cast<int>(p1.size()) - 1;
  int last2 = static_cast<int>(p2.size()) - 1;

  std::vector<int> apath = detail::glue({detail::seg(p1, 0, ps1), h.r1.vertices,
                                         detail::rev_vec(detail::seg(p2, 0, pt1))});
  std::vector<int> bpath = detail::glue({detail::rev_vec(detail::seg(p1, ps2, last1)),
                                         h.r2.vertices, detail::seg(p2, pt2, last2)});
  std::set<int> aset(apath.begin(), apath.end());
  std::set<int> bset(bpath.begin(), bpath.end());

  if (aset.size() >= 3 && bset.size() >= 3) {
    std::vector<int> mid1 = detail::seg(p1, ps1, ps2);
    std::vector<int> mid2 = detail::seg(p2, pt1, pt2);
    bool connected = true;
    std::vector<std::vector<int>> aug;
    try {
      aug = augment_paths(g, aset, bset, {mid1, mid2});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSufficientlyConnected) throw;
      connected = false;
    }
    if (connected) {
      detail::require_internal(aug.size() == 3, "internal: expected three augmented paths");
      int i1 = -1, i2 = -1, iq = -1;
      for (int i = 0; i < 3; ++i) {
        if (aug[i].front() == h.s1())
          i1 = i;
        else if (aug[i].front() == h.t1())
          i2 = i;
        else
          iq = i;
      }
      detail::require_internal(i1 >= 0 && i2 >= 0 && iq >= 0,
                               "internal: augmented starts do not cover both anchors");
      const std::vector<int>&q1 = aug[i1], &q2 = aug[i2], &q = aug[iq];
      std::map<int, int> bpos;
      for (size_t i = 0; i < bpath.size(); ++i) bpos[bpath[i]] = static_cast<int>(i);
      int bl = static_cast<int>(bpath.size()) - 1;
      int j1 = bpos.at(q1.back()), j2 = bpos.at(q2.back());
      detail::require_internal(j1 != j2, "internal: augmented paths share an end");
      std::vector<int> hp1, hp2, hr2;
      std::vector<std::string> trace = h.trace;
      if (j1 < j2) {
        trace.push_back("augmented the anchors; fresh connectors run parallel");
        hp1 = detail::glue({detail::seg(p1, 0, ps1), q1,
                            detail::rev_vec(detail::seg(bpath, 0, j1))});
        hp2 = detail::glue({detail::seg(p2, 0, pt1), q2, detail::seg(bpath, j2, bl)});
        hr2 = detail::seg(bpath, j1, j2);
      } else {
        trace.push_back("augmented the anchors; fresh connectors land crossed");
        hp1 = detail::glue({detail::seg(p1, 0, ps1), q1, detail::seg(bpath, j1, bl)});
        hp2 = detail::glue({detail::seg(p2, 0, pt1), q2,
                            detail::rev_vec(detail::seg(bpath, 0, j2))});
        hr2 = detail::rev_vec(detail::seg(bpath, j2, j1));
      }
      Hammock rebuilt = detail::mk_hammock(g, hp1, hp2, h.r1.vertices, hr2, std::move(trace));
      detail::require_internal(rebuilt.length() == l, "internal: rebuild changed the length");
      return detail::linkage_from_free_path(g, rebuilt, q, l, rebuilt.trace);
    }
  }

  if (2 * (h.p1.length() + h.p2.length()) >= l) {
    Linkage lk = detail::mk_linkage(g, p1, p2, {h.x1(), h.x2()}, {h.y1(), h.y2()},
                                    {"side paths alone carry half the cross length"});
    detail::require_internal(2 * lk.length() >= l, "internal: side path linkage too short");
    return lk;
  }

  std::set<int> sources = aset, targets = bset;
  sources.erase(h.s1());
  sources.erase(h.t1());
  targets.erase(h.s2());
  std::set<int> banned;
  for (const PathWitness* p : {&h.p1, &h.p2, &h.r1, &h.r2})
    banned.insert(p->vertices.begin(), p->vertices.end());
  for (int v : sources) banned.erase(v);
  for (int v : targets) banned.erase(v);
  std::optional<std::vector<int>> qo = bfs_path(g, sources, targets, banned);
  detail::require_internal(qo.has_value(), "internal: no direct connector between the sides");
  std::vector<std::string> trace = h.trace;
  trace.push_back("direct connector between the anchor sides");
  return detail::linkage_from_free_path(g, h, *qo, l, std::move(trace));
}

inline Linkage find_linkage(const Graph& g, std::pair<int, int> X, std::pair<int, int> Y,
                            const PathWitness& P, long long budget = kDefaultOracleBudget) {
  for (int v : {X.first, X.second, Y.first, Y.second})
    if (!g.has_vertex(v)) fail(ErrorKind::BadArgument, "end pair vertex not in graph");
  if (X.first == X.second || Y.first == Y.second)
    fail(ErrorKind::BadArgument, "end pair must contain two distinct vertices");
  std::set<int> xs{X.first, X.second}, ys{Y.first, Y.second};
  for (int v : xs)
    if (ys.count(v)) fail(ErrorKind::OverlappingXY, "end pairs must be disjoint");
  if (connectivity(g).level < 3)
    fail(ErrorKind::NotThreeConnected, "linkage extraction needs a 3-connected graph");
  check_path_witness(g, P);
  long long l = P.length();

  CycleWitness cyc = long_cycle_3connected(g, budget);
  detail::require_internal(5 * cyc.length() >= 2 * l,
                           "internal: cycle shorter than two fifths of the given path");
  LinkageOrHammock stage = cycle_to_linkage_or_hammock(g, X, Y, cyc);
  Linkage lk;
  if (stage.linkage) {
    lk = *stage.linkage;
  } else {
    LinkageOrHammock resolved = hammock_to_nonsingular(g, *stage.hammock);
    lk = resolved.linkage ? *resolved.linkage : nonsingular_to_linkage(g, *resolved.hammock);
  }

  std::set<int> fronts{lk.first.vertices.front(), lk.second.vertices.front()};
  std::vector<std::string> trace = lk.trace;
  if (fronts != xs) {
    detail::require_internal(fronts == ys, "internal: linkage ends match neither pair");
    trace.push_back("reversed the linkage to start at the requested pair");
    lk = detail::mk_linkage(g, detail::rev_vec(lk.first.vertices),
                            detail::rev_vec(lk.second.vertices), X, Y, std::move(trace));
  } else {
    lk.X = X;
    lk.Y = Y;
  }
  detail::require_internal(25 * lk.length() >= l,
                           "internal: linkage shorter than a twenty fifth of the path");
  return lk;
}

}  // namespace critcyc
