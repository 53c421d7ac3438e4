#include "core/geometry.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace trop {

const char *place_status_str(PlaceStatus s) {
  switch (s) {
  case PlaceStatus::ok: return "ok";
  case PlaceStatus::not_square: return "not_square";
  case PlaceStatus::singular: return "singular";
  case PlaceStatus::not_realizable: return "not_realizable";
  case PlaceStatus::degenerate: return "degenerate";
  }
  return "?";
}

namespace {

// Affine description of every vertex position in terms of the unknowns
// (root x, root y, bounded edge lengths): two integer coefficient rows per
// vertex.  Computed by walking the tree once from the root.
struct Expansion {
  int n_unknowns = 0;
  std::vector<int> col_of_edge;    // edge id -> column, -1 for leaf edges
  std::vector<int> cols;           // column - 2 -> edge id
  std::vector<std::vector<Int>> cx, cy;
};

Expansion expand_positions(const CombType &t, int root) {
  Expansion ex;
  ex.col_of_edge.assign(t.edges.size(), -1);
  for (size_t e = 0; e < t.edges.size(); ++e) {
    if (t.edges[e].is_leaf()) continue;
    ex.col_of_edge[e] = 2 + static_cast<int>(ex.cols.size());
    ex.cols.push_back(static_cast<int>(e));
  }
  ex.n_unknowns = 2 + static_cast<int>(ex.cols.size());

  ex.cx.assign(t.n_vertices, std::vector<Int>(ex.n_unknowns, Int(0)));
  ex.cy = ex.cx;
  ex.cx[root][0] = 1;
  ex.cy[root][1] = 1;

  std::vector<bool> seen(t.n_vertices, false);
  seen[root] = true;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int e : t.adj[u]) {
      if (t.edges[e].is_leaf()) continue;
      int w = t.other(e, u);
      if (seen[w]) continue;
      seen[w] = true;
      LatticeVec d = t.dir_from(e, u); // pos(w) = pos(u) + len * d
      ex.cx[w] = ex.cx[u];
      ex.cy[w] = ex.cy[u];
      ex.cx[w][ex.col_of_edge[e]] += d.x;
      ex.cy[w][ex.col_of_edge[e]] += d.y;
      queue.push_back(w);
    }
  }
  for (int v = 0; v < t.n_vertices; ++v)
    if (!seen[v]) throw std::logic_error("expand_positions: type is not connected");
  return ex;
}

QPoint condition_point(const Conditions &cond, const Leaf &leaf) {
  const auto &pts = leaf.kind == LeafKind::real_mark ? cond.real_pts : cond.complex_pts;
  if (leaf.mark < 0 || static_cast<size_t>(leaf.mark) >= pts.size())
    throw std::invalid_argument("marking has no condition point");
  return pts[leaf.mark];
}

Rat fixed_offset(const Conditions &cond, const Leaf &leaf) {
  if (leaf.deg_a < 0 || static_cast<size_t>(leaf.deg_a) >= cond.end_offsets.size())
    throw std::invalid_argument("fixed end has no offset");
  return cond.end_offsets[leaf.deg_a];
}

// ---------------------------------------------------------------- propagation

// Per-vertex knowledge: nothing, a line  a x + b y = c  with primitive
// integer normal, or an exact point.
struct VState {
  enum Kind { unknown, line, point } kind = unknown;
  long long a = 0, b = 0;
  Rat c;
  QPoint p;
};

struct Line {
  long long a, b;
  Rat c;
};

Line normalize(Line l) {
  LatticeVec n = primitive({l.a, l.b});
  long long w = weight_and_parity({l.a, l.b}).weight;
  Rat c = l.c / Rat(w);
  if (n.x < 0 || (n.x == 0 && n.y < 0)) {
    n = -n;
    c = -c;
  }
  return {n.x, n.y, c};
}

bool on_line(const Line &l, const QPoint &p) {
  return Rat(l.a) * p.x + Rat(l.b) * p.y == l.c;
}

enum class MeetResult { unchanged, changed, contradiction };

MeetResult meet_point(VState &s, const QPoint &q) {
  switch (s.kind) {
  case VState::unknown:
    s.kind = VState::point;
    s.p = q;
    return MeetResult::changed;
  case VState::line: {
    if (!on_line({s.a, s.b, s.c}, q)) return MeetResult::contradiction;
    s.kind = VState::point;
    s.p = q;
    return MeetResult::changed;
  }
  case VState::point:
    return s.p == q ? MeetResult::unchanged : MeetResult::contradiction;
  }
  return MeetResult::contradiction;
}

MeetResult meet_line(VState &s, Line l) {
  l = normalize(l);
  switch (s.kind) {
  case VState::unknown:
    s.kind = VState::line;
    s.a = l.a;
    s.b = l.b;
    s.c = l.c;
    return MeetResult::changed;
  case VState::line: {
    if (s.a == l.a && s.b == l.b)
      return s.c == l.c ? MeetResult::unchanged : MeetResult::contradiction;
    // two crossing lines pin the vertex
    Rat det = Rat(s.a) * Rat(l.b) - Rat(l.a) * Rat(s.b);
    QPoint q{(s.c * Rat(l.b) - l.c * Rat(s.b)) / det,
             (Rat(s.a) * l.c - Rat(l.a) * s.c) / det};
    s.kind = VState::point;
    s.p = q;
    return MeetResult::changed;
  }
  case VState::point:
    return on_line(l, s.p) ? MeetResult::unchanged : MeetResult::contradiction;
  }
  return MeetResult::contradiction;
}

} // namespace

LinearSystem build_system(const CombType &t, const Degree &deg, const Conditions &cond) {
  if (t.adj.size() != static_cast<size_t>(t.n_vertices))
    throw std::invalid_argument("build_system: adjacency not built");
  const int root = 0;
  Expansion ex = expand_positions(t, root);

  LinearSystem sys;
  sys.root = root;
  sys.cols = ex.cols;
  auto push_row = [&](std::vector<Int> row, Rat rhs) {
    sys.a.push_back(std::move(row));
    sys.rhs.push_back(std::move(rhs));
  };

  for (const Edge &e : t.edges) {
    if (!e.is_leaf()) continue;
    if (e.leaf.kind == LeafKind::end) {
      if (!e.leaf.fixed) continue;
      LatticeVec prim = primitive(e.dir);
      // det(prim, pos) = offset, i.e.  -prim.y * x + prim.x * y = offset
      std::vector<Int> row(ex.n_unknowns, Int(0));
      for (int j = 0; j < ex.n_unknowns; ++j)
        row[j] = Int(-prim.y) * ex.cx[e.a][j] + Int(prim.x) * ex.cy[e.a][j];
      push_row(std::move(row), fixed_offset(cond, e.leaf));
    } else {
      QPoint p = condition_point(cond, e.leaf);
      push_row(ex.cx[e.a], p.x);
      push_row(ex.cy[e.a], p.y);
    }
  }
  (void)deg;
  return sys;
}

std::optional<std::vector<Rat>> solve_exact(const LinearSystem &sys) {
  const size_t n = sys.a.size();
  if (n != (sys.a.empty() ? 0 : sys.a[0].size()) || sys.rhs.size() != n)
    throw std::invalid_argument("solve_exact: system is not square");
  if (n == 0) return std::vector<Rat>{};

  // Augmented integer matrix; each row is scaled by the denominator of its
  // right-hand side so fraction-free elimination stays in Z.
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    Int den = rat_den(sys.rhs[i]);
    for (size_t j = 0; j < n; ++j) m[i][j] = sys.a[i][j] * den;
    m[i][n] = rat_num(sys.rhs[i]);
  }

  Int div_prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot_row = k;
    while (pivot_row < n && m[pivot_row][k] == 0) ++pivot_row;
    if (pivot_row == n) return std::nullopt;
    if (pivot_row != k) std::swap(m[pivot_row], m[k]);
    const Int pivot = m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j <= n; ++j)
        m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / div_prev;
      m[i][k] = 0;
    }
    div_prev = pivot;
  }
  if (m[n - 1][n - 1] == 0) return std::nullopt;

  std::vector<Rat> x(n);
  for (size_t i = n; i-- > 0;) {
    Rat sum = Rat(m[i][n]);
    for (size_t j = i + 1; j < n; ++j) sum -= Rat(m[i][j]) * x[j];
    x[i] = sum / Rat(m[i][i]);
  }
  return x;
}

namespace {

// Seed the vertex states from markings and fixed ends, then push point and
// line knowledge along bounded edges to a fixpoint.  Returns false on a
// contradiction.
bool propagate(const CombType &t, const Conditions &cond, std::vector<VState> &st) {
  st.assign(t.n_vertices, VState{});
  std::deque<int> queue;
  std::vector<bool> queued(t.n_vertices, false);
  auto touch = [&](int v) {
    if (!queued[v]) {
      queued[v] = true;
      queue.push_back(v);
    }
  };
  auto apply = [&](int v, MeetResult r) -> bool {
    if (r == MeetResult::contradiction) return false;
    if (r == MeetResult::changed) touch(v);
    return true;
  };

  for (const Edge &e : t.edges) {
    if (!e.is_leaf()) continue;
    if (e.leaf.kind == LeafKind::end) {
      if (!e.leaf.fixed) continue;
      LatticeVec prim = primitive(e.dir);
      if (!apply(e.a, meet_line(st[e.a], {-prim.y, prim.x, fixed_offset(cond, e.leaf)})))
        return false;
    } else {
      if (!apply(e.a, meet_point(st[e.a], condition_point(cond, e.leaf))))
        return false;
    }
  }

  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    queued[u] = false;
    for (int eid : t.adj[u]) {
      const Edge &e = t.edges[eid];
      if (e.is_leaf()) continue;
      int w = t.other(eid, u);
      LatticeVec d = t.dir_from(eid, u);
      MeetResult r = MeetResult::unchanged;
      if (st[u].kind == VState::point) {
        // w lies on the line through pos(u) with direction d
        Line l{-d.y, d.x, Rat(-d.y) * st[u].p.x + Rat(d.x) * st[u].p.y};
        r = meet_line(st[w], l);
      } else if (st[u].kind == VState::line && st[u].a * d.x + st[u].b * d.y == 0) {
        // the edge runs inside the known line, so w lies on it too
        r = meet_line(st[w], {st[u].a, st[u].b, st[u].c});
      }
      if (!apply(w, r)) return false;
    }
  }
  return true;
}

} // namespace

bool placement_feasible(const CombType &t, const Conditions &cond) {
  std::vector<VState> st;
  if (!propagate(t, cond, st)) return false;
  // A bounded edge whose two endpoints are both pinned must run forward.
  for (const Edge &e : t.edges) {
    if (e.is_leaf()) continue;
    if (st[e.a].kind != VState::point || st[e.b].kind != VState::point) continue;
    Rat dx = st[e.b].p.x - st[e.a].p.x;
    Rat dy = st[e.b].p.y - st[e.a].p.y;
    Rat len = e.dir.x != 0 ? dx / Rat(e.dir.x) : dy / Rat(e.dir.y);
    if (dx != len * Rat(e.dir.x) || dy != len * Rat(e.dir.y) || len < 0) return false;
  }
  return true;
}

Placement place_curve(const CombType &t, const Degree &deg, const Conditions &cond) {
  Placement out;
  if (t.adj.size() != static_cast<size_t>(t.n_vertices))
    throw std::invalid_argument("place_curve: adjacency not built");

  // Degrees of freedom vs. conditions: only square types can have isolated
  // transverse solutions.
  long long rows = 0;
  for (const Edge &e : t.edges) {
    if (!e.is_leaf()) continue;
    if (e.leaf.kind == LeafKind::end) rows += e.leaf.fixed ? 1 : 0;
    else rows += 2;
  }
  long long unknowns = 2 + t.bounded_count();
  if (rows != unknowns) {
    out.status = PlaceStatus::not_square;
    return out;
  }

  std::vector<VState> st;
  if (!propagate(t, cond, st)) {
    out.status = PlaceStatus::not_realizable;
    return out;
  }

  bool all_points = true;
  for (const VState &s : st)
    if (s.kind != VState::point) {
      all_points = false;
      break;
    }

  out.pos.assign(t.n_vertices, QPoint{});
  if (all_points) {
    for (int v = 0; v < t.n_vertices; ++v) out.pos[v] = st[v].p;
  } else {
    // Propagation alone does not pin every vertex: solve the full system.
    LinearSystem sys = build_system(t, deg, cond);
    auto sol = solve_exact(sys);
    if (!sol) {
      out.status = PlaceStatus::singular;
      return out;
    }
    Expansion ex = expand_positions(t, sys.root);
    for (int v = 0; v < t.n_vertices; ++v) {
      QPoint p{Rat(0), Rat(0)};
      for (int j = 0; j < ex.n_unknowns; ++j) {
        if (ex.cx[v][j] != 0) p.x += Rat(ex.cx[v][j]) * (*sol)[j];
        if (ex.cy[v][j] != 0) p.y += Rat(ex.cy[v][j]) * (*sol)[j];
      }
      out.pos[v] = p;
    }
  }

  // Verify every original condition against the final positions.  (The
  // propagation path derives only necessary facts; an inconsistent square
  // system can still pin all vertices without satisfying everything.)
  for (const Edge &e : t.edges) {
    if (!e.is_leaf()) continue;
    if (e.leaf.kind == LeafKind::end) {
      if (!e.leaf.fixed) continue;
      LatticeVec prim = primitive(e.dir);
      const QPoint &p = out.pos[e.a];
      if (Rat(-prim.y) * p.x + Rat(prim.x) * p.y != fixed_offset(cond, e.leaf)) {
        out.status = PlaceStatus::not_realizable;
        return out;
      }
    } else if (!(out.pos[e.a] == condition_point(cond, e.leaf))) {
      out.status = PlaceStatus::not_realizable;
      return out;
    }
  }

  // Recover the edge lengths and check their signs.
  out.length.assign(t.edges.size(), Rat(0));
  bool zero = false;
  for (size_t eid = 0; eid < t.edges.size(); ++eid) {
    const Edge &e = t.edges[eid];
    if (e.is_leaf()) continue;
    QPoint delta{out.pos[e.b].x - out.pos[e.a].x, out.pos[e.b].y - out.pos[e.a].y};
    Rat len = e.dir.x != 0 ? delta.x / Rat(e.dir.x) : delta.y / Rat(e.dir.y);
    if (delta.x != len * Rat(e.dir.x) || delta.y != len * Rat(e.dir.y) || len < 0) {
      out.status = PlaceStatus::not_realizable;
      return out;
    }
    if (len == 0) zero = true;
    out.length[eid] = len;
  }

  out.status = zero ? PlaceStatus::degenerate : PlaceStatus::ok;
  return out;
}

} // namespace trop
