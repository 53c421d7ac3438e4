#include "curve.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace trop {

std::string mode_str(Mode m) {
  switch (m) {
  case Mode::broccoli: return "broccoli";
  case Mode::welschinger: return "welschinger";
  default: return "complex";
  }
}

std::optional<Mode> mode_parse(std::string_view s) {
  if (s == "broccoli") return Mode::broccoli;
  if (s == "welschinger") return Mode::welschinger;
  if (s == "complex") return Mode::complex_count;
  return std::nullopt;
}

// ----------------------------------------------------------------- degrees

bool Degree::balanced() const {
  LatticeVec sum{0, 0};
  for (const EndSpec &e : ends) sum = sum + e.dir;
  return sum.is_zero();
}

long long Degree::fixed_count() const {
  long long n = 0;
  for (const EndSpec &e : ends) n += e.fixed ? 1 : 0;
  return n;
}

Int group_order(const Degree &deg) {
  std::map<LatticeVec, long long> classes;
  for (const EndSpec &e : deg.ends)
    if (!e.fixed) ++classes[e.dir];
  Int g = 1;
  for (auto &[dir, count] : classes)
    for (long long j = 2; j <= count; ++j) g *= j;
  return g;
}

Degree del_pezzo_degree(DelPezzoClass cls, const std::vector<long long> &params) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("del_pezzo_degree: wrong number of parameters");
  };
  std::vector<LatticeVec> poly;
  switch (cls) {
  case DelPezzoClass::p2: {
    need(1);
    long long d = params[0];
    poly = {{0, 0}, {d, 0}, {0, d}};
    break;
  }
  case DelPezzoClass::p1xp1: {
    need(2);
    long long d1 = params[0], d2 = params[1];
    poly = {{0, 0}, {d1, 0}, {d1, d2}, {0, d2}};
    break;
  }
  case DelPezzoClass::bl1: {
    need(2);
    long long d = params[0], d1 = params[1];
    poly = {{0, 0}, {d - d1, 0}, {d - d1, d1}, {0, d}};
    break;
  }
  case DelPezzoClass::bl2: {
    need(3);
    long long d = params[0], d1 = params[1], d2 = params[2];
    poly = {{d2, 0}, {d - d1, 0}, {d - d1, d1}, {0, d}, {0, d2}};
    break;
  }
  case DelPezzoClass::bl3: {
    need(4);
    long long d = params[0], d1 = params[1], d2 = params[2], d3 = params[3];
    poly = {{d2, 0}, {d - d1, 0}, {d - d1, d1}, {d3, d - d3}, {0, d - d3}, {0, d2}};
    break;
  }
  }
  // Walk the boundary counterclockwise; drop degenerate (zero) sides.
  std::vector<LatticeVec> sides;
  long long area2 = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    LatticeVec a = poly[i], b = poly[(i + 1) % poly.size()];
    area2 += det2(a, b);
    LatticeVec e = b - a;
    if (!e.is_zero()) sides.push_back(e);
  }
  if (area2 <= 0 || sides.size() < 3)
    throw std::invalid_argument("del_pezzo_degree: parameters do not define a polygon");
  for (size_t i = 0; i < sides.size(); ++i)
    if (det2(sides[i], sides[(i + 1) % sides.size()]) < 0)
      throw std::invalid_argument("del_pezzo_degree: polygon is not convex");
  Degree deg;
  for (const LatticeVec &e : sides) {
    long long len = weight_and_parity(e).weight;
    LatticeVec normal{e.y / len, -e.x / len}; // outward for a CCW boundary
    for (long long j = 0; j < len; ++j) deg.ends.push_back({normal, false});
  }
  assert(deg.balanced());
  return deg;
}

Degree relative_degree(long long d, const WeightSeq &alpha, const WeightSeq &beta) {
  if (d < 1) throw std::invalid_argument("relative_degree: d must be positive");
  if (alpha.stats().weight + beta.stats().weight != d)
    throw std::invalid_argument("relative_degree: alpha and beta weights must sum to d");
  Degree deg;
  for (long long j = 0; j < d; ++j) deg.ends.push_back({{0, -1}, false});
  for (long long j = 0; j < d; ++j) deg.ends.push_back({{1, 1}, false});
  for (long long k = 1; k <= alpha.max_weight(); ++k)
    for (long long j = 0; j < alpha.at(k); ++j) deg.ends.push_back({{-k, 0}, true});
  for (long long k = 1; k <= beta.max_weight(); ++k)
    for (long long j = 0; j < beta.at(k); ++j) deg.ends.push_back({{-k, 0}, false});
  assert(deg.balanced());
  return deg;
}

// --------------------------------------------------------------- tree model

void CombType::build_adj() {
  adj.assign(static_cast<size_t>(n_vertices), {});
  for (size_t i = 0; i < edges.size(); ++i) {
    adj[static_cast<size_t>(edges[i].a)].push_back(static_cast<int>(i));
    if (edges[i].b >= 0) adj[static_cast<size_t>(edges[i].b)].push_back(static_cast<int>(i));
  }
}

long long CombType::bounded_count() const {
  long long n = 0;
  for (const Edge &e : edges) n += e.is_leaf() ? 0 : 1;
  return n;
}

long long type_dimension(const CombType &t) { return 2 + t.bounded_count(); }

bool derive_directions(CombType &t) {
  t.build_adj();
  std::vector<bool> known(t.edges.size());
  size_t unknown = 0;
  for (size_t i = 0; i < t.edges.size(); ++i) {
    known[i] = t.edges[i].is_leaf();
    if (!known[i]) ++unknown;
  }
  // Peel: any vertex with exactly one unknown incident edge determines it.
  bool progress = true;
  while (unknown > 0 && progress) {
    progress = false;
    for (int v = 0; v < t.n_vertices; ++v) {
      int pending = -1;
      int count = 0;
      LatticeVec sum{0, 0};
      for (int eid : t.adj[static_cast<size_t>(v)]) {
        if (known[static_cast<size_t>(eid)]) {
          sum = sum + t.dir_from(eid, v);
        } else {
          pending = eid;
          ++count;
        }
      }
      if (count == 1) {
        Edge &e = t.edges[static_cast<size_t>(pending)];
        LatticeVec away{-sum.x, -sum.y};
        e.dir = (e.a == v) ? away : -away;
        known[static_cast<size_t>(pending)] = true;
        --unknown;
        progress = true;
      }
    }
  }
  if (unknown > 0) return false; // disconnected or not a tree
  for (const Edge &e : t.edges)
    if (!e.is_leaf() && e.dir.is_zero()) return false; // contracted bounded edge
  // Verify balancing at every vertex (leaf directions must be consistent).
  for (int v = 0; v < t.n_vertices; ++v) {
    LatticeVec sum{0, 0};
    for (int eid : t.adj[static_cast<size_t>(v)]) sum = sum + t.dir_from(eid, v);
    if (!sum.is_zero()) return false;
  }
  return true;
}

// -------------------------------------------------------------- orientation

Orientation canonical_orientation(const CombType &t) {
  Orientation result;
  result.flow.assign(t.edges.size(), 0);

  std::vector<bool> marked(static_cast<size_t>(t.n_vertices), false);
  for (const Edge &e : t.edges)
    if (e.is_leaf() && e.leaf.kind != LeafKind::end)
      marked[static_cast<size_t>(e.a)] = true;

  // Components of the curve cut at marked vertices: edges (except marking
  // leaves) connected through unmarked vertices.
  std::vector<int> comp(t.edges.size(), -1);
  int n_comp = 0;
  for (size_t start = 0; start < t.edges.size(); ++start) {
    const Edge &se = t.edges[start];
    if (comp[start] >= 0 || (se.is_leaf() && se.leaf.kind != LeafKind::end)) continue;
    int c = n_comp++;
    std::vector<int> stack{static_cast<int>(start)};
    comp[start] = c;
    while (!stack.empty()) {
      int eid = stack.back();
      stack.pop_back();
      const Edge &e = t.edges[static_cast<size_t>(eid)];
      for (int v : {e.a, e.b}) {
        if (v < 0 || marked[static_cast<size_t>(v)]) continue;
        for (int next : t.adj[static_cast<size_t>(v)]) {
          const Edge &ne = t.edges[static_cast<size_t>(next)];
          if (comp[static_cast<size_t>(next)] >= 0) continue;
          if (ne.is_leaf() && ne.leaf.kind != LeafKind::end) continue;
          comp[static_cast<size_t>(next)] = c;
          stack.push_back(next);
        }
      }
    }
  }

  // Each component needs exactly one free (non-fixed unmarked) end.
  std::vector<int> unit(static_cast<size_t>(n_comp), -1);
  for (size_t i = 0; i < t.edges.size(); ++i) {
    const Edge &e = t.edges[i];
    if (!e.is_leaf() || e.leaf.kind != LeafKind::end) continue;
    if (e.leaf.fixed) continue;
    int c = comp[i];
    if (unit[static_cast<size_t>(c)] >= 0) {
      result.status = OrientStatus::ambiguous;
      return result;
    }
    unit[static_cast<size_t>(c)] = static_cast<int>(i);
  }
  for (int c = 0; c < n_comp; ++c)
    if (unit[static_cast<size_t>(c)] < 0) {
      result.status = OrientStatus::no_free_end;
      return result;
    }

  // Orient each component toward its free end.
  result.status = OrientStatus::ok;
  for (size_t i = 0; i < t.edges.size(); ++i) {
    const Edge &e = t.edges[i];
    if (e.is_leaf() && e.leaf.kind != LeafKind::end) result.flow[i] = 1; // markings outward
  }
  std::vector<int> order; // vertices reached, breadth-first from the unit's vertex
  for (int c = 0; c < n_comp; ++c) {
    int ue = unit[static_cast<size_t>(c)];
    result.flow[static_cast<size_t>(ue)] = 1; // free end points away
    int root = t.edges[static_cast<size_t>(ue)].a;
    if (marked[static_cast<size_t>(root)]) continue; // single dangling end
    order.assign(1, root);
    std::vector<bool> seen(static_cast<size_t>(t.n_vertices), false);
    seen[static_cast<size_t>(root)] = true;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      for (int eid : t.adj[static_cast<size_t>(v)]) {
        if (comp[static_cast<size_t>(eid)] != c) continue;
        const Edge &e = t.edges[static_cast<size_t>(eid)];
        if (e.is_leaf()) {
          if (static_cast<int>(eid) != ue && e.leaf.kind == LeafKind::end)
            result.flow[static_cast<size_t>(eid)] = -1; // fixed end points inward
          continue;
        }
        int w = t.other(eid, v);
        if (seen[static_cast<size_t>(w)]) continue;
        // flow from w toward v (toward the root / free end)
        result.flow[static_cast<size_t>(eid)] = (e.b == v) ? 1 : -1;
        if (!marked[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          order.push_back(w);
        }
      }
    }
  }
  return result;
}

// ----------------------------------------------------------- classification

std::string tag_str(VertexTag tag) {
  switch (tag) {
  case VertexTag::t1: return "1";
  case VertexTag::t2: return "2";
  case VertexTag::t3: return "3";
  case VertexTag::t4: return "4";
  case VertexTag::t5: return "5";
  case VertexTag::t6a: return "6a";
  case VertexTag::t6b: return "6b";
  case VertexTag::t7: return "7";
  case VertexTag::t8: return "8";
  default: return "?";
  }
}

namespace {

struct Incident {
  LatticeVec dir; // away from the vertex
  bool even = false;
  bool out = false;
  bool pair_leaf = false;
};

} // namespace

std::vector<VertexInfo> classify_vertices(const CombType &t, const Orientation &o) {
  std::vector<VertexInfo> result(static_cast<size_t>(t.n_vertices));
  for (int v = 0; v < t.n_vertices; ++v) {
    int real_marks = 0, complex_marks = 0;
    std::vector<Incident> inc;
    for (int eid : t.adj[static_cast<size_t>(v)]) {
      const Edge &e = t.edges[static_cast<size_t>(eid)];
      if (e.is_leaf() && e.leaf.kind == LeafKind::real_mark) {
        ++real_marks;
        continue;
      }
      if (e.is_leaf() && e.leaf.kind == LeafKind::complex_mark) {
        ++complex_marks;
        continue;
      }
      Incident in;
      in.dir = t.dir_from(eid, v);
      in.even = weight_and_parity(in.dir).even;
      in.out = o.out_at(t, eid, v);
      in.pair_leaf = e.is_leaf() && e.leaf.is_pair();
      inc.push_back(in);
    }

    VertexInfo &info = result[static_cast<size_t>(v)];
    info.tag = VertexTag::unclassifiable;
    info.a = 0;

    auto det_of_first_two = [&]() { // |det| of two adjacent unmarked directions
      return std::abs(det2(inc[0].dir, inc[1].dir));
    };
    int evens = 0, outs = 0, pair_leaves = 0;
    for (const Incident &in : inc) {
      evens += in.even ? 1 : 0;
      outs += in.out ? 1 : 0;
      pair_leaves += in.pair_leaf ? 1 : 0;
    }

    if (real_marks + complex_marks > 1) continue;

    if (real_marks == 1) {
      // Real marking: two odd unmarked edges, both pointing away.
      if (inc.size() == 2 && evens == 0 && outs == 2) info.tag = VertexTag::t1;
      continue;
    }
    if (complex_marks == 1) {
      if (inc.size() == 3 && outs == 3) {
        if (evens == 0) {
          info.tag = VertexTag::t5;
          info.a = det_of_first_two();
        } else if (evens == 1) {
          // One even edge among two odd ones.  If the even edge is a glued
          // double end the vertex would be 5-valent after ungluing: rejected.
          const Incident *even_edge = nullptr;
          std::vector<LatticeVec> odd;
          for (const Incident &in : inc) {
            if (in.even) even_edge = &in;
            else odd.push_back(in.dir);
          }
          if (!even_edge->pair_leaf) {
            info.tag = VertexTag::t6a;
            info.a = std::abs(det2(odd[0], odd[1]));
          }
        }
        continue;
      }
      if (inc.size() == 2 && evens == 2 && outs == 2) {
        if (pair_leaves == 0) info.tag = VertexTag::t7;
        else if (pair_leaves == 1) info.tag = VertexTag::t6b;
        // two pair leaves would be 6-valent after ungluing: unclassifiable
      }
      continue;
    }

    // Unmarked vertices: trivalent in the glued model.
    if (inc.size() != 3 || outs != 1) continue;
    if (evens == 0) {
      info.tag = VertexTag::t2;
      info.a = det_of_first_two();
    } else if (evens == 1) {
      // The even edge must point in and the outgoing edge is odd.
      const Incident *even_in = nullptr;
      for (const Incident &in : inc)
        if (in.even) even_in = &in;
      if (!even_in->out) {
        info.tag = VertexTag::t3;
        info.a = det_of_first_two();
      }
    } else if (evens == 3) {
      const Incident *out_edge = nullptr;
      std::vector<LatticeVec> ins;
      for (const Incident &in : inc) {
        if (in.out) out_edge = &in;
        else ins.push_back(in.dir);
      }
      if (out_edge->pair_leaf) {
        info.tag = VertexTag::t8;
        info.a = std::abs(det2(ins[0], ins[1]));
      } else {
        info.tag = VertexTag::t4;
        info.a = det_of_first_two();
      }
    }
    // evens == 2 cannot balance with one odd edge.
  }

  // Lattice parity check: at any vertex with three unmarked edges the
  // determinant has the parity of the total weight of the adjacent edges.
  for (int v = 0; v < t.n_vertices; ++v) {
    const VertexInfo &info = result[static_cast<size_t>(v)];
    if (info.tag == VertexTag::unclassifiable) continue;
    long long wsum = 0;
    int unmarked = 0;
    for (int eid : t.adj[static_cast<size_t>(v)]) {
      const Edge &e = t.edges[static_cast<size_t>(eid)];
      if (e.is_leaf() && e.leaf.kind != LeafKind::end) continue;
      wsum += weight_and_parity(t.dir_from(eid, v)).weight;
      ++unmarked;
    }
    if (unmarked == 3) assert((info.a - wsum) % 2 == 0);
  }
  return result;
}

GaussRat vertex_multiplicity(VertexTag tag, long long a, bool labeled) {
  GaussRat m;
  switch (tag) {
  case VertexTag::t1:
  case VertexTag::t7: m = GaussRat(Rat(1)); break;
  case VertexTag::t2:
  case VertexTag::t6a: m = ipow(a - 1); break;
  case VertexTag::t3:
  case VertexTag::t4:
  case VertexTag::t5: m = GaussRat(Rat(a)) * ipow(a - 1); break;
  case VertexTag::t6b: m = ipow(a - 1); break; // a = 0: equals -i
  case VertexTag::t8: m = GaussRat(Rat(-a)); break;
  default: throw std::invalid_argument("vertex_multiplicity: unclassifiable vertex");
  }
  if (!labeled && (tag == VertexTag::t6b || tag == VertexTag::t8))
    m = m * GaussRat(Rat(1, 2));
  return m;
}

bool tag_allowed(VertexTag tag, Mode mode) {
  switch (mode) {
  case Mode::broccoli:
    return tag == VertexTag::t1 || tag == VertexTag::t2 || tag == VertexTag::t3 ||
           tag == VertexTag::t4 || tag == VertexTag::t5 || tag == VertexTag::t6a ||
           tag == VertexTag::t6b;
  case Mode::welschinger:
    return tag == VertexTag::t1 || tag == VertexTag::t2 || tag == VertexTag::t3 ||
           tag == VertexTag::t4 || tag == VertexTag::t5 || tag == VertexTag::t6b ||
           tag == VertexTag::t7 || tag == VertexTag::t8;
  default:
    return false;
  }
}

int pair_vertex_count(const std::vector<VertexInfo> &classes) {
  int n = 0;
  for (const VertexInfo &c : classes)
    n += (c.tag == VertexTag::t6b || c.tag == VertexTag::t8) ? 1 : 0;
  return n;
}

Rat curve_multiplicity(const CombType &t, const std::vector<VertexInfo> &classes,
                       bool labeled) {
  GaussRat m{Rat(1)};
  for (const VertexInfo &c : classes) m *= vertex_multiplicity(c.tag, c.a, labeled);
  // Factor i^(w-1) for every unmarked end of the unglued curve.
  for (const Edge &e : t.edges) {
    if (!e.is_leaf() || e.leaf.kind != LeafKind::end) continue;
    long long w = weight_and_parity(e.dir).weight;
    if (e.leaf.is_pair()) {
      // two original ends of half the glued weight each
      m *= ipow(2 * (w / 2 - 1));
    } else {
      m *= ipow(w - 1);
    }
  }
  if (!m.is_real())
    throw std::logic_error("curve_multiplicity: non-real total multiplicity");
  return m.re;
}

Int complex_multiplicity(const CombType &t) {
  Int m = 1;
  for (int v = 0; v < t.n_vertices; ++v) {
    bool marked = false;
    std::vector<LatticeVec> dirs;
    for (int eid : t.adj[static_cast<size_t>(v)]) {
      const Edge &e = t.edges[static_cast<size_t>(eid)];
      if (e.is_leaf() && e.leaf.kind != LeafKind::end) marked = true;
      else dirs.push_back(t.dir_from(eid, v));
    }
    if (marked) continue;
    if (dirs.size() != 3)
      throw std::invalid_argument("complex_multiplicity: curve is not trivalent");
    m *= std::abs(det2(dirs[0], dirs[1]));
  }
  return m;
}

// --------------------------------------------------- unoriented definitions

namespace {

// Unglued incidence item: a bounded edge, an end, a double-end member or a
// marking, attached to one or two vertices.
struct Item {
  int va = -1, vb = -1; // vb >= 0 only for bounded edges
  bool even = false;
  bool marking = false;
  bool end = false;        // unbounded non-marking
  bool fixed_end = false;
  bool pair_member = false; // member of a double end (odd)
};

std::vector<Item> unglue(const CombType &t) {
  std::vector<Item> items;
  for (const Edge &e : t.edges) {
    if (!e.is_leaf()) {
      items.push_back({e.a, e.b, weight_and_parity(e.dir).even, false, false, false, false});
      continue;
    }
    if (e.leaf.kind != LeafKind::end) {
      items.push_back({e.a, -1, false, true, false, false, false});
      continue;
    }
    if (e.leaf.is_pair()) {
      for (int j = 0; j < 2; ++j)
        items.push_back({e.a, -1, false, false, true, false, true});
    } else {
      items.push_back({e.a, -1, weight_and_parity(e.dir).even, false, true,
                       e.leaf.fixed, false});
    }
  }
  return items;
}

// Components of a selected subset of items, connected through shared
// vertices.  Returns a component id per selected item (-1 for unselected).
int components(const std::vector<Item> &items, const std::vector<bool> &in_sub,
               int n_vertices, std::vector<int> &comp) {
  comp.assign(items.size(), -1);
  std::vector<std::vector<int>> at_vertex(static_cast<size_t>(n_vertices));
  for (size_t i = 0; i < items.size(); ++i) {
    if (!in_sub[i]) continue;
    at_vertex[static_cast<size_t>(items[i].va)].push_back(static_cast<int>(i));
    if (items[i].vb >= 0) at_vertex[static_cast<size_t>(items[i].vb)].push_back(static_cast<int>(i));
  }
  int n_comp = 0;
  for (size_t start = 0; start < items.size(); ++start) {
    if (!in_sub[start] || comp[start] >= 0) continue;
    int c = n_comp++;
    std::vector<int> stack{static_cast<int>(start)};
    comp[start] = c;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int v : {items[static_cast<size_t>(i)].va, items[static_cast<size_t>(i)].vb}) {
        if (v < 0) continue;
        for (int j : at_vertex[static_cast<size_t>(v)]) {
          if (comp[static_cast<size_t>(j)] < 0) {
            comp[static_cast<size_t>(j)] = c;
            stack.push_back(j);
          }
        }
      }
    }
  }
  return n_comp;
}

} // namespace

bool unoriented_broccoli_check(const CombType &t) {
  std::vector<Item> items = unglue(t);

  // (i) complex markings sit at 4-valent vertices of the unglued curve.
  std::vector<int> valence(static_cast<size_t>(t.n_vertices), 0);
  for (const Item &it : items) {
    ++valence[static_cast<size_t>(it.va)];
    if (it.vb >= 0) ++valence[static_cast<size_t>(it.vb)];
  }
  for (const Edge &e : t.edges)
    if (e.is_leaf() && e.leaf.kind == LeafKind::complex_mark &&
        valence[static_cast<size_t>(e.a)] != 4)
      return false;

  // (ii) every component of the even subgraph (even edges and markings)
  // has exactly one stem: a 1-valent vertex or a non-fixed even end.
  std::vector<bool> in_even(items.size());
  for (size_t i = 0; i < items.size(); ++i)
    in_even[i] = items[i].marking || (items[i].even && !items[i].pair_member);
  std::vector<int> comp;
  int n_comp = components(items, in_even, t.n_vertices, comp);
  if (n_comp == 0) return true;

  std::vector<int> even_valence(static_cast<size_t>(t.n_vertices), 0);
  std::vector<int> vertex_comp(static_cast<size_t>(t.n_vertices), -1);
  for (size_t i = 0; i < items.size(); ++i) {
    if (!in_even[i]) continue;
    for (int v : {items[i].va, items[i].vb}) {
      if (v < 0) continue;
      ++even_valence[static_cast<size_t>(v)];
      vertex_comp[static_cast<size_t>(v)] = comp[i];
    }
  }
  std::vector<int> stems(static_cast<size_t>(n_comp), 0);
  for (int v = 0; v < t.n_vertices; ++v)
    if (vertex_comp[static_cast<size_t>(v)] >= 0 && even_valence[static_cast<size_t>(v)] == 1)
      ++stems[static_cast<size_t>(vertex_comp[static_cast<size_t>(v)])];
  for (size_t i = 0; i < items.size(); ++i)
    if (in_even[i] && items[i].end && items[i].even && !items[i].fixed_end)
      ++stems[static_cast<size_t>(comp[i])];
  for (int c = 0; c < n_comp; ++c)
    if (stems[static_cast<size_t>(c)] != 1) return false;
  return true;
}

bool unoriented_welschinger_check(const CombType &t) {
  std::vector<Item> items = unglue(t);

  // Even subgraph including double ends.
  std::vector<bool> in_even(items.size());
  for (size_t i = 0; i < items.size(); ++i)
    in_even[i] = items[i].marking || items[i].even || items[i].pair_member;
  std::vector<int> comp;
  int n_comp = components(items, in_even, t.n_vertices, comp);

  std::vector<int> valence(static_cast<size_t>(t.n_vertices), 0);
  std::vector<int> even_valence(static_cast<size_t>(t.n_vertices), 0);
  std::vector<bool> has_odd(static_cast<size_t>(t.n_vertices), false);
  std::vector<int> vertex_comp(static_cast<size_t>(t.n_vertices), -1);
  for (size_t i = 0; i < items.size(); ++i) {
    for (int v : {items[i].va, items[i].vb}) {
      if (v < 0) continue;
      ++valence[static_cast<size_t>(v)];
      if (in_even[i]) {
        ++even_valence[static_cast<size_t>(v)];
        vertex_comp[static_cast<size_t>(v)] = comp[i];
      } else {
        has_odd[static_cast<size_t>(v)] = true;
      }
    }
  }

  // (i) complex markings: at a 4-valent vertex, or not isolated in the even
  // subgraph.
  for (const Edge &e : t.edges)
    if (e.is_leaf() && e.leaf.kind == LeafKind::complex_mark) {
      int v = e.a;
      if (valence[static_cast<size_t>(v)] != 4 && even_valence[static_cast<size_t>(v)] < 2)
        return false;
    }

  // (ii) exactly one root per component: a vertex also adjacent to an odd
  // (non-double) edge, or a non-fixed even end.
  std::vector<int> roots(static_cast<size_t>(n_comp), 0);
  for (int v = 0; v < t.n_vertices; ++v)
    if (vertex_comp[static_cast<size_t>(v)] >= 0 && has_odd[static_cast<size_t>(v)])
      ++roots[static_cast<size_t>(vertex_comp[static_cast<size_t>(v)])];
  for (size_t i = 0; i < items.size(); ++i)
    if (in_even[i] && items[i].end && items[i].even && !items[i].fixed_end)
      ++roots[static_cast<size_t>(comp[i])];
  for (int c = 0; c < n_comp; ++c)
    if (roots[static_cast<size_t>(c)] != 1) return false;
  return true;
}

// ----------------------------------------------------------------- encoding

namespace {

std::string leaf_code(const Edge &e) {
  switch (e.leaf.kind) {
  case LeafKind::real_mark: return "R" + std::to_string(e.leaf.mark);
  case LeafKind::complex_mark: return "C" + std::to_string(e.leaf.mark);
  default: {
    std::string s = "E";
    if (e.leaf.is_pair()) s += "*";
    if (e.leaf.fixed) s += "#" + std::to_string(e.leaf.deg_a); // fixed ends keep identity
    return s;
  }
  }
}

std::string encode_from(const CombType &t, int v, int via) {
  std::vector<std::string> terms;
  for (int eid : t.adj[static_cast<size_t>(v)]) {
    if (eid == via) continue;
    const Edge &e = t.edges[static_cast<size_t>(eid)];
    std::string term = "[" + vec_str(t.dir_from(eid, v)) + "]";
    if (e.is_leaf()) term += leaf_code(e);
    else term += encode_from(t, t.other(eid, v), eid);
    terms.push_back(std::move(term));
  }
  std::sort(terms.begin(), terms.end());
  std::string out = "(";
  for (const std::string &s : terms) out += s;
  out += ")";
  return out;
}

} // namespace

std::string type_encoding(const CombType &t) {
  std::string best;
  for (int v = 0; v < t.n_vertices; ++v) {
    std::string enc = encode_from(t, v, -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

} // namespace trop
