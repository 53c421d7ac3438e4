#include "core/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace trop {

long long expected_real_markings(Mode mode, const Degree &deg, long long s) {
  long long n = deg.size();
  long long f = deg.fixed_count();
  long long r = mode == Mode::complex_count ? n - 1 - f - s : n - 1 - f - 2 * s;
  if (s < 0 || r < 0)
    throw std::invalid_argument("dimension mismatch: too many complex points for this degree");
  return r;
}

namespace {

// --------------------------------------------------------------- pair shells

// A leaf of the glued skeleton: a genuine end, a fixed end, or a double end
// (two non-fixed ends of the same odd direction, drawn with doubled vector).
struct GluedLeaf {
  LatticeVec dir;
  int deg_a = -1;
  int deg_b = -1;
  bool fixed = false;
};

// Visit one canonical leaf list per choice of "how many double ends in each
// odd direction class" with the given total.  Pairing any other members of
// a class gives an isomorphic skeleton, so the lowest indices are paired.
void pair_shells(const Degree &deg, long long t,
                 const std::function<void(const std::vector<GluedLeaf> &)> &visit) {
  std::map<LatticeVec, std::vector<int>> classes;
  for (size_t i = 0; i < deg.ends.size(); ++i)
    if (!deg.ends[i].fixed) classes[deg.ends[i].dir].push_back(static_cast<int>(i));

  std::vector<std::pair<LatticeVec, std::vector<int>>> odd;
  for (auto &[dir, idx] : classes)
    if (!weight_and_parity(dir).even && idx.size() >= 2) odd.emplace_back(dir, idx);

  std::vector<long long> take(odd.size(), 0);
  std::function<void(size_t, long long)> rec = [&](size_t c, long long left) {
    if (c == odd.size()) {
      if (left != 0) return;
      std::vector<GluedLeaf> leaves;
      std::map<LatticeVec, long long> consumed;
      for (size_t k = 0; k < odd.size(); ++k) {
        consumed[odd[k].first] = 2 * take[k];
        for (long long j = 0; j < take[k]; ++j)
          leaves.push_back({2 * odd[k].first, odd[k].second[2 * j], odd[k].second[2 * j + 1], false});
      }
      for (size_t i = 0; i < deg.ends.size(); ++i) {
        const EndSpec &e = deg.ends[i];
        if (e.fixed) {
          leaves.push_back({e.dir, static_cast<int>(i), -1, true});
          continue;
        }
        auto it = consumed.find(e.dir);
        if (it != consumed.end() && it->second > 0) {
          --it->second; // swallowed by a double end
          continue;
        }
        leaves.push_back({e.dir, static_cast<int>(i), -1, false});
      }
      visit(leaves);
      return;
    }
    long long cap = std::min<long long>(left, static_cast<long long>(odd[c].second.size()) / 2);
    for (long long k = 0; k <= cap; ++k) {
      take[c] = k;
      rec(c + 1, left - k);
    }
    take[c] = 0;
  };
  rec(0, t);
}

// --------------------------------------------------------- trivalent trees

struct TreeEdge {
  int u, v;
};

// All trees with L labeled leaves 0..L-1 and trivalent internal nodes
// L..2L-3, generated by inserting one leaf at a time into every edge.
void all_trees(int L, const std::function<void(const std::vector<TreeEdge> &)> &visit) {
  if (L < 3) return;
  std::vector<TreeEdge> edges{{0, L}, {1, L}, {2, L}};
  int next = L + 1;
  std::function<void(int)> rec = [&](int leaf) {
    if (leaf == L) {
      visit(edges);
      return;
    }
    size_t n = edges.size();
    for (size_t i = 0; i < n; ++i) {
      TreeEdge old = edges[i];
      int m = next++;
      edges[i] = {old.u, m};
      edges.push_back({m, old.v});
      edges.push_back({m, leaf});
      rec(leaf + 1);
      edges.pop_back();
      edges.pop_back();
      edges[i] = old;
      --next;
    }
  };
  rec(3);
}

// Turn a leaf-labeled tree into an unmarked combinatorial type.  False when
// balancing forces a contracted bounded edge (the skeleton is degenerate and
// its curves live in other types).
bool tree_to_type(const std::vector<TreeEdge> &tree, const std::vector<GluedLeaf> &leaves,
                  CombType &out) {
  const int L = static_cast<int>(leaves.size());
  out = CombType{};
  out.n_vertices = L - 2;
  for (TreeEdge e : tree) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < L) {
      const GluedLeaf &lf = leaves[e.u];
      out.edges.push_back({e.v - L, -1, lf.dir, {LeafKind::end, lf.deg_a, lf.deg_b, -1, lf.fixed}});
    } else {
      out.edges.push_back({e.u - L, e.v - L, {0, 0}, {}});
    }
  }
  out.build_adj();
  return derive_directions(out);
}

// ------------------------------------------------------------- marking DFS

struct SearchCtx {
  const Problem &p;
  long long t_pairs = 0;
  int n_tree_vertices = 0;
  std::map<std::string, CountedCurve> found;
  CountStats stats;
  bool fault = false;
  std::atomic<bool> *stop = nullptr;
};

// Split an edge with a new 2-valent vertex (which the caller then marks).
int subdivide(CombType &t, int eid) {
  Edge e = t.edges[eid];
  int m = t.n_vertices++;
  t.edges[eid] = Edge{e.a, m, e.dir, {}};
  if (e.is_leaf())
    t.edges.push_back(Edge{m, -1, e.dir, e.leaf});
  else
    t.edges.push_back(Edge{m, e.b, e.dir, {}});
  return m;
}

bool vertex_marked(const CombType &t, int v) {
  for (const Edge &e : t.edges)
    if (e.is_leaf() && e.leaf.kind != LeafKind::end && e.a == v) return true;
  return false;
}

bool is_double_end(const Edge &e) { return e.is_leaf() && e.leaf.deg_b >= 0; }

void finalize(SearchCtx &ctx, CombType &t, long long used_sub) {
  ctx.stats.types++;
  assert(ctx.p.mode == Mode::complex_count || used_sub == ctx.t_pairs);
  (void)used_sub;

  Rat mult;
  if (ctx.p.mode == Mode::complex_count) {
    mult = Rat(complex_multiplicity(t));
  } else {
    Orientation o = canonical_orientation(t);
    if (o.status != OrientStatus::ok) return;
    std::vector<VertexInfo> classes = classify_vertices(t, o);
    for (const VertexInfo &c : classes)
      if (c.tag == VertexTag::unclassifiable || !tag_allowed(c.tag, ctx.p.mode)) return;
    mult = curve_multiplicity(t, classes, /*labeled=*/false);
  }
  if (mult == 0) return; // nothing to add and no witness to keep

  std::string key = type_encoding(t);
  auto it = ctx.found.find(key);
  if (it != ctx.found.end()) {
    assert(it->second.mult == mult);
    return;
  }

  Placement pl = place_curve(t, ctx.p.degree, ctx.p.cond);
  if (pl.status == PlaceStatus::degenerate) {
    ctx.fault = true;
    if (ctx.stop) ctx.stop->store(true);
    return;
  }
  if (pl.status != PlaceStatus::ok) return;
  ctx.stats.placed++;
  ctx.found.emplace(std::move(key), CountedCurve{t, std::move(pl), std::move(mult), ""});
}

void search(SearchCtx &ctx, const CombType &t, long long placed_real, long long placed_complex,
            long long used_sub) {
  if (ctx.stop && ctx.stop->load()) return;
  ctx.stats.nodes++;
  const Problem &p = ctx.p;

  if (placed_real == p.r && placed_complex == p.s) {
    CombType done = t;
    finalize(ctx, done, used_sub);
    return;
  }

  auto try_child = [&](CombType &&child, long long nr, long long nc, long long nsub) {
    child.build_adj();
    if (!placement_feasible(child, p.cond)) {
      ctx.stats.pruned++;
      return;
    }
    search(ctx, child, nr, nc, nsub);
  };

  if (placed_real < p.r) {
    // Real markings subdivide odd edges (any edge in the complex count).
    const int mark = static_cast<int>(placed_real);
    const size_t n_edges = t.edges.size();
    for (size_t e = 0; e < n_edges; ++e) {
      const Edge &ed = t.edges[e];
      if (ed.is_leaf() && (ed.leaf.kind != LeafKind::end || ed.leaf.fixed)) continue;
      if (p.mode != Mode::complex_count &&
          (is_double_end(ed) || weight_and_parity(ed.dir).even))
        continue;
      CombType child = t;
      int m = subdivide(child, static_cast<int>(e));
      child.edges.push_back({m, -1, {0, 0}, {LeafKind::real_mark, -1, -1, mark, false}});
      try_child(std::move(child), placed_real + 1, placed_complex, used_sub);
    }
    return;
  }

  const int mark = static_cast<int>(placed_complex);
  const long long need_sub = ctx.t_pairs - used_sub;
  const long long remaining = p.s - placed_complex;

  // A complex marking at an unmarked skeleton vertex -- as long as enough
  // markings remain to subdivide every double end.
  if (p.mode != Mode::complex_count && remaining > need_sub) {
    for (int v = 0; v < ctx.n_tree_vertices; ++v) {
      if (vertex_marked(t, v)) continue;
      CombType child = t;
      child.edges.push_back({v, -1, {0, 0}, {LeafKind::complex_mark, -1, -1, mark, false}});
      try_child(std::move(child), placed_real, placed_complex + 1, used_sub);
    }
  }

  // A complex marking subdividing an edge: double ends only (broccoli),
  // any even edge (welschinger), or any edge at all (complex count).
  if (p.mode == Mode::complex_count || need_sub > 0) {
    const size_t n_edges = t.edges.size();
    for (size_t e = 0; e < n_edges; ++e) {
      const Edge &ed = t.edges[e];
      if (ed.is_leaf() && (ed.leaf.kind != LeafKind::end || ed.leaf.fixed)) continue;
      if (p.mode == Mode::broccoli && !is_double_end(ed)) continue;
      if (p.mode == Mode::welschinger && !weight_and_parity(ed.dir).even) continue;
      CombType child = t;
      int m = subdivide(child, static_cast<int>(e));
      child.edges.push_back({m, -1, {0, 0}, {LeafKind::complex_mark, -1, -1, mark, false}});
      try_child(std::move(child), placed_real, placed_complex + 1,
                used_sub + (p.mode == Mode::complex_count ? 0 : 1));
    }
  }
}

} // namespace

CountResult count_curves(const Problem &p, int threads) {
  if (!p.degree.balanced())
    throw std::invalid_argument("degree directions must sum to zero");
  if (p.degree.size() < 3)
    throw std::invalid_argument("degree needs at least three ends");
  if (p.r != expected_real_markings(p.mode, p.degree, p.s))
    throw std::invalid_argument("condition count does not match the dimension of the problem");
  if (static_cast<long long>(p.cond.real_pts.size()) != p.r ||
      static_cast<long long>(p.cond.complex_pts.size()) != p.s)
    throw std::invalid_argument("conditions do not provide the announced number of points");
  if (p.degree.fixed_count() > 0 && p.cond.end_offsets.size() != p.degree.ends.size())
    throw std::invalid_argument("conditions do not provide offsets for the fixed ends");

  struct Shell {
    CombType base;
    long long t_pairs;
  };
  std::vector<Shell> shells;
  std::set<std::string> seen;
  const long long t_max = p.mode == Mode::complex_count ? 0 : p.s;
  for (long long t = 0; t <= t_max; ++t) {
    pair_shells(p.degree, t, [&](const std::vector<GluedLeaf> &leaves) {
      all_trees(static_cast<int>(leaves.size()), [&](const std::vector<TreeEdge> &tree) {
        CombType base;
        if (!tree_to_type(tree, leaves, base)) return;
        if (!seen.insert(type_encoding(base)).second) return;
        shells.push_back({std::move(base), t});
      });
    });
  }

  const size_t n_shells = shells.size();
  struct Slot {
    std::map<std::string, CountedCurve> found;
    CountStats stats;
    bool fault = false;
  };
  std::vector<Slot> slots(n_shells);
  std::atomic<bool> stop{false};
  std::atomic<size_t> cursor{0};

  auto run_shell = [&](size_t i) {
    SearchCtx ctx{p, shells[i].t_pairs, shells[i].base.n_vertices, {}, {}, false, &stop};
    search(ctx, shells[i].base, 0, 0, 0);
    slots[i] = Slot{std::move(ctx.found), ctx.stats, ctx.fault};
  };

  unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, n_shells ? n_shells : 1);
  if (n_threads <= 1) {
    for (size_t i = 0; i < n_shells && !stop.load(); ++i) run_shell(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w)
      pool.emplace_back([&] {
        for (size_t i = cursor.fetch_add(1); i < n_shells; i = cursor.fetch_add(1)) {
          if (stop.load()) break;
          run_shell(i);
        }
      });
    for (std::thread &th : pool) th.join();
  }

  CountResult out;
  out.total = Rat(0);
  out.stats.shells = static_cast<long long>(n_shells);
  std::map<std::string, CountedCurve> merged;
  for (Slot &slot : slots) {
    out.stats.nodes += slot.stats.nodes;
    out.stats.pruned += slot.stats.pruned;
    out.stats.types += slot.stats.types;
    out.stats.placed += slot.stats.placed;
    out.genericity_fault = out.genericity_fault || slot.fault;
    for (auto &[key, curve] : slot.found) {
      auto [it, fresh] = merged.emplace(key, std::move(curve));
      assert(fresh); // distinct skeletons cannot produce the same marked type
      (void)it;
      (void)fresh;
    }
  }
  out.genericity_fault = out.genericity_fault || stop.load();
  out.curves.reserve(merged.size());
  for (auto &[key, curve] : merged) {
    curve.key = key;
    out.total += curve.mult;
    out.curves.push_back(std::move(curve));
  }
  return out;
}

Conditions random_conditions(const Degree &deg, long long r, long long s,
                             std::uint64_t seed, long long box) {
  if (box < 4) throw std::invalid_argument("sampling box is too small");
  // splitmix-style scramble so that nearby seeds go to unrelated streams
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  const unsigned long long span = static_cast<unsigned long long>(2 * box + 1);
  auto draw = [&]() -> long long { return static_cast<long long>(rng() % span) - box; };

  Conditions cond;
  std::set<std::pair<long long, long long>> used;
  auto draw_point = [&]() -> QPoint {
    while (true) {
      long long x = draw(), y = draw();
      if (used.insert({x, y}).second) return {Rat(x), Rat(y)};
    }
  };
  for (long long i = 0; i < r; ++i) cond.real_pts.push_back(draw_point());
  for (long long i = 0; i < s; ++i) cond.complex_pts.push_back(draw_point());

  cond.end_offsets.assign(deg.ends.size(), Rat(0));
  std::set<long long> used_offsets;
  for (size_t i = 0; i < deg.ends.size(); ++i) {
    if (!deg.ends[i].fixed) continue;
    while (true) {
      long long c = draw();
      if (used_offsets.insert(c).second) {
        cond.end_offsets[i] = Rat(c);
        break;
      }
    }
  }
  return cond;
}

InvariantRun count_invariant(Problem p, std::uint64_t seed, long long box, int max_tries,
                             int threads) {
  const bool given = static_cast<long long>(p.cond.real_pts.size()) == p.r &&
                     static_cast<long long>(p.cond.complex_pts.size()) == p.s &&
                     (p.degree.fixed_count() == 0 ||
                      p.cond.end_offsets.size() == p.degree.ends.size());
  InvariantRun run;
  const int tries = given ? 1 : std::max(1, max_tries);
  for (int attempt = 0; attempt < tries; ++attempt) {
    if (!given) p.cond = random_conditions(p.degree, p.r, p.s, seed + 1000003ULL * attempt, box);
    run.result = count_curves(p, threads);
    run.used = p.cond;
    run.tries = attempt + 1;
    if (!run.result.genericity_fault) return run;
  }
  run.exhausted = true;
  return run;
}

} // namespace trop
