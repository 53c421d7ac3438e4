// Small builder for hand-made combinatorial types in tests.
#ifndef TROPICOUNT_TESTS_TYPE_BUILDER_HPP
#define TROPICOUNT_TESTS_TYPE_BUILDER_HPP

#include "core/curve.hpp"

namespace trop::testutil {

struct Builder {
  CombType t;
  int vertex() { return t.n_vertices++; }
  int end(int v, LatticeVec dir, bool fixed = false, int deg_idx = 0) {
    t.edges.push_back({v, -1, dir, {LeafKind::end, deg_idx, -1, -1, fixed}});
    return static_cast<int>(t.edges.size()) - 1;
  }
  int pair_end(int v, LatticeVec glued_dir, int deg_a = 0, int deg_b = 1) {
    t.edges.push_back({v, -1, glued_dir, {LeafKind::end, deg_a, deg_b, -1, false}});
    return static_cast<int>(t.edges.size()) - 1;
  }
  int real_mark(int v, int idx) {
    t.edges.push_back({v, -1, {0, 0}, {LeafKind::real_mark, -1, -1, idx, false}});
    return static_cast<int>(t.edges.size()) - 1;
  }
  int complex_mark(int v, int idx) {
    t.edges.push_back({v, -1, {0, 0}, {LeafKind::complex_mark, -1, -1, idx, false}});
    return static_cast<int>(t.edges.size()) - 1;
  }
  int bounded(int u, int v, LatticeVec dir = {0, 0}) {
    t.edges.push_back({u, v, dir, {}});
    return static_cast<int>(t.edges.size()) - 1;
  }
  CombType &done() {
    t.build_adj();
    return t;
  }
};

} // namespace trop::testutil

#endif
