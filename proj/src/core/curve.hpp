// Combinatorial types of rational marked plane tropical curves: the tree
// data model, degrees, the canonical edge orientation, the vertex
// classification with its multiplicities, counting-group orders, and a
// canonical string encoding used for deduplication and reporting.
//
// Curves are stored in "glued" form: a pair of equal odd ends attached to a
// common vertex is represented by a single leaf of twice the direction,
// remembering both constituent degree entries.  Classification and
// multiplicities translate back to the unglued picture where the two forms
// differ.
#ifndef TROPICOUNT_CURVE_HPP
#define TROPICOUNT_CURVE_HPP

#include "lattice.hpp"
#include "seq.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trop {

enum class Mode { broccoli, welschinger, complex_count };

std::string mode_str(Mode m);
std::optional<Mode> mode_parse(std::string_view s);

// ----------------------------------------------------------------- degrees

struct EndSpec {
  LatticeVec dir;     // direction with weight (e.g. (-2,0) is a weight-2 end)
  bool fixed = false; // fixed ends are constrained to a given line
  friend bool operator==(const EndSpec &, const EndSpec &) = default;
};

struct Degree {
  std::vector<EndSpec> ends;

  size_t size() const { return ends.size(); }
  bool balanced() const; // directions sum to zero
  long long fixed_count() const;
};

// Order of the group of end permutations that preserve directions and fix
// the fixed ends pointwise: the product of c! over the multiplicities c of
// the distinct non-fixed directions.
Int group_order(const Degree &deg);

enum class DelPezzoClass { p2, p1xp1, bl1, bl2, bl3 };

// Degree of curves of the given class on a smooth projective toric Del Pezzo
// surface: primitive outward normals of the defining polygon, repeated with
// lattice length.  Parameter counts: p2 {d}; p1xp1 {d1,d2}; bl1 {d,d1};
// bl2 {d,d1,d2}; bl3 {d,d1,d2,d3}.  Throws std::invalid_argument when the
// parameters do not define a (two-dimensional, convex) polygon.
Degree del_pezzo_degree(DelPezzoClass cls, const std::vector<long long> &params);

// Degree with d ends (0,-1) and d ends (1,1), plus for every weight k:
// alpha_k fixed ends and beta_k non-fixed ends of direction (-k,0).
Degree relative_degree(long long d, const WeightSeq &alpha, const WeightSeq &beta);

// --------------------------------------------------------------- tree model

enum class LeafKind { end, real_mark, complex_mark };

struct Leaf {
  LeafKind kind = LeafKind::end;
  int deg_a = -1;     // index into Degree::ends (for kind end)
  int deg_b = -1;     // second index when this leaf is a glued double end
  int mark = -1;      // marking number (for marks), 0-based
  bool fixed = false; // end constrained to a line (never set for pairs)
  bool is_pair() const { return kind == LeafKind::end && deg_b >= 0; }
};

struct Edge {
  int a = -1;     // near vertex
  int b = -1;     // far vertex, or -1 for leaf edges (ends and markings)
  LatticeVec dir; // direction from a toward b; outward for leaf edges
  Leaf leaf;      // payload, meaningful iff b < 0

  bool is_leaf() const { return b < 0; }
};

struct CombType {
  int n_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj; // vertex -> incident edge ids

  void build_adj();
  int other(int eid, int v) const { // far endpoint as seen from v, -1 for leaf
    const Edge &e = edges[static_cast<size_t>(eid)];
    return e.a == v ? e.b : e.a;
  }
  LatticeVec dir_from(int eid, int v) const { // direction away from v
    const Edge &e = edges[static_cast<size_t>(eid)];
    return e.a == v ? e.dir : -e.dir;
  }
  long long bounded_count() const;
};

// dim of the cell of curves of this type: 2 + number of bounded edges.
long long type_dimension(const CombType &t);

// Fill in the directions of bounded edges from the leaf directions by
// balancing.  Returns false if some bounded edge would be contracted
// (direction zero) or the leaf directions do not balance.
bool derive_directions(CombType &t);

// -------------------------------------------------------------- orientation

enum class OrientStatus { ok, no_free_end, ambiguous };

struct Orientation {
  OrientStatus status = OrientStatus::ok;
  // Per edge: +1 flows a -> b (outward for leaves), -1 the reverse.
  std::vector<int8_t> flow;

  bool out_at(const CombType &t, int eid, int v) const {
    const Edge &e = t.edges[static_cast<size_t>(eid)];
    return (flow[static_cast<size_t>(eid)] > 0) == (e.a == v);
  }
};

// The canonical orientation: cut the tree at marked vertices; each component
// must contain exactly one non-fixed unmarked end ("free end"), toward which
// all its edges flow.  Fixed ends point at their vertex, all other leaves
// away from it.  Fails with no_free_end / ambiguous otherwise.
Orientation canonical_orientation(const CombType &t);

// ----------------------------------------------------------- classification

enum class VertexTag { t1, t2, t3, t4, t5, t6a, t6b, t7, t8, unclassifiable };

std::string tag_str(VertexTag tag);

struct VertexInfo {
  VertexTag tag = VertexTag::unclassifiable;
  long long a = 0; // absolute determinant of two adjacent unmarked directions
};

// Classify every vertex of an oriented curve.  Works on the glued model:
//  - a glued double end at an unmarked all-even vertex yields t8,
//  - a glued double end at a complex marking with one even edge yields t6b,
//  - anything 5-valent after ungluing is unclassifiable.
std::vector<VertexInfo> classify_vertices(const CombType &t, const Orientation &o);

// Multiplicity of a single vertex.  Unlabeled counting halves the
// contribution of each double-end vertex (t6b and t8).
GaussRat vertex_multiplicity(VertexTag tag, long long a, bool labeled);

bool tag_allowed(VertexTag tag, Mode mode);

// Number of double-end vertices (t6b + t8) of a classified curve.
int pair_vertex_count(const std::vector<VertexInfo> &classes);

// Multiplicity of a whole oriented curve in the real modes: the product of
// the vertex multiplicities and of i^(w-1) over all unmarked ends of the
// unglued curve (fixed ends included), which is always real.  The unlabeled
// variant divides by two per double-end vertex.
Rat curve_multiplicity(const CombType &t, const std::vector<VertexInfo> &classes,
                       bool labeled);

// Multiplicity in the complex count: product over unmarked (trivalent)
// vertices of the absolute determinant of two adjacent directions.
Int complex_multiplicity(const CombType &t);

// --------------------------------------------------- unoriented definitions

// Direct checks of the defining conditions on the even subgraph, without
// using the orientation.  Used as an independent cross-check of the
// tag-based classification.
bool unoriented_broccoli_check(const CombType &t);
bool unoriented_welschinger_check(const CombType &t);

// ----------------------------------------------------------------- encoding

// Canonical string encoding of a combinatorial type: the lexicographic
// minimum over all internal root vertices of a rooted encoding whose child
// terms are sorted.  Two types encode equally iff they differ only by a
// relabeling of interchangeable ends.  Stable; documented in the README.
std::string type_encoding(const CombType &t);

} // namespace trop

#endif
