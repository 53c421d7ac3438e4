// Exact placement of combinatorial types: given point conditions for the
// markings and line conditions for the fixed ends, decide whether a type has
// a (unique, transverse) realization and compute the vertex positions and
// bounded edge lengths.  All arithmetic is exact rational.
#ifndef TROPICOUNT_GEOMETRY_HPP
#define TROPICOUNT_GEOMETRY_HPP

#include "core/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trop {

// Point and line conditions.  Real and complex markings are numbered
// independently (Leaf::mark indexes into the matching vector).  Fixed ends
// are constrained to the line  det(primitive(dir), p) = offset;  offsets are
// indexed by position in the Degree and ignored for non-fixed ends.
struct Conditions {
  std::vector<QPoint> real_pts;
  std::vector<QPoint> complex_pts;
  std::vector<Rat> end_offsets;
};

enum class PlaceStatus {
  ok,             // unique transverse realization
  not_square,     // #conditions != #degrees of freedom: never isolated
  singular,       // square but rank-deficient: never transverse
  not_realizable, // unique solution violates an edge-length sign
  degenerate      // some bounded edge has length zero (wall configuration)
};

const char *place_status_str(PlaceStatus s);

struct Placement {
  PlaceStatus status = PlaceStatus::not_square;
  std::vector<QPoint> pos;  // per vertex; valid for ok and degenerate
  std::vector<Rat> length;  // per edge id; nonzero only for bounded edges
};

// The placement equations as an explicit square-or-not linear system.
// Unknowns: (x, y) of the root vertex followed by one length per bounded
// edge, in edge-id order; cols[j] is the edge id of unknown j + 2.
struct LinearSystem {
  std::vector<std::vector<Int>> a; // row-major coefficient matrix
  std::vector<Rat> rhs;
  std::vector<int> cols;
  int root = 0;
};

LinearSystem build_system(const CombType &t, const Degree &deg, const Conditions &cond);

// Fraction-free (Bareiss) elimination.  Returns the unique solution, or
// nullopt when the matrix is singular.  Throws std::invalid_argument when
// the system is not square.
std::optional<std::vector<Rat>> solve_exact(const LinearSystem &sys);

// Place a type against conditions.  Uses local constraint propagation
// (points and lines pushed along edges) and falls back to a full exact
// solve when propagation alone does not pin every vertex.
Placement place_curve(const CombType &t, const Degree &deg, const Conditions &cond);

// Cheap feasibility test for partially marked types: propagates the placed
// conditions and reports false when they are already contradictory or force
// a bounded edge backwards.  Placing further markings only shrinks the
// solution set, so a false answer prunes the whole subtree.
bool placement_feasible(const CombType &t, const Conditions &cond);

} // namespace trop

#endif
