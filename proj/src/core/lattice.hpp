// Primitive integer-lattice helpers: 2x2 determinants, edge weights and
// parities, primitive direction vectors.
#ifndef TROPICOUNT_LATTICE_HPP
#define TROPICOUNT_LATTICE_HPP

#include "rational.hpp"

#include <cstdint>
#include <string>

namespace trop {

// A direction vector in Z^2.  Coordinates stay tiny (bounded by the total
// weight of a degree), so machine integers are ample.
struct LatticeVec {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const LatticeVec &, const LatticeVec &) = default;
  friend auto operator<=>(const LatticeVec &, const LatticeVec &) = default;
  friend LatticeVec operator+(LatticeVec a, LatticeVec b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticeVec operator-(LatticeVec a, LatticeVec b) {
    return {a.x - b.x, a.y - b.y};
  }
  LatticeVec operator-() const { return {-x, -y}; }
  friend LatticeVec operator*(long long k, LatticeVec v) {
    return {k * v.x, k * v.y};
  }
  bool is_zero() const { return x == 0 && y == 0; }
};

std::string vec_str(LatticeVec v);

inline long long det2(LatticeVec a, LatticeVec b) { return a.x * b.y - a.y * b.x; }

struct WeightParity {
  long long weight = 0;
  bool even = false; // even iff weight is even
};

// weight = gcd of |x| and |y|; parity of an edge is the parity of its weight.
// The zero vector has no weight and is rejected.
WeightParity weight_and_parity(LatticeVec v);

// v divided by its weight.
LatticeVec primitive(LatticeVec v);

// Exact point in Q^2.
struct QPoint {
  Rat x;
  Rat y;
  friend bool operator==(const QPoint &, const QPoint &) = default;
};

inline Rat det2q(const QPoint &a, const QPoint &b) { return a.x * b.y - a.y * b.x; }

std::string point_str(const QPoint &p);

} // namespace trop

#endif
