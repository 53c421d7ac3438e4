// Direct enumeration of genus-zero plane tropical curves through point and
// line conditions: generate the combinatorial types of the chosen counting
// mode, realize each against the conditions, and add up multiplicities.
#ifndef TROPICOUNT_ENUMERATE_HPP
#define TROPICOUNT_ENUMERATE_HPP

#include "core/curve.hpp"
#include "core/geometry.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trop {

// A counting problem: what to count and through which conditions.
struct Problem {
  Mode mode = Mode::broccoli;
  Degree degree;
  long long r = 0; // number of real point conditions
  long long s = 0; // number of complex point conditions
  Conditions cond; // r + s points plus offsets for the fixed ends
};

// Number of real markings dictated by the dimension of the problem;
// throws std::invalid_argument when no non-negative count fits.
long long expected_real_markings(Mode mode, const Degree &deg, long long s);

// One realized curve of the count.
struct CountedCurve {
  CombType type;
  Placement place;
  Rat mult;        // multiplicity in the chosen mode (ends unlabeled)
  std::string key; // canonical encoding of the marked type
};

struct CountStats {
  long long shells = 0; // distinct (pairing, tree) skeletons searched
  long long nodes = 0;  // marking placements visited
  long long pruned = 0; // subtrees cut by partial geometry
  long long types = 0;  // fully marked candidate types reaching placement
  long long placed = 0; // realizable transverse curves
};

struct CountResult {
  Rat total;
  std::vector<CountedCurve> curves;
  CountStats stats;
  // Some type met the conditions in a non-transverse way (a zero-length
  // edge).  The conditions are not generic for this degree: resample.
  bool genericity_fault = false;
};

// Count all curves of the problem.  Deterministic for a given problem; the
// thread count (0 = hardware default) never changes the result.
CountResult count_curves(const Problem &p, int threads = 0);

// Sample integer conditions: points uniform in [-box, box]^2 and pairwise
// distinct, offsets for the fixed ends distinct as well.  Deterministic in
// (deg, r, s, seed, box).
Conditions random_conditions(const Degree &deg, long long r, long long s,
                             std::uint64_t seed, long long box = 10000);

// count_curves with automatic resampling on genericity faults.  When the
// problem carries a full set of conditions they are used as given (a fault
// is then final); otherwise up to max_tries condition sets are drawn.
struct InvariantRun {
  CountResult result;
  Conditions used;
  int tries = 0;
  bool exhausted = false;
};
InvariantRun count_invariant(Problem p, std::uint64_t seed, long long box = 10000,
                             int max_tries = 32, int threads = 0);

} // namespace trop

#endif
