// Weight sequences: finitely supported tuples (a_1, a_2, ...) of non-negative
// integers, where a_k counts ends of weight k.  These index the relative
// invariants and drive the recursion's combinatorics.
#ifndef TROPICOUNT_SEQ_HPP
#define TROPICOUNT_SEQ_HPP

#include "rational.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trop {

struct SeqStats {
  long long size = 0;   // |a|  = a_1 + a_2 + ...
  long long weight = 0; // I(a) = 1*a_1 + 2*a_2 + ...
};

class WeightSeq {
public:
  WeightSeq() = default;
  explicit WeightSeq(std::vector<long long> counts);

  // Basis sequence e_k: a single entry of weight k.
  static WeightSeq unit(long long k);

  long long at(long long k) const; // count at weight k (1-based), 0 beyond support
  long long max_weight() const { return static_cast<long long>(counts_.size()); }
  bool empty() const { return counts_.empty(); }

  SeqStats stats() const;

  WeightSeq plus(long long k, long long delta = 1) const; // add delta ends of weight k
  // Componentwise difference; returns false if any entry would go negative.
  bool minus(const WeightSeq &b, WeightSeq &out) const;
  bool leq(const WeightSeq &b) const; // componentwise <=

  friend WeightSeq operator+(const WeightSeq &a, const WeightSeq &b);
  friend bool operator==(const WeightSeq &, const WeightSeq &) = default;
  friend auto operator<=>(const WeightSeq &, const WeightSeq &) = default;

  const std::vector<long long> &counts() const { return counts_; }

private:
  std::vector<long long> counts_; // counts_[k-1] = a_k, no trailing zeros
};

std::string seq_str(const WeightSeq &a);         // "a1,a2,...", "0" when empty
WeightSeq seq_parse(std::string_view text);      // strict inverse of seq_str

// n! / (p_1! ... p_l! (n - p_1 - ... - p_l)!).  Parts must be non-negative
// and sum to at most n.
Int multinomial(long long n, std::span<const long long> parts);

// Product over weights k of multinomial(a_k; parts[0]_k, ..., parts[l-1]_k).
Int seq_multinomial(const WeightSeq &a, std::span<const WeightSeq> parts);

enum class SplitMode { exact, at_most };

// Enumerate ordered tuples (a^1, ..., a^l) of weight sequences with
// sum a^j == a (exact) or <= a componentwise (at_most).  The visitor gets a
// span of l sequences valid only during the call; returning false stops the
// enumeration early.  Streaming: nothing is materialized.
void enumerate_splits(const WeightSeq &a, int l, SplitMode mode,
                      const std::function<bool(std::span<const WeightSeq>)> &visit);

} // namespace trop

#endif
