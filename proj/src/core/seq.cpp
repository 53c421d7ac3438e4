#include "seq.hpp"

#include <cctype>
#include <stdexcept>

namespace trop {

WeightSeq::WeightSeq(std::vector<long long> counts) : counts_(std::move(counts)) {
  for (long long c : counts_)
    if (c < 0) throw std::invalid_argument("negative count in weight sequence");
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

WeightSeq WeightSeq::unit(long long k) {
  if (k < 1) throw std::invalid_argument("weight must be positive");
  std::vector<long long> c(static_cast<size_t>(k), 0);
  c.back() = 1;
  return WeightSeq(std::move(c));
}

long long WeightSeq::at(long long k) const {
  if (k < 1) throw std::invalid_argument("weight must be positive");
  if (k > max_weight()) return 0;
  return counts_[static_cast<size_t>(k - 1)];
}

SeqStats WeightSeq::stats() const {
  SeqStats st;
  for (size_t i = 0; i < counts_.size(); ++i) {
    st.size += counts_[i];
    st.weight += static_cast<long long>(i + 1) * counts_[i];
  }
  return st;
}

WeightSeq WeightSeq::plus(long long k, long long delta) const {
  std::vector<long long> c = counts_;
  if (k > max_weight()) c.resize(static_cast<size_t>(k), 0);
  c[static_cast<size_t>(k - 1)] += delta;
  return WeightSeq(std::move(c));
}

bool WeightSeq::minus(const WeightSeq &b, WeightSeq &out) const {
  if (b.max_weight() > max_weight()) {
    // b has support beyond ours; any such entry makes the result negative.
    for (long long k = max_weight() + 1; k <= b.max_weight(); ++k)
      if (b.at(k) > 0) return false;
  }
  std::vector<long long> c = counts_;
  for (long long k = 1; k <= b.max_weight(); ++k) {
    c[static_cast<size_t>(k - 1)] -= b.at(k);
    if (c[static_cast<size_t>(k - 1)] < 0) return false;
  }
  out = WeightSeq(std::move(c));
  return true;
}

bool WeightSeq::leq(const WeightSeq &b) const {
  for (long long k = 1; k <= max_weight(); ++k)
    if (at(k) > b.at(k)) return false;
  return true;
}

WeightSeq operator+(const WeightSeq &a, const WeightSeq &b) {
  std::vector<long long> c(static_cast<size_t>(std::max(a.max_weight(), b.max_weight())), 0);
  for (long long k = 1; k <= static_cast<long long>(c.size()); ++k)
    c[static_cast<size_t>(k - 1)] = a.at(k) + b.at(k);
  return WeightSeq(std::move(c));
}

std::string seq_str(const WeightSeq &a) {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < a.counts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.counts()[i]);
  }
  return s;
}

WeightSeq seq_parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty weight sequence");
  std::vector<long long> c;
  size_t pos = 0;
  while (true) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("malformed weight sequence: '" + std::string(text) + "'");
    c.push_back(std::stoll(std::string(text.substr(start, pos - start))));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("malformed weight sequence: '" + std::string(text) + "'");
    ++pos;
  }
  return WeightSeq(std::move(c));
}

Int multinomial(long long n, std::span<const long long> parts) {
  if (n < 0) throw std::invalid_argument("multinomial: negative n");
  long long used = 0;
  for (long long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    used += p;
  }
  if (used > n) throw std::invalid_argument("multinomial: parts exceed n");
  // n! / (p_1! ... p_l! (n-used)!), computed as a product of binomials.
  Int result = 1;
  long long remaining = n;
  for (long long p : parts) {
    // multiply by C(remaining, p)
    Int c = 1;
    for (long long j = 1; j <= p; ++j) {
      c *= (remaining - p + j);
      c /= j; // exact at every step: partial product is a binomial
    }
    result *= c;
    remaining -= p;
  }
  return result;
}

Int seq_multinomial(const WeightSeq &a, std::span<const WeightSeq> parts) {
  Int result = 1;
  for (long long k = 1; k <= a.max_weight(); ++k) {
    std::vector<long long> pk;
    pk.reserve(parts.size());
    for (const WeightSeq &p : parts) pk.push_back(p.at(k));
    result *= multinomial(a.at(k), pk);
  }
  // Parts may not have support beyond a's: that would mean negative remainder.
  for (const WeightSeq &p : parts)
    for (long long k = a.max_weight() + 1; k <= p.max_weight(); ++k)
      if (p.at(k) > 0) throw std::invalid_argument("seq_multinomial: parts exceed sequence");
  return result;
}

namespace {

// Distribute the counts of a single weight k over l ordered slots.
bool split_weight(const WeightSeq &a, long long k, int l, SplitMode mode,
                  std::vector<std::vector<long long>> &acc,
                  const std::function<bool(std::span<const WeightSeq>)> &visit) {
  if (k > a.max_weight()) {
    std::vector<WeightSeq> out;
    out.reserve(acc.size());
    for (auto &c : acc) out.emplace_back(c);
    return visit(out);
  }
  long long total = a.at(k);
  // choose c_j >= 0 per slot with sum == total (exact) or <= total (at_most)
  std::function<bool(int, long long)> rec = [&](int slot, long long left) -> bool {
    if (slot == l) {
      if (mode == SplitMode::exact && left != 0) return true; // nothing to visit, keep going
      return split_weight(a, k + 1, l, mode, acc, visit);
    }
    for (long long c = 0; c <= left; ++c) {
      acc[static_cast<size_t>(slot)][static_cast<size_t>(k - 1)] = c;
      if (!rec(slot + 1, left - c)) return false;
    }
    acc[static_cast<size_t>(slot)][static_cast<size_t>(k - 1)] = 0;
    return true;
  };
  return rec(0, total);
}

} // namespace

void enumerate_splits(const WeightSeq &a, int l, SplitMode mode,
                      const std::function<bool(std::span<const WeightSeq>)> &visit) {
  if (l < 0) throw std::invalid_argument("enumerate_splits: negative arity");
  if (l == 0) {
    // Sole tuple is the empty one; valid in exact mode only if a == 0.
    if (mode == SplitMode::at_most || a.empty()) visit({});
    return;
  }
  std::vector<std::vector<long long>> acc(
      static_cast<size_t>(l), std::vector<long long>(static_cast<size_t>(a.max_weight()), 0));
  split_weight(a, 1, l, mode, acc, visit);
}

} // namespace trop
