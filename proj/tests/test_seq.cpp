#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/seq.hpp"

using namespace trop;

TEST_CASE("stats of weight sequences") {
  auto st = seq_parse("0,0,1").stats();
  CHECK(st.size == 1);
  CHECK(st.weight == 3);
  st = seq_parse("2,1").stats();
  CHECK(st.size == 3);
  CHECK(st.weight == 4);
  st = WeightSeq().stats();
  CHECK(st.size == 0);
  CHECK(st.weight == 0);
}

TEST_CASE("serialization round trip and canonical form") {
  CHECK(seq_str(seq_parse("0,0,1")) == "0,0,1");
  CHECK(seq_str(seq_parse("0")) == "0");
  CHECK(seq_str(seq_parse("1,0,0")) == "1"); // trailing zeros trimmed
  CHECK(seq_parse("0") == WeightSeq());
  CHECK(WeightSeq::unit(3) == seq_parse("0,0,1"));
  CHECK_THROWS_AS(seq_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(seq_parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(seq_parse("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(seq_parse("a"), std::invalid_argument);
}

TEST_CASE("sequence arithmetic") {
  WeightSeq a = seq_parse("2,1");
  CHECK(a.plus(1) == seq_parse("3,1"));
  CHECK(a.plus(4) == seq_parse("2,1,0,1"));
  WeightSeq out;
  CHECK(a.minus(seq_parse("1"), out));
  CHECK(out == seq_parse("1,1"));
  CHECK_FALSE(a.minus(seq_parse("3"), out));
  CHECK_FALSE(a.minus(seq_parse("0,0,1"), out));
  CHECK(a.minus(a, out));
  CHECK(out == WeightSeq());
  CHECK(seq_parse("1,1").leq(a));
  CHECK_FALSE(a.leq(seq_parse("1,1")));
  CHECK(a + seq_parse("0,0,2") == seq_parse("2,1,2"));
}

TEST_CASE("multinomial coefficients with remainder block") {
  std::vector<long long> p{2, 2};
  CHECK(multinomial(5, p) == 30); // 5!/(2!2!1!)
  p = {4};
  CHECK(multinomial(4, p) == 1);
  p = {};
  CHECK(multinomial(3, p) == 1);
  p = {1, 2, 3};
  CHECK(multinomial(6, p) == 60);
  p = {0, 0};
  CHECK(multinomial(2, p) == 1);
  p = {3};
  CHECK_THROWS_AS(multinomial(2, p), std::invalid_argument);
}

TEST_CASE("sequence multinomials") {
  std::vector<WeightSeq> parts{seq_parse("1"), seq_parse("1")};
  CHECK(seq_multinomial(seq_parse("2,1"), parts) == 2);
  parts = {seq_parse("0,1")};
  CHECK(seq_multinomial(seq_parse("0,2"), parts) == 2);
  parts = {seq_parse("1,1"), seq_parse("1")};
  CHECK(seq_multinomial(seq_parse("2,1"), parts) == 2); // C(2;1,1)*C(1;1,0)
  parts = {seq_parse("0,0,1")};
  CHECK_THROWS_AS(seq_multinomial(seq_parse("1"), parts), std::invalid_argument);
}

namespace {
long long count_splits(const WeightSeq &a, int l, SplitMode mode) {
  long long n = 0;
  enumerate_splits(a, l, mode, [&](std::span<const WeightSeq> parts) {
    if (mode == SplitMode::exact) {
      WeightSeq sum;
      for (const auto &p : parts) sum = sum + p;
      CHECK(sum == a);
    } else {
      for (const auto &p : parts) CHECK(p.leq(a));
    }
    ++n;
    return true;
  });
  return n;
}
} // namespace

TEST_CASE("split enumeration counts match stars and bars") {
  CHECK(count_splits(seq_parse("1,1"), 2, SplitMode::exact) == 4);   // C(2,1)^2
  CHECK(count_splits(seq_parse("3"), 2, SplitMode::exact) == 4);     // C(4,1)
  CHECK(count_splits(seq_parse("2,1"), 3, SplitMode::exact) == 18);  // C(4,2)*C(3,2)
  CHECK(count_splits(seq_parse("1,1"), 2, SplitMode::at_most) == 9); // C(3,2)^2
  CHECK(count_splits(WeightSeq(), 3, SplitMode::exact) == 1);
  CHECK(count_splits(WeightSeq(), 0, SplitMode::exact) == 1);
  CHECK(count_splits(seq_parse("1"), 0, SplitMode::exact) == 0);
  CHECK(count_splits(seq_parse("1"), 0, SplitMode::at_most) == 1);
}

TEST_CASE("split enumeration stops early when the visitor says so") {
  int seen = 0;
  enumerate_splits(seq_parse("2,2"), 2, SplitMode::exact, [&](auto) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
}
