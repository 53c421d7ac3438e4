#include "lattice.hpp"

#include <cctype>
#include <numeric>

namespace trop {

Rat rat_parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  size_t pos = 0;
  auto read_int = [&](bool allow_sign) -> Int {
    size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) fail();
    return Int(std::string(text.substr(start, pos - start)));
  };
  Int num = read_int(true);
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int(false);
    if (den == 0) fail();
  }
  if (pos != text.size()) fail();
  return Rat(num) / Rat(den); // division canonicalizes
}

std::string gauss_str(const GaussRat &g) {
  if (g.im == 0) return rat_str(g.re);
  std::string s;
  if (g.re != 0) s = rat_str(g.re);
  if (g.im > 0 && !s.empty()) s += "+";
  if (g.im == -1)
    s += "-";
  else if (g.im != 1)
    s += rat_str(g.im);
  s += "i";
  return s;
}

GaussRat ipow(long long e) {
  switch (((e % 4) + 4) % 4) {
  case 0: return GaussRat(Rat(1));
  case 1: return GaussRat(Rat(0), Rat(1));
  case 2: return GaussRat(Rat(-1));
  default: return GaussRat(Rat(0), Rat(-1));
  }
}

std::string vec_str(LatticeVec v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

WeightParity weight_and_parity(LatticeVec v) {
  if (v.is_zero()) throw std::invalid_argument("zero vector has no weight");
  long long w = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
  return {w, w % 2 == 0};
}

LatticeVec primitive(LatticeVec v) {
  long long w = weight_and_parity(v).weight;
  return {v.x / w, v.y / w};
}

std::string point_str(const QPoint &p) {
  return "(" + rat_str(p.x) + "," + rat_str(p.y) + ")";
}

} // namespace trop
