// Exact rational and Gaussian-rational arithmetic used throughout the library.
// All quantities are kept in lowest terms with positive denominator; nothing
// in the core ever touches floating point.
#ifndef TROPICOUNT_RATIONAL_HPP
#define TROPICOUNT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace trop {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat &q) { return numerator(q); }
inline Int rat_den(const Rat &q) { return denominator(q); }

inline bool rat_is_int(const Rat &q) { return rat_den(q) == 1; }

// Canonical serialization: "p" when the denominator is 1, else "p/q" with
// q > 0 and gcd(p, q) = 1.  This is exactly what the GMP backend produces.
inline std::string rat_str(const Rat &q) { return q.str(); }

// Strict parser for the serialization above.  Accepts an optional leading
// minus, a decimal numerator and an optional "/denominator" part; the result
// is canonicalized.  Throws std::invalid_argument on malformed input.
Rat rat_parse(std::string_view text);

// Element of Q(i).  The imaginary unit shows up in vertex multiplicities;
// all final counts are real (and this is asserted where it matters).
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im == 0; }

  friend bool operator==(const GaussRat &a, const GaussRat &b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussRat operator+(const GaussRat &a, const GaussRat &b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat &a, const GaussRat &b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator*(const GaussRat &a, const GaussRat &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat &operator*=(const GaussRat &b) { return *this = *this * b; }
  GaussRat &operator+=(const GaussRat &b) { return *this = *this + b; }
};

std::string gauss_str(const GaussRat &g);

// i^e for any (possibly negative) integer exponent; period four.
GaussRat ipow(long long e);

} // namespace trop

#endif
