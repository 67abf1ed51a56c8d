#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace lamono {

using BigInt = mpz_class;

/// Exact rational backed by GMP. Values produced through this header are always
/// canonical: reduced, with a positive denominator.
using Rational = mpq_class;

/// Parses the grammar  [+-]?[0-9]+ ( "/" [0-9]+ )?  with a nonzero denominator.
/// Anything else (decimal points, exponents, whitespace) raises ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Element of Q(i). Equality is componentwise.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational real) : re(std::move(real)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real), im(0) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Lexicographic on (re, im). Only used to give vertices and directions a
/// deterministic order; it is not a field ordering.
std::strong_ordering compare(const GaussianRational& a, const GaussianRational& b);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// "p/q" when real, "p/q + r/si" style otherwise (human readable only).
std::string to_string(const GaussianRational& z);

}  // namespace lamono
