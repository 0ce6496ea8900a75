#ifndef EDLOCI_RATIONAL_HPP
#define EDLOCI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace edloci {

/// Arbitrary-precision rational, always kept canonical (reduced, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a" or "a/b" with optional sign; throws UsageError on bad text or
/// a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Element of Q(i). Only used to evaluate polynomials at complex witness
/// points; ideal coefficients never leave Q.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from Q is intended
  GaussianRational(long r) : re(r) {}                 // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);

}  // namespace edloci

#endif  // EDLOCI_RATIONAL_HPP
