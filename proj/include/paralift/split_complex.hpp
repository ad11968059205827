#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace paralift {

using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& q);

// Split-complex number a + b*j with j*j = 1.  The ring has the idempotents
// e+ = (1+j)/2 and e- = (1-j)/2 with e+*e- = 0, so it carries zero divisors
// (exactly the elements with re = +-im).  All arithmetic is exact.
struct SplitComplex {
  Rational re;
  Rational im;

  SplitComplex() = default;
  SplitComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  SplitComplex(long long r) : re(r) {}            // NOLINT(google-explicit-constructor)
  SplitComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static SplitComplex j() { return SplitComplex(Rational(0), Rational(1)); }
  static SplitComplex e_plus() { return SplitComplex(Rational(1, 2), Rational(1, 2)); }
  static SplitComplex e_minus() { return SplitComplex(Rational(1, 2), Rational(-1, 2)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_zero_divisor() const { return !is_zero() && (re == im || re == -im); }

  // Components along the null basis: x = plus()*e+ + minus()*e-.
  Rational plus() const { return re + im; }
  Rational minus() const { return re - im; }
  static SplitComplex from_null(const Rational& plus, const Rational& minus) {
    return SplitComplex((plus + minus) / 2, (plus - minus) / 2);
  }

  SplitComplex operator-() const { return SplitComplex(-re, -im); }

  SplitComplex& operator+=(const SplitComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  SplitComplex& operator-=(const SplitComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  SplitComplex& operator*=(const SplitComplex& o) {
    // (a+bj)(c+dj) = (ac+bd) + (ad+bc)j
    Rational r = re * o.re + im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend SplitComplex operator+(SplitComplex a, const SplitComplex& b) { return a += b; }
  friend SplitComplex operator-(SplitComplex a, const SplitComplex& b) { return a -= b; }
  friend SplitComplex operator*(SplitComplex a, const SplitComplex& b) { return a *= b; }
  friend bool operator==(const SplitComplex& a, const SplitComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const SplitComplex& a, const SplitComplex& b) { return !(a == b); }

  // "3/2", "j", "-j", "3*j", "(1/2+j)", "(1-2*j)", ...
  std::string str() const;
};

}  // namespace paralift
