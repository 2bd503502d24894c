#ifndef SIMULTILE_FIELD_HPP
#define SIMULTILE_FIELD_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "simultile/errors.hpp"

namespace simultile {

using Rational = mpq_class;
using Integer = mpz_class;

// Session-wide discriminant of the quadratic field Q(sqrt(d)).
// Must be a positive non-square integer; default 2.
int field_discriminant();
void set_field_discriminant(int d);

// An element r + s*sqrt(d) of Q(sqrt(d)). The representation is unique
// because sqrt(d) is irrational, so equality and ordering are decidable
// exactly from the rational coordinates.
class FieldNum {
 public:
  FieldNum() : r_(0), s_(0) {}
  FieldNum(Rational r) : r_(std::move(r)), s_(0) { canon(); }
  FieldNum(long v) : r_(v), s_(0) {}
  FieldNum(int v) : r_(v), s_(0) {}
  FieldNum(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) { canon(); }

  static FieldNum sqrt_d() { return FieldNum(Rational(0), Rational(1)); }

  const Rational& rat_part() const { return r_; }
  const Rational& irr_part() const { return s_; }
  bool is_rational() const { return s_ == 0; }
  bool is_zero() const { return r_ == 0 && s_ == 0; }

  // Sign decided by case analysis on the signs of r, s and an exact
  // comparison of r^2 against d*s^2.
  int sign() const;

  FieldNum operator-() const { return FieldNum(-r_, -s_); }
  FieldNum& operator+=(const FieldNum& o) { r_ += o.r_; s_ += o.s_; return *this; }
  FieldNum& operator-=(const FieldNum& o) { r_ -= o.r_; s_ -= o.s_; return *this; }
  FieldNum& operator*=(const FieldNum& o);
  FieldNum& operator/=(const FieldNum& o);

  friend FieldNum operator+(FieldNum a, const FieldNum& b) { return a += b; }
  friend FieldNum operator-(FieldNum a, const FieldNum& b) { return a -= b; }
  friend FieldNum operator*(FieldNum a, const FieldNum& b) { return a *= b; }
  friend FieldNum operator/(FieldNum a, const FieldNum& b) { return a /= b; }

  friend bool operator==(const FieldNum& a, const FieldNum& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }
  friend bool operator!=(const FieldNum& a, const FieldNum& b) { return !(a == b); }
  friend bool operator<(const FieldNum& a, const FieldNum& b) { return (a - b).sign() < 0; }
  friend bool operator>(const FieldNum& a, const FieldNum& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const FieldNum& a, const FieldNum& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const FieldNum& a, const FieldNum& b) { return (a - b).sign() >= 0; }

  // Largest integer n with n <= *this. A floating-point guess seeds the
  // search; the answer is confirmed by exact sign tests only.
  Integer floor() const;

  double to_double() const;

  // Rendering such as "1 + 1/3*sqrt(2)".
  std::string str() const;

 private:
  void canon() { r_.canonicalize(); s_.canonicalize(); }
  Rational r_, s_;
};

inline FieldNum abs(const FieldNum& x) { return x.sign() < 0 ? -x : x; }
inline FieldNum min(const FieldNum& a, const FieldNum& b) { return a <= b ? a : b; }
inline FieldNum max(const FieldNum& a, const FieldNum& b) { return a >= b ? a : b; }

// x = residue + k*L with residue in [0, L).
struct ModReduction {
  FieldNum residue;
  Integer k;
};
ModReduction reduce_mod(const FieldNum& x, const FieldNum& L);

// True iff alpha/beta is irrational, i.e. no integer relation
// n*alpha + m*beta = 0 with (n, m) != (0, 0).
bool rationally_independent(const FieldNum& alpha, const FieldNum& beta);

// Complex number with FieldNum components.
struct ComplexField {
  FieldNum re, im;

  ComplexField() = default;
  ComplexField(FieldNum re) : re(std::move(re)) {}
  ComplexField(long v) : re(v) {}
  ComplexField(int v) : re(v) {}
  ComplexField(FieldNum re, FieldNum im) : re(std::move(re)), im(std::move(im)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ComplexField operator-() const { return {-re, -im}; }
  ComplexField& operator+=(const ComplexField& o) { re += o.re; im += o.im; return *this; }
  ComplexField& operator-=(const ComplexField& o) { re -= o.re; im -= o.im; return *this; }
  ComplexField& operator*=(const ComplexField& o) {
    FieldNum nre = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = nre;
    return *this;
  }

  friend ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
  friend ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
  friend ComplexField operator*(ComplexField a, const ComplexField& b) { return a *= b; }
  friend bool operator==(const ComplexField& a, const ComplexField& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexField& a, const ComplexField& b) { return !(a == b); }

  std::string str() const;
};

}  // namespace simultile

#endif
