#include "simultile/field.hpp"

#include <cmath>
#include <sstream>

namespace simultile {

namespace {

int g_discriminant = 2;

bool is_square(int d) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d))));
  for (int c = r - 1; c <= r + 1; ++c)
    if (c >= 0 && c * c == d) return true;
  return false;
}

}  // namespace

int field_discriminant() { return g_discriminant; }

void set_field_discriminant(int d) {
  if (d < 2 || is_square(d))
    throw Error("field discriminant must be a non-square integer >= 2");
  g_discriminant = d;
}

int FieldNum::sign() const {
  int sr = sgn(r_);
  int ss = sgn(s_);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Opposite signs: compare |r| with |s|*sqrt(d), i.e. r^2 with d*s^2.
  Rational lhs = r_ * r_;
  Rational rhs = s_ * s_ * g_discriminant;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // only possible when r = s = 0
  return c > 0 ? sr : ss;
}

FieldNum& FieldNum::operator*=(const FieldNum& o) {
  Rational nr = r_ * o.r_ + s_ * o.s_ * g_discriminant;
  s_ = r_ * o.s_ + s_ * o.r_;
  r_ = nr;
  return *this;
}

FieldNum& FieldNum::operator/=(const FieldNum& o) {
  if (o.is_zero()) throw DivisionByZero();
  // Multiply by the conjugate: 1/(r + s*sqrt(d)) = (r - s*sqrt(d))/(r^2 - d*s^2).
  Rational norm = o.r_ * o.r_ - o.s_ * o.s_ * g_discriminant;
  FieldNum conj(o.r_, -o.s_);
  *this *= conj;
  r_ /= norm;
  s_ /= norm;
  canon();
  return *this;
}

double FieldNum::to_double() const {
  return r_.get_d() + s_.get_d() * std::sqrt(static_cast<double>(g_discriminant));
}

Integer FieldNum::floor() const {
  if (s_ == 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r_.get_num_mpz_t(), r_.get_den_mpz_t());
    return q;
  }
  // Seed with a high-precision estimate, then fix up with exact sign tests.
  mpf_class est(0, 192);
  mpf_class rf(r_, 192), sf(s_, 192), df(g_discriminant, 192);
  mpf_sqrt(df.get_mpf_t(), df.get_mpf_t());
  est = rf + sf * df;
  mpz_class n;
  mpz_set_f(n.get_mpz_t(), mpf_class(::floor(est)).get_mpf_t());
  while ((*this - FieldNum(Rational(n))).sign() < 0) --n;
  while ((*this - FieldNum(Rational(n + 1))).sign() >= 0) ++n;
  return n;
}

ModReduction reduce_mod(const FieldNum& x, const FieldNum& L) {
  if (L.sign() <= 0) throw NonPositiveModulus();
  Integer k = (x / L).floor();
  return {x - FieldNum(Rational(k)) * L, k};
}

bool rationally_independent(const FieldNum& alpha, const FieldNum& beta) {
  if (alpha.sign() <= 0 || beta.sign() <= 0)
    throw Error("rationally_independent requires positive arguments");
  return !(alpha / beta).is_rational();
}

std::string FieldNum::str() const {
  std::ostringstream out;
  if (s_ == 0) {
    out << r_;
    return out.str();
  }
  if (r_ != 0) out << r_ << (sgn(s_) > 0 ? " + " : " - ");
  else if (sgn(s_) < 0) out << "-";
  Rational as = ::abs(s_);
  if (as != 1) out << as << "*";
  out << "sqrt(" << g_discriminant << ")";
  return out.str();
}

std::string ComplexField::str() const {
  if (im.is_zero()) return re.str();
  std::ostringstream out;
  out << "(" << re.str() << ") + (" << im.str() << ")*i";
  return out.str();
}

}  // namespace simultile
