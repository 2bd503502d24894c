#ifndef SIMULTILE_ZTILING_HPP
#define SIMULTILE_ZTILING_HPP

#include <map>
#include <optional>
#include <vector>

#include "simultile/dsarray.hpp"
#include "simultile/stepfn.hpp"

namespace simultile {

// Finitely supported complex-valued function on Z.
class ZFunction {
 public:
  ZFunction() = default;
  explicit ZFunction(std::map<long, ComplexField> values);

  const std::map<long, ComplexField>& values() const { return values_; }
  ComplexField at(long t) const;
  int support_size() const { return static_cast<int>(values_.size()); }
  void set(long t, const ComplexField& v);

  friend bool operator==(const ZFunction& a, const ZFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  std::map<long, ComplexField> values_;  // nonzero values only
};

// Stretched discrete convolution kernel: for d = gcd(n, m) the
// (n/d, m/d) kernel chi * chi is scaled by d and repeated d times per
// slot, so the result tiles nZ at level m and mZ at level n with support
// on n + m - d consecutive integers.
ZFunction z_convolution_tiler(int n, int m);

struct ZTilingResult {
  bool ok = false;
  ComplexField p, q;     // levels when ok
  long witness_t = 0;    // failing shift class otherwise
  int witness_modulus = 0;
};

// Checks that the n-periodizations and m-periodizations of g are constant,
// and that sum(g) = n*p = m*q.
ZTilingResult verify_ztiling(const ZFunction& g, int n, int m);

// h(t) = sum_k g(t - k*N) as a vector of length N.
std::vector<ComplexField> fold_mod(const ZFunction& g, int N);

// Re-index a function on Z_{nm} (n, m coprime) as an n x m matrix via
// t -> (t mod n, t mod m).
DSArray crt_lift(const std::vector<ComplexField>& h, int n, int m);

// Minimum support size of a nonzero complex simultaneous tiling of Z by
// nZ and mZ, searched over one period mod lcm(n, m).
int z_min_support_search(int n, int m, int cap = 36);

// Samples f on x + Z; x must avoid piece boundaries.
ZFunction restrict_fx(const PiecewiseFn& f, const FieldNum& x);

// Exact evaluation of the cell decomposition of
// integral_0^1 |supp f_x| dx; equals mes(supp f).
FieldNum support_integral(const PiecewiseFn& f);

}  // namespace simultile

#endif
