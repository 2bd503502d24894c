#ifndef SIMULTILE_DSARRAY_HPP
#define SIMULTILE_DSARRAY_HPP

#include <set>
#include <utility>
#include <vector>

#include "simultile/field.hpp"

namespace simultile {

// Complex number with rational components; the entry type of a
// doubly stochastic array.
struct ComplexRational {
  Rational re{0}, im{0};

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(long v) : re(v) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) {
    return a += b;
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// n x m matrix with prescribed uniform marginals: every row sums to m,
// every column to n.
struct DSArray {
  int n = 0, m = 0;
  std::vector<ComplexRational> entries;  // row-major

  DSArray() = default;
  DSArray(int n_, int m_) : n(n_), m(m_), entries(n_ * m_) {}

  ComplexRational& at(int i, int j) { return entries[i * m + j]; }
  const ComplexRational& at(int i, int j) const { return entries[i * m + j]; }
  int support_size() const;
  bool nonnegative() const;
};

struct SupportPattern {
  int n = 0, m = 0;
  std::set<std::pair<int, int>> cells;
};

// Northwest-corner-rule array: supplies m per row, demands n per column.
// Support size is exactly n + m - gcd(n, m); entries nonnegative integers.
DSArray nw_minimal(int n, int m);

// Exact row/column sum check.
bool verify_marginals(const DSArray& M);

// True iff some complex matrix supported inside P has the prescribed
// marginals. Decided by the bipartite-component criterion: every
// connected component with a rows and b columns must satisfy a*m = b*n,
// and no row or column may be isolated.
bool pattern_feasible(const SupportPattern& P);

// Minimum support size over feasible patterns, by exhaustive enumeration
// with coverage pruning. Guarded by n*m <= cap.
int min_support_exhaustive(int n, int m, int cap = 30);

// n + m - gcd(n, m).
int min_support_formula(int n, int m);

}  // namespace simultile

#endif
