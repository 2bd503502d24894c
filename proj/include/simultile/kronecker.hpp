#ifndef SIMULTILE_KRONECKER_HPP
#define SIMULTILE_KRONECKER_HPP

#include <vector>

#include "simultile/sets.hpp"

namespace simultile {

// Budget for the linear shift scans. Density of the irrational rotation
// guarantees eventual success but gives no a-priori bound, so exhaustion
// is a legitimate runtime outcome.
struct ShiftSearchBudget {
  long max_k = 1 << 14;
  int doublings = 6;
};

// Smallest k >= k_min with pi_L(U + k*step) contained in the arc J.
// Requires length(U) < length(J) and step, L rationally independent.
// The result is re-verified exactly before it is returned.
long find_shift(const Interval& U, const Interval& J, const FieldNum& step,
                const FieldNum& L, const ShiftSearchBudget& budget, long k_min = 0);

// Multipliers m_1..m_count such that the arcs [m_j*step, m_j*step + gamma)
// mod L are pairwise disjoint (greedy first fit; only non-wrapping
// placements are accepted, so each arc is a plain interval of T_L).
std::vector<long> find_disjoint_system(int count, const FieldNum& gamma,
                                       const FieldNum& step, const FieldNum& L,
                                       const ShiftSearchBudget& budget);

}  // namespace simultile

#endif
