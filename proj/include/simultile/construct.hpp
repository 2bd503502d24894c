#ifndef SIMULTILE_CONSTRUCT_HPP
#define SIMULTILE_CONSTRUCT_HPP

#include <optional>
#include <vector>

#include "simultile/kronecker.hpp"
#include "simultile/stepfn.hpp"

namespace simultile {

struct PlacementResult {
  ElementarySet U;                    // on the line
  std::optional<PiecewiseFn> f;       // transported values, when requested
  ElementarySet image_a;              // pi_alpha(U)
  ElementarySet image_b;              // pi_beta(U)
};

struct TruncatedTiling {
  PiecewiseFn f;
  ElementarySet covered_a;            // certified subset of T_alpha
  ElementarySet covered_b;            // certified subset of T_beta
  int rounds = 0;
  FieldNum support_measure;           // measure of the constructed carrier
  TilingCertificate certificate;
};

// Lifts A to an elementary U in (r, +inf) with pi_alpha one-to-one on U,
// pi_alpha(U) = A and pi_beta(U) inside the arc J.
PlacementResult place_injective(const ElementarySet& A, const Interval& J,
                                const FieldNum& alpha, const FieldNum& beta,
                                const FieldNum& r, const ShiftSearchBudget& budget);

// As place_injective, and additionally transports the circle function phi
// through the injective lift: the returned f satisfies pi_alpha(f) = phi on A.
PlacementResult place_with_values(const ElementarySet& A, const CirclePiecewiseFn& phi,
                                  const Interval& J, const FieldNum& alpha,
                                  const FieldNum& beta, const FieldNum& r,
                                  const ShiftSearchBudget& budget);

// Finite truncation of the alternating construction: for `rounds` rounds,
// carve off half of the remaining A and B (geometric halving), lift each
// piece with the residual target values, and certify the tiling on the
// covered unions.
TruncatedTiling alternating_scheme(const ElementarySet& A, const ElementarySet& B,
                                   const CirclePiecewiseFn& phi,
                                   const CirclePiecewiseFn& psi, int rounds,
                                   const FieldNum& alpha, const FieldNum& beta,
                                   const FieldNum& r, const ShiftSearchBudget& budget);

// Arbitrary complex levels p, q on full circles; support measure at most
// alpha + beta.
TruncatedTiling thm_a31_truncated(const ComplexField& p, const ComplexField& q,
                                  int rounds, const FieldNum& alpha,
                                  const FieldNum& beta,
                                  const ShiftSearchBudget& budget);

struct FnIntervalSystem {
  int p = 0, q = 0;
  FieldNum gamma;
  std::vector<std::vector<Interval>> L;  // L[i][j], p x q, intervals on the line
  std::vector<Interval> I;               // q arcs in T_alpha
  std::vector<Interval> J;               // p arcs in T_beta
};

// The p x q system of gamma-intervals L_ij = [0, gamma) + n_i*alpha + m_j*beta
// whose alpha-projections depend only on j and beta-projections only on i.
FnIntervalSystem fn_interval_system(int p, int q, const FieldNum& gamma,
                                    const FieldNum& alpha, const FieldNum& beta,
                                    const ShiftSearchBudget& budget);

struct FnTiling {
  PiecewiseFn f;
  ElementarySet A;  // pi_alpha(supp f), measure q*gamma
  ElementarySet B;  // pi_beta(supp f), measure p*gamma
  FnIntervalSystem system;
  TilingCertificate certificate;  // pi_alpha(f) = p on A, pi_beta(f) = q on B
};

// Weights the interval system by the northwest-corner minimal-support
// array; supp f has measure (p+q-1)*gamma.
FnTiling fn_tiler(int p, int q, const FieldNum& gamma, const FieldNum& alpha,
                  const FieldNum& beta, const ShiftSearchBudget& budget);

// Compact tiling at coprime integer levels: the fn_tiler block plus the
// alternating scheme on the complements. Support measure is
// alpha + beta - gamma with gamma just below min(alpha/q, beta/p).
TruncatedTiling thm_a25_truncated(int p, int q, const FieldNum& eps, int rounds,
                                  const FieldNum& alpha, const FieldNum& beta,
                                  const ShiftSearchBudget& budget);

// Levels (1, 0): support measure at most alpha + eps, with the
// beta-projection vanishing identically outside [0, eps).
TruncatedTiling thm_a26_truncated(const FieldNum& eps, int rounds,
                                  const FieldNum& alpha, const FieldNum& beta,
                                  const ShiftSearchBudget& budget);

}  // namespace simultile

#endif
