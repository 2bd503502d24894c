#ifndef SIMULTILE_STEPFN_HPP
#define SIMULTILE_STEPFN_HPP

#include <optional>
#include <vector>

#include "simultile/sets.hpp"

namespace simultile {

// One affine piece: f(x) = c0 + c1*x on the interval.
struct Piece {
  Interval interval;
  ComplexField c0, c1;

  ComplexField value_at(const FieldNum& x) const { return c0 + c1 * ComplexField(x); }
  bool same_affine(const Piece& o) const { return c0 == o.c0 && c1 == o.c1; }
};

// Piecewise-affine complex-valued function on the line, zero outside
// finitely many disjoint intervals. Normalized: pieces sorted, zero pieces
// dropped, adjacent pieces with the same affine law merged.
class PiecewiseFn {
 public:
  PiecewiseFn() = default;
  explicit PiecewiseFn(std::vector<Piece> pieces);

  static PiecewiseFn indicator(const Interval& iv, const ComplexField& value = ComplexField(1));

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  ElementarySet support() const;
  ComplexField eval(const FieldNum& x) const;

  friend bool operator==(const PiecewiseFn& a, const PiecewiseFn& b) {
    return a.pieces_.size() == b.pieces_.size() &&
           std::equal(a.pieces_.begin(), a.pieces_.end(), b.pieces_.begin(),
                      [](const Piece& p, const Piece& q) {
                        return p.interval == q.interval && p.same_affine(q);
                      });
  }

 private:
  std::vector<Piece> pieces_;
};

// Piecewise-affine function on the circle T_L, pieces within [0, L).
class CirclePiecewiseFn {
 public:
  CirclePiecewiseFn(FieldNum modulus, std::vector<Piece> pieces);

  const FieldNum& modulus() const { return modulus_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  ElementarySet support() const;
  ComplexField eval(const FieldNum& x) const;

  CirclePiecewiseFn restricted_to(const ElementarySet& domain) const;

  friend CirclePiecewiseFn operator+(const CirclePiecewiseFn& a, const CirclePiecewiseFn& b);
  friend CirclePiecewiseFn operator-(const CirclePiecewiseFn& a, const CirclePiecewiseFn& b);

 private:
  FieldNum modulus_;
  std::vector<Piece> pieces_;
};

enum class FnOp { Add, Sub };
PiecewiseFn fn_combine(const PiecewiseFn& f, const PiecewiseFn& g, FnOp op);

// g(x) = f(x - t).
PiecewiseFn translate(const PiecewiseFn& f, const FieldNum& t);

// Exact periodization: sum of all L-translates folded into [0, L).
CirclePiecewiseFn project_fn(const PiecewiseFn& f, const FieldNum& L);

// Exact integral over the line.
ComplexField integral(const PiecewiseFn& f);
ComplexField circle_integral(const CirclePiecewiseFn& f);

enum class TilingStatus { ExactTiling, PartialTiling, Failed };

struct TilingWitness {
  FieldNum point;          // point on the failing circle
  ComplexField found;      // value of the projection there
  ComplexField expected;   // required level
  char progression;        // 'a' or 'b'
};

struct TilingCertificate {
  FieldNum modulus_a, modulus_b;
  ComplexField level_p, level_q;
  ElementarySet verified_domain_a, verified_domain_b;
  std::vector<FieldNum> exceptional_points;
  TilingStatus status = TilingStatus::Failed;
  std::optional<TilingWitness> witness;

  bool ok() const { return status != TilingStatus::Failed; }
};

// Checks pi_alpha(f) = p on domain_a (default full T_alpha) and
// pi_beta(f) = q on domain_b. The folded function is evaluated symbolically
// on every refinement cell; failure produces a concrete witness point.
TilingCertificate verify_tiling(const PiecewiseFn& f, const FieldNum& alpha,
                                const FieldNum& beta, const ComplexField& p,
                                const ComplexField& q,
                                const std::optional<ElementarySet>& domain_a = std::nullopt,
                                const std::optional<ElementarySet>& domain_b = std::nullopt);

struct LevelConsistency {
  bool consistent;
  ComplexField p_alpha, q_beta, integral_f;
};

// Prop-level check: a simultaneous tiling forces integral(f) = p*alpha = q*beta.
LevelConsistency check_level_consistency(const PiecewiseFn& f, const FieldNum& alpha,
                                         const FieldNum& beta, const ComplexField& p,
                                         const ComplexField& q);

// lambda * (1_[0,alpha) * 1_[0,beta)) as an explicit trapezoid; tiles with
// levels lambda*(beta, alpha).
PiecewiseFn convolution_tiler(const FieldNum& alpha, const FieldNum& beta,
                              const ComplexField& lambda);

}  // namespace simultile

#endif
