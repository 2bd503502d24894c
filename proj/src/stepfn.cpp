#include "simultile/stepfn.hpp"

#include <algorithm>

namespace simultile {

namespace {

// Sum a list of affine contributions into a normalized disjoint piece list.
std::vector<Piece> refine_and_sum(const std::vector<Piece>& contribs) {
  std::vector<FieldNum> cuts;
  cuts.reserve(contribs.size() * 2);
  for (const auto& c : contribs) {
    cuts.push_back(c.interval.lo);
    cuts.push_back(c.interval.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Piece> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const FieldNum& lo = cuts[i];
    const FieldNum& hi = cuts[i + 1];
    ComplexField c0, c1;
    bool any = false;
    for (const auto& c : contribs) {
      if (c.interval.lo <= lo && hi <= c.interval.hi) {
        c0 += c.c0;
        c1 += c.c1;
        any = true;
      }
    }
    if (!any || (c0.is_zero() && c1.is_zero())) continue;
    if (!out.empty() && out.back().interval.hi == lo && out.back().c0 == c0 &&
        out.back().c1 == c1) {
      out.back().interval.hi = hi;
    } else {
      out.push_back(Piece{Interval(lo, hi), c0, c1});
    }
  }
  return out;
}

ElementarySet pieces_support(const Ambient& ambient, const std::vector<Piece>& pieces) {
  std::vector<Interval> parts;
  parts.reserve(pieces.size());
  for (const auto& p : pieces) parts.push_back(p.interval);
  return ElementarySet(ambient, std::move(parts));
}

ComplexField eval_pieces(const std::vector<Piece>& pieces, const FieldNum& x) {
  for (const auto& p : pieces)
    if (p.interval.contains(x)) return p.value_at(x);
  return ComplexField();
}

}  // namespace

PiecewiseFn::PiecewiseFn(std::vector<Piece> pieces) {
  pieces_ = refine_and_sum(pieces);
}

PiecewiseFn PiecewiseFn::indicator(const Interval& iv, const ComplexField& value) {
  return PiecewiseFn({Piece{iv, value, ComplexField()}});
}

ElementarySet PiecewiseFn::support() const {
  return pieces_support(Ambient::line(), pieces_);
}

ComplexField PiecewiseFn::eval(const FieldNum& x) const { return eval_pieces(pieces_, x); }

CirclePiecewiseFn::CirclePiecewiseFn(FieldNum modulus, std::vector<Piece> pieces)
    : modulus_(std::move(modulus)) {
  if (modulus_.sign() <= 0) throw NonPositiveModulus();
  pieces_ = refine_and_sum(pieces);
  if (!pieces_.empty()) {
    if (pieces_.front().interval.lo.sign() < 0 || pieces_.back().interval.hi > modulus_)
      throw Error("circle function piece outside fundamental domain");
  }
}

ElementarySet CirclePiecewiseFn::support() const {
  return pieces_support(Ambient::circle(modulus_), pieces_);
}

ComplexField CirclePiecewiseFn::eval(const FieldNum& x) const {
  return eval_pieces(pieces_, x);
}

CirclePiecewiseFn CirclePiecewiseFn::restricted_to(const ElementarySet& domain) const {
  std::vector<Piece> kept;
  for (const auto& pc : pieces_) {
    for (const auto& part : domain.parts()) {
      FieldNum lo = max(pc.interval.lo, part.lo);
      FieldNum hi = min(pc.interval.hi, part.hi);
      if (lo < hi) kept.push_back(Piece{Interval(lo, hi), pc.c0, pc.c1});
    }
  }
  return CirclePiecewiseFn(modulus_, std::move(kept));
}

CirclePiecewiseFn operator+(const CirclePiecewiseFn& a, const CirclePiecewiseFn& b) {
  if (!(a.modulus() == b.modulus())) throw AmbientMismatch();
  std::vector<Piece> contribs = a.pieces();
  for (const auto& p : b.pieces()) contribs.push_back(p);
  return CirclePiecewiseFn(a.modulus(), std::move(contribs));
}

CirclePiecewiseFn operator-(const CirclePiecewiseFn& a, const CirclePiecewiseFn& b) {
  if (!(a.modulus() == b.modulus())) throw AmbientMismatch();
  std::vector<Piece> contribs = a.pieces();
  for (const auto& p : b.pieces())
    contribs.push_back(Piece{p.interval, -p.c0, -p.c1});
  return CirclePiecewiseFn(a.modulus(), std::move(contribs));
}

PiecewiseFn fn_combine(const PiecewiseFn& f, const PiecewiseFn& g, FnOp op) {
  std::vector<Piece> contribs = f.pieces();
  for (const auto& p : g.pieces()) {
    if (op == FnOp::Add)
      contribs.push_back(p);
    else
      contribs.push_back(Piece{p.interval, -p.c0, -p.c1});
  }
  return PiecewiseFn(std::move(contribs));
}

PiecewiseFn translate(const PiecewiseFn& f, const FieldNum& t) {
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) {
    // g(x) = f(x - t) = c0 + c1*(x - t)
    out.push_back(Piece{Interval(p.interval.lo + t, p.interval.hi + t),
                        p.c0 - p.c1 * ComplexField(t), p.c1});
  }
  return PiecewiseFn(std::move(out));
}

CirclePiecewiseFn project_fn(const PiecewiseFn& f, const FieldNum& L) {
  if (L.sign() <= 0) throw NonPositiveModulus();
  std::vector<Piece> contribs;
  for (const auto& p : f.pieces()) {
    Integer k_lo = (p.interval.lo / L).floor();
    Integer k_hi = ((p.interval.hi / L)).floor();
    for (Integer k = k_lo; k <= k_hi; ++k) {
      FieldNum kL = FieldNum(Rational(k)) * L;
      FieldNum lo = max(p.interval.lo, kL);
      FieldNum hi = min(p.interval.hi, kL + L);
      if (!(lo < hi)) continue;
      // On the circle coordinate y = x - k*L the piece value is
      // (c0 + c1*k*L) + c1*y.
      contribs.push_back(Piece{Interval(lo - kL, hi - kL),
                               p.c0 + p.c1 * ComplexField(kL), p.c1});
    }
  }
  return CirclePiecewiseFn(L, std::move(contribs));
}

ComplexField integral(const PiecewiseFn& f) {
  ComplexField total;
  for (const auto& p : f.pieces()) {
    FieldNum len = p.interval.length();
    FieldNum sq = (p.interval.hi * p.interval.hi - p.interval.lo * p.interval.lo) /
                  FieldNum(2);
    total += p.c0 * ComplexField(len) + p.c1 * ComplexField(sq);
  }
  return total;
}

ComplexField circle_integral(const CirclePiecewiseFn& f) {
  ComplexField total;
  for (const auto& p : f.pieces()) {
    FieldNum len = p.interval.length();
    FieldNum sq = (p.interval.hi * p.interval.hi - p.interval.lo * p.interval.lo) /
                  FieldNum(2);
    total += p.c0 * ComplexField(len) + p.c1 * ComplexField(sq);
  }
  return total;
}

namespace {

// Check that the folded function equals `level` on `domain`, cell by cell.
std::optional<TilingWitness> check_projection(const CirclePiecewiseFn& h,
                                              const ElementarySet& domain,
                                              const ComplexField& level,
                                              char progression) {
  std::vector<FieldNum> cuts;
  for (const auto& part : domain.parts()) {
    cuts.push_back(part.lo);
    cuts.push_back(part.hi);
  }
  for (const auto& p : h.pieces()) {
    cuts.push_back(p.interval.lo);
    cuts.push_back(p.interval.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const FieldNum& lo = cuts[i];
    const FieldNum& hi = cuts[i + 1];
    if (!domain.contains(lo)) continue;
    // The cell lies inside one piece (or none), so f is affine on it;
    // equality with a constant holds iff it holds at two points.
    FieldNum mid = (lo + hi) / FieldNum(2);
    ComplexField at_lo = h.eval(lo);
    ComplexField at_mid = h.eval(mid);
    if (at_lo != level)
      return TilingWitness{lo, at_lo, level, progression};
    if (at_mid != level)
      return TilingWitness{mid, at_mid, level, progression};
  }
  return std::nullopt;
}

}  // namespace

TilingCertificate verify_tiling(const PiecewiseFn& f, const FieldNum& alpha,
                                const FieldNum& beta, const ComplexField& p,
                                const ComplexField& q,
                                const std::optional<ElementarySet>& domain_a,
                                const std::optional<ElementarySet>& domain_b) {
  if (alpha.sign() <= 0 || beta.sign() <= 0) throw NonPositiveModulus();
  TilingCertificate cert;
  cert.modulus_a = alpha;
  cert.modulus_b = beta;
  cert.level_p = p;
  cert.level_q = q;
  cert.verified_domain_a = domain_a ? *domain_a : ElementarySet::full_circle(alpha);
  cert.verified_domain_b = domain_b ? *domain_b : ElementarySet::full_circle(beta);

  CirclePiecewiseFn ha = project_fn(f, alpha);
  CirclePiecewiseFn hb = project_fn(f, beta);

  if (auto w = check_projection(ha, cert.verified_domain_a, p, 'a')) {
    cert.status = TilingStatus::Failed;
    cert.witness = *w;
    return cert;
  }
  if (auto w = check_projection(hb, cert.verified_domain_b, q, 'b')) {
    cert.status = TilingStatus::Failed;
    cert.witness = *w;
    return cert;
  }
  bool full = cert.verified_domain_a.measure() == alpha &&
              cert.verified_domain_b.measure() == beta;
  cert.status = full ? TilingStatus::ExactTiling : TilingStatus::PartialTiling;
  return cert;
}

LevelConsistency check_level_consistency(const PiecewiseFn& f, const FieldNum& alpha,
                                         const FieldNum& beta, const ComplexField& p,
                                         const ComplexField& q) {
  ComplexField total = integral(f);
  ComplexField pa = p * ComplexField(alpha);
  ComplexField qb = q * ComplexField(beta);
  return {total == pa && total == qb, pa, qb, total};
}

PiecewiseFn convolution_tiler(const FieldNum& alpha, const FieldNum& beta,
                              const ComplexField& lambda) {
  if (alpha.sign() <= 0 || beta.sign() <= 0) throw NonPositiveModulus();
  if (lambda.is_zero()) return PiecewiseFn();
  FieldNum lo = min(alpha, beta);
  FieldNum hi = max(alpha, beta);
  FieldNum sum = alpha + beta;
  std::vector<Piece> pieces;
  // Rising slope lambda on [0, lo).
  pieces.push_back(Piece{Interval(FieldNum(0), lo), ComplexField(), lambda});
  // Plateau lambda*lo on [lo, hi).
  if (lo < hi)
    pieces.push_back(Piece{Interval(lo, hi), lambda * ComplexField(lo), ComplexField()});
  // Falling slope on [hi, alpha + beta): lambda*(alpha + beta - x).
  pieces.push_back(Piece{Interval(hi, sum), lambda * ComplexField(sum), -lambda});
  return PiecewiseFn(std::move(pieces));
}

}  // namespace simultile
