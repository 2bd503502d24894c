#include "simultile/construct.hpp"

#include "simultile/dsarray.hpp"

#include <numeric>
#include <utility>

namespace simultile {

namespace {

Ambient circle_of(const FieldNum& L) { return Ambient::circle(L); }

// Shared body of place_injective / place_with_values. phi may be null.
PlacementResult place_core(const ElementarySet& A, const CirclePiecewiseFn* phi,
                           const Interval& J, const FieldNum& alpha,
                           const FieldNum& beta, const FieldNum& r,
                           const ShiftSearchBudget& budget) {
  if (!(A.ambient() == circle_of(alpha))) throw AmbientMismatch();
  if (phi && !(phi->modulus() == alpha)) throw AmbientMismatch();
  if (!rationally_independent(alpha, beta))
    throw Error("alpha and beta must be rationally independent");

  PlacementResult out;
  out.U = ElementarySet(Ambient::line());
  out.image_a = ElementarySet(circle_of(alpha));
  out.image_b = ElementarySet(circle_of(beta));
  if (phi) out.f = PiecewiseFn();
  if (A.empty()) return out;

  FieldNum delta = min(J.length(), alpha) / FieldNum(2);
  std::vector<Interval> line_parts;
  std::vector<Piece> fn_pieces;
  FieldNum cur_r = r;
  for (const Interval& piece : decompose_below(A, delta)) {
    long k_min = ((cur_r - piece.lo) / alpha).floor().get_si() + 1;
    if (k_min < 0) k_min = 0;
    long k = find_shift(piece, J, alpha, beta, budget, k_min);
    FieldNum shift = FieldNum(k) * alpha;
    Interval placed(piece.lo + shift, piece.hi + shift);
    line_parts.push_back(placed);
    cur_r = placed.hi;
    if (phi) {
      ElementarySet cell(circle_of(alpha), {piece});
      CirclePiecewiseFn cut = phi->restricted_to(cell);
      for (const Piece& pc : cut.pieces()) {
        Interval iv(pc.interval.lo + shift, pc.interval.hi + shift);
        fn_pieces.push_back(Piece{iv, pc.c0 - pc.c1 * ComplexField(shift), pc.c1});
      }
    }
  }

  out.U = ElementarySet(Ambient::line(), std::move(line_parts));
  out.image_a = project(out.U, alpha);
  out.image_b = project(out.U, beta);
  if (phi) out.f = PiecewiseFn(std::move(fn_pieces));

  if (!(out.image_a == A)) throw Error("placement does not project back onto A");
  ElementarySet arc(circle_of(beta), {J});
  if (!set_boolean(out.image_b, arc, SetOp::Subtract).empty())
    throw Error("placement escapes the target arc");
  return out;
}

Interval widest_part(const ElementarySet& s) {
  if (s.empty()) throw Error("no arc left to receive a placement");
  const Interval* best = &s.parts().front();
  for (const Interval& p : s.parts())
    if (p.length() > best->length()) best = &p;
  return *best;
}

// The single value a circle function takes on the domain, if it is constant
// there (the zero function counts as constant 0).
std::optional<ComplexField> constant_on(const CirclePiecewiseFn& fn,
                                        const ElementarySet& dom) {
  CirclePiecewiseFn res = fn.restricted_to(dom);
  if (res.pieces().empty()) return ComplexField(0);
  ComplexField c = res.pieces().front().c0;
  FieldNum covered(0);
  for (const Piece& pc : res.pieces()) {
    if (pc.c1 != ComplexField(0) || pc.c0 != c) return std::nullopt;
    covered += pc.interval.length();
  }
  if (covered == dom.measure()) return c;
  return std::nullopt;
}

bool matches_on(const CirclePiecewiseFn& proj, const CirclePiecewiseFn& target,
                const ElementarySet& dom) {
  CirclePiecewiseFn diff = proj.restricted_to(dom) - target.restricted_to(dom);
  return diff.pieces().empty();
}

CirclePiecewiseFn constant_fn(const FieldNum& modulus, const ElementarySet& dom,
                              const ComplexField& value) {
  std::vector<Piece> pieces;
  for (const Interval& p : dom.parts())
    pieces.push_back(Piece{p, value, ComplexField(0)});
  return CirclePiecewiseFn(modulus, std::move(pieces));
}

}  // namespace

PlacementResult place_injective(const ElementarySet& A, const Interval& J,
                                const FieldNum& alpha, const FieldNum& beta,
                                const FieldNum& r, const ShiftSearchBudget& budget) {
  return place_core(A, nullptr, J, alpha, beta, r, budget);
}

PlacementResult place_with_values(const ElementarySet& A, const CirclePiecewiseFn& phi,
                                  const Interval& J, const FieldNum& alpha,
                                  const FieldNum& beta, const FieldNum& r,
                                  const ShiftSearchBudget& budget) {
  return place_core(A, &phi, J, alpha, beta, r, budget);
}

TruncatedTiling alternating_scheme(const ElementarySet& A, const ElementarySet& B,
                                   const CirclePiecewiseFn& phi,
                                   const CirclePiecewiseFn& psi, int rounds,
                                   const FieldNum& alpha, const FieldNum& beta,
                                   const FieldNum& r, const ShiftSearchBudget& budget) {
  if (!(A.ambient() == circle_of(alpha)) || !(B.ambient() == circle_of(beta)))
    throw AmbientMismatch();
  if (!(phi.modulus() == alpha) || !(psi.modulus() == beta)) throw AmbientMismatch();
  if (rounds < 0) throw Error("rounds must be nonnegative");
  if (!rationally_independent(alpha, beta))
    throw Error("alpha and beta must be rationally independent");

  ElementarySet rem_a = A, rem_b = B;
  ElementarySet covered_a(circle_of(alpha)), covered_b(circle_of(beta));
  CirclePiecewiseFn g_acc(beta, {});    // sum of beta-projections of the g lifts
  CirclePiecewiseFn h_acc(alpha, {});   // sum of alpha-projections of the h lifts
  PiecewiseFn f;
  FieldNum cur_r = r;
  FieldNum carrier(0);

  for (int n = 0; n < rounds; ++n) {
    if (!rem_a.empty()) {
      auto [a_n, rest] = split_by_measure(rem_a, rem_a.measure() / FieldNum(2));
      CirclePiecewiseFn phi_n =
          phi.restricted_to(a_n) - h_acc.restricted_to(a_n);
      PlacementResult g = place_with_values(a_n, phi_n, widest_part(rem_b), alpha,
                                            beta, cur_r, budget);
      rem_a = rest;
      f = fn_combine(f, *g.f, FnOp::Add);
      if (!g.U.empty()) cur_r = g.U.parts().back().hi;
      carrier += g.U.measure();
      covered_a = set_boolean(covered_a, a_n, SetOp::Union);
      g_acc = g_acc + project_fn(*g.f, beta);
    }
    if (!rem_b.empty()) {
      auto [b_n, rest] = split_by_measure(rem_b, rem_b.measure() / FieldNum(2));
      CirclePiecewiseFn psi_n =
          psi.restricted_to(b_n) - g_acc.restricted_to(b_n);
      PlacementResult h = place_with_values(b_n, psi_n, widest_part(rem_a), beta,
                                            alpha, cur_r, budget);
      rem_b = rest;
      f = fn_combine(f, *h.f, FnOp::Add);
      if (!h.U.empty()) cur_r = h.U.parts().back().hi;
      carrier += h.U.measure();
      covered_b = set_boolean(covered_b, b_n, SetOp::Union);
      h_acc = h_acc + project_fn(*h.f, alpha);
    }
  }

  TruncatedTiling out;
  out.f = f;
  out.covered_a = covered_a;
  out.covered_b = covered_b;
  out.rounds = rounds;
  out.support_measure = carrier;

  auto p = constant_on(phi, covered_a);
  auto q = constant_on(psi, covered_b);
  if (p && q) {
    out.certificate = verify_tiling(f, alpha, beta, *p, *q, covered_a, covered_b);
  } else {
    TilingCertificate cert;
    cert.modulus_a = alpha;
    cert.modulus_b = beta;
    cert.level_p = ComplexField(0);
    cert.level_q = ComplexField(0);
    cert.verified_domain_a = covered_a;
    cert.verified_domain_b = covered_b;
    bool ok_a = matches_on(project_fn(f, alpha), phi, covered_a);
    bool ok_b = matches_on(project_fn(f, beta), psi, covered_b);
    if (ok_a && ok_b) {
      bool full = covered_a.measure() == alpha && covered_b.measure() == beta;
      cert.status = full ? TilingStatus::ExactTiling : TilingStatus::PartialTiling;
    } else {
      cert.status = TilingStatus::Failed;
    }
    out.certificate = cert;
  }
  return out;
}

TruncatedTiling thm_a31_truncated(const ComplexField& p, const ComplexField& q,
                                  int rounds, const FieldNum& alpha,
                                  const FieldNum& beta,
                                  const ShiftSearchBudget& budget) {
  ElementarySet A = ElementarySet::full_circle(alpha);
  ElementarySet B = ElementarySet::full_circle(beta);
  return alternating_scheme(A, B, constant_fn(alpha, A, p), constant_fn(beta, B, q),
                            rounds, alpha, beta, FieldNum(0), budget);
}

FnIntervalSystem fn_interval_system(int p, int q, const FieldNum& gamma,
                                    const FieldNum& alpha, const FieldNum& beta,
                                    const ShiftSearchBudget& budget) {
  if (p < 1 || q < 1) throw Error("p and q must be positive");
  if (gamma.sign() <= 0) throw Error("gamma must be positive");
  if (gamma >= alpha / FieldNum(q) || gamma >= beta / FieldNum(p))
    throw GammaTooLarge();
  if (!rationally_independent(alpha, beta))
    throw Error("alpha and beta must be rationally independent");

  std::vector<long> ms = find_disjoint_system(q, gamma, beta, alpha, budget);
  std::vector<long> ns = find_disjoint_system(p, gamma, alpha, beta, budget);

  FnIntervalSystem sys;
  sys.p = p;
  sys.q = q;
  sys.gamma = gamma;
  for (long m : ms) {
    FieldNum base = reduce_mod(FieldNum(m) * beta, alpha).residue;
    sys.I.push_back(Interval(base, base + gamma));
  }
  for (long n : ns) {
    FieldNum base = reduce_mod(FieldNum(n) * alpha, beta).residue;
    sys.J.push_back(Interval(base, base + gamma));
  }
  std::vector<Interval> all;
  for (int i = 0; i < p; ++i) {
    sys.L.emplace_back();
    for (int j = 0; j < q; ++j) {
      FieldNum lo = FieldNum(ns[i]) * alpha + FieldNum(ms[j]) * beta;
      sys.L[i].push_back(Interval(lo, lo + gamma));
      all.push_back(sys.L[i].back());

      ElementarySet one(Ambient::line(), {sys.L[i][j]});
      if (!(project(one, alpha) == ElementarySet(circle_of(alpha), {sys.I[j]})))
        throw Error("interval system lost its alpha-projection structure");
      if (!(project(one, beta) == ElementarySet(circle_of(beta), {sys.J[i]})))
        throw Error("interval system lost its beta-projection structure");
    }
  }
  ElementarySet merged(Ambient::line(), std::move(all));
  if (merged.measure() != FieldNum(p) * FieldNum(q) * gamma)
    throw Error("interval system is not disjoint");
  return sys;
}

FnTiling fn_tiler(int p, int q, const FieldNum& gamma, const FieldNum& alpha,
                  const FieldNum& beta, const ShiftSearchBudget& budget) {
  if (std::gcd(p, q) != 1) throw NotCoprime();
  FnTiling out;
  out.system = fn_interval_system(p, q, gamma, alpha, beta, budget);

  DSArray M = nw_minimal(p, q);  // rows sum q, columns sum p
  std::vector<Piece> pieces;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const ComplexRational& c = M.at(i, j);
      if (c.is_zero()) continue;
      pieces.push_back(Piece{out.system.L[i][j],
                             ComplexField(FieldNum(c.re), FieldNum(c.im)),
                             ComplexField(0)});
    }
  out.f = PiecewiseFn(std::move(pieces));
  out.A = ElementarySet(circle_of(alpha), out.system.I);
  out.B = ElementarySet(circle_of(beta), out.system.J);
  if (out.f.support().measure() != FieldNum(p + q - 1) * gamma)
    throw Error("carrier measure disagrees with the minimal support count");
  out.certificate = verify_tiling(out.f, alpha, beta, ComplexField(p),
                                  ComplexField(q), out.A, out.B);
  return out;
}

TruncatedTiling thm_a25_truncated(int p, int q, const FieldNum& eps, int rounds,
                                  const FieldNum& alpha, const FieldNum& beta,
                                  const ShiftSearchBudget& budget) {
  if (std::gcd(p, q) != 1) throw NotCoprime();
  FieldNum sigma = min(alpha / FieldNum(q), beta / FieldNum(p));
  if (eps.sign() <= 0 || eps >= sigma)
    throw Error("eps must lie in (0, min(alpha/q, beta/p))");
  FieldNum gamma = sigma - eps / FieldNum(2);

  FnTiling base = fn_tiler(p, q, gamma, alpha, beta, budget);
  ElementarySet A2 =
      set_boolean(ElementarySet::full_circle(alpha), base.A, SetOp::Subtract);
  ElementarySet B2 =
      set_boolean(ElementarySet::full_circle(beta), base.B, SetOp::Subtract);
  FieldNum r(0);
  if (!base.f.is_zero()) r = base.f.support().parts().back().hi;

  TruncatedTiling alt = alternating_scheme(
      A2, B2, constant_fn(alpha, A2, ComplexField(p)),
      constant_fn(beta, B2, ComplexField(q)), rounds, alpha, beta, r, budget);

  TruncatedTiling out;
  out.f = fn_combine(base.f, alt.f, FnOp::Add);
  out.covered_a = set_boolean(base.A, alt.covered_a, SetOp::Union);
  out.covered_b = set_boolean(base.B, alt.covered_b, SetOp::Union);
  out.rounds = rounds;
  out.support_measure = FieldNum(p + q - 1) * gamma + alt.support_measure;
  out.certificate = verify_tiling(out.f, alpha, beta, ComplexField(p),
                                  ComplexField(q), out.covered_a, out.covered_b);
  return out;
}

TruncatedTiling thm_a26_truncated(const FieldNum& eps, int rounds,
                                  const FieldNum& alpha, const FieldNum& beta,
                                  const ShiftSearchBudget& budget) {
  if (eps.sign() <= 0) throw Error("eps must be positive");
  ElementarySet A = ElementarySet::full_circle(alpha);
  ElementarySet B(circle_of(beta), {Interval(FieldNum(0), min(eps, beta))});

  TruncatedTiling alt = alternating_scheme(
      A, B, constant_fn(alpha, A, ComplexField(1)), CirclePiecewiseFn(beta, {}),
      rounds, alpha, beta, FieldNum(0), budget);

  // The carrier projects into B, so the beta-level 0 extends for free to
  // the whole complement of B.
  ElementarySet outside_b =
      set_boolean(ElementarySet::full_circle(beta), B, SetOp::Subtract);
  alt.covered_b = set_boolean(alt.covered_b, outside_b, SetOp::Union);
  alt.certificate = verify_tiling(alt.f, alpha, beta, ComplexField(1),
                                  ComplexField(0), alt.covered_a, alt.covered_b);
  return alt;
}

}  // namespace simultile
