#include <random>

#include "doctest.h"
#include "simultile/stepfn.hpp"

using namespace simultile;

namespace {

const FieldNum kRt2 = FieldNum::sqrt_d();

PiecewiseFn ind(long lo_n, long lo_d, long hi_n, long hi_d, long v = 1) {
  return PiecewiseFn::indicator(
      Interval(FieldNum(Rational(lo_n, lo_d)), FieldNum(Rational(hi_n, hi_d))),
      ComplexField(v));
}

std::mt19937 rng(99);

PiecewiseFn random_fn() {
  std::uniform_int_distribution<int> count(1, 4), num(-12, 12), den(1, 6),
      val(-3, 3);
  std::vector<Piece> pieces;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    FieldNum lo(Rational(num(rng), den(rng)), Rational(num(rng), 24));
    FieldNum len(Rational(1 + std::abs(num(rng)), 4 * den(rng)));
    pieces.push_back(Piece{Interval(lo, lo + len),
                           ComplexField(FieldNum(val(rng)), FieldNum(val(rng))),
                           ComplexField(val(rng))});
  }
  return PiecewiseFn(std::move(pieces));
}

}  // namespace

TEST_CASE("pointwise combination") {
  PiecewiseFn f = ind(0, 1, 1, 1);
  CHECK(fn_combine(f, PiecewiseFn(), FnOp::Add) == f);
  PiecewiseFn merged = fn_combine(ind(0, 1, 1, 1), ind(1, 1, 2, 1), FnOp::Add);
  REQUIRE(merged.pieces().size() == 1);
  CHECK(merged.pieces()[0].interval == Interval(FieldNum(0), FieldNum(2)));
  CHECK(merged.pieces()[0].c0 == ComplexField(1));

  PiecewiseFn diff = fn_combine(ind(0, 1, 2, 1), ind(1, 1, 3, 1), FnOp::Sub);
  REQUIRE(diff.pieces().size() == 2);
  CHECK(diff.pieces()[0].interval == Interval(FieldNum(0), FieldNum(1)));
  CHECK(diff.pieces()[0].c0 == ComplexField(1));
  CHECK(diff.pieces()[1].interval == Interval(FieldNum(2), FieldNum(3)));
  CHECK(diff.pieces()[1].c0 == ComplexField(-1));
}

TEST_CASE("translation") {
  PiecewiseFn f = ind(0, 1, 1, 1);
  PiecewiseFn g = translate(f, kRt2);
  REQUIRE(g.pieces().size() == 1);
  CHECK(g.pieces()[0].interval == Interval(kRt2, FieldNum(1) + kRt2));
  CHECK(translate(f, FieldNum(0)) == f);

  PiecewiseFn ramp({Piece{Interval(FieldNum(0), FieldNum(1)), ComplexField(0),
                          ComplexField(1)}});
  PiecewiseFn shifted = translate(ramp, FieldNum(1));
  REQUIRE(shifted.pieces().size() == 1);
  CHECK(shifted.pieces()[0].c0 == ComplexField(-1));
  CHECK(shifted.pieces()[0].c1 == ComplexField(1));
  CHECK(shifted.eval(FieldNum(Rational(3, 2))) == ComplexField(FieldNum(Rational(1, 2))));
}

TEST_CASE("periodization") {
  CirclePiecewiseFn p = project_fn(ind(0, 1, 1, 1), FieldNum(1));
  REQUIRE(p.pieces().size() == 1);
  CHECK(p.pieces()[0].c0 == ComplexField(1));
  CHECK(p.pieces()[0].interval == Interval(FieldNum(0), FieldNum(1)));

  p = project_fn(ind(0, 1, 2, 1), FieldNum(1));
  REQUIRE(p.pieces().size() == 1);
  CHECK(p.pieces()[0].c0 == ComplexField(2));

  PiecewiseFn trap = convolution_tiler(FieldNum(1), kRt2, ComplexField(1));
  p = project_fn(trap, FieldNum(1));
  REQUIRE(p.pieces().size() == 1);
  CHECK(p.pieces()[0].c0 == ComplexField(kRt2));
  CHECK(p.pieces()[0].c1 == ComplexField(0));
}

TEST_CASE("tiling verification") {
  PiecewiseFn trap = convolution_tiler(FieldNum(1), kRt2, ComplexField(1));
  TilingCertificate cert = verify_tiling(trap, FieldNum(1), kRt2,
                                         ComplexField(kRt2), ComplexField(1));
  CHECK(cert.status == TilingStatus::ExactTiling);

  cert = verify_tiling(PiecewiseFn(), FieldNum(1), kRt2, ComplexField(0),
                       ComplexField(0));
  CHECK(cert.status == TilingStatus::ExactTiling);

  cert = verify_tiling(ind(0, 1, 1, 1), FieldNum(1), kRt2, ComplexField(1),
                       ComplexField(1));
  CHECK(cert.status == TilingStatus::Failed);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->progression == 'b');
  CHECK(cert.witness->expected == ComplexField(1));
  CHECK((cert.witness->found == ComplexField(0) ||
         cert.witness->found == ComplexField(1)));
}

TEST_CASE("integrals and level consistency") {
  CHECK(integral(ind(0, 1, 1, 1)) == ComplexField(1));
  PiecewiseFn trap = convolution_tiler(FieldNum(1), kRt2, ComplexField(1));
  CHECK(integral(trap) == ComplexField(kRt2));
  PiecewiseFn ramp({Piece{Interval(FieldNum(0), FieldNum(2)), ComplexField(0),
                          ComplexField(1)}});
  CHECK(integral(ramp) == ComplexField(2));

  CHECK(check_level_consistency(trap, FieldNum(1), kRt2, ComplexField(kRt2),
                                ComplexField(1))
            .consistent);
  CHECK(check_level_consistency(PiecewiseFn(), FieldNum(1), kRt2, ComplexField(0),
                                ComplexField(0))
            .consistent);
  LevelConsistency lc = check_level_consistency(ind(0, 1, 1, 1), FieldNum(1),
                                                kRt2, ComplexField(1),
                                                ComplexField(1));
  CHECK_FALSE(lc.consistent);
  CHECK(lc.q_beta == ComplexField(kRt2));
  CHECK(lc.integral_f == ComplexField(1));
}

TEST_CASE("convolution trapezoid shape") {
  PiecewiseFn f = convolution_tiler(FieldNum(1), kRt2, ComplexField(1));
  REQUIRE(f.pieces().size() == 3);
  CHECK(f.pieces()[0].interval == Interval(FieldNum(0), FieldNum(1)));
  CHECK(f.pieces()[0].c0 == ComplexField(0));
  CHECK(f.pieces()[0].c1 == ComplexField(1));
  CHECK(f.pieces()[1].interval == Interval(FieldNum(1), kRt2));
  CHECK(f.pieces()[1].c0 == ComplexField(1));
  CHECK(f.pieces()[1].c1 == ComplexField(0));
  CHECK(f.pieces()[2].interval == Interval(kRt2, FieldNum(1) + kRt2));
  CHECK(f.pieces()[2].c0 == ComplexField(FieldNum(1) + kRt2));
  CHECK(f.pieces()[2].c1 == ComplexField(-1));

  PiecewiseFn tri = convolution_tiler(FieldNum(1), FieldNum(1), ComplexField(1));
  CHECK(tri.support().measure() == FieldNum(2));
  CHECK(tri.eval(FieldNum(1)) == ComplexField(1));
}

TEST_CASE("periodization is linear and preserves integrals") {
  for (int i = 0; i < 40; ++i) {
    PiecewiseFn f = random_fn(), g = random_fn();
    for (const FieldNum& L : {FieldNum(1), kRt2}) {
      CirclePiecewiseFn both = project_fn(fn_combine(f, g, FnOp::Add), L);
      CirclePiecewiseFn sum = project_fn(f, L) + project_fn(g, L);
      CHECK((both - sum).pieces().empty());
      CHECK(circle_integral(project_fn(f, L)) == integral(f));
    }
  }
}

TEST_CASE("no bounded tiling with non-matching integrals") {
  // Necessary condition: a tiling at levels (p, q) forces
  // integral(f) = p*alpha = q*beta. With p*alpha != q*beta no function can
  // pass, so the verifier must reject every corpus member.
  for (int i = 0; i < 60; ++i) {
    PiecewiseFn f = random_fn();
    TilingCertificate cert = verify_tiling(f, FieldNum(1), kRt2, ComplexField(1),
                                           ComplexField(1));
    CHECK(cert.status == TilingStatus::Failed);
  }
}
