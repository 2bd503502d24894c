#include "doctest.h"
#include "simultile/construct.hpp"

using namespace simultile;

namespace {

const FieldNum kRt2 = FieldNum::sqrt_d();
const FieldNum kOne = FieldNum(1);
const ShiftSearchBudget kBudget;

bool same_on_circle(const CirclePiecewiseFn& a, const CirclePiecewiseFn& b) {
  return (a - b).pieces().empty();
}

CirclePiecewiseFn const_on(const FieldNum& modulus, const ElementarySet& dom,
                           const ComplexField& v) {
  std::vector<Piece> pieces;
  for (const Interval& p : dom.parts())
    pieces.push_back(Piece{p, v, ComplexField(0)});
  return CirclePiecewiseFn(modulus, std::move(pieces));
}

}  // namespace

TEST_CASE("injective placement of a full circle") {
  ElementarySet A = ElementarySet::full_circle(kOne);
  Interval J(FieldNum(Rational(1, 5)),
             FieldNum(Rational(1, 5)) + FieldNum(Rational(1, 10)));
  PlacementResult r = place_injective(A, J, kOne, kRt2, FieldNum(0), kBudget);
  CHECK(r.U.measure() == kOne);
  CHECK(r.image_a == A);
  CHECK(set_boolean(r.image_b, ElementarySet(Ambient::circle(kRt2), {J}),
                    SetOp::Subtract)
            .empty());
  // An injective lift loses no measure under projection.
  CHECK(r.image_a.measure() == r.U.measure());
  for (const Interval& part : r.U.parts()) CHECK(part.lo > FieldNum(0));
}

TEST_CASE("single short arc lifts as one interval") {
  ElementarySet A(Ambient::circle(kOne),
                  {Interval(FieldNum(Rational(1, 4)), FieldNum(Rational(3, 10)))});
  Interval J(FieldNum(0), FieldNum(Rational(1, 4)));
  PlacementResult r = place_injective(A, J, kOne, kRt2, FieldNum(0), kBudget);
  CHECK(r.U.parts().size() == 1);
  CHECK(r.image_a == A);
}

TEST_CASE("piece count grows as the target arc shrinks") {
  ElementarySet A = ElementarySet::full_circle(kOne);
  size_t prev = 0;
  for (int denom : {4, 8, 16}) {
    Interval J(FieldNum(0), FieldNum(Rational(1, denom)));
    PlacementResult r = place_injective(A, J, kOne, kRt2, FieldNum(0), kBudget);
    CHECK(r.image_a == A);
    CHECK(r.U.measure() == kOne);
    CHECK(r.U.parts().size() >= prev);
    CHECK(r.U.parts().size() >= static_cast<size_t>(denom));
    prev = r.U.parts().size();
  }
}

TEST_CASE("value transport through the lift") {
  ElementarySet A(Ambient::circle(kOne),
                  {Interval(FieldNum(0), FieldNum(Rational(1, 2)))});
  Interval J(FieldNum(0), FieldNum(Rational(1, 5)));

  CirclePiecewiseFn phi = const_on(kOne, A, ComplexField(5));
  PlacementResult r = place_with_values(A, phi, J, kOne, kRt2, FieldNum(0), kBudget);
  REQUIRE(r.f.has_value());
  CHECK(same_on_circle(project_fn(*r.f, kOne), phi));

  CirclePiecewiseFn two_step(
      kOne, {Piece{Interval(FieldNum(0), FieldNum(Rational(1, 4))), ComplexField(2),
                   ComplexField(0)},
             Piece{Interval(FieldNum(Rational(1, 4)), FieldNum(Rational(1, 2))),
                   ComplexField(FieldNum(0), FieldNum(3)), ComplexField(0)}});
  r = place_with_values(A, two_step, J, kOne, kRt2, FieldNum(0), kBudget);
  CHECK(same_on_circle(project_fn(*r.f, kOne), two_step));

  r = place_with_values(A, CirclePiecewiseFn(kOne, {}), J, kOne, kRt2, FieldNum(0),
                        kBudget);
  CHECK(r.f->is_zero());
  CHECK(r.U.measure() == A.measure());
}

TEST_CASE("alternating scheme, one round") {
  TruncatedTiling t = thm_a31_truncated(ComplexField(3), ComplexField(7), 1, kOne,
                                        kRt2, kBudget);
  CHECK(t.covered_a.measure() == FieldNum(Rational(1, 2)));
  CHECK(t.covered_b.measure() == kRt2 / FieldNum(2));
  CHECK(t.certificate.status == TilingStatus::PartialTiling);
  CHECK(t.certificate.ok());
}

TEST_CASE("alternating scheme, zero rounds") {
  TruncatedTiling t = thm_a31_truncated(ComplexField(1), ComplexField(1), 0, kOne,
                                        kRt2, kBudget);
  CHECK(t.f.is_zero());
  CHECK(t.covered_a.empty());
  CHECK(t.covered_b.empty());
}

TEST_CASE("geometric halving leaves an exact residual") {
  for (int rounds : {1, 2, 3, 4}) {
    TruncatedTiling t = thm_a31_truncated(ComplexField(1), ComplexField(1), rounds,
                                          kOne, kRt2, kBudget);
    FieldNum scale(Rational((1L << rounds) - 1, 1L << rounds));
    CHECK(t.covered_a.measure() == scale);
    CHECK(t.covered_b.measure() == scale * kRt2);
    CHECK(t.support_measure == scale * (kOne + kRt2));
    CHECK(t.support_measure <= kOne + kRt2);
    CHECK(t.certificate.ok());
  }
}

TEST_CASE("non-proportional levels certify on covered domains") {
  TruncatedTiling t = thm_a31_truncated(ComplexField(1), ComplexField(1), 3, kOne,
                                        kRt2, kBudget);
  // (p, q) = (1, 1) is not proportional to (beta, alpha): no bounded
  // function can tile both full circles, but the truncation certifies its
  // covered parts.
  CHECK(t.certificate.ok());
  CHECK(t.covered_a.measure() < kOne);

  TruncatedTiling z = thm_a31_truncated(ComplexField(0), ComplexField(0), 2, kOne,
                                        kRt2, kBudget);
  CHECK(z.certificate.ok());
  CHECK(z.f.is_zero());
}

TEST_CASE("interval system properties") {
  FnIntervalSystem sys =
      fn_interval_system(2, 3, FieldNum(Rational(3, 10)), kOne, kRt2, kBudget);
  CHECK(sys.I.size() == 3);
  CHECK(sys.J.size() == 2);
  ElementarySet all(Ambient::line());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(sys.L[i][j].length() == FieldNum(Rational(3, 10)));
      ElementarySet one(Ambient::line(), {sys.L[i][j]});
      CHECK(project(one, kOne) ==
            ElementarySet(Ambient::circle(kOne), {sys.I[j]}));
      CHECK(project(one, kRt2) ==
            ElementarySet(Ambient::circle(kRt2), {sys.J[i]}));
      all = set_boolean(all, one, SetOp::Union);
    }
  CHECK(all.measure() == FieldNum(6) * FieldNum(Rational(3, 10)));

  FnIntervalSystem tiny =
      fn_interval_system(1, 1, FieldNum(Rational(1, 4)), kOne, kRt2, kBudget);
  CHECK(tiny.L[0][0] == Interval(FieldNum(0), FieldNum(Rational(1, 4))));

  CHECK_THROWS_AS(fn_interval_system(2, 3, FieldNum(Rational(1, 3)), kOne, kRt2,
                                     kBudget),
                  GammaTooLarge);
}

TEST_CASE("minimal interval-system tiler") {
  FnTiling t = fn_tiler(2, 3, FieldNum(Rational(3, 10)), kOne, kRt2, kBudget);
  CHECK(t.f.support().measure() == FieldNum(Rational(12, 10)));
  CHECK(t.A.measure() == FieldNum(Rational(9, 10)));
  CHECK(t.B.measure() == FieldNum(Rational(6, 10)));
  CHECK(t.certificate.ok());
  CHECK(t.certificate.level_p == ComplexField(2));
  CHECK(t.certificate.level_q == ComplexField(3));

  FnTiling unit = fn_tiler(1, 1, FieldNum(Rational(1, 4)), kOne, kRt2, kBudget);
  REQUIRE(unit.f.pieces().size() == 1);
  CHECK(unit.f.pieces()[0].c0 == ComplexField(1));

  CHECK_THROWS_AS(fn_tiler(2, 4, FieldNum(Rational(1, 10)), kOne, kRt2, kBudget),
                  NotCoprime);
}

TEST_CASE("compact truncation brackets the sharp bound") {
  TruncatedTiling t =
      thm_a25_truncated(2, 3, FieldNum(Rational(1, 20)), 4, kOne, kRt2, kBudget);
  CHECK(t.certificate.ok());
  FieldNum sharp = kOne + kRt2 - FieldNum(Rational(1, 3));
  CHECK(t.support_measure < sharp + FieldNum(Rational(1, 20)));
  CHECK(t.support_measure > sharp - (kOne + kRt2) / FieldNum(16));

  CHECK_THROWS_AS(
      thm_a25_truncated(2, 3, FieldNum(Rational(1, 2)), 2, kOne, kRt2, kBudget),
      Error);
}

TEST_CASE("one-sided truncation keeps the second projection silent") {
  TruncatedTiling t =
      thm_a26_truncated(FieldNum(Rational(1, 10)), 3, kOne, kRt2, kBudget);
  CHECK(t.certificate.ok());
  CHECK(t.support_measure <= kOne + FieldNum(Rational(1, 10)));
  ElementarySet outside = set_boolean(
      ElementarySet::full_circle(kRt2),
      ElementarySet(Ambient::circle(kRt2),
                    {Interval(FieldNum(0), FieldNum(Rational(1, 10)))}),
      SetOp::Subtract);
  CirclePiecewiseFn proj = project_fn(t.f, kRt2);
  CHECK(proj.restricted_to(outside).pieces().empty());

  TruncatedTiling empty =
      thm_a26_truncated(FieldNum(Rational(1, 10)), 0, kOne, kRt2, kBudget);
  CHECK(empty.f.is_zero());
}

TEST_CASE("constructions re-verify independently") {
  FnTiling t = fn_tiler(3, 4, FieldNum(Rational(1, 8)), kOne, kRt2, kBudget);
  TilingCertificate again = verify_tiling(t.f, kOne, kRt2, ComplexField(3),
                                          ComplexField(4), t.A, t.B);
  CHECK(again.ok());
  CHECK(again.verified_domain_a == t.A);
  CHECK(again.verified_domain_b == t.B);
}
