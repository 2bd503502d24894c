#include "doctest.h"
#include "simultile/kronecker.hpp"

using namespace simultile;

namespace {
const FieldNum kRt2 = FieldNum::sqrt_d();
const ShiftSearchBudget kBudget;
}  // namespace

TEST_CASE("single shift placement") {
  // frac(sqrt(2)) = sqrt(2) - 1 lies in (2/5, 9/20), so k = 1 works.
  Interval U(FieldNum(0), FieldNum(Rational(1, 20)));
  Interval J(FieldNum(Rational(2, 5)), FieldNum(Rational(1, 2)));
  CHECK(find_shift(U, J, kRt2, FieldNum(1), kBudget, 1) == 1);

  Interval full(FieldNum(0), FieldNum(1));
  CHECK(find_shift(U, full, kRt2, FieldNum(1), kBudget, 0) == 0);

  Interval too_long(FieldNum(0), FieldNum(Rational(1, 5)));
  CHECK_THROWS_AS(find_shift(too_long, J, kRt2, FieldNum(1), kBudget, 0), Error);
}

TEST_CASE("shift respects the lower threshold") {
  Interval U(FieldNum(0), FieldNum(Rational(1, 20)));
  Interval full(FieldNum(0), FieldNum(1));
  CHECK(find_shift(U, full, kRt2, FieldNum(1), kBudget, 17) == 17);
}

TEST_CASE("disjoint arc systems") {
  CHECK(find_disjoint_system(1, FieldNum(Rational(1, 10)), kRt2, FieldNum(1),
                             kBudget) == std::vector<long>{0});

  auto check_system = [](int count, const FieldNum& gamma, const FieldNum& step,
                         const FieldNum& L) {
    auto ms = find_disjoint_system(count, gamma, step, L, kBudget);
    REQUIRE(static_cast<int>(ms.size()) == count);
    ElementarySet claimed(Ambient::circle(L));
    for (long m : ms) {
      FieldNum lo = reduce_mod(FieldNum(Rational(m)) * step, L).residue;
      CHECK(lo + gamma <= L);
      ElementarySet arc(Ambient::circle(L), {Interval(lo, lo + gamma)});
      CHECK(set_boolean(arc, claimed, SetOp::Intersect).empty());
      claimed = set_boolean(claimed, arc, SetOp::Union);
    }
  };
  check_system(3, FieldNum(Rational(1, 5)), kRt2, FieldNum(1));
  // Total arc length 9/10 of the circle; greedy first fit dead-ends here,
  // the search must backtrack.
  check_system(3, FieldNum(Rational(3, 10)), kRt2, FieldNum(1));
  check_system(2, FieldNum(Rational(1, 8)), FieldNum(1), kRt2);

  CHECK_THROWS_AS(find_disjoint_system(2, FieldNum(Rational(3, 5)), kRt2,
                                       FieldNum(1), kBudget),
                  Error);
}

TEST_CASE("shrinking arcs still succeed within modest multipliers") {
  Interval U(FieldNum(0), FieldNum(Rational(1, 64)));
  for (int denom : {4, 8, 16}) {
    Interval J(FieldNum(Rational(1, 3)),
               FieldNum(Rational(1, 3)) + FieldNum(Rational(1, denom)));
    long k = find_shift(U, J, kRt2, FieldNum(1), kBudget, 0);
    CHECK(k <= 64 * denom);  // three-distance heuristic, measured bound
  }
}
