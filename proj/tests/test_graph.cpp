#include <random>

#include "doctest.h"
#include "simultile/construct.hpp"
#include "simultile/graph.hpp"

using namespace simultile;

namespace {

const FieldNum kRt2 = FieldNum::sqrt_d();
const FieldNum kOne = FieldNum(1);

FieldNum total_degree_measure(const CellGraph& g, GraphSide side) {
  FieldNum sum(0);
  for (const EdgeCell& e : g.edge_cells) sum += e.measure();
  (void)side;
  return sum;
}

}  // namespace

TEST_CASE("a single short interval is a perfect matching") {
  ElementarySet omega(Ambient::line(),
                      {Interval(FieldNum(0), FieldNum(Rational(1, 10)))});
  CellGraph g = induce_cell_graph(omega, kOne, kRt2);
  CHECK(g.a_cells.size() == 1);
  CHECK(g.b_cells.size() == 1);
  CHECK(g.edge_cells.size() == 1);
  CHECK(g.eta() == FieldNum(Rational(1, 10)));
  CHECK(g.degrees_a() == std::vector<int>{1});
  CHECK(g.degrees_b() == std::vector<int>{1});

  RemovalTrace t = iterate_removal(g);
  CHECK(t.residual.empty());
  CHECK(t.total_jump == FieldNum(Rational(1, 10)));
  CHECK(t.eta_final == FieldNum(0));
}

TEST_CASE("interval-system support graph") {
  FnTiling fn = fn_tiler(2, 3, FieldNum(Rational(3, 10)), kOne, kRt2,
                         ShiftSearchBudget{});
  CellGraph g = induce_cell_graph(fn.f.support(), kOne, kRt2, &fn.f);
  CHECK(g.a_cells.size() == 3);
  CHECK(g.b_cells.size() == 2);
  CHECK(g.edge_cells.size() == 4);
  CHECK(g.a_measure() == FieldNum(Rational(9, 10)));
  CHECK(g.b_measure() == FieldNum(Rational(6, 10)));
  CHECK(g.edge_measure() == FieldNum(Rational(12, 10)));
  CHECK(g.eta() == FieldNum(Rational(3, 10)));
  CHECK(g.weighted);

  std::vector<ComponentSummary> comps = component_analysis(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].is_tree);
  CHECK(comps[0].level_p == ComplexField(2));
  CHECK(comps[0].level_q == ComplexField(3));
  CHECK(comps[0].double_count_ok);

  RemovalTrace t = iterate_removal(g);
  CHECK(t.residual.empty());
  CHECK(t.total_jump == FieldNum(Rational(3, 10)));
  CHECK(t.total_jump == g.a_measure() + g.b_measure() - g.edge_measure());
}

TEST_CASE("two arcs sharing a b-cell form a path") {
  ElementarySet omega(
      Ambient::line(),
      {Interval(FieldNum(0), FieldNum(Rational(1, 10))),
       Interval(kRt2, kRt2 + FieldNum(Rational(1, 10)))});
  CellGraph g = induce_cell_graph(omega, kOne, kRt2);
  // The two parts differ by sqrt(2), so they share their b-arc but
  // project to distinct a-arcs: a path a - b - a.
  CHECK(g.a_cells.size() == 2);
  CHECK(g.b_cells.size() == 1);
  CHECK(g.edge_cells.size() == 2);
  CHECK(g.degrees_b() == std::vector<int>{2});
  CHECK(g.eta() == FieldNum(Rational(1, 10)));

  RemovalTrace t = iterate_removal(g, GraphSide::A);
  REQUIRE(!t.steps.empty());
  // Both a-cells are leaves; the b-cell is a star whose whole
  // neighborhood disappears at once.
  CHECK(t.steps[0].removed_leaves_measure == FieldNum(Rational(2, 10)));
  CHECK(t.steps[0].jump_measure == FieldNum(Rational(1, 10)));
  CHECK(t.residual.empty());
  CHECK(t.total_jump == FieldNum(Rational(1, 10)));

  std::vector<ComponentSummary> comps = component_analysis(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].is_tree);
  CHECK(comps[0].a_count == 2);
  CHECK(comps[0].b_count == 1);
}

TEST_CASE("a cycle survives leaves removal") {
  // Full 2x2 pattern: arcs {0, gamma+} on both circles, all four edges.
  FieldNum gamma(Rational(1, 10));
  FnIntervalSystem sys = fn_interval_system(2, 2, gamma, kOne, kRt2,
                                            ShiftSearchBudget{});
  std::vector<Interval> parts;
  for (const auto& row : sys.L)
    for (const Interval& iv : row) parts.push_back(iv);
  ElementarySet omega(Ambient::line(), parts);
  CellGraph g = induce_cell_graph(omega, kOne, kRt2);
  CHECK(g.a_cells.size() == 2);
  CHECK(g.b_cells.size() == 2);
  CHECK(g.edge_cells.size() == 4);
  CHECK(g.eta() == FieldNum(0));
  CHECK(g.degrees_a() == std::vector<int>{2, 2});

  RemovalTrace t = iterate_removal(g);
  CHECK(t.steps.empty());
  CHECK(!t.residual.empty());
  CHECK(t.total_jump == FieldNum(0));

  std::vector<ComponentSummary> comps = component_analysis(g);
  REQUIRE(comps.size() == 1);
  CHECK(!comps[0].is_tree);
  CHECK(comps[0].edge_count == comps[0].a_count + comps[0].b_count);
}

TEST_CASE("closure of a long interval stabilizes") {
  // [0, 2) wraps fully around T_1 twice and T_sqrt(2) once and a bit; the
  // breakpoint closure still reaches a finite cut set.
  ElementarySet omega(Ambient::line(), {Interval(FieldNum(0), FieldNum(2))});
  CellGraph g = induce_cell_graph(omega, kOne, kRt2);
  CHECK(!g.empty());
  CHECK(g.a_measure() == kOne);
  CHECK(g.b_measure() == kRt2);
  CHECK(g.edge_measure() == FieldNum(2));
  FieldNum recount(0);
  for (const EdgeCell& e : g.edge_cells) recount += e.measure();
  CHECK(recount == FieldNum(2));
  // Every point of T_1 is hit exactly twice.
  std::vector<int> da = g.degrees_a();
  for (size_t i = 0; i < da.size(); ++i) CHECK(da[i] == 2);
}

TEST_CASE("a genuinely divergent closure is reported") {
  ElementarySet omega(Ambient::line(), {Interval(FieldNum(0), FieldNum(3))});
  CHECK_THROWS_AS(induce_cell_graph(omega, kOne, kRt2), ClosureDiverged);
}

TEST_CASE("weights must be constant per cell") {
  std::vector<Piece> ramp{Piece{Interval(FieldNum(0), FieldNum(Rational(1, 10))),
                                ComplexField(0), ComplexField(1)}};
  PiecewiseFn w{std::move(ramp)};
  CHECK_THROWS_AS(induce_cell_graph(w.support(), kOne, kRt2, &w),
                  NonConstantWeightOnCell);
}

TEST_CASE("degree strata measures") {
  ElementarySet omega(Ambient::line(), {Interval(FieldNum(0), FieldNum(2))});
  CellGraph g = induce_cell_graph(omega, kOne, kRt2);
  auto prof = degree_profile(g);
  REQUIRE(prof.count(2) == 1);
  CHECK(prof.at(2).first == kOne);  // all of T_1 has degree 2
  FieldNum b_total(0);
  for (const auto& [k, mm] : prof) b_total += mm.second;
  CHECK(b_total == kRt2);
}

TEST_CASE("removal bookkeeping on random interval unions") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Interval> parts;
    FieldNum cursor(Rational(static_cast<long>(rng() % 5), 7));
    int k = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < k; ++j) {
      cursor += FieldNum(Rational(static_cast<long>(1 + rng() % 4), 13)) +
                (rng() % 2 ? kRt2 / FieldNum(9) : FieldNum(0));
      FieldNum hi = cursor + FieldNum(Rational(static_cast<long>(1 + rng() % 3), 17));
      parts.push_back(Interval(cursor, hi));
      cursor = hi;
    }
    ElementarySet omega(Ambient::line(), parts);
    CellGraph g = induce_cell_graph(omega, kOne, kRt2);
    CHECK(g.edge_measure() == omega.measure());
    CHECK(total_degree_measure(g, GraphSide::A) == omega.measure());

    RemovalTrace t = iterate_removal(g);
    FieldNum accounted = t.total_jump;
    // Euler bookkeeping: each step lowers eta by exactly the jump measure.
    FieldNum eta = g.eta();
    for (const RemovalStep& s : t.steps) {
      CHECK(s.eta_before == eta);
      eta -= s.jump_measure;
    }
    CHECK(eta == t.eta_final);
    CHECK((t.eta_final == t.residual.eta() ||
           (t.residual.empty() && t.eta_final == FieldNum(0))));
    if (t.residual.empty())
      CHECK(accounted == g.a_measure() + g.b_measure() - g.edge_measure());
  }
}
