#ifndef SIMULTILE_GRAPH_HPP
#define SIMULTILE_GRAPH_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "simultile/stepfn.hpp"

namespace simultile {

// One vertex cell: an arc of the circle on which the incidence structure
// of the induced graph is constant.
struct ArcCell {
  Interval arc;

  FieldNum measure() const { return arc.length(); }
};

// One edge cell: an interval of omega mapping bijectively onto its a-cell
// arc and onto its b-cell arc.
struct EdgeCell {
  Interval cell;
  ComplexField weight;
  int a_index = -1;
  int b_index = -1;

  FieldNum measure() const { return cell.length(); }
};

// Finite measured quotient of the bipartite graph induced by a union of
// intervals omega: vertices are arcs of T_alpha and T_beta, edges are the
// cells of omega, all carrying Lebesgue measure.
struct CellGraph {
  FieldNum alpha, beta;
  std::vector<ArcCell> a_cells, b_cells;
  std::vector<EdgeCell> edge_cells;
  bool weighted = false;

  FieldNum a_measure() const;
  FieldNum b_measure() const;
  FieldNum edge_measure() const;
  // Euler characteristic m(A) + m(B) - m(E).
  FieldNum eta() const;
  std::vector<int> degrees_a() const;
  std::vector<int> degrees_b() const;
  bool empty() const { return a_cells.empty() && b_cells.empty(); }
};

enum class GraphSide { A, B };

// Builds the cell graph of omega by breakpoint closure: cut omega at its
// endpoints (and the weight breakpoints), project the cuts to both
// circles, pull them back through omega, and iterate until stable. Throws
// ClosureDiverged when the closure does not stabilize within the caps.
CellGraph induce_cell_graph(const ElementarySet& omega, const FieldNum& alpha,
                            const FieldNum& beta,
                            const PiecewiseFn* weights = nullptr,
                            int closure_rounds_cap = 64);

// Exact measures of the degree-k strata: k -> (m(A_k), m(B_k)).
std::map<int, std::pair<FieldNum, FieldNum>> degree_profile(const CellGraph& g);

struct RemovalStepResult {
  CellGraph graph;
  FieldNum removed_leaves_measure;  // m(L), the degree-1 cells taken off `side`
  FieldNum jump_measure;            // m(J), the star cells dropped opposite
};

// Removes the degree-1 cells on `side` with their edges, then the cells on
// the other side left isolated by that (the stars, whose neighbors were
// all leaves).
RemovalStepResult leaves_removal_step(const CellGraph& g, GraphSide side);

struct RemovalStep {
  FieldNum eta_before;
  FieldNum removed_leaves_measure;
  FieldNum jump_measure;
  GraphSide side;
};

struct RemovalTrace {
  std::vector<RemovalStep> steps;
  FieldNum eta_final;
  FieldNum total_jump;
  CellGraph residual;
};

// Alternating leaves removal to a fixed point or exhaustion, A-side first
// by default.
RemovalTrace iterate_removal(const CellGraph& g, GraphSide first = GraphSide::A);

struct ComponentSummary {
  bool is_tree = false;
  int a_count = 0, b_count = 0, edge_count = 0;
  FieldNum a_measure, b_measure, edge_measure;
  // Sum of incident edge weights, when it is the same at every vertex of
  // the side within the component.
  std::optional<ComplexField> level_p, level_q;
  // a_count * p == b_count * q; only decided on trees with both levels
  // constant.
  bool double_count_ok = false;
};

std::vector<ComponentSummary> component_analysis(const CellGraph& g);

}  // namespace simultile

#endif
