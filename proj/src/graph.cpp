#include "simultile/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace simultile {

namespace {

constexpr int kMaxCuts = 4096;

// All x = residue + k*L inside [part.lo, part.hi).
void congruent_in_part(const FieldNum& residue, const FieldNum& L,
                       const Interval& part, std::vector<FieldNum>& out) {
  Integer k0 = ((part.lo - residue) / L).floor();
  FieldNum x = residue + FieldNum(Rational(k0)) * L;
  while (x < part.lo) x += L;
  while (x < part.hi) {
    out.push_back(x);
    x += L;
  }
}

int find_arc(const std::vector<ArcCell>& cells, const FieldNum& lo) {
  for (int i = 0; i < static_cast<int>(cells.size()); ++i)
    if (cells[i].arc.lo == lo) return i;
  throw Error("cell graph closure produced an unmatched arc");
}

// Subdivides the arcs of the projected set at the given circle points.
std::vector<ArcCell> build_arc_cells(const ElementarySet& projected,
                                     const std::set<FieldNum>& circle_cuts) {
  std::vector<ArcCell> cells;
  for (const Interval& arc : projected.parts()) {
    std::vector<FieldNum> ends{arc.lo};
    for (const FieldNum& c : circle_cuts)
      if (arc.lo < c && c < arc.hi) ends.push_back(c);
    ends.push_back(arc.hi);
    for (size_t i = 0; i + 1 < ends.size(); ++i)
      cells.push_back(ArcCell{Interval(ends[i], ends[i + 1])});
  }
  return cells;
}

}  // namespace

FieldNum CellGraph::a_measure() const {
  FieldNum m(0);
  for (const ArcCell& c : a_cells) m += c.measure();
  return m;
}

FieldNum CellGraph::b_measure() const {
  FieldNum m(0);
  for (const ArcCell& c : b_cells) m += c.measure();
  return m;
}

FieldNum CellGraph::edge_measure() const {
  FieldNum m(0);
  for (const EdgeCell& e : edge_cells) m += e.measure();
  return m;
}

FieldNum CellGraph::eta() const { return a_measure() + b_measure() - edge_measure(); }

std::vector<int> CellGraph::degrees_a() const {
  std::vector<int> deg(a_cells.size(), 0);
  for (const EdgeCell& e : edge_cells) ++deg[e.a_index];
  return deg;
}

std::vector<int> CellGraph::degrees_b() const {
  std::vector<int> deg(b_cells.size(), 0);
  for (const EdgeCell& e : edge_cells) ++deg[e.b_index];
  return deg;
}

CellGraph induce_cell_graph(const ElementarySet& omega, const FieldNum& alpha,
                            const FieldNum& beta, const PiecewiseFn* weights,
                            int closure_rounds_cap) {
  if (!omega.ambient().is_line()) throw AmbientMismatch();
  if (alpha.sign() <= 0 || beta.sign() <= 0) throw NonPositiveModulus();

  CellGraph g;
  g.alpha = alpha;
  g.beta = beta;
  g.weighted = weights != nullptr;
  if (omega.empty()) return g;

  std::set<FieldNum> cuts;
  std::vector<FieldNum> worklist;
  auto add_cut = [&](const FieldNum& x) {
    if (cuts.insert(x).second) worklist.push_back(x);
  };

  for (const Interval& part : omega.parts()) {
    add_cut(part.lo);
    add_cut(part.hi);
    // Multiples of the moduli are chart breakpoints of the circle
    // coordinates; cells must not straddle them.
    std::vector<FieldNum> mult;
    congruent_in_part(FieldNum(0), alpha, part, mult);
    congruent_in_part(FieldNum(0), beta, part, mult);
    for (const FieldNum& x : mult) add_cut(x);
  }
  if (weights)
    for (const Piece& pc : weights->pieces()) {
      if (omega.contains(pc.interval.lo)) add_cut(pc.interval.lo);
      if (omega.contains(pc.interval.hi)) add_cut(pc.interval.hi);
    }

  int rounds = 0;
  while (!worklist.empty()) {
    if (++rounds > closure_rounds_cap)
      throw ClosureDiverged("breakpoint closure exceeded the round cap");
    std::vector<FieldNum> batch;
    batch.swap(worklist);
    std::vector<FieldNum> found;
    for (const FieldNum& x : batch) {
      FieldNum ra = reduce_mod(x, alpha).residue;
      FieldNum rb = reduce_mod(x, beta).residue;
      for (const Interval& part : omega.parts()) {
        congruent_in_part(ra, alpha, part, found);
        congruent_in_part(rb, beta, part, found);
      }
    }
    for (const FieldNum& x : found) add_cut(x);
    if (static_cast<int>(cuts.size()) > kMaxCuts)
      throw ClosureDiverged("breakpoint closure exceeded the size cap");
  }

  std::set<FieldNum> res_a, res_b;
  for (const FieldNum& x : cuts) {
    res_a.insert(reduce_mod(x, alpha).residue);
    res_b.insert(reduce_mod(x, beta).residue);
  }
  g.a_cells = build_arc_cells(project(omega, alpha), res_a);
  g.b_cells = build_arc_cells(project(omega, beta), res_b);

  for (const Interval& part : omega.parts()) {
    std::vector<FieldNum> ends;
    for (const FieldNum& c : cuts)
      if (part.lo <= c && c <= part.hi) ends.push_back(c);
    for (size_t i = 0; i + 1 < ends.size(); ++i) {
      Interval cell(ends[i], ends[i + 1]);
      int ai = find_arc(g.a_cells, reduce_mod(cell.lo, alpha).residue);
      int bi = find_arc(g.b_cells, reduce_mod(cell.lo, beta).residue);
      if (g.a_cells[ai].measure() != cell.length() ||
          g.b_cells[bi].measure() != cell.length())
        throw Error("cell graph closure produced mismatched cell lengths");
      ComplexField w(0);
      if (weights)
        for (const Piece& pc : weights->pieces())
          if (pc.interval.lo <= cell.lo && cell.hi <= pc.interval.hi) {
            if (pc.c1 != ComplexField(0)) throw NonConstantWeightOnCell();
            w = pc.c0;
            break;
          }
      g.edge_cells.push_back(EdgeCell{cell, w, ai, bi});
    }
  }
  return g;
}

std::map<int, std::pair<FieldNum, FieldNum>> degree_profile(const CellGraph& g) {
  std::map<int, std::pair<FieldNum, FieldNum>> out;
  std::vector<int> da = g.degrees_a(), db = g.degrees_b();
  for (size_t i = 0; i < da.size(); ++i) {
    auto& slot = out.emplace(da[i], std::make_pair(FieldNum(0), FieldNum(0))).first->second;
    slot.first += g.a_cells[i].measure();
  }
  for (size_t j = 0; j < db.size(); ++j) {
    auto& slot = out.emplace(db[j], std::make_pair(FieldNum(0), FieldNum(0))).first->second;
    slot.second += g.b_cells[j].measure();
  }
  return out;
}

RemovalStepResult leaves_removal_step(const CellGraph& g, GraphSide side) {
  std::vector<int> deg_side = side == GraphSide::A ? g.degrees_a() : g.degrees_b();
  size_t n_side = side == GraphSide::A ? g.a_cells.size() : g.b_cells.size();
  size_t n_other = side == GraphSide::A ? g.b_cells.size() : g.a_cells.size();

  std::vector<char> leaf(n_side, 0);
  for (size_t i = 0; i < n_side; ++i) leaf[i] = deg_side[i] == 1;

  // A cell opposite the removal side is a star when every incident edge
  // leads to a leaf; it ends up isolated and is dropped with them.
  std::vector<char> star(n_other, 1);
  std::vector<char> touched(n_other, 0);
  for (const EdgeCell& e : g.edge_cells) {
    int s = side == GraphSide::A ? e.a_index : e.b_index;
    int o = side == GraphSide::A ? e.b_index : e.a_index;
    touched[o] = 1;
    if (!leaf[s]) star[o] = 0;
  }
  for (size_t j = 0; j < n_other; ++j)
    if (!touched[j]) star[j] = 0;

  RemovalStepResult out;
  out.removed_leaves_measure = FieldNum(0);
  out.jump_measure = FieldNum(0);
  out.graph.alpha = g.alpha;
  out.graph.beta = g.beta;
  out.graph.weighted = g.weighted;

  const std::vector<ArcCell>& side_cells = side == GraphSide::A ? g.a_cells : g.b_cells;
  const std::vector<ArcCell>& other_cells = side == GraphSide::A ? g.b_cells : g.a_cells;
  std::vector<int> side_map(n_side, -1), other_map(n_other, -1);
  std::vector<ArcCell> kept_side, kept_other;
  for (size_t i = 0; i < n_side; ++i) {
    if (leaf[i]) {
      out.removed_leaves_measure += side_cells[i].measure();
    } else {
      side_map[i] = static_cast<int>(kept_side.size());
      kept_side.push_back(side_cells[i]);
    }
  }
  for (size_t j = 0; j < n_other; ++j) {
    if (star[j]) {
      out.jump_measure += other_cells[j].measure();
    } else {
      other_map[j] = static_cast<int>(kept_other.size());
      kept_other.push_back(other_cells[j]);
    }
  }
  if (side == GraphSide::A) {
    out.graph.a_cells = std::move(kept_side);
    out.graph.b_cells = std::move(kept_other);
  } else {
    out.graph.b_cells = std::move(kept_side);
    out.graph.a_cells = std::move(kept_other);
  }
  for (const EdgeCell& e : g.edge_cells) {
    int s = side == GraphSide::A ? e.a_index : e.b_index;
    if (leaf[s]) continue;
    EdgeCell kept = e;
    if (side == GraphSide::A) {
      kept.a_index = side_map[e.a_index];
      kept.b_index = other_map[e.b_index];
    } else {
      kept.b_index = side_map[e.b_index];
      kept.a_index = other_map[e.a_index];
    }
    out.graph.edge_cells.push_back(kept);
  }
  return out;
}

RemovalTrace iterate_removal(const CellGraph& g, GraphSide first) {
  RemovalTrace trace;
  trace.total_jump = FieldNum(0);
  CellGraph cur = g;
  GraphSide side = first;
  int idle = 0;
  while (!cur.empty() && idle < 2) {
    RemovalStepResult step = leaves_removal_step(cur, side);
    bool productive = step.removed_leaves_measure.sign() > 0 ||
                      step.jump_measure.sign() > 0 ||
                      step.graph.edge_cells.size() != cur.edge_cells.size();
    if (productive) {
      trace.steps.push_back(RemovalStep{cur.eta(), step.removed_leaves_measure,
                                        step.jump_measure, side});
      trace.total_jump += step.jump_measure;
      cur = std::move(step.graph);
      idle = 0;
    } else {
      ++idle;
    }
    side = side == GraphSide::A ? GraphSide::B : GraphSide::A;
  }
  trace.eta_final = cur.eta();
  trace.residual = std::move(cur);
  return trace;
}

std::vector<ComponentSummary> component_analysis(const CellGraph& g) {
  size_t na = g.a_cells.size(), nb = g.b_cells.size();
  std::vector<int> parent(na + nb);
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const EdgeCell& e : g.edge_cells)
    parent[find(e.a_index)] = find(static_cast<int>(na) + e.b_index);

  std::vector<ComplexField> wa(na), wb(nb);
  for (const EdgeCell& e : g.edge_cells) {
    wa[e.a_index] += e.weight;
    wb[e.b_index] += e.weight;
  }

  std::map<int, ComponentSummary> comps;
  std::map<int, std::pair<bool, bool>> level_bad;  // (p varies, q varies)
  for (size_t i = 0; i < na; ++i) {
    ComponentSummary& c = comps[find(static_cast<int>(i))];
    if (c.a_count == 0 && !c.level_p) c.level_p = wa[i];
    else if (c.level_p && *c.level_p != wa[i]) c.level_p.reset();
    ++c.a_count;
    c.a_measure += g.a_cells[i].measure();
  }
  for (size_t j = 0; j < nb; ++j) {
    ComponentSummary& c = comps[find(static_cast<int>(na + j))];
    if (c.b_count == 0 && !c.level_q) c.level_q = wb[j];
    else if (c.level_q && *c.level_q != wb[j]) c.level_q.reset();
    ++c.b_count;
    c.b_measure += g.b_cells[j].measure();
  }
  for (const EdgeCell& e : g.edge_cells) {
    ComponentSummary& c = comps[find(e.a_index)];
    ++c.edge_count;
    c.edge_measure += e.measure();
  }

  std::vector<ComponentSummary> out;
  for (auto& [root, c] : comps) {
    c.is_tree = c.edge_count == c.a_count + c.b_count - 1;
    c.double_count_ok =
        c.is_tree && c.level_p && c.level_q &&
        ComplexField(c.a_count) * *c.level_p == ComplexField(c.b_count) * *c.level_q;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace simultile
