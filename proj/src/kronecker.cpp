#include "simultile/kronecker.hpp"

#include <functional>

namespace simultile {

long find_shift(const Interval& U, const Interval& J, const FieldNum& step,
                const FieldNum& L, const ShiftSearchBudget& budget, long k_min) {
  if (!(U.length() < J.length()))
    throw Error("find_shift: U must be shorter than the target arc");
  if (!rationally_independent(step, L))
    throw Error("find_shift: step and modulus must be rationally independent");
  FieldNum len = U.length();
  long span = budget.max_k;
  for (int round = 0; round <= budget.doublings; ++round, span *= 2) {
    for (long k = k_min; k <= k_min + span; ++k) {
      FieldNum lo = reduce_mod(U.lo + FieldNum(Rational(k)) * step, L).residue;
      if (J.lo <= lo && lo + len <= J.hi) {
        // Re-verify the containment the way a caller would observe it.
        ElementarySet shifted(Ambient::line(), {Interval(U.lo + FieldNum(Rational(k)) * step,
                                                         U.hi + FieldNum(Rational(k)) * step)});
        ElementarySet image = project(shifted, L);
        ElementarySet target(Ambient::circle(L), {J});
        if (!set_boolean(image, target, SetOp::Subtract).empty())
          throw Error("find_shift: internal containment check failed");
        return k;
      }
    }
  }
  throw SearchExhausted("find_shift: budget exhausted");
}

std::vector<long> find_disjoint_system(int count, const FieldNum& gamma,
                                       const FieldNum& step, const FieldNum& L,
                                       const ShiftSearchBudget& budget) {
  if (count < 1) throw Error("find_disjoint_system: count must be positive");
  if (!(FieldNum(count) * gamma < L))
    throw Error("find_disjoint_system: count*gamma must be below the modulus");
  if (!rationally_independent(step, L))
    throw Error("find_disjoint_system: step and modulus must be rationally independent");

  // Greedy first fit can wall itself in (two early arcs may leave no slot
  // long enough for the rest), so the candidates are searched depth-first
  // with a doubling multiplier bound.
  long span = 64;
  for (int round = 0; round <= budget.doublings && span / 2 <= budget.max_k;
       ++round, span *= 2) {
    std::vector<std::pair<long, FieldNum>> candidates;
    for (long k = 0; k <= span; ++k) {
      FieldNum lo = reduce_mod(FieldNum(Rational(k)) * step, L).residue;
      if (lo + gamma > L) continue;  // wrapping arcs are skipped
      candidates.emplace_back(k, lo);
    }
    std::vector<int> chosen;
    auto disjoint_with_chosen = [&](const FieldNum& lo) {
      for (int idx : chosen) {
        const FieldNum& other = candidates[idx].second;
        if (lo < other + gamma && other < lo + gamma) return false;
      }
      return true;
    };
    std::function<bool(size_t)> dfs = [&](size_t from) {
      if (static_cast<int>(chosen.size()) == count) return true;
      for (size_t i = from; i < candidates.size(); ++i) {
        if (candidates.size() - i <
            static_cast<size_t>(count) - chosen.size())
          break;
        if (!disjoint_with_chosen(candidates[i].second)) continue;
        chosen.push_back(static_cast<int>(i));
        if (dfs(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (dfs(0)) {
      std::vector<long> multipliers;
      for (int idx : chosen) multipliers.push_back(candidates[idx].first);
      return multipliers;
    }
  }
  throw SearchExhausted("find_disjoint_system: budget exhausted");
}

}  // namespace simultile
