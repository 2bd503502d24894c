#include "simultile/sets.hpp"

#include <algorithm>

namespace simultile {

Interval::Interval(FieldNum l, FieldNum h) : lo(std::move(l)), hi(std::move(h)) {
  if (!(lo < hi)) throw Error("interval requires lo < hi");
}

Ambient Ambient::circle(FieldNum L) {
  if (L.sign() <= 0) throw NonPositiveModulus();
  Ambient a;
  a.circumference = std::move(L);
  return a;
}

ElementarySet::ElementarySet(Ambient ambient, std::vector<Interval> parts)
    : ambient_(std::move(ambient)), parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& p : parts_) {
    if (!ambient_.is_line()) {
      if (p.lo.sign() < 0 || p.hi > *ambient_.circumference)
        throw Error("circle set part outside fundamental domain");
    }
    if (!merged.empty() && p.lo <= merged.back().hi) {
      if (p.lo < merged.back().hi) {
        // Overlap would mean the caller handed us a non-disjoint union;
        // merging keeps the set semantics.
      }
      merged.back().hi = max(merged.back().hi, p.hi);
    } else {
      merged.push_back(p);
    }
  }
  parts_ = std::move(merged);
}

ElementarySet ElementarySet::full_circle(const FieldNum& L) {
  return ElementarySet(Ambient::circle(L), {Interval(FieldNum(0), L)});
}

bool ElementarySet::contains(const FieldNum& x) const {
  for (const auto& p : parts_)
    if (p.contains(x)) return true;
  return false;
}

FieldNum ElementarySet::measure() const {
  FieldNum m(0);
  for (const auto& p : parts_) m += p.length();
  return m;
}

ElementarySet set_boolean(const ElementarySet& x, const ElementarySet& y, SetOp op) {
  if (!(x.ambient() == y.ambient())) throw AmbientMismatch();
  // Sweep over all endpoints; membership of each elementary cell is decided
  // by the boolean table.
  std::vector<FieldNum> cuts;
  for (const auto& p : x.parts()) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
  for (const auto& p : y.parts()) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const FieldNum& lo = cuts[i];
    const FieldNum& hi = cuts[i + 1];
    bool in_x = x.contains(lo);
    bool in_y = y.contains(lo);
    bool keep = false;
    switch (op) {
      case SetOp::Union: keep = in_x || in_y; break;
      case SetOp::Intersect: keep = in_x && in_y; break;
      case SetOp::Subtract: keep = in_x && !in_y; break;
    }
    if (keep) out.emplace_back(lo, hi);
  }
  return ElementarySet(x.ambient(), std::move(out));
}

ElementarySet project(const ElementarySet& x, const FieldNum& L) {
  if (!x.ambient().is_line()) throw Error("project expects a set on the line");
  if (L.sign() <= 0) throw NonPositiveModulus();
  std::vector<Interval> out;
  for (const auto& p : x.parts()) {
    if (p.length() >= L) return ElementarySet::full_circle(L);
    FieldNum lo = reduce_mod(p.lo, L).residue;
    FieldNum hi = lo + p.length();
    if (hi <= L) {
      out.emplace_back(lo, hi);
    } else {
      out.emplace_back(lo, L);
      out.emplace_back(FieldNum(0), hi - L);
    }
  }
  ElementarySet img(Ambient::circle(L), std::move(out));
  return img;
}

std::vector<Interval> decompose_below(const ElementarySet& x, const FieldNum& delta) {
  if (delta.sign() <= 0) throw NonPositiveDelta();
  std::vector<Interval> pieces;
  for (const auto& p : x.parts()) {
    Integer n = (p.length() / delta).floor() + 1;
    FieldNum step = p.length() / FieldNum(Rational(n));
    FieldNum lo = p.lo;
    for (Integer i = 0; i < n; ++i) {
      FieldNum hi = (i == n - 1) ? p.hi : lo + step;
      pieces.emplace_back(lo, hi);
      lo = hi;
    }
  }
  return pieces;
}

long fiber_count(const ElementarySet& x, const FieldNum& L, const FieldNum& a) {
  if (!x.ambient().is_line()) throw Error("fiber_count expects a set on the line");
  if (L.sign() <= 0) throw NonPositiveModulus();
  long count = 0;
  for (const auto& p : x.parts()) {
    // a + k*L in [lo, hi)  <=>  (lo - a)/L <= k < (hi - a)/L
    Integer k_lo = -((a - p.lo) / L).floor();  // ceil((lo - a)/L)
    Integer k_hi = ((p.hi - a) / L).floor();
    for (Integer k = k_lo; k <= k_hi; ++k) {
      FieldNum pt = a + FieldNum(Rational(k)) * L;
      if (p.contains(pt)) ++count;
    }
  }
  return count;
}

std::pair<ElementarySet, ElementarySet> split_by_measure(const ElementarySet& x,
                                                         const FieldNum& t) {
  if (t.sign() < 0 || t > x.measure()) throw Error("split_by_measure: bad target");
  std::vector<Interval> first, rest;
  FieldNum remaining = t;
  for (const auto& p : x.parts()) {
    if (remaining.sign() <= 0) {
      rest.push_back(p);
    } else if (p.length() <= remaining) {
      first.push_back(p);
      remaining -= p.length();
    } else {
      FieldNum cut = p.lo + remaining;
      first.emplace_back(p.lo, cut);
      rest.emplace_back(cut, p.hi);
      remaining = FieldNum(0);
    }
  }
  return {ElementarySet(x.ambient(), std::move(first)),
          ElementarySet(x.ambient(), std::move(rest))};
}

}  // namespace simultile
