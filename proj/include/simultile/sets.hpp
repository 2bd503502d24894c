#ifndef SIMULTILE_SETS_HPP
#define SIMULTILE_SETS_HPP

#include <optional>
#include <vector>

#include "simultile/field.hpp"

namespace simultile {

// Half-open interval [lo, hi), lo < hi.
struct Interval {
  FieldNum lo, hi;

  Interval(FieldNum lo, FieldNum hi);
  FieldNum length() const { return hi - lo; }
  bool contains(const FieldNum& x) const { return x >= lo && x < hi; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// The ambient space of an elementary set: the line, or a circle T_L of
// circumference L (fundamental domain [0, L)).
struct Ambient {
  std::optional<FieldNum> circumference;  // empty = line

  static Ambient line() { return {}; }
  static Ambient circle(FieldNum L);
  bool is_line() const { return !circumference.has_value(); }
  friend bool operator==(const Ambient& a, const Ambient& b) {
    if (a.is_line() != b.is_line()) return false;
    return a.is_line() || *a.circumference == *b.circumference;
  }
};

enum class SetOp { Union, Intersect, Subtract };

// Finite disjoint union of half-open intervals, kept sorted and merged.
class ElementarySet {
 public:
  ElementarySet() : ambient_(Ambient::line()) {}
  explicit ElementarySet(Ambient ambient) : ambient_(std::move(ambient)) {}
  ElementarySet(Ambient ambient, std::vector<Interval> parts);

  static ElementarySet full_circle(const FieldNum& L);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const FieldNum& x) const;
  FieldNum measure() const;

  friend bool operator==(const ElementarySet& a, const ElementarySet& b) {
    return a.ambient_ == b.ambient_ && a.parts_ == b.parts_;
  }

 private:
  Ambient ambient_;
  std::vector<Interval> parts_;
};

ElementarySet set_boolean(const ElementarySet& x, const ElementarySet& y, SetOp op);

// Wrap a bounded set on the line around the circle T_L. A part of length
// >= L covers the full circle.
ElementarySet project(const ElementarySet& x, const FieldNum& L);

// Split x into pieces of equal length per part, each of length < delta,
// emitted left to right. Pieces tile x and have disjoint interiors.
std::vector<Interval> decompose_below(const ElementarySet& x, const FieldNum& delta);

// |X ∩ (a + L*Z)| for a set X on the line, 0 <= a < L.
long fiber_count(const ElementarySet& x, const FieldNum& L, const FieldNum& a);

// Leftmost subset of x with the given measure (0 <= t <= measure(x)),
// together with the remainder.
std::pair<ElementarySet, ElementarySet> split_by_measure(const ElementarySet& x,
                                                         const FieldNum& t);

}  // namespace simultile

#endif
