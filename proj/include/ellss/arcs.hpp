#pragma once

#include <string>
#include <vector>

#include "ellss/angle.hpp"
#include "ellss/rng.hpp"

namespace ellss {

// Finite union of arcs; the canonical way the verification harness specifies
// angle sets. Reflections of an ArcSet are again an ArcSet, computed exactly
// arc by arc, which is what makes pushforward comparisons testable.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet full_circle();
  // Half-open arc [lo, hi); lo == hi is rejected (use full_circle()).
  static ArcSet single(double lo, double hi);
  // Open arc (lo, hi).
  static ArcSet single_open(double lo, double hi);

  ArcSet& add(double lo, double hi);
  ArcSet& add_open(double lo, double hi);
  ArcSet& add(const GeneralizedInterval& piece);

  bool contains(Angle a) const;
  double length() const;
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }
  const std::vector<GeneralizedInterval>& pieces() const { return pieces_; }

  // Uniform draw on the union (one uniform consumed; pieces are concatenated
  // by arc length).
  Angle sample(RngStream& rng) const;

  // Pointwise image under reflect(pivot, .). Pieces are treated as open arcs;
  // endpoint membership may flip, which is measure zero.
  ArcSet reflected(Angle pivot) const;

  // Closure-based subset test: true when every piece of `other` lies inside
  // the closure of this union. Endpoint openness is ignored.
  bool covers(const ArcSet& other) const;

  // Total length of the overlap with a single arc [lo, hi) given by angles.
  double overlap_length(Angle lo, Angle hi) const;

  std::string describe() const;

 private:
  std::vector<GeneralizedInterval> pieces_;
};

}  // namespace ellss
