#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "ellss/errors.hpp"
#include "ellss/rng.hpp"

namespace ellss {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Point on the circle, stored as radians in [0, 2*pi). Construction wraps via
// fmod with an additive correction on the negative branch; a result that
// rounds to exactly 2*pi maps to 0 so the invariant is machine-checkable.
class Angle {
 public:
  constexpr Angle() : value_(0.0) {}
  explicit Angle(double radians) : value_(normalize(radians)) {}

  double value() const { return value_; }

  static double normalize(double radians) {
    double r = std::fmod(radians, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
  }

  friend bool operator==(Angle a, Angle b) { return a.value_ == b.value_; }
  friend bool operator!=(Angle a, Angle b) { return a.value_ != b.value_; }

 private:
  double value_;
};

// The reflection a -> (pivot - a) mod 2*pi. Self-inverse as a map on the
// circle; in doubles the round trip lands within a couple of ulp of 2*pi
// (exact bitwise inversion is impossible on a non-uniform float grid).
inline Angle reflect(Angle pivot, Angle a) { return Angle(pivot.value() - a.value()); }

// Shortest distance between two angles measured around the circle.
inline double circular_distance(Angle a, Angle b) {
  const double d = std::fabs(a.value() - b.value());
  return std::min(d, two_pi - d);
}

// Arc on the circle with one of three endpoint conventions, distinguished by
// what the degenerate case lo == hi means:
//
//   arc         [lo, hi)   lo == hi is the full circle
//   proper_arc  [lo, hi)   lo == hi is the empty set
//   open_arc    (lo, hi)   lo == hi is the full circle
//
// A wrapped arc (lo > hi) is the union of the piece through 2*pi and the
// piece from 0; for open_arc the wrap keeps 0 inside: [0, hi) u (lo, 2*pi).
class GeneralizedInterval {
 public:
  enum class Kind : std::uint8_t { arc, proper_arc, open_arc };

  static GeneralizedInterval make_arc(Angle lo, Angle hi) {
    return GeneralizedInterval(Kind::arc, lo, hi);
  }
  static GeneralizedInterval make_proper_arc(Angle lo, Angle hi) {
    return GeneralizedInterval(Kind::proper_arc, lo, hi);
  }
  static GeneralizedInterval make_open_arc(Angle lo, Angle hi) {
    return GeneralizedInterval(Kind::open_arc, lo, hi);
  }
  static GeneralizedInterval full_circle() { return make_arc(Angle(), Angle()); }

  Kind kind() const { return kind_; }
  Angle lo() const { return lo_; }
  Angle hi() const { return hi_; }

  bool contains(Angle g) const {
    const double x = g.value();
    const double a = lo_.value();
    const double b = hi_.value();
    switch (kind_) {
      case Kind::arc:
        if (a == b) return true;
        return a < b ? (x >= a && x < b) : (x < b || x >= a);
      case Kind::proper_arc:
        if (a == b) return false;
        return a < b ? (x >= a && x < b) : (x < b || x >= a);
      case Kind::open_arc:
        if (a == b) return true;
        return a < b ? (x > a && x < b) : (x < b || x > a);
    }
    return false;  // unreachable
  }

  // Lebesgue measure. The wrapped case is computed as 2*pi - (lo - hi) so a
  // complementary pair of arcs sums to 2*pi within one ulp.
  double length() const {
    const double a = lo_.value();
    const double b = hi_.value();
    if (a == b) return kind_ == Kind::proper_arc ? 0.0 : two_pi;
    return a < b ? b - a : two_pi - (a - b);
  }

  bool is_empty() const { return length() == 0.0; }
  bool is_full_circle() const { return lo_ == hi_ && kind_ != Kind::proper_arc; }

  std::string describe() const;

 private:
  GeneralizedInterval(Kind kind, Angle lo, Angle hi) : kind_(kind), lo_(lo), hi_(hi) {}

  Kind kind_;
  Angle lo_;
  Angle hi_;
};

// Uniform draw on an interval, following the wrap-around recipe: for lo < hi
// sample [lo, hi) directly; otherwise sample V on [lo - 2*pi, hi) and add
// 2*pi when V is negative. Letting lo == hi fall into the second branch
// yields the full circle with no special case.
inline Angle sample_uniform(const GeneralizedInterval& iv, RngStream& rng) {
  if (iv.is_empty()) throw ZeroLengthInterval("sample_uniform: interval has zero length");
  const double a = iv.lo().value();
  const double b = iv.hi().value();
  if (a < b) return Angle(rng.uniform(a, b));
  const double v = rng.uniform(a - two_pi, b);
  return Angle(v < 0.0 ? v + two_pi : v);
}

// Image of an open arc under the reflection about pivot (open arcs map to
// open arcs with the endpoints swapped and reflected).
inline GeneralizedInterval reflect_interval(Angle pivot, const GeneralizedInterval& iv) {
  if (iv.kind() != GeneralizedInterval::Kind::open_arc)
    throw PreconditionViolated("reflect_interval: requires an open arc");
  return GeneralizedInterval::make_open_arc(reflect(pivot, iv.hi()), reflect(pivot, iv.lo()));
}

}  // namespace ellss
