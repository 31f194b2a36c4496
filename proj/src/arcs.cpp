#include "ellss/arcs.hpp"

#include <algorithm>
#include <sstream>

#include "ellss/errors.hpp"

namespace ellss {
namespace {

// Linear [lo, hi] segments on [0, 2*pi]; wrapped arcs split at 0.
using Segment = std::pair<double, double>;

void append_segments(const GeneralizedInterval& piece, std::vector<Segment>& out) {
  const double a = piece.lo().value();
  const double b = piece.hi().value();
  if (piece.is_full_circle()) {
    out.emplace_back(0.0, two_pi);
  } else if (a < b) {
    out.emplace_back(a, b);
  } else {
    out.emplace_back(0.0, b);
    out.emplace_back(a, two_pi);
  }
}

std::vector<Segment> merged_segments(const std::vector<GeneralizedInterval>& pieces) {
  std::vector<Segment> segs;
  for (const auto& p : pieces) append_segments(p, segs);
  std::sort(segs.begin(), segs.end());
  std::vector<Segment> merged;
  for (const auto& s : segs) {
    if (!merged.empty() && s.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, s.second);
    else
      merged.push_back(s);
  }
  return merged;
}

}  // namespace

ArcSet ArcSet::full_circle() {
  ArcSet s;
  s.pieces_.push_back(GeneralizedInterval::full_circle());
  return s;
}

ArcSet ArcSet::single(double lo, double hi) { return ArcSet().add(lo, hi); }

ArcSet ArcSet::single_open(double lo, double hi) { return ArcSet().add_open(lo, hi); }

ArcSet& ArcSet::add(double lo, double hi) {
  const Angle a(lo), b(hi);
  if (a == b) throw ConfigError("ArcSet::add: degenerate arc; use full_circle()");
  pieces_.push_back(GeneralizedInterval::make_proper_arc(a, b));
  return *this;
}

ArcSet& ArcSet::add_open(double lo, double hi) {
  const Angle a(lo), b(hi);
  if (a == b) throw ConfigError("ArcSet::add_open: degenerate arc; use full_circle()");
  pieces_.push_back(GeneralizedInterval::make_open_arc(a, b));
  return *this;
}

ArcSet& ArcSet::add(const GeneralizedInterval& piece) {
  pieces_.push_back(piece);
  return *this;
}

bool ArcSet::contains(Angle a) const {
  for (const auto& p : pieces_)
    if (p.contains(a)) return true;
  return false;
}

double ArcSet::length() const {
  double total = 0.0;
  for (const auto& p : pieces_) total += p.length();
  return total;
}

Angle ArcSet::sample(RngStream& rng) const {
  const double total = length();
  if (total <= 0.0) throw ZeroLengthInterval("ArcSet::sample: empty union");
  double r = rng.uniform01() * total;
  for (const auto& p : pieces_) {
    const double len = p.length();
    if (r < len) return Angle(p.lo().value() + r);
    r -= len;
  }
  // Rounding pushed r to the very end; land just inside the last piece.
  const auto& last = pieces_.back();
  return Angle(last.lo().value() + last.length() * 0.5);
}

ArcSet ArcSet::reflected(Angle pivot) const {
  ArcSet out;
  for (const auto& p : pieces_) {
    if (p.is_full_circle()) {
      out.pieces_.push_back(GeneralizedInterval::full_circle());
      continue;
    }
    const auto open_view = GeneralizedInterval::make_open_arc(p.lo(), p.hi());
    out.pieces_.push_back(reflect_interval(pivot, open_view));
  }
  return out;
}

bool ArcSet::covers(const ArcSet& other) const {
  const auto mine = merged_segments(pieces_);
  const auto theirs = merged_segments(other.pieces_);
  for (const auto& t : theirs) {
    bool inside = false;
    for (const auto& m : mine)
      if (m.first <= t.first && t.second <= m.second) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

double ArcSet::overlap_length(Angle lo, Angle hi) const {
  std::vector<GeneralizedInterval> one{GeneralizedInterval::make_proper_arc(lo, hi)};
  if (lo == hi) one[0] = GeneralizedInterval::full_circle();
  const auto target = merged_segments(one);
  const auto mine = merged_segments(pieces_);
  double total = 0.0;
  for (const auto& t : target)
    for (const auto& m : mine) {
      const double a = std::max(t.first, m.first);
      const double b = std::min(t.second, m.second);
      if (b > a) total += b - a;
    }
  return total;
}

std::string ArcSet::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << " u ";
    os << pieces_[i].describe();
  }
  if (pieces_.empty()) os << "{}";
  return os.str();
}

std::string GeneralizedInterval::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::arc:
    case Kind::proper_arc:
      os << "[" << lo_.value() << ", " << hi_.value() << ")";
      break;
    case Kind::open_arc:
      os << "(" << lo_.value() << ", " << hi_.value() << ")";
      break;
  }
  if (is_full_circle()) os << " (full circle)";
  return os.str();
}

}  // namespace ellss
