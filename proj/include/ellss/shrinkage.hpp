#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ellss/angle.hpp"
#include "ellss/arcs.hpp"
#include "ellss/rng.hpp"

namespace ellss {

// State of the shrinkage chain: the current draw and the bracket endpoints.
// The bracket arc(gmin, gmax) always contains gamma, and once an anchor is
// fixed it contains the anchor as well.
struct ShrinkTriple {
  Angle gamma;
  Angle gmin;
  Angle gmax;

  GeneralizedInterval bracket() const { return GeneralizedInterval::make_arc(gmin, gmax); }

  bool in_lambda() const { return bracket().contains(gamma); }

  bool in_lambda_theta(Angle anchor) const {
    const auto b = bracket();
    return b.contains(gamma) && b.contains(anchor) && gamma != anchor;
  }

  // Membership in the anchor-safe set: both alpha and gamma interior to the
  // open bracket and alpha clear of all three triple components. Reflections
  // of the one-step kernel are exact on this set.
  bool in_anchor_safe_set(Angle alpha) const {
    const auto open_bracket = GeneralizedInterval::make_open_arc(gmin, gmax);
    return open_bracket.contains(alpha) && open_bracket.contains(gamma) && alpha != gamma &&
           alpha != gmin && alpha != gmax;
  }
};

// Membership predicate for an angle set; stands in for the slice without
// materializing it. Must be pure: same angle, same answer.
class SliceOracle {
 public:
  SliceOracle(std::function<bool(Angle)> membership, std::string description)
      : membership_(std::move(membership)), description_(std::move(description)) {}

  static SliceOracle from_arcs(ArcSet arcs) {
    auto desc = arcs.describe();
    return SliceOracle([set = std::move(arcs)](Angle a) { return set.contains(a); },
                       std::move(desc));
  }
  static SliceOracle full_circle() {
    return SliceOracle([](Angle) { return true; }, "full circle");
  }
  static SliceOracle empty() {
    return SliceOracle([](Angle) { return false; }, "empty set");
  }

  bool contains(Angle a) const { return membership_(a); }
  const std::string& description() const { return description_; }

 private:
  std::function<bool(Angle)> membership_;
  std::string description_;
};

struct ShrinkOptions {
  // Maximum oracle evaluations before giving up.
  std::uint32_t cap = 1000;
  // When the cap is exhausted, return the anchor instead of reporting
  // cap_exceeded. Off by default: it breaks exactness of the kernel and
  // exists only to mirror the usual machine-precision fallback.
  bool fallback_to_anchor = false;
  // Evaluate (and count) the oracle at the anchor before the loop; raises
  // PreconditionViolated when the anchor is not in the set. Callers that can
  // guarantee membership by construction may disable the check.
  bool check_anchor = true;
  // Test-only fault injection: probability of forcing the gmax branch of the
  // case split. Nonzero values break reversibility on purpose.
  double fault_gmax_bias = 0.0;
};

struct ShrinkOutcome {
  enum class Status : std::uint8_t { accepted, cap_exceeded, anchor_fallback };

  Status status = Status::cap_exceeded;
  Angle angle;                   // accepted draw, or the anchor under fallback
  std::uint32_t iterations = 0;  // realized stopping time: draws tested
  std::uint32_t evals = 0;       // oracle evaluations (includes anchor check)

  bool terminated() const { return status == Status::accepted; }
  bool capped() const { return status != Status::accepted; }
};

// First triple of the shrinkage chain: one uniform angle, bracket degenerate
// at that angle (so the bracket is the full circle).
ShrinkTriple init_shrink(RngStream& rng);

// One pass of the bracket update and redraw. Requires the triple to lie in
// Lambda_theta for the given anchor.
ShrinkTriple shrink_step(Angle anchor, const ShrinkTriple& z, RngStream& rng);

// Full shrinkage run: draw, test the oracle, shrink until a draw lands in the
// set or the evaluation cap runs out.
ShrinkOutcome shrink(Angle anchor, const SliceOracle& set, RngStream& rng,
                     const ShrinkOptions& opts = {});
ShrinkOutcome shrink(Angle anchor, const SliceOracle& set, RngStream& rng, std::uint32_t cap);

struct QEstimate {
  double estimate = 0.0;   // Monte Carlo frequency of {accepted and in target}
  double std_error = 0.0;  // binomial standard error
  std::uint64_t cap_hits = 0;
  std::uint64_t n = 0;
};

// Monte Carlo estimate of the stopped-kernel mass Q(anchor, target): the
// probability that a shrinkage run from `anchor` terminates in `target`.
// Cap hits count toward the complement.
QEstimate estimate_q(const SliceOracle& set, Angle anchor, const SliceOracle& target,
                     std::uint64_t n, RngStream& rng, const ShrinkOptions& opts = {});

// Shrinkage chain with the stopping rule ignored: the initial triple followed
// by steps-1 bracket updates.
std::vector<ShrinkTriple> unstopped_run(Angle anchor, std::uint32_t steps, RngStream& rng);

}  // namespace ellss
