#include "ellss/shrinkage.hpp"

#include <cassert>
#include <cmath>

#include "ellss/errors.hpp"

namespace ellss {
namespace {

// Bracket update shared by shrink_step and the main loop. The case split:
// when the anchor sits in arc(gamma, gmax) the bracket keeps its upper part
// (gmin <- gamma), otherwise it keeps the lower part (gmax <- gamma). A draw
// exactly equal to the anchor takes the first branch, since that arc is
// closed at its left endpoint.
ShrinkTriple update_and_redraw(Angle anchor, const ShrinkTriple& z, RngStream& rng,
                               double fault_gmax_bias) {
  Angle new_min = z.gmin;
  Angle new_max = z.gmax;
  bool keep_upper = GeneralizedInterval::make_arc(z.gamma, z.gmax).contains(anchor);
  if (fault_gmax_bias > 0.0 && keep_upper && rng.uniform01() < fault_gmax_bias)
    keep_upper = false;  // deliberately corrupted kernel for negative controls
  if (keep_upper)
    new_min = z.gamma;
  else
    new_max = z.gamma;
  const auto next_bracket = GeneralizedInterval::make_arc(new_min, new_max);
  return ShrinkTriple{sample_uniform(next_bracket, rng), new_min, new_max};
}

}  // namespace

ShrinkTriple init_shrink(RngStream& rng) {
  const Angle gamma(rng.uniform(0.0, two_pi));
  return ShrinkTriple{gamma, gamma, gamma};
}

ShrinkTriple shrink_step(Angle anchor, const ShrinkTriple& z, RngStream& rng) {
  if (!z.in_lambda_theta(anchor))
    throw PreconditionViolated("shrink_step: triple not in Lambda_theta for this anchor");
  const ShrinkTriple next = update_and_redraw(anchor, z, rng, 0.0);
  // The one-step kernel keeps the anchor in the bracket almost surely.
  assert(next.bracket().contains(anchor));
  return next;
}

ShrinkOutcome shrink(Angle anchor, const SliceOracle& set, RngStream& rng,
                     const ShrinkOptions& opts) {
  ShrinkOutcome out;
  if (opts.check_anchor) {
    ++out.evals;
    if (!set.contains(anchor))
      throw PreconditionViolated("shrink: anchor is not a member of the set");
  }

  ShrinkTriple z = init_shrink(rng);
  while (true) {
    ++out.iterations;
    ++out.evals;
    if (set.contains(z.gamma)) {
      out.status = ShrinkOutcome::Status::accepted;
      out.angle = z.gamma;
      return out;
    }
    if (out.evals >= opts.cap) {
      if (opts.fallback_to_anchor) {
        out.status = ShrinkOutcome::Status::anchor_fallback;
        out.angle = anchor;
      } else {
        out.status = ShrinkOutcome::Status::cap_exceeded;
      }
      return out;
    }
    z = update_and_redraw(anchor, z, rng, opts.fault_gmax_bias);
  }
}

ShrinkOutcome shrink(Angle anchor, const SliceOracle& set, RngStream& rng, std::uint32_t cap) {
  ShrinkOptions opts;
  opts.cap = cap;
  return shrink(anchor, set, rng, opts);
}

QEstimate estimate_q(const SliceOracle& set, Angle anchor, const SliceOracle& target,
                     std::uint64_t n, RngStream& rng, const ShrinkOptions& opts) {
  if (n == 0) throw PreconditionViolated("estimate_q: need at least one sample");
  if (!set.contains(anchor))
    throw PreconditionViolated("estimate_q: anchor is not a member of the set");

  ShrinkOptions run_opts = opts;
  run_opts.check_anchor = false;  // verified once above

  QEstimate q;
  q.n = n;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const ShrinkOutcome out = shrink(anchor, set, rng, run_opts);
    if (out.terminated()) {
      if (target.contains(out.angle)) ++hits;
    } else {
      ++q.cap_hits;
    }
  }
  q.estimate = static_cast<double>(hits) / static_cast<double>(n);
  q.std_error = std::sqrt(q.estimate * (1.0 - q.estimate) / static_cast<double>(n));
  return q;
}

std::vector<ShrinkTriple> unstopped_run(Angle anchor, std::uint32_t steps, RngStream& rng) {
  if (steps == 0) throw PreconditionViolated("unstopped_run: need at least one step");
  std::vector<ShrinkTriple> chain;
  chain.reserve(steps);
  chain.push_back(init_shrink(rng));
  for (std::uint32_t i = 1; i < steps; ++i)
    chain.push_back(shrink_step(anchor, chain.back(), rng));
  return chain;
}

}  // namespace ellss
