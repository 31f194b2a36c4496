#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ellss/likelihoods.hpp"
#include "ellss/shrinkage.hpp"

namespace ellss {

struct EssStepRecord {
  StateVector x_out;
  std::uint32_t shrink_iterations = 0;  // angle draws tested this step
  std::uint32_t likelihood_evals = 0;   // slice-oracle evaluations this step
  bool cap_hit = false;                 // chain stayed put; never silent
  double log_threshold = 0.0;           // realized log t
  double log_likelihood_out = 0.0;      // cached log-likelihood at x_out
};

// Slice membership for the ellipse through (x, w) at threshold log_t:
// log_likelihood(cos(theta) x + sin(theta) w) > log_t, strict.
SliceOracle make_slice_oracle(const TargetModel& model, const StateVector& x,
                              const StateVector& w, double log_t);

// One transition of the reformulated sampler: log-space threshold, Gaussian
// draw, then a shrinkage run anchored at angle zero. The threshold is
// log rho(x_in) + log U, U uniform on [0,1), which makes the anchor a member
// of the slice by construction. On a cap hit the state is returned unchanged
// and flagged. Draw order: threshold, then prior draw, then angles.
EssStepRecord ess_step(const TargetModel& model, const StateVector& x_in, double llh_in,
                       RngStream& rng, std::uint32_t cap = 1000);
EssStepRecord ess_step(const TargetModel& model, const StateVector& x_in, RngStream& rng,
                       std::uint32_t cap = 1000);

// Literal signed-bracket transition: the bracket starts at [gamma - 2*pi,
// gamma] and shrinks toward zero, with angles wrapped to [0, 2*pi) only at
// output. Consumes the same variate slots as ess_step, so the two variants
// driven by identical streams produce matching transitions.
EssStepRecord ess_step_murray(const TargetModel& model, const StateVector& x_in, double llh_in,
                              RngStream& rng, std::uint32_t cap = 1000);
EssStepRecord ess_step_murray(const TargetModel& model, const StateVector& x_in, RngStream& rng,
                              std::uint32_t cap = 1000);

enum class EssVariant : std::uint8_t { reformulated, murray };

EssVariant parse_variant(const std::string& name);
std::string variant_name(EssVariant v);

struct StepDiagnostics {
  std::uint32_t shrink_iterations = 0;
  std::uint32_t likelihood_evals = 0;
  bool cap_hit = false;
};

struct ChainSummary {
  std::uint64_t n_steps = 0;
  std::uint64_t burn_in = 0;
  double mean_shrink_iterations = 0.0;
  double mean_likelihood_evals = 0.0;
  std::uint64_t total_likelihood_evals = 0;
  std::uint64_t cap_hits = 0;
};

struct ChainResult {
  std::vector<StateVector> states;        // post burn-in, one per step
  std::vector<StepDiagnostics> diagnostics;
  ChainSummary summary;
};

// Drive burn_in + n_steps transitions from x0, keeping the last n_steps.
// Step k draws from rng.substream(k), so the chain is a pure function of
// (stream key, config) and single steps can be replayed in isolation.
ChainResult run_chain(const TargetModel& model, const StateVector& x0, std::uint64_t n_steps,
                      RngStream& rng, std::uint32_t cap, EssVariant variant,
                      std::uint64_t burn_in = 0);

}  // namespace ellss
