#include "ellss/likelihoods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ellss/errors.hpp"

namespace ellss {

TargetModel make_constant_model(CovarianceSpec prior) {
  const std::size_t d = prior.dim();
  return TargetModel{"constant", [](const StateVector&) { return 0.0; }, std::move(prior), d};
}

TargetModel make_gaussian_model(CovarianceSpec prior, GaussianLikelihood lik) {
  const std::size_t d = prior.dim();
  if (lik.obs_dims == 0 || lik.obs_dims > d)
    throw ConfigError("gaussian likelihood: obs_dims must be in [1, dim]");
  if (lik.mean.size() != lik.obs_dims || lik.sigma.size() != lik.obs_dims)
    throw ConfigError("gaussian likelihood: mean/sigma must have obs_dims entries");
  for (double s : lik.sigma)
    if (!(s > 0.0)) throw ConfigError("gaussian likelihood: sigma must be positive");

  auto llh = [lik](const StateVector& x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < lik.obs_dims; ++i) {
      const double r = (x[static_cast<Eigen::Index>(i)] - lik.mean[i]) / lik.sigma[i];
      acc -= 0.5 * r * r;
    }
    return acc;
  };
  return TargetModel{"gaussian", std::move(llh), std::move(prior), d};
}

TargetModel make_indicator_cube_model(CovarianceSpec prior, double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("indicator_cube: epsilon must be positive");
  const std::size_t d = prior.dim();
  const double log_inside = std::log1p(epsilon);
  const double log_outside = std::log(epsilon);
  auto llh = [log_inside, log_outside](const StateVector& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x[i] < 0.0 || x[i] > 1.0) return log_outside;
    return log_inside;
  };
  return TargetModel{"indicator_cube", std::move(llh), std::move(prior), d};
}

TargetModel make_mixture_model(CovarianceSpec prior, std::vector<double> weights,
                               std::vector<double> means, std::vector<double> sigmas) {
  const std::size_t k = weights.size();
  if (k == 0 || means.size() != k || sigmas.size() != k)
    throw ConfigError("mixture: weights/means/sigmas must be non-empty and equal length");
  for (double w : weights)
    if (!(w > 0.0)) throw ConfigError("mixture: weights must be positive");
  for (double s : sigmas)
    if (!(s > 0.0)) throw ConfigError("mixture: sigmas must be positive");

  const std::size_t d = prior.dim();
  auto llh = [weights, means, sigmas](const StateVector& x) {
    // log-sum-exp over components
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> terms(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
      double sq = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double r = x[i] - means[j];
        sq += r * r;
      }
      terms[j] = std::log(weights[j]) - 0.5 * sq / (sigmas[j] * sigmas[j]);
      best = std::max(best, terms[j]);
    }
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - best);
    return best + std::log(acc);
  };
  return TargetModel{"mixture", std::move(llh), std::move(prior), d};
}

double gp_function_value(const CovarianceSpec& prior, const StateVector& x, double s) {
  // Fourier basis on [0,1]: 1, sqrt(2) cos(2 pi k s), sqrt(2) sin(2 pi k s).
  const auto& ev = prior.eigenvalues();
  double acc = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    double phi;
    if (i == 0) {
      phi = 1.0;
    } else {
      const std::size_t k = (i + 1) / 2;
      const double arg = 2.0 * std::numbers::pi * static_cast<double>(k) * s;
      phi = std::numbers::sqrt2 * (i % 2 == 1 ? std::cos(arg) : std::sin(arg));
    }
    acc += x[static_cast<Eigen::Index>(i)] * std::sqrt(ev[i]) * phi;
  }
  return acc;
}

TargetModel make_gp_regression_model(CovarianceSpec prior,
                                     std::vector<std::pair<double, double>> observations,
                                     double noise) {
  if (!prior.is_spectral())
    throw ConfigError("gp_regression: requires a spectral prior");
  if (observations.empty()) throw ConfigError("gp_regression: no observations");
  if (!(noise > 0.0)) throw ConfigError("gp_regression: noise must be positive");

  const std::size_t d = prior.dim();
  auto prior_copy = prior;
  auto llh = [prior_copy, observations, noise](const StateVector& x) {
    double acc = 0.0;
    for (const auto& [s, y] : observations) {
      const double r = (gp_function_value(prior_copy, x, s) - y) / noise;
      acc -= 0.5 * r * r;
    }
    return acc;
  };
  return TargetModel{"gp_regression", std::move(llh), std::move(prior), d};
}

ConjugatePosterior conjugate_posterior(const CovarianceSpec& prior,
                                       const GaussianLikelihood& lik) {
  if (!prior.is_spectral())
    throw ConfigError("conjugate_posterior: requires a spectral (diagonal) prior");
  const std::size_t d = prior.dim();
  if (lik.obs_dims > d) throw ConfigError("conjugate_posterior: obs_dims exceeds dimension");

  ConjugatePosterior post;
  post.mean.resize(d, 0.0);
  post.variance.resize(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    const double lambda = prior.eigenvalues()[i];
    if (i < lik.obs_dims) {
      const double s2 = lik.sigma[i] * lik.sigma[i];
      const double v = 1.0 / (1.0 / lambda + 1.0 / s2);
      post.variance[i] = v;
      post.mean[i] = v * lik.mean[i] / s2;
    } else {
      post.variance[i] = lambda;
    }
  }
  return post;
}

StateVector ConjugatePosterior::sample(RngStream& rng) const {
  StateVector x(static_cast<Eigen::Index>(mean.size()));
  for (std::size_t i = 0; i < mean.size(); ++i)
    x[static_cast<Eigen::Index>(i)] = mean[i] + std::sqrt(variance[i]) * rng.normal();
  return x;
}

}  // namespace ellss
