#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ellss/gaussian.hpp"

namespace ellss {

// Target: posterior proportional to exp(log_likelihood(x)) times the Gaussian
// prior N(0, prior). The log-likelihood must be finite everywhere (strictly
// positive density); the normalizing constant is never needed or computed.
struct TargetModel {
  std::string name;
  std::function<double(const StateVector&)> log_likelihood;
  CovarianceSpec prior;
  std::size_t dim = 0;
};

// Independent Gaussian factors on the leading `obs_dims` coordinates:
// log rho(x) = -sum_i (x_i - mean_i)^2 / (2 sigma_i^2).
struct GaussianLikelihood {
  std::vector<double> mean;   // length obs_dims
  std::vector<double> sigma;  // length obs_dims, all positive
  std::size_t obs_dims = 0;
};

TargetModel make_constant_model(CovarianceSpec prior);
TargetModel make_gaussian_model(CovarianceSpec prior, GaussianLikelihood lik);
// rho(x) = 1_{[0,1]^d}(x) + epsilon; not lower semi-continuous, so slices can
// have zero length and the shrink loop can run into the cap.
TargetModel make_indicator_cube_model(CovarianceSpec prior, double epsilon);
// rho(x) = sum_j weights_j exp(-|x - means_j * 1|^2 / (2 sigmas_j^2)),
// component means broadcast across coordinates.
TargetModel make_mixture_model(CovarianceSpec prior, std::vector<double> weights,
                               std::vector<double> means, std::vector<double> sigmas);
// Function-space regression demo: x holds spectral coefficients of a function
// on [0,1] in a Fourier basis scaled by sqrt(eigenvalue); observations are
// (location, value) pairs with Gaussian noise.
TargetModel make_gp_regression_model(CovarianceSpec prior,
                                     std::vector<std::pair<double, double>> observations,
                                     double noise);

// Value of the KL-truncated function at location s for coefficients x.
double gp_function_value(const CovarianceSpec& prior, const StateVector& x, double s);

// Closed-form posterior for a Gaussian likelihood with a spectral prior:
// coordinates are independent, observed ones get the usual precision-weighted
// update, unobserved ones keep the prior. The exact-sampling oracle for
// reversibility and stationarity tests.
struct ConjugatePosterior {
  std::vector<double> mean;
  std::vector<double> variance;

  StateVector sample(RngStream& rng) const;
};

ConjugatePosterior conjugate_posterior(const CovarianceSpec& prior,
                                       const GaussianLikelihood& lik);

}  // namespace ellss
