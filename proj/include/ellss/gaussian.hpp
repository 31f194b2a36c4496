#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "ellss/angle.hpp"
#include "ellss/rng.hpp"

namespace ellss {

using StateVector = Eigen::VectorXd;

// Centered Gaussian N(0, C), either as a dense SPD matrix or in spectral
// (truncated Karhunen-Loeve) form as a list of positive eigenvalues. Dense
// specs are validated and Cholesky-factored at construction; function-space
// priors are realized only through spectral truncation at finite dimension.
class CovarianceSpec {
 public:
  static CovarianceSpec dense(Eigen::MatrixXd c);
  static CovarianceSpec spectral(std::vector<double> eigenvalues);
  // eigenvalue_i = i^{-s}, i = 1..dim; requires s > 1 (summable tail).
  static CovarianceSpec power_law(std::size_t dim, double s);
  static CovarianceSpec identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool is_spectral() const { return spectral_; }
  const std::vector<double>& eigenvalues() const;
  const Eigen::MatrixXd& matrix() const;
  const Eigen::MatrixXd& cholesky_factor() const;  // lower factor, cached at construction

  double trace() const { return trace_; }
  double variance(std::size_t i) const;  // i-th diagonal entry of C
  // Condition number above 1e12: positive definiteness is numerically murky;
  // callers should surface a warning rather than trust the factorization.
  bool ill_conditioned() const { return ill_conditioned_; }
  double condition_estimate() const { return condition_; }

 private:
  CovarianceSpec() = default;

  bool spectral_ = true;
  std::size_t dim_ = 0;
  double trace_ = 0.0;
  double condition_ = 1.0;
  bool ill_conditioned_ = false;
  std::vector<double> eigenvalues_;
  Eigen::MatrixXd matrix_;
  Eigen::MatrixXd chol_;  // lower factor, dense specs only
};

// Draw from N(0, C). Spectral: coordinate i is sqrt(lambda_i) times a unit
// normal. Dense: Cholesky factor times a unit normal vector. Consumes the
// normals in coordinate order.
StateVector sample_prior(const CovarianceSpec& cov, RngStream& rng);

// Point on the ellipse through x and w: cos(theta) x + sin(theta) w.
StateVector ellipse_point(const StateVector& x, const StateVector& w, Angle theta);

// The pair rotation (x cos t + y sin t, x sin t - y cos t); an involution
// that leaves an i.i.d. centered Gaussian pair invariant in distribution.
std::pair<StateVector, StateVector> rotate_pair(const StateVector& x, const StateVector& y,
                                                Angle theta);

}  // namespace ellss
