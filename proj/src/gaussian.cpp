#include "ellss/gaussian.hpp"

#include <cmath>

#include "ellss/errors.hpp"

namespace ellss {

CovarianceSpec CovarianceSpec::dense(Eigen::MatrixXd c) {
  if (c.rows() == 0 || c.rows() != c.cols())
    throw ConfigError("CovarianceSpec::dense: matrix must be square and non-empty");
  const double asym = (c - c.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw ConfigError("CovarianceSpec::dense: matrix not symmetric (max asymmetry " +
                      std::to_string(asym) + ")");

  CovarianceSpec spec;
  spec.spectral_ = false;
  spec.dim_ = static_cast<std::size_t>(c.rows());
  spec.matrix_ = std::move(c);
  spec.trace_ = spec.matrix_.trace();

  Eigen::LLT<Eigen::MatrixXd> llt(spec.matrix_);
  if (llt.info() != Eigen::Success)
    throw FactorizationFailure("CovarianceSpec::dense: Cholesky factorization failed; "
                               "matrix is not positive definite");
  spec.chol_ = llt.matrixL();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(spec.matrix_, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (lo <= 0.0)
    throw FactorizationFailure("CovarianceSpec::dense: non-positive eigenvalue");
  spec.condition_ = hi / lo;
  spec.ill_conditioned_ = spec.condition_ > 1e12;
  return spec;
}

CovarianceSpec CovarianceSpec::spectral(std::vector<double> eigenvalues) {
  if (eigenvalues.empty()) throw ConfigError("CovarianceSpec::spectral: empty eigenvalue list");
  double trace = 0.0;
  double lo = eigenvalues.front(), hi = eigenvalues.front();
  for (double v : eigenvalues) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError("CovarianceSpec::spectral: eigenvalues must be positive and finite");
    trace += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CovarianceSpec spec;
  spec.spectral_ = true;
  spec.dim_ = eigenvalues.size();
  spec.trace_ = trace;
  spec.condition_ = hi / lo;
  spec.ill_conditioned_ = spec.condition_ > 1e12;
  spec.eigenvalues_ = std::move(eigenvalues);
  return spec;
}

CovarianceSpec CovarianceSpec::power_law(std::size_t dim, double s) {
  if (dim == 0) throw ConfigError("CovarianceSpec::power_law: dimension must be positive");
  if (!(s > 1.0)) throw ConfigError("CovarianceSpec::power_law: requires s > 1");
  std::vector<double> ev(dim);
  for (std::size_t i = 0; i < dim; ++i) ev[i] = std::pow(static_cast<double>(i + 1), -s);
  return spectral(std::move(ev));
}

CovarianceSpec CovarianceSpec::identity(std::size_t dim) {
  return spectral(std::vector<double>(dim, 1.0));
}

const std::vector<double>& CovarianceSpec::eigenvalues() const {
  if (!spectral_) throw ConfigError("CovarianceSpec: eigenvalues() on a dense spec");
  return eigenvalues_;
}

const Eigen::MatrixXd& CovarianceSpec::matrix() const {
  if (spectral_) throw ConfigError("CovarianceSpec: matrix() on a spectral spec");
  return matrix_;
}

const Eigen::MatrixXd& CovarianceSpec::cholesky_factor() const {
  if (spectral_) throw ConfigError("CovarianceSpec: cholesky_factor() on a spectral spec");
  return chol_;
}

double CovarianceSpec::variance(std::size_t i) const {
  if (i >= dim_) throw DimensionMismatch("CovarianceSpec::variance: index out of range");
  return spectral_ ? eigenvalues_[i] : matrix_(static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(i));
}

StateVector sample_prior(const CovarianceSpec& cov, RngStream& rng) {
  const auto d = static_cast<Eigen::Index>(cov.dim());
  StateVector z(d);
  for (Eigen::Index i = 0; i < d; ++i) z[i] = rng.normal();
  if (cov.is_spectral()) {
    const auto& ev = cov.eigenvalues();
    for (Eigen::Index i = 0; i < d; ++i) z[i] *= std::sqrt(ev[static_cast<std::size_t>(i)]);
    return z;
  }
  return cov.cholesky_factor() * z;
}

StateVector ellipse_point(const StateVector& x, const StateVector& w, Angle theta) {
  if (x.size() != w.size())
    throw DimensionMismatch("ellipse_point: vectors of different dimension");
  return std::cos(theta.value()) * x + std::sin(theta.value()) * w;
}

std::pair<StateVector, StateVector> rotate_pair(const StateVector& x, const StateVector& y,
                                                Angle theta) {
  if (x.size() != y.size())
    throw DimensionMismatch("rotate_pair: vectors of different dimension");
  const double c = std::cos(theta.value());
  const double s = std::sin(theta.value());
  return {c * x + s * y, s * x - c * y};
}

}  // namespace ellss
