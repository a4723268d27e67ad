#include "sgvar/stationary_map.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace sgvar {

namespace {

constexpr double kNilpotentTol = 1e-300;

void check_blocks(const std::vector<Mat>& mats) {
  if (mats.empty()) throw InvariantViolation("companion: p must be at least 1");
  const long m = mats[0].rows();
  for (const Mat& a : mats) {
    if (a.rows() != m || a.cols() != m) {
      throw InvariantViolation("companion: blocks must all be m x m");
    }
  }
}

}  // namespace

CompanionMatrix companion(const std::vector<Mat>& mats) {
  check_blocks(mats);
  CompanionMatrix C;
  C.blocks = mats;
  C.m = static_cast<int>(mats[0].rows());
  C.p = static_cast<int>(mats.size());
  return C;
}

Mat CompanionMatrix::materialize() const {
  if (p == 1) return blocks[0];
  const int n = m * p;
  Mat C = Mat::Zero(n, n);
  for (int s = 0; s < p; ++s) {
    C.block(0, s * m, m, m) = blocks[s];
  }
  for (int s = 1; s < p; ++s) {
    C.block(s * m, (s - 1) * m, m, m) = Mat::Identity(m, m);
  }
  return C;
}

SpectralRadiusResult spectral_radius(const CompanionMatrix& C) {
  const Mat A = C.materialize();
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw EigenFailure("spectral_radius: eigen-solver did not converge");
  }
  const auto& lambda = es.eigenvalues();
  SpectralRadiusResult r;
  std::vector<double> moduli(lambda.size());
  int arg = 0;
  for (int k = 0; k < lambda.size(); ++k) {
    moduli[k] = std::abs(lambda(k));
    if (moduli[k] > moduli[arg]) arg = k;
  }
  r.rho = moduli[arg];
  r.dominant = lambda(arg);
  std::sort(moduli.begin(), moduli.end(), std::greater<double>());
  r.gap = moduli.size() > 1 ? moduli[0] - moduli[1] : moduli[0];
  return r;
}

SpectralRadiusResult spectral_radius(const std::vector<Mat>& mats) {
  return spectral_radius(companion(mats));
}

ForwardMapResult forward_map(const std::vector<Mat>& phi, double nu) {
  if (!(nu > 0.0)) throw InvariantViolation("forward_map: nu must be positive");
  const double rho = spectral_radius(phi).rho;
  if (rho >= 1.0) {
    throw NonStationaryInput("forward_map: rho(C_phi) >= 1");
  }
  ForwardMapResult out;
  out.u = rho;
  out.z.resize(phi.size());
  double scale = 1.0;
  for (std::size_t s = 0; s < phi.size(); ++s) {
    scale *= nu;
    out.z[s] = scale * phi[s];
  }
  return out;
}

InverseMapResult inverse_map(const std::vector<Mat>& z, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw InvariantViolation("inverse_map: u must lie in (0,1)");
  }
  const double rho_z = spectral_radius(z).rho;
  if (rho_z < kNilpotentTol) {
    throw NilpotentCompanion("inverse_map: rho(C_z) is numerically zero");
  }
  InverseMapResult out;
  out.nu = rho_z / u;
  out.phi.resize(z.size());
  const double ratio = u / rho_z;
  double scale = 1.0;
  for (std::size_t s = 0; s < z.size(); ++s) {
    scale *= ratio;
    out.phi[s] = scale * z[s];
  }
  return out;
}

double log_jacobian_det(const std::vector<Mat>& phi, double nu) {
  if (!(nu > 0.0)) throw InvariantViolation("log_jacobian_det: nu must be positive");
  const double rho = spectral_radius(phi).rho;
  if (rho <= 0.0) {
    throw InvariantViolation("log_jacobian_det: rho(C_phi) must be positive");
  }
  const auto m = static_cast<double>(phi[0].rows());
  const auto p = static_cast<double>(phi.size());
  const double q = m * m * p * (p + 1.0) / 2.0;
  return (q - 1.0) * std::log(nu) + std::log(rho);
}

Mat spectral_radius_gradient(const CompanionMatrix& C, double gap_tol) {
  const Mat A = C.materialize();
  const int n = static_cast<int>(A.rows());
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    throw EigenFailure("spectral_radius_gradient: eigen-solver did not converge");
  }
  const auto& lambda = es.eigenvalues();
  int k = 0;
  for (int j = 1; j < n; ++j) {
    if (std::abs(lambda(j)) > std::abs(lambda(k))) k = j;
  }
  const std::complex<double> lam = lambda(k);
  const double rho = std::abs(lam);
  if (rho <= 0.0) {
    throw DegenerateSpectrum("spectral_radius_gradient: rho is zero");
  }

  // Gap check treating the conjugate twin of a complex dominant eigenvalue as
  // part of the dominant pair: the shared modulus is smooth there.
  int twin = -1;
  if (std::abs(lam.imag()) > 0.0) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      const double dist = std::abs(lambda(j) - std::conj(lam));
      if (dist < best) {
        best = dist;
        twin = j;
      }
    }
    if (twin >= 0 && best > 1e-6 * (1.0 + rho)) twin = -1;
  }
  double second = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j == k || j == twin) continue;
    second = std::max(second, std::abs(lambda(j)));
  }
  if (rho - second < gap_tol) {
    throw DegenerateSpectrum("spectral_radius_gradient: dominant modulus tied");
  }

  // d lambda / d A_{ij} = conj(l)_i r_j / (l^H r) with left eigenvector row
  // w = row k of V^{-1} (so w^T A = lambda w^T and w^T r = 1 in exact
  // arithmetic); then d rho = Re(conj(lambda) d lambda) / rho.
  const Eigen::MatrixXcd V = es.eigenvectors();
  const Eigen::MatrixXcd W = V.inverse();
  const Eigen::RowVectorXcd w = W.row(k);
  const Eigen::VectorXcd r = V.col(k);
  const std::complex<double> denom = (w * r)(0, 0);
  if (std::abs(denom) < 1e-14) {
    throw DegenerateSpectrum("spectral_radius_gradient: defective eigenpair");
  }
  const std::complex<double> front = std::conj(lam) / rho / denom;
  Mat grad(C.m, n);
  for (int i = 0; i < C.m; ++i) {
    for (int j = 0; j < n; ++j) {
      grad(i, j) = (front * w(i) * r(j)).real();
    }
  }
  return grad;
}

}  // namespace sgvar
