// Companion-form machinery: spectral radius, the parameter-expansion
// bijection between stationary coefficient matrices and unconstrained ones,
// its Jacobian determinant, and the spectral-radius gradient.
#pragma once

#include <complex>
#include <vector>

#include "sgvar/types.hpp"

namespace sgvar {

/// Companion form of p lag matrices: the blocks sit in the top block row of
/// the implicit mp x mp matrix with identity blocks on the first sub-diagonal.
struct CompanionMatrix {
  std::vector<Mat> blocks;  // p blocks, each m x m
  int m = 0;
  int p = 0;

  /// Dense mp x mp form; for p == 1 this is blocks[0] itself.
  Mat materialize() const;
};

/// Builds the companion form, validating dimensions.
CompanionMatrix companion(const std::vector<Mat>& mats);

struct SpectralRadiusResult {
  double rho = 0.0;                      // max eigenvalue modulus
  std::complex<double> dominant{0, 0};   // an eigenvalue attaining rho
  double gap = 0.0;                      // |lambda_1| - |lambda_2|, moduli-sorted
};

/// Spectral radius of the materialised companion matrix via a dense
/// eigen-solve. Throws EigenFailure on non-convergence.
SpectralRadiusResult spectral_radius(const CompanionMatrix& C);
SpectralRadiusResult spectral_radius(const std::vector<Mat>& mats);

struct ForwardMapResult {
  std::vector<Mat> z;
  double u = 0.0;
};

/// (Phi, nu) -> (Z, u) with Z_s = nu^s Phi_s and u = rho(C_phi).
/// Requires rho(C_phi) < 1 and nu > 0; throws NonStationaryInput otherwise.
ForwardMapResult forward_map(const std::vector<Mat>& phi, double nu);

struct InverseMapResult {
  std::vector<Mat> phi;
  double nu = 0.0;
};

/// (Z, u) -> (Phi, nu) with Phi_s = u^s Z_s / rho(C_z)^s and nu = rho(C_z)/u.
/// The output always satisfies rho(C_phi) = u < 1. Throws NilpotentCompanion
/// when rho(C_z) < 1e-300 and InvariantViolation when u is outside (0,1).
InverseMapResult inverse_map(const std::vector<Mat>& z, double u);

/// log |J| of the expansion map at (Phi, nu):
/// (q - 1) log nu + log rho(C_phi) with q = m^2 p (p+1) / 2.
double log_jacobian_det(const std::vector<Mat>& phi, double nu);

/// Gradient of rho with respect to the entries of the top block row,
/// returned as an m x (m p) matrix: entry (i, (s-1)m + j) is
/// d rho / d (block_s)_{ij}. Uses left/right eigenvectors of the dominant
/// eigenvalue; for a complex-conjugate dominant pair either member gives the
/// same result. Throws DegenerateSpectrum when the dominant modulus is tied
/// (conjugate twin excluded) within gap_tol.
Mat spectral_radius_gradient(const CompanionMatrix& C, double gap_tol = 1e-8);

}  // namespace sgvar
