// Core domain types for sparse stationary graphical vector autoregressions:
// time series, model specification, constrained and expanded parameter sets,
// mixed graphs, and stored posterior draws.
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgvar {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using IMat = Eigen::MatrixXi;

// --- error taxonomy ---------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input validation failed (shapes, ranges, type invariants).
struct InvariantViolation : Error {
  using Error::Error;
};

/// Malformed or inconsistent data files / CSV input.
struct DataError : Error {
  using Error::Error;
};

/// Bad configuration (CLI flags, config files).
struct ConfigError : Error {
  using Error::Error;
};

/// Dense eigen-solver failed to converge.
struct EigenFailure : Error {
  using Error::Error;
};

/// inverse_map is undefined: rho(C_z) is numerically zero.
struct NilpotentCompanion : Error {
  using Error::Error;
};

/// forward_map called outside the stationary region.
struct NonStationaryInput : Error {
  using Error::Error;
};

/// Dominant eigenvalue modulus is (numerically) tied with a non-conjugate
/// competitor; the eigenvector gradient formula does not apply.
struct DegenerateSpectrum : Error {
  using Error::Error;
};

/// Matrix expected to be positive definite is not.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

/// Off-diagonal zero pattern does not match the graph.
struct PatternMismatch : Error {
  using Error::Error;
};

/// Near-singular conditioning inside a block Gibbs update; caller may retry
/// with jitter.
struct ConditioningFailure : Error {
  using Error::Error;
};

// --- data -------------------------------------------------------------------

/// Observed multivariate series; rows are time points t = 1..n, columns are
/// variables.
struct TimeSeries {
  Mat data;                        // n x m
  std::vector<std::string> names;  // optional column names, size m when set

  long n() const { return data.rows(); }
  long m() const { return data.cols(); }

  /// Throws InvariantViolation on non-finite entries or empty dimensions.
  void validate() const;
};

enum class MuKind { Fixed, Random };

/// Prior treatment of the diagonal effect-size mean.
struct MuMode {
  MuKind kind = MuKind::Fixed;
  double value = 0.0;  // fixed mu
  double f1 = 0.0;     // prior mean when random
  double f2 = 1.0;     // prior sd when random

  static MuMode fixed(double mu = 0.0) { return {MuKind::Fixed, mu, 0.0, 1.0}; }
  static MuMode random(double f1 = 0.0, double f2 = 1.0) {
    return {MuKind::Random, 0.0, f1, f2};
  }
  bool is_random() const { return kind == MuKind::Random; }
};

/// Hyperparameters of the hierarchical prior. Shape/rate pairs follow the
/// shape-rate convention for Gamma laws.
struct HyperParams {
  double a1 = 1.0, a2 = 1.0;      // Beta shape for u
  double b1 = 2.01, b2 = 1.01;    // Gamma for tau (off-diagonal slab precision)
  double c1 = 2.0, c2 = 2.0;      // Beta for vartheta (inclusion probability)
  double e1 = 2.01, e2 = 1.01;    // Gamma for omega (diagonal precision)
  double d = 3.0;                 // G-Wishart shape (> 2)
  Mat D;                          // m x m symmetric positive-definite inverse scale
  MuMode mu_mode = MuMode::fixed(0.0);

  static HyperParams defaults(int m);
  void validate() const;
};

/// Model dimension and prior settings.
struct ModelSpec {
  int m = 1;
  int p = 1;
  HyperParams hyper;

  static ModelSpec make(int m, int p) { return {m, p, HyperParams::defaults(m)}; }
  void validate() const;
};

/// Coefficient matrices constrained to the stationary region plus the error
/// precision.
struct StableVarParams {
  std::vector<Mat> phi;  // p matrices, each m x m
  Mat K;                 // m x m symmetric positive definite

  int m() const { return phi.empty() ? 0 : static_cast<int>(phi[0].rows()); }
  int p() const { return static_cast<int>(phi.size()); }
  void validate() const;  // includes the spectral-radius check
};

/// Unconstrained effect sizes, inclusion indicators and hyperparameters.
/// Diagonals of the indicator matrices are fixed at 1.
struct ExpandedParams {
  std::vector<Mat> z_tilde;   // p matrices, m x m
  std::vector<IMat> gamma;    // p binary matrices, m x m, diag == 1
  double u = 0.5;             // in (0,1)
  double tau = 1.0;           // > 0
  double vartheta = 0.5;      // in (0,1)
  double omega = 1.0;         // > 0
  std::optional<double> mu;   // present iff mu_mode is random

  int m() const { return z_tilde.empty() ? 0 : static_cast<int>(z_tilde[0].rows()); }
  int p() const { return static_cast<int>(z_tilde.size()); }
  void validate() const;

  /// Hadamard products Z_s = Gamma_s o Ztilde_s.
  std::vector<Mat> masked_z() const;
};

/// Mixed graph over m vertices: directed(b,a) == 1 encodes the edge a -> b,
/// undirected is symmetric with zero diagonal.
struct MixedGraph {
  int m = 0;
  IMat directed;
  IMat undirected;

  void validate() const;
  long directed_edge_count() const { return directed.sum(); }
  long undirected_edge_count() const { return undirected.sum() / 2; }
};

/// One stored posterior sample: the expanded parameters, the derived
/// coefficient matrices, the precision and its graph.
struct ChainDraw {
  ExpandedParams expanded;
  std::vector<Mat> phi;  // derived via the inverse map, stored for convenience
  Mat K;
  IMat g2;
  long iteration = 0;

  void validate() const;
};

/// Reads the mixed graph off a draw: directed edges from the indicators
/// (preferred), undirected edges from g2. zero_tol only matters for the
/// dense-coefficient overload below.
MixedGraph derive_mixed_graph(const ChainDraw& draw, double zero_tol = 1e-12);

/// Same derivation for externally supplied dense coefficients, where edges are
/// read off |phi_{s,ba}| > zero_tol.
MixedGraph derive_mixed_graph(const std::vector<Mat>& phi, const IMat& g2,
                              double zero_tol = 1e-12);

}  // namespace sgvar
