#include "sgvar/types.hpp"

#include <cmath>

#include "sgvar/stationary_map.hpp"

namespace sgvar {

namespace {

bool all_finite(const Mat& x) { return x.allFinite(); }

void require(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

bool is_symmetric(const Mat& x, double tol = 0.0) {
  return (x - x.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool is_positive_definite(const Mat& x) {
  if (x.rows() != x.cols() || x.rows() == 0) return false;
  Eigen::LLT<Mat> llt(x);
  return llt.info() == Eigen::Success;
}

}  // namespace

void TimeSeries::validate() const {
  require(data.rows() >= 1 && data.cols() >= 1, "TimeSeries: empty data");
  require(all_finite(data), "TimeSeries: non-finite entries");
  if (!names.empty()) {
    require(static_cast<long>(names.size()) == data.cols(),
            "TimeSeries: name count does not match column count");
  }
}

HyperParams HyperParams::defaults(int m) {
  HyperParams hp;
  hp.D = Mat::Identity(m, m);
  return hp;
}

void HyperParams::validate() const {
  require(a1 > 0 && a2 > 0 && b1 > 0 && b2 > 0 && c1 > 0 && c2 > 0 && e1 > 0 &&
              e2 > 0,
          "HyperParams: shape/rate parameters must be strictly positive");
  require(d > 2.0, "HyperParams: d must exceed 2");
  require(D.rows() == D.cols() && D.rows() >= 1, "HyperParams: D must be square");
  require(is_symmetric(D, 1e-12 * (1.0 + D.cwiseAbs().maxCoeff())),
          "HyperParams: D must be symmetric");
  require(is_positive_definite(D), "HyperParams: D must be positive definite");
  if (mu_mode.is_random()) {
    require(mu_mode.f2 > 0, "HyperParams: f2 must be positive");
  }
}

void ModelSpec::validate() const {
  require(m >= 1 && p >= 1, "ModelSpec: m and p must be at least 1");
  hyper.validate();
  require(hyper.D.rows() == m, "ModelSpec: D dimension does not match m");
}

void StableVarParams::validate() const {
  require(!phi.empty(), "StableVarParams: no coefficient matrices");
  const int mm = m();
  for (const Mat& f : phi) {
    require(f.rows() == mm && f.cols() == mm, "StableVarParams: phi not m x m");
    require(all_finite(f), "StableVarParams: non-finite phi");
  }
  require(K.rows() == mm && K.cols() == mm, "StableVarParams: K not m x m");
  require(is_symmetric(K, 1e-10 * (1.0 + K.cwiseAbs().maxCoeff())),
          "StableVarParams: K must be symmetric");
  require(is_positive_definite(K), "StableVarParams: K must be positive definite");
  require(spectral_radius(phi).rho < 1.0,
          "StableVarParams: spectral radius must be below 1");
}

void ExpandedParams::validate() const {
  require(!z_tilde.empty(), "ExpandedParams: no effect-size matrices");
  require(z_tilde.size() == gamma.size(),
          "ExpandedParams: z_tilde and gamma lag counts differ");
  const int mm = m();
  for (std::size_t s = 0; s < z_tilde.size(); ++s) {
    require(z_tilde[s].rows() == mm && z_tilde[s].cols() == mm,
            "ExpandedParams: z_tilde not m x m");
    require(all_finite(z_tilde[s]), "ExpandedParams: non-finite z_tilde");
    require(gamma[s].rows() == mm && gamma[s].cols() == mm,
            "ExpandedParams: gamma not m x m");
    for (int i = 0; i < mm; ++i) {
      require(gamma[s](i, i) == 1, "ExpandedParams: gamma diagonal must be 1");
      for (int j = 0; j < mm; ++j) {
        require(gamma[s](i, j) == 0 || gamma[s](i, j) == 1,
                "ExpandedParams: gamma entries must be binary");
      }
    }
  }
  require(u > 0.0 && u < 1.0, "ExpandedParams: u must lie in (0,1)");
  require(tau > 0.0, "ExpandedParams: tau must be positive");
  require(vartheta > 0.0 && vartheta < 1.0,
          "ExpandedParams: vartheta must lie in (0,1)");
  require(omega > 0.0, "ExpandedParams: omega must be positive");
  if (mu) require(std::isfinite(*mu), "ExpandedParams: non-finite mu");
}

std::vector<Mat> ExpandedParams::masked_z() const {
  std::vector<Mat> z(z_tilde.size());
  for (std::size_t s = 0; s < z_tilde.size(); ++s) {
    z[s] = z_tilde[s].cwiseProduct(gamma[s].cast<double>());
  }
  return z;
}

void MixedGraph::validate() const {
  require(m >= 1, "MixedGraph: empty vertex set");
  require(directed.rows() == m && directed.cols() == m &&
              undirected.rows() == m && undirected.cols() == m,
          "MixedGraph: adjacency dimensions");
  for (int i = 0; i < m; ++i) {
    require(directed(i, i) == 0 && undirected(i, i) == 0,
            "MixedGraph: self-loops are not allowed");
    for (int j = 0; j < m; ++j) {
      require(undirected(i, j) == undirected(j, i),
              "MixedGraph: undirected adjacency must be symmetric");
    }
  }
}

void ChainDraw::validate() const {
  expanded.validate();
  const int mm = expanded.m();
  require(static_cast<int>(phi.size()) == expanded.p(),
          "ChainDraw: phi lag count mismatch");
  for (const Mat& f : phi) {
    require(f.rows() == mm && f.cols() == mm, "ChainDraw: phi not m x m");
  }
  require(K.rows() == mm && K.cols() == mm, "ChainDraw: K not m x m");
  require(g2.rows() == mm && g2.cols() == mm, "ChainDraw: g2 not m x m");
}

MixedGraph derive_mixed_graph(const ChainDraw& draw, double /*zero_tol*/) {
  const int m = draw.expanded.m();
  MixedGraph g;
  g.m = m;
  g.directed = IMat::Zero(m, m);
  g.undirected = draw.g2;
  g.undirected.diagonal().setZero();
  for (const IMat& gam : draw.expanded.gamma) {
    for (int b = 0; b < m; ++b) {
      for (int a = 0; a < m; ++a) {
        if (a != b && gam(b, a) == 1) g.directed(b, a) = 1;
      }
    }
  }
  return g;
}

MixedGraph derive_mixed_graph(const std::vector<Mat>& phi, const IMat& g2,
                              double zero_tol) {
  const int m = static_cast<int>(phi.at(0).rows());
  MixedGraph g;
  g.m = m;
  g.directed = IMat::Zero(m, m);
  g.undirected = g2;
  g.undirected.diagonal().setZero();
  for (const Mat& f : phi) {
    for (int b = 0; b < m; ++b) {
      for (int a = 0; a < m; ++a) {
        if (a != b && std::abs(f(b, a)) > zero_tol) g.directed(b, a) = 1;
      }
    }
  }
  return g;
}

}  // namespace sgvar
