#pragma once

#include <vector>

#include "stokes/spin_core.hpp"

namespace stokes {

enum class GridScheme {
  // theta_i = (i + 1/2) pi / n_theta, phi_j = (j + 1/2) 2pi / n_phi.
  Midpoint,
  // theta_i = i pi / (n_theta - 1) including both poles, phi_j = j 2pi / n_phi.
  Endpoint,
};

class SphereGrid {
 public:
  SphereGrid(int n_theta, int n_phi, GridScheme scheme = GridScheme::Endpoint);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  GridScheme scheme() const { return scheme_; }

  double theta(int i) const;
  double phi(int j) const;
  double p(int i) const;  // cos(theta_i), the population-imbalance coordinate

  // Weight of row i for the sin(theta) dtheta = dp measure. The midpoint
  // rows are Chebyshev nodes in p, so Fejer (first rule) weights are used;
  // endpoint rows get Clenshaw-Curtis weights. Both integrate polynomials in
  // p of degree < n_theta exactly, which covers Q for n_theta > 2s.
  double theta_weight(int i) const { return theta_weights_[i]; }
  double phi_step() const;

 private:
  int n_theta_;
  int n_phi_;
  GridScheme scheme_;
  std::vector<double> theta_weights_;
};

struct QGrid {
  SphereGrid grid;
  Eigen::MatrixXd values;  // rows: theta index, columns: phi index
  // (2s+1)/(4 pi) * quadrature of Q over the sphere; should be close to 1.
  double normalization_estimate;
};

// Q(theta, phi) = |<theta,phi|psi>|^2.
double q_value(const PolarizationState& state, double theta, double phi);

QGrid q_grid(const PolarizationState& state, const SphereGrid& grid, unsigned threads = 1);

}  // namespace stokes
