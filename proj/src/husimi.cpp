#include "stokes/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stokes/parallel.hpp"
#include "stokes/state_factory.hpp"

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> fejer_weights(int n) {
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) {
    const double theta = (k + 0.5) * kPi / n;
    double sum = 0.0;
    for (int j = 1; j <= n / 2; ++j) sum += std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
    w[k] = 2.0 / n * (1.0 - 2.0 * sum);
  }
  return w;
}

std::vector<double> clenshaw_curtis_weights(int n) {
  const int m = n - 1;
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) {
    const double theta = k * kPi / m;
    double sum = 0.0;
    for (int j = 1; j <= m / 2; ++j) {
      const double b = (2 * j == m) ? 1.0 : 2.0;
      sum += b * std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
    }
    const double c = (k == 0 || k == m) ? 1.0 : 2.0;
    w[k] = c / m * (1.0 - sum);
  }
  return w;
}

}  // namespace

SphereGrid::SphereGrid(int n_theta, int n_phi, GridScheme scheme)
    : n_theta_(n_theta), n_phi_(n_phi), scheme_(scheme) {
  if (n_theta < 2 || n_phi < 2) {
    throw std::invalid_argument("sphere grid needs at least 2 samples per axis (got " +
                                std::to_string(n_theta) + " x " + std::to_string(n_phi) + ")");
  }
  theta_weights_ = scheme == GridScheme::Midpoint ? fejer_weights(n_theta) : clenshaw_curtis_weights(n_theta);
}

double SphereGrid::theta(int i) const {
  if (scheme_ == GridScheme::Midpoint) return (i + 0.5) * kPi / n_theta_;
  return i * kPi / (n_theta_ - 1);
}

double SphereGrid::phi(int j) const {
  const double offset = scheme_ == GridScheme::Midpoint ? 0.5 : 0.0;
  return (j + offset) * 2.0 * kPi / n_phi_;
}

double SphereGrid::p(int i) const { return std::cos(theta(i)); }

double SphereGrid::phi_step() const { return 2.0 * kPi / n_phi_; }

double q_value(const PolarizationState& state, double theta, double phi) {
  const PolarizationState coherent = coherent_state_closed_form(state.space(), theta, phi);
  return std::clamp(fidelity(coherent, state), 0.0, 1.0);
}

QGrid q_grid(const PolarizationState& state, const SphereGrid& grid, unsigned threads) {
  const SpinSpace& space = state.space();
  const int dim = space.dimension();
  const ComplexVector& psi = state.amplitudes();

  // <theta,phi|psi> = sum_k w_k(theta) e^{-i k phi} psi_k, with w_k the real
  // binomial magnitudes of the coherent state.
  Eigen::MatrixXcd phases(grid.n_phi(), dim);
  for (int j = 0; j < grid.n_phi(); ++j) {
    for (int k = 0; k < dim; ++k) phases(j, k) = std::exp(Complex(0.0, -k * grid.phi(j)));
  }

  Eigen::MatrixXd values(grid.n_theta(), grid.n_phi());
  parallel_for(static_cast<std::size_t>(grid.n_theta()), threads, [&](std::size_t row) {
    const int i = static_cast<int>(row);
    const PolarizationState magnitudes = coherent_state_closed_form(space, grid.theta(i), 0.0);
    const ComplexVector weighted =
        magnitudes.amplitudes().real().cast<Complex>().cwiseProduct(psi);
    const ComplexVector amps = phases * weighted;
    for (int j = 0; j < grid.n_phi(); ++j) {
      values(i, j) = std::clamp(std::norm(amps(j)), 0.0, 1.0);
    }
  });

  double integral = 0.0;
  for (int i = 0; i < grid.n_theta(); ++i) {
    integral += grid.theta_weight(i) * values.row(i).sum();
  }
  integral *= grid.phi_step() * dim / (4.0 * kPi);
  return {grid, std::move(values), integral};
}

}  // namespace stokes
