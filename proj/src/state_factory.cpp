#include "stokes/state_factory.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>

#include "stokes/squeezing.hpp"

namespace stokes {

using namespace std::complex_literals;

TriphotonParams::TriphotonParams(double transmissivity_ratio) : ratio_(transmissivity_ratio) {
  if (!(transmissivity_ratio >= 0.0) || !std::isfinite(transmissivity_ratio)) {
    throw std::invalid_argument("transmissivity ratio T must be finite and >= 0");
  }
}

NoonParams::NoonParams(int num_photons, double noon_phase) : num_photons_(num_photons) {
  if (num_photons < 1) {
    throw std::invalid_argument("NOON state needs N >= 1, got " + std::to_string(num_photons));
  }
  if (!std::isfinite(noon_phase)) throw std::invalid_argument("NOON phase must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  phase_ = std::fmod(noon_phase, two_pi);
  if (phase_ < 0.0) phase_ += two_pi;
  if (phase_ >= two_pi) phase_ = 0.0;
}

PolarizationState coherent_state(const SpinSpace& space, double theta, double phi) {
  const StokesSet set = make_stokes_set(space);
  const ComplexMatrix gen = set[2] * std::sin(phi) - set[3] * std::cos(phi);
  const HermitianOperator generator(space, (gen + gen.adjoint()) / 2.0);
  const ComplexMatrix rotation = hermitian_exponential(generator, Complex(0.0, theta));
  return apply_and_normalize(rotation, PolarizationState::basis(space, 0));
}

PolarizationState coherent_state_closed_form(const SpinSpace& space, double theta, double phi) {
  const int n_photons = space.num_photons();
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  ComplexVector amps(space.dimension());
  for (int k = 0; k < space.dimension(); ++k) {
    // k = s - n vertical photons; binomial weight C(N, k).
    const double log_binom = std::lgamma(n_photons + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n_photons - k + 1.0);
    const double magnitude =
        std::sqrt(std::exp(log_binom)) * std::pow(c, n_photons - k) * std::pow(s, k);
    amps(k) = magnitude * std::exp(Complex(0.0, k * phi));
  }
  return PolarizationState::normalized(space, std::move(amps));
}

PolarizationState triphoton_raw(const TriphotonParams& params) {
  const SpinSpace space(kTriphotonPhotons);
  const double t = params.transmissivity_ratio();
  ComplexVector amps = ComplexVector::Zero(space.dimension());
  amps(space.index_of(3)) = std::sqrt(3.0);
  amps(space.index_of(-1)) = -t * t;
  return PolarizationState::normalized(space, std::move(amps));
}

PolarizationState triphoton_state(const TriphotonParams& params) {
  const auto [c2, c3] = analytic_amplitudes(params.transmissivity_ratio());
  // Index k holds |3-k, k>_{H,V}.
  return fock_superposition(SpinSpace(kTriphotonPhotons), {{3, 0, c3},
                                                           {2, 1, 1.0i * c2},
                                                           {1, 2, -c2},
                                                           {0, 3, -1.0i * c3}});
}

PolarizationState noon_state(const NoonParams& params) {
  const SpinSpace space(params.num_photons());
  const double amp = 1.0 / std::numbers::sqrt2;
  ComplexVector amps = ComplexVector::Zero(space.dimension());
  amps(0) = amp;
  amps(space.dimension() - 1) = amp * std::exp(Complex(0.0, params.noon_phase()));
  return PolarizationState::normalized(space, std::move(amps));
}

PolarizationState fock_superposition(const SpinSpace& space, const std::vector<FockTerm>& terms) {
  ComplexVector amps = ComplexVector::Zero(space.dimension());
  std::set<std::pair<int, int>> seen;
  for (const FockTerm& term : terms) {
    if (term.horizontal < 0 || term.vertical < 0 ||
        term.horizontal + term.vertical != space.num_photons()) {
      throw std::invalid_argument("Fock term |" + std::to_string(term.horizontal) + "," +
                                  std::to_string(term.vertical) + "> does not carry N = " +
                                  std::to_string(space.num_photons()) + " photons");
    }
    if (!seen.emplace(term.horizontal, term.vertical).second) {
      throw std::invalid_argument("duplicate Fock term |" + std::to_string(term.horizontal) + "," +
                                  std::to_string(term.vertical) + ">");
    }
    amps(space.index_of(term.horizontal - term.vertical)) = term.amplitude;
  }
  if (amps.norm() == 0.0) throw std::invalid_argument("all Fock amplitudes are zero");
  return PolarizationState::normalized(space, std::move(amps));
}

}  // namespace stokes
