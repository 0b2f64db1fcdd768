#pragma once

#include <vector>

#include "stokes/spin_core.hpp"

namespace stokes {

// Transmissivity ratio T = T_V / T_H of the variable partial polarizer.
class TriphotonParams {
 public:
  explicit TriphotonParams(double transmissivity_ratio);
  double transmissivity_ratio() const { return ratio_; }

 private:
  double ratio_;
};

// N-photon NOON state (|N,0> + e^{i phase}|0,N>)/sqrt(2). The phase is
// stored reduced to [0, 2pi).
class NoonParams {
 public:
  NoonParams(int num_photons, double noon_phase);
  int num_photons() const { return num_photons_; }
  double noon_phase() const { return phase_; }

 private:
  int num_photons_;
  double phase_;
};

struct FockTerm {
  int horizontal;
  int vertical;
  Complex amplitude;
};

inline constexpr int kTriphotonPhotons = 3;

// exp(i theta (S2 sin phi - S3 cos phi)) |s,s>, via the matrix exponential.
PolarizationState coherent_state(const SpinSpace& space, double theta, double phi);

// Binomial expansion of the same state:
// <s,n|theta,phi> = sqrt(C(2s, s-n)) cos^{s+n}(theta/2) sin^{s-n}(theta/2) e^{i(s-n)phi}.
PolarizationState coherent_state_closed_form(const SpinSpace& space, double theta, double phi);

// Normalized sqrt(3)|3/2,3/2> - T^2 |3/2,-1/2>, the VPP output for the
// (a_H^2 - a_V^2) a_H seed. T = 0 is the analytic limit |3/2,3/2>.
PolarizationState triphoton_raw(const TriphotonParams& params);

// c2 (i|2,1> - |1,2>) + c3 (|3,0> - i|0,3>) with closed-form c2, c3.
PolarizationState triphoton_state(const TriphotonParams& params);

PolarizationState noon_state(const NoonParams& params);

// Terms given as (m_H, n_V, amplitude) with m_H + n_V = N.
PolarizationState fock_superposition(const SpinSpace& space, const std::vector<FockTerm>& terms);

}  // namespace stokes
