#pragma once

#include <optional>
#include <utility>

#include "stokes/spin_core.hpp"

namespace stokes {

inline constexpr double kDegenerateLength = 1e-10;
inline constexpr double kIsotropicTol = 1e-10;

struct MeanPolarization {
  Vec3 components = Vec3::Zero();  // <S1>, <S2>, <S3>
  double length = 0.0;
  double transverse_radius = 0.0;  // sqrt(<S2>^2 + <S3>^2)
};

struct FrameAngles {
  double theta;
  double phi;
};

inline constexpr FrameAngles kDefaultFallbackFrame{1.5707963267948966, 1.5707963267948966};

// Right-handed orthonormal frame with n3 along the mean polarization:
//   n1 = (0, -sin phi, cos phi)
//   n2 = (sin theta, -cos theta cos phi, -cos theta sin phi)
//   n3 = (cos theta, sin theta cos phi, sin theta sin phi)
struct BlochFrame {
  Vec3 n1, n2, n3;
  double theta = 0.0;
  double phi = 0.0;  // in [0, 2pi)
  bool degenerate = false;

  static BlochFrame from_angles(double theta, double phi, bool degenerate = false);
};

// (Delta S_gamma)^2 = [C + A cos 2gamma + B sin 2gamma] / 2 for
// S_gamma = S_n1 cos gamma + S_n2 sin gamma.
struct VarianceEllipse {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  // (pi + atan2(B, A)) / 2, in (0, pi]; 0 when isotropic. The variance is
  // pi-periodic in gamma so only gamma_opt mod pi is meaningful.
  double gamma_opt = 0.0;
  bool isotropic = false;

  double variance_at(double gamma) const;
};

struct ExtremalVariances {
  double v_minus;
  double v_plus;
};

struct SqueezingReport {
  MeanPolarization mean;
  BlochFrame frame;
  VarianceEllipse ellipse;
  double v_minus = 0.0;
  double v_plus = 0.0;
  double xi2 = 0.0;
  // Empty when the mean polarization vanishes (the parameter diverges).
  std::optional<double> zeta2;
  double chi2 = 0.0;
  double qfi = 0.0;
  double snl = 0.0;

  bool zeta2_unbounded() const { return !zeta2.has_value(); }
};

MeanPolarization mean_polarization(const PolarizationState& state);

BlochFrame bloch_frame(const MeanPolarization& mean,
                       std::optional<FrameAngles> fallback = std::nullopt);

VarianceEllipse variance_ellipse(const PolarizationState& state, const BlochFrame& frame);

ExtremalVariances extremal_variances(const VarianceEllipse& ellipse);

SqueezingReport squeezing_report(const PolarizationState& state,
                                 std::optional<FrameAngles> fallback = std::nullopt);

// 4 Var(S . direction); direction must be a unit vector.
double qfi_pure(const PolarizationState& state, const Vec3& direction);

// 10 log10(value); empty unless value > 0.
std::optional<double> to_decibels(double value);

// Closed forms for the QWP-rotated triphoton family.
struct TriphotonAmplitudes {
  double c2;
  double c3;
};
struct TriphotonEllipse {
  double a;
  double c;
};

TriphotonAmplitudes analytic_amplitudes(double transmissivity_ratio);
TriphotonEllipse analytic_ac(double transmissivity_ratio);
ExtremalVariances analytic_variances(double transmissivity_ratio);

}  // namespace stokes
