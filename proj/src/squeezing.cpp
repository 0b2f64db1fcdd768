#include "stokes/squeezing.hpp"

#include <cmath>
#include <numbers>

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this |B| is treated as +0 so atan2 picks a deterministic branch.
constexpr double kCrossTermSnap = 1e-13;

double reduce_two_pi(double angle) {
  double r = std::fmod(angle, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

Complex quadratic_form(const ComplexVector& psi, const ComplexMatrix& m) {
  return psi.dot(m * psi);
}

}  // namespace

BlochFrame BlochFrame::from_angles(double theta, double phi, bool degenerate) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  BlochFrame f;
  f.n1 = Vec3(0.0, -sp, cp);
  f.n2 = Vec3(st, -ct * cp, -ct * sp);
  f.n3 = Vec3(ct, st * cp, st * sp);
  f.theta = theta;
  f.phi = reduce_two_pi(phi);
  f.degenerate = degenerate;
  return f;
}

double VarianceEllipse::variance_at(double gamma) const {
  return 0.5 * (c + a * std::cos(2.0 * gamma) + b * std::sin(2.0 * gamma));
}

MeanPolarization mean_polarization(const PolarizationState& state) {
  const SpinSpace& space = state.space();
  MeanPolarization mean;
  mean.components.x() = expectation(state, stokes_operator(space, StokesAxis::S1));
  // <S2> = Re<S+>, <S3> = Im<S+>.
  const LadderOperator raise = ladder_operator(space, LadderSign::Raise);
  const Complex plus = quadratic_form(state.amplitudes(), raise.matrix());
  mean.components.y() = plus.real();
  mean.components.z() = plus.imag();
  mean.length = mean.components.norm();
  mean.transverse_radius = std::hypot(mean.components.y(), mean.components.z());
  return mean;
}

BlochFrame bloch_frame(const MeanPolarization& mean, std::optional<FrameAngles> fallback) {
  if (mean.length <= kDegenerateLength) {
    const FrameAngles angles = fallback.value_or(kDefaultFallbackFrame);
    return BlochFrame::from_angles(angles.theta, angles.phi, true);
  }
  if (mean.transverse_radius <= kDegenerateLength) {
    // Mean along +-S1: any azimuth works; fix phi = 0.
    return BlochFrame::from_angles(mean.components.x() > 0.0 ? 0.0 : kPi, 0.0);
  }
  const double theta = std::atan2(mean.transverse_radius, mean.components.x());
  const double phi = std::atan2(mean.components.z(), mean.components.y());
  return BlochFrame::from_angles(theta, phi);
}

VarianceEllipse variance_ellipse(const PolarizationState& state, const BlochFrame& frame) {
  const SpinSpace& space = state.space();
  const ComplexMatrix s_n1 = contracted_stokes(space, frame.n1).matrix();
  const ComplexMatrix s_n2 = contracted_stokes(space, frame.n2).matrix();
  const ComplexVector& psi = state.amplitudes();
  const ComplexVector v1 = s_n1 * psi;
  const ComplexVector v2 = s_n2 * psi;

  const double m11 = v1.squaredNorm();
  const double m22 = v2.squaredNorm();
  const double anti = 2.0 * v1.dot(v2).real();  // <S_n1 S_n2 + S_n2 S_n1>

  VarianceEllipse e;
  e.a = m11 - m22;
  e.b = std::abs(anti) < kCrossTermSnap ? 0.0 : anti;
  e.c = m11 + m22;
  e.isotropic = std::hypot(e.a, e.b) < kIsotropicTol;
  e.gamma_opt = e.isotropic ? 0.0 : 0.5 * (kPi + std::atan2(e.b, e.a));
  return e;
}

ExtremalVariances extremal_variances(const VarianceEllipse& ellipse) {
  const double radius = std::hypot(ellipse.a, ellipse.b);
  double v_minus = 0.5 * (ellipse.c - radius);
  const double v_plus = 0.5 * (ellipse.c + radius);
  if (v_minus < 0.0) {
    if (v_minus < -kVarianceClamp * std::max(1.0, ellipse.c)) {
      throw std::logic_error("reduced variance is negative beyond rounding");
    }
    v_minus = 0.0;
  }
  return {v_minus, v_plus};
}

SqueezingReport squeezing_report(const PolarizationState& state,
                                 std::optional<FrameAngles> fallback) {
  const SpinSpace& space = state.space();
  if (space.num_photons() < 1) {
    throw std::invalid_argument("squeezing parameters need at least one photon");
  }
  const double s = space.spin();

  SqueezingReport r;
  r.mean = mean_polarization(state);
  r.frame = bloch_frame(r.mean, fallback);
  r.ellipse = variance_ellipse(state, r.frame);
  const ExtremalVariances v = extremal_variances(r.ellipse);
  r.v_minus = v.v_minus;
  r.v_plus = v.v_plus;
  r.snl = 0.5 * s;
  r.xi2 = 2.0 * r.v_minus / s;
  r.qfi = 4.0 * r.v_plus;
  r.chi2 = space.num_photons() / r.qfi;
  if (r.mean.length > kDegenerateLength) {
    r.zeta2 = 2.0 * s * r.v_minus / (r.mean.length * r.mean.length);
  }
  return r;
}

double qfi_pure(const PolarizationState& state, const Vec3& direction) {
  if (std::abs(direction.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("QFI generator direction must be a unit vector");
  }
  return 4.0 * variance(state, contracted_stokes(state.space(), direction));
}

std::optional<double> to_decibels(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) return std::nullopt;
  return 10.0 * std::log10(value);
}

TriphotonAmplitudes analytic_amplitudes(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("transmissivity ratio T must be >= 0");
  const double t2 = t * t;
  const double root = std::sqrt(3.0 + t2 * t2);
  return {(3.0 - t2) / (2.0 * std::numbers::sqrt2 * root),
          0.5 * std::sqrt(1.5) * (1.0 + t2) / root};
}

TriphotonEllipse analytic_ac(double t) {
  const auto [c2, c3] = analytic_amplitudes(t);
  const double weighted = 9.0 * c3 * c3 + c2 * c2;
  const double cross = 8.0 * std::numbers::sqrt3 * c3 * c2;
  return {15.0 / 8.0 - (3.0 * weighted + cross) / 4.0, 15.0 / 8.0 + (weighted - cross) / 4.0};
}

ExtremalVariances analytic_variances(double t) {
  const auto [c2, c3] = analytic_amplitudes(t);
  const double weighted = 9.0 * c3 * c3 + c2 * c2;
  const double cross = 8.0 * std::numbers::sqrt3 * c3 * c2;
  return {0.25 * (7.5 - (weighted + cross)), 0.5 * weighted};
}

}  // namespace stokes
