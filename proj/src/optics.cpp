#include "stokes/optics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace stokes {

namespace {

double require_ratio(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("VPP transmissivity ratio must be finite and >= 0");
  }
  return t;
}

int require_axis(int axis) {
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("rotation axis must be 1, 2 or 3, got " + std::to_string(axis));
  }
  return axis;
}

}  // namespace

VppResult vpp_filter(const PolarizationState& state, double transmissivity_ratio) {
  const double t = require_ratio(transmissivity_ratio);
  if (t == 1.0) return {state, 1.0};
  const SpinSpace& space = state.space();
  const ComplexVector& in = state.amplitudes();
  ComplexVector out = ComplexVector::Zero(space.dimension());

  if (t == 0.0) {
    for (int k = 0; k < space.dimension(); ++k) {
      if (in(k) != Complex(0.0)) {
        out(k) = in(k);
        break;
      }
    }
  } else {
    // Factor T^{-n}; divide by the largest one (at n = s if T < 1, n = -s otherwise).
    const double s = space.spin();
    const double log_t = std::log(t);
    const double log_max = std::abs(s * log_t);
    for (int k = 0; k < space.dimension(); ++k) {
      out(k) = in(k) * std::exp(-space.magnetic(k) * log_t - log_max);
    }
  }

  const double probability = out.squaredNorm();
  if (!(probability > 0.0)) {
    throw std::invalid_argument("VPP annihilates the state; nothing to renormalize");
  }
  return {PolarizationState::normalized(space, std::move(out)), probability};
}

PolarizationState vpp_apply(const PolarizationState& state, double transmissivity_ratio) {
  return vpp_filter(state, transmissivity_ratio).state;
}

PolarizationState qwp_apply(const PolarizationState& state) {
  const HermitianOperator s2 = stokes_operator(state.space(), StokesAxis::S2);
  return apply_and_normalize(hermitian_exponential(s2, Complex(0.0, std::numbers::pi / 2.0)),
                             state);
}

PolarizationState rotate(const PolarizationState& state, int axis, double angle) {
  const HermitianOperator generator = stokes_operator(state.space(), stokes_axis(require_axis(axis)));
  return apply_and_normalize(hermitian_exponential(generator, Complex(0.0, -angle)), state);
}

PolarizationState rotate_about(const PolarizationState& state, const Vec3& direction,
                               double angle) {
  if (std::abs(direction.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("rotation direction must be a unit vector");
  }
  const HermitianOperator generator = contracted_stokes(state.space(), direction);
  return apply_and_normalize(hermitian_exponential(generator, Complex(0.0, -angle)), state);
}

ElementDescriptor ElementDescriptor::vpp(double transmissivity_ratio) {
  return {ElementKind::VPP, require_ratio(transmissivity_ratio), 0};
}

ElementDescriptor ElementDescriptor::qwp() { return {ElementKind::QWP, 0.0, 0}; }

ElementDescriptor ElementDescriptor::rotation(int axis, double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle must be finite");
  return {ElementKind::Rotation, angle, require_axis(axis)};
}

PolarizationState apply_element(const PolarizationState& state, const ElementDescriptor& element) {
  switch (element.kind) {
    case ElementKind::VPP:
      return vpp_apply(state, element.parameter);
    case ElementKind::QWP:
      return qwp_apply(state);
    case ElementKind::Rotation:
      return rotate(state, element.axis, element.parameter);
  }
  throw std::invalid_argument("unknown optical element");
}

}  // namespace stokes
