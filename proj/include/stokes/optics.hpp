#pragma once

#include "stokes/spin_core.hpp"

namespace stokes {

struct VppResult {
  PolarizationState state;
  // Squared norm of the filtered vector before renormalization.
  double success_probability;
};

// Variable partial polarizer exp(-S1 ln T): the amplitude of |s,n> picks up
// T^{-n}, then the vector is renormalized. The filter is rescaled so its
// largest factor is 1, which keeps the success probability in (0, 1].
// T = 0 keeps only the largest-n basis state with nonzero amplitude.
VppResult vpp_filter(const PolarizationState& state, double transmissivity_ratio);
PolarizationState vpp_apply(const PolarizationState& state, double transmissivity_ratio);

// exp(i (pi/2) S2).
PolarizationState qwp_apply(const PolarizationState& state);

// exp(-i angle S_axis), axis in {1, 2, 3}.
PolarizationState rotate(const PolarizationState& state, int axis, double angle);

// exp(-i angle S.n) about an arbitrary unit direction.
PolarizationState rotate_about(const PolarizationState& state, const Vec3& direction, double angle);

enum class ElementKind { VPP, QWP, Rotation };

struct ElementDescriptor {
  ElementKind kind;
  double parameter = 0.0;  // T for VPP, angle for Rotation
  int axis = 0;            // Rotation only

  static ElementDescriptor vpp(double transmissivity_ratio);
  static ElementDescriptor qwp();
  static ElementDescriptor rotation(int axis, double angle);
};

PolarizationState apply_element(const PolarizationState& state, const ElementDescriptor& element);

}  // namespace stokes
