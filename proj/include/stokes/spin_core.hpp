#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace stokes {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kVarianceClamp = 1e-12;

// Raised when state/operator/frame objects live on different spin spaces.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fixed-photon-number two-mode space, N = 2s photons.
// Basis index k holds |s, n> with n = s - k, i.e. |N - k, k>_{H,V}.
class SpinSpace {
 public:
  SpinSpace() = default;
  explicit SpinSpace(int num_photons);

  int num_photons() const { return num_photons_; }
  double spin() const { return 0.5 * num_photons_; }
  int dimension() const { return num_photons_ + 1; }

  double magnetic(int index) const { return spin() - index; }
  // Inverse of magnetic(); `twice_n` is 2n so half-integers stay exact.
  int index_of(int twice_n) const;

  // Horizontal/vertical photon counts of basis state `index`.
  int horizontal(int index) const { return num_photons_ - index; }
  int vertical(int index) const { return index; }

  bool operator==(const SpinSpace&) const = default;

 private:
  int num_photons_ = 0;
};

SpinSpace build_spin_space(int num_photons);

void require_same_space(const SpinSpace& a, const SpinSpace& b, const char* what);

// Unit-norm amplitude vector over the |s,n> basis.
class PolarizationState {
 public:
  // Throws unless amplitudes already have unit norm (within kNormTol).
  PolarizationState(SpinSpace space, ComplexVector amplitudes);

  // Rescales to unit norm; throws on an all-zero vector.
  static PolarizationState normalized(SpinSpace space, ComplexVector amplitudes);
  static PolarizationState basis(SpinSpace space, int index);

  const SpinSpace& space() const { return space_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(int index) const { return amplitudes_(index); }

 private:
  SpinSpace space_;
  ComplexVector amplitudes_;
};

Complex overlap(const PolarizationState& bra, const PolarizationState& ket);
// |<a|b>|^2, insensitive to global phase.
double fidelity(const PolarizationState& a, const PolarizationState& b);

class HermitianOperator {
 public:
  // Throws std::invalid_argument on shape mismatch or when the matrix is not
  // Hermitian to kHermitianTol elementwise.
  HermitianOperator(SpinSpace space, ComplexMatrix matrix);

  const SpinSpace& space() const { return space_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator*(double factor) const;

 private:
  SpinSpace space_;
  ComplexMatrix matrix_;
};

enum class LadderSign { Raise, Lower };

class LadderOperator {
 public:
  LadderOperator(SpinSpace space, LadderSign sign, ComplexMatrix matrix);

  const SpinSpace& space() const { return space_; }
  LadderSign sign() const { return sign_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  LadderOperator adjoint() const;

 private:
  SpinSpace space_;
  LadderSign sign_;
  ComplexMatrix matrix_;
};

enum class StokesAxis { S0 = 0, S1 = 1, S2 = 2, S3 = 3 };

StokesAxis stokes_axis(int which);

LadderOperator ladder_operator(const SpinSpace& space, LadderSign sign);
HermitianOperator stokes_operator(const SpinSpace& space, StokesAxis which);

// S1, S2, S3 on one space. S2 and S3 are assembled from the raising matrix so
// a caller can feed in a modified ladder (used by the self-check sabotage hook).
struct StokesSet {
  SpinSpace space;
  std::array<ComplexMatrix, 3> axes;  // S1, S2, S3

  const ComplexMatrix& operator[](int axis) const { return axes.at(axis - 1); }
};

StokesSet make_stokes_set(const SpinSpace& space);
StokesSet stokes_set_from_raising(const SpinSpace& space, const ComplexMatrix& raising);

// S . direction, direction need not be unit length.
HermitianOperator contracted_stokes(const SpinSpace& space, const Vec3& direction);

double expectation(const PolarizationState& state, const HermitianOperator& op);
double variance(const PolarizationState& state, const HermitianOperator& op);

// exp(scale * op). Uses the Hermitian eigendecomposition op = V D V^dagger.
ComplexMatrix hermitian_exponential(const HermitianOperator& op, Complex scale);

// Applies a (generally non-unitary) matrix; the result is renormalized.
PolarizationState apply_and_normalize(const ComplexMatrix& m, const PolarizationState& state);

}  // namespace stokes
