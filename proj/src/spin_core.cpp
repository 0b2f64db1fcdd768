#include "stokes/spin_core.hpp"

#include <cmath>
#include <string>

namespace stokes {

using namespace std::complex_literals;

SpinSpace::SpinSpace(int num_photons) : num_photons_(num_photons) {
  if (num_photons < 0) {
    throw std::invalid_argument("photon number must be non-negative, got " +
                                std::to_string(num_photons));
  }
}

int SpinSpace::index_of(int twice_n) const {
  // n = s - k  =>  k = (N - 2n) / 2
  const int diff = num_photons_ - twice_n;
  if (diff < 0 || diff % 2 != 0 || diff / 2 > num_photons_) {
    throw std::invalid_argument("2n = " + std::to_string(twice_n) +
                                " is not a valid magnetic label for N = " +
                                std::to_string(num_photons_));
  }
  return diff / 2;
}

SpinSpace build_spin_space(int num_photons) { return SpinSpace(num_photons); }

void require_same_space(const SpinSpace& a, const SpinSpace& b, const char* what) {
  if (!(a == b)) {
    throw DimensionMismatch(std::string(what) + ": spaces differ (N = " +
                            std::to_string(a.num_photons()) + " vs N = " +
                            std::to_string(b.num_photons()) + ")");
  }
}

PolarizationState::PolarizationState(SpinSpace space, ComplexVector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.dimension()) {
    throw DimensionMismatch("amplitude vector length " + std::to_string(amplitudes_.size()) +
                            " does not match dimension " +
                            std::to_string(space_.dimension()));
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw std::invalid_argument("state is not normalized (norm = " + std::to_string(norm) + ")");
  }
}

PolarizationState PolarizationState::normalized(SpinSpace space, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite amplitude vector");
  }
  amplitudes /= norm;
  return PolarizationState(space, std::move(amplitudes));
}

PolarizationState PolarizationState::basis(SpinSpace space, int index) {
  if (index < 0 || index >= space.dimension()) {
    throw std::out_of_range("basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(space.dimension());
  v(index) = 1.0;
  return PolarizationState(space, std::move(v));
}

Complex overlap(const PolarizationState& bra, const PolarizationState& ket) {
  require_same_space(bra.space(), ket.space(), "overlap");
  return bra.amplitudes().dot(ket.amplitudes());  // Eigen conjugates the left operand
}

double fidelity(const PolarizationState& a, const PolarizationState& b) {
  return std::norm(overlap(a, b));
}

HermitianOperator::HermitianOperator(SpinSpace space, ComplexMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
  const int d = space_.dimension();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionMismatch("operator shape does not match space dimension");
  }
  const double defect = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianTol) {
    throw std::invalid_argument("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  require_same_space(space_, other.space_, "operator sum");
  return HermitianOperator(space_, matrix_ + other.matrix_);
}

HermitianOperator HermitianOperator::operator*(double factor) const {
  return HermitianOperator(space_, matrix_ * factor);
}

LadderOperator::LadderOperator(SpinSpace space, LadderSign sign, ComplexMatrix matrix)
    : space_(space), sign_(sign), matrix_(std::move(matrix)) {
  const int d = space_.dimension();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionMismatch("ladder shape does not match space dimension");
  }
}

LadderOperator LadderOperator::adjoint() const {
  return LadderOperator(space_, sign_ == LadderSign::Raise ? LadderSign::Lower : LadderSign::Raise,
                        matrix_.adjoint());
}

StokesAxis stokes_axis(int which) {
  if (which < 0 || which > 3) {
    throw std::invalid_argument("Stokes axis must be 0..3, got " + std::to_string(which));
  }
  return static_cast<StokesAxis>(which);
}

LadderOperator ladder_operator(const SpinSpace& space, LadderSign sign) {
  const int d = space.dimension();
  const double s = space.spin();
  ComplexMatrix raise = ComplexMatrix::Zero(d, d);
  // S+ |s,n> = sqrt((s - n)(s + n + 1)) |s,n+1>; n+1 sits one index lower.
  for (int k = 1; k < d; ++k) {
    const double n = space.magnetic(k);
    raise(k - 1, k) = std::sqrt((s - n) * (s + n + 1.0));
  }
  if (sign == LadderSign::Raise) return LadderOperator(space, sign, std::move(raise));
  return LadderOperator(space, sign, raise.adjoint());
}

StokesSet stokes_set_from_raising(const SpinSpace& space, const ComplexMatrix& raising) {
  const int d = space.dimension();
  StokesSet set{space, {}};
  ComplexMatrix s1 = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) s1(k, k) = space.magnetic(k);
  const ComplexMatrix lowering = raising.adjoint();
  set.axes[0] = std::move(s1);
  set.axes[1] = (raising + lowering) / 2.0;
  set.axes[2] = (raising - lowering) / (2.0i);
  return set;
}

StokesSet make_stokes_set(const SpinSpace& space) {
  return stokes_set_from_raising(space, ladder_operator(space, LadderSign::Raise).matrix());
}

HermitianOperator stokes_operator(const SpinSpace& space, StokesAxis which) {
  if (which == StokesAxis::S0) {
    const int d = space.dimension();
    return HermitianOperator(space, ComplexMatrix::Identity(d, d) * space.spin());
  }
  StokesSet set = make_stokes_set(space);
  return HermitianOperator(space, std::move(set.axes[static_cast<int>(which) - 1]));
}

HermitianOperator contracted_stokes(const SpinSpace& space, const Vec3& direction) {
  const StokesSet set = make_stokes_set(space);
  ComplexMatrix m = direction.x() * set[1] + direction.y() * set[2] + direction.z() * set[3];
  // Contraction with real coefficients keeps Hermiticity up to rounding; symmetrize.
  ComplexMatrix h = (m + m.adjoint()) / 2.0;
  return HermitianOperator(space, std::move(h));
}

double expectation(const PolarizationState& state, const HermitianOperator& op) {
  require_same_space(state.space(), op.space(), "expectation");
  const Complex value = state.amplitudes().dot(op.matrix() * state.amplitudes());
  const double scale = std::max(1.0, op.matrix().cwiseAbs().maxCoeff());
  if (std::abs(value.imag()) > kHermitianTol * scale) {
    throw std::logic_error("expectation of Hermitian operator has imaginary part " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

double variance(const PolarizationState& state, const HermitianOperator& op) {
  require_same_space(state.space(), op.space(), "variance");
  const ComplexVector applied = op.matrix() * state.amplitudes();
  const double mean = expectation(state, op);
  const double v = applied.squaredNorm() - mean * mean;
  if (v >= 0.0) return v;
  const double scale = std::max(1.0, mean * mean);
  if (v >= -kVarianceClamp * scale) return 0.0;
  throw std::logic_error("variance is negative beyond rounding: " + std::to_string(v));
}

ComplexMatrix hermitian_exponential(const HermitianOperator& op, Complex scale) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  const ComplexMatrix& vectors = solver.eigenvectors();
  ComplexVector phases(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    phases(i) = std::exp(scale * eigenvalues(i));
  }
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

PolarizationState apply_and_normalize(const ComplexMatrix& m, const PolarizationState& state) {
  if (m.rows() != state.space().dimension() || m.cols() != state.space().dimension()) {
    throw DimensionMismatch("matrix shape does not match state dimension");
  }
  return PolarizationState::normalized(state.space(), m * state.amplitudes());
}

}  // namespace stokes
