#include "stokes/squeezing.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "stokes/optics.hpp"
#include "stokes/state_factory.hpp"

using namespace stokes;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::numbers::sqrt3;

PolarizationState triphoton(double t) { return triphoton_state(TriphotonParams(t)); }

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

void expect_vec_near(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), tol) << a.transpose() << " vs " << b.transpose();
}

}  // namespace

TEST(mean_polarization, landmarks) {
  const MeanPolarization m0 = mean_polarization(triphoton(0.0));
  expect_vec_near(m0.components, Vec3(0, 0, 1.5), 1e-12);
  EXPECT_NEAR(m0.length, 1.5, 1e-12);

  for (int n = 2; n <= 8; ++n) {
    EXPECT_LT(mean_polarization(noon_state(NoonParams(n, 0.3))).length, 1e-12);
  }

  const PolarizationState late = triphoton(1.8);
  const auto ops = oracle::bosonic_stokes(3);
  const double z = late.amplitudes().dot(ops[2] * late.amplitudes()).real();
  const MeanPolarization m = mean_polarization(late);
  EXPECT_LT(z, 0.0);
  expect_vec_near(m.components, Vec3(0, 0, z), 1e-12);
}

TEST(mean_polarization, invariants_on_random_states) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const SpinSpace space(1 + trial % 8);
    const MeanPolarization m = mean_polarization(oracle::random_state(space, rng));
    EXPECT_NEAR(m.length * m.length, m.components.squaredNorm(), 1e-12);
    EXPECT_LE(m.length, space.spin() + 1e-12);
    EXPECT_LE(m.transverse_radius, m.length + 1e-12);
  }
}

TEST(bloch_frame, equatorial_pole_and_degenerate_cases) {
  MeanPolarization eq;
  eq.components = Vec3(0, 0, 1.5);
  eq.length = 1.5;
  eq.transverse_radius = 1.5;
  const BlochFrame f = bloch_frame(eq);
  EXPECT_NEAR(f.theta, kPi / 2, 1e-15);
  EXPECT_NEAR(f.phi, kPi / 2, 1e-15);
  EXPECT_FALSE(f.degenerate);
  expect_vec_near(f.n1, Vec3(0, -1, 0), 1e-15);
  expect_vec_near(f.n2, Vec3(1, 0, 0), 1e-15);
  expect_vec_near(f.n3, Vec3(0, 0, 1), 1e-15);

  MeanPolarization pole;
  pole.components = Vec3(1.5, 0, 0);
  pole.length = 1.5;
  const BlochFrame p = bloch_frame(pole);
  EXPECT_EQ(p.theta, 0.0);
  EXPECT_EQ(p.phi, 0.0);
  expect_vec_near(p.n3, Vec3(1, 0, 0), 1e-15);

  pole.components = Vec3(-1.0, 0, 0);
  pole.length = 1.0;
  expect_vec_near(bloch_frame(pole).n3, Vec3(-1, 0, 0), 1e-15);

  const BlochFrame d = bloch_frame(MeanPolarization{});
  EXPECT_TRUE(d.degenerate);
  EXPECT_NEAR(d.theta, kPi / 2, 1e-15);
  EXPECT_NEAR(d.phi, kPi / 2, 1e-15);
  const BlochFrame custom = bloch_frame(MeanPolarization{}, FrameAngles{0.3, 1.1});
  EXPECT_TRUE(custom.degenerate);
  EXPECT_DOUBLE_EQ(custom.theta, 0.3);
}

TEST(bloch_frame, right_handed_and_aligned_on_random_states) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const MeanPolarization m = mean_polarization(oracle::random_state(SpinSpace(1 + trial % 6), rng));
    const BlochFrame f = bloch_frame(m);
    EXPECT_LT(std::abs(f.n1.dot(f.n2)), 1e-12);
    EXPECT_LT(std::abs(f.n1.dot(f.n3)), 1e-12);
    EXPECT_LT(std::abs(f.n2.dot(f.n3)), 1e-12);
    EXPECT_NEAR(f.n1.norm(), 1.0, 1e-12);
    EXPECT_NEAR(f.n2.norm(), 1.0, 1e-12);
    EXPECT_NEAR(f.n3.norm(), 1.0, 1e-12);
    expect_vec_near(f.n1.cross(f.n2), f.n3, 1e-12);
    ASSERT_FALSE(f.degenerate);
    const double angle = std::atan2(f.n3.cross(m.components).norm(), f.n3.dot(m.components));
    EXPECT_LT(angle, 1e-10);
  }
}

TEST(variance_ellipse, triphoton_values) {
  const PolarizationState one = triphoton(1.0);
  const VarianceEllipse e1 = variance_ellipse(one, bloch_frame(mean_polarization(one)));
  EXPECT_NEAR(e1.a, -1.5, 1e-12);
  EXPECT_NEAR(e1.b, 0.0, 1e-12);
  EXPECT_NEAR(e1.c, 2.0, 1e-12);
  EXPECT_FALSE(e1.isotropic);
  EXPECT_NEAR(e1.gamma_opt, kPi, 1e-12);

  const PolarizationState zero = triphoton(0.0);
  const VarianceEllipse e0 = variance_ellipse(zero, bloch_frame(mean_polarization(zero)));
  EXPECT_NEAR(e0.a, 0.0, 1e-12);
  EXPECT_NEAR(e0.b, 0.0, 1e-12);
  EXPECT_NEAR(e0.c, 1.5, 1e-12);
  EXPECT_TRUE(e0.isotropic);
}

TEST(extremal_variances, worked_examples) {
  const ExtremalVariances v = extremal_variances({-1.5, 0.0, 2.0, kPi, false});
  EXPECT_DOUBLE_EQ(v.v_minus, 0.25);
  EXPECT_DOUBLE_EQ(v.v_plus, 1.75);
  const ExtremalVariances iso = extremal_variances({0.0, 0.0, 1.5, 0.0, true});
  EXPECT_DOUBLE_EQ(iso.v_minus, 0.75);
  EXPECT_DOUBLE_EQ(iso.v_plus, 0.75);

  const SqueezingReport noon = squeezing_report(triphoton(kSqrt3));
  EXPECT_NEAR(noon.v_minus, 0.75, 1e-12);
  EXPECT_NEAR(noon.v_plus, 2.25, 1e-12);
}

TEST(squeezing_report, triphoton_landmarks) {
  const SqueezingReport r0 = squeezing_report(triphoton(0.0));
  EXPECT_NEAR(r0.xi2, 1.0, 1e-12);
  ASSERT_TRUE(r0.zeta2.has_value());
  EXPECT_NEAR(*r0.zeta2, 1.0, 1e-12);
  EXPECT_NEAR(r0.chi2, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r0.snl, 0.75);

  const SqueezingReport r1 = squeezing_report(triphoton(1.0));
  EXPECT_NEAR(r1.xi2, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(*to_decibels(r1.xi2), -4.771212547, 1e-9);
  EXPECT_NEAR(r1.chi2, 3.0 / 7.0, 1e-12);

  const SqueezingReport rn = squeezing_report(triphoton(kSqrt3));
  EXPECT_NEAR(rn.xi2, 1.0, 1e-12);
  EXPECT_NEAR(rn.chi2, 1.0 / 3.0, 1e-12);
  EXPECT_TRUE(rn.zeta2_unbounded());
  EXPECT_TRUE(rn.frame.degenerate);
}

TEST(squeezing_report, invariants_on_random_states) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    const SpinSpace space(1 + trial % 8);
    const SqueezingReport r = squeezing_report(oracle::random_state(space, rng));
    const double s = space.spin();
    EXPECT_LE(r.v_minus, r.v_plus);
    EXPECT_GE(r.v_minus * r.v_plus, 0.25 * r.mean.length * r.mean.length - 1e-10);
    EXPECT_GE(r.ellipse.c, std::hypot(r.ellipse.a, r.ellipse.b) - 1e-12);
    EXPECT_EQ(r.ellipse.isotropic, std::hypot(r.ellipse.a, r.ellipse.b) < 1e-10);
    EXPECT_NEAR(r.xi2, 2 * r.v_minus / s, 1e-14);
    EXPECT_NEAR(r.qfi, 4 * r.v_plus, 1e-14);
    EXPECT_NEAR(r.chi2, s / (2 * r.v_plus), 1e-12);
    EXPECT_NEAR(r.chi2, space.num_photons() / r.qfi, 1e-12);
    ASSERT_TRUE(r.zeta2.has_value());
    EXPECT_NEAR(*r.zeta2, std::pow(s / r.mean.length, 2) * r.xi2, 1e-9 * *r.zeta2);
  }
  EXPECT_THROW(squeezing_report(PolarizationState::basis(SpinSpace(0), 0)), std::invalid_argument);
}

TEST(squeezing_report, gamma_scan_optimality) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const PolarizationState psi = oracle::random_state(SpinSpace(1 + trial % 6), rng);
    const SqueezingReport r = squeezing_report(psi);
    const oracle::ScanResult scan = oracle::gamma_scan(psi, r.frame);
    EXPECT_NEAR(scan.min_value, r.v_minus, 1e-10);
    EXPECT_NEAR(scan.max_value, r.v_plus, 1e-10);
    // Spin-1/2 pure states are coherent, so N = 1 draws are isotropic.
    if (!r.ellipse.isotropic) {
      EXPECT_LT(oracle::circular_distance(scan.argmin, r.ellipse.gamma_opt, kPi), 1e-6);
    }
    EXPECT_NEAR(r.ellipse.variance_at(r.ellipse.gamma_opt), r.v_minus, 1e-12);
  }
}

TEST(squeezing_report, rotation_about_mean_axis_is_invariant) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const PolarizationState psi = oracle::random_state(SpinSpace(1 + trial % 6), rng);
    const SqueezingReport r = squeezing_report(psi);
    const SqueezingReport turned = squeezing_report(rotate_about(psi, r.frame.n3, angle(rng)));
    EXPECT_NEAR(turned.v_minus, r.v_minus, 1e-10);
    EXPECT_NEAR(turned.v_plus, r.v_plus, 1e-10);
    EXPECT_NEAR(turned.xi2, r.xi2, 1e-10);
    EXPECT_NEAR(turned.chi2, r.chi2, 1e-10);
  }
  for (double t : {0.4, 1.0, 1.5}) {
    const SqueezingReport r = squeezing_report(triphoton(t));
    const SqueezingReport turned = squeezing_report(rotate(triphoton(t), 3, 0.7));
    EXPECT_NEAR(turned.v_minus, r.v_minus, 1e-10);
    EXPECT_NEAR(turned.v_plus, r.v_plus, 1e-10);
  }
}

TEST(qfi_pure, examples) {
  EXPECT_NEAR(qfi_pure(noon_state(NoonParams(3, -kPi / 2)), Vec3(1, 0, 0)), 9.0, 1e-12);
  const PolarizationState c = coherent_state(SpinSpace(5), 1.1, 0.4);
  const BlochFrame f = BlochFrame::from_angles(1.1, 0.4);
  for (double g : {0.0, 0.9, 2.2}) {
    EXPECT_NEAR(qfi_pure(c, std::cos(g) * f.n1 + std::sin(g) * f.n2), 5.0, 1e-10);
  }
  EXPECT_NEAR(qfi_pure(triphoton(1.0), Vec3(1, 0, 0)), 7.0, 1e-12);
  EXPECT_THROW(qfi_pure(c, Vec3(1, 1, 0)), std::invalid_argument);
}

TEST(analytic, closed_form_values) {
  const auto [a1, c1] = analytic_ac(1.0);
  EXPECT_NEAR(a1, -1.5, 1e-14);
  EXPECT_NEAR(c1, 2.0, 1e-14);
  const auto [a0, c0] = analytic_ac(0.0);
  EXPECT_NEAR(a0, 0.0, 1e-14);
  EXPECT_NEAR(c0, 1.5, 1e-14);
  const auto [an, cn] = analytic_ac(kSqrt3);
  EXPECT_NEAR(an, -1.5, 1e-14);
  EXPECT_NEAR(cn, 3.0, 1e-14);

  const ExtremalVariances v1 = analytic_variances(1.0);
  EXPECT_NEAR(v1.v_minus, 0.25, 1e-14);
  EXPECT_NEAR(v1.v_plus, 1.75, 1e-14);
  const ExtremalVariances v0 = analytic_variances(0.0);
  EXPECT_NEAR(v0.v_minus, 0.75, 1e-14);
  EXPECT_NEAR(v0.v_plus, 0.75, 1e-14);
  const ExtremalVariances vn = analytic_variances(kSqrt3);
  EXPECT_NEAR(vn.v_minus, 0.75, 1e-14);
  EXPECT_NEAR(vn.v_plus, 2.25, 1e-14);

  const auto [c2, c3] = analytic_amplitudes(0.0);
  EXPECT_NEAR(c3, c2 / kSqrt3, 1e-15);
  EXPECT_THROW(analytic_amplitudes(-1.0), std::invalid_argument);
}

TEST(analytic, agrees_with_matrix_pipeline) {
  for (double t : linspace(0.0, 1.8, 200)) {
    const SqueezingReport r = squeezing_report(triphoton(t));
    const auto [a, c] = analytic_ac(t);
    const ExtremalVariances v = analytic_variances(t);
    EXPECT_NEAR(a, r.ellipse.a, 1e-10) << "T=" << t;
    EXPECT_NEAR(c, r.ellipse.c, 1e-10) << "T=" << t;
    EXPECT_NEAR(r.ellipse.b, 0.0, 1e-10);
    EXPECT_NEAR(v.v_minus, r.v_minus, 1e-10) << "T=" << t;
    EXPECT_NEAR(v.v_plus, r.v_plus, 1e-10) << "T=" << t;
    if (!r.ellipse.isotropic) EXPECT_NEAR(r.ellipse.gamma_opt, kPi, 1e-12) << "T=" << t;
  }
}

TEST(family, trends_over_transmissivity) {
  double previous_chi2 = 2.0;
  for (double t : linspace(0.0, kSqrt3, 200)) {
    const double chi2 = squeezing_report(triphoton(t)).chi2;
    EXPECT_LE(chi2, previous_chi2 + 1e-15);
    previous_chi2 = chi2;
  }

  const auto grid = linspace(0.0, 1.8, 181);
  std::size_t best = 0;
  std::vector<double> xi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    xi[i] = squeezing_report(triphoton(grid[i])).xi2;
    if (xi[i] < xi[best]) best = i;
  }
  EXPECT_EQ(grid[best], 1.0);
  EXPECT_NEAR(xi[best], 1.0 / 3.0, 1e-10);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i != best) EXPECT_GT(xi[i], xi[best]);
  }

  for (double t : linspace(0.0, 1.8, 200)) {
    const MeanPolarization m = mean_polarization(triphoton(t));
    EXPECT_LT(std::abs(m.components.x()), 1e-12);
    EXPECT_LT(std::abs(m.components.y()), 1e-12);
    if (t < kSqrt3) EXPECT_GT(m.components.z(), 0.0);
    if (t > kSqrt3) EXPECT_LT(m.components.z(), 0.0);
  }
  EXPECT_LT(std::abs(mean_polarization(triphoton(kSqrt3)).components.z()), 1e-12);
}

TEST(family, noon_heisenberg_limit) {
  for (int n = 1; n <= 8; ++n) {
    const SqueezingReport r = squeezing_report(noon_state(NoonParams(n, -kPi / 2)));
    const double s = 0.5 * n;
    EXPECT_NEAR(r.chi2, 1.0 / n, 1e-12);
    EXPECT_NEAR(r.v_plus, s * s, 1e-12);
    EXPECT_NEAR(r.v_minus, s / 2, 1e-12);
    EXPECT_NEAR(r.xi2, 1.0, 1e-12);
  }
}
