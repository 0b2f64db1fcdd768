#include "stokes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "stokes/husimi.hpp"
#include "stokes/optics.hpp"
#include "stokes/squeezing.hpp"
#include "stokes/state_factory.hpp"

namespace stokes {

namespace {

using namespace std::complex_literals;

constexpr double kPi = std::numbers::pi;
constexpr int kMaxAlgebraPhotons = 12;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckResult bounded(std::string name, double error, double tolerance) {
  return {std::move(name), error < tolerance,
          "max error " + sci(error) + " (tolerance " + sci(tolerance) + ")"};
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

StokesSet algebra_set(int n, double perturbation) {
  const SpinSpace space(n);
  ComplexMatrix raise = ladder_operator(space, LadderSign::Raise).matrix();
  if (space.dimension() > 1) raise(0, 1) += perturbation;
  return stokes_set_from_raising(space, raise);
}

PolarizationState random_state(const SpinSpace& space, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexVector v(space.dimension());
  for (auto& x : v) x = Complex(gauss(rng), gauss(rng));
  return PolarizationState::normalized(space, std::move(v));
}

std::vector<double> grid(double lo, double hi, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) xs[i] = lo + (hi - lo) * i / (count - 1);
  return xs;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out;

  {
    double err = 0.0;
    for (int n = 0; n <= kMaxAlgebraPhotons; ++n) {
      const StokesSet set = algebra_set(n, options.ladder_perturbation);
      for (auto [i, j, k] : {std::array{1, 2, 3}, std::array{2, 3, 1}, std::array{3, 1, 2}}) {
        const ComplexMatrix comm = set[i] * set[j] - set[j] * set[i] - 1.0i * set[k];
        err = std::max(err, max_abs(comm));
      }
    }
    out.push_back(bounded("su2 commutators, N <= 12", err, 1e-12));
  }
  {
    double err = 0.0;
    for (int n = 0; n <= kMaxAlgebraPhotons; ++n) {
      const StokesSet set = algebra_set(n, options.ladder_perturbation);
      const double s = 0.5 * n;
      const ComplexMatrix casimir = set[1] * set[1] + set[2] * set[2] + set[3] * set[3] -
                                    s * (s + 1.0) * ComplexMatrix::Identity(n + 1, n + 1);
      err = std::max(err, max_abs(casimir));
    }
    out.push_back(bounded("casimir s(s+1), N <= 12", err, 1e-12));
  }
  {
    std::mt19937_64 rng(20090101);
    double err = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const SpinSpace space(1 + trial % 8);
      const PolarizationState psi = random_state(space, rng);
      const SqueezingReport r = squeezing_report(psi);
      const double bound = 0.25 * r.mean.length * r.mean.length;
      err = std::max(err, bound - r.v_minus * r.v_plus);
    }
    out.push_back({"uncertainty bound V- V+ >= |<S>|^2/4 on 1000 random states", err < 1e-10,
                   "worst violation " + sci(err)});
  }
  {
    double err = 0.0;
    for (double t : grid(0.0, 1.8, 200)) {
      const SqueezingReport r = squeezing_report(triphoton_state(TriphotonParams(t)));
      const TriphotonEllipse ac = analytic_ac(t);
      const ExtremalVariances v = analytic_variances(t);
      err = std::max({err, std::abs(ac.a - r.ellipse.a), std::abs(ac.c - r.ellipse.c),
                      std::abs(r.ellipse.b), std::abs(v.v_minus - r.v_minus),
                      std::abs(v.v_plus - r.v_plus)});
    }
    out.push_back(bounded("closed-form A, C, V+- vs matrix pipeline, 200 T", err, 1e-10));
  }
  {
    double worst = 0.0;
    for (double t : grid(0.0, 1.8, 50)) {
      const double f =
          fidelity(qwp_apply(triphoton_raw(TriphotonParams(t))), triphoton_state(TriphotonParams(t)));
      worst = std::max(worst, 1.0 - f);
    }
    out.push_back(bounded("QWP of VPP output matches closed-form amplitudes, 50 T", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int n : {1, 2, 3, 6}) {
      const SpinSpace space(n);
      for (double theta : grid(0.0, kPi, 20)) {
        for (double phi : grid(0.0, 2.0 * kPi, 20)) {
          worst = std::max(worst, 1.0 - fidelity(coherent_state(space, theta, phi),
                                                 coherent_state_closed_form(space, theta, phi)));
        }
      }
    }
    out.push_back(bounded("coherent state: exponential vs binomial form", worst, 1e-12));
  }
  {
    const SqueezingReport r0 = squeezing_report(triphoton_state(TriphotonParams(0.0)));
    const SqueezingReport r1 = squeezing_report(triphoton_state(TriphotonParams(1.0)));
    const SqueezingReport rn = squeezing_report(triphoton_state(TriphotonParams(std::numbers::sqrt3)));
    const double err = std::max({std::abs(r0.xi2 - 1.0), std::abs(r0.chi2 - 1.0),
                                 std::abs(r0.zeta2.value_or(0.0) - 1.0),
                                 std::abs(r1.xi2 - 1.0 / 3.0), std::abs(r1.chi2 - 3.0 / 7.0),
                                 std::abs(rn.xi2 - 1.0), std::abs(rn.chi2 - 1.0 / 3.0)});
    out.push_back({"triphoton landmarks T = 0, 1, sqrt(3)", err < 1e-10 && rn.zeta2_unbounded(),
                   "max error " + sci(err)});
  }
  {
    double err = 0.0;
    for (int n = 1; n <= 8; ++n) {
      const SqueezingReport r = squeezing_report(noon_state(NoonParams(n, -kPi / 2.0)));
      err = std::max(err, std::abs(r.chi2 - 1.0 / n));
    }
    out.push_back(bounded("NOON chi^2 = 1/N, N = 1..8", err, 1e-12));
  }
  {
    std::mt19937_64 rng(4242);
    double err = 0.0;
    const SphereGrid sphere(256, 256, GridScheme::Midpoint);
    for (int n = 1; n <= 8; ++n) {
      const QGrid q = q_grid(random_state(SpinSpace(n), rng), sphere);
      err = std::max(err, std::abs(q.normalization_estimate - 1.0));
    }
    out.push_back(bounded("Husimi Q normalization, s <= 4", err, 1e-6));
  }
  return out;
}

bool print_verification(std::ostream& out, const std::vector<CheckResult>& results) {
  bool all = true;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  out << (all ? "all checks passed" : "verification FAILED") << '\n';
  return all;
}

}  // namespace stokes
