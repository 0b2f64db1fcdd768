#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stokes/husimi.hpp"
#include "stokes/squeezing.hpp"

namespace stokes {

struct SweepRecord {
  double t = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  Vec3 mean = Vec3::Zero();
  double v_minus = 0.0;
  double v_plus = 0.0;
  double xi2 = 0.0;
  double chi2 = 0.0;
  std::optional<double> zeta2;
  std::optional<double> xi2_db;
  std::optional<double> chi2_db;
  double vpp_success_probability = 0.0;

  bool zeta2_unbounded() const { return !zeta2.has_value(); }
};

struct SweepRange {
  double t_min = 0.0;
  double t_max = 1.8;
  int steps = 181;
};

// Uniform inclusive samples, plus T = 1 and T = sqrt(3) when they fall in
// range. Sorted ascending, exact duplicates removed.
std::vector<double> sweep_samples(const SweepRange& range);

// Full pipeline for one T: VPP on the (a_H^2 - a_V^2) a_H seed, QWP, report.
SweepRecord sweep_record(double t);

std::vector<SweepRecord> run_sweep(const SweepRange& range, unsigned threads = 1);

// 12 significant digits; -0 prints as 0.
std::string format_real(double value);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_sweep_json(std::ostream& out, const SweepRange& range,
                      const std::vector<SweepRecord>& records);

void write_qgrid_csv(std::ostream& out, const QGrid& grid);
// Binary P5, rows = theta samples, columns = phi samples, [0, max Q] -> [0, 255].
void write_qgrid_pgm(std::ostream& out, const QGrid& grid);

// Worker count from STOKES_SQUEEZE_THREADS, defaulting to 1. Throws on a
// value that is not a positive integer.
unsigned threads_from_env();

}  // namespace stokes
