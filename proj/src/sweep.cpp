#include "stokes/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "stokes/optics.hpp"
#include "stokes/parallel.hpp"
#include "stokes/state_factory.hpp"

namespace stokes {

namespace {

// (a_H^2 - a_V^2) a_H |0> = sqrt(6)|3,0> - sqrt(2)|1,2>.
PolarizationState triphoton_seed() {
  return fock_superposition(SpinSpace(kTriphotonPhotons),
                            {{3, 0, std::sqrt(6.0)}, {1, 2, -std::sqrt(2.0)}});
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::vector<double> sweep_samples(const SweepRange& range) {
  if (!(range.t_min >= 0.0) || !(range.t_max > range.t_min) || !std::isfinite(range.t_max)) {
    throw std::invalid_argument("sweep range must satisfy 0 <= t_min < t_max");
  }
  if (range.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");

  std::vector<double> ts;
  ts.reserve(range.steps + 2);
  const double span = range.t_max - range.t_min;
  for (int i = 0; i < range.steps; ++i) {
    ts.push_back(i == range.steps - 1 ? range.t_max
                                      : range.t_min + span * i / (range.steps - 1));
  }
  for (double landmark : {1.0, std::numbers::sqrt3}) {
    if (landmark >= range.t_min && landmark <= range.t_max) ts.push_back(landmark);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

SweepRecord sweep_record(double t) {
  const VppResult filtered = vpp_filter(triphoton_seed(), t);
  const PolarizationState state = qwp_apply(filtered.state);
  const SqueezingReport report = squeezing_report(state);
  const TriphotonAmplitudes amps = analytic_amplitudes(t);

  SweepRecord r;
  r.t = t;
  r.c2 = amps.c2;
  r.c3 = amps.c3;
  r.mean = report.mean.components;
  r.v_minus = report.v_minus;
  r.v_plus = report.v_plus;
  r.xi2 = report.xi2;
  r.chi2 = report.chi2;
  r.zeta2 = report.zeta2;
  r.xi2_db = to_decibels(report.xi2);
  r.chi2_db = to_decibels(report.chi2);
  r.vpp_success_probability = filtered.success_probability;
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepRange& range, unsigned threads) {
  const std::vector<double> ts = sweep_samples(range);
  std::vector<SweepRecord> records(ts.size());
  parallel_for(ts.size(), threads, [&](std::size_t i) { records[i] = sweep_record(ts[i]); });
  return records;
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "T,c2,c3,S1,S2,S3,v_minus,v_plus,xi2,chi2,zeta2,zeta2_unbounded,xi2_db,chi2_db,"
         "vpp_success_probability\n";
  const auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : ""; };
  for (const SweepRecord& r : records) {
    out << format_real(r.t) << ',' << format_real(r.c2) << ',' << format_real(r.c3) << ','
        << format_real(r.mean.x()) << ',' << format_real(r.mean.y()) << ','
        << format_real(r.mean.z()) << ',' << format_real(r.v_minus) << ','
        << format_real(r.v_plus) << ',' << format_real(r.xi2) << ',' << format_real(r.chi2)
        << ',' << opt(r.zeta2) << ',' << (r.zeta2_unbounded() ? "true" : "false") << ','
        << opt(r.xi2_db) << ',' << opt(r.chi2_db) << ','
        << format_real(r.vpp_success_probability) << '\n';
  }
}

void write_sweep_json(std::ostream& out, const SweepRange& range,
                      const std::vector<SweepRecord>& records) {
  nlohmann::json doc;
  doc["meta"] = {{"command", "sweep"},
                 {"parameters",
                  {{"t_min", range.t_min}, {"t_max", range.t_max}, {"steps", range.steps}}},
                 {"spin", 1.5},
                 {"dimension", 4}};
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    rows.push_back({{"T", r.t},
                    {"c2", r.c2},
                    {"c3", r.c3},
                    {"S1", r.mean.x()},
                    {"S2", r.mean.y()},
                    {"S3", r.mean.z()},
                    {"v_minus", r.v_minus},
                    {"v_plus", r.v_plus},
                    {"xi2", r.xi2},
                    {"chi2", r.chi2},
                    {"zeta2", optional_json(r.zeta2)},
                    {"zeta2_unbounded", r.zeta2_unbounded()},
                    {"xi2_db", optional_json(r.xi2_db)},
                    {"chi2_db", optional_json(r.chi2_db)},
                    {"vpp_success_probability", r.vpp_success_probability}});
  }
  doc["records"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_qgrid_csv(std::ostream& out, const QGrid& q) {
  out << "theta,phi,p,Q\n";
  for (int i = 0; i < q.grid.n_theta(); ++i) {
    for (int j = 0; j < q.grid.n_phi(); ++j) {
      out << format_real(q.grid.theta(i)) << ',' << format_real(q.grid.phi(j)) << ','
          << format_real(q.grid.p(i)) << ',' << format_real(q.values(i, j)) << '\n';
    }
  }
}

void write_qgrid_pgm(std::ostream& out, const QGrid& q) {
  const double peak = q.values.maxCoeff();
  out << "P5\n" << q.grid.n_phi() << ' ' << q.grid.n_theta() << "\n255\n";
  for (int i = 0; i < q.grid.n_theta(); ++i) {
    for (int j = 0; j < q.grid.n_phi(); ++j) {
      const double level = peak > 0.0 ? 255.0 * q.values(i, j) / peak : 0.0;
      out.put(static_cast<char>(static_cast<unsigned char>(std::lround(std::clamp(level, 0.0, 255.0)))));
    }
  }
}

unsigned threads_from_env() {
  const char* raw = std::getenv("STOKES_SQUEEZE_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024) {
    throw std::invalid_argument(std::string("STOKES_SQUEEZE_THREADS must be a positive integer, got '") +
                                raw + "'");
  }
  return static_cast<unsigned>(value);
}

}  // namespace stokes
