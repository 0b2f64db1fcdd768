// Command-line front end: triphoton sweeps, single-state reports, Husimi Q
// grids, NOON metrics and the built-in self-check.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stokes/husimi.hpp"
#include "stokes/squeezing.hpp"
#include "stokes/state_factory.hpp"
#include "stokes/sweep.hpp"
#include "stokes/verify.hpp"

namespace {

using namespace stokes;

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    path_ = path;
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed for '" + (path_.empty() ? "stdout" : path_) + "'");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

std::string basis_label(const SpinSpace& space, int k) {
  return "|" + std::to_string(space.horizontal(k)) + "," + std::to_string(space.vertical(k)) + ">";
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json report_json(const SqueezingReport& r) {
  return {{"mean", {r.mean.components.x(), r.mean.components.y(), r.mean.components.z()}},
          {"mean_length", r.mean.length},
          {"frame",
           {{"theta", r.frame.theta}, {"phi", r.frame.phi}, {"degenerate", r.frame.degenerate}}},
          {"A", r.ellipse.a},
          {"B", r.ellipse.b},
          {"C", r.ellipse.c},
          {"gamma_opt", r.ellipse.gamma_opt},
          {"isotropic", r.ellipse.isotropic},
          {"v_minus", r.v_minus},
          {"v_plus", r.v_plus},
          {"snl", r.snl},
          {"xi2", r.xi2},
          {"xi2_db", optional_json(to_decibels(r.xi2))},
          {"zeta2", optional_json(r.zeta2)},
          {"zeta2_unbounded", r.zeta2_unbounded()},
          {"chi2", r.chi2},
          {"chi2_db", optional_json(to_decibels(r.chi2))},
          {"qfi", r.qfi}};
}

nlohmann::json amplitudes_json(const PolarizationState& state) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k < state.space().dimension(); ++k) {
    rows.push_back({{"basis", basis_label(state.space(), k)},
                    {"n", state.space().magnetic(k)},
                    {"re", state.amplitude(k).real()},
                    {"im", state.amplitude(k).imag()}});
  }
  return rows;
}

void print_report_text(std::ostream& out, const SqueezingReport& r) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_real(*v) : std::string("unbounded");
  };
  out << "mean S = (" << format_real(r.mean.components.x()) << ", "
      << format_real(r.mean.components.y()) << ", " << format_real(r.mean.components.z())
      << "), |<S>| = " << format_real(r.mean.length) << '\n'
      << "frame theta = " << format_real(r.frame.theta) << ", phi = " << format_real(r.frame.phi)
      << (r.frame.degenerate ? " (fallback, mean vanishes)" : "") << '\n'
      << "A = " << format_real(r.ellipse.a) << ", B = " << format_real(r.ellipse.b)
      << ", C = " << format_real(r.ellipse.c) << ", gamma_opt = "
      << format_real(r.ellipse.gamma_opt) << (r.ellipse.isotropic ? " (isotropic)" : "") << '\n'
      << "V- = " << format_real(r.v_minus) << ", V+ = " << format_real(r.v_plus)
      << ", SNL = " << format_real(r.snl) << '\n'
      << "xi2 = " << format_real(r.xi2) << " (" << opt(to_decibels(r.xi2)) << " dB)\n"
      << "zeta2 = " << opt(r.zeta2) << '\n'
      << "chi2 = " << format_real(r.chi2) << " (" << opt(to_decibels(r.chi2)) << " dB)\n"
      << "qfi = " << format_real(r.qfi) << '\n';
}

void print_amplitudes_text(std::ostream& out, const PolarizationState& state) {
  for (int k = 0; k < state.space().dimension(); ++k) {
    out << basis_label(state.space(), k) << "_HV  " << format_real(state.amplitude(k).real())
        << " " << format_real(state.amplitude(k).imag()) << "i\n";
  }
}

struct Options {
  double t_min = 0.0;
  double t_max = 1.8;
  int steps = 181;
  double t = 0.0;
  std::optional<int> noon_n;
  int n = 3;
  double noon_phase = -std::numbers::pi / 2.0;
  int n_theta = 181;
  int n_phi = 360;
  std::string output;
  std::string format;
  double sabotage_ladder = 0.0;
};

int cmd_sweep(const Options& o) {
  const SweepRange range{o.t_min, o.t_max, o.steps};
  const auto records = run_sweep(range, threads_from_env());
  OutputTarget target(o.output);
  if (o.format == "json") {
    write_sweep_json(target.stream(), range, records);
  } else {
    write_sweep_csv(target.stream(), records);
  }
  target.finish();
  return 0;
}

int cmd_state(const Options& o) {
  const TriphotonParams params(o.t);
  const PolarizationState state = triphoton_state(params);
  const TriphotonAmplitudes amps = analytic_amplitudes(o.t);
  const SqueezingReport report = squeezing_report(state);
  OutputTarget target(o.output);
  std::ostream& out = target.stream();
  if (o.format == "json") {
    nlohmann::json doc;
    doc["meta"] = {{"command", "state"}, {"parameters", {{"T", o.t}}}, {"spin", 1.5}, {"dimension", 4}};
    doc["c2"] = amps.c2;
    doc["c3"] = amps.c3;
    doc["amplitudes"] = amplitudes_json(state);
    doc["report"] = report_json(report);
    out << doc.dump(2) << '\n';
  } else {
    out << "triphoton state, T = " << format_real(o.t) << '\n';
    print_amplitudes_text(out, state);
    out << "c2 = " << format_real(amps.c2) << ", c3 = " << format_real(amps.c3) << '\n';
    print_report_text(out, report);
  }
  target.finish();
  return 0;
}

int cmd_husimi(const Options& o) {
  const PolarizationState state = o.noon_n ? noon_state(NoonParams(*o.noon_n, o.noon_phase))
                                           : triphoton_state(TriphotonParams(o.t));
  const QGrid q = q_grid(state, SphereGrid(o.n_theta, o.n_phi, GridScheme::Endpoint),
                         threads_from_env());
  OutputTarget target(o.output);
  if (o.format == "pgm") {
    write_qgrid_pgm(target.stream(), q);
  } else {
    write_qgrid_csv(target.stream(), q);
  }
  target.finish();
  return 0;
}

int cmd_noon(const Options& o) {
  const NoonParams params(o.n, o.noon_phase);
  const PolarizationState state = noon_state(params);
  const SqueezingReport report = squeezing_report(state);
  OutputTarget target(o.output);
  std::ostream& out = target.stream();
  if (o.format == "json") {
    nlohmann::json doc;
    doc["meta"] = {{"command", "noon"},
                   {"parameters", {{"N", o.n}, {"noon_phase", params.noon_phase()}}},
                   {"spin", state.space().spin()},
                   {"dimension", state.space().dimension()}};
    doc["amplitudes"] = amplitudes_json(state);
    doc["report"] = report_json(report);
    out << doc.dump(2) << '\n';
  } else {
    out << "NOON state, N = " << o.n << ", phase = " << format_real(params.noon_phase()) << '\n';
    print_report_text(out, report);
  }
  target.finish();
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions options;
  options.ladder_perturbation = o.sabotage_ladder;
  OutputTarget target(o.output);
  const bool ok = print_verification(target.stream(), run_verification(options));
  target.finish();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarization squeezing and entanglement analysis of N-photon states"};
  app.require_subcommand(1);
  Options o;

  auto* sweep = app.add_subcommand("sweep", "Triphoton family as a function of T");
  sweep->add_option("--t-min", o.t_min, "Smallest T")->capture_default_str();
  sweep->add_option("--t-max", o.t_max, "Largest T")->capture_default_str();
  sweep->add_option("--steps", o.steps, "Uniform samples, endpoints inclusive")->capture_default_str();
  sweep->add_option("--output", o.output, "Output file (default stdout)");
  sweep->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));

  auto* state = app.add_subcommand("state", "Amplitudes and squeezing report for one T");
  state->add_option("--T", o.t, "Transmissivity ratio T_V/T_H")->required();
  state->add_option("--output", o.output, "Output file (default stdout)");
  state->add_option("--format", o.format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));

  auto* husimi = app.add_subcommand("husimi", "Husimi Q function on a (theta, phi) grid");
  auto* husimi_t = husimi->add_option("--T", o.t, "Triphoton state with this T");
  auto* husimi_n = husimi->add_option("--N", o.noon_n, "NOON state with N photons instead");
  husimi_t->excludes(husimi_n);
  husimi->add_option("--noon-phase", o.noon_phase, "NOON relative phase (radians)")->capture_default_str();
  husimi->add_option("--n-theta", o.n_theta, "Polar samples, poles included")
      ->check(CLI::Range(2, 1 << 16))->capture_default_str();
  husimi->add_option("--n-phi", o.n_phi, "Azimuthal samples over [0, 2pi)")
      ->check(CLI::Range(2, 1 << 16))->capture_default_str();
  husimi->add_option("--output", o.output, "Output file (default stdout)");
  husimi->add_option("--format", o.format, "csv (default) or pgm")->check(CLI::IsMember({"csv", "pgm"}));

  auto* noon = app.add_subcommand("noon", "Squeezing and entanglement metrics of a NOON state");
  noon->add_option("--N", o.n, "Photon number")->required();
  noon->add_option("--noon-phase", o.noon_phase, "Relative phase (radians)")->capture_default_str();
  noon->add_option("--output", o.output, "Output file (default stdout)");
  noon->add_option("--format", o.format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the built-in invariant and landmark checks");
  verify->add_option("--output", o.output, "Output file (default stdout)");
  verify->add_option("--sabotage-ladder", o.sabotage_ladder,
                     "Perturb one ladder coefficient (harness self-test)")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) return cmd_sweep(o);
    if (*state) return cmd_state(o);
    if (*husimi) return cmd_husimi(o);
    if (*noon) return cmd_noon(o);
    if (*verify) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
