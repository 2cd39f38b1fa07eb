#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvqkd/error.hpp"
#include "cvqkd/info_rates.hpp"
#include "cvqkd/parallel.hpp"
#include "cvqkd/sampling.hpp"
#include "cvqkd/security.hpp"
#include "output.hpp"

namespace cvqkd::cli {

namespace {

using nlohmann::json;

// Invalid or contradictory command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProtocolFlags {
  double v = 1.0;
  std::optional<double> sigma;
  std::optional<double> sigma_x;
  std::optional<double> sigma_p;
  std::optional<double> eta;
  std::optional<double> distance_km;
  double epsilon = 0.0;
  double beta = 1.0;
  std::string direction = "rr";
  std::string detection = "homodyne";
  std::string reading = "trusted";
  std::string mode = "symmetric";
  std::string format;
  std::string output;
  std::string boundary_output;
  bool assert_secure = false;
  double tolerance = 1e-5;

  // grids
  double v_min = 0.05, v_max = 1.0;
  std::size_t v_count = 20;
  double sigma_min = 1e-2, sigma_max = 10.0;
  std::size_t sigma_count = 40;
  std::string sigma_spacing = "log";
  double d_min = 0.0, d_max = 100.0, d_step = 1.0;

  // simulate
  std::size_t n = 1000000;
  std::uint64_t seed = 1;
};

const CLI::Validator kTransmittance(
    [](std::string& input) -> std::string {
      double value = 0.0;
      try {
        value = std::stod(input);
      } catch (const std::exception&) {
        return "value " + input + " is not a number";
      }
      if (!(value > 0.0 && value <= 1.0)) return "value " + input + " not in range (0, 1]";
      return {};
    },
    "(0, 1]", "TRANSMITTANCE");

void add_v(CLI::App& cmd, ProtocolFlags& f, bool required = true) {
  auto* opt = cmd.add_option("--v", f.v, "squeezed variance of the signal state (SNU)")
                  ->check(CLI::PositiveNumber);
  if (required) opt->required();
}

void add_sigma(CLI::App& cmd, ProtocolFlags& f, const CLI::Validator& check) {
  cmd.add_option("--sigma", f.sigma, "displacement variance for both quadratures (SNU)")
      ->check(check);
  cmd.add_option("--sigma-x", f.sigma_x, "displacement variance in x (SNU), overrides --sigma")
      ->check(check);
  cmd.add_option("--sigma-p", f.sigma_p, "displacement variance in p (SNU), overrides --sigma")
      ->check(check);
}

void add_channel(CLI::App& cmd, ProtocolFlags& f, bool with_epsilon = true) {
  auto* eta = cmd.add_option("--eta", f.eta, "channel transmittance")->check(kTransmittance);
  auto* dist = cmd.add_option("--distance-km", f.distance_km, "fiber length at 0.2 dB/km")
                   ->check(CLI::NonNegativeNumber);
  eta->excludes(dist);
  dist->excludes(eta);
  if (with_epsilon) {
    cmd.add_option("--epsilon", f.epsilon, "excess noise referred to channel input (SNU)")
        ->check(CLI::NonNegativeNumber);
  }
}

void add_beta(CLI::App& cmd, ProtocolFlags& f, bool required = true) {
  auto* opt = cmd.add_option("--beta", f.beta, "reconciliation efficiency")
                  ->check(CLI::Range(0.0, 1.0));
  if (required) opt->required();
}

void add_direction(CLI::App& cmd, ProtocolFlags& f) {
  cmd.add_option("--direction", f.direction, "reconciliation direction")
      ->check(CLI::IsMember({"dr", "rr"}))
      ->capture_default_str();
}

// The default format is applied at dispatch, since all subcommands share `f`.
void add_output(CLI::App& cmd, ProtocolFlags& f, const char* default_format,
                std::vector<std::string> formats) {
  cmd.add_option("--output", f.output, "write results to this file instead of stdout");
  cmd.add_option("--format", f.format,
                 std::string("output format (default ") + default_format + ")")
      ->check(CLI::IsMember(std::move(formats)));
}

void add_assert(CLI::App& cmd, ProtocolFlags& f) {
  cmd.add_flag("--assert-secure", f.assert_secure,
               "exit with status 1 when the result is not secure");
}

Direction parse_direction(const std::string& text) {
  return text == "dr" ? Direction::direct : Direction::reverse;
}

double resolve_eta(const ProtocolFlags& f) {
  if (f.eta) return *f.eta;
  if (f.distance_km) return distance_to_transmittance(*f.distance_km);
  throw UsageError("one of --eta or --distance-km is required");
}

Preparation resolve_preparation(const ProtocolFlags& f) {
  const auto sx = f.sigma_x ? f.sigma_x : f.sigma;
  const auto sp = f.sigma_p ? f.sigma_p : f.sigma;
  if (!sx) throw UsageError("--sigma or --sigma-x is required");
  if (!sp) throw UsageError("--sigma or --sigma-p is required");
  return Preparation{.v = f.v, .sigma_x = *sx, .sigma_p = *sp};
}

unsigned thread_count() {
  const char* env = std::getenv("CVQKD_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0) {
    throw UsageError("CVQKD_THREADS must be a nonnegative integer, got '" + std::string(env) +
                     "'");
  }
  return static_cast<unsigned>(value);
}

// Resolves --output to a stream; stdout when absent.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, const char* flag = "--output") {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError(std::string(flag) + ": cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

int secure_exit(const ProtocolFlags& f, bool secure) {
  return (f.assert_secure && !secure) ? kNotSecure : kSuccess;
}

json parameters_json(const ProtocolConfig& cfg) {
  return json{{"v", cfg.prep.v},
              {"sigma_x", cfg.prep.sigma_x},
              {"sigma_p", cfg.prep.sigma_p},
              {"eta", cfg.ch.eta},
              {"epsilon", cfg.ch.epsilon},
              {"beta", cfg.beta},
              {"direction", to_string(cfg.direction)},
              {"detection", to_string(cfg.detection)}};
}

int cmd_keyrate(const ProtocolFlags& f, std::ostream& out) {
  ProtocolConfig cfg;
  cfg.prep = resolve_preparation(f);
  cfg.ch = Channel{.eta = resolve_eta(f), .epsilon = f.epsilon};
  cfg.beta = f.beta;
  cfg.direction = parse_direction(f.direction);
  cfg.detection = f.detection == "heterodyne" ? Detection::heterodyne : Detection::homodyne;
  cfg.reading =
      f.reading == "literal" ? HolevoReading::two_mode_literal : HolevoReading::trusted_state;
  if (cfg.detection == Detection::heterodyne) {
    throw UsageError(
        "--detection heterodyne: key rates are only available for homodyne detection");
  }

  const auto report = key_rate(cfg);
  json j{{"command", "keyrate"},
         {"parameters", parameters_json(cfg)},
         {"i_ab", report.i_ab},
         {"chi", report.chi},
         {"rate", report.rate},
         {"secure", report.rate > 0.0},
         {"method", to_string(report.method)},
         {"reading", to_string(report.reading)},
         {"chi_other_reading", report.chi_other_reading},
         {"readings_disagree", report.readings_disagree}};
  if (report.chi_pure_loss_analytic) j["chi_pure_loss_analytic"] = *report.chi_pure_loss_analytic;

  Sink sink(f.output, out);
  write_json(sink.stream(), j);
  return secure_exit(f, report.rate > 0.0);
}

int cmd_optimize(const ProtocolFlags& f, std::ostream& out) {
  const Channel ch{.eta = resolve_eta(f), .epsilon = f.epsilon};
  const auto mode = f.mode == "independent" ? SigmaMode::independent : SigmaMode::symmetric;
  const auto opt = optimize_displacement(f.v, ch, f.beta, parse_direction(f.direction), mode);
  json j{{"command", "optimize"},
         {"v", f.v},
         {"eta", ch.eta},
         {"epsilon", ch.epsilon},
         {"beta", f.beta},
         {"direction", f.direction},
         {"mode", f.mode},
         {"sigma_x_opt", opt.sigma_x},
         {"sigma_p_opt", opt.sigma_p},
         {"rate", opt.rate},
         {"secure", opt.secure},
         {"evaluations", opt.evaluations}};
  Sink sink(f.output, out);
  write_json(sink.stream(), j);
  return secure_exit(f, opt.secure);
}

json noise_json(const NoiseToleranceResult& r) {
  return json{{"v", r.v},
              {"beta", r.beta},
              {"eta", r.eta},
              {"direction", to_string(r.direction)},
              {"epsilon_max", r.epsilon_max},
              {"sigma_opt", r.sigma_opt},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"secure", r.secure}};
}

int cmd_noise_max(const ProtocolFlags& f, std::ostream& out) {
  const auto r =
      max_tolerable_noise(f.v, resolve_eta(f), f.beta, parse_direction(f.direction), f.tolerance);
  json j = noise_json(r);
  j["command"] = "noise-max";
  Sink sink(f.output, out);
  write_json(sink.stream(), j);
  return secure_exit(f, r.secure);
}

int cmd_table1(const ProtocolFlags& f, std::ostream& out) {
  const std::vector<double> betas{0.2, 0.4, 0.6, 0.8};
  const std::vector<double> variances{1.0, 0.5};
  const double eta = 0.1;
  std::vector<NoiseToleranceResult> cells(betas.size() * variances.size());
  parallel_for(cells.size(), thread_count(), [&](std::size_t k) {
    cells[k] = max_tolerable_noise(variances[k % variances.size()], eta,
                                   betas[k / variances.size()], Direction::reverse, f.tolerance);
  });

  Sink sink(f.output, out);
  if (f.format == "json") {
    json rows = json::array();
    for (const auto& c : cells) rows.push_back(noise_json(c));
    write_json(sink.stream(), rows);
    return kSuccess;
  }
  CsvWriter csv(sink.stream(), {"beta", "v_snu", "eta", "direction", "epsilon_max_snu",
                                "sigma_opt_snu", "secure", "converged"});
  for (const auto& c : cells) {
    csv << c.beta << c.v << c.eta << to_string(c.direction) << c.epsilon_max << c.sigma_opt
        << c.secure << c.converged;
    csv.end_row();
  }
  return kSuccess;
}

int cmd_region(const ProtocolFlags& f, std::ostream& out) {
  SweepGrid grid;
  grid.v_axis = Axis{"v", f.v_min, f.v_max, f.v_count, Spacing::linear};
  grid.sigma_axis = Axis{"sigma", f.sigma_min, f.sigma_max, f.sigma_count,
                         f.sigma_spacing == "linear" ? Spacing::linear : Spacing::log};
  grid.ch = Channel{.eta = resolve_eta(f), .epsilon = f.epsilon};
  grid.beta = f.beta;
  grid.direction = parse_direction(f.direction);
  try {
    grid.v_axis.validate();
    grid.sigma_axis.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("--v-min/--v-max/--v-count/--sigma-*: ") + e.what());
  }

  const auto region = security_region(grid, thread_count());

  Sink sink(f.output, out);
  if (f.format == "json") {
    json rates = json::array();
    json secure = json::array();
    for (std::size_t iv = 0; iv < region.v_values.size(); ++iv) {
      json rate_row = json::array();
      json secure_row = json::array();
      for (std::size_t is = 0; is < region.sigma_values.size(); ++is) {
        rate_row.push_back(region.rate[region.index(iv, is)]);
        secure_row.push_back(region.is_secure(iv, is));
      }
      rates.push_back(std::move(rate_row));
      secure.push_back(std::move(secure_row));
    }
    json boundary = json::array();
    for (const auto& b : region.boundary) {
      boundary.push_back({{"v", b.v}, {"sigma", b.sigma}, {"entering", b.entering}});
    }
    write_json(sink.stream(), json{{"command", "region"},
                                   {"eta", grid.ch.eta},
                                   {"epsilon", grid.ch.epsilon},
                                   {"beta", grid.beta},
                                   {"direction", f.direction},
                                   {"v_values", region.v_values},
                                   {"sigma_values", region.sigma_values},
                                   {"rate", rates},
                                   {"secure", secure},
                                   {"boundary", boundary}});
    return kSuccess;
  }

  CsvWriter csv(sink.stream(), {"v_snu", "sigma_snu", "rate_bits_per_symbol", "secure"});
  for (std::size_t iv = 0; iv < region.v_values.size(); ++iv) {
    for (std::size_t is = 0; is < region.sigma_values.size(); ++is) {
      csv << region.v_values[iv] << region.sigma_values[is] << region.rate[region.index(iv, is)]
          << region.is_secure(iv, is);
      csv.end_row();
    }
  }
  if (!f.boundary_output.empty()) {
    Sink boundary_sink(f.boundary_output, out, "--boundary-output");
    CsvWriter b(boundary_sink.stream(), {"v_snu", "sigma_boundary_snu", "entering"});
    for (const auto& p : region.boundary) {
      b << p.v << p.sigma << p.entering;
      b.end_row();
    }
  }
  return kSuccess;
}

int cmd_curve(const ProtocolFlags& f, std::ostream& out) {
  if (!(f.d_step > 0.0)) throw UsageError("--d-step must be positive");
  if (!(f.d_max >= f.d_min)) throw UsageError("--d-max must be >= --d-min");
  std::vector<double> distances;
  const auto steps = static_cast<std::size_t>(std::floor((f.d_max - f.d_min) / f.d_step + 1e-9));
  for (std::size_t i = 0; i <= steps; ++i) {
    distances.push_back(f.d_min + static_cast<double>(i) * f.d_step);
  }
  const auto curve = rate_vs_distance_curve(f.v, f.epsilon, f.beta, parse_direction(f.direction),
                                            distances, thread_count());

  Sink sink(f.output, out);
  if (f.format == "json") {
    json rows = json::array();
    for (const auto& p : curve) {
      rows.push_back({{"distance_km", p.distance_km},
                      {"eta", p.eta},
                      {"sigma_opt", p.sigma_opt},
                      {"rate", p.rate}});
    }
    write_json(sink.stream(), rows);
    return kSuccess;
  }
  CsvWriter csv(sink.stream(),
                {"distance_km", "eta", "sigma_opt_snu", "rate_bits_per_symbol"});
  for (const auto& p : curve) {
    csv << p.distance_km << p.eta << p.sigma_opt << p.rate;
    csv.end_row();
  }
  return kSuccess;
}

int cmd_simulate(const ProtocolFlags& f, std::ostream& out) {
  if (f.n == 0) throw UsageError("--n must be >= 1");
  const auto prep = resolve_preparation(f);
  const Channel ch{.eta = resolve_eta(f), .epsilon = f.epsilon};
  const auto s = simulate_pm(prep, ch, f.n, f.seed);
  const auto m = predicted_moments(prep, ch);
  json j{{"command", "simulate"},
         {"n_samples", s.n_samples},
         {"seed", s.seed},
         {"var_alice_x", s.var_alice_x},
         {"var_alice_p", s.var_alice_p},
         {"var_bob_x", s.var_bob_x},
         {"var_bob_p", s.var_bob_p},
         {"cov_ab_x", s.cov_ab_x},
         {"cov_ab_p", s.cov_ab_p},
         {"cond_var_bob_x", s.cond_var_bob_x},
         {"mutual_information_x", s.mutual_information_x},
         {"standard_errors",
          {{"var_alice_x", s.se_var_alice_x},
           {"var_alice_p", s.se_var_alice_p},
           {"var_bob_x", s.se_var_bob_x},
           {"var_bob_p", s.se_var_bob_p},
           {"cov_ab_x", s.se_cov_ab_x},
           {"cov_ab_p", s.se_cov_ab_p},
           {"mutual_information_x", s.se_mutual_information_x}}},
         {"predicted",
          {{"var_alice_x", m.var_alice_x},
           {"var_alice_p", m.var_alice_p},
           {"var_bob_x", m.var_bob_x},
           {"var_bob_p", m.var_bob_p},
           {"cov_ab_x", m.cov_ab_x},
           {"cov_ab_p", m.cov_ab_p},
           {"mutual_information_x", m.mutual_information_x}}}};
  Sink sink(f.output, out);
  write_json(sink.stream(), j);
  return kSuccess;
}

struct CheckLine {
  std::string name;
  double worst = 0.0;
  double limit = 0.0;
};

int cmd_selfcheck(std::ostream& out) {
  std::vector<CheckLine> lines;

  // Pure-loss RR: purification route vs closed-form eigenvalues, and the
  // generic homodyne conditioning vs its closed form.
  CheckLine cross{"rr_holevo_purification_vs_pure_loss", 0.0, 1e-9};
  CheckLine cond{"homodyne_conditioning_vs_closed_form", 0.0, 1e-12};
  for (double v : {0.1, 0.5, 1.0}) {
    for (double sigma : {0.1, 1.0, 5.0}) {
      for (double eta : {0.1, 0.5, 0.9}) {
        ProtocolConfig cfg;
        cfg.prep = {v, sigma, sigma};
        cfg.ch = {eta, 0.0};
        cross.worst =
            std::max(cross.worst, std::abs(holevo_rr(cfg) - holevo_pure_loss_rr(cfg)));
        const auto src = pm_to_epr(cfg.prep);
        const auto generic = condition_on_homodyne(alice_bob_state(src, cfg.ch), 1, Quadrature::x);
        const auto closed = alice_given_bob_closed_form(src, cfg.ch);
        cond.worst =
            std::max(cond.worst, (generic.matrix() - closed.matrix()).cwiseAbs().maxCoeff());
      }
    }
  }
  lines.push_back(cross);
  lines.push_back(cond);

  CheckLine decoupling{"rr_holevo_zero_at_sigma_x_eq_1_minus_v", 0.0, 1e-8};
  for (double v : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double eta : {0.1, 0.5, 0.9}) {
      ProtocolConfig cfg;
      cfg.prep = {v, 1.0 - v, 1.0};
      cfg.ch = {eta, 0.0};
      decoupling.worst = std::max(decoupling.worst, std::abs(holevo_rr(cfg)));
    }
  }
  lines.push_back(decoupling);

  bool ok = true;
  for (const auto& line : lines) {
    const bool pass = line.worst <= line.limit;
    ok = ok && pass;
    out << (pass ? "PASS " : "FAIL ") << line.name << " max_error=" << format_double(line.worst)
        << " limit=" << format_double(line.limit) << '\n';
  }
  return ok ? kSuccess : kNumericalFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Key-rate bounds for squeezed- and coherent-state Gaussian CV-QKD", "cvqkd"};
  app.require_subcommand(1);
  app.fallthrough(false);

  ProtocolFlags f;

  auto* keyrate = app.add_subcommand("keyrate", "key rate, mutual information and Holevo bound");
  add_v(*keyrate, f);
  add_sigma(*keyrate, f, CLI::PositiveNumber);
  add_channel(*keyrate, f);
  add_beta(*keyrate, f);
  add_direction(*keyrate, f);
  keyrate->add_option("--detection", f.detection, "Bob's detection")
      ->check(CLI::IsMember({"homodyne", "heterodyne"}))
      ->capture_default_str();
  keyrate->add_option("--reading", f.reading, "state standing in for Eve's purification")
      ->check(CLI::IsMember({"trusted", "literal"}))
      ->capture_default_str();
  add_output(*keyrate, f, "json", {"json"});
  add_assert(*keyrate, f);

  auto* optimize = app.add_subcommand("optimize", "optimal displacement variance");
  add_v(*optimize, f);
  add_channel(*optimize, f);
  add_beta(*optimize, f);
  add_direction(*optimize, f);
  optimize->add_option("--mode", f.mode, "one sigma for both quadratures or independent")
      ->check(CLI::IsMember({"symmetric", "independent"}))
      ->capture_default_str();
  add_output(*optimize, f, "json", {"json"});
  add_assert(*optimize, f);

  auto* noise = app.add_subcommand("noise-max", "maximum tolerable excess noise");
  add_v(*noise, f);
  add_channel(*noise, f, false);
  add_beta(*noise, f);
  add_direction(*noise, f);
  noise->add_option("--tolerance", f.tolerance, "bisection tolerance on epsilon (SNU)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(*noise, f, "json", {"json"});
  add_assert(*noise, f);

  auto* table1 = app.add_subcommand(
      "table1", "maximum tolerable noise for beta in {0.2..0.8}, V in {1, 0.5}, eta = 0.1, RR");
  table1->add_option("--tolerance", f.tolerance, "bisection tolerance on epsilon (SNU)")
      ->check(CLI::PositiveNumber);
  add_output(*table1, f, "csv", {"csv", "json"});

  auto* region = app.add_subcommand("region", "sign of the key rate over a (V, sigma) grid");
  add_channel(*region, f);
  add_beta(*region, f);
  add_direction(*region, f);
  region->add_option("--v-min", f.v_min)->check(CLI::PositiveNumber)->capture_default_str();
  region->add_option("--v-max", f.v_max)->check(CLI::PositiveNumber)->capture_default_str();
  region->add_option("--v-count", f.v_count)->capture_default_str();
  region->add_option("--sigma-min", f.sigma_min)->check(CLI::PositiveNumber)->capture_default_str();
  region->add_option("--sigma-max", f.sigma_max)->check(CLI::PositiveNumber)->capture_default_str();
  region->add_option("--sigma-count", f.sigma_count)->capture_default_str();
  region->add_option("--sigma-spacing", f.sigma_spacing)
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  region->add_option("--boundary-output", f.boundary_output, "CSV file for the boundary polyline");
  add_output(*region, f, "csv", {"csv", "json"});

  auto* curve = app.add_subcommand("curve", "optimized key rate versus fiber distance");
  add_v(*curve, f);
  curve->add_option("--epsilon", f.epsilon, "excess noise referred to channel input (SNU)")
      ->check(CLI::NonNegativeNumber);
  add_beta(*curve, f);
  add_direction(*curve, f);
  curve->add_option("--d-min", f.d_min)->check(CLI::NonNegativeNumber)->capture_default_str();
  curve->add_option("--d-max", f.d_max)->check(CLI::NonNegativeNumber)->capture_default_str();
  curve->add_option("--d-step", f.d_step)->check(CLI::PositiveNumber)->capture_default_str();
  add_output(*curve, f, "csv", {"csv", "json"});

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo prepare-and-measure moments");
  add_v(*simulate, f);
  add_sigma(*simulate, f, CLI::NonNegativeNumber);
  add_channel(*simulate, f);
  simulate->add_option("--n", f.n, "number of samples")->capture_default_str();
  simulate->add_option("--seed", f.seed, "generator seed")->capture_default_str();
  add_output(*simulate, f, "json", {"json"});

  auto* selfcheck = app.add_subcommand("selfcheck", "cross-path and decoupling invariants");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("cvqkd");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }

  if (f.format.empty()) {
    f.format = (table1->parsed() || region->parsed() || curve->parsed()) ? "csv" : "json";
  }

  try {
    if (keyrate->parsed()) return cmd_keyrate(f, out);
    if (optimize->parsed()) return cmd_optimize(f, out);
    if (noise->parsed()) return cmd_noise_max(f, out);
    if (table1->parsed()) return cmd_table1(f, out);
    if (region->parsed()) return cmd_region(f, out);
    if (curve->parsed()) return cmd_curve(f, out);
    if (simulate->parsed()) return cmd_simulate(f, out);
    if (selfcheck->parsed()) return cmd_selfcheck(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const PhysicalityError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const DegenerateMeasurementError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  err << "error: no subcommand\n";
  return kInvalidArguments;
}

}  // namespace cvqkd::cli
