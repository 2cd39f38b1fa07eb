#include "cvqkd/info_rates.hpp"

#include <cmath>
#include <string>

#include "cvqkd/error.hpp"

namespace cvqkd {

namespace {

double floored(double chi) {
  // cancellation near the decoupling point
  return (chi < 0.0 && chi > -kEntropyFloor) ? 0.0 : chi;
}

double holevo_rr_with(const ProtocolConfig& cfg, HolevoReading reading) {
  const CovMatrix full = trusted_state(cfg.prep, cfg.ch);
  if (reading == HolevoReading::trusted_state) {
    const CovMatrix conditioned = condition_on_homodyne(full, kBobMode, Quadrature::x);
    return floored(von_neumann_entropy(full) - von_neumann_entropy(conditioned));
  }
  const CovMatrix ab = alice_bob_state(pm_to_epr(cfg.prep), cfg.ch);
  const CovMatrix a_given_b = condition_on_homodyne(ab, 1, Quadrature::x);
  return floored(von_neumann_entropy(ab) - von_neumann_entropy(a_given_b));
}

double holevo_dr_with(const ProtocolConfig& cfg, HolevoReading reading) {
  const CovMatrix full = trusted_state(cfg.prep, cfg.ch);
  const CovMatrix bc_given_a = condition_on_homodyne(full, kAliceMode, Quadrature::x);
  const double s_e = reading == HolevoReading::trusted_state
                         ? von_neumann_entropy(full)
                         : von_neumann_entropy(full.reduced({kAliceMode, kBobMode}));
  return floored(s_e - von_neumann_entropy(bc_given_a));
}

double holevo_with(const ProtocolConfig& cfg, HolevoReading reading) {
  return cfg.direction == Direction::reverse ? holevo_rr_with(cfg, reading)
                                             : holevo_dr_with(cfg, reading);
}

}  // namespace

void validate(const ProtocolConfig& cfg) {
  validate(cfg.prep);
  validate(cfg.ch);
  if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0)) {
    throw DomainError("reconciliation efficiency beta must lie in [0, 1], got " +
                      std::to_string(cfg.beta));
  }
}

double mutual_information(const ProtocolConfig& cfg) {
  validate(cfg);
  const double lambda = cfg.detection == Detection::homodyne ? 1.0 : 2.0;
  const auto& [v, sigma_x, sigma_p] = cfg.prep;
  const auto& [eta, eps] = cfg.ch;
  return 0.5 * std::log2(1.0 + sigma_x * eta / (lambda + eta * (v + eps - 1.0)));
}

double holevo_rr(const ProtocolConfig& cfg) {
  validate(cfg);
  return holevo_rr_with(cfg, cfg.reading);
}

double holevo_pure_loss_rr(const ProtocolConfig& cfg) {
  validate(cfg);
  if (cfg.ch.epsilon != 0.0) {
    throw MethodMisuseError("holevo_pure_loss_rr: only valid for epsilon = 0");
  }
  const double eta = cfg.ch.eta;
  const double vb_x = cfg.prep.v + cfg.prep.sigma_x;
  const double vb_p = 1.0 / cfg.prep.v + cfg.prep.sigma_p;

  // Eve holds the reflected port: variances V_B(1 - eta) + eta.
  const double ve_x = vb_x * (1.0 - eta) + eta;
  const double ve_p = vb_p * (1.0 - eta) + eta;
  const double c_be_x = std::sqrt(eta * (1.0 - eta)) * (1.0 - vb_x);
  const double vb_out_x = vb_x * eta + 1.0 - eta;

  const double lambda1 = std::sqrt(ve_x * ve_p);
  const double lambda2 = std::sqrt((ve_x - c_be_x * c_be_x / vb_out_x) * ve_p);
  const auto entropy_term = [](double nu) {
    if (nu < 1.0 - kPhysicalityTolerance) {
      throw PhysicalityError("holevo_pure_loss_rr: symplectic eigenvalue below 1");
    }
    return g_function((std::max(nu, 1.0) - 1.0) / 2.0);
  };
  return floored(entropy_term(lambda1) - entropy_term(lambda2));
}

double holevo_dr(const ProtocolConfig& cfg) {
  validate(cfg);
  return holevo_dr_with(cfg, cfg.reading);
}

double holevo(const ProtocolConfig& cfg) {
  return cfg.direction == Direction::reverse ? holevo_rr(cfg) : holevo_dr(cfg);
}

double secret_key_rate(const ProtocolConfig& cfg) {
  if (cfg.detection != Detection::homodyne) {
    throw UnsupportedConfigurationError(
        "key rate is only defined for homodyne detection at Bob");
  }
  return cfg.beta * mutual_information(cfg) - holevo(cfg);
}

KeyRateReport key_rate(const ProtocolConfig& cfg) {
  if (cfg.detection != Detection::homodyne) {
    throw UnsupportedConfigurationError(
        "key rate is only defined for homodyne detection at Bob");
  }
  validate(cfg);

  KeyRateReport report;
  report.i_ab = mutual_information(cfg);
  report.chi = holevo_with(cfg, cfg.reading);
  report.rate = cfg.beta * report.i_ab - report.chi;
  report.method = HolevoMethod::purification;
  report.reading = cfg.reading;

  const auto other = cfg.reading == HolevoReading::trusted_state
                         ? HolevoReading::two_mode_literal
                         : HolevoReading::trusted_state;
  report.chi_other_reading = holevo_with(cfg, other);
  report.readings_disagree = std::abs(report.chi_other_reading - report.chi) > kEntropyFloor;

  if (cfg.direction == Direction::reverse && cfg.ch.epsilon == 0.0) {
    report.chi_pure_loss_analytic = holevo_pure_loss_rr(cfg);
  }
  return report;
}

double cloner_correlation(const Preparation& prep, const Channel& ch) {
  validate(prep);
  validate(ch);
  const double vb_x = prep.v + prep.sigma_x;
  return std::sqrt(ch.eta * (1.0 - ch.eta)) * (1.0 - vb_x + ch.eta * ch.epsilon);
}

std::string_view to_string(Direction d) { return d == Direction::direct ? "dr" : "rr"; }

std::string_view to_string(Detection d) {
  return d == Detection::homodyne ? "homodyne" : "heterodyne";
}

std::string_view to_string(HolevoReading r) {
  return r == HolevoReading::trusted_state ? "trusted_state" : "two_mode_literal";
}

std::string_view to_string(HolevoMethod m) {
  return m == HolevoMethod::purification ? "purification" : "pure_loss_analytic";
}

}  // namespace cvqkd
