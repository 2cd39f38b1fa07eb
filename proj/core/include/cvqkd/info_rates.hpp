#pragma once

// Mutual information, Holevo bounds and the collective-attack key rate
//   K = beta I_AB - chi,
// with chi = chi_AE for direct and chi_BE for reverse reconciliation.

#include <optional>
#include <string_view>

#include "cvqkd/gaussian.hpp"
#include "cvqkd/protocol.hpp"

namespace cvqkd {

enum class Direction { direct, reverse };
enum class Detection { homodyne, heterodyne };

// Which trusted state stands in for Eve's purification.
//  trusted_state:    the full (A, C, B) state; S_E = S(A,C,B), and the
//                    conditional term keeps mode C.
//  two_mode_literal: the two-mode (A, B) matrix with mode C traced out, used
//                    for S_E as written in the closed-form expressions. It is
//                    not a purification and gives chi > 0 even at eta = 1.
enum class HolevoReading { trusted_state, two_mode_literal };

enum class HolevoMethod { purification, pure_loss_analytic };

struct ProtocolConfig {
  Preparation prep;
  Channel ch;
  double beta = 1.0;
  Direction direction = Direction::reverse;
  Detection detection = Detection::homodyne;
  HolevoReading reading = HolevoReading::trusted_state;
};

struct KeyRateReport {
  double i_ab = 0.0;
  double chi = 0.0;
  double rate = 0.0;  // beta * i_ab - chi
  HolevoMethod method = HolevoMethod::purification;
  HolevoReading reading = HolevoReading::trusted_state;
  // chi under the other HolevoReading, and whether the two differ by > 1e-9.
  double chi_other_reading = 0.0;
  bool readings_disagree = false;
  // Pure-loss reverse reconciliation only: analytic chi, for cross-checking.
  std::optional<double> chi_pure_loss_analytic;
};

inline constexpr double kEntropyFloor = 1e-9;

void validate(const ProtocolConfig& cfg);

// 1/2 log2(1 + sigma_x eta / (lambda + eta (V + epsilon - 1))), lambda = 1 for
// homodyne and 2 for heterodyne detection at Bob.
double mutual_information(const ProtocolConfig& cfg);

// chi_BE = S_E - S_E|B from the trusted state and its conditioning on Bob's x-homodyne.
double holevo_rr(const ProtocolConfig& cfg);

// chi_BE for a pure-loss channel from Eve's single-mode states before and
// after Bob's measurement. Throws MethodMisuseError when epsilon != 0.
double holevo_pure_loss_rr(const ProtocolConfig& cfg);

// chi_AE = S_E - S_E|A, conditioning on Alice's x-homodyne of mode A.
double holevo_dr(const ProtocolConfig& cfg);

double holevo(const ProtocolConfig& cfg);

// beta I_AB - chi only, for use inside optimizers.
double secret_key_rate(const ProtocolConfig& cfg);

// Full report. Throws UnsupportedConfigurationError for heterodyne detection.
KeyRateReport key_rate(const ProtocolConfig& cfg);

// Correlation between Bob's mode and an entangling-cloner mode,
// sqrt(eta (1 - eta)) (1 - V_B^x + eta epsilon), with V_B^x = V + sigma_x the
// pre-channel variance. Diagnostic only; not used in any bound.
double cloner_correlation(const Preparation& prep, const Channel& ch);

std::string_view to_string(Direction d);
std::string_view to_string(Detection d);
std::string_view to_string(HolevoReading r);
std::string_view to_string(HolevoMethod m);

}  // namespace cvqkd
