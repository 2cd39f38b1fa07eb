#pragma once

// Gaussian states of the squeezed/coherent-state protocol.
//
// The prepare-and-measure scheme (signal squeezed in x with variance V, Gaussian
// displacements of variances sigma_x, sigma_p) is represented by an equivalent
// entanglement-based source: two oppositely squeezed beams (V1 in x, V2 in x)
// combined on a 50:50 beamsplitter into Alice's mode A0 and Bob's mode B, and
// a heterodyne at Alice whose free port is fed with a squeezed state of
// variance Vm, splitting A0 into A (measured in x) and C (measured in p).

#include <cstddef>

#include "cvqkd/gaussian.hpp"

namespace cvqkd {

// Prepare-and-measure parameters, all in shot-noise units.
struct Preparation {
  double v = 1.0;        // squeezed x-variance of the signal state
  double sigma_x = 1.0;  // displacement variance in x
  double sigma_p = 1.0;  // displacement variance in p
};

// Entanglement-based source parameters.
struct EprSource {
  double v1 = 1.0;  // squeezed x-variance of source mode 1
  double v2 = 1.0;  // anti-squeezed x-variance of source mode 2
  double vm = 1.0;  // squeezed x-variance fed into Alice's heterodyne port
};

// Untrusted channel. Excess noise is referred to the channel input.
struct Channel {
  double eta = 1.0;
  double epsilon = 0.0;
};

// Mode layout of the trusted three-mode state.
inline constexpr std::size_t kAliceMode = 0;
inline constexpr std::size_t kHeterodyneMode = 1;
inline constexpr std::size_t kBobMode = 2;

void validate(const Preparation& prep);
void validate(const Channel& ch);

// V_{1,2} = V + sigma_x -/+ sqrt((V + sigma_x)(sigma_x + V sigma_p (V + sigma_x)) / (1 + V sigma_p))
// V_m     = V^2 sigma_p (V + sigma_x) / (sigma_x (1 + V sigma_p))
EprSource pm_to_epr(const Preparation& prep);

// Source for the p-squeezed variant: every variance is inverted.
EprSource rotate_squeezing(const EprSource& src);

// Pure six-dimensional state of modes (A, C, B) before the channel.
CovMatrix build_three_mode_state(const EprSource& src);

// Lossy noisy channel on one mode: diagonal v -> eta (v + epsilon - 1) + 1,
// correlations with the mode scaled by sqrt(eta).
CovMatrix apply_channel(const CovMatrix& gamma, std::size_t bob_mode, const Channel& ch);

// Three-mode (A, C, B) state held by the trusted parties after the channel.
CovMatrix trusted_state(const Preparation& prep, const Channel& ch);

// Pre-channel second moments of the two-mode Alice-Bob state (mode C traced).
// Correlations carry the sign convention of the closed-form expressions:
// c_x = (V2 - V1) / (2 sqrt 2), c_p = (1/V2 - 1/V1) / (2 sqrt 2).
struct AliceBobMoments {
  double va_x = 1.0;
  double va_p = 1.0;
  double vb_x = 1.0;
  double vb_p = 1.0;
  double c_x = 0.0;
  double c_p = 0.0;
};

AliceBobMoments source_moments(const EprSource& src);

// Two-mode Alice-Bob covariance matrix after the channel, built entry by entry
// from the closed-form moments.
CovMatrix alice_bob_state(const EprSource& src, const Channel& ch);

// Closed-form conditional variance V_{B|A} of Bob's x-quadrature given
// Alice's x-outcome.
double conditional_variance_b_given_a(const Preparation& prep, const Channel& ch);

// Closed-form state of Alice's mode conditioned on Bob's x-homodyne:
// diag(V_A^x - eta (V1 - V2)^2 / (8 + 4 eta (V1 + V2 + 2 epsilon - 2)), V_A^p).
CovMatrix alice_given_bob_closed_form(const EprSource& src, const Channel& ch);

}  // namespace cvqkd
