#include "cvqkd/protocol.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvqkd/error.hpp"

namespace cvqkd {

void validate(const Preparation& prep) {
  if (!(prep.v > 0.0) || !std::isfinite(prep.v)) {
    throw DomainError("squeezed variance v must be positive, got " + std::to_string(prep.v));
  }
  if (!(prep.sigma_x >= 0.0) || !(prep.sigma_p >= 0.0) || !std::isfinite(prep.sigma_x) ||
      !std::isfinite(prep.sigma_p)) {
    throw DomainError("displacement variances must be nonnegative");
  }
  if (prep.sigma_x == 0.0 || prep.sigma_p == 0.0) {
    throw SingularMappingError(
        "zero displacement variance has no entanglement-based equivalent; use a small positive "
        "value such as 1e-6");
  }
}

void validate(const Channel& ch) {
  if (!(ch.eta > 0.0 && ch.eta <= 1.0)) {
    throw DomainError("channel transmittance eta must lie in (0, 1], got " +
                      std::to_string(ch.eta));
  }
  if (!(ch.epsilon >= 0.0) || !std::isfinite(ch.epsilon)) {
    throw DomainError("excess noise epsilon must be nonnegative, got " +
                      std::to_string(ch.epsilon));
  }
}

EprSource pm_to_epr(const Preparation& prep) {
  validate(prep);
  const double v = prep.v;
  const double sx = prep.sigma_x;
  const double sp = prep.sigma_p;

  const double radicand = (v + sx) * (sx + v * sp * (v + sx)) / (1.0 + v * sp);
  if (!(radicand >= 0.0)) {
    throw NumericalError("pm_to_epr: negative radicand " + std::to_string(radicand));
  }
  const double root = std::sqrt(radicand);
  return EprSource{
      .v1 = v + sx - root,
      .v2 = v + sx + root,
      .vm = v * v * sp * (v + sx) / (sx * (1.0 + v * sp)),
  };
}

EprSource rotate_squeezing(const EprSource& src) {
  // After inversion the roles of the squeezed and anti-squeezed beams swap.
  return EprSource{.v1 = 1.0 / src.v2, .v2 = 1.0 / src.v1, .vm = 1.0 / src.vm};
}

CovMatrix build_three_mode_state(const EprSource& src) {
  if (!(src.v1 > 0.0 && src.v1 <= src.v2 && src.vm > 0.0)) {
    throw DomainError("build_three_mode_state: need 0 < v1 <= v2 and vm > 0");
  }
  // Slots (A, C, B) start as (s1, m, s2).
  CovMatrix gamma = CovMatrix::product(
      {{src.v1, 1.0 / src.v1}, {src.vm, 1.0 / src.vm}, {src.v2, 1.0 / src.v2}});
  gamma = apply_beamsplitter(gamma, kAliceMode, kBobMode, 0.5);         // source -> (A0, B)
  gamma = apply_beamsplitter(gamma, kAliceMode, kHeterodyneMode, 0.5);  // heterodyne split
  return gamma;
}

CovMatrix apply_channel(const CovMatrix& gamma, std::size_t bob_mode, const Channel& ch) {
  validate(ch);
  if (bob_mode >= gamma.modes()) {
    throw DomainError("apply_channel: mode index out of range");
  }
  Eigen::MatrixXd m = gamma.matrix();
  const auto bx = static_cast<Eigen::Index>(2 * bob_mode);
  const double scale = std::sqrt(ch.eta);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i == bx || i == bx + 1) continue;
    for (Eigen::Index b : {bx, bx + 1}) {
      m(i, b) *= scale;
      m(b, i) *= scale;
    }
  }
  // cross terms inside Bob's own block scale with eta
  m(bx, bx + 1) *= ch.eta;
  m(bx + 1, bx) *= ch.eta;
  for (Eigen::Index b : {bx, bx + 1}) {
    m(b, b) = ch.eta * (m(b, b) + ch.epsilon - 1.0) + 1.0;
  }
  return CovMatrix(std::move(m));
}

CovMatrix trusted_state(const Preparation& prep, const Channel& ch) {
  return apply_channel(build_three_mode_state(pm_to_epr(prep)), kBobMode, ch);
}

AliceBobMoments source_moments(const EprSource& src) {
  const double inv_root8 = 1.0 / (2.0 * std::numbers::sqrt2);
  return AliceBobMoments{
      .va_x = (src.v1 + src.v2 + 2.0 * src.vm) / 4.0,
      .va_p = 1.0 / (4.0 * src.v1) + 1.0 / (4.0 * src.v2) + 1.0 / (2.0 * src.vm),
      .vb_x = (src.v1 + src.v2) / 2.0,
      .vb_p = 1.0 / (2.0 * src.v1) + 1.0 / (2.0 * src.v2),
      .c_x = (src.v2 - src.v1) * inv_root8,
      .c_p = (1.0 / src.v2 - 1.0 / src.v1) * inv_root8,
  };
}

CovMatrix alice_bob_state(const EprSource& src, const Channel& ch) {
  validate(ch);
  const auto mom = source_moments(src);
  const double root_eta = std::sqrt(ch.eta);
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = mom.va_x;
  m(1, 1) = mom.va_p;
  m(2, 2) = ch.eta * (mom.vb_x + ch.epsilon - 1.0) + 1.0;
  m(3, 3) = ch.eta * (mom.vb_p + ch.epsilon - 1.0) + 1.0;
  m(0, 2) = m(2, 0) = root_eta * mom.c_x;
  m(1, 3) = m(3, 1) = root_eta * mom.c_p;
  return CovMatrix(m);
}

double conditional_variance_b_given_a(const Preparation& prep, const Channel& ch) {
  validate(ch);
  const auto src = pm_to_epr(prep);
  const double diff = src.v1 - src.v2;
  return 0.5 * (2.0 - ch.eta * diff * diff / (src.v1 + src.v2 + 2.0 * src.vm) +
                ch.eta * (src.v1 + src.v2 + 2.0 * ch.epsilon - 2.0));
}

CovMatrix alice_given_bob_closed_form(const EprSource& src, const Channel& ch) {
  validate(ch);
  const auto mom = source_moments(src);
  const double diff = src.v1 - src.v2;
  const double vx =
      mom.va_x -
      ch.eta * diff * diff / (8.0 + 4.0 * ch.eta * (src.v1 + src.v2 + 2.0 * ch.epsilon - 2.0));
  return CovMatrix::product({{vx, mom.va_p}});
}

}  // namespace cvqkd
