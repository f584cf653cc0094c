#include "qcorr/amplitude_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcorr {

ComplexAmplitude local_amplitude(AnalyzerSetting setting, const SpinKind& species, double phi) {
  require_finite(setting.theta, "analyzer angle");
  require_finite(phi, "internal phase");
  const double phase = species.scale(setting.theta - phi);
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2;
  return {inv_sqrt2 * std::cos(phase), inv_sqrt2 * std::sin(phase)};
}

double correlation_U(AnalyzerSetting theta1, AnalyzerSetting theta2, const PairSpec& spec) {
  require_finite(theta1.theta, "theta1");
  require_finite(theta2.theta, "theta2");
  require_finite(spec.phi0, "phi0");
  const SpinKind& sk = spec.species;
  return std::cos(sk.scale(theta1.theta - theta2.theta) + sk.scale(spec.phi0));
}

double coincidence_probability(double U) {
  require_finite(U, "U");
  if (U < -1.0 || U > 1.0) throw std::domain_error("coincidence_probability: U outside [-1, 1]");
  return U * U;
}

double bell_correlation_from_U(double U) {
  require_finite(U, "U");
  if (U < -1.0 || U > 1.0) throw std::domain_error("bell_correlation_from_U: U outside [-1, 1]");
  return 2.0 * U * U - 1.0;
}

JointDistribution joint_distribution(AnalyzerSetting theta1, AnalyzerSetting theta2,
                                     const PairSpec& spec) {
  const double u = correlation_U(theta1, theta2, spec);
  const double coinc = u * u;
  const double anti = 1.0 - coinc;
  return {coinc / 2, anti / 2, anti / 2, coinc / 2};
}

}  // namespace qcorr
