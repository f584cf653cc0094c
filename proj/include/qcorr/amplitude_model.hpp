#pragma once
// Local-amplitude model for maximally entangled pairs.
//
// Each particle carries an internal phase phi fixed at the source; only the
// pair difference phi0 is physical. An analyzer at angle theta transmits
// with amplitude C = (1/sqrt 2) exp(i s (theta - phi)). Combining the two
// stations' amplitudes leaves
//
//   U(theta1, theta2) = cos(s (theta1 - theta2) + s phi0),
//
// with U^2 the coincidence probability and 2 U^2 - 1 the correlation of the
// +/-1 outcome products. The per-particle phi cancels in every observable.

#include "qcorr/types.hpp"

namespace qcorr {

// Transmission amplitude of one analyzer, magnitude^2 = 1/2 always.
ComplexAmplitude local_amplitude(AnalyzerSetting setting, const SpinKind& species, double phi);

// U in [-1, 1]; depends on the settings only through theta1 - theta2.
double correlation_U(AnalyzerSetting theta1, AnalyzerSetting theta2, const PairSpec& spec);

// Probability of an equal-outcome pair (++ or --).
double coincidence_probability(double U);

// Average outcome product 2 U^2 - 1.
double bell_correlation_from_U(double U);

// Equal split of the coincidence and anticoincidence classes:
// p_pp = p_mm = U^2 / 2 and p_pm = p_mp = (1 - U^2) / 2, so both one-sided
// marginals are 1/2 at every setting.
JointDistribution joint_distribution(AnalyzerSetting theta1, AnalyzerSetting theta2,
                                     const PairSpec& spec);

}  // namespace qcorr
