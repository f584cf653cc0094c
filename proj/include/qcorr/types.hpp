#pragma once
// Shared domain types for the two-particle correlation models.

#include <complex>

namespace qcorr {

using ComplexAmplitude = std::complex<double>;

enum class Species { photon, half };

// Spin magnitude kept as an exact rational (1 or 1/2); it multiplies an
// angle only at evaluation time, so s*x never carries a stored rounding.
struct SpinKind {
  Species label = Species::photon;
  int num = 1;
  int den = 1;

  static constexpr SpinKind photon() { return {Species::photon, 1, 1}; }
  static constexpr SpinKind half() { return {Species::half, 1, 2}; }
  static constexpr SpinKind from(Species sp) {
    return sp == Species::photon ? photon() : half();
  }

  constexpr double spin() const { return static_cast<double>(num) / den; }
  constexpr double scale(double radians) const { return radians * num / den; }
};

// Lab-frame analyzer angle, radians, unnormalized (trigonometry handles
// periodicity; spin-1/2 quantities are 4*pi periodic in this variable).
struct AnalyzerSetting {
  double theta = 0.0;
  constexpr AnalyzerSetting(double t = 0.0) : theta(t) {}
};

// One entangled-pair family: the species plus the source phase offset.
struct PairSpec {
  SpinKind species = SpinKind::photon();
  double phi0 = 0.0;

  static PairSpec photon_pair();   // orthogonally polarized photons, phi0 = pi/2
  static PairSpec singlet_pair();  // spin-1/2 singlet, phi0 = pi
};

// Probabilities of the outcome pairs (++, +-, -+, --) at one setting pair.
struct JointDistribution {
  double p_pp = 0.0;
  double p_pm = 0.0;
  double p_mp = 0.0;
  double p_mm = 0.0;

  double sum() const { return p_pp + p_pm + p_mp + p_mm; }
  double marginal_plus_a() const { return p_pp + p_pm; }
  double marginal_plus_b() const { return p_pp + p_mp; }
  // Average of the +/-1 outcome product.
  double correlation() const { return p_pp + p_mm - p_pm - p_mp; }
  double prob(int outcome_a, int outcome_b) const;
};

void require_finite(double value, const char* what);

}  // namespace qcorr
