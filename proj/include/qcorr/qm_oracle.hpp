#pragma once
// Reference quantum-mechanical predictions: explicit two-qubit state
// vectors, rank-1 analyzer projectors and the Born rule. This path shares
// no computation with the local-amplitude model, so the two can be compared
// as independent routes to the same statistics.

#include <array>
#include <complex>

#include "qcorr/types.hpp"

namespace qcorr::qm {

using Complex = std::complex<double>;

// Normalized pure state, components ordered (++, +-, -+, --).
struct PureTwoParticleState {
  std::array<Complex, 4> amps{};
  double norm_sq() const;
};

// 2x2 complex matrix, row major; projectors here are Hermitian and rank 1.
struct Projector {
  std::array<Complex, 4> m{};

  Complex trace() const { return m[0] + m[3]; }
  double hermiticity_defect() const;  // max |m - m^dagger| entry
  double idempotency_defect() const;  // max |m^2 - m| entry
};

enum class BellStateKind { photon_anticorrelated, singlet };

// (|+-> - |-+>)/sqrt(2) in the respective computational basis.
PureTwoParticleState bell_state(BellStateKind kind);

// Transmission (+1) / absorption (-1) projector of an analyzer at angle
// theta. Photons project onto cos(theta)|H> + sin(theta)|V>; spin-1/2 uses
// the half-angle spinor of the in-plane axis at theta.
Projector analyzer_projector(const SpinKind& species, double theta, int outcome);

// Born rule <psi| P1(o1) x P2(o2) |psi> for the four outcome pairs.
JointDistribution joint_probs_qm(const PureTwoParticleState& state, const SpinKind& species,
                                 double theta1, double theta2);

// E = sum o1 o2 P(o1, o2).
double correlation_qm(const PureTwoParticleState& state, const SpinKind& species, double theta1,
                      double theta2);

// One Hardy configuration over the real Schmidt family
// cos(chi)|HH> - sin(chi)|VV> with photon analyzers. Zero slots in order:
// (+,- | a,b'), (-,+ | a',b), (+,+ | a',b'); p_star is (+,+ | a,b).
struct HardyResult {
  bool found = false;
  PureTwoParticleState state;
  std::array<double, 4> settings{};  // a, a_prime, b, b_prime
  std::array<double, 3> p_zero{};
  double p_star = 0.0;
  double schmidt_angle = 0.0;  // chi
};

// Best feasible configuration on the slice with fixed chi: settings are
// derived so two zero constraints vanish identically and the third is
// driven below refine_tolerance by bisection. found = false when the slice
// admits no such point.
HardyResult hardy_slice(double schmidt_angle, double refine_tolerance);

// Coarse chi grid of the given density followed by golden-section
// refinement of p_star around the best cell. Never fabricates a solution:
// if no grid cell is feasible the result carries found = false.
HardyResult hardy_search(int grid_density, double refine_tolerance);

}  // namespace qcorr::qm
