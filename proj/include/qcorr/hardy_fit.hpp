#pragma once
// Searches for local outcome amplitudes reproducing a labeled set of joint
// probabilities. Station amplitudes have the form
//   C1(setting, outcome) = r exp(i (s*theta           + psi)),
//   C2(setting, outcome) = r exp(i (s*(theta - phi0)  + psi)),
// with an independent magnitude r in [0, 1] and phase offset psi per
// (side, setting, outcome), plus the global source offset phi0. The modeled
// joint probability of an outcome pair is [Re(2 C1 C2*)]^2, reported raw
// (no clipping); a unit-weight penalty pushes each setting pair's four
// outcome probabilities to sum to 1.

#include <array>
#include <cstdint>

#include "json.hpp"

#include "qcorr/qm_oracle.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

struct LabeledJointProb {
  int setting1 = 0;  // 0 = a, 1 = a'
  int setting2 = 0;  // 0 = b, 1 = b'
  int outcome1 = +1;
  int outcome2 = +1;
  double value = 0.0;
};

struct HardyTargets {
  SpinKind species = SpinKind::photon();
  std::array<double, 4> settings{};  // a, a_prime, b, b_prime
  std::array<LabeledJointProb, 4> targets{};
};

struct AmplitudeParam {
  double magnitude = 0.5;  // in [0, 1]
  double phase = 0.0;      // offset added to the setting phase, radians
};

struct FitParams {
  // [side][setting][outcome index: 0 for +1, 1 for -1]
  std::array<std::array<std::array<AmplitudeParam, 2>, 2>, 2> amp{};
  double phi0 = 0.0;
};

struct FitResult {
  FitParams params;
  double residual = 0.0;              // sum of squared errors on the four targets
  double normalization_defect = 0.0;  // max over setting pairs of |sum of probs - 1|
  double objective = 0.0;             // residual + normalization penalty
  std::uint64_t evaluations = 0;      // objective evaluations actually spent
};

double model_joint_prob(const FitParams& params, const SpinKind& species,
                        const std::array<double, 4>& settings, int setting1, int setting2,
                        int outcome1, int outcome2);

// Parameter point where the model reduces to the equal-split joint
// distribution of the pair family: all magnitudes 2^(-3/4), minus-outcome
// phases offset by pi/2, phi0 from the spec.
FitParams equal_split_params(const PairSpec& spec);

// Targets in the Hardy slot pattern, with values taken from the family's
// own joint distribution (used as the exactly-representable control case).
HardyTargets targets_from_joint_family(const PairSpec& spec, const std::array<double, 4>& settings);

// Targets copied verbatim from a successful Hardy search.
HardyTargets targets_from_hardy(const qm::HardyResult& hardy);

// Multi-start coordinate descent, deterministic in (targets, budget, seed).
// budget caps objective evaluations per start; starts are independent and
// reduced by (objective, start index).
FitResult fit_local_amplitudes(const HardyTargets& targets, std::uint64_t budget,
                               std::uint64_t seed, int n_starts = 32);

nlohmann::json fit_result_json(const HardyTargets& targets, const FitResult& result,
                               std::uint64_t budget, std::uint64_t seed);

}  // namespace qcorr
