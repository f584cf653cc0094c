#include "qcorr/types.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcorr {

PairSpec PairSpec::photon_pair() { return {SpinKind::photon(), std::numbers::pi / 2}; }

PairSpec PairSpec::singlet_pair() { return {SpinKind::half(), std::numbers::pi}; }

double JointDistribution::prob(int outcome_a, int outcome_b) const {
  if (outcome_a > 0) return outcome_b > 0 ? p_pp : p_pm;
  return outcome_b > 0 ? p_mp : p_mm;
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
}

}  // namespace qcorr
