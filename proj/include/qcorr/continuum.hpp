#pragma once
// Position-momentum entangled double-slit correlations. The detector
// coordinate plays the role of the analyzer angle through the spin-1/2
// mapping (half-angle), giving local amplitudes
//   C(x) = (1/sqrt 2) exp(i alpha k (x - x0) / 2)
// whose pairing produces a full-visibility coincidence fringe
//   P(x1, x2) = cos^2(alpha k (x1 - x2) / 2)
// while each detector alone sees a flat rate of 1/2.

#include <string>

#include "qcorr/types.hpp"

namespace qcorr {

struct SlitGeometry {
  double k = 1.0;      // wave number
  double alpha = 1.0;  // angular scaling of the slit pair as seen from the detector
  double x0 = 0.0;     // reference coordinate
};

struct DetectorPos {
  double x = 0.0;
  constexpr DetectorPos(double coordinate = 0.0) : x(coordinate) {}
};

void validate(const SlitGeometry& geom);

ComplexAmplitude slit_amplitude(DetectorPos pos, const SlitGeometry& geom);

// U(x1, x2) = cos(alpha k (x1 - x2) / 2); depends only on x1 - x2.
double twoslit_correlation(DetectorPos x1, DetectorPos x2, const SlitGeometry& geom);

// Coincidence rate U^2 in [0, 1].
double coincidence_pattern(DetectorPos x1, DetectorPos x2, const SlitGeometry& geom);

// Single-detector rate: exactly 1/2, independent of position.
double single_marginal(DetectorPos pos, const SlitGeometry& geom);

// (max - min) / (max + min), extrema evaluated at their analytic locations
// dx = 0 and dx = pi / (alpha k).
double fringe_visibility(const SlitGeometry& geom);

// Fringe period in x1 - x2.
double fringe_period(const SlitGeometry& geom);

// CSV "dx,pattern" with n_points samples of dx in [dx_min, dx_max].
std::string pattern_csv(const SlitGeometry& geom, double dx_min, double dx_max,
                        std::size_t n_points);

}  // namespace qcorr
