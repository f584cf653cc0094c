#include "qcorr/continuum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcorr/io.hpp"

namespace qcorr {

void validate(const SlitGeometry& geom) {
  require_finite(geom.k, "k");
  require_finite(geom.alpha, "alpha");
  require_finite(geom.x0, "x0");
  if (geom.k <= 0.0) throw std::domain_error("slit geometry: k must be > 0");
  if (geom.alpha <= 0.0) throw std::domain_error("slit geometry: alpha must be > 0");
}

ComplexAmplitude slit_amplitude(DetectorPos pos, const SlitGeometry& geom) {
  validate(geom);
  require_finite(pos.x, "detector coordinate");
  const double phase = geom.alpha * geom.k * (pos.x - geom.x0) / 2;
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2;
  return {inv_sqrt2 * std::cos(phase), inv_sqrt2 * std::sin(phase)};
}

double twoslit_correlation(DetectorPos x1, DetectorPos x2, const SlitGeometry& geom) {
  validate(geom);
  require_finite(x1.x, "x1");
  require_finite(x2.x, "x2");
  return std::cos(geom.alpha * geom.k * (x1.x - x2.x) / 2);
}

double coincidence_pattern(DetectorPos x1, DetectorPos x2, const SlitGeometry& geom) {
  const double u = twoslit_correlation(x1, x2, geom);
  return u * u;
}

double single_marginal(DetectorPos pos, const SlitGeometry& geom) {
  validate(geom);
  require_finite(pos.x, "detector coordinate");
  return 0.5;
}

double fringe_visibility(const SlitGeometry& geom) {
  validate(geom);
  const double peak = coincidence_pattern(0.0, 0.0, geom);
  const double trough =
      coincidence_pattern(std::numbers::pi / (geom.alpha * geom.k), 0.0, geom);
  return (peak - trough) / (peak + trough);
}

double fringe_period(const SlitGeometry& geom) {
  validate(geom);
  return 2 * std::numbers::pi / (geom.alpha * geom.k);
}

std::string pattern_csv(const SlitGeometry& geom, double dx_min, double dx_max,
                        std::size_t n_points) {
  validate(geom);
  require_finite(dx_min, "dx_min");
  require_finite(dx_max, "dx_max");
  if (n_points < 2) throw std::domain_error("pattern_csv: need at least 2 points");
  std::string out = "dx,pattern\n";
  const double step = (dx_max - dx_min) / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double dx = dx_min + step * static_cast<double>(i);
    out += format_double(dx);
    out += ',';
    out += format_double(coincidence_pattern(dx, 0.0, geom));
    out += '\n';
  }
  return out;
}

}  // namespace qcorr
