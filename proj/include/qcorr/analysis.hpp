#pragma once
// Setting scans, the CHSH statistic, and fringe analysis helpers.

#include <array>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "qcorr/types.hpp"

namespace qcorr {

struct ChshSettings {
  double a = 0.0;
  double a_prime = 0.0;
  double b = 0.0;
  double b_prime = 0.0;
};

// Standard maximizers: photon (0, pi/4, pi/8, 3pi/8); spin-1/2
// (0, pi/2, pi/4, 3pi/4).
ChshSettings canonical_chsh_settings(Species species);

using CorrelationFn = std::function<double(double theta1, double theta2)>;
using CorrelationTable = std::map<std::pair<double, double>, double>;

// S = |P(a,b) - P(a,b') + P(a',b) + P(a',b')|
double chsh_statistic(const CorrelationFn& P, const ChshSettings& s);
// Table lookup by exact (theta1, theta2); a missing entry is a domain error.
double chsh_statistic(const CorrelationTable& P, const ChshSettings& s);

struct ScanPoint {
  double dtheta = 0.0;
  double model_P = 0.0;
  double oracle_E = 0.0;
  double mc_P = std::numeric_limits<double>::quiet_NaN();
  double abs_diff = 0.0;  // |model_P - oracle_E|
};

struct ScanOptions {
  std::uint64_t mc_pairs_per_point = 0;  // 0 leaves the Monte Carlo column NaN
  std::uint64_t seed = 0;
};

struct ScanReport {
  std::vector<ScanPoint> points;
  double max_abs_diff = 0.0;
};

// Tabulates the amplitude model against the Born-rule oracle over a grid of
// relative angles (theta1 = dtheta, theta2 = 0). The oracle state is the
// species' canonical Bell state.
ScanReport scan_settings(const PairSpec& spec, std::span<const double> dtheta_grid,
                         const ScanOptions& options = {});

// CSV "dtheta_rad,model_P,oracle_E,mc_P,abs_diff".
std::string scan_csv(const ScanReport& report);
// Parses the CSV form; the abs_diff column is recomputed, not trusted.
ScanReport scan_from_csv(const std::string& text);

// (max - min) / (max + min) of a nonnegative sampled pattern.
double visibility(std::span<const double> pattern);

// Distance between the first and third crossing of f through `level`
// (same-direction crossings, bisection refined): the period of an
// oscillation around that level.
double period_from_crossings(const std::function<double(double)>& f, double level, double x_lo,
                             double x_hi, int n_scan = 20001);

// {settings, correlations, S, bound_violated} with bound_violated = S > 2.
nlohmann::json chsh_report_json(const ChshSettings& s, const std::array<double, 4>& correlations,
                                double S);

}  // namespace qcorr
