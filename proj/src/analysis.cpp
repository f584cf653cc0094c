#include "qcorr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qcorr/amplitude_model.hpp"
#include "qcorr/event_engine.hpp"
#include "qcorr/io.hpp"
#include "qcorr/qm_oracle.hpp"

namespace qcorr {
namespace {

constexpr double kPi = std::numbers::pi;

double table_lookup(const CorrelationTable& P, double theta1, double theta2) {
  const auto it = P.find({theta1, theta2});
  if (it == P.end()) throw std::domain_error("chsh_statistic: missing correlation table entry");
  return it->second;
}

}  // namespace

ChshSettings canonical_chsh_settings(Species species) {
  if (species == Species::photon) return {0.0, kPi / 4, kPi / 8, 3 * kPi / 8};
  return {0.0, kPi / 2, kPi / 4, 3 * kPi / 4};
}

double chsh_statistic(const CorrelationFn& P, const ChshSettings& s) {
  if (!P) throw std::domain_error("chsh_statistic: missing correlation function");
  return std::abs(P(s.a, s.b) - P(s.a, s.b_prime) + P(s.a_prime, s.b) +
                  P(s.a_prime, s.b_prime));
}

double chsh_statistic(const CorrelationTable& P, const ChshSettings& s) {
  return std::abs(table_lookup(P, s.a, s.b) - table_lookup(P, s.a, s.b_prime) +
                  table_lookup(P, s.a_prime, s.b) + table_lookup(P, s.a_prime, s.b_prime));
}

ScanReport scan_settings(const PairSpec& spec, std::span<const double> dtheta_grid,
                         const ScanOptions& options) {
  if (dtheta_grid.empty()) throw std::domain_error("scan_settings: empty grid");
  const qm::PureTwoParticleState oracle_state =
      qm::bell_state(spec.species.label == Species::photon ? qm::BellStateKind::photon_anticorrelated
                                                           : qm::BellStateKind::singlet);
  ScanReport report;
  report.points.resize(dtheta_grid.size());
  for (std::size_t i = 0; i < dtheta_grid.size(); ++i) {
    const double dtheta = dtheta_grid[i];
    ScanPoint& pt = report.points[i];
    pt.dtheta = dtheta;
    pt.model_P = bell_correlation_from_U(correlation_U(dtheta, 0.0, spec));
    pt.oracle_E = qm::correlation_qm(oracle_state, spec.species, dtheta, 0.0);
    if (options.mc_pairs_per_point > 0) {
      pt.mc_P = simulate_correlation(spec, dtheta, 0.0, options.mc_pairs_per_point,
                                     options.seed + i);
    }
    pt.abs_diff = std::abs(pt.model_P - pt.oracle_E);
    report.max_abs_diff = std::max(report.max_abs_diff, pt.abs_diff);
  }
  return report;
}

std::string scan_csv(const ScanReport& report) {
  std::string out = "dtheta_rad,model_P,oracle_E,mc_P,abs_diff\n";
  for (const auto& pt : report.points) {
    out += format_double(pt.dtheta);
    out += ',';
    out += format_double(pt.model_P);
    out += ',';
    out += format_double(pt.oracle_E);
    out += ',';
    out += format_double(pt.mc_P);
    out += ',';
    out += format_double(pt.abs_diff);
    out += '\n';
  }
  return out;
}

ScanReport scan_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "dtheta_rad,model_P,oracle_E,mc_P,abs_diff") {
    throw std::runtime_error("scan_from_csv: bad header");
  }
  ScanReport report;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    double vals[5];
    for (double& val : vals) {
      if (!std::getline(row, cell, ',')) throw std::runtime_error("scan_from_csv: short row");
      val = std::strtod(cell.c_str(), nullptr);
    }
    ScanPoint pt;
    pt.dtheta = vals[0];
    pt.model_P = vals[1];
    pt.oracle_E = vals[2];
    pt.mc_P = vals[3];
    pt.abs_diff = std::abs(pt.model_P - pt.oracle_E);  // recomputed, column 4 ignored
    report.points.push_back(pt);
    report.max_abs_diff = std::max(report.max_abs_diff, pt.abs_diff);
  }
  return report;
}

double visibility(std::span<const double> pattern) {
  if (pattern.empty()) throw std::domain_error("visibility: empty pattern");
  double lo = pattern[0], hi = pattern[0];
  for (const double v : pattern) {
    if (v < 0.0) throw std::domain_error("visibility: pattern must be nonnegative");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == 0.0) throw std::domain_error("visibility: pattern is identically zero");
  return (hi - lo) / (hi + lo);
}

double period_from_crossings(const std::function<double(double)>& f, double level, double x_lo,
                             double x_hi, int n_scan) {
  if (!(x_hi > x_lo)) throw std::domain_error("period_from_crossings: bad interval");
  if (n_scan < 8) throw std::domain_error("period_from_crossings: too few scan points");
  const auto g = [&](double x) { return f(x) - level; };

  std::vector<double> crossings;
  std::vector<int> direction;
  const double step = (x_hi - x_lo) / (n_scan - 1);
  double x_prev = x_lo, g_prev = g(x_prev);
  for (int i = 1; i < n_scan; ++i) {
    const double x = x_lo + step * i;
    const double gi = g(x);
    if ((g_prev < 0.0 && gi >= 0.0) || (g_prev > 0.0 && gi <= 0.0)) {
      double lo = x_prev, hi = x, glo = g_prev;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((glo <= 0.0) == (gm <= 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      crossings.push_back(0.5 * (lo + hi));
      direction.push_back(g_prev < 0.0 ? +1 : -1);
    }
    x_prev = x;
    g_prev = gi;
  }
  for (std::size_t i = 0; i + 2 < crossings.size(); ++i) {
    if (direction[i] == direction[i + 2]) return crossings[i + 2] - crossings[i];
  }
  throw std::domain_error("period_from_crossings: fewer than three crossings found");
}

nlohmann::json chsh_report_json(const ChshSettings& s, const std::array<double, 4>& correlations,
                                double S) {
  return nlohmann::json{
      {"settings",
       {{"a", s.a}, {"a_prime", s.a_prime}, {"b", s.b}, {"b_prime", s.b_prime}}},
      {"correlations",
       {{"ab", correlations[0]},
        {"ab_prime", correlations[1]},
        {"a_prime_b", correlations[2]},
        {"a_prime_b_prime", correlations[3]}}},
      {"S", S},
      {"bound_violated", S > 2.0}};
}

}  // namespace qcorr
