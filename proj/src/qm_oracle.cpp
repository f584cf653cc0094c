#include "qcorr/qm_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qcorr/parallel.hpp"

namespace qcorr::qm {
namespace {

constexpr double kPi = std::numbers::pi;

// Unit vector the analyzer projects onto for a given outcome.
std::array<double, 2> analyzer_axis(const SpinKind& species, double theta, int outcome) {
  const double ang = species.scale(theta);  // full angle for photons, theta/2 for spin-1/2
  if (outcome > 0) return {std::cos(ang), std::sin(ang)};
  return {-std::sin(ang), std::cos(ang)};
}

// <v1 v2|psi> for real single-particle axes.
Complex joint_amplitude(const PureTwoParticleState& psi, const std::array<double, 2>& v1,
                        const std::array<double, 2>& v2) {
  Complex acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      acc += v1[i] * v2[j] * psi.amps[static_cast<std::size_t>(2 * i + j)];
    }
  }
  return acc;
}

PureTwoParticleState schmidt_state(double chi) {
  PureTwoParticleState s;
  s.amps = {std::cos(chi), 0.0, 0.0, -std::sin(chi)};
  return s;
}

struct HardySlicePoint {
  bool ok = false;
  double a = 0.0;       // common unprimed setting (b = a)
  double w = 0.0;       // common primed setting (a' = b' = w)
  double p_star = 0.0;
};

// Signed amplitude of the (+,+ | a',b') slot as a function of a; its root
// is the feasibility condition of the slice.
double third_zero_amplitude(double chi, double a) {
  const double w = std::atan(-std::tan(chi) * std::tan(a));
  const double cw = std::cos(w), sw = std::sin(w);
  return std::cos(chi) * cw * cw - std::sin(chi) * sw * sw;
}

HardySlicePoint solve_slice(double chi, double refine_tolerance) {
  HardySlicePoint pt;
  constexpr double kEdge = 1e-9;
  double lo = kEdge, hi = kPi / 2 - kEdge;
  double flo = third_zero_amplitude(chi, lo);
  double fhi = third_zero_amplitude(chi, hi);
  if (!(flo > 0.0) || !(fhi < 0.0)) return pt;  // no bracket on this slice
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = third_zero_amplitude(chi, mid);
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  pt.a = 0.5 * (lo + hi);
  pt.w = std::atan(-std::tan(chi) * std::tan(pt.a));
  const double residual = third_zero_amplitude(chi, pt.a);
  if (residual * residual > refine_tolerance) return pt;  // refinement failed
  const PureTwoParticleState psi = schmidt_state(chi);
  const auto plus_a = analyzer_axis(SpinKind::photon(), pt.a, +1);
  pt.p_star = std::norm(joint_amplitude(psi, plus_a, plus_a));
  pt.ok = true;
  return pt;
}

HardyResult result_from_slice(double chi, const HardySlicePoint& pt) {
  HardyResult r;
  r.schmidt_angle = chi;
  r.state = schmidt_state(chi);
  if (!pt.ok) return r;
  r.settings = {pt.a, pt.w, pt.a, pt.w};
  const SpinKind photon = SpinKind::photon();
  const auto& st = r.settings;
  const JointDistribution d_ab = joint_probs_qm(r.state, photon, st[0], st[2]);
  const JointDistribution d_abp = joint_probs_qm(r.state, photon, st[0], st[3]);
  const JointDistribution d_apb = joint_probs_qm(r.state, photon, st[1], st[2]);
  const JointDistribution d_apbp = joint_probs_qm(r.state, photon, st[1], st[3]);
  r.p_zero = {d_abp.prob(+1, -1), d_apb.prob(-1, +1), d_apbp.prob(+1, +1)};
  r.p_star = d_ab.prob(+1, +1);
  r.found = true;
  return r;
}

}  // namespace

double PureTwoParticleState::norm_sq() const {
  double n = 0.0;
  for (const auto& a : amps) n += std::norm(a);
  return n;
}

double Projector::hermiticity_defect() const {
  double d = std::abs(m[1] - std::conj(m[2]));
  d = std::max(d, std::abs(m[0].imag()));
  d = std::max(d, std::abs(m[3].imag()));
  return d;
}

double Projector::idempotency_defect() const {
  // m^2 - m entrywise
  const Complex q00 = m[0] * m[0] + m[1] * m[2] - m[0];
  const Complex q01 = m[0] * m[1] + m[1] * m[3] - m[1];
  const Complex q10 = m[2] * m[0] + m[3] * m[2] - m[2];
  const Complex q11 = m[2] * m[1] + m[3] * m[3] - m[3];
  return std::max({std::abs(q00), std::abs(q01), std::abs(q10), std::abs(q11)});
}

PureTwoParticleState bell_state(BellStateKind kind) {
  (void)kind;  // same amplitudes in the H/V and up/down bases
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2;
  PureTwoParticleState s;
  s.amps = {0.0, inv_sqrt2, -inv_sqrt2, 0.0};
  return s;
}

Projector analyzer_projector(const SpinKind& species, double theta, int outcome) {
  require_finite(theta, "analyzer angle");
  if (outcome != 1 && outcome != -1) throw std::domain_error("outcome must be +1 or -1");
  const auto v = analyzer_axis(species, theta, outcome);
  Projector p;
  p.m = {v[0] * v[0], v[0] * v[1], v[1] * v[0], v[1] * v[1]};
  return p;
}

JointDistribution joint_probs_qm(const PureTwoParticleState& state, const SpinKind& species,
                                 double theta1, double theta2) {
  if (std::abs(state.norm_sq() - 1.0) > 1e-12) {
    throw std::domain_error("joint_probs_qm: state is not normalized");
  }
  const int outcomes[2] = {+1, -1};
  double p[2][2];
  for (int i = 0; i < 2; ++i) {
    const auto v1 = analyzer_axis(species, theta1, outcomes[i]);
    for (int j = 0; j < 2; ++j) {
      const auto v2 = analyzer_axis(species, theta2, outcomes[j]);
      // rank-1 projectors: <psi|P1 x P2|psi> = |<v1 v2|psi>|^2
      p[i][j] = std::norm(joint_amplitude(state, v1, v2));
    }
  }
  return {p[0][0], p[0][1], p[1][0], p[1][1]};
}

double correlation_qm(const PureTwoParticleState& state, const SpinKind& species, double theta1,
                      double theta2) {
  return joint_probs_qm(state, species, theta1, theta2).correlation();
}

HardyResult hardy_slice(double schmidt_angle, double refine_tolerance) {
  require_finite(schmidt_angle, "schmidt angle");
  return result_from_slice(schmidt_angle, solve_slice(schmidt_angle, refine_tolerance));
}

HardyResult hardy_search(int grid_density, double refine_tolerance) {
  if (grid_density < 8) throw std::domain_error("hardy_search: grid_density must be >= 8");
  if (!(refine_tolerance > 0.0)) throw std::domain_error("hardy_search: tolerance must be > 0");

  // Coarse grid over the open interval (0, pi/2).
  std::vector<double> chis(static_cast<std::size_t>(grid_density));
  std::vector<HardySlicePoint> cells(chis.size());
  const double step = (kPi / 2) / (grid_density + 1);
  for (int j = 0; j < grid_density; ++j) chis[static_cast<std::size_t>(j)] = step * (j + 1);
  par::for_each_chunk(chis.size(), [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t j = b; j < e; ++j) cells[j] = solve_slice(chis[j], refine_tolerance);
  });

  // Deterministic reduction: max p_star, ties to the smaller chi.
  std::ptrdiff_t best = -1;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    if (!cells[j].ok) continue;
    if (best < 0 || cells[j].p_star > cells[static_cast<std::size_t>(best)].p_star) {
      best = static_cast<std::ptrdiff_t>(j);
    }
  }
  if (best < 0) return HardyResult{};  // explicit no-solution result

  // Golden-section refinement of p_star(chi) around the best cell.
  const auto slice_value = [&](double chi) {
    const HardySlicePoint pt = solve_slice(chi, refine_tolerance);
    return pt.ok ? pt.p_star : -1.0;
  };
  double lo = chis[static_cast<std::size_t>(best)] - step;
  double hi = chis[static_cast<std::size_t>(best)] + step;
  lo = std::max(lo, step * 1e-3);
  hi = std::min(hi, kPi / 2 - step * 1e-3);
  constexpr double kGolden = 0.6180339887498949;
  double m1 = hi - kGolden * (hi - lo), m2 = lo + kGolden * (hi - lo);
  double f1 = slice_value(m1), f2 = slice_value(m2);
  for (int it = 0; it < 120 && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + kGolden * (hi - lo);
      f2 = slice_value(m2);
    } else {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - kGolden * (hi - lo);
      f1 = slice_value(m1);
    }
  }
  const double chi_opt = 0.5 * (lo + hi);
  return result_from_slice(chi_opt, solve_slice(chi_opt, refine_tolerance));
}

}  // namespace qcorr::qm
