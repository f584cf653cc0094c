#pragma once
// Seeded Monte Carlo pair source, two measurement stations and classical
// coincidence matching.
//
// The pair family fixes a joint outcome distribution per setting pair; each
// pair's outcome pair is drawn from it with a single uniform draw keyed by
// (seed, pair_id). Station streams expose only local records (tag, setting,
// outcome); statistics are recovered by matching tags through a classical
// channel. There is no per-station sampling rule that factorizes — the
// model supplies setting-pair-level distributions only, and the engine
// makes that operational content explicit rather than hiding it.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/types.hpp"

namespace qcorr {

enum class Station : std::uint8_t { A, B };

struct PairRecord {
  std::uint64_t pair_id = 0;
  double phi = 0.0;  // internal phase sample in [0, 2*pi)
  PairSpec spec;
};

struct StationEvent {
  Station station = Station::A;
  std::uint64_t pair_tag = 0;
  double setting_rad = 0.0;
  int outcome = +1;  // +1 transmission, -1 absorption
};

struct SettingPair {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double weight = 1.0;
};

enum class ScheduleMode { cyclic, random };

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t n_pairs = 0;
  std::vector<SettingPair> schedule;
  PairSpec spec;
  ScheduleMode schedule_mode = ScheduleMode::cyclic;
};

struct MatchedPair {
  std::uint64_t pair_tag = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  int a = +1;
  int b = +1;
};

struct MatchReport {
  std::vector<MatchedPair> matched;
  std::vector<std::uint64_t> unmatched_a;  // tags seen only in stream A
  std::vector<std::uint64_t> unmatched_b;  // tags seen only in stream B
};

void validate(const RunConfig& config);

// Pure function of (config, index); phi is uniform on [0, 2*pi).
PairRecord pair_record_at(const RunConfig& config, std::uint64_t index);

std::vector<PairRecord> generate_pairs(const RunConfig& config);

// Schedule entry used for a pair. Cyclic mode with equal weights is exact
// round robin; unequal weights use a deterministic low-discrepancy
// assignment proportional to the weights. Both are pure in the index.
std::size_t schedule_entry_at(const RunConfig& config, std::uint64_t index);

// Inverse-CDF sample of a joint distribution from one uniform draw,
// thresholds ordered (++, +-, -+, --).
std::pair<int, int> sample_outcomes(const JointDistribution& dist, double u);

// Draws the outcome pair from the family's joint distribution at the given
// settings. The internal phase of the record never enters.
std::pair<int, int> measure_pair(const PairRecord& pair, AnalyzerSetting theta1,
                                 AnalyzerSetting theta2, double rng_draw);

// Full run: schedule, measure, and emit one event per station per pair
// (A then B). Deterministic for a given config, any thread count.
std::vector<StationEvent> run_events(const RunConfig& config);

// Splits into per-station streams; each holds only local data and their
// union reconstructs the input.
std::pair<std::vector<StationEvent>, std::vector<StationEvent>> station_streams(
    std::span<const StationEvent> events);

// Classical-channel join by pair tag. Duplicate tags within one stream are
// an integrity error; tags present on one side only are reported.
MatchReport coincidence_match(std::span<const StationEvent> stream_a,
                              std::span<const StationEvent> stream_b);

// (N_coincidence - N_anticoincidence) / N == mean of a*b.
double estimate_bell_correlation(std::span<const MatchedPair> matched);

// Deterministic local response sign(cos(theta - lambda)).
int lhv_baseline_measure(double lambda, double theta);

// Correlation estimate of the amplitude model at one setting pair,
// n_pairs samples, integer accumulation (thread-count independent).
double simulate_correlation(const PairSpec& spec, double theta1, double theta2,
                            std::uint64_t n_pairs, std::uint64_t seed);

// Same for the hidden-variable baseline with lambda uniform per pair.
double lhv_correlation(double theta1, double theta2, std::uint64_t n_pairs, std::uint64_t seed);

// Fraction of +1 outcomes per station over a run.
std::pair<double, double> plus_fractions(std::span<const StationEvent> events);

// CSV "pair_tag,station,setting_rad,outcome", outcome spelled +1 / -1.
std::string events_csv(std::span<const StationEvent> events);

// CSV "pair_tag,theta1_rad,theta2_rad,a,b".
std::string matched_csv(std::span<const MatchedPair> matched);

}  // namespace qcorr
