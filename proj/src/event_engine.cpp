#include "qcorr/event_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "qcorr/amplitude_model.hpp"
#include "qcorr/io.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {
namespace {

bool equal_weights(const std::vector<SettingPair>& schedule) {
  for (const auto& s : schedule) {
    if (s.weight != schedule.front().weight) return false;
  }
  return true;
}

// Golden-ratio Weyl sequence mapped through the cumulative weight
// intervals: proportional to the weights with O(log n) discrepancy, and a
// pure function of the index.
std::size_t weighted_entry(const std::vector<SettingPair>& schedule, std::uint64_t index) {
  double total = 0.0;
  for (const auto& s : schedule) total += s.weight;
  constexpr double kGoldenConj = 0.6180339887498949;
  const double u = std::fmod(static_cast<double>(index % 4503599627370496ull) * kGoldenConj, 1.0);
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < schedule.size(); ++k) {
    acc += schedule[k].weight / total;
    if (u < acc) return k;
  }
  return schedule.size() - 1;
}

std::size_t random_entry(const std::vector<SettingPair>& schedule, std::uint64_t seed,
                         std::uint64_t index) {
  double total = 0.0;
  for (const auto& s : schedule) total += s.weight;
  const double u = rng::Stream(seed, index, rng::kLaneSchedule).uniform();
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < schedule.size(); ++k) {
    acc += schedule[k].weight / total;
    if (u < acc) return k;
  }
  return schedule.size() - 1;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.n_pairs < 1) throw std::domain_error("run config: n_pairs must be >= 1");
  if (config.schedule.empty()) throw std::domain_error("run config: schedule must not be empty");
  for (const auto& s : config.schedule) {
    require_finite(s.theta1, "schedule theta1");
    require_finite(s.theta2, "schedule theta2");
    require_finite(s.weight, "schedule weight");
    if (s.weight <= 0.0) throw std::domain_error("run config: weights must be positive");
  }
  require_finite(config.spec.phi0, "phi0");
}

PairRecord pair_record_at(const RunConfig& config, std::uint64_t index) {
  PairRecord rec;
  rec.pair_id = index;
  rec.phi = rng::Stream(config.seed, index, rng::kLanePhi).angle();
  rec.spec = config.spec;
  return rec;
}

std::vector<PairRecord> generate_pairs(const RunConfig& config) {
  if (config.n_pairs == 0) return {};
  validate(config);
  std::vector<PairRecord> pairs(config.n_pairs);
  par::for_each_chunk(config.n_pairs, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) pairs[i] = pair_record_at(config, i);
  });
  return pairs;
}

std::size_t schedule_entry_at(const RunConfig& config, std::uint64_t index) {
  const auto& schedule = config.schedule;
  if (schedule.size() == 1) return 0;
  if (config.schedule_mode == ScheduleMode::random) {
    return random_entry(schedule, config.seed, index);
  }
  if (equal_weights(schedule)) return static_cast<std::size_t>(index % schedule.size());
  return weighted_entry(schedule, index);
}

std::pair<int, int> sample_outcomes(const JointDistribution& dist, double u) {
  if (u < dist.p_pp) return {+1, +1};
  if (u < dist.p_pp + dist.p_pm) return {+1, -1};
  if (u < dist.p_pp + dist.p_pm + dist.p_mp) return {-1, +1};
  return {-1, -1};
}

std::pair<int, int> measure_pair(const PairRecord& pair, AnalyzerSetting theta1,
                                 AnalyzerSetting theta2, double rng_draw) {
  return sample_outcomes(joint_distribution(theta1, theta2, pair.spec), rng_draw);
}

std::vector<StationEvent> run_events(const RunConfig& config) {
  validate(config);
  // One joint distribution per schedule entry; pairs only draw and look up.
  std::vector<JointDistribution> joints;
  joints.reserve(config.schedule.size());
  for (const auto& s : config.schedule) {
    joints.push_back(joint_distribution(s.theta1, s.theta2, config.spec));
  }
  std::vector<StationEvent> events(2 * config.n_pairs);
  par::for_each_chunk(config.n_pairs, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      const std::size_t k = schedule_entry_at(config, i);
      const double u = rng::Stream(config.seed, i, rng::kLaneOutcome).uniform();
      const auto [a, bsign] = sample_outcomes(joints[k], u);
      events[2 * i] = {Station::A, i, config.schedule[k].theta1, a};
      events[2 * i + 1] = {Station::B, i, config.schedule[k].theta2, bsign};
    }
  });
  return events;
}

std::pair<std::vector<StationEvent>, std::vector<StationEvent>> station_streams(
    std::span<const StationEvent> events) {
  std::vector<StationEvent> a, b;
  a.reserve(events.size() / 2);
  b.reserve(events.size() / 2);
  for (const auto& ev : events) {
    (ev.station == Station::A ? a : b).push_back(ev);
  }
  return {std::move(a), std::move(b)};
}

MatchReport coincidence_match(std::span<const StationEvent> stream_a,
                              std::span<const StationEvent> stream_b) {
  std::unordered_map<std::uint64_t, const StationEvent*> b_by_tag;
  b_by_tag.reserve(stream_b.size());
  for (const auto& ev : stream_b) {
    if (!b_by_tag.emplace(ev.pair_tag, &ev).second) {
      throw std::runtime_error("coincidence_match: duplicate tag in stream B");
    }
  }
  std::unordered_set<std::uint64_t> a_tags;
  a_tags.reserve(stream_a.size());

  MatchReport report;
  report.matched.reserve(std::min(stream_a.size(), stream_b.size()));
  for (const auto& ev : stream_a) {
    if (!a_tags.insert(ev.pair_tag).second) {
      throw std::runtime_error("coincidence_match: duplicate tag in stream A");
    }
    const auto it = b_by_tag.find(ev.pair_tag);
    if (it == b_by_tag.end()) {
      report.unmatched_a.push_back(ev.pair_tag);
      continue;
    }
    const StationEvent& other = *it->second;
    report.matched.push_back(
        {ev.pair_tag, ev.setting_rad, other.setting_rad, ev.outcome, other.outcome});
  }
  for (const auto& ev : stream_b) {
    if (!a_tags.contains(ev.pair_tag)) report.unmatched_b.push_back(ev.pair_tag);
  }
  return report;
}

double estimate_bell_correlation(std::span<const MatchedPair> matched) {
  if (matched.empty()) throw std::domain_error("estimate_bell_correlation: no matched pairs");
  std::int64_t sum = 0;
  for (const auto& m : matched) sum += static_cast<std::int64_t>(m.a) * m.b;
  return static_cast<double>(sum) / static_cast<double>(matched.size());
}

int lhv_baseline_measure(double lambda, double theta) {
  require_finite(lambda, "lambda");
  require_finite(theta, "theta");
  return std::cos(theta - lambda) >= 0.0 ? +1 : -1;
}

double simulate_correlation(const PairSpec& spec, double theta1, double theta2,
                            std::uint64_t n_pairs, std::uint64_t seed) {
  if (n_pairs < 1) throw std::domain_error("simulate_correlation: n_pairs must be >= 1");
  const JointDistribution joint = joint_distribution(theta1, theta2, spec);
  std::vector<std::int64_t> partial(par::chunk_count(n_pairs), 0);
  par::for_each_chunk(n_pairs, [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
    std::int64_t acc = 0;
    for (std::uint64_t i = b; i < e; ++i) {
      const double u = rng::Stream(seed, i, rng::kLaneOutcome).uniform();
      const auto [a, bsign] = sample_outcomes(joint, u);
      acc += static_cast<std::int64_t>(a) * bsign;
    }
    partial[c] = acc;
  });
  std::int64_t sum = 0;
  for (const auto p : partial) sum += p;
  return static_cast<double>(sum) / static_cast<double>(n_pairs);
}

double lhv_correlation(double theta1, double theta2, std::uint64_t n_pairs, std::uint64_t seed) {
  if (n_pairs < 1) throw std::domain_error("lhv_correlation: n_pairs must be >= 1");
  require_finite(theta1, "theta1");
  require_finite(theta2, "theta2");
  std::vector<std::int64_t> partial(par::chunk_count(n_pairs), 0);
  par::for_each_chunk(n_pairs, [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
    std::int64_t acc = 0;
    for (std::uint64_t i = b; i < e; ++i) {
      const double lambda = rng::Stream(seed, i, rng::kLaneLambda).angle();
      acc += static_cast<std::int64_t>(lhv_baseline_measure(lambda, theta1)) *
             lhv_baseline_measure(lambda, theta2);
    }
    partial[c] = acc;
  });
  std::int64_t sum = 0;
  for (const auto p : partial) sum += p;
  return static_cast<double>(sum) / static_cast<double>(n_pairs);
}

std::pair<double, double> plus_fractions(std::span<const StationEvent> events) {
  std::int64_t plus_a = 0, plus_b = 0, n_a = 0, n_b = 0;
  for (const auto& ev : events) {
    if (ev.station == Station::A) {
      ++n_a;
      if (ev.outcome > 0) ++plus_a;
    } else {
      ++n_b;
      if (ev.outcome > 0) ++plus_b;
    }
  }
  if (n_a == 0 || n_b == 0) throw std::domain_error("plus_fractions: empty station stream");
  return {static_cast<double>(plus_a) / static_cast<double>(n_a),
          static_cast<double>(plus_b) / static_cast<double>(n_b)};
}

std::string events_csv(std::span<const StationEvent> events) {
  std::string out = "pair_tag,station,setting_rad,outcome\n";
  for (const auto& ev : events) {
    out += std::to_string(ev.pair_tag);
    out += ev.station == Station::A ? ",A," : ",B,";
    out += format_double(ev.setting_rad);
    out += ev.outcome > 0 ? ",+1\n" : ",-1\n";
  }
  return out;
}

std::string matched_csv(std::span<const MatchedPair> matched) {
  std::string out = "pair_tag,theta1_rad,theta2_rad,a,b\n";
  for (const auto& m : matched) {
    out += std::to_string(m.pair_tag);
    out += ',';
    out += format_double(m.theta1);
    out += ',';
    out += format_double(m.theta2);
    out += m.a > 0 ? ",+1" : ",-1";
    out += m.b > 0 ? ",+1\n" : ",-1\n";
  }
  return out;
}

}  // namespace qcorr
