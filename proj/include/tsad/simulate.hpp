#ifndef TSAD_SIMULATE_HPP
#define TSAD_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsad/protocols.hpp"
#include "tsad/series.hpp"
#include "tsad/thresholding.hpp"

namespace tsad {

struct MetricStats {
    double mean = 0.0;
    double variance = 0.0;  // population variance; 0 for a single trial
};

struct TrialStats {
    MetricStats precision;
    MetricStats recall;
    MetricStats f1;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

/// Uniform [0, 1) scores from a fixed, portable generator (mt19937_64 with
/// 53-bit mantissa mapping), so a given seed reproduces everywhere.
ScoreSeries random_scores(std::size_t length, std::uint64_t seed);

/// Seed for trial `index` of a run seeded with `seed`. Distinct trials get
/// decorrelated substreams; the mapping is pure arithmetic (SplitMix64).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

// Scores n_trials random detectors against the given labels, thresholds
// each trial per `threshold` (fixed value or best-F1 sweep), and aggregates
// precision/recall/F_beta with a streaming mean/variance. Deterministic in
// (seed, n_trials, config, threshold).
TrialStats run_baseline(const LabelSeries& labels, const ProtocolConfig& config,
                        std::size_t n_trials, std::uint64_t seed,
                        const ThresholdSpec& threshold);

// Declarative single-scenario builder used by the case suites and tests.
// Segment hits are given as offsets from the segment start; a segment with
// no first_hit_delay is missed entirely.
struct SegmentSpec {
    std::size_t start = 0;
    std::size_t length = 1;
    std::optional<std::size_t> first_hit_delay;
    std::vector<std::size_t> extra_hit_offsets;  // each > first_hit_delay
};

struct ScenarioSpec {
    std::size_t length = 1;
    std::vector<SegmentSpec> segments;              // disjoint, non-adjacent
    std::vector<std::size_t> false_positive_at;     // outside all segments
};

/// Labels and binary predictions realizing the scenario. Throws
/// std::invalid_argument when the layout is inconsistent; the produced
/// labels round-trip through extract_segments back to the given layout.
std::pair<LabelSeries, PredictionSeries> build_scenario(const ScenarioSpec& spec);

struct RobustnessCase {
    std::string name;
    std::string description;
    ScenarioSpec scenario;
};

/// Canonical detector-behavior suite: a missed segment, first hits at
/// increasing delay, duplicate late hits, false-positive variants and
/// prediction blocks overlapping the segment to varying degree.
std::vector<RobustnessCase> delay_robustness_suite();

}  // namespace tsad

#endif
