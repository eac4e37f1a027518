#include "tsad/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "tsad/metrics.hpp"

namespace tsad {

namespace {

// Welford accumulator; variance() is the population variance, which is 0
// for a single sample.
class RunningStats {
public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    MetricStats finish() const {
        MetricStats stats;
        stats.mean = mean_;
        stats.variance = count_ > 0 ? m2_ / static_cast<double>(count_) : 0.0;
        return stats;
    }

private:
    std::size_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

ScoreSeries random_scores(std::size_t length, std::uint64_t seed) {
    if (length == 0) {
        throw std::invalid_argument("score series length must be at least 1");
    }
    std::mt19937_64 engine(seed);
    std::vector<double> values(length);
    for (double& v : values) {
        // Top 53 bits -> [0, 1). Avoids std::uniform_real_distribution,
        // whose output differs between standard library implementations.
        v = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }
    return ScoreSeries(std::move(values));
}

TrialStats run_baseline(const LabelSeries& labels, const ProtocolConfig& config,
                        std::size_t n_trials, std::uint64_t seed,
                        const ThresholdSpec& threshold) {
    if (n_trials == 0) {
        throw std::invalid_argument("need at least one trial");
    }
    config.validate();

    RunningStats precision, recall, f1;
    for (std::size_t trial = 0; trial < n_trials; ++trial) {
        const ScoreSeries scores = random_scores(labels.size(), trial_seed(seed, trial));
        MetricReport report;
        if (threshold.mode == ThresholdSpec::Mode::fixed) {
            report = evaluate(labels, binarize(scores, threshold.value), config);
        } else {
            report = best_f1(labels, scores, config, threshold).report;
        }
        precision.add(report.precision);
        recall.add(report.recall);
        f1.add(report.f_beta);
    }

    TrialStats stats;
    stats.precision = precision.finish();
    stats.recall = recall.finish();
    stats.f1 = f1.finish();
    stats.trials = n_trials;
    stats.seed = seed;
    return stats;
}

std::pair<LabelSeries, PredictionSeries> build_scenario(const ScenarioSpec& spec) {
    if (spec.length == 0) {
        throw std::invalid_argument("scenario length must be at least 1");
    }

    std::vector<SegmentSpec> segments = spec.segments;
    std::sort(segments.begin(), segments.end(),
              [](const SegmentSpec& a, const SegmentSpec& b) { return a.start < b.start; });

    std::vector<std::uint8_t> labels(spec.length, 0);
    std::vector<std::uint8_t> preds(spec.length, 0);

    std::size_t min_next_start = 0;
    for (const SegmentSpec& seg : segments) {
        if (seg.length == 0) {
            throw std::invalid_argument("segment length must be at least 1");
        }
        if (seg.start < min_next_start) {
            throw std::invalid_argument("segments must be disjoint and non-adjacent");
        }
        const std::size_t end = seg.start + seg.length - 1;
        if (end >= spec.length) {
            throw std::invalid_argument("segment extends past the series end");
        }
        for (std::size_t t = seg.start; t <= end; ++t) {
            labels[t] = 1;
        }

        if (seg.first_hit_delay) {
            if (*seg.first_hit_delay >= seg.length) {
                throw std::invalid_argument("first-hit delay must be smaller than the segment");
            }
            preds[seg.start + *seg.first_hit_delay] = 1;
            for (std::size_t offset : seg.extra_hit_offsets) {
                if (offset <= *seg.first_hit_delay || offset >= seg.length) {
                    throw std::invalid_argument(
                        "extra hits must fall strictly between the first hit and the segment end");
                }
                preds[seg.start + offset] = 1;
            }
        } else if (!seg.extra_hit_offsets.empty()) {
            throw std::invalid_argument("a missed segment cannot have extra hits");
        }

        // +2 keeps a gap so extraction cannot merge neighbors.
        min_next_start = end + 2;
    }

    for (std::size_t t : spec.false_positive_at) {
        if (t >= spec.length) {
            throw std::invalid_argument("false positive position past the series end");
        }
        if (labels[t] != 0) {
            throw std::invalid_argument("false positive position " + std::to_string(t) +
                                        " falls inside a segment");
        }
        preds[t] = 1;
    }

    return {LabelSeries(std::move(labels)),
            PredictionSeries::binary(std::move(preds))};
}

std::vector<RobustnessCase> delay_robustness_suite() {
    // One length-20 segment at [40, 59] in a length-100 series. Case order:
    // a full miss, first hits at growing delay, immediate hits with extra
    // late hits, false-positive variants, then prediction blocks whose
    // overlap with the segment improves.
    constexpr std::size_t kLength = 100;
    constexpr std::size_t kStart = 40;
    constexpr std::size_t kSegLen = 20;

    auto single = [](std::optional<std::size_t> delay, std::vector<std::size_t> extras,
                     std::vector<std::size_t> fps) {
        ScenarioSpec spec;
        spec.length = kLength;
        spec.segments = {{kStart, kSegLen, delay, std::move(extras)}};
        spec.false_positive_at = std::move(fps);
        return spec;
    };
    auto block = [](std::size_t from, std::size_t to) {
        std::vector<std::size_t> out;
        for (std::size_t t = from; t <= to; ++t) {
            out.push_back(t);
        }
        return out;
    };

    std::vector<RobustnessCase> cases;
    cases.push_back({"all-miss", "no predictions at all", single(std::nullopt, {}, {})});
    for (std::size_t j = 0; j <= 6; ++j) {
        cases.push_back({"delay-" + std::to_string(j),
                         "single hit " + std::to_string(j) + " steps after segment start",
                         single(j, {}, {})});
    }
    cases.push_back({"early-extra-1", "immediate hit plus one at offset 5", single(0, {5}, {})});
    cases.push_back({"early-extra-2", "immediate hit plus one at offset 10", single(0, {10}, {})});
    cases.push_back({"early-extra-3", "immediate hit plus one at offset 15", single(0, {15}, {})});
    cases.push_back({"delay-0-with-fp", "immediate hit and three later false positives",
                     single(0, {}, {70, 71, 72})});
    cases.push_back({"fp-only", "contiguous false-positive block with the segment missed",
                     single(std::nullopt, {}, block(65, 84))});

    // Continuous prediction runs ending exactly at the segment end; the
    // head sticking out before the segment shrinks case by case.
    auto overlap = [&](std::size_t head) {
        std::vector<std::size_t> extras;
        for (std::size_t o = 1; o < kSegLen; ++o) {
            extras.push_back(o);
        }
        std::vector<std::size_t> fps =
            head == 0 ? std::vector<std::size_t>{} : block(kStart - head, kStart - 1);
        return single(0, extras, fps);
    };
    cases.push_back({"overlap-wide", "full coverage with nine points of early spill", overlap(9)});
    cases.push_back({"overlap-mid", "full coverage with five points of early spill", overlap(5)});
    cases.push_back({"overlap-exact", "prediction block equals the segment", overlap(0)});

    return cases;
}

}  // namespace tsad
