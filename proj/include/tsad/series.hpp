#ifndef TSAD_SERIES_HPP
#define TSAD_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tsad {

// Contiguous run of anomalous timestamps, inclusive on both ends, 0-based.
struct AnomalySegment {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start + 1; }

    bool operator==(const AnomalySegment&) const = default;
};

/// Ground-truth labels, one 0/1 value per timestamp. Immutable once built.
class LabelSeries {
public:
    explicit LabelSeries(std::vector<std::uint8_t> values);

    std::size_t size() const { return values_.size(); }
    bool is_anomaly(std::size_t t) const { return values_[t] != 0; }
    const std::vector<std::uint8_t>& values() const { return values_; }
    std::size_t anomaly_count() const { return anomaly_count_; }

    bool operator==(const LabelSeries&) const = default;

private:
    std::vector<std::uint8_t> values_;
    std::size_t anomaly_count_ = 0;
};

/// Real-valued detector output, one finite score per timestamp.
class ScoreSeries {
public:
    explicit ScoreSeries(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double at(std::size_t t) const { return values_[t]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const ScoreSeries&) const = default;

private:
    std::vector<double> values_;
};

// Detector decisions. Binary mode stores hard 0/1 calls; probabilistic mode
// stores the probability that each timestamp is anomalous.
class PredictionSeries {
public:
    static PredictionSeries binary(std::vector<std::uint8_t> values);
    static PredictionSeries probabilities(std::vector<double> values);

    bool probabilistic() const { return probabilistic_; }
    std::size_t size() const { return values_.size(); }

    /// Binary mode only: hard call at t.
    bool anomaly_at(std::size_t t) const { return values_[t] != 0.0; }

    /// Probability of an anomaly at t; 0/1 in binary mode.
    double anomaly_probability_at(std::size_t t) const { return values_[t]; }

    const std::vector<double>& values() const { return values_; }

    bool operator==(const PredictionSeries&) const = default;

private:
    PredictionSeries(std::vector<double> values, bool probabilistic);

    std::vector<double> values_;
    bool probabilistic_ = false;
};

/// All maximal anomalous runs of `labels`, ordered by start. Segments are
/// disjoint and non-adjacent by construction; their lengths sum to the
/// number of 1-labels.
std::vector<AnomalySegment> extract_segments(const LabelSeries& labels);

}  // namespace tsad

#endif
