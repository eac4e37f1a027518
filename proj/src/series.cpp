#include "tsad/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tsad {

namespace {

void require_nonempty(std::size_t n, const char* what) {
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + " must contain at least one value");
    }
}

}  // namespace

LabelSeries::LabelSeries(std::vector<std::uint8_t> values) : values_(std::move(values)) {
    require_nonempty(values_.size(), "label series");
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (values_[t] > 1) {
            throw std::invalid_argument("label at index " + std::to_string(t) +
                                        " is " + std::to_string(values_[t]) +
                                        ", expected 0 or 1");
        }
        anomaly_count_ += values_[t];
    }
}

ScoreSeries::ScoreSeries(std::vector<double> values) : values_(std::move(values)) {
    require_nonempty(values_.size(), "score series");
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t])) {
            throw std::invalid_argument("score at index " + std::to_string(t) +
                                        " is not finite");
        }
    }
}

PredictionSeries::PredictionSeries(std::vector<double> values, bool probabilistic)
    : values_(std::move(values)), probabilistic_(probabilistic) {}

PredictionSeries PredictionSeries::binary(std::vector<std::uint8_t> values) {
    require_nonempty(values.size(), "prediction series");
    std::vector<double> converted(values.size());
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (values[t] > 1) {
            throw std::invalid_argument("binary prediction at index " + std::to_string(t) +
                                        " is " + std::to_string(values[t]) +
                                        ", expected 0 or 1");
        }
        converted[t] = values[t];
    }
    return PredictionSeries(std::move(converted), false);
}

PredictionSeries PredictionSeries::probabilities(std::vector<double> values) {
    require_nonempty(values.size(), "prediction series");
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (!(values[t] >= 0.0 && values[t] <= 1.0)) {  // also rejects NaN
            throw std::invalid_argument("prediction probability at index " +
                                        std::to_string(t) + " is outside [0, 1]");
        }
    }
    return PredictionSeries(std::move(values), true);
}

std::vector<AnomalySegment> extract_segments(const LabelSeries& labels) {
    std::vector<AnomalySegment> segments;
    const std::size_t n = labels.size();
    std::size_t t = 0;
    while (t < n) {
        if (!labels.is_anomaly(t)) {
            ++t;
            continue;
        }
        AnomalySegment seg{t, t};
        while (seg.end + 1 < n && labels.is_anomaly(seg.end + 1)) {
            ++seg.end;
        }
        segments.push_back(seg);
        t = seg.end + 1;
    }
    return segments;
}

}  // namespace tsad
