#ifndef TSAD_THRESHOLDING_HPP
#define TSAD_THRESHOLDING_HPP

#include <cstddef>

#include "tsad/metrics.hpp"
#include "tsad/series.hpp"

namespace tsad {

struct ThresholdSpec {
    enum class Mode { fixed, sweep };
    enum class Candidates { unique_scores, quantile_grid };

    Mode mode = Mode::sweep;
    double value = 0.5;  // fixed mode only
    Candidates candidates = Candidates::unique_scores;
    std::size_t grid_size = 100;  // quantile_grid only, must be >= 2
};

/// Hard calls from scores: anomaly iff score > theta (strictly).
PredictionSeries binarize(const ScoreSeries& scores, double theta);

struct BestF1Result {
    double theta = 0.0;
    MetricReport report;
};

// Deterministic sweep over threshold candidates, keeping the smallest theta
// among F_beta ties. Candidates are either every distinct score value or a
// quantile grid of spec.grid_size values; both include a sentinel just
// below the minimum score so the all-anomaly prediction is reachable.
// spec.mode must be sweep.
BestF1Result best_f1(const LabelSeries& labels, const ScoreSeries& scores,
                     const ProtocolConfig& config, const ThresholdSpec& spec);

}  // namespace tsad

#endif
