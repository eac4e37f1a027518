#ifndef TSAD_METRICS_HPP
#define TSAD_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsad/protocols.hpp"

namespace tsad {

struct MetricReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_beta = 0.0;
    ProtocolConfig config;                 // echo of what produced the numbers
    std::optional<double> threshold;       // set when scores were binarized
    bool no_anomalies = false;             // total_anomaly was 0
    bool no_predictions = false;           // precision denominator was 0

    /// Degenerate-condition names in a fixed order, for report output.
    std::vector<std::string> flags() const;
};

/// F_beta of a precision/recall pair; 0 when both are 0. beta must be > 0.
double f_beta_score(double precision, double recall, double beta);

// Turns counts into precision/recall/F_beta. Degenerate denominators yield
// 0 plus a flag rather than NaN. config supplies beta and, for padf, which
// precision numerator to use; the threshold field is left empty.
MetricReport compute_metrics(const EffectiveCounts& counts, const ProtocolConfig& config);

/// score() followed by compute_metrics().
MetricReport evaluate(const LabelSeries& labels, const PredictionSeries& preds,
                      const ProtocolConfig& config);

}  // namespace tsad

#endif
