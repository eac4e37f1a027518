#include "tsad/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace tsad {

std::vector<std::string> MetricReport::flags() const {
    std::vector<std::string> out;
    if (no_anomalies) {
        out.push_back("no_anomalies");
    }
    if (no_predictions) {
        out.push_back("no_predictions");
    }
    return out;
}

double f_beta_score(double precision, double recall, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be positive and finite");
    }
    if (precision == 0.0 && recall == 0.0) {
        return 0.0;
    }
    const double b2 = beta * beta;
    return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

MetricReport compute_metrics(const EffectiveCounts& counts, const ProtocolConfig& config) {
    config.validate();

    MetricReport report;
    report.config = config;

    if (counts.total_anomaly == 0) {
        report.no_anomalies = true;
    } else {
        report.recall = counts.etp / static_cast<double>(counts.total_anomaly);
    }

    const double denominator = counts.adjusted_positives + counts.efp;
    if (denominator == 0.0) {
        report.no_predictions = true;
    } else {
        const double numerator = config.precision_mode == PrecisionMode::decayed
                                     ? counts.etp
                                     : counts.adjusted_positives;
        report.precision = numerator / denominator;
    }

    report.f_beta = f_beta_score(report.precision, report.recall, config.beta);
    return report;
}

MetricReport evaluate(const LabelSeries& labels, const PredictionSeries& preds,
                      const ProtocolConfig& config) {
    return compute_metrics(score(labels, preds, config), config);
}

}  // namespace tsad
