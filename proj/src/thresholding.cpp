#include "tsad/thresholding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tsad {

namespace {

std::vector<double> threshold_candidates(const ScoreSeries& scores,
                                         const ThresholdSpec& spec) {
    std::vector<double> sorted = scores.values();
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> candidates;
    // Strictly below every score, so "alarm everywhere" is one of the
    // evaluated binarizations.
    candidates.push_back(std::nextafter(sorted.front(), -std::numeric_limits<double>::infinity()));

    if (spec.candidates == ThresholdSpec::Candidates::unique_scores) {
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i == 0 || sorted[i] != sorted[i - 1]) {
                candidates.push_back(sorted[i]);
            }
        }
    } else {
        if (spec.grid_size < 2) {
            throw std::invalid_argument("quantile grid needs at least 2 points");
        }
        const std::size_t m = spec.grid_size;
        for (std::size_t i = 0; i < m; ++i) {
            // Nearest-rank quantile at i/(m-1).
            const double q = static_cast<double>(i) / static_cast<double>(m - 1);
            const auto idx = static_cast<std::size_t>(
                std::llround(q * static_cast<double>(sorted.size() - 1)));
            const double value = sorted[idx];
            if (candidates.back() != value) {
                candidates.push_back(value);
            }
        }
    }
    return candidates;  // ascending, distinct
}

}  // namespace

PredictionSeries binarize(const ScoreSeries& scores, double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("threshold must be finite");
    }
    std::vector<std::uint8_t> out(scores.size());
    for (std::size_t t = 0; t < scores.size(); ++t) {
        out[t] = scores.at(t) > theta ? 1 : 0;
    }
    return PredictionSeries::binary(std::move(out));
}

BestF1Result best_f1(const LabelSeries& labels, const ScoreSeries& scores,
                     const ProtocolConfig& config, const ThresholdSpec& spec) {
    if (spec.mode != ThresholdSpec::Mode::sweep) {
        throw std::invalid_argument("best_f1 requires a sweep threshold spec");
    }
    if (labels.size() != scores.size()) {
        throw std::invalid_argument("labels and scores differ in length");
    }
    config.validate();

    BestF1Result best;
    bool have_best = false;
    // Ascending candidates with strict improvement keep the smallest theta
    // among ties, making the sweep deterministic.
    for (double theta : threshold_candidates(scores, spec)) {
        MetricReport report = evaluate(labels, binarize(scores, theta), config);
        report.threshold = theta;
        if (!have_best || report.f_beta > best.report.f_beta) {
            best.theta = theta;
            best.report = report;
            have_best = true;
        }
    }
    return best;
}

}  // namespace tsad
