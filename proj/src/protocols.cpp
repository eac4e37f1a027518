#include "tsad/protocols.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsad {

namespace {

void require_same_length(const LabelSeries& labels, const PredictionSeries& preds) {
    if (labels.size() != preds.size()) {
        throw std::invalid_argument("labels and predictions differ in length (" +
                                    std::to_string(labels.size()) + " vs " +
                                    std::to_string(preds.size()) + ")");
    }
}

void require_binary(const PredictionSeries& preds, const char* where) {
    if (preds.probabilistic()) {
        throw std::invalid_argument(std::string(where) +
                                    " requires binary predictions");
    }
}

}  // namespace

std::string to_string(Protocol p) {
    switch (p) {
        case Protocol::raw: return "raw";
        case Protocol::pa: return "pa";
        case Protocol::pak: return "pak";
        case Protocol::padf: return "padf";
    }
    throw std::invalid_argument("unknown protocol");
}

std::string to_string(PrecisionMode m) {
    return m == PrecisionMode::decayed ? "decayed" : "adjusted";
}

void ProtocolConfig::validate() const {
    if (!(k >= 0.0 && k <= 100.0)) {
        throw std::invalid_argument("k must be in [0, 100]");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be positive and finite");
    }
    // decay was validated when the DecaySpec was built
}

EffectiveCounts score_raw(const LabelSeries& labels, const PredictionSeries& preds) {
    require_same_length(labels, preds);
    require_binary(preds, "raw scoring");

    EffectiveCounts counts;
    counts.total_points = labels.size();
    counts.total_anomaly = labels.anomaly_count();
    for (std::size_t t = 0; t < labels.size(); ++t) {
        if (!preds.anomaly_at(t)) {
            continue;
        }
        if (labels.is_anomaly(t)) {
            counts.etp += 1.0;
        } else {
            counts.efp += 1.0;
        }
    }
    counts.adjusted_positives = counts.etp;
    return counts;
}

PredictionSeries adjust_pa(const LabelSeries& labels, const PredictionSeries& preds) {
    // PA is PA%K at the everything-counts threshold.
    return adjust_pak(labels, preds, 0.0);
}

PredictionSeries adjust_pak(const LabelSeries& labels, const PredictionSeries& preds,
                            double k) {
    require_same_length(labels, preds);
    require_binary(preds, "point adjustment");
    if (!(k >= 0.0 && k <= 100.0)) {
        throw std::invalid_argument("k must be in [0, 100]");
    }

    std::vector<std::uint8_t> out(preds.size());
    for (std::size_t t = 0; t < preds.size(); ++t) {
        out[t] = preds.anomaly_at(t) ? 1 : 0;
    }
    for (const AnomalySegment& seg : extract_segments(labels)) {
        std::size_t hits = 0;
        for (std::size_t t = seg.start; t <= seg.end; ++t) {
            hits += out[t];
        }
        // Strict comparison: a segment whose hit ratio lands exactly on k
        // stays unadjusted. Cross-multiplied form keeps the small-integer
        // side exact.
        if (100.0 * static_cast<double>(hits) >
            k * static_cast<double>(seg.length())) {
            for (std::size_t t = seg.start; t <= seg.end; ++t) {
                out[t] = 1;
            }
        }
    }
    return PredictionSeries::binary(std::move(out));
}

EffectiveCounts score_padf_binary(const LabelSeries& labels, const PredictionSeries& preds,
                                  const DecaySpec& decay) {
    require_same_length(labels, preds);
    require_binary(preds, "decay-weighted scoring");

    EffectiveCounts counts;
    counts.total_points = labels.size();
    counts.total_anomaly = labels.anomaly_count();

    for (const AnomalySegment& seg : extract_segments(labels)) {
        const double n = static_cast<double>(seg.length());
        for (std::size_t t = seg.start; t <= seg.end; ++t) {
            if (preds.anomaly_at(t)) {
                // The decay restarts at every segment: credit depends only
                // on the first-hit offset within this segment.
                counts.etp += n * decay.at(t - seg.start);
                counts.adjusted_positives += n;
                break;
            }
        }
    }
    for (std::size_t t = 0; t < labels.size(); ++t) {
        if (!labels.is_anomaly(t) && preds.anomaly_at(t)) {
            counts.efp += 1.0;
        }
    }
    return counts;
}

EffectiveCounts score_padf_probabilistic(const LabelSeries& labels,
                                         const PredictionSeries& preds,
                                         const DecaySpec& decay) {
    require_same_length(labels, preds);
    if (!preds.probabilistic()) {
        throw std::invalid_argument("probabilistic scoring requires probability predictions");
    }

    EffectiveCounts counts;
    counts.total_points = labels.size();
    counts.total_anomaly = labels.anomaly_count();

    for (const AnomalySegment& seg : extract_segments(labels)) {
        const double n = static_cast<double>(seg.length());
        // silence = probability that nothing fired before the current
        // offset; the sum accumulates E[decay weight of the first hit].
        double silence = 1.0;
        double expected_weight = 0.0;
        for (std::size_t t = seg.start; t <= seg.end; ++t) {
            const double hit = preds.anomaly_probability_at(t);
            expected_weight += decay.at(t - seg.start) * hit * silence;
            silence *= 1.0 - hit;
        }
        counts.etp += n * expected_weight;
        counts.adjusted_positives += n * (1.0 - silence);
    }
    for (std::size_t t = 0; t < labels.size(); ++t) {
        if (!labels.is_anomaly(t)) {
            counts.efp += preds.anomaly_probability_at(t);
        }
    }
    return counts;
}

EffectiveCounts score(const LabelSeries& labels, const PredictionSeries& preds,
                      const ProtocolConfig& config) {
    config.validate();
    switch (config.protocol) {
        case Protocol::raw:
            return score_raw(labels, preds);
        case Protocol::pa:
            return score_raw(labels, adjust_pa(labels, preds));
        case Protocol::pak:
            return score_raw(labels, adjust_pak(labels, preds, config.k));
        case Protocol::padf:
            return preds.probabilistic()
                       ? score_padf_probabilistic(labels, preds, config.decay)
                       : score_padf_binary(labels, preds, config.decay);
    }
    throw std::invalid_argument("unknown protocol");
}

}  // namespace tsad
