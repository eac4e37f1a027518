#ifndef TSAD_PROTOCOLS_HPP
#define TSAD_PROTOCOLS_HPP

#include <cstddef>
#include <string>

#include "tsad/decay.hpp"
#include "tsad/series.hpp"

namespace tsad {

enum class Protocol { raw, pa, pak, padf };

// How the precision numerator treats detection latency:
//   decayed  - late detections shrink the numerator too (same eTP as recall)
//   adjusted - the numerator counts the full span of every detected segment
enum class PrecisionMode { decayed, adjusted };

std::string to_string(Protocol p);
std::string to_string(PrecisionMode m);

struct ProtocolConfig {
    Protocol protocol = Protocol::raw;
    double k = 20.0;  // PA%K percentage threshold, in [0, 100]
    DecaySpec decay = DecaySpec::exponential(0.9);
    PrecisionMode precision_mode = PrecisionMode::decayed;
    double beta = 1.0;

    /// Throws std::invalid_argument on out-of-range parameters. All fields
    /// are validated regardless of the selected protocol.
    void validate() const;
};

// Protocol-agnostic tallies that the metric formulas consume. For raw, PA
// and PA%K these are plain point counts; for PAdf eTP carries the decay
// weights and adjusted_positives the full span of detected segments.
struct EffectiveCounts {
    double etp = 0.0;
    double efp = 0.0;
    double adjusted_positives = 0.0;
    std::size_t total_anomaly = 0;
    std::size_t total_points = 0;

    bool operator==(const EffectiveCounts&) const = default;
};

/// Pointwise counting, no segment logic. Predictions must be binary.
EffectiveCounts score_raw(const LabelSeries& labels, const PredictionSeries& preds);

/// Point adjustment: every segment containing at least one hit is rewritten
/// to all-1 predictions. Points outside segments are untouched.
PredictionSeries adjust_pa(const LabelSeries& labels, const PredictionSeries& preds);

/// PA%K: a segment is adjusted only when 100 * hits / length strictly
/// exceeds k. k = 0 reproduces PA, k = 100 leaves every segment unadjusted.
PredictionSeries adjust_pak(const LabelSeries& labels, const PredictionSeries& preds,
                            double k);

/// Decay-weighted scoring of hard predictions. Each segment contributes
/// length * decay(first-hit offset) to eTP and its full length to
/// adjusted_positives; undetected segments contribute nothing. False
/// positives are counted on the raw predictions outside all segments.
EffectiveCounts score_padf_binary(const LabelSeries& labels, const PredictionSeries& preds,
                                  const DecaySpec& decay);

/// Expectation of score_padf_binary under independent per-timestamp
/// Bernoulli predictions with the given anomaly probabilities.
EffectiveCounts score_padf_probabilistic(const LabelSeries& labels,
                                         const PredictionSeries& preds,
                                         const DecaySpec& decay);

/// Dispatch on config.protocol. Probabilistic predictions are only
/// accepted by the padf protocol.
EffectiveCounts score(const LabelSeries& labels, const PredictionSeries& preds,
                      const ProtocolConfig& config);

}  // namespace tsad

#endif
