#ifndef TSAD_ANALYTIC_HPP
#define TSAD_ANALYTIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "tsad/protocols.hpp"

namespace tsad {

// Closed-form behavior of an uninformative detector that draws each score
// uniformly from [0, 1) and alarms when the score exceeds the threshold.
// The series has one anomaly segment of the given length and an overall
// anomaly ratio fixing the segment-to-series proportion.
struct RandomModelParams {
    double theta = 0.5;           // binarization threshold, in [0, 1]
    std::size_t segment_length = 1;
    double anomaly_ratio = 0.05;  // in (0, 1)
    double decay_rate = 1.0;      // in (0, 1]; only the padf forms use it

    void validate() const;
};

/// Probability that a length-N segment is hit at all: 1 - theta^N.
double pa_recall(const RandomModelParams& p);

/// Segment-adjusted precision of the random detector. 0 when the alarm
/// probability vanishes (theta = 1).
double pa_precision(const RandomModelParams& p);

/// Expected decay weight collected per segment point:
/// (1-theta) * (1-(theta*d)^N) / (1-theta*d), with explicit branches for
/// theta*d -> 1 and theta -> 1 instead of relying on cancellation.
double padf_recall(const RandomModelParams& p);

/// Decay-weighted precision of the random detector; 0 at theta = 1.
double padf_precision(const RandomModelParams& p);

struct CurvePoint {
    double theta = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct CurveSpec {
    Protocol protocol = Protocol::padf;  // pa or padf
    std::size_t segment_length = 500;
    double decay_rate = 1.0;
    double anomaly_ratio = 0.05;
};

/// Analytic F1 at each threshold in the grid. F1 follows the same
/// degenerate-case rules as compute_metrics (0 when P = R = 0).
std::vector<CurvePoint> f1_curve(const CurveSpec& spec, std::span<const double> thetas);

}  // namespace tsad

#endif
