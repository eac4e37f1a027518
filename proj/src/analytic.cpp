#include "tsad/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "tsad/metrics.hpp"

namespace tsad {

namespace {

// Below this distance from 1 the geometric-sum quotient is replaced by its
// limit; the quotient itself is stable well past this point.
constexpr double kLimitBand = 1e-15;

double geometric_sum(double x, std::size_t n) {
    // sum_{i=0}^{n-1} x^i
    if (std::abs(1.0 - x) < kLimitBand) {
        return static_cast<double>(n);
    }
    return (1.0 - std::pow(x, static_cast<double>(n))) / (1.0 - x);
}

}  // namespace

void RandomModelParams::validate() const {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::invalid_argument("theta must be in [0, 1]");
    }
    if (segment_length == 0) {
        throw std::invalid_argument("segment length must be at least 1");
    }
    if (!(anomaly_ratio > 0.0 && anomaly_ratio < 1.0)) {
        throw std::invalid_argument("anomaly ratio must be in (0, 1)");
    }
    if (!(decay_rate > 0.0 && decay_rate <= 1.0)) {
        throw std::invalid_argument("decay rate must be in (0, 1]");
    }
}

double pa_recall(const RandomModelParams& p) {
    p.validate();
    if (p.theta == 1.0) {
        return 0.0;
    }
    return 1.0 - std::pow(p.theta, static_cast<double>(p.segment_length));
}

double pa_precision(const RandomModelParams& p) {
    p.validate();
    const double r = pa_recall(p);
    const double denominator =
        r * p.anomaly_ratio + (1.0 - p.theta) * (1.0 - p.anomaly_ratio);
    if (denominator == 0.0) {
        return 0.0;  // theta = 1: the detector never alarms
    }
    return r * p.anomaly_ratio / denominator;
}

double padf_recall(const RandomModelParams& p) {
    p.validate();
    if (p.theta == 1.0) {
        return 0.0;
    }
    // (1-theta) * sum_{i<N} (theta*d)^i, the expected first-hit decay weight.
    return (1.0 - p.theta) * geometric_sum(p.theta * p.decay_rate, p.segment_length);
}

double padf_precision(const RandomModelParams& p) {
    p.validate();
    if (p.theta == 1.0) {
        return 0.0;
    }
    const double detected =
        1.0 - std::pow(p.theta, static_cast<double>(p.segment_length));
    const double denominator =
        (1.0 - p.theta) * (1.0 - p.anomaly_ratio) + detected * p.anomaly_ratio;
    if (denominator == 0.0) {
        return 0.0;
    }
    return p.anomaly_ratio * padf_recall(p) / denominator;
}

std::vector<CurvePoint> f1_curve(const CurveSpec& spec, std::span<const double> thetas) {
    if (spec.protocol != Protocol::pa && spec.protocol != Protocol::padf) {
        throw std::invalid_argument("analytic curves exist for pa and padf only");
    }

    std::vector<CurvePoint> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        RandomModelParams params{theta, spec.segment_length, spec.anomaly_ratio,
                                 spec.decay_rate};
        CurvePoint point;
        point.theta = theta;
        if (spec.protocol == Protocol::pa) {
            point.recall = pa_recall(params);
            point.precision = pa_precision(params);
        } else {
            point.recall = padf_recall(params);
            point.precision = padf_precision(params);
        }
        point.f1 = f_beta_score(point.precision, point.recall, 1.0);
        out.push_back(point);
    }
    return out;
}

}  // namespace tsad
