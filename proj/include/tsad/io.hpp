#ifndef TSAD_IO_HPP
#define TSAD_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tsad/metrics.hpp"
#include "tsad/series.hpp"
#include "tsad/simulate.hpp"

namespace tsad {

/// File-level failure: missing or unreadable path, malformed content.
/// Messages for malformed rows name the path and the 1-based line.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Readers dispatch on extension: ".json" expects a flat numeric array,
// anything else is parsed as single-column CSV with a mandatory header row.
// Domain violations (labels outside {0,1}, probabilities outside [0,1],
// non-finite scores, empty series) raise IoError.

LabelSeries read_labels(const std::string& path);
ScoreSeries read_scores(const std::string& path);
PredictionSeries read_predictions(const std::string& path, bool probabilistic);

void write_labels_csv(const std::string& path, const LabelSeries& labels);
void write_predictions_csv(const std::string& path, const PredictionSeries& preds);
void write_scores_csv(const std::string& path, const ScoreSeries& scores);

enum class ReportFormat { json, csv };

/// ".json" or ".csv", otherwise std::invalid_argument.
ReportFormat report_format_for(const std::string& path);

// Evaluation report writers. Metric values are emitted at fixed 6-decimal
// precision and key/column order is fixed, so identical inputs produce
// byte-identical files. JSON holds one object for a single report and an
// array otherwise; CSV uses the header
// protocol,params,threshold,precision,recall,f1.
void write_reports(const std::string& path, ReportFormat format,
                   const std::vector<MetricReport>& reports);

struct CurveRow {
    Protocol protocol = Protocol::padf;
    std::size_t segment_length = 0;
    double decay_rate = 1.0;
    double theta = 0.0;
    double f1 = 0.0;
};

/// CSV with header protocol,n,d,theta,f1.
void write_curves_csv(const std::string& path, const std::vector<CurveRow>& rows);

struct BaselineRow {
    ProtocolConfig config;
    std::optional<double> fixed_threshold;  // empty means best-F1 sweep
    TrialStats stats;
};

/// JSON array (object for a single row) of per-configuration trial stats.
void write_baseline_json(const std::string& path, const std::vector<BaselineRow>& rows);

struct CaseRow {
    std::string name;
    std::string description;
    double f1 = 0.0;
};

/// CSV with header case,description,f1.
void write_cases_csv(const std::string& path, const std::vector<CaseRow>& rows);

}  // namespace tsad

#endif
