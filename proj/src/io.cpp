#include "tsad/io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tsad {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string location(const std::string& path, std::size_t line) {
    return path + ":" + std::to_string(line);
}

// One numeric cell. Leading/trailing blanks are tolerated, anything else is
// a parse error.
double parse_cell(const std::string& path, std::size_t line, const std::string& raw) {
    const char* begin = raw.c_str();
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) {
        throw IoError(location(path, line) + ": cannot parse '" + raw + "' as a number");
    }
    while (*end != '\0') {
        if (!std::isspace(static_cast<unsigned char>(*end))) {
            throw IoError(location(path, line) + ": trailing characters after number in '" +
                          raw + "'");
        }
        ++end;
    }
    return value;
}

// Domain check for one value; an empty result means the value is fine. The
// reader attaches the file location to whatever message comes back.
using CellCheck = std::string (*)(double);

std::vector<double> read_csv_column(const std::string& path, CellCheck check) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw IoError(path + ": empty file, expected a header row");
    }
    ++line_no;

    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;  // tolerate a blank trailing line
        }
        if (line.find(',') != std::string::npos) {
            throw IoError(location(path, line_no) + ": expected a single column");
        }
        const double value = parse_cell(path, line_no, line);
        if (const std::string problem = check(value); !problem.empty()) {
            throw IoError(location(path, line_no) + ": " + problem);
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw IoError(path + ": no data rows after the header");
    }
    return values;
}

std::vector<double> read_json_array(const std::string& path, CellCheck check) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    if (!doc.is_array()) {
        throw IoError(path + ": expected a flat JSON array");
    }
    std::vector<double> values;
    values.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_number()) {
            throw IoError(path + ": element " + std::to_string(i) + " is not a number");
        }
        const double value = doc[i].get<double>();
        if (const std::string problem = check(value); !problem.empty()) {
            throw IoError(path + ": element " + std::to_string(i) + ": " + problem);
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw IoError(path + ": array is empty");
    }
    return values;
}

std::vector<double> read_column(const std::string& path, CellCheck check) {
    return has_suffix(path, ".json") ? read_json_array(path, check)
                                     : read_csv_column(path, check);
}

std::string check_binary(double value) {
    if (value != 0.0 && value != 1.0) {
        return "value " + std::to_string(value) + " is not 0 or 1";
    }
    return {};
}

std::string check_finite(double value) {
    if (!std::isfinite(value)) {
        return "value is not finite";
    }
    return {};
}

std::string check_probability(double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        return "value " + std::to_string(value) + " is outside [0, 1]";
    }
    return {};
}

std::vector<std::uint8_t> to_binary(const std::vector<double>& values) {
    std::vector<std::uint8_t> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = values[i] == 1.0 ? 1 : 0;
    }
    return out;
}

std::string format_fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

std::string format_general(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string format_exact(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string format_sig6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

double round_decimals(double value, int decimals) {
    // Through the printed form, so JSON numbers agree with the CSV text.
    return std::strtod(format_fixed(value, decimals).c_str(), nullptr);
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    return out;
}

std::string params_field(const ProtocolConfig& config) {
    switch (config.protocol) {
        case Protocol::pak:
            return "k=" + format_general(config.k);
        case Protocol::padf:
            return "d=" + format_general(config.decay.rate()) +
                   ";mode=" + to_string(config.precision_mode);
        default:
            return "";
    }
}

void append_config(nlohmann::ordered_json& object, const ProtocolConfig& config) {
    object["protocol"] = to_string(config.protocol);
    if (config.protocol == Protocol::pak) {
        object["k"] = config.k;
    }
    if (config.protocol == Protocol::padf) {
        object["d"] = config.decay.rate();
        object["precision_mode"] = to_string(config.precision_mode);
    }
    if (config.beta != 1.0) {
        object["beta"] = config.beta;
    }
}

nlohmann::ordered_json report_object(const MetricReport& report) {
    nlohmann::ordered_json object;
    append_config(object, report.config);
    if (report.threshold) {
        object["threshold"] = *report.threshold;
    } else {
        object["threshold"] = nullptr;
    }
    object["precision"] = round_decimals(report.precision, 6);
    object["recall"] = round_decimals(report.recall, 6);
    object["f1"] = round_decimals(report.f_beta, 6);
    object["flags"] = report.flags();
    return object;
}

void write_json_document(const std::string& path, const nlohmann::ordered_json& doc) {
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

}  // namespace

LabelSeries read_labels(const std::string& path) {
    return LabelSeries(to_binary(read_column(path, check_binary)));
}

ScoreSeries read_scores(const std::string& path) {
    return ScoreSeries(read_column(path, check_finite));
}

PredictionSeries read_predictions(const std::string& path, bool probabilistic) {
    if (!probabilistic) {
        return PredictionSeries::binary(to_binary(read_column(path, check_binary)));
    }
    return PredictionSeries::probabilities(read_column(path, check_probability));
}

void write_labels_csv(const std::string& path, const LabelSeries& labels) {
    auto out = open_for_write(path);
    out << "label\n";
    for (std::size_t t = 0; t < labels.size(); ++t) {
        out << (labels.is_anomaly(t) ? "1\n" : "0\n");
    }
}

void write_predictions_csv(const std::string& path, const PredictionSeries& preds) {
    auto out = open_for_write(path);
    out << "prediction\n";
    for (std::size_t t = 0; t < preds.size(); ++t) {
        if (preds.probabilistic()) {
            out << format_exact(preds.anomaly_probability_at(t)) << '\n';
        } else {
            out << (preds.anomaly_at(t) ? "1\n" : "0\n");
        }
    }
}

void write_scores_csv(const std::string& path, const ScoreSeries& scores) {
    auto out = open_for_write(path);
    out << "score\n";
    for (std::size_t t = 0; t < scores.size(); ++t) {
        out << format_exact(scores.at(t)) << '\n';
    }
}

ReportFormat report_format_for(const std::string& path) {
    if (has_suffix(path, ".json")) {
        return ReportFormat::json;
    }
    if (has_suffix(path, ".csv")) {
        return ReportFormat::csv;
    }
    throw std::invalid_argument("output path must end in .json or .csv: " + path);
}

void write_reports(const std::string& path, ReportFormat format,
                   const std::vector<MetricReport>& reports) {
    if (reports.empty()) {
        throw std::invalid_argument("no reports to write");
    }

    if (format == ReportFormat::json) {
        if (reports.size() == 1) {
            write_json_document(path, report_object(reports.front()));
            return;
        }
        nlohmann::ordered_json array = nlohmann::ordered_json::array();
        for (const MetricReport& report : reports) {
            array.push_back(report_object(report));
        }
        write_json_document(path, array);
        return;
    }

    auto out = open_for_write(path);
    out << "protocol,params,threshold,precision,recall,f1\n";
    for (const MetricReport& report : reports) {
        out << to_string(report.config.protocol) << ',' << params_field(report.config) << ',';
        if (report.threshold) {
            out << format_general(*report.threshold);
        }
        out << ',' << format_fixed(report.precision, 6) << ','
            << format_fixed(report.recall, 6) << ',' << format_fixed(report.f_beta, 6)
            << '\n';
    }
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

void write_curves_csv(const std::string& path, const std::vector<CurveRow>& rows) {
    auto out = open_for_write(path);
    out << "protocol,n,d,theta,f1\n";
    for (const CurveRow& row : rows) {
        out << to_string(row.protocol) << ',' << row.segment_length << ','
            << format_general(row.decay_rate) << ',' << format_general(row.theta) << ','
            << format_fixed(row.f1, 6) << '\n';
    }
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

void write_baseline_json(const std::string& path, const std::vector<BaselineRow>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("no baseline rows to write");
    }

    auto row_object = [](const BaselineRow& row) {
        nlohmann::ordered_json object;
        append_config(object, row.config);
        if (row.fixed_threshold) {
            object["threshold"] = *row.fixed_threshold;
        } else {
            object["threshold"] = "sweep";
        }
        object["trials"] = row.stats.trials;
        object["seed"] = row.stats.seed;
        auto stat_object = [](const MetricStats& stats) {
            nlohmann::ordered_json s;
            s["mean"] = round_decimals(stats.mean, 6);
            // Variances can sit far below 1e-6; keep significant digits
            // instead of fixed decimals.
            s["variance"] = std::strtod(format_sig6(stats.variance).c_str(), nullptr);
            return s;
        };
        object["precision"] = stat_object(row.stats.precision);
        object["recall"] = stat_object(row.stats.recall);
        object["f1"] = stat_object(row.stats.f1);
        return object;
    };

    if (rows.size() == 1) {
        write_json_document(path, row_object(rows.front()));
        return;
    }
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const BaselineRow& row : rows) {
        array.push_back(row_object(row));
    }
    write_json_document(path, array);
}

void write_cases_csv(const std::string& path, const std::vector<CaseRow>& rows) {
    auto out = open_for_write(path);
    out << "case,description,f1\n";
    for (const CaseRow& row : rows) {
        out << row.name << ',' << row.description << ',' << format_fixed(row.f1, 6) << '\n';
    }
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

}  // namespace tsad
