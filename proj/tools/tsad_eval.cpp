// tsad-eval: score time-series anomaly detections under the raw, pa, pak
// and padf protocols, print analytic random-detector curves, run random
// baselines and emit canned robustness scenarios.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsad/analytic.hpp"
#include "tsad/io.hpp"
#include "tsad/metrics.hpp"
#include "tsad/simulate.hpp"
#include "tsad/thresholding.hpp"

namespace {

using namespace tsad;

Protocol parse_protocol(const std::string& name) {
    if (name == "raw") return Protocol::raw;
    if (name == "pa") return Protocol::pa;
    if (name == "pak") return Protocol::pak;
    if (name == "padf") return Protocol::padf;
    throw std::invalid_argument("unknown protocol '" + name +
                                "' (expected raw, pa, pak or padf)");
}

PrecisionMode parse_precision_mode(const std::string& name) {
    if (name == "decayed") return PrecisionMode::decayed;
    if (name == "adjusted") return PrecisionMode::adjusted;
    throw std::invalid_argument("unknown precision mode '" + name +
                                "' (expected decayed or adjusted)");
}

// One ProtocolConfig per requested protocol, with padf fanned out over the
// decay list. Order follows the command line.
std::vector<ProtocolConfig> expand_configs(const std::vector<std::string>& protocols,
                                           double k, const std::vector<double>& ds,
                                           const std::string& precision_mode,
                                           double beta) {
    if (protocols.empty()) {
        throw std::invalid_argument("at least one protocol is required");
    }
    if (ds.empty()) {
        throw std::invalid_argument("at least one decay rate is required");
    }
    const PrecisionMode mode = parse_precision_mode(precision_mode);

    std::vector<ProtocolConfig> configs;
    for (const std::string& name : protocols) {
        const Protocol protocol = parse_protocol(name);
        if (protocol == Protocol::padf) {
            for (double d : ds) {
                ProtocolConfig config;
                config.protocol = protocol;
                config.k = k;
                config.decay = DecaySpec::exponential(d);
                config.precision_mode = mode;
                config.beta = beta;
                config.validate();
                configs.push_back(config);
            }
        } else {
            ProtocolConfig config;
            config.protocol = protocol;
            config.k = k;
            config.precision_mode = mode;
            config.beta = beta;
            config.validate();
            configs.push_back(config);
        }
    }
    return configs;
}

std::vector<double> parse_theta_grid(const std::string& text) {
    double start = 0.0, stop = 0.0, step = 0.0;
    char trailing = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &trailing) != 3) {
        throw std::invalid_argument("theta grid must look like start:stop:step");
    }
    if (!(step > 0.0) || start > stop) {
        throw std::invalid_argument("theta grid is empty (need start <= stop and step > 0)");
    }
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        double v = start + static_cast<double>(i) * step;
        if (v > stop) {
            v = stop;  // keep the endpoint exact despite accumulated rounding
        }
        grid.push_back(v);
    }
    return grid;
}

struct EvaluateArgs {
    std::string labels_path;
    std::string scores_path;
    std::string predictions_path;
    std::string out_path;
    bool probabilistic = false;
    bool sweep = false;
    double threshold = 0.0;
    bool has_threshold = false;
    std::vector<std::string> protocols;
    double k = 20.0;
    std::vector<double> ds{0.9};
    std::string precision_mode = "decayed";
    double beta = 1.0;
};

int run_evaluate(const EvaluateArgs& args) {
    const bool from_scores = !args.scores_path.empty();
    const bool from_predictions = !args.predictions_path.empty();
    if (from_scores == from_predictions) {
        throw std::invalid_argument("exactly one of --scores and --predictions is required");
    }
    if (from_predictions && (args.sweep || args.has_threshold)) {
        throw std::invalid_argument("--sweep/--threshold only apply to --scores input");
    }
    if (from_scores && args.probabilistic) {
        throw std::invalid_argument("--prob only applies to --predictions input");
    }
    if (from_scores && args.sweep == args.has_threshold) {
        throw std::invalid_argument("scores input needs exactly one of --sweep and --threshold");
    }

    const ReportFormat format = report_format_for(args.out_path);
    const LabelSeries labels = read_labels(args.labels_path);

    std::optional<ScoreSeries> scores;
    std::optional<PredictionSeries> predictions;
    if (from_scores) {
        scores.emplace(read_scores(args.scores_path));
    } else {
        predictions.emplace(read_predictions(args.predictions_path, args.probabilistic));
    }

    std::vector<MetricReport> reports;
    for (const ProtocolConfig& config : expand_configs(args.protocols, args.k, args.ds,
                                                       args.precision_mode, args.beta)) {
        MetricReport report;
        if (from_predictions) {
            report = evaluate(labels, *predictions, config);
        } else if (args.has_threshold) {
            report = evaluate(labels, binarize(*scores, args.threshold), config);
            report.threshold = args.threshold;
        } else {
            report = best_f1(labels, *scores, config, ThresholdSpec{}).report;
        }
        reports.push_back(report);
    }

    write_reports(args.out_path, format, reports);
    return 0;
}

struct CurvesArgs {
    std::vector<std::size_t> segment_lengths{500};
    double anomaly_ratio = 0.05;
    std::vector<double> ds{1.0, 0.9, 0.7};
    std::string theta_grid = "0:1:0.001";
    std::string out_path;
};

int run_curves(const CurvesArgs& args) {
    const std::vector<double> grid = parse_theta_grid(args.theta_grid);

    std::vector<CurveRow> rows;
    for (std::size_t n : args.segment_lengths) {
        for (double d : args.ds) {
            const CurveSpec spec{Protocol::padf, n, d, args.anomaly_ratio};
            for (const CurvePoint& point : f1_curve(spec, grid)) {
                rows.push_back({Protocol::padf, n, d, point.theta, point.f1});
            }
        }
    }
    write_curves_csv(args.out_path, rows);
    return 0;
}

struct SimulateArgs {
    std::string labels_path;
    std::string out_path;
    std::vector<std::string> protocols;
    double k = 20.0;
    std::vector<double> ds{0.9};
    std::string precision_mode = "decayed";
    double beta = 1.0;
    std::size_t trials = 5;
    std::uint64_t seed = 0;
    bool sweep = false;
    double threshold = 0.0;
    bool has_threshold = false;
};

int run_simulate(const SimulateArgs& args) {
    if (args.sweep && args.has_threshold) {
        throw std::invalid_argument("--sweep and --threshold are mutually exclusive");
    }
    if (report_format_for(args.out_path) != ReportFormat::json) {
        throw std::invalid_argument("baseline statistics are written as JSON; use a .json path");
    }

    ThresholdSpec threshold;  // defaults to a best-F1 sweep
    if (args.has_threshold) {
        threshold.mode = ThresholdSpec::Mode::fixed;
        threshold.value = args.threshold;
    }

    const LabelSeries labels = read_labels(args.labels_path);

    std::vector<BaselineRow> rows;
    for (const ProtocolConfig& config : expand_configs(args.protocols, args.k, args.ds,
                                                       args.precision_mode, args.beta)) {
        BaselineRow row;
        row.config = config;
        if (args.has_threshold) {
            row.fixed_threshold = args.threshold;
        }
        row.stats = run_baseline(labels, config, args.trials, args.seed, threshold);
        rows.push_back(row);
    }
    write_baseline_json(args.out_path, rows);
    return 0;
}

struct CasesArgs {
    std::string suite = "appendix-d";
    double d = 0.9;
    std::string precision_mode = "decayed";
    double beta = 1.0;
    std::string out_dir;
};

int run_cases(const CasesArgs& args) {
    if (args.suite != "appendix-d") {
        throw std::invalid_argument("unknown suite '" + args.suite + "'");
    }

    ProtocolConfig config;
    config.protocol = Protocol::padf;
    config.decay = DecaySpec::exponential(args.d);
    config.precision_mode = parse_precision_mode(args.precision_mode);
    config.beta = args.beta;
    config.validate();

    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec) {
        throw IoError("cannot create directory " + args.out_dir + ": " + ec.message());
    }

    std::vector<CaseRow> table;
    for (const RobustnessCase& item : delay_robustness_suite()) {
        const auto [labels, predictions] = build_scenario(item.scenario);
        const MetricReport report = evaluate(labels, predictions, config);

        const std::filesystem::path dir(args.out_dir);
        write_labels_csv((dir / ("labels_" + item.name + ".csv")).string(), labels);
        write_predictions_csv((dir / ("preds_" + item.name + ".csv")).string(), predictions);
        table.push_back({item.name, item.description, report.f_beta});
    }

    write_cases_csv((std::filesystem::path(args.out_dir) / "cases.csv").string(), table);
    for (const CaseRow& row : table) {
        std::printf("%-18s %.6f\n", row.name.c_str(), row.f1);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-series anomaly detection evaluator"};
    app.require_subcommand(1);

    EvaluateArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand(
        "evaluate", "Score labeled series against predictions or thresholded scores");
    eval_cmd->add_option("--labels", eval_args.labels_path, "Ground-truth label file")
        ->required();
    eval_cmd->add_option("--scores", eval_args.scores_path, "Detector score file");
    eval_cmd->add_option("--predictions", eval_args.predictions_path,
                         "Hard or probabilistic prediction file");
    eval_cmd->add_flag("--prob", eval_args.probabilistic,
                       "Treat --predictions values as anomaly probabilities");
    CLI::Option* threshold_opt =
        eval_cmd->add_option("--threshold", eval_args.threshold, "Fixed binarization threshold");
    eval_cmd->add_flag("--sweep", eval_args.sweep, "Pick the best-F1 threshold");
    eval_cmd->add_option("--protocol", eval_args.protocols, "raw, pa, pak and/or padf")
        ->required()
        ->delimiter(',');
    eval_cmd->add_option("--k", eval_args.k, "PA%K percentage threshold");
    eval_cmd->add_option("--d", eval_args.ds, "Decay rate(s) for padf")->delimiter(',');
    eval_cmd->add_option("--precision-mode", eval_args.precision_mode,
                         "padf precision numerator: decayed or adjusted");
    eval_cmd->add_option("--beta", eval_args.beta, "F-score beta");
    eval_cmd->add_option("--out", eval_args.out_path, "Report path (.json or .csv)")
        ->required();

    CurvesArgs curves_args;
    CLI::App* curves_cmd =
        app.add_subcommand("curves", "Analytic F1 of a random detector over a threshold grid");
    curves_cmd->add_option("--n", curves_args.segment_lengths, "Segment length(s)")
        ->delimiter(',');
    curves_cmd->add_option("--anomaly-ratio", curves_args.anomaly_ratio,
                           "Fraction of anomalous points");
    curves_cmd->add_option("--d", curves_args.ds, "Decay rate(s)")->delimiter(',');
    curves_cmd->add_option("--theta-grid", curves_args.theta_grid,
                           "Threshold grid as start:stop:step");
    curves_cmd->add_option("--out", curves_args.out_path, "Curve CSV path")->required();

    SimulateArgs sim_args;
    CLI::App* sim_cmd =
        app.add_subcommand("simulate", "Monte-Carlo random-score baseline statistics");
    sim_cmd->add_option("--labels", sim_args.labels_path, "Ground-truth label file")
        ->required();
    sim_cmd->add_option("--protocol", sim_args.protocols, "raw, pa, pak and/or padf")
        ->required()
        ->delimiter(',');
    sim_cmd->add_option("--k", sim_args.k, "PA%K percentage threshold");
    sim_cmd->add_option("--d", sim_args.ds, "Decay rate(s) for padf")->delimiter(',');
    sim_cmd->add_option("--precision-mode", sim_args.precision_mode,
                        "padf precision numerator: decayed or adjusted");
    sim_cmd->add_option("--beta", sim_args.beta, "F-score beta");
    sim_cmd->add_option("--trials", sim_args.trials, "Number of random detectors");
    sim_cmd->add_option("--seed", sim_args.seed, "Base RNG seed")
        ->envname("TSAD_EVAL_SEED");
    CLI::Option* sim_threshold_opt =
        sim_cmd->add_option("--threshold", sim_args.threshold, "Fixed binarization threshold");
    sim_cmd->add_flag("--sweep", sim_args.sweep, "Best-F1 threshold per trial (default)");
    sim_cmd->add_option("--out", sim_args.out_path, "Statistics path (.json)")->required();

    CasesArgs cases_args;
    CLI::App* cases_cmd =
        app.add_subcommand("cases", "Write the canned detector-behavior scenario suite");
    cases_cmd->add_option("--suite", cases_args.suite, "Suite name");
    cases_cmd->add_option("--d", cases_args.d, "Decay rate");
    cases_cmd->add_option("--precision-mode", cases_args.precision_mode,
                          "padf precision numerator: decayed or adjusted");
    cases_cmd->add_option("--beta", cases_args.beta, "F-score beta");
    cases_cmd->add_option("--out-dir", cases_args.out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
        eval_args.has_threshold = threshold_opt->count() > 0;
        sim_args.has_threshold = sim_threshold_opt->count() > 0;

        if (eval_cmd->parsed()) {
            return run_evaluate(eval_args);
        }
        if (curves_cmd->parsed()) {
            return run_curves(curves_args);
        }
        if (sim_cmd->parsed()) {
            return run_simulate(sim_args);
        }
        return run_cases(cases_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
