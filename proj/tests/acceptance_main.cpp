// Acceptance gate: nine end-to-end checks with pinned tolerances, one
// printed line each. Exits nonzero if any check fails. Run through ctest or
// directly; there are no arguments.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tsad/analytic.hpp"
#include "tsad/metrics.hpp"
#include "tsad/protocols.hpp"
#include "tsad/simulate.hpp"
#include "tsad/thresholding.hpp"

namespace {

using namespace tsad;

// Collects the first failure of a criterion; later ones add no information.
class Checker {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && ok_) {
            detail_ = what;
            ok_ = false;
        }
    }

    template <typename T>
    void equal(const T& actual, const T& expected, const std::string& what) {
        require(actual == expected, what);
    }

    void close(double actual, double expected, double tolerance, const std::string& what) {
        char buffer[160];
        std::snprintf(buffer, sizeof(buffer), "%s: got %.17g, want %.17g +/- %g",
                      what.c_str(), actual, expected, tolerance);
        require(std::abs(actual - expected) <= tolerance, buffer);
    }

    bool ok() const { return ok_; }
    const std::string& detail() const { return detail_; }

private:
    bool ok_ = true;
    std::string detail_;
};

LabelSeries one_segment(std::size_t length, std::size_t start, std::size_t seg_len) {
    std::vector<std::uint8_t> bits(length, 0);
    for (std::size_t t = start; t < start + seg_len; ++t) {
        bits[t] = 1;
    }
    return LabelSeries(bits);
}

PredictionSeries hits_at(std::size_t length, const std::vector<std::size_t>& positions) {
    std::vector<std::uint8_t> bits(length, 0);
    for (std::size_t t : positions) {
        bits[t] = 1;
    }
    return PredictionSeries::binary(bits);
}

std::vector<std::uint8_t> random_bits(std::mt19937& rng, std::size_t length, double one_rate) {
    std::vector<std::uint8_t> out(length);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& bit : out) {
        bit = unit(rng) < one_rate ? 1 : 0;
    }
    return out;
}

// 1. A detector that fires on the first anomalous point of every segment
//    gets a perfect score under every decay and both precision modes.
void check_immediate_detection(Checker& c) {
    const std::vector<DecaySpec> decays = {
        DecaySpec::exponential(0.3), DecaySpec::exponential(0.7), DecaySpec::exponential(0.9),
        DecaySpec::exponential(1.0), DecaySpec::table({1.0, 0.7, 0.4, 0.2})};

    for (const DecaySpec& decay : decays) {
        for (const std::size_t n : {1, 2, 5, 20, 100}) {
            const auto labels = one_segment(n + 10, 5, n);
            const auto preds = hits_at(n + 10, {5});
            for (const PrecisionMode mode : {PrecisionMode::decayed, PrecisionMode::adjusted}) {
                ProtocolConfig config;
                config.protocol = Protocol::padf;
                config.decay = decay;
                config.precision_mode = mode;
                const MetricReport report = evaluate(labels, preds, config);
                const std::string at = "n=" + std::to_string(n);
                c.require(report.precision == 1.0, at + ": precision is not exactly 1");
                c.require(report.recall == 1.0, at + ": recall is not exactly 1");
                c.require(report.f_beta == 1.0, at + ": f1 is not exactly 1");
            }
        }
    }
}

// 2. A single hit on the last point of the only segment scores F1 = d^(n-1)
//    under the decayed precision mode.
void check_latest_detection(Checker& c) {
    for (const std::size_t n : {1, 2, 5, 20}) {
        for (const double d : {0.7, 0.9}) {
            const auto labels = one_segment(n + 10, 5, n);
            const auto preds = hits_at(n + 10, {5 + n - 1});
            ProtocolConfig config;
            config.protocol = Protocol::padf;
            config.decay = DecaySpec::exponential(d);
            const MetricReport report = evaluate(labels, preds, config);
            c.close(report.f_beta, std::pow(d, static_cast<double>(n - 1)), 1e-12,
                    "n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    }
}

// 3. A hit two steps into the segment plus m false positives scores
//    F1 = 2n d^2 / (2n + m) under the decayed precision mode.
void check_two_hit_closed_form(Checker& c) {
    for (const std::size_t n : {8, 20}) {
        for (const std::size_t m : {0, 1, 2, 10}) {
            for (const double d : {0.7, 0.9}) {
                const std::size_t length = n + m + 20;
                const auto labels = one_segment(length, 10, n);
                std::vector<std::size_t> positions = {12, 15};  // offsets 2 and 5
                for (std::size_t i = 0; i < m; ++i) {
                    positions.push_back(length - 1 - i);
                }
                ProtocolConfig config;
                config.protocol = Protocol::padf;
                config.decay = DecaySpec::exponential(d);
                const MetricReport report =
                    evaluate(labels, hits_at(length, positions), config);
                const double nn = static_cast<double>(n);
                const double expected = 2.0 * nn * d * d / (2.0 * nn + static_cast<double>(m));
                c.close(report.f_beta, expected, 1e-12,
                        "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " d=" + std::to_string(d));
            }
        }
    }
}

// 4. The canned scenario suite reproduces the published delay-sensitivity
//    table at d = 0.9 under the adjusted precision mode, within 0.005.
void check_delay_table(Checker& c) {
    const double targets[] = {1.0, 0.95, 0.90, 0.84, 0.79, 0.74, 0.69};

    ProtocolConfig config;
    config.protocol = Protocol::padf;
    config.decay = DecaySpec::exponential(0.9);
    config.precision_mode = PrecisionMode::adjusted;

    for (const RobustnessCase& item : delay_robustness_suite()) {
        const auto [labels, preds] = build_scenario(item.scenario);
        const double f1 = evaluate(labels, preds, config).f_beta;
        if (item.name.rfind("delay-", 0) == 0 && item.name.size() == 7) {
            const std::size_t j = static_cast<std::size_t>(item.name[6] - '0');
            c.close(f1, targets[j], 0.005, item.name);
        } else if (item.name == "all-miss" || item.name == "fp-only") {
            c.require(f1 == 0.0, item.name + ": expected an exact zero");
        }
    }
}

// 5. Reductions between protocols hold exactly on random instances:
//    k=0 and d=1 both collapse to plain adjustment, k=100 to raw counting,
//    and 0/1 probabilities to the binary path.
void check_reductions(Checker& c) {
    std::mt19937 rng(9001);
    std::uniform_int_distribution<std::size_t> length_dist(1, 50);

    ProtocolConfig pa_config;
    pa_config.protocol = Protocol::pa;
    ProtocolConfig pak0 = pa_config;
    pak0.protocol = Protocol::pak;
    pak0.k = 0.0;
    ProtocolConfig pak100 = pak0;
    pak100.k = 100.0;
    ProtocolConfig padf1;
    padf1.protocol = Protocol::padf;
    padf1.decay = DecaySpec::exponential(1.0);
    ProtocolConfig raw_config;
    raw_config.protocol = Protocol::raw;

    for (int round = 0; round < 1000 && c.ok(); ++round) {
        const std::size_t length = length_dist(rng);
        const LabelSeries labels(random_bits(rng, length, 0.35));
        const auto preds = PredictionSeries::binary(random_bits(rng, length, 0.3));
        const std::string at = "round " + std::to_string(round);

        const auto pa_counts = score(labels, preds, pa_config);
        c.require(score(labels, preds, pak0) == pa_counts, at + ": k=0 differs from pa");
        c.require(score(labels, preds, padf1) == pa_counts, at + ": d=1 differs from pa");
        c.require(score(labels, preds, pak100) == score(labels, preds, raw_config),
                  at + ": k=100 differs from raw");

        std::vector<double> hard(length);
        for (std::size_t t = 0; t < length; ++t) {
            hard[t] = preds.anomaly_at(t) ? 1.0 : 0.0;
        }
        const auto decay = DecaySpec::exponential(0.8);
        c.require(score_padf_probabilistic(labels, PredictionSeries::probabilities(hard),
                                           decay) == score_padf_binary(labels, preds, decay),
                  at + ": hard probabilities differ from the binary path");
    }
}

// 6. The production scorers agree with deliberately naive re-implementations:
//    per-timestamp adjustment, and exhaustive outcome enumeration for the
//    probabilistic expectation.
void check_oracles(Checker& c) {
    std::mt19937 rng(20260821);
    std::uniform_int_distribution<std::size_t> length_dist(1, 50);
    std::uniform_real_distribution<double> k_dist(0.0, 100.0);

    for (int round = 0; round < 1000 && c.ok(); ++round) {
        const std::size_t length = length_dist(rng);
        const LabelSeries labels(random_bits(rng, length, 0.35));
        const auto preds = PredictionSeries::binary(random_bits(rng, length, 0.3));
        const std::string at = "binary round " + std::to_string(round);

        c.require(oracle::oracle_adjust(labels, preds, oracle::AdjustKind::pa, 0.0) ==
                      adjust_pa(labels, preds),
                  at + ": adjustment differs");
        for (const double k : {0.0, 20.0, 100.0 / 3.0, 50.0, 100.0, k_dist(rng)}) {
            c.require(oracle::oracle_adjust(labels, preds, oracle::AdjustKind::pak, k) ==
                          adjust_pak(labels, preds, k),
                      at + ": ratio adjustment differs at k=" + std::to_string(k));
        }
    }

    std::uniform_int_distribution<std::size_t> short_dist(1, 12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> rate_dist(0.3, 1.0);
    for (int round = 0; round < 200 && c.ok(); ++round) {
        const std::size_t length = short_dist(rng);
        const LabelSeries labels(random_bits(rng, length, 0.5));
        std::vector<double> probs(length);
        for (auto& p : probs) {
            p = unit(rng);
        }
        const auto preds = PredictionSeries::probabilities(probs);
        const auto decay = round % 2 == 0 ? DecaySpec::exponential(rate_dist(rng))
                                          : DecaySpec::table({1.0, 0.6, 0.25});
        const auto expected = oracle::oracle_padf_expectation(labels, preds, decay);
        const auto actual = score_padf_probabilistic(labels, preds, decay);
        const std::string at = "probabilistic round " + std::to_string(round);
        c.close(actual.etp, expected.etp, 1e-9, at + " (weighted true positives)");
        c.close(actual.efp, expected.efp, 1e-9, at + " (false positives)");
        c.close(actual.adjusted_positives, expected.adjusted_positives, 1e-9,
                at + " (coverage)");
    }
}

// 7. Monte-Carlo means under random uniform scores land within three
//    standard errors of the analytic recall for both adjustment flavors.
void check_monte_carlo(Checker& c) {
    const std::size_t trials = 1000;
    std::uint64_t seed = 1234;

    for (const double theta : {0.5, 0.9}) {
        for (const std::size_t n : {2, 50, 500}) {
            const std::size_t length = 20 * n;  // 5% anomalous
            const auto labels = one_segment(length, 2 * n, n);
            ThresholdSpec fixed;
            fixed.mode = ThresholdSpec::Mode::fixed;
            fixed.value = theta;

            ProtocolConfig pa_config;
            pa_config.protocol = Protocol::pa;
            const TrialStats pa_stats =
                run_baseline(labels, pa_config, trials, seed++, fixed);
            const RandomModelParams pa_params{theta, n, 0.05, 1.0};
            const double pa_se =
                std::sqrt(pa_stats.recall.variance / static_cast<double>(trials));
            c.close(pa_stats.recall.mean, pa_recall(pa_params),
                    std::max(3.0 * pa_se, 1e-12),
                    "pa theta=" + std::to_string(theta) + " n=" + std::to_string(n));

            for (const double d : {0.7, 0.9, 1.0}) {
                ProtocolConfig padf_config;
                padf_config.protocol = Protocol::padf;
                padf_config.decay = DecaySpec::exponential(d);
                const TrialStats stats =
                    run_baseline(labels, padf_config, trials, seed++, fixed);
                const RandomModelParams params{theta, n, 0.05, d};
                const double se =
                    std::sqrt(stats.recall.variance / static_cast<double>(trials));
                c.close(stats.recall.mean, padf_recall(params), std::max(3.0 * se, 1e-12),
                        "padf theta=" + std::to_string(theta) + " n=" + std::to_string(n) +
                            " d=" + std::to_string(d));
            }
        }
    }
}

// 8. The analytic curves are internally consistent: d=1 reproduces the
//    no-decay forms pointwise, and the best reachable F1 grows with d.
void check_analytic_curves(Checker& c) {
    std::vector<double> grid;
    for (int i = 0; i <= 1000; ++i) {
        grid.push_back(static_cast<double>(i) / 1000.0);
    }

    for (double theta : grid) {
        const RandomModelParams with_decay{theta, 500, 0.05, 1.0};
        c.close(padf_recall(with_decay), pa_recall(with_decay), 1e-12,
                "recall at theta=" + std::to_string(theta));
        c.close(padf_precision(with_decay), pa_precision(with_decay), 1e-12,
                "precision at theta=" + std::to_string(theta));
        if (!c.ok()) {
            return;
        }
    }

    double previous_max = -1.0;
    for (const double d : {0.7, 0.9, 1.0}) {
        const auto curve = f1_curve(CurveSpec{Protocol::padf, 500, d, 0.05}, grid);
        double best = 0.0;
        for (const CurvePoint& point : curve) {
            best = std::max(best, point.f1);
        }
        c.require(best > previous_max,
                  "best F1 did not increase from d=" + std::to_string(d));
        previous_max = best;
    }
}

// 9. Later detection never scores higher, more decay never scores higher,
//    and every extra false positive strictly lowers F1.
void check_monotonicity(Checker& c) {
    {
        const auto labels = one_segment(100, 10, 30);
        for (const double d : {0.5, 0.9, 1.0}) {
            ProtocolConfig config;
            config.protocol = Protocol::padf;
            config.decay = DecaySpec::exponential(d);
            double previous = 2.0;
            for (std::size_t delay = 0; delay < 30; ++delay) {
                const double f1 =
                    evaluate(labels, hits_at(100, {10 + delay}), config).f_beta;
                const std::string at =
                    "d=" + std::to_string(d) + " delay=" + std::to_string(delay);
                if (d < 1.0) {
                    c.require(f1 < previous, at + ": later hit did not score lower");
                } else {
                    c.require(f1 == 1.0, at + ": undecayed delay changed the score");
                }
                previous = f1;
            }
        }
    }
    {
        std::mt19937 rng(777);
        std::uniform_int_distribution<std::size_t> length_dist(5, 50);
        for (int round = 0; round < 200 && c.ok(); ++round) {
            const std::size_t length = length_dist(rng);
            const LabelSeries labels(random_bits(rng, length, 0.4));
            const auto preds = PredictionSeries::binary(random_bits(rng, length, 0.3));
            double previous = -1.0;
            for (const double d : {0.3, 0.5, 0.7, 0.9, 1.0}) {
                const auto counts = score_padf_binary(labels, preds, DecaySpec::exponential(d));
                c.require(counts.etp >= previous,
                          "round " + std::to_string(round) +
                              ": credit fell when decay weakened to d=" + std::to_string(d));
                previous = counts.etp;
            }
        }
    }
    {
        const auto labels = one_segment(1200, 0, 20);
        ProtocolConfig config;
        config.protocol = Protocol::padf;
        config.decay = DecaySpec::exponential(0.9);
        double previous = 2.0;
        double last = 2.0;
        for (const std::size_t fps : {0, 1, 10, 100, 1000}) {
            std::vector<std::size_t> positions = {2};
            for (std::size_t i = 0; i < fps; ++i) {
                positions.push_back(100 + i);
            }
            const double f1 = evaluate(labels, hits_at(1200, positions), config).f_beta;
            c.require(f1 < previous, std::to_string(fps) +
                                         " false positives did not lower the score");
            previous = f1;
            last = f1;
        }
        c.require(last < 0.05, "a thousand false positives left F1 above 0.05");
    }
}

struct Criterion {
    const char* name;
    std::function<void(Checker&)> run;
    double time_limit_seconds;  // 0 disables the check
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"immediate detection scores perfectly", check_immediate_detection, 1.0},
        {"latest-possible detection closed form", check_latest_detection, 0.0},
        {"two hits plus false positives closed form", check_two_hit_closed_form, 0.0},
        {"delay table reproduction", check_delay_table, 1.0},
        {"protocol reduction identities", check_reductions, 0.0},
        {"brute-force oracle agreement", check_oracles, 30.0},
        {"random baselines match the analytic model", check_monte_carlo, 60.0},
        {"analytic curve consistency", check_analytic_curves, 0.0},
        {"delay, decay and false-positive monotonicity", check_monotonicity, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& criterion = criteria[i];
        Checker checker;

        const auto start = std::chrono::steady_clock::now();
        criterion.run(checker);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        if (criterion.time_limit_seconds > 0.0 &&
            elapsed.count() > criterion.time_limit_seconds) {
            char buffer[96];
            std::snprintf(buffer, sizeof(buffer), "took %.1f s, limit is %.0f s",
                          elapsed.count(), criterion.time_limit_seconds);
            checker.require(false, buffer);
        }

        if (checker.ok()) {
            std::printf("[PASS] %zu. %s (%.2f s)\n", i + 1, criterion.name, elapsed.count());
        } else {
            std::printf("[FAIL] %zu. %s: %s\n", i + 1, criterion.name,
                        checker.detail().c_str());
            ++failures;
        }
    }

    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return 1;
}
