// Command-line front end: test a data file for normality, inspect its
// moments, calibrate critical values, run power studies and print the
// population reference table.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric
// degeneracy in the data.

#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "znorm/data_io.hpp"
#include "znorm/errors.hpp"
#include "znorm/montecarlo.hpp"
#include "znorm/report.hpp"

namespace {

using namespace znorm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw FileNotFound("cannot write '" + output_path + "'");
    }
    out << text;
}

std::size_t parse_count(const std::string& text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidSpec("bad count '" + text + "'");
    }
    return value;
}

double parse_real(const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidSpec("bad number '" + text + "'");
    }
    return value;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

int run_test(const std::string& data_path, const std::string& stat, const std::string& tail_text,
             double alpha, std::size_t null_reps, std::uint64_t seed, const std::string& format,
             const std::string& output) {
    const Sample sample = load_sample(data_path);
    if (sample.size() < 4) {
        throw ParseError("need at least 4 observations, got " + std::to_string(sample.size()));
    }
    const StatKind kind = stat_kind_from_token(stat);
    const Tail tail = tail_from_token(tail_text);

    const TestStatistic observed = evaluate_statistic(kind, sample);
    const StatKind kinds[] = {kind};
    const auto nulls = simulate_null(kinds, sample.size(), null_reps, seed);
    const double threshold = threshold_from_null(nulls[0], alpha, tail);
    const double p = p_value(observed, tail, nulls[0]);

    bool reject = false;
    switch (tail) {
        case Tail::upper: reject = observed.value >= threshold; break;
        case Tail::lower: reject = observed.value <= threshold; break;
        case Tail::two_sided: reject = std::abs(observed.value) >= threshold; break;
    }

    if (format == "json") {
        nlohmann::json j{{"statistic", std::string(stat_token(kind))},
                         {"n", sample.size()},
                         {"value", observed.value},
                         {"tail", std::string(tail_token(tail))},
                         {"alpha", alpha},
                         {"critical_value", threshold},
                         {"p_value", p},
                         {"reject", reject},
                         {"null_replications", null_reps},
                         {"seed", seed}};
        emit(j.dump(2), output);
    } else {
        char buf[512];
        std::snprintf(buf, sizeof(buf),
                      "statistic       %s (n = %zu)\n"
                      "value           %.6f\n"
                      "tail            %s\n"
                      "alpha           %g\n"
                      "critical value  %.6f  (from %zu null replications, seed %llu)\n"
                      "p-value         %.6g\n"
                      "decision        %s\n",
                      std::string(stat_display_name(kind)).c_str(), sample.size(), observed.value,
                      std::string(tail_token(tail)).c_str(), alpha, threshold, null_reps,
                      static_cast<unsigned long long>(seed), p,
                      reject ? "reject normality" : "retain normality");
        emit(buf, output);
    }
    return kExitOk;
}

int run_moments(const std::string& data_path, const std::string& format,
                const std::string& output) {
    const Sample sample = load_sample(data_path);
    const MomentSummary m = central_moments(sample);
    const CumulantEstimates c = standardized_cumulants(m);
    const double z2p = z2_prime(c).value;
    const double z3p = sample.size() >= 3 ? z3_prime(c).value
                                          : std::numeric_limits<double>::quiet_NaN();

    if (format == "json") {
        nlohmann::json j{{"n", m.n},           {"mean", m.mean},
                         {"m2", m.m2},         {"m3", m.m3},
                         {"m4", m.m4},         {"m6", m.m6},
                         {"s2_unbiased", m.s2_unbiased},
                         {"mu3_unbiased", m.mu3_unbiased},
                         {"gamma_hat", c.gamma_hat},
                         {"kappa_hat", c.kappa_hat},
                         {"lambda_hat", c.lambda_hat},
                         {"z2_prime", z2p},
                         {"z3_prime", z3p}};
        emit(j.dump(2), output);
    } else {
        char buf[512];
        std::snprintf(buf, sizeof(buf),
                      "n               %zu\n"
                      "mean            %.10g\n"
                      "m2              %.10g\n"
                      "m3              %.10g\n"
                      "m4              %.10g\n"
                      "m6              %.10g\n"
                      "skewness        %.10g\n"
                      "excess kurtosis %.10g\n"
                      "sixth cumulant  %.10g\n"
                      "Z2'             %.10g\n"
                      "Z3'             %.10g\n",
                      m.n, m.mean, m.m2, m.m3, m.m4, m.m6, c.gamma_hat, c.kappa_hat, c.lambda_hat,
                      z2p, z3p);
        emit(buf, output);
    }
    return kExitOk;
}

int run_calibrate(const std::string& stats_text, const std::string& n_text,
                  const std::string& alphas_text, const std::string& tails_text,
                  std::size_t null_reps, std::uint64_t seed, const std::string& format,
                  const std::string& output) {
    std::vector<StatKind> kinds;
    for (const auto& tok : split_list(stats_text)) {
        kinds.push_back(stat_kind_from_token(tok));
    }
    std::vector<std::size_t> n_values;
    for (const auto& tok : split_list(n_text)) {
        n_values.push_back(parse_count(tok));
    }
    std::vector<double> alphas;
    for (const auto& tok : split_list(alphas_text)) {
        alphas.push_back(parse_real(tok));
    }
    std::vector<Tail> tails;
    for (const auto& tok : split_list(tails_text)) {
        tails.push_back(tail_from_token(tok));
    }

    CriticalValueTable table;
    table.null_replications = null_reps;
    table.seed = seed;
    for (std::size_t n : n_values) {
        const CriticalValueTable part = calibrate(kinds, n, alphas, tails, null_reps, seed);
        table.entries.insert(table.entries.end(), part.entries.begin(), part.entries.end());
    }

    if (format == "json") {
        emit(critical_table_json(table).dump(2), output);
    } else if (format == "csv") {
        emit(critical_table_csv(table), output);
    } else {
        emit(critical_table_plain(table), output);
    }
    return kExitOk;
}

int run_power(const std::string& config_path, unsigned workers_override, bool workers_set,
              std::uint64_t seed_override, bool seed_set, const std::string& format,
              const std::string& output) {
    std::ifstream in(config_path);
    if (!in) {
        throw FileNotFound("cannot open '" + config_path + "'");
    }
    PowerStudyConfig config = parse_power_config(in);
    if (workers_set) config.workers = workers_override;
    if (seed_set) config.seed = seed_override;

    const PowerReport report = run_power_study(config);
    if (format == "json") {
        emit(power_report_json(report).dump(2), output);
    } else if (format == "plain") {
        emit(power_report_plain(report), output);
    } else {
        emit(power_report_csv(report), output);
    }
    return kExitOk;
}

int run_table1(const std::string& format, const std::string& output) {
    const auto rows = reference_rows();
    if (format == "json") {
        emit(reference_table_json(rows).dump(2), output);
    } else if (format == "csv") {
        emit(reference_table_csv(rows), output);
    } else {
        emit(reference_table_plain(rows), output);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moment-based tests for normality with Monte Carlo calibration"};
    app.require_subcommand(1);

    std::string data_path, stat = "z2p", tail = "two", format = "plain", output, config_path;
    std::string power_format = "csv";
    std::string stats_list, n_list, alphas_list = "0.05", tails_list = "upper,lower,two";
    double alpha = 0.05;
    std::size_t null_reps = 10000;
    std::uint64_t seed = 1;
    unsigned workers = 0;

    auto* test_cmd = app.add_subcommand("test", "Test a data file for normality");
    test_cmd->add_option("--data", data_path, "Data file, one number per line")->required();
    test_cmd->add_option("--stat", stat, "Statistic: z2p, z3p, z2, z3, sqrt_b1, b2, lm");
    test_cmd->add_option("--tail", tail, "Tail: upper, lower, two");
    test_cmd->add_option("--alpha", alpha, "Significance level");
    test_cmd->add_option("--null-reps", null_reps, "Null replications for calibration");
    test_cmd->add_option("--seed", seed, "Calibration seed");
    test_cmd->add_option("--format", format, "Output format: plain, json");
    test_cmd->add_option("--output", output, "Write the report to a file");

    auto* moments_cmd = app.add_subcommand("moments", "Print sample moments and cumulants");
    moments_cmd->add_option("--data", data_path, "Data file, one number per line")->required();
    moments_cmd->add_option("--format", format, "Output format: plain, json");
    moments_cmd->add_option("--output", output, "Write the report to a file");

    auto* cal_cmd = app.add_subcommand("calibrate", "Estimate empirical critical values");
    cal_cmd->add_option("--stat", stats_list, "Comma-separated statistics")->required();
    cal_cmd->add_option("--n", n_list, "Comma-separated sample sizes")->required();
    cal_cmd->add_option("--alpha", alphas_list, "Comma-separated significance levels");
    cal_cmd->add_option("--tails", tails_list, "Comma-separated tails");
    cal_cmd->add_option("--null-reps", null_reps, "Null replications");
    cal_cmd->add_option("--seed", seed, "Seed");
    cal_cmd->add_option("--format", format, "Output format: plain, csv, json");
    cal_cmd->add_option("--output", output, "Write the table to a file");

    auto* power_cmd = app.add_subcommand("power", "Run a power study from a config file");
    power_cmd->add_option("--config", config_path, "Study configuration file")->required();
    auto* workers_opt = power_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
    auto* seed_opt = power_cmd->add_option("--seed", seed, "Override the config seed");
    power_cmd->add_option("--format", power_format, "Output format: csv, json, plain");
    power_cmd->add_option("--output", output, "Write the report to a file");

    auto* table_cmd = app.add_subcommand("table1", "Print the population reference table");
    table_cmd->add_option("--format", format, "Output format: plain, csv, json");
    table_cmd->add_option("--output", output, "Write the table to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(test_cmd)) {
            return run_test(data_path, stat, tail, alpha, null_reps, seed, format, output);
        }
        if (app.got_subcommand(moments_cmd)) {
            return run_moments(data_path, format, output);
        }
        if (app.got_subcommand(cal_cmd)) {
            return run_calibrate(stats_list, n_list, alphas_list, tails_list, null_reps, seed,
                                 format, output);
        }
        if (app.got_subcommand(power_cmd)) {
            return run_power(config_path, workers, workers_opt->count() > 0, seed,
                             seed_opt->count() > 0, power_format, output);
        }
        if (app.got_subcommand(table_cmd)) {
            return run_table1(format, output);
        }
    } catch (const DegenerateSample& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const PerfectCorrelation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << '\n';
        return kExitData;
    } catch (const FileNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const NonFiniteInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const EmptySample& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
