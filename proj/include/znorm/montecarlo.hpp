#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "znorm/distributions.hpp"
#include "znorm/statistics.hpp"

namespace znorm {

/**
 * @brief Empirical null distribution of one statistic.
 *
 * Values are the statistic evaluated on `requested` simulated normal
 * samples of size n. Samples on which the statistic is degenerate are
 * dropped and counted; perfect correlations enter as +inf or -inf so
 * they sort beyond every finite value.
 */
struct NullDistribution {
    StatKind kind{};
    std::size_t n = 0;
    std::size_t requested = 0;
    std::size_t degenerate_count = 0;
    std::vector<double> sorted_values;      ///< ascending
    std::vector<double> sorted_abs_values;  ///< ascending absolute values
};

/**
 * @brief Outcome of one statistic on one sample under the Monte Carlo
 * conventions: degenerate samples are flagged and excluded by callers;
 * perfect correlations map to +-infinity so that they order beyond every
 * finite value in quantile and threshold comparisons.
 */
struct StatOutcome {
    double value = 0.0;
    bool degenerate = false;
};

[[nodiscard]] StatOutcome evaluate_outcome(StatKind kind, const Sample& sample);

/**
 * @brief Simulates the null distributions of several statistics from one
 * shared set of normal samples, so that thresholds for different tests
 * are comparable on equal footing.
 *
 * Replication r draws its sample from RngStream(seed, r); the result is
 * identical for any worker count.
 */
[[nodiscard]] std::vector<NullDistribution> simulate_null(std::span<const StatKind> kinds,
                                                          std::size_t n, std::size_t replications,
                                                          std::uint64_t seed, unsigned workers = 1);

/**
 * @brief Empirical critical value at level alpha.
 *
 * upper:     the ceil((1-alpha)*m)-th order statistic,
 * lower:     the (floor(alpha*m)+1)-th order statistic,
 * two_sided: the upper threshold applied to |statistic|.
 *
 * @throws InvalidAlpha for alpha outside (0, 1)
 * @throws Underpowered when fewer than 1000 values are available or
 *         m * min(alpha, 1-alpha) < 10
 */
[[nodiscard]] double threshold_from_null(const NullDistribution& null_dist, double alpha,
                                         Tail tail);

/// One calibrated critical value.
struct CriticalValueTable {
    struct Entry {
        StatKind kind;
        std::size_t n;
        double alpha;
        Tail tail;
        double threshold;
    };
    std::vector<Entry> entries;
    std::size_t null_replications = 0;
    std::uint64_t seed = 0;

    /// @throws InvalidSpec when the combination was not calibrated.
    [[nodiscard]] double threshold(StatKind kind, std::size_t n, double alpha, Tail tail) const;
};

/// Calibrates one statistic at each (alpha, tail) combination.
[[nodiscard]] CriticalValueTable calibrate(StatKind kind, std::size_t n,
                                           std::span<const double> alphas,
                                           std::span<const Tail> tails,
                                           std::size_t null_replications, std::uint64_t seed);

/// Calibrates several statistics from one shared null-sample set.
[[nodiscard]] CriticalValueTable calibrate(std::span<const StatKind> kinds, std::size_t n,
                                           std::span<const double> alphas,
                                           std::span<const Tail> tails,
                                           std::size_t null_replications, std::uint64_t seed,
                                           unsigned workers = 1);

/**
 * @brief Monte Carlo p-value (1 + #{null at least as extreme}) / (m + 1).
 *
 * `sorted_null` must be ascending. For Tail::two_sided pass the sorted
 * absolute null values; the observed value is folded through |.|.
 */
[[nodiscard]] double p_value(double observed, Tail tail, std::span<const double> sorted_null);

/// Convenience overload picking the right vector from a NullDistribution.
[[nodiscard]] double p_value(const TestStatistic& observed, Tail tail,
                             const NullDistribution& null_dist);

/// Tail selection for a study test: fixed, or resolved per alternative.
enum class TailChoice { upper, lower, two_sided, automatic };

struct TestRequest {
    StatKind kind;
    TailChoice tail = TailChoice::automatic;
};

/**
 * @brief Power study configuration.
 *
 * `workers` is the worker-thread count (0 = hardware concurrency); it
 * never affects the numbers, only the wall time.
 */
struct PowerStudyConfig {
    std::vector<AlternativeSpec> alternatives;
    std::vector<TestRequest> tests;
    std::vector<std::size_t> n_values;
    double alpha = 0.05;
    std::size_t replications = 10000;
    std::uint64_t seed = 1;
    std::size_t null_replications = 10000;
    unsigned workers = 1;
};

/// One (alternative, test, n) cell of a power report.
struct PowerCell {
    AlternativeSpec alternative;
    StatKind kind;
    Tail tail;  ///< resolved tail actually used
    std::size_t n;
    std::size_t replications_used;  ///< excludes degenerate samples
    std::size_t rejections;
    std::size_t degenerate_count;
    double rejection_rate;
    double mc_std_error;  ///< sqrt(p*(1-p)/replications_used)
};

struct PowerReport {
    PowerStudyConfig config;
    std::vector<PowerCell> cells;
};

/**
 * @brief Resolves TailChoice::automatic for a statistic against an
 * alternative: the rejection region sits where the alternative pushes
 * the statistic under its population skewness/kurtosis sign.
 *
 * The jackknife Z2/Z3 statistics anticorrelate with the skewness and
 * kurtosis direction (see jackknife_z2), so their automatic tail is the
 * mirror image of the Z2'/Z3' one. Alternatives whose relevant moment
 * diverges (Cauchy, low-df t) are treated as heavy-tailed, i.e. the
 * positive-kurtosis direction.
 */
[[nodiscard]] Tail resolve_tail(const TestRequest& request, const AlternativeSpec& alternative);

/**
 * @brief Runs the full power study: per sample size, calibrates all
 * statistics from one shared null set, then estimates every cell's
 * rejection rate.
 *
 * Deterministic for fixed config: replication r of alternative a at size
 * n uses RngStream(derive_seed(seed, ...), r), and aggregation is pure
 * counting, so reports are byte-identical for any worker count.
 */
[[nodiscard]] PowerReport run_power_study(const PowerStudyConfig& config);

/**
 * @brief Parses the key = value study configuration format.
 *
 * Keys: seed, replications, null_replications, alpha, n, alternatives,
 * tests, workers. Lists are comma-separated; test entries are
 * `kind[:tail]` with tail one of upper/lower/two/auto. `#` starts a
 * comment.
 */
[[nodiscard]] PowerStudyConfig parse_power_config(std::istream& in);
[[nodiscard]] PowerStudyConfig parse_power_config(const std::string& text);

[[nodiscard]] std::string_view tail_choice_token(TailChoice choice);

}  // namespace znorm
