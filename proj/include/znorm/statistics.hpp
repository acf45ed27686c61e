#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "znorm/moments.hpp"
#include "znorm/sample.hpp"

namespace znorm {

/// The test statistics implemented by this library.
enum class StatKind {
    z2_prime,  ///< skewness-based moment estimator of corr(mean, variance)
    z3_prime,  ///< kurtosis-based moment estimator of corr(mean, third moment)
    z2,        ///< jackknife correlation statistic, cube-root transform, Fisher z
    z3,        ///< jackknife correlation statistic on third moments, Fisher z
    sqrt_b1,   ///< sample skewness
    b2,        ///< sample excess kurtosis
    lm,        ///< Jarque-Bera statistic n*(gamma^2/6 + kappa^2/24)
};

enum class Tail { upper, lower, two_sided };

struct TestStatistic {
    StatKind kind;
    double value;
    std::size_t n;
};

/**
 * @brief Z2' = gamma_hat / sqrt(kappa_hat + 3 - (n-3)/(n-1)).
 *
 * Moment estimator of the correlation between the sample mean and the
 * sample variance. Always strictly inside (-1, 1); large |Z2'| signals
 * skewness. Requires n >= 2.
 */
[[nodiscard]] TestStatistic z2_prime(const CumulantEstimates& cum);

/**
 * @brief Z3' = kappa_hat / sqrt(lambda_hat + 9*n/(n-1)*(kappa_hat +
 * gamma_hat^2) + 6*n^2/((n-1)(n-2))).
 *
 * Moment estimator of the correlation between the sample mean and the
 * third central sample moment. The radicand is strictly positive for
 * every non-degenerate sample with n >= 3, and |Z3'| < 1. Large |Z3'|
 * signals excess kurtosis.
 */
[[nodiscard]] TestStatistic z3_prime(const CumulantEstimates& cum);

/**
 * @brief Jackknife statistic Z2.
 *
 * Computes the n leave-one-out variances S^2_{-i} (divisor n-2), applies
 * the cube-root transform Y_i = (S^2_{-i})^(1/3), correlates (X_i, Y_i)
 * and maps the correlation through the Fisher z-transform. Requires
 * n >= 3.
 *
 * Note the sign convention: removing a large observation shrinks the
 * remaining variance, so r(X_i, Y_i) is negative for right-skewed data
 * even though corr(mean, variance) is positive. Consumers that reject
 * in the direction of positive skewness must use the lower tail.
 *
 * Uses O(n) leave-one-out updates; the direct O(n^2) evaluation is kept
 * as a test oracle.
 *
 * @throws DegenerateSample when either correlation denominator is zero
 * @throws PerfectCorrelation when |r| reaches 1 (e.g. samples with
 *         exactly two distinct values)
 */
[[nodiscard]] TestStatistic jackknife_z2(const Sample& sample);

/**
 * @brief Jackknife statistic Z3, built like Z2 from the leave-one-out
 * third central moments (divisor n-1), with the product moment
 * sum (X_i - mean) * Y_i in the correlation numerator. Requires n >= 4.
 * Shares the sign convention of jackknife_z2.
 */
[[nodiscard]] TestStatistic jackknife_z3(const Sample& sample);

/// Fisher z-transform: 0.5 * log((1+r)/(1-r)). @throws OutOfDomain for |r| >= 1.
[[nodiscard]] double fisher_z(double r);

/// The classic moment test statistics.
struct ComparisonStats {
    double sqrt_b1;  ///< gamma_hat
    double b2;       ///< kappa_hat
    double lm;       ///< n * (gamma_hat^2/6 + kappa_hat^2/24)
};

[[nodiscard]] ComparisonStats comparison_stats(const CumulantEstimates& cum);

/// Computes any statistic from raw data. Dispatches on `kind`.
[[nodiscard]] TestStatistic evaluate_statistic(StatKind kind, const Sample& sample);

/// Smallest sample size on which the statistic is defined.
[[nodiscard]] std::size_t min_sample_size(StatKind kind);

/// Stable machine-readable token, e.g. "z2p", "sqrt_b1".
[[nodiscard]] std::string_view stat_token(StatKind kind);
/// Display name, e.g. "Z2'", "sqrt(b1)".
[[nodiscard]] std::string_view stat_display_name(StatKind kind);
/// @throws ParseError for unknown tokens. Case-insensitive.
[[nodiscard]] StatKind stat_kind_from_token(std::string_view token);

[[nodiscard]] std::string_view tail_token(Tail tail);
[[nodiscard]] Tail tail_from_token(std::string_view token);

}  // namespace znorm
