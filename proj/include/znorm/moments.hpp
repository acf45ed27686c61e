#pragma once

#include <cstddef>
#include <span>

#include "znorm/sample.hpp"

namespace znorm {

/**
 * @brief Central moments of a sample about its mean.
 *
 * mk is the divisor-n moment n^-1 * sum (x_i - mean)^k. Two unbiased
 * variants are carried alongside because different consumers need
 * different divisors:
 *   - s2_unbiased   = m2 * n/(n-1)              (NaN when n < 2)
 *   - mu3_unbiased  = m3 * n^2/((n-1)(n-2))     (NaN when n < 3)
 */
struct MomentSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
    double m6 = 0.0;
    double s2_unbiased = 0.0;
    double mu3_unbiased = 0.0;
};

/**
 * @brief Standardized sample cumulants.
 *
 * gamma_hat  = m3 / m2^(3/2)                      (skewness)
 * kappa_hat  = m4 / m2^2 - 3                      (excess kurtosis)
 * lambda_hat = m6 / m2^3 - 15*kappa_hat - 10*gamma_hat^2 - 15
 *
 * For every non-degenerate sample the empirical distribution obeys
 *   gamma_hat^2 <= kappa_hat + 2
 *   kappa_hat^2 <= lambda_hat + 9*(kappa_hat + gamma_hat^2) + 6
 * with equality exactly on two-point samples.
 */
struct CumulantEstimates {
    double gamma_hat = 0.0;
    double kappa_hat = 0.0;
    double lambda_hat = 0.0;
    std::size_t n = 0;
};

/**
 * @brief Exact two-pass central moments: mean first, then powers of
 * deviations, accumulated in long double.
 *
 * Sixth powers amplify cancellation, so the batch two-pass form is used
 * rather than one-pass updating formulas.
 */
[[nodiscard]] MomentSummary central_moments(const Sample& sample);

/// Span overload; validates finiteness and non-emptiness.
[[nodiscard]] MomentSummary central_moments(std::span<const double> values);

/// @throws DegenerateSample when m2 == 0 (all observations equal).
[[nodiscard]] CumulantEstimates standardized_cumulants(const MomentSummary& moments);

/// Convenience fusion of the two steps above.
[[nodiscard]] CumulantEstimates sample_cumulants(const Sample& sample);

}  // namespace znorm
