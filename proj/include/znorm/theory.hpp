#pragma once

#include <cstdint>
#include <limits>

namespace znorm {

/// Sentinel for distributions whose moments of every order are finite.
inline constexpr int kAllMomentsFinite = std::numeric_limits<int>::max();

/**
 * @brief Population standardized cumulants of a distribution.
 *
 * gamma is the skewness, kappa the excess kurtosis and lambda the sixth
 * standardized cumulant; all three vanish for the normal distribution.
 * `finite_moment_order` is the highest k for which E|X|^k is guaranteed
 * finite (kAllMomentsFinite when every moment exists). Formulas below
 * refuse inputs whose required moments diverge, so heavy-tailed families
 * such as Cauchy or low-df Student t can be represented but not fed into
 * the correlation formulas.
 *
 * Valid cumulant triples obey
 *   (i)  gamma^2 <= kappa + 2
 *   (ii) kappa^2 <= lambda + 9*(kappa + gamma^2) + 6
 * with equality for two-point distributions.
 */
struct PopulationCumulants {
    double gamma = 0.0;
    double kappa = 0.0;
    double lambda = 0.0;
    int finite_moment_order = kAllMomentsFinite;
};

/**
 * @brief Exact correlation of the sample mean and the unbiased sample
 * variance for an i.i.d. sample of size n:
 *
 *   rho2 = gamma / sqrt(kappa + 3 - (n-3)/(n-1))
 *
 * Requires a finite fourth moment and n >= 2. The result is always
 * strictly inside (-1, 1).
 */
[[nodiscard]] double rho2(const PopulationCumulants& pop, std::int64_t n);

/// Large-n limit of rho2: gamma / sqrt(kappa + 2). Requires kappa > -2.
[[nodiscard]] double rho2_limit(const PopulationCumulants& pop);

/**
 * @brief Exact correlation of the sample mean and the unbiased third
 * central sample moment for an i.i.d. sample of size n:
 *
 *   rho3 = kappa / sqrt(lambda + 9*n/(n-1)*(kappa + gamma^2)
 *                       + 6*n^2/((n-1)(n-2)))
 *
 * Requires a finite sixth moment and n >= 3. Strictly inside (-1, 1).
 */
[[nodiscard]] double rho3(const PopulationCumulants& pop, std::int64_t n);

/// Large-n limit of rho3: kappa / sqrt(lambda + 9*(kappa + gamma^2) + 6).
[[nodiscard]] double rho3_limit(const PopulationCumulants& pop);

/// Result of checking the two cumulant inequalities.
struct CumulantBounds {
    bool holds_i = false;
    bool holds_ii = false;  ///< meaningful only when ii_checked
    double slack_i = 0.0;   ///< kappa + 2 - gamma^2
    double slack_ii = 0.0;  ///< lambda + 9*(kappa + gamma^2) + 6 - kappa^2
    bool ii_checked = false;  ///< false when the sixth moment diverges
};

/**
 * @brief Evaluates both cumulant inequalities with a 1e-9 tolerance to
 * absorb floating error near the two-point equality manifold.
 *
 * Requires a finite fourth moment. The second bound is evaluated only
 * when the sixth moment is finite; otherwise `ii_checked` is false.
 */
[[nodiscard]] CumulantBounds check_cumulant_bounds(const PopulationCumulants& pop);

}  // namespace znorm
