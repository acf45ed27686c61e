#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "znorm/rng.hpp"
#include "znorm/sample.hpp"
#include "znorm/theory.hpp"

namespace znorm {

/// Distribution families available as simulation alternatives.
enum class Family {
    normal,          ///< N(0,1)
    chi_square,      ///< chisq(df)
    exponential,     ///< rate 1
    weibull,         ///< weibull(shape, scale)
    log_normal,      ///< lognormal(sigma), log-mean 0
    beta,            ///< beta(a, b)
    uniform,         ///< U(0,1)
    student_t,       ///< t(df)
    cauchy,          ///< standard Cauchy
    laplace,         ///< scale 1
    logistic,        ///< scale 1
    normal_mixture,  ///< mix(w, mu1, mu2): w*N(mu1,1) + (1-w)*N(mu2,1)
};

/**
 * @brief A parsed distribution specification: family plus parameters.
 *
 * Specs round-trip losslessly through the textual grammar accepted by
 * `parse_alternative` and produced by `format_alternative`, e.g.
 * `chisq(4)`, `weibull(0.5,1)`, `lognormal(0.25)`, `beta(2,3)`, `t(5)`,
 * `mix(0.9,0,4)`. Names are case-insensitive.
 */
struct AlternativeSpec {
    Family family = Family::normal;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    bool operator==(const AlternativeSpec&) const = default;

    static AlternativeSpec normal() { return {Family::normal, 0, 0, 0}; }
    static AlternativeSpec chi_square(double df) { return {Family::chi_square, df, 0, 0}; }
    static AlternativeSpec exponential() { return {Family::exponential, 0, 0, 0}; }
    static AlternativeSpec weibull(double shape, double scale = 1.0) {
        return {Family::weibull, shape, scale, 0};
    }
    static AlternativeSpec log_normal(double sigma) { return {Family::log_normal, sigma, 0, 0}; }
    static AlternativeSpec beta(double a, double b) { return {Family::beta, a, b, 0}; }
    static AlternativeSpec uniform() { return {Family::uniform, 0, 0, 0}; }
    static AlternativeSpec student_t(double df) { return {Family::student_t, df, 0, 0}; }
    static AlternativeSpec cauchy() { return {Family::cauchy, 0, 0, 0}; }
    static AlternativeSpec laplace() { return {Family::laplace, 0, 0, 0}; }
    static AlternativeSpec logistic() { return {Family::logistic, 0, 0, 0}; }
    static AlternativeSpec normal_mixture(double w, double mu1, double mu2) {
        return {Family::normal_mixture, w, mu1, mu2};
    }
};

/// @throws InvalidSpec on unknown names, wrong arity or out-of-range parameters.
[[nodiscard]] AlternativeSpec parse_alternative(std::string_view text);

/// Canonical lower-case text form; parse(format(s)) == s exactly.
[[nodiscard]] std::string format_alternative(const AlternativeSpec& spec);

/**
 * @brief Closed-form population cumulants (gamma, kappa, lambda) of the
 * family, with `finite_moment_order` set honestly: Cauchy has no finite
 * moments of order >= 1, t(df) has finite moments only below df.
 * Cumulants whose defining moment diverges are NaN.
 */
[[nodiscard]] PopulationCumulants population_cumulants(const AlternativeSpec& spec);

/**
 * @brief Draws n i.i.d. values. Deterministic given the stream: the
 * same (seed, stream_id) always yields the same sample.
 *
 * Exact-distribution generators throughout: inversion for exponential,
 * Weibull, logistic, Laplace, Cauchy and uniform; polar method normals;
 * Marsaglia-Tsang gamma for chi-square, Student t and beta; Bernoulli
 * component pick for mixtures.
 */
[[nodiscard]] Sample sample_from(const AlternativeSpec& spec, std::size_t n, RngStream& rng);

/// Gamma(shape, 1) variate; Marsaglia-Tsang with the boost for shape < 1.
[[nodiscard]] double gamma_variate(RngStream& rng, double shape);

/// The 24 study alternatives, normal null first.
[[nodiscard]] std::vector<AlternativeSpec> study_alternatives();

}  // namespace znorm
