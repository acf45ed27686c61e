#include "support/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "znorm/errors.hpp"

namespace znorm::testing {

namespace {

using Status = JackknifeOutcome::Status;

JackknifeOutcome correlate_and_transform(std::span<const double> x, std::span<const double> y,
                                         bool center_y) {
    const std::size_t n = x.size();
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= static_cast<double>(n);
    ybar /= static_cast<double>(n);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        syy += (y[i] - ybar) * (y[i] - ybar);
        sxy += (x[i] - xbar) * (center_y ? (y[i] - ybar) : y[i]);
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        return {Status::degenerate, 0.0};
    }
    const double r = sxy / std::sqrt(sxx * syy);
    if (r >= 1.0) return {Status::perfect_plus, 0.0};
    if (r <= -1.0) return {Status::perfect_minus, 0.0};
    return {Status::ok, 0.5 * std::log((1.0 + r) / (1.0 - r))};
}

}  // namespace

JackknifeOutcome oracle_jackknife_z2(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 3) return {Status::too_small, 0.0};

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double mean = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) mean += x[j];
        }
        mean /= static_cast<double>(n - 1);
        double ss = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) ss += (x[j] - mean) * (x[j] - mean);
        }
        y[i] = std::cbrt(ss / static_cast<double>(n - 2));
    }
    return correlate_and_transform(x, y, /*center_y=*/true);
}

JackknifeOutcome oracle_jackknife_z3(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 4) return {Status::too_small, 0.0};

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double mean = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) mean += x[j];
        }
        mean /= static_cast<double>(n - 1);
        double sc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                const double d = x[j] - mean;
                sc += d * d * d;
            }
        }
        y[i] = sc / static_cast<double>(n - 1);
    }
    return correlate_and_transform(x, y, /*center_y=*/false);
}

JackknifeOutcome library_jackknife(StatKind kind, std::span<const double> x) {
    try {
        const Sample s(std::vector<double>(x.begin(), x.end()));
        const TestStatistic t = evaluate_statistic(kind, s);
        return {Status::ok, t.value};
    } catch (const PerfectCorrelation& pc) {
        return {pc.direction > 0 ? Status::perfect_plus : Status::perfect_minus, 0.0};
    } catch (const DegenerateSample&) {
        return {Status::degenerate, 0.0};
    } catch (const InvalidN&) {
        return {Status::too_small, 0.0};
    }
}

MomentSummary multiprecision_central_moments(std::span<const double> x) {
    using big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256>>;
    const std::size_t n = x.size();
    const big nd = n;

    big sum = 0;
    for (double v : x) sum += big(v);
    const big mean = sum / nd;

    big s2 = 0, s3 = 0, s4 = 0, s6 = 0;
    for (double v : x) {
        const big d = big(v) - mean;
        const big d2 = d * d;
        const big d3 = d2 * d;
        s2 += d2;
        s3 += d3;
        s4 += d2 * d2;
        s6 += d3 * d3;
    }

    MomentSummary m;
    m.n = n;
    m.mean = static_cast<double>(mean);
    m.m2 = static_cast<double>(s2 / nd);
    m.m3 = static_cast<double>(s3 / nd);
    m.m4 = static_cast<double>(s4 / nd);
    m.m6 = static_cast<double>(s6 / nd);
    m.s2_unbiased = n >= 2 ? static_cast<double>(s2 / (nd - 1))
                           : std::numeric_limits<double>::quiet_NaN();
    m.mu3_unbiased = n >= 3 ? static_cast<double>(s3 * nd / ((nd - 1) * (nd - 2)))
                            : std::numeric_limits<double>::quiet_NaN();
    return m;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Raw moment E X^r via Gauss-Kronrod on a transformed, singularity-free
// integrand. Each family gets its own parametrization.
double raw_moment(const AlternativeSpec& spec, int r) {
    using integrator = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double inf = std::numeric_limits<double>::infinity();
    const double tol = 1e-13;

    switch (spec.family) {
        case Family::normal:
            return integrator::integrate(
                [r](double t) {
                    return std::pow(t, r) * std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi);
                },
                -inf, inf, 15, tol);
        case Family::chi_square: {
            // x = u^2 removes the x^(df/2 - 1) singularity at zero
            const double df = spec.p1;
            const double norm = std::pow(2.0, df / 2.0) * std::tgamma(df / 2.0);
            return integrator::integrate(
                [r, df, norm](double u) {
                    const double x = u * u;
                    return 2.0 * u * std::pow(x, r + df / 2.0 - 1.0) * std::exp(-0.5 * x) / norm;
                },
                0.0, inf, 15, tol);
        }
        case Family::exponential:
            return integrator::integrate(
                [r](double x) { return std::pow(x, r) * std::exp(-x); }, 0.0, inf, 15, tol);
        case Family::weibull: {
            // u = (x/scale)^shape turns the integrand into a gamma-type one
            const double inv_shape = 1.0 / spec.p1;
            const double scale = spec.p2;
            return integrator::integrate(
                [r, inv_shape, scale](double u) {
                    return std::pow(scale, r) * std::pow(u, r * inv_shape) * std::exp(-u);
                },
                0.0, inf, 15, tol);
        }
        case Family::log_normal: {
            // x = exp(sigma t); the integrand is a normal kernel centred
            // at r*sigma, so a wide finite window is exact to rounding
            const double sigma = spec.p1;
            const double centre = r * sigma;
            return integrator::integrate(
                [r, sigma](double t) {
                    return std::exp(r * sigma * t) * std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi);
                },
                centre - 50.0, centre + 50.0, 15, tol);
        }
        case Family::beta: {
            // x = sin^2(theta) removes both endpoint singularities
            const double a = spec.p1, b = spec.p2;
            const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
            return integrator::integrate(
                [r, a, b, log_beta](double th) {
                    const double s = std::sin(th), c = std::cos(th);
                    return 2.0 * std::exp((2.0 * (r + a) - 1.0) * std::log(s) +
                                          (2.0 * b - 1.0) * std::log(c) - log_beta);
                },
                1e-12, kPi / 2.0 - 1e-12, 15, tol);
        }
        case Family::uniform:
            return 1.0 / (r + 1.0);
        case Family::student_t: {
            // x = sqrt(df) tan(theta); integrand tan^r * cos^(df-1)
            const double df = spec.p1;
            const double c =
                std::tgamma((df + 1.0) / 2.0) / (std::sqrt(df * kPi) * std::tgamma(df / 2.0));
            return integrator::integrate(
                [r, df, c](double th) {
                    return c * std::pow(df, (r + 1.0) / 2.0) * std::pow(std::tan(th), r) *
                           std::pow(std::cos(th), df - 1.0);
                },
                -kPi / 2.0 + 1e-12, kPi / 2.0 - 1e-12, 15, tol);
        }
        case Family::laplace:
            return integrator::integrate(
                [r](double x) { return std::pow(x, r) * 0.5 * std::exp(-std::abs(x)); }, -inf,
                inf, 15, tol);
        case Family::logistic:
            return integrator::integrate(
                [r](double x) {
                    const double e = std::exp(-std::abs(x));
                    const double f = e / ((1.0 + e) * (1.0 + e));
                    return std::pow(x, r) * f;
                },
                -inf, inf, 15, tol);
        case Family::normal_mixture: {
            const double w = spec.p1, m1 = spec.p2, m2 = spec.p3;
            return integrator::integrate(
                [r, w, m1, m2](double x) {
                    const double f1 = std::exp(-0.5 * (x - m1) * (x - m1));
                    const double f2 = std::exp(-0.5 * (x - m2) * (x - m2));
                    return std::pow(x, r) * (w * f1 + (1.0 - w) * f2) / std::sqrt(2.0 * kPi);
                },
                -inf, inf, 15, tol);
        }
        case Family::cauchy:
            throw std::logic_error("cauchy has no finite moments");
    }
    throw std::logic_error("unknown family");
}

}  // namespace

PopulationCumulants quadrature_cumulants(const AlternativeSpec& spec) {
    const int order = population_cumulants(spec).finite_moment_order;

    PopulationCumulants pop;
    pop.finite_moment_order = order;
    pop.gamma = pop.kappa = pop.lambda = std::numeric_limits<double>::quiet_NaN();
    if (order < 3) return pop;

    double raw[7] = {1, 0, 0, 0, 0, 0, 0};
    const int top = std::min(order, 6);
    for (int r = 1; r <= top; ++r) {
        raw[r] = raw_moment(spec, r);
    }

    const double m = raw[1];
    double mu[7] = {1, 0, 0, 0, 0, 0, 0};
    for (int k = 2; k <= top; ++k) {
        double s = 0.0, binom = 1.0, mp = 1.0;
        for (int j = 0; j <= k; ++j) {
            s += binom * mp * raw[k - j];
            binom = binom * (k - j) / (j + 1);
            mp *= -m;
        }
        mu[k] = s;
    }

    const double s2 = mu[2];
    pop.gamma = mu[3] / (s2 * std::sqrt(s2));
    if (order >= 4) {
        pop.kappa = mu[4] / (s2 * s2) - 3.0;
    }
    if (order >= 6) {
        pop.lambda =
            mu[6] / (s2 * s2 * s2) - 15.0 * pop.kappa - 10.0 * pop.gamma * pop.gamma - 15.0;
    }
    return pop;
}

PopulationCumulants discrete_cumulants(std::span<const double> points,
                                       std::span<const double> probabilities) {
    long double mean = 0.0L;
    for (std::size_t i = 0; i < points.size(); ++i) {
        mean += static_cast<long double>(probabilities[i]) * points[i];
    }
    long double mu[7] = {1, 0, 0, 0, 0, 0, 0};
    for (int k = 2; k <= 6; ++k) {
        long double s = 0.0L;
        for (std::size_t i = 0; i < points.size(); ++i) {
            s += static_cast<long double>(probabilities[i]) *
                 std::pow(static_cast<long double>(points[i]) - mean, static_cast<long double>(k));
        }
        mu[k] = s;
    }
    const long double s2 = mu[2];
    const long double gamma = mu[3] / (s2 * std::sqrt(s2));
    const long double kappa = mu[4] / (s2 * s2) - 3.0L;
    PopulationCumulants pop;
    pop.gamma = static_cast<double>(gamma);
    pop.kappa = static_cast<double>(kappa);
    pop.lambda = static_cast<double>(mu[6] / (s2 * s2 * s2) - 15.0L * kappa -
                                     10.0L * gamma * gamma - 15.0L);
    pop.finite_moment_order = kAllMomentsFinite;
    return pop;
}

double pearson(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    double abar = 0.0, bbar = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        abar += a[i];
        bbar += b[i];
    }
    abar /= static_cast<double>(n);
    bbar /= static_cast<double>(n);
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        saa += (a[i] - abar) * (a[i] - abar);
        sbb += (b[i] - bbar) * (b[i] - bbar);
        sab += (a[i] - abar) * (b[i] - bbar);
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace znorm::testing
