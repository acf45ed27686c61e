#include "znorm/statistics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

#include "znorm/errors.hpp"

namespace znorm {

namespace {

// Pearson correlation of (x_i, y_i) with an uncentered-y numerator
// option. Since sum(x_i - xbar) == 0 the two numerators agree exactly in
// real arithmetic; both forms are kept because the two jackknife
// statistics are defined with different numerators.
double jackknife_correlation(std::span<const double> x, std::span<const double> y,
                             bool center_y_in_numerator) {
    const std::size_t n = x.size();
    const auto nd = static_cast<long double>(n);

    long double xsum = 0.0L, ysum = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        xsum += x[i];
        ysum += y[i];
    }
    const long double xbar = xsum / nd;
    const long double ybar = ysum / nd;

    long double sxx = 0.0L, syy = 0.0L, sxy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - xbar;
        const long double dy = y[i] - ybar;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += center_y_in_numerator ? dx * dy : dx * static_cast<long double>(y[i]);
    }

    if (sxx <= 0.0L) {
        throw DegenerateSample("zero variance in the observations");
    }
    if (syy <= 0.0L) {
        throw DegenerateSample("zero variance in the leave-one-out values");
    }
    const double r = static_cast<double>(sxy / std::sqrt(sxx * syy));
    if (r >= 1.0) {
        throw PerfectCorrelation(+1);
    }
    if (r <= -1.0) {
        throw PerfectCorrelation(-1);
    }
    return r;
}

}  // namespace

TestStatistic z2_prime(const CumulantEstimates& cum) {
    if (cum.n < 2) {
        throw InvalidN("Z2' requires n >= 2");
    }
    const auto nd = static_cast<double>(cum.n);
    const double radicand = cum.kappa_hat + 3.0 - (nd - 3.0) / (nd - 1.0);
    return {StatKind::z2_prime, cum.gamma_hat / std::sqrt(radicand), cum.n};
}

TestStatistic z3_prime(const CumulantEstimates& cum) {
    if (cum.n < 3) {
        throw InvalidN("Z3' requires n >= 3");
    }
    const auto nd = static_cast<double>(cum.n);
    const double radicand =
        cum.lambda_hat + 9.0 * nd / (nd - 1.0) * (cum.kappa_hat + cum.gamma_hat * cum.gamma_hat) +
        6.0 * nd * nd / ((nd - 1.0) * (nd - 2.0));
    return {StatKind::z3_prime, cum.kappa_hat / std::sqrt(radicand), cum.n};
}

TestStatistic jackknife_z2(const Sample& sample) {
    const std::size_t n = sample.size();
    if (n < 3) {
        throw InvalidN("Z2 requires n >= 3");
    }
    const auto x = sample.values();
    const auto nd = static_cast<long double>(n);

    long double sum = 0.0L;
    for (double v : x) {
        sum += v;
    }
    const long double mean = sum / nd;
    long double s2 = 0.0L;
    for (double v : x) {
        const long double d = v - mean;
        s2 += d * d;
    }

    // Leave-one-out sum of squares: s2 - n*d_i^2/(n-1), clamped at zero
    // against rounding when one observation carries all the variance.
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long double d = x[i] - mean;
        const long double loo = s2 - nd * d * d / (nd - 1.0L);
        const long double s2_loo = std::max(loo, 0.0L) / (nd - 2.0L);
        y[i] = std::cbrt(static_cast<double>(s2_loo));
    }

    const double r = jackknife_correlation(x, y, /*center_y_in_numerator=*/true);
    return {StatKind::z2, fisher_z(r), n};
}

TestStatistic jackknife_z3(const Sample& sample) {
    const std::size_t n = sample.size();
    if (n < 4) {
        throw InvalidN("Z3 requires n >= 4");
    }
    const auto x = sample.values();
    const auto nd = static_cast<long double>(n);

    long double sum = 0.0L;
    for (double v : x) {
        sum += v;
    }
    const long double mean = sum / nd;
    long double s2 = 0.0L, s3 = 0.0L;
    for (double v : x) {
        const long double d = v - mean;
        s2 += d * d;
        s3 += d * d * d;
    }

    // Leave-one-out sum of cubes about the leave-one-out mean:
    //   s3 + 3*s2*d_i/(n-1) - d_i^3 * n(n+1)/(n-1)^2
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long double d = x[i] - mean;
        const long double t =
            s3 + 3.0L * s2 * d / (nd - 1.0L) - d * d * d * nd * (nd + 1.0L) / ((nd - 1.0L) * (nd - 1.0L));
        y[i] = static_cast<double>(t / (nd - 1.0L));
    }

    const double r = jackknife_correlation(x, y, /*center_y_in_numerator=*/false);
    return {StatKind::z3, fisher_z(r), n};
}

double fisher_z(double r) {
    if (!(std::abs(r) < 1.0)) {
        throw OutOfDomain("Fisher z-transform requires |r| < 1");
    }
    return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

ComparisonStats comparison_stats(const CumulantEstimates& cum) {
    const auto nd = static_cast<double>(cum.n);
    return {cum.gamma_hat, cum.kappa_hat,
            nd * (cum.gamma_hat * cum.gamma_hat / 6.0 + cum.kappa_hat * cum.kappa_hat / 24.0)};
}

TestStatistic evaluate_statistic(StatKind kind, const Sample& sample) {
    switch (kind) {
        case StatKind::z2:
            return jackknife_z2(sample);
        case StatKind::z3:
            return jackknife_z3(sample);
        default:
            break;
    }
    const CumulantEstimates cum = sample_cumulants(sample);
    switch (kind) {
        case StatKind::z2_prime:
            return z2_prime(cum);
        case StatKind::z3_prime:
            return z3_prime(cum);
        case StatKind::sqrt_b1:
            return {StatKind::sqrt_b1, comparison_stats(cum).sqrt_b1, cum.n};
        case StatKind::b2:
            return {StatKind::b2, comparison_stats(cum).b2, cum.n};
        case StatKind::lm:
            return {StatKind::lm, comparison_stats(cum).lm, cum.n};
        default:
            throw InvalidSpec("unknown statistic kind");
    }
}

std::size_t min_sample_size(StatKind kind) {
    switch (kind) {
        case StatKind::z2_prime: return 2;
        case StatKind::z3_prime: return 3;
        case StatKind::z2: return 3;
        case StatKind::z3: return 4;
        default: return 2;
    }
}

std::string_view stat_token(StatKind kind) {
    switch (kind) {
        case StatKind::z2_prime: return "z2p";
        case StatKind::z3_prime: return "z3p";
        case StatKind::z2: return "z2";
        case StatKind::z3: return "z3";
        case StatKind::sqrt_b1: return "sqrt_b1";
        case StatKind::b2: return "b2";
        case StatKind::lm: return "lm";
    }
    return "?";
}

std::string_view stat_display_name(StatKind kind) {
    switch (kind) {
        case StatKind::z2_prime: return "Z2'";
        case StatKind::z3_prime: return "Z3'";
        case StatKind::z2: return "Z2";
        case StatKind::z3: return "Z3";
        case StatKind::sqrt_b1: return "sqrt(b1)";
        case StatKind::b2: return "b2";
        case StatKind::lm: return "LM";
    }
    return "?";
}

StatKind stat_kind_from_token(std::string_view token) {
    std::string t(token);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "z2p" || t == "z2'") return StatKind::z2_prime;
    if (t == "z3p" || t == "z3'") return StatKind::z3_prime;
    if (t == "z2") return StatKind::z2;
    if (t == "z3") return StatKind::z3;
    if (t == "sqrt_b1" || t == "b1") return StatKind::sqrt_b1;
    if (t == "b2") return StatKind::b2;
    if (t == "lm") return StatKind::lm;
    throw InvalidSpec("unknown statistic: " + std::string(token));
}

std::string_view tail_token(Tail tail) {
    switch (tail) {
        case Tail::upper: return "upper";
        case Tail::lower: return "lower";
        case Tail::two_sided: return "two";
    }
    return "?";
}

Tail tail_from_token(std::string_view token) {
    std::string t(token);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "upper") return Tail::upper;
    if (t == "lower") return Tail::lower;
    if (t == "two" || t == "two_sided" || t == "two-sided") return Tail::two_sided;
    throw InvalidSpec("unknown tail: " + std::string(token));
}

}  // namespace znorm
