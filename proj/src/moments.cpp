#include "znorm/moments.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace znorm {

namespace {

MomentSummary central_moments_impl(std::span<const double> x) {
    const std::size_t n = x.size();
    const auto nd = static_cast<long double>(n);

    long double sum = 0.0L;
    for (double v : x) {
        sum += v;
    }
    const long double mean = sum / nd;

    long double s2 = 0.0L, s3 = 0.0L, s4 = 0.0L, s6 = 0.0L;
    for (double v : x) {
        const long double d = static_cast<long double>(v) - mean;
        const long double d2 = d * d;
        const long double d3 = d2 * d;
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
    m.s2_unbiased = n >= 2 ? static_cast<double>(s2 / (nd - 1.0L))
                           : std::numeric_limits<double>::quiet_NaN();
    m.mu3_unbiased = n >= 3 ? static_cast<double>(s3 * nd / ((nd - 1.0L) * (nd - 2.0L)))
                            : std::numeric_limits<double>::quiet_NaN();
    return m;
}

}  // namespace

MomentSummary central_moments(const Sample& sample) {
    return central_moments_impl(sample.values());
}

MomentSummary central_moments(std::span<const double> values) {
    Sample s(std::vector<double>(values.begin(), values.end()));
    return central_moments_impl(s.values());
}

CumulantEstimates standardized_cumulants(const MomentSummary& moments) {
    if (moments.m2 <= 0.0) {
        throw DegenerateSample("zero sample variance: all observations are equal");
    }
    const double m2 = moments.m2;
    const double sd3 = m2 * std::sqrt(m2);

    CumulantEstimates c;
    c.n = moments.n;
    c.gamma_hat = moments.m3 / sd3;
    c.kappa_hat = moments.m4 / (m2 * m2) - 3.0;
    c.lambda_hat =
        moments.m6 / (m2 * m2 * m2) - 15.0 * c.kappa_hat - 10.0 * c.gamma_hat * c.gamma_hat - 15.0;
    return c;
}

CumulantEstimates sample_cumulants(const Sample& sample) {
    return standardized_cumulants(central_moments(sample));
}

}  // namespace znorm
