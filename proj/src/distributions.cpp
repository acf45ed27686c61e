#include "znorm/distributions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "znorm/errors.hpp"

namespace znorm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct FamilyInfo {
    Family family;
    std::string_view canonical;
    int arity;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::normal, "normal", 0},
    {Family::chi_square, "chisq", 1},
    {Family::exponential, "exponential", 0},
    {Family::weibull, "weibull", 2},
    {Family::log_normal, "lognormal", 1},
    {Family::beta, "beta", 2},
    {Family::uniform, "uniform", 0},
    {Family::student_t, "t", 1},
    {Family::cauchy, "cauchy", 0},
    {Family::laplace, "laplace", 0},
    {Family::logistic, "logistic", 0},
    {Family::normal_mixture, "mix", 3},
}};

const FamilyInfo& family_info(Family f) {
    for (const auto& info : kFamilies) {
        if (info.family == f) return info;
    }
    throw InvalidSpec("unknown family");
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, std::string_view context) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidSpec("bad numeric parameter '" + std::string(text) + "' in " +
                          std::string(context));
    }
    return value;
}

std::string format_shortest(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void validate(const AlternativeSpec& s) {
    const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    switch (s.family) {
        case Family::chi_square:
        case Family::student_t:
            if (!(s.p1 >= 1.0) || !std::isfinite(s.p1)) {
                throw InvalidSpec("degrees of freedom must be >= 1");
            }
            break;
        case Family::weibull:
            if (!positive(s.p1) || !positive(s.p2)) {
                throw InvalidSpec("weibull shape and scale must be > 0");
            }
            break;
        case Family::log_normal:
            if (!positive(s.p1)) {
                throw InvalidSpec("lognormal sigma must be > 0");
            }
            break;
        case Family::beta:
            if (!positive(s.p1) || !positive(s.p2)) {
                throw InvalidSpec("beta parameters must be > 0");
            }
            break;
        case Family::normal_mixture:
            if (!(s.p1 > 0.0 && s.p1 < 1.0)) {
                throw InvalidSpec("mixture weight must lie in (0, 1)");
            }
            if (!std::isfinite(s.p2) || !std::isfinite(s.p3)) {
                throw InvalidSpec("mixture means must be finite");
            }
            break;
        default:
            break;
    }
}

// Central moments mu2..mu6 from raw moments E X^0..E X^6, then the
// standardized cumulants. Symmetric families pass exact_symmetry to pin
// gamma at zero instead of carrying rounding residue.
PopulationCumulants cumulants_from_raw(const std::array<long double, 7>& raw,
                                       bool exact_symmetry) {
    const long double m = raw[1];
    std::array<long double, 7> mu{};
    for (int k = 2; k <= 6; ++k) {
        long double s = 0.0L;
        long double binom = 1.0L;  // C(k, j)
        long double mp = 1.0L;     // (-m)^j
        for (int j = 0; j <= k; ++j) {
            s += binom * mp * raw[k - j];
            binom = binom * (k - j) / (j + 1);
            mp *= -m;
        }
        mu[k] = s;
    }
    const long double s2 = mu[2];
    PopulationCumulants pop;
    pop.gamma = exact_symmetry ? 0.0 : static_cast<double>(mu[3] / (s2 * std::sqrt(s2)));
    pop.kappa = static_cast<double>(mu[4] / (s2 * s2) - 3.0L);
    const long double lam = mu[6] / (s2 * s2 * s2) - 15.0L * (mu[4] / (s2 * s2) - 3.0L) -
                            10.0L * (exact_symmetry ? 0.0L : (mu[3] / (s2 * std::sqrt(s2))) *
                                                                 (mu[3] / (s2 * std::sqrt(s2)))) -
                            15.0L;
    pop.lambda = static_cast<double>(lam);
    pop.finite_moment_order = kAllMomentsFinite;
    return pop;
}

// Raw moments of N(mean, 1) up to order six.
std::array<long double, 7> normal_raw_moments(long double m) {
    const long double m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m, m6 = m5 * m;
    return {1.0L, m,      m2 + 1.0L,          m3 + 3.0L * m,
            m4 + 6.0L * m2 + 3.0L, m5 + 10.0L * m3 + 15.0L * m,
            m6 + 15.0L * m4 + 45.0L * m2 + 15.0L};
}

}  // namespace

AlternativeSpec parse_alternative(std::string_view text) {
    const std::string_view trimmed = trim(text);
    std::string name;
    std::vector<double> params;

    const auto open = trimmed.find('(');
    if (open == std::string_view::npos) {
        name = to_lower(trimmed);
    } else {
        if (trimmed.back() != ')') {
            throw InvalidSpec("missing ')' in '" + std::string(text) + "'");
        }
        name = to_lower(trim(trimmed.substr(0, open)));
        std::string_view args = trimmed.substr(open + 1, trimmed.size() - open - 2);
        if (!trim(args).empty()) {
            while (true) {
                const auto comma = args.find(',');
                if (comma == std::string_view::npos) {
                    params.push_back(parse_number(args, text));
                    break;
                }
                params.push_back(parse_number(args.substr(0, comma), text));
                args.remove_prefix(comma + 1);
            }
        }
    }

    // Aliases accepted on input; canonical names on output.
    if (name == "exp") name = "exponential";
    if (name == "chi2" || name == "chisquare" || name == "chi_square") name = "chisq";
    if (name == "lognorm" || name == "log_normal") name = "lognormal";
    if (name == "student" || name == "student_t") name = "t";
    if (name == "mixture" || name == "normalmix") name = "mix";

    for (const auto& info : kFamilies) {
        if (info.canonical != name) continue;
        // weibull scale defaults to 1
        if (info.family == Family::weibull && params.size() == 1) {
            params.push_back(1.0);
        }
        if (static_cast<int>(params.size()) != info.arity) {
            throw InvalidSpec("'" + name + "' takes " + std::to_string(info.arity) +
                              " parameter(s), got " + std::to_string(params.size()));
        }
        AlternativeSpec spec;
        spec.family = info.family;
        if (info.arity > 0) spec.p1 = params[0];
        if (info.arity > 1) spec.p2 = params[1];
        if (info.arity > 2) spec.p3 = params[2];
        validate(spec);
        return spec;
    }
    throw InvalidSpec("unknown distribution '" + std::string(text) + "'");
}

std::string format_alternative(const AlternativeSpec& spec) {
    const auto& info = family_info(spec.family);
    std::string out(info.canonical);
    if (info.arity == 0) return out;
    out += '(';
    out += format_shortest(spec.p1);
    if (info.arity > 1) out += ',' + format_shortest(spec.p2);
    if (info.arity > 2) out += ',' + format_shortest(spec.p3);
    out += ')';
    return out;
}

PopulationCumulants population_cumulants(const AlternativeSpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::normal:
            return {0.0, 0.0, 0.0, kAllMomentsFinite};
        case Family::chi_square: {
            // cumulants: k_r = df * 2^(r-1) * (r-1)!
            const double df = spec.p1;
            return {std::sqrt(8.0 / df), 12.0 / df, 480.0 / (df * df), kAllMomentsFinite};
        }
        case Family::exponential:
            // cumulants: k_r = (r-1)!
            return {2.0, 6.0, 120.0, kAllMomentsFinite};
        case Family::weibull: {
            // raw moments Gamma(1 + r/shape); the scale cancels out
            std::array<long double, 7> raw{};
            for (int r = 0; r <= 6; ++r) {
                raw[r] = std::tgamma(1.0L + static_cast<long double>(r) / spec.p1);
            }
            return cumulants_from_raw(raw, false);
        }
        case Family::log_normal: {
            // raw moments exp(r^2 sigma^2 / 2)
            const long double s2 = static_cast<long double>(spec.p1) * spec.p1;
            std::array<long double, 7> raw{};
            for (int r = 0; r <= 6; ++r) {
                raw[r] = std::exp(static_cast<long double>(r) * r * s2 / 2.0L);
            }
            return cumulants_from_raw(raw, false);
        }
        case Family::beta: {
            // raw moments prod_{i<r} (a+i)/(a+b+i)
            const long double a = spec.p1, b = spec.p2;
            std::array<long double, 7> raw{};
            raw[0] = 1.0L;
            for (int r = 1; r <= 6; ++r) {
                raw[r] = raw[r - 1] * (a + r - 1) / (a + b + r - 1);
            }
            return cumulants_from_raw(raw, spec.p1 == spec.p2);
        }
        case Family::uniform:
            return {0.0, -1.2, 48.0 / 7.0, kAllMomentsFinite};
        case Family::student_t: {
            // E|X|^k finite iff k < df
            const double df = spec.p1;
            const int order = static_cast<int>(std::ceil(df)) - 1;
            PopulationCumulants pop{kNaN, kNaN, kNaN, order};
            if (order >= 3) pop.gamma = 0.0;
            if (order >= 4) pop.kappa = 6.0 / (df - 4.0);
            if (order >= 6) {
                const double mu6_over_s6 = 15.0 * (df - 2.0) * (df - 2.0) / ((df - 4.0) * (df - 6.0));
                pop.lambda = mu6_over_s6 - 15.0 * pop.kappa - 15.0;
            }
            return pop;
        }
        case Family::cauchy:
            return {kNaN, kNaN, kNaN, 0};
        case Family::laplace:
            // mu2 = 2, mu4 = 24, mu6 = 720
            return {0.0, 3.0, 30.0, kAllMomentsFinite};
        case Family::logistic:
            // cumulants: k2 = pi^2/3, k4 = 2 pi^4/15, k6 = 16 pi^6/63
            return {0.0, 1.2, 48.0 / 7.0, kAllMomentsFinite};
        case Family::normal_mixture: {
            const long double w = spec.p1;
            const auto r1 = normal_raw_moments(spec.p2);
            const auto r2 = normal_raw_moments(spec.p3);
            std::array<long double, 7> raw{};
            for (int r = 0; r <= 6; ++r) {
                raw[r] = w * r1[r] + (1.0L - w) * r2[r];
            }
            return cumulants_from_raw(raw, spec.p1 == 0.5);
        }
    }
    throw InvalidSpec("unknown family");
}

double gamma_variate(RngStream& rng, double shape) {
    if (shape < 1.0) {
        // Gamma(a) = Gamma(a+1) * U^(1/a)
        const double u = rng.uniform01();
        return gamma_variate(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

Sample sample_from(const AlternativeSpec& spec, std::size_t n, RngStream& rng) {
    if (n < 1) {
        throw InvalidSpec("sample size must be >= 1");
    }
    validate(spec);
    std::vector<double> x(n);
    switch (spec.family) {
        case Family::normal:
            for (auto& v : x) v = rng.normal();
            break;
        case Family::chi_square:
            for (auto& v : x) v = 2.0 * gamma_variate(rng, spec.p1 / 2.0);
            break;
        case Family::exponential:
            for (auto& v : x) v = -std::log(rng.uniform01());
            break;
        case Family::weibull:
            for (auto& v : x) {
                v = spec.p2 * std::pow(-std::log(rng.uniform01()), 1.0 / spec.p1);
            }
            break;
        case Family::log_normal:
            for (auto& v : x) v = std::exp(spec.p1 * rng.normal());
            break;
        case Family::beta:
            for (auto& v : x) {
                const double g1 = gamma_variate(rng, spec.p1);
                const double g2 = gamma_variate(rng, spec.p2);
                v = g1 / (g1 + g2);
            }
            break;
        case Family::uniform:
            for (auto& v : x) v = rng.uniform01();
            break;
        case Family::student_t:
            for (auto& v : x) {
                const double z = rng.normal();
                const double chi2 = 2.0 * gamma_variate(rng, spec.p1 / 2.0);
                v = z / std::sqrt(chi2 / spec.p1);
            }
            break;
        case Family::cauchy:
            for (auto& v : x) {
                v = std::tan(3.14159265358979323846 * (rng.uniform01() - 0.5));
            }
            break;
        case Family::laplace:
            for (auto& v : x) {
                const double u = rng.uniform01();
                v = u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
            }
            break;
        case Family::logistic:
            for (auto& v : x) {
                const double u = rng.uniform01();
                v = std::log(u / (1.0 - u));
            }
            break;
        case Family::normal_mixture:
            for (auto& v : x) {
                const double mu = rng.uniform01() < spec.p1 ? spec.p2 : spec.p3;
                v = mu + rng.normal();
            }
            break;
    }
    return Sample::trusted(std::move(x));
}

std::vector<AlternativeSpec> study_alternatives() {
    return {
        AlternativeSpec::normal(),
        AlternativeSpec::chi_square(1),
        AlternativeSpec::exponential(),
        AlternativeSpec::chi_square(4),
        AlternativeSpec::weibull(0.5, 1),
        AlternativeSpec::weibull(2, 1),
        AlternativeSpec::log_normal(0.25),
        AlternativeSpec::log_normal(0.5),
        AlternativeSpec::beta(0.5, 0.5),
        AlternativeSpec::uniform(),
        AlternativeSpec::beta(2, 2),
        AlternativeSpec::beta(3, 3),
        AlternativeSpec::beta(1, 2),
        AlternativeSpec::beta(2, 3),
        AlternativeSpec::cauchy(),
        AlternativeSpec::student_t(2),
        AlternativeSpec::student_t(3),
        AlternativeSpec::student_t(4),
        AlternativeSpec::student_t(5),
        AlternativeSpec::student_t(6),
        AlternativeSpec::laplace(),
        AlternativeSpec::logistic(),
        AlternativeSpec::normal_mixture(0.5, 0, 1),
        AlternativeSpec::normal_mixture(0.5, 0, 4),
        AlternativeSpec::normal_mixture(0.9, 0, 4),
    };
}

}  // namespace znorm
