// Acceptance suite. Each test case checks one release criterion at its
// stated tolerance and prints a single PASS/FAIL line; failures also
// print per-item diagnostics.
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "znorm/errors.hpp"
#include "znorm/montecarlo.hpp"
#include "znorm/report.hpp"

using namespace znorm;
using testing::JackknifeOutcome;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kSeed = 20100831;

void report_line(int criterion, const char* label, bool pass) {
    std::printf("[acceptance] criterion %d (%s): %s\n", criterion, label, pass ? "PASS" : "FAIL");
    std::fflush(stdout);
}

// Corpus draw: mixed families including heavy tails and two-distinct-
// value samples, sizes 3-200. The two-valued metadata feeds the edge
// classification below.
struct CorpusDraw {
    std::vector<double> values;
    bool two_valued = false;
    std::size_t low_count = 0;
};

CorpusDraw corpus_draw(RngStream& rng, std::size_t index) {
    const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform01() * 198);
    CorpusDraw draw;
    if (index % 7 == 6) {
        const double a = 10.0 * (rng.uniform01() - 0.5);
        const double b = a + 0.25 + 4.0 * rng.uniform01();
        const std::size_t ca = 1 + static_cast<std::size_t>(rng.uniform01() * (n - 2));
        draw.values.assign(ca, a);
        draw.values.insert(draw.values.end(), n - ca, b);
        draw.two_valued = true;
        draw.low_count = ca;
        return draw;
    }
    draw.values.resize(n);
    switch (index % 7) {
        case 0: for (auto& v : draw.values) v = rng.normal(); break;
        case 1: for (auto& v : draw.values) v = -std::log(rng.uniform01()); break;
        case 2: for (auto& v : draw.values) v = std::exp(rng.normal()); break;
        case 3: for (auto& v : draw.values) v = rng.uniform01(); break;
        case 4: for (auto& v : draw.values) v = std::tan(3.1415 * (rng.uniform01() - 0.5)); break;
        case 5: for (auto& v : draw.values) v = rng.normal() * rng.normal(); break;
        default: break;
    }
    return draw;
}

// Moderate-tailed corpus for exact oracle comparison: no heavy tails, so
// correlations stay away from the +-1 representability edge.
std::vector<double> moderate_sample(RngStream& rng, std::size_t index) {
    const std::size_t n = 4 + static_cast<std::size_t>(rng.uniform01() * 196);
    std::vector<double> x(n);
    switch (index % 4) {
        case 0: for (auto& v : x) v = rng.normal(); break;
        case 1: for (auto& v : x) v = -std::log(rng.uniform01()); break;
        case 2: for (auto& v : x) v = std::exp(0.5 * rng.normal()); break;
        default: for (auto& v : x) v = rng.uniform01(); break;
    }
    return x;
}

// The leave-one-out values of a two-distinct-value sample are exactly
// constant when the level counts solve the degeneracy condition: equal
// counts for the variance statistic, 6*ca*cb == n*(n+1) for the third-
// moment statistic. On (or within rounding of) those manifolds, and when
// a correlation sits within rounding of +-1, two algebraically equal
// computations may legitimately land on different sides of the
// ok/degenerate/perfect classification.
bool explainable_status_divergence(StatKind kind, const CorpusDraw& draw,
                                   const JackknifeOutcome& a, const JackknifeOutcome& b) {
    using Status = JackknifeOutcome::Status;
    const auto is_perfect = [](Status s) {
        return s == Status::perfect_plus || s == Status::perfect_minus;
    };
    const JackknifeOutcome* ok = a.status == Status::ok ? &a
                                 : b.status == Status::ok ? &b
                                                          : nullptr;
    if (ok != nullptr && (is_perfect(a.status) || is_perfect(b.status))) {
        return std::abs(std::tanh(ok->value)) > 1.0 - 1e-9;
    }
    if ((a.status == Status::degenerate || b.status == Status::degenerate) && draw.two_valued) {
        const std::size_t n = draw.values.size();
        const std::size_t ca = draw.low_count;
        const std::size_t cb = n - ca;
        if (kind == StatKind::z2) return ca == cb;
        return 6 * ca * cb == n * (n + 1);
    }
    return false;
}

const PowerCell& find_cell(const PowerReport& report, const AlternativeSpec& alt, StatKind kind,
                           std::size_t n, Tail tail) {
    for (const PowerCell& cell : report.cells) {
        if (cell.alternative == alt && cell.kind == kind && cell.n == n && cell.tail == tail) {
            return cell;
        }
    }
    throw std::logic_error("cell not found");
}

}  // namespace

TEST_CASE("criterion 1: population reference table matches the printed study values") {
    struct Row {
        AlternativeSpec alt;
        double gamma, kappa, rho2, rho3;  // NaN marks a printed dash
    };
    const std::vector<Row> printed = {
        {AlternativeSpec::normal(), 0, 0, 0, 0},
        {AlternativeSpec::chi_square(1), 2.82, 12, 0.75, 0.46},
        {AlternativeSpec::exponential(), 2, 6, 0.71, 0.41},
        {AlternativeSpec::chi_square(4), 1.41, 3, 0.63, 0.33},
        {AlternativeSpec::weibull(0.5, 1), 6.62, 84.72, 0.71, 0.36},
        {AlternativeSpec::weibull(2, 1), 0.63, 0.25, 0.42, 0.07},
        {AlternativeSpec::log_normal(0.25), 0.78, 1.10, 0.32, 0.21},
        {AlternativeSpec::log_normal(0.5), 1.75, 5.90, 0.53, 0.33},
        {AlternativeSpec::beta(0.5, 0.5), 0, -1.5, 0, -0.95},
        {AlternativeSpec::uniform(), 0, -1.2, 0, -0.84},
        {AlternativeSpec::beta(2, 2), 0, -0.86, 0, -0.59},
        {AlternativeSpec::beta(3, 3), 0, -2.0 / 3.0, 0, -0.43},
        {AlternativeSpec::beta(1, 2), 0.57, -0.6, 0.48, -0.34},
        {AlternativeSpec::beta(2, 3), 0.29, -0.64, 0.25, -0.39},
        {AlternativeSpec::cauchy(), kNaN, kNaN, kNaN, kNaN},
        {AlternativeSpec::student_t(2), kNaN, kNaN, kNaN, kNaN},
        {AlternativeSpec::student_t(3), kNaN, kNaN, kNaN, kNaN},
        {AlternativeSpec::student_t(4), 0, kNaN, kNaN, kNaN},
        {AlternativeSpec::student_t(5), 0, 6, 0, kNaN},
        {AlternativeSpec::student_t(6), 0, 3, 0, kNaN},
        {AlternativeSpec::laplace(), 0, 3, 0, 0.38},
        {AlternativeSpec::logistic(), 0, 1.2, 0, 0.25},
        {AlternativeSpec::normal_mixture(0.5, 0, 1), 0, -0.08, 0, -0.03},
        {AlternativeSpec::normal_mixture(0.5, 0, 4), 0, -1.28, 0, -0.78},
        {AlternativeSpec::normal_mixture(0.9, 0, 4), 1.2, 1.78, 0.62, 0.44},
    };

    const auto rows = reference_rows();
    REQUIRE(rows.size() == printed.size());

    int bad = 0;
    for (std::size_t i = 0; i < printed.size(); ++i) {
        const Row& want = printed[i];
        REQUIRE(rows[i].alternative == want.alt);
        const struct {
            const char* name;
            double expected;
            const std::optional<double>& got;
        } cells[] = {{"gamma", want.gamma, rows[i].gamma},
                     {"kappa", want.kappa, rows[i].kappa},
                     {"lim_rho2", want.rho2, rows[i].lim_rho2},
                     {"lim_rho3", want.rho3, rows[i].lim_rho3}};
        for (const auto& cell : cells) {
            const bool want_dash = std::isnan(cell.expected);
            if (want_dash != !cell.got.has_value()) {
                ++bad;
                std::printf("  [criterion 1] %s %s: dash placement mismatch\n",
                            format_alternative(want.alt).c_str(), cell.name);
                continue;
            }
            if (want_dash) continue;
            const double delta = std::abs(*cell.got - cell.expected);
            if (!(delta <= 0.005)) {
                ++bad;
                std::printf(
                    "  [criterion 1] %s %s: computed %.6f vs printed %.4g (|delta| = %.4f)\n",
                    format_alternative(want.alt).c_str(), cell.name, *cell.got, cell.expected,
                    delta);
            }
        }
    }
    report_line(1, "reference table within 0.005 of printed values", bad == 0);
    CHECK(bad == 0);
}

TEST_CASE("criterion 2: simulated moment correlations match the exact formulas") {
    const std::size_t reps = 200000;
    const std::size_t n = 20;
    const std::uint64_t seed = derive_seed(kSeed, {2});

    std::vector<double> means(reps), variances(reps), third_moments(reps);
    for (std::size_t r = 0; r < reps; ++r) {
        RngStream rng(seed, r);
        const Sample s = sample_from(AlternativeSpec::exponential(), n, rng);
        const MomentSummary m = central_moments(s);
        means[r] = m.mean;
        variances[r] = m.s2_unbiased;
        third_moments[r] = m.mu3_unbiased;
    }

    const PopulationCumulants expo = population_cumulants(AlternativeSpec::exponential());
    const double expected_rho2 = rho2(expo, static_cast<std::int64_t>(n));
    const double expected_rho3 = rho3(expo, static_cast<std::int64_t>(n));
    const double got_rho2 = testing::pearson(means, variances);
    const double got_rho3 = testing::pearson(means, third_moments);

    const bool pass2 = std::abs(got_rho2 - expected_rho2) <= 0.01;
    const bool pass3 = std::abs(got_rho3 - expected_rho3) <= 0.01;
    std::printf("  [criterion 2] corr(mean, variance):      simulated %.4f, formula %.4f\n",
                got_rho2, expected_rho2);
    std::printf("  [criterion 2] corr(mean, third moment):  simulated %.4f, formula %.4f\n",
                got_rho3, expected_rho3);
    report_line(2, "exact correlation formulas vs 200000-replication simulation", pass2 && pass3);
    CHECK(std::abs(got_rho2 - expected_rho2) <= 0.01);
    CHECK(std::abs(got_rho3 - expected_rho3) <= 0.01);
    CHECK(expected_rho2 == doctest::Approx(0.7025).epsilon(1e-4));
    CHECK(expected_rho3 == doctest::Approx(0.4029).epsilon(1e-4));
}

TEST_CASE("criterion 3: desk-scale power study reproduces the published cells") {
    struct Target {
        AlternativeSpec alt;
        StatKind kind;
        Tail tail;
        std::size_t n;
        double power;
    };

    PowerStudyConfig cfg20;
    cfg20.alternatives = {AlternativeSpec::exponential(), AlternativeSpec::chi_square(4),
                          AlternativeSpec::laplace(),     AlternativeSpec::uniform(),
                          AlternativeSpec::cauchy(),      AlternativeSpec::log_normal(0.5)};
    cfg20.tests = {{StatKind::z2_prime, TailChoice::upper},
                   {StatKind::z2_prime, TailChoice::two_sided},
                   {StatKind::z3_prime, TailChoice::automatic},
                   {StatKind::lm, TailChoice::upper}};
    cfg20.n_values = {20};
    cfg20.alpha = 0.05;
    cfg20.replications = 20000;
    cfg20.null_replications = 100000;
    cfg20.seed = kSeed;
    cfg20.workers = 0;

    PowerStudyConfig cfg50 = cfg20;
    cfg50.alternatives = {AlternativeSpec::uniform(), AlternativeSpec::student_t(3),
                          AlternativeSpec::beta(1, 2)};
    cfg50.n_values = {50};

    const PowerReport rep20 = run_power_study(cfg20);
    const PowerReport rep50 = run_power_study(cfg50);

    const std::vector<Target> targets = {
        {AlternativeSpec::exponential(), StatKind::z2_prime, Tail::upper, 20, 0.89},
        {AlternativeSpec::exponential(), StatKind::z2_prime, Tail::two_sided, 20, 0.82},
        {AlternativeSpec::chi_square(4), StatKind::z2_prime, Tail::upper, 20, 0.68},
        {AlternativeSpec::laplace(), StatKind::z3_prime, Tail::upper, 20, 0.35},
        {AlternativeSpec::uniform(), StatKind::z3_prime, Tail::lower, 20, 0.46},
        {AlternativeSpec::cauchy(), StatKind::z3_prime, Tail::upper, 20, 0.89},
        {AlternativeSpec::log_normal(0.5), StatKind::lm, Tail::upper, 20, 0.33},
        {AlternativeSpec::uniform(), StatKind::z3_prime, Tail::lower, 50, 0.96},
        {AlternativeSpec::student_t(3), StatKind::z3_prime, Tail::upper, 50, 0.74},
        {AlternativeSpec::beta(1, 2), StatKind::z2_prime, Tail::upper, 50, 0.75},
    };

    int bad = 0;
    for (const Target& t : targets) {
        const PowerReport& report = t.n == 20 ? rep20 : rep50;
        const PowerCell& cell = find_cell(report, t.alt, t.kind, t.n, t.tail);
        const double delta = std::abs(cell.rejection_rate - t.power);
        std::printf("  [criterion 3] %-14s %-4s %-5s n=%-3zu power %.4f vs published %.2f%s\n",
                    format_alternative(t.alt).c_str(), std::string(stat_token(t.kind)).c_str(),
                    std::string(tail_token(t.tail)).c_str(), t.n, cell.rejection_rate, t.power,
                    delta <= 0.02 ? "" : "  <-- out of tolerance");
        if (!(delta <= 0.02)) ++bad;
        CHECK(delta <= 0.02);
    }

    // larger samples keep the published power ordering
    const double uniform20 =
        find_cell(rep20, AlternativeSpec::uniform(), StatKind::z3_prime, 20, Tail::lower)
            .rejection_rate;
    const double uniform50 =
        find_cell(rep50, AlternativeSpec::uniform(), StatKind::z3_prime, 50, Tail::lower)
            .rejection_rate;
    CHECK(uniform50 > uniform20);

    // Diagnostic for the LM cell: the published LM column was computed
    // with the asymptotic chi-square(2) critical value, not an empirical
    // one. With that cutoff the engine reproduces the printed number.
    {
        const double chi2_cutoff = 5.991464547107979;
        std::size_t rejected = 0;
        const std::uint64_t alt_seed = derive_seed(kSeed, {0x616c7465ULL, 5, 20});
        for (std::size_t r = 0; r < cfg20.replications; ++r) {
            RngStream rng(alt_seed, r);
            const Sample s = sample_from(AlternativeSpec::log_normal(0.5), 20, rng);
            if (evaluate_outcome(StatKind::lm, s).value >= chi2_cutoff) ++rejected;
        }
        std::printf(
            "  [criterion 3] note: lognormal(0.5) LM with the asymptotic chi-square(2) cutoff "
            "gives %.4f\n",
            static_cast<double>(rejected) / static_cast<double>(cfg20.replications));
    }

    report_line(3, "published power cells within 0.02 at desk scale", bad == 0);
}

TEST_CASE("criterion 4: every test holds its size under the null") {
    PowerStudyConfig config;
    config.alternatives = {AlternativeSpec::normal()};
    config.tests = {{StatKind::z2_prime, TailChoice::upper},
                    {StatKind::z2_prime, TailChoice::lower},
                    {StatKind::z2_prime, TailChoice::two_sided},
                    {StatKind::z3_prime, TailChoice::upper},
                    {StatKind::z3_prime, TailChoice::lower},
                    {StatKind::z2, TailChoice::upper},
                    {StatKind::z2, TailChoice::two_sided},
                    {StatKind::z3, TailChoice::upper},
                    {StatKind::z3, TailChoice::lower},
                    {StatKind::sqrt_b1, TailChoice::upper},
                    {StatKind::b2, TailChoice::upper},
                    {StatKind::b2, TailChoice::lower},
                    {StatKind::lm, TailChoice::upper}};
    config.n_values = {20, 50};
    config.alpha = 0.05;
    config.replications = 20000;
    config.null_replications = 100000;
    config.seed = derive_seed(kSeed, {4});
    config.workers = 0;

    const PowerReport report = run_power_study(config);
    int bad = 0;
    for (const PowerCell& cell : report.cells) {
        const bool ok = cell.rejection_rate >= 0.04 && cell.rejection_rate <= 0.06;
        if (!ok) {
            ++bad;
            std::printf("  [criterion 4] %s %s n=%zu size %.4f out of [0.04, 0.06]\n",
                        std::string(stat_token(cell.kind)).c_str(),
                        std::string(tail_token(cell.tail)).c_str(), cell.n, cell.rejection_rate);
        }
        CHECK(ok);
    }
    report_line(4, "null rejection rates within 0.05 +/- 0.01", bad == 0);
}

TEST_CASE("criterion 5: property suites") {
    using Status = JackknifeOutcome::Status;
    bool pass_a = true, pass_b = true, pass_c = true, pass_d = true;

    // (a) + (b): empirical cumulant bounds, |Z2'| < 1, Z3' well-defined
    {
        RngStream rng(derive_seed(kSeed, {5, 1}), 0);
        for (std::size_t i = 0; i < 100000; ++i) {
            const CorpusDraw draw = corpus_draw(rng, i);
            CumulantEstimates c;
            try {
                c = standardized_cumulants(central_moments(std::span<const double>(draw.values)));
            } catch (const DegenerateSample&) {
                continue;
            }
            const double slack_i = c.kappa_hat + 2.0 - c.gamma_hat * c.gamma_hat;
            const double slack_ii = c.lambda_hat +
                                    9.0 * (c.kappa_hat + c.gamma_hat * c.gamma_hat) + 6.0 -
                                    c.kappa_hat * c.kappa_hat;
            if (slack_i < -1e-9 || slack_ii < -1e-9) {
                pass_a = false;
                std::printf("  [criterion 5a] bound violated: n=%zu slack_i=%.3g slack_ii=%.3g\n",
                            draw.values.size(), slack_i, slack_ii);
            }
            const double z2p = z2_prime(c).value;
            if (!(std::abs(z2p) < 1.0)) pass_b = false;
            if (draw.values.size() >= 3) {
                const double z3p = z3_prime(c).value;
                if (!std::isfinite(z3p) || std::abs(z3p) > 1.0) pass_b = false;
            }
        }
        CHECK(pass_a);
        CHECK(pass_b);
    }

    // (c) affine invariance / sign flips. Values carry a 1e-10 bound on
    // their natural scale: bounded statistics absolutely, LM relative to
    // its magnitude, jackknife statistics on the correlation scale (the
    // Fisher map amplifies rounding without bound as |r| -> 1, so the
    // z-scale bound applies where |r| <= 0.99).
    {
        RngStream rng(derive_seed(kSeed, {5, 3}), 0);
        for (std::size_t i = 0; i < 20000; ++i) {
            const CorpusDraw draw = corpus_draw(rng, i);
            const double a = 0.25 + 4.0 * rng.uniform01();
            const double b = 8.0 * (rng.uniform01() - 0.5);
            std::vector<double> up(draw.values.size()), down(draw.values.size());
            for (std::size_t j = 0; j < draw.values.size(); ++j) {
                up[j] = a * draw.values[j] + b;
                down[j] = -a * draw.values[j] + b;
            }
            for (StatKind kind : {StatKind::z2_prime, StatKind::z3_prime, StatKind::z2,
                                  StatKind::z3, StatKind::sqrt_b1, StatKind::b2, StatKind::lm}) {
                const bool sign_flips = kind == StatKind::z2_prime || kind == StatKind::z2 ||
                                        kind == StatKind::sqrt_b1;
                const JackknifeOutcome base = testing::library_jackknife(kind, draw.values);
                const JackknifeOutcome scaled = testing::library_jackknife(kind, up);
                JackknifeOutcome flipped = testing::library_jackknife(kind, down);
                // fold the expected sign flip into the outcome so both
                // transforms can be checked against the base
                if (sign_flips) {
                    flipped.value = -flipped.value;
                    if (flipped.status == Status::perfect_plus) {
                        flipped.status = Status::perfect_minus;
                    } else if (flipped.status == Status::perfect_minus) {
                        flipped.status = Status::perfect_plus;
                    }
                }

                for (const JackknifeOutcome& other : {scaled, flipped}) {
                    if (base.status != other.status) {
                        if (!explainable_status_divergence(kind, draw, base, other)) {
                            pass_c = false;
                            std::printf("  [criterion 5c] %s status changed under affine map\n",
                                        std::string(stat_token(kind)).c_str());
                        }
                        continue;
                    }
                    if (base.status != Status::ok) continue;
                    bool ok;
                    if (kind == StatKind::z2 || kind == StatKind::z3) {
                        ok = std::abs(std::tanh(other.value) - std::tanh(base.value)) <= 1e-10;
                        if (std::abs(std::tanh(base.value)) <= 0.99) {
                            ok = ok && std::abs(other.value - base.value) <=
                                           1e-10 * std::max(1.0, std::abs(base.value));
                        }
                    } else {
                        ok = std::abs(other.value - base.value) <=
                             1e-10 * std::max(1.0, std::abs(base.value));
                    }
                    if (!ok) {
                        pass_c = false;
                        std::printf("  [criterion 5c] affine deviation for %s\n",
                                    std::string(stat_token(kind)).c_str());
                    }
                }
            }
        }
        CHECK(pass_c);
    }

    // (d) jackknife statistics vs the O(n^2) transcription. On the
    // moderate-tailed corpus the Fisher-z values must agree to 1e-12;
    // on the stress corpus (heavy tails, two-valued samples) the
    // correlations must agree to 1e-10 and any classification
    // difference must sit on a degeneracy manifold or the +-1 edge.
    {
        RngStream rng_m(derive_seed(kSeed, {5, 4}), 0);
        for (std::size_t i = 0; i < 1000; ++i) {
            const std::vector<double> x = moderate_sample(rng_m, i);
            for (StatKind kind : {StatKind::z2, StatKind::z3}) {
                const JackknifeOutcome lib = testing::library_jackknife(kind, x);
                const JackknifeOutcome ora = kind == StatKind::z2
                                                 ? testing::oracle_jackknife_z2(x)
                                                 : testing::oracle_jackknife_z3(x);
                if (lib.status != ora.status) {
                    pass_d = false;
                    std::printf("  [criterion 5d] status mismatch on moderate corpus\n");
                    continue;
                }
                if (lib.status == Status::ok &&
                    std::abs(lib.value - ora.value) >
                        1e-12 * std::max({1.0, std::abs(lib.value), std::abs(ora.value)})) {
                    pass_d = false;
                    std::printf("  [criterion 5d] z deviation %.3e on moderate corpus\n",
                                std::abs(lib.value - ora.value));
                }
            }
        }

        RngStream rng_s(derive_seed(kSeed, {5, 5}), 0);
        for (std::size_t i = 0; i < 1000; ++i) {
            const CorpusDraw draw = corpus_draw(rng_s, i);
            for (StatKind kind : {StatKind::z2, StatKind::z3}) {
                const JackknifeOutcome lib = testing::library_jackknife(kind, draw.values);
                const JackknifeOutcome ora = kind == StatKind::z2
                                                 ? testing::oracle_jackknife_z2(draw.values)
                                                 : testing::oracle_jackknife_z3(draw.values);
                if (lib.status != ora.status) {
                    if (!explainable_status_divergence(kind, draw, lib, ora)) {
                        pass_d = false;
                        std::printf("  [criterion 5d] unexplained status mismatch (n=%zu)\n",
                                    draw.values.size());
                    }
                    continue;
                }
                if (lib.status == Status::ok &&
                    std::abs(std::tanh(lib.value) - std::tanh(ora.value)) > 1e-10) {
                    pass_d = false;
                    std::printf("  [criterion 5d] correlation deviation on stress corpus\n");
                }
            }
        }
        CHECK(pass_d);
    }

    report_line(5, "cumulant bounds, boundedness, affine behavior, jackknife oracle",
                pass_a && pass_b && pass_c && pass_d);
}

TEST_CASE("criterion 6: reports are byte-identical across worker counts") {
    PowerStudyConfig config;
    config.alternatives = {AlternativeSpec::exponential(), AlternativeSpec::uniform(),
                           AlternativeSpec::cauchy()};
    config.tests = {{StatKind::z2_prime, TailChoice::automatic},
                    {StatKind::z3_prime, TailChoice::automatic},
                    {StatKind::z2, TailChoice::automatic},
                    {StatKind::lm, TailChoice::upper}};
    config.n_values = {20, 50};
    config.alpha = 0.05;
    config.replications = 5000;
    config.null_replications = 10000;
    config.seed = derive_seed(kSeed, {6});

    config.workers = 1;
    const PowerReport serial = run_power_study(config);
    config.workers = 4;
    const PowerReport threaded = run_power_study(config);

    const std::string csv1 = power_report_csv(serial);
    const std::string csv2 = power_report_csv(threaded);
    const std::string json1 = power_report_json(serial).dump();
    const std::string json2 = power_report_json(threaded).dump();
    const bool pass = csv1 == csv2 && json1 == json2 && !csv1.empty();
    report_line(6, "worker-count invariance of study reports", pass);
    CHECK(csv1 == csv2);
    CHECK(json1 == json2);
    CHECK(!csv1.empty());
}
