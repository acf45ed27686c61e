#include "znorm/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <thread>

#include "znorm/errors.hpp"
#include "znorm/moments.hpp"

namespace znorm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Context tags for seed derivation; distinct purposes get disjoint
// stream families.
constexpr std::uint64_t kNullTag = 0x6e756c6cULL;         // "null"
constexpr std::uint64_t kAlternativeTag = 0x616c7465ULL;  // "alte"

// Runs f(begin, end) over [0, count) split into contiguous chunks.
// Partition boundaries never influence results; workers only trade time.
template <typename F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        f(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        if (begin == end) break;
        pool.emplace_back([&f, begin, end] { f(begin, end); });
    }
    for (auto& t : pool) {
        t.join();
    }
}

// Evaluates every requested kind on one sample, sharing the moment pass
// across the moment-based statistics.
void evaluate_many(std::span<const StatKind> kinds, const Sample& sample,
                   std::span<StatOutcome> out) {
    bool need_moments = false;
    for (StatKind k : kinds) {
        if (k != StatKind::z2 && k != StatKind::z3) need_moments = true;
    }

    CumulantEstimates cum;
    bool moments_degenerate = false;
    if (need_moments) {
        try {
            cum = sample_cumulants(sample);
        } catch (const DegenerateSample&) {
            moments_degenerate = true;
        }
    }

    for (std::size_t i = 0; i < kinds.size(); ++i) {
        const StatKind k = kinds[i];
        if (k == StatKind::z2 || k == StatKind::z3) {
            try {
                out[i] = {evaluate_statistic(k, sample).value, false};
            } catch (const PerfectCorrelation& pc) {
                out[i] = {pc.direction > 0 ? kInf : -kInf, false};
            } catch (const DegenerateSample&) {
                out[i] = {0.0, true};
            }
            continue;
        }
        if (moments_degenerate) {
            out[i] = {0.0, true};
            continue;
        }
        switch (k) {
            case StatKind::z2_prime:
                out[i] = {z2_prime(cum).value, false};
                break;
            case StatKind::z3_prime:
                out[i] = {z3_prime(cum).value, false};
                break;
            case StatKind::sqrt_b1:
                out[i] = {cum.gamma_hat, false};
                break;
            case StatKind::b2:
                out[i] = {cum.kappa_hat, false};
                break;
            case StatKind::lm:
                out[i] = {comparison_stats(cum).lm, false};
                break;
            default:
                break;
        }
    }
}

// ceil/floor with a small absolute tolerance so that quantile ranks like
// 0.9 * 10 land on the exact integer they represent.
std::size_t rank_ceil(double x) {
    return static_cast<std::size_t>(std::ceil(x - 1e-9));
}
std::size_t rank_floor(double x) {
    return static_cast<std::size_t>(std::floor(x + 1e-9));
}

double order_statistic(std::span<const double> sorted, std::size_t rank_1based) {
    const std::size_t idx = std::clamp<std::size_t>(rank_1based, 1, sorted.size()) - 1;
    return sorted[idx];
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidAlpha("alpha must lie strictly between 0 and 1");
    }
}

}  // namespace

StatOutcome evaluate_outcome(StatKind kind, const Sample& sample) {
    StatOutcome out;
    evaluate_many({&kind, 1}, sample, {&out, 1});
    return out;
}

std::vector<NullDistribution> simulate_null(std::span<const StatKind> kinds, std::size_t n,
                                            std::size_t replications, std::uint64_t seed,
                                            unsigned workers) {
    for (StatKind kind : kinds) {
        if (n < min_sample_size(kind)) {
            throw InvalidN(std::string(stat_token(kind)) + " requires n >= " +
                           std::to_string(min_sample_size(kind)));
        }
    }
    const AlternativeSpec null_spec = AlternativeSpec::normal();
    std::vector<std::vector<StatOutcome>> outcomes(kinds.size());
    for (auto& col : outcomes) {
        col.resize(replications);
    }

    parallel_for(replications, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<StatOutcome> row(kinds.size());
        for (std::size_t r = begin; r < end; ++r) {
            RngStream rng(seed, r);
            const Sample sample = sample_from(null_spec, n, rng);
            evaluate_many(kinds, sample, row);
            for (std::size_t k = 0; k < kinds.size(); ++k) {
                outcomes[k][r] = row[k];
            }
        }
    });

    std::vector<NullDistribution> result(kinds.size());
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        NullDistribution& nd = result[k];
        nd.kind = kinds[k];
        nd.n = n;
        nd.requested = replications;
        nd.sorted_values.reserve(replications);
        for (const StatOutcome& o : outcomes[k]) {
            if (o.degenerate) {
                ++nd.degenerate_count;
            } else {
                nd.sorted_values.push_back(o.value);
            }
        }
        std::sort(nd.sorted_values.begin(), nd.sorted_values.end());
        nd.sorted_abs_values.resize(nd.sorted_values.size());
        std::transform(nd.sorted_values.begin(), nd.sorted_values.end(),
                       nd.sorted_abs_values.begin(), [](double v) { return std::abs(v); });
        std::sort(nd.sorted_abs_values.begin(), nd.sorted_abs_values.end());
    }
    return result;
}

double threshold_from_null(const NullDistribution& null_dist, double alpha, Tail tail) {
    check_alpha(alpha);
    const std::size_t m = null_dist.sorted_values.size();
    if (m < 1000) {
        throw Underpowered("at least 1000 null replications are required");
    }
    if (static_cast<double>(m) * std::min(alpha, 1.0 - alpha) < 10.0) {
        throw Underpowered("null sample too small for the requested quantile");
    }
    switch (tail) {
        case Tail::upper:
            return order_statistic(null_dist.sorted_values,
                                   rank_ceil((1.0 - alpha) * static_cast<double>(m)));
        case Tail::lower:
            return order_statistic(null_dist.sorted_values,
                                   rank_floor(alpha * static_cast<double>(m)) + 1);
        case Tail::two_sided:
            return order_statistic(null_dist.sorted_abs_values,
                                   rank_ceil((1.0 - alpha) * static_cast<double>(m)));
    }
    throw InvalidSpec("unknown tail");
}

double CriticalValueTable::threshold(StatKind kind, std::size_t n, double alpha, Tail tail) const {
    for (const Entry& e : entries) {
        if (e.kind == kind && e.n == n && e.alpha == alpha && e.tail == tail) {
            return e.threshold;
        }
    }
    throw InvalidSpec("no calibrated threshold for this (statistic, n, alpha, tail)");
}

CriticalValueTable calibrate(std::span<const StatKind> kinds, std::size_t n,
                             std::span<const double> alphas, std::span<const Tail> tails,
                             std::size_t null_replications, std::uint64_t seed, unsigned workers) {
    for (double a : alphas) {
        check_alpha(a);
    }
    const auto nulls = simulate_null(kinds, n, null_replications, seed, workers);
    CriticalValueTable table;
    table.null_replications = null_replications;
    table.seed = seed;
    for (const NullDistribution& nd : nulls) {
        for (double alpha : alphas) {
            for (Tail tail : tails) {
                table.entries.push_back(
                    {nd.kind, n, alpha, tail, threshold_from_null(nd, alpha, tail)});
            }
        }
    }
    return table;
}

CriticalValueTable calibrate(StatKind kind, std::size_t n, std::span<const double> alphas,
                             std::span<const Tail> tails, std::size_t null_replications,
                             std::uint64_t seed) {
    return calibrate({&kind, 1}, n, alphas, tails, null_replications, seed, 1);
}

double p_value(double observed, Tail tail, std::span<const double> sorted_null) {
    if (sorted_null.empty()) {
        throw Underpowered("empty null sample");
    }
    const double m = static_cast<double>(sorted_null.size());
    std::size_t extreme = 0;
    switch (tail) {
        case Tail::upper:
            extreme = sorted_null.end() -
                      std::lower_bound(sorted_null.begin(), sorted_null.end(), observed);
            break;
        case Tail::lower:
            extreme = std::upper_bound(sorted_null.begin(), sorted_null.end(), observed) -
                      sorted_null.begin();
            break;
        case Tail::two_sided:
            extreme = sorted_null.end() -
                      std::lower_bound(sorted_null.begin(), sorted_null.end(), std::abs(observed));
            break;
    }
    return (1.0 + static_cast<double>(extreme)) / (m + 1.0);
}

double p_value(const TestStatistic& observed, Tail tail, const NullDistribution& null_dist) {
    return p_value(observed.value, tail,
                   tail == Tail::two_sided ? std::span<const double>(null_dist.sorted_abs_values)
                                           : std::span<const double>(null_dist.sorted_values));
}

Tail resolve_tail(const TestRequest& request, const AlternativeSpec& alternative) {
    switch (request.tail) {
        case TailChoice::upper:
            return Tail::upper;
        case TailChoice::lower:
            return Tail::lower;
        case TailChoice::two_sided:
            return Tail::two_sided;
        case TailChoice::automatic:
            break;
    }

    if (request.kind == StatKind::lm) {
        return Tail::upper;  // LM is nonnegative; evidence is always large values
    }

    const PopulationCumulants pop = population_cumulants(alternative);
    const bool skew_based = request.kind == StatKind::z2_prime ||
                            request.kind == StatKind::z2 || request.kind == StatKind::sqrt_b1;

    // Direction the alternative pushes the underlying moment. Diverging
    // moments behave like large positive sample kurtosis / extreme
    // skewness of either sign; positive is the convention here.
    double direction;
    if (skew_based) {
        direction = pop.finite_moment_order >= 3 && pop.gamma < 0.0 ? -1.0 : 1.0;
    } else {
        direction = pop.finite_moment_order >= 4 && pop.kappa < 0.0 ? -1.0 : 1.0;
    }

    // The jackknife statistics anticorrelate with the moment direction.
    if (request.kind == StatKind::z2 || request.kind == StatKind::z3) {
        direction = -direction;
    }
    return direction >= 0.0 ? Tail::upper : Tail::lower;
}

PowerReport run_power_study(const PowerStudyConfig& config) {
    check_alpha(config.alpha);
    if (config.replications < 1) {
        throw InvalidSpec("study requires at least one replication");
    }
    if (config.alternatives.empty() || config.tests.empty() || config.n_values.empty()) {
        throw InvalidSpec("study requires alternatives, tests and sample sizes");
    }

    // Distinct statistic kinds, preserving first-mention order.
    std::vector<StatKind> kinds;
    for (const TestRequest& t : config.tests) {
        if (std::find(kinds.begin(), kinds.end(), t.kind) == kinds.end()) {
            kinds.push_back(t.kind);
        }
    }
    const auto kind_index = [&](StatKind k) {
        return static_cast<std::size_t>(std::find(kinds.begin(), kinds.end(), k) - kinds.begin());
    };

    PowerReport report;
    report.config = config;

    for (std::size_t n : config.n_values) {
        const std::uint64_t null_seed = derive_seed(config.seed, {kNullTag, n});
        const auto nulls =
            simulate_null(kinds, n, config.null_replications, null_seed, config.workers);

        for (std::size_t a = 0; a < config.alternatives.size(); ++a) {
            const AlternativeSpec& alt = config.alternatives[a];
            const std::uint64_t alt_seed = derive_seed(config.seed, {kAlternativeTag, a, n});

            // Resolve tails and thresholds once per alternative.
            struct CellPlan {
                StatKind kind;
                std::size_t kind_idx;
                Tail tail;
                double threshold;
            };
            std::vector<CellPlan> plans;
            plans.reserve(config.tests.size());
            for (const TestRequest& t : config.tests) {
                const Tail tail = resolve_tail(t, alt);
                plans.push_back({t.kind, kind_index(t.kind), tail,
                                 threshold_from_null(nulls[kind_index(t.kind)], config.alpha, tail)});
            }

            struct Tally {
                std::size_t rejections = 0;
                std::size_t degenerate = 0;
            };
            const unsigned workers =
                config.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : config.workers;
            std::vector<std::vector<Tally>> worker_tallies(
                workers, std::vector<Tally>(plans.size()));

            std::atomic<unsigned> next_worker{0};
            parallel_for(config.replications, workers, [&](std::size_t begin, std::size_t end) {
                std::vector<Tally>& tally = worker_tallies[next_worker.fetch_add(1)];
                std::vector<StatOutcome> row(kinds.size());
                for (std::size_t r = begin; r < end; ++r) {
                    RngStream rng(alt_seed, r);
                    const Sample sample = sample_from(alt, n, rng);
                    evaluate_many(kinds, sample, row);
                    for (std::size_t c = 0; c < plans.size(); ++c) {
                        const StatOutcome& o = row[plans[c].kind_idx];
                        if (o.degenerate) {
                            ++tally[c].degenerate;
                            continue;
                        }
                        bool reject = false;
                        switch (plans[c].tail) {
                            case Tail::upper:
                                reject = o.value >= plans[c].threshold;
                                break;
                            case Tail::lower:
                                reject = o.value <= plans[c].threshold;
                                break;
                            case Tail::two_sided:
                                reject = std::abs(o.value) >= plans[c].threshold;
                                break;
                        }
                        if (reject) {
                            ++tally[c].rejections;
                        }
                    }
                }
            });

            for (std::size_t c = 0; c < plans.size(); ++c) {
                Tally total;
                for (const auto& wt : worker_tallies) {
                    total.rejections += wt[c].rejections;
                    total.degenerate += wt[c].degenerate;
                }
                PowerCell cell;
                cell.alternative = alt;
                cell.kind = plans[c].kind;
                cell.tail = plans[c].tail;
                cell.n = n;
                cell.degenerate_count = total.degenerate;
                cell.replications_used = config.replications - total.degenerate;
                cell.rejections = total.rejections;
                const double used = static_cast<double>(cell.replications_used);
                cell.rejection_rate = used > 0.0 ? static_cast<double>(total.rejections) / used : 0.0;
                cell.mc_std_error =
                    used > 0.0 ? std::sqrt(cell.rejection_rate * (1.0 - cell.rejection_rate) / used)
                               : 0.0;
                report.cells.push_back(cell);
            }
        }
    }
    return report;
}

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits on `sep` at paren depth zero, so weibull(0.5,1) stays together.
std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.emplace_back(trim_view(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!trim_view(current).empty() || !parts.empty()) {
        parts.emplace_back(trim_view(current));
    }
    while (!parts.empty() && parts.back().empty()) {
        parts.pop_back();
    }
    return parts;
}

template <typename T>
T parse_integer(const std::string& value, const std::string& key, std::size_t line) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParseError("bad integer for '" + key + "': " + value, line);
    }
    return out;
}

TailChoice tail_choice_from_token(std::string_view token, std::size_t line) {
    if (token == "auto" || token == "automatic") return TailChoice::automatic;
    if (token == "upper") return TailChoice::upper;
    if (token == "lower") return TailChoice::lower;
    if (token == "two" || token == "two_sided" || token == "two-sided") return TailChoice::two_sided;
    throw ParseError("unknown tail '" + std::string(token) + "'", line);
}

}  // namespace

std::string_view tail_choice_token(TailChoice choice) {
    switch (choice) {
        case TailChoice::upper: return "upper";
        case TailChoice::lower: return "lower";
        case TailChoice::two_sided: return "two";
        case TailChoice::automatic: return "auto";
    }
    return "?";
}

PowerStudyConfig parse_power_config(std::istream& in) {
    PowerStudyConfig config;
    bool saw_alternatives = false, saw_tests = false, saw_n = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string_view line = trim_view(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        const std::string key{trim_view(line.substr(0, eq))};
        const std::string value{trim_view(line.substr(eq + 1))};

        if (key == "seed") {
            config.seed = parse_integer<std::uint64_t>(value, key, line_no);
        } else if (key == "replications") {
            config.replications = parse_integer<std::size_t>(value, key, line_no);
        } else if (key == "null_replications") {
            config.null_replications = parse_integer<std::size_t>(value, key, line_no);
        } else if (key == "workers") {
            config.workers = parse_integer<unsigned>(value, key, line_no);
        } else if (key == "alpha") {
            double a = 0.0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), a);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                throw ParseError("bad number for 'alpha': " + value, line_no);
            }
            config.alpha = a;
        } else if (key == "n") {
            config.n_values.clear();
            for (const std::string& tok : split_top_level(value, ',')) {
                config.n_values.push_back(parse_integer<std::size_t>(tok, key, line_no));
            }
            saw_n = !config.n_values.empty();
        } else if (key == "alternatives") {
            config.alternatives.clear();
            for (const std::string& tok : split_top_level(value, ',')) {
                try {
                    config.alternatives.push_back(parse_alternative(tok));
                } catch (const InvalidSpec& e) {
                    throw ParseError(e.what(), line_no);
                }
            }
            saw_alternatives = !config.alternatives.empty();
        } else if (key == "tests") {
            config.tests.clear();
            for (const std::string& tok : split_top_level(value, ',')) {
                TestRequest req;
                const auto colon = tok.find(':');
                try {
                    req.kind = stat_kind_from_token(trim_view(std::string_view(tok).substr(0, colon)));
                } catch (const InvalidSpec& e) {
                    throw ParseError(e.what(), line_no);
                }
                if (colon != std::string::npos) {
                    req.tail =
                        tail_choice_from_token(trim_view(std::string_view(tok).substr(colon + 1)),
                                               line_no);
                }
                config.tests.push_back(req);
            }
            saw_tests = !config.tests.empty();
        } else {
            throw ParseError("unknown key '" + key + "'", line_no);
        }
    }

    if (!saw_alternatives) throw ParseError("missing 'alternatives'");
    if (!saw_tests) throw ParseError("missing 'tests'");
    if (!saw_n) throw ParseError("missing 'n'");
    return config;
}

PowerStudyConfig parse_power_config(const std::string& text) {
    std::istringstream in(text);
    return parse_power_config(in);
}

}  // namespace znorm
