#include "znorm/report.hpp"

#include <cstdio>

#include "znorm/errors.hpp"
#include "znorm/theory.hpp"

namespace znorm {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

// Compact value formatting shared by all emitters.
std::string num(double v) { return fmt("%.10g", v); }
std::string rate(double v) { return fmt("%.6f", v); }

std::string opt_or_dash(const std::optional<double>& v, const char* format = "%.10g") {
    return v ? fmt(format, *v) : std::string("-");
}

}  // namespace

std::vector<ReferenceRow> reference_rows() {
    std::vector<ReferenceRow> rows;
    for (const AlternativeSpec& alt : study_alternatives()) {
        const PopulationCumulants pop = population_cumulants(alt);
        ReferenceRow row;
        row.alternative = alt;
        if (pop.finite_moment_order >= 3) row.gamma = pop.gamma;
        if (pop.finite_moment_order >= 4) {
            row.kappa = pop.kappa;
            row.lim_rho2 = rho2_limit(pop);
        }
        if (pop.finite_moment_order >= 6) row.lim_rho3 = rho3_limit(pop);
        rows.push_back(row);
    }
    return rows;
}

std::string reference_table_plain(const std::vector<ReferenceRow>& rows) {
    std::string out = "distribution        gamma    kappa  lim_rho2  lim_rho3\n";
    for (const ReferenceRow& r : rows) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-17s %8s %8s %9s %9s\n",
                      format_alternative(r.alternative).c_str(),
                      opt_or_dash(r.gamma, "%.2f").c_str(), opt_or_dash(r.kappa, "%.2f").c_str(),
                      opt_or_dash(r.lim_rho2, "%.2f").c_str(),
                      opt_or_dash(r.lim_rho3, "%.2f").c_str());
        out += line;
    }
    return out;
}

std::string reference_table_csv(const std::vector<ReferenceRow>& rows) {
    std::string out = "distribution,gamma,kappa,lim_rho2,lim_rho3\n";
    for (const ReferenceRow& r : rows) {
        out += format_alternative(r.alternative) + ',' + opt_or_dash(r.gamma) + ',' +
               opt_or_dash(r.kappa) + ',' + opt_or_dash(r.lim_rho2) + ',' +
               opt_or_dash(r.lim_rho3) + '\n';
    }
    return out;
}

nlohmann::json reference_table_json(const std::vector<ReferenceRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    const auto cell = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    for (const ReferenceRow& r : rows) {
        out.push_back({{"distribution", format_alternative(r.alternative)},
                       {"gamma", cell(r.gamma)},
                       {"kappa", cell(r.kappa)},
                       {"lim_rho2", cell(r.lim_rho2)},
                       {"lim_rho3", cell(r.lim_rho3)}});
    }
    return out;
}

std::string power_report_csv(const PowerReport& report) {
    std::string out =
        "alternative,statistic,tail,n,alpha,replications,null_replications,"
        "replications_used,rejections,degenerate,rejection_rate,mc_std_error\n";
    for (const PowerCell& c : report.cells) {
        out += format_alternative(c.alternative) + ',' + std::string(stat_token(c.kind)) + ',' +
               std::string(tail_token(c.tail)) + ',' + std::to_string(c.n) + ',' +
               num(report.config.alpha) + ',' + std::to_string(report.config.replications) + ',' +
               std::to_string(report.config.null_replications) + ',' +
               std::to_string(c.replications_used) + ',' + std::to_string(c.rejections) + ',' +
               std::to_string(c.degenerate_count) + ',' + rate(c.rejection_rate) + ',' +
               rate(c.mc_std_error) + '\n';
    }
    return out;
}

nlohmann::json power_report_json(const PowerReport& report) {
    const PowerStudyConfig& cfg = report.config;
    nlohmann::json tests = nlohmann::json::array();
    for (const TestRequest& t : cfg.tests) {
        tests.push_back({{"statistic", std::string(stat_token(t.kind))},
                         {"tail", std::string(tail_choice_token(t.tail))}});
    }
    nlohmann::json alternatives = nlohmann::json::array();
    for (const AlternativeSpec& a : cfg.alternatives) {
        alternatives.push_back(format_alternative(a));
    }

    nlohmann::json cells = nlohmann::json::array();
    for (const PowerCell& c : report.cells) {
        cells.push_back({{"alternative", format_alternative(c.alternative)},
                         {"statistic", std::string(stat_token(c.kind))},
                         {"tail", std::string(tail_token(c.tail))},
                         {"n", c.n},
                         {"replications_used", c.replications_used},
                         {"rejections", c.rejections},
                         {"degenerate", c.degenerate_count},
                         {"rejection_rate", c.rejection_rate},
                         {"mc_std_error", c.mc_std_error}});
    }
    return {{"meta",
             {{"seed", cfg.seed},
              {"alpha", cfg.alpha},
              {"replications", cfg.replications},
              {"null_replications", cfg.null_replications},
              {"n", cfg.n_values},
              {"alternatives", alternatives},
              {"tests", tests}}},
            {"cells", cells}};
}

std::string power_report_plain(const PowerReport& report) {
    std::string out = "alternative        statistic  tail    n  rejection_rate  mc_std_error  degenerate\n";
    for (const PowerCell& c : report.cells) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-18s %-9s %-5s %4zu %15.4f %13.4f %11zu\n",
                      format_alternative(c.alternative).c_str(),
                      std::string(stat_token(c.kind)).c_str(),
                      std::string(tail_token(c.tail)).c_str(), c.n, c.rejection_rate,
                      c.mc_std_error, c.degenerate_count);
        out += line;
    }
    return out;
}

std::string critical_table_csv(const CriticalValueTable& table) {
    std::string out = "statistic,n,alpha,tail,threshold,null_replications,seed\n";
    for (const auto& e : table.entries) {
        out += std::string(stat_token(e.kind)) + ',' + std::to_string(e.n) + ',' + num(e.alpha) +
               ',' + std::string(tail_token(e.tail)) + ',' + num(e.threshold) + ',' +
               std::to_string(table.null_replications) + ',' + std::to_string(table.seed) + '\n';
    }
    return out;
}

nlohmann::json critical_table_json(const CriticalValueTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries) {
        entries.push_back({{"statistic", std::string(stat_token(e.kind))},
                           {"n", e.n},
                           {"alpha", e.alpha},
                           {"tail", std::string(tail_token(e.tail))},
                           {"threshold", e.threshold}});
    }
    return {{"meta", {{"null_replications", table.null_replications}, {"seed", table.seed}}},
            {"entries", entries}};
}

std::string critical_table_plain(const CriticalValueTable& table) {
    std::string out = "statistic     n   alpha  tail   threshold\n";
    for (const auto& e : table.entries) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-10s %5zu %7.4g %-6s %10.6f\n",
                      std::string(stat_token(e.kind)).c_str(), e.n, e.alpha,
                      std::string(tail_token(e.tail)).c_str(), e.threshold);
        out += line;
    }
    char meta[96];
    std::snprintf(meta, sizeof(meta), "null replications: %zu, seed: %llu\n",
                  table.null_replications, static_cast<unsigned long long>(table.seed));
    out += meta;
    return out;
}

}  // namespace znorm
