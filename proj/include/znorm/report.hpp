#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "znorm/montecarlo.hpp"

namespace znorm {

/**
 * @brief One row of the population reference table: cumulants of a study
 * alternative plus the limiting correlations. Entries are empty where
 * the defining moment diverges; emitters print "-" there.
 */
struct ReferenceRow {
    AlternativeSpec alternative;
    std::optional<double> gamma;
    std::optional<double> kappa;
    std::optional<double> lim_rho2;
    std::optional<double> lim_rho3;
};

/// Reference rows for all study alternatives, in study order.
[[nodiscard]] std::vector<ReferenceRow> reference_rows();

[[nodiscard]] std::string reference_table_plain(const std::vector<ReferenceRow>& rows);
[[nodiscard]] std::string reference_table_csv(const std::vector<ReferenceRow>& rows);
[[nodiscard]] nlohmann::json reference_table_json(const std::vector<ReferenceRow>& rows);

/// CSV with one row per (alternative, statistic, n) cell. Stable column
/// order and fixed numeric formatting: identical reports give identical
/// bytes.
[[nodiscard]] std::string power_report_csv(const PowerReport& report);
[[nodiscard]] nlohmann::json power_report_json(const PowerReport& report);
[[nodiscard]] std::string power_report_plain(const PowerReport& report);

[[nodiscard]] std::string critical_table_csv(const CriticalValueTable& table);
[[nodiscard]] nlohmann::json critical_table_json(const CriticalValueTable& table);
[[nodiscard]] std::string critical_table_plain(const CriticalValueTable& table);

}  // namespace znorm
