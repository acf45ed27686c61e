#pragma once

#include <string>
#include <vector>

#include "znorm/sample.hpp"

namespace znorm {

/**
 * @brief Reads a data file: one number per line, `#` starts a comment,
 * blank lines are skipped. Numbers are parsed locale-independently.
 *
 * @throws FileNotFound, ParseError (with 1-based line number)
 */
[[nodiscard]] std::vector<double> read_data_file(const std::string& path);

/// read_data_file + Sample validation.
[[nodiscard]] Sample load_sample(const std::string& path);

}  // namespace znorm
