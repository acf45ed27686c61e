#include "znorm/data_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

#include "znorm/errors.hpp"

namespace znorm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<double> read_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFound("cannot open '" + path + "'");
    }

    std::vector<double> values;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string_view token = trim(raw);
        if (token.empty()) continue;

        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("expected one number per line, got '" + std::string(token) + "'",
                             line_no);
        }
        values.push_back(v);
    }
    return values;
}

Sample load_sample(const std::string& path) {
    return Sample(read_data_file(path));
}

}  // namespace znorm
