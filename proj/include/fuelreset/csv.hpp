#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuelreset {

// Minimal delimiter-separated parsing for the flat feeds this project reads.
// No quoting rules: station ids and tokens in the supported formats never
// contain the delimiter.

std::string_view trim(std::string_view s);
std::vector<std::string> split_fields(std::string_view line, char delim = ',');

// Reads one line, stripping a trailing '\r'. Returns false on EOF.
bool read_line(std::istream& in, std::string& line);

// Header lookup; returns the column index of `name` or nullopt.
std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       std::string_view name);

std::optional<double> parse_double(std::string_view field);
std::optional<long long> parse_integer(std::string_view field);

}  // namespace fuelreset
