#pragma once

#include <string>
#include <vector>

namespace evdec::cli {

enum class OutputFormat { Text, Json, Csv };

/// Text: 6 significant digits. Json and Csv: shortest representation that reads back
/// to the same double. Negative zero prints as 0.
std::string format_number(double x, OutputFormat format);

/// Left-aligned columns separated by two spaces.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace evdec::cli
