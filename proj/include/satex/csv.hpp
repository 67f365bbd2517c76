#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace satex {

/// RFC-4180 field: quoted only when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view text);
/// Joins fields with commas and terminates the record with a newline.
std::string csv_row(const std::vector<std::string>& fields);
/// Shortest decimal text that round-trips to the same double.
std::string format_double(double x);

}  // namespace satex
