#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string_view>
#include <vector>

namespace predsim {

/// Splits a line on tab characters. Empty fields are kept.
std::vector<std::string_view> split_tabs(std::string_view line);

/// Calls `fn(line_number, fields)` for every record in a tab-separated text
/// stream. Lines starting with '#' and blank lines are skipped, and a trailing
/// carriage return is dropped. Line numbers are 1-based.
void for_each_tsv_record(
    std::istream& in,
    const std::function<void(std::size_t, const std::vector<std::string_view>&)>& fn);

} // namespace predsim
