#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "krank/assembly.hpp"

namespace krank {

enum class TableFormat { Text, Csv, Json };

std::optional<TableFormat> parse_table_format(std::string_view name);

/// Text: aligned columns with provenance notes. CSV: header `n,rank`, one
/// row per degree, LF line endings. JSON: {"model", "range", "rows"}.
std::string render_table(const RankTable& table, TableFormat format);

} // namespace krank
