#include "krank/render.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace krank {

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  return std::nullopt;
}

std::string render_table(const RankTable& table, TableFormat format) {
  std::ostringstream out;
  switch (format) {
  case TableFormat::Csv:
    out << "n,rank\n";
    for (const auto& row : table.rows) out << row.n << ',' << row.rank << '\n';
    break;
  case TableFormat::Json: {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) rows.push_back({{"n", row.n}, {"rank", row.rank}, {"note", row.note}});
    nlohmann::json j = {{"model", table.label}, {"range", {table.n_lo, table.n_hi}}, {"rows", rows}};
    out << j.dump(2) << '\n';
    break;
  }
  case TableFormat::Text:
    out << "# rank K_n(Z[G]) for " << table.label << ", n = " << table.n_lo << ".." << table.n_hi << '\n';
    out << std::setw(5) << "n" << std::setw(8) << "rank" << "  note\n";
    for (const auto& row : table.rows) {
      out << std::setw(5) << row.n << std::setw(8) << row.rank << "  " << row.note << '\n';
    }
    break;
  }
  return out.str();
}

} // namespace krank
