// report.hpp -- rendering of grouped result rows in the benchmark's table
// shape (R, S, B, P per level, grouped by feature) as aligned text, CSV and
// JSON. "-" marks N/A ratios. CSV output re-parses to the same rows.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "deblometer/metrics.hpp"

namespace deblometer {

enum class ReportFormat { Text, Csv, Json };

inline const char* report_format_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::Text: return "text";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
  }
  return "?";
}

namespace detail {

inline std::string pair_cell(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline std::string percent_cell(const std::optional<Rational>& r) {
  if (!r) return "-";
  return std::to_string(percent_half_up(*r));
}

inline std::string level_cell(Level level) {
  switch (level) {
    case Level::Class: return "class";
    case Level::Method: return "method";
    case Level::Field: return "field";
  }
  return "?";
}

inline Level level_from_name(const std::string& name) {
  if (name == "class" || name == "CLASS") return Level::Class;
  if (name == "method" || name == "METHOD") return Level::Method;
  if (name == "field" || name == "FIELD") return Level::Field;
  throw std::runtime_error("unknown level name: " + name);
}

}  // namespace detail

/// Aligned text table, one row per (feature, level), grouped by feature.
inline std::string render_report_text(const std::vector<ReportRow>& rows) {
  std::vector<std::array<std::string, 7>> cells;
  cells.push_back({"Feature", "Level", "R", "S", "B", "P", "U"});
  std::string last_feature;
  for (const auto& row : rows) {
    std::string feature = row.feature == last_feature ? "" : row.feature;
    last_feature = row.feature;
    cells.push_back({feature, detail::level_cell(row.level),
                     detail::pair_cell(row.required_pair()),
                     detail::percent_cell(soundness(row.counts)),
                     detail::pair_cell(row.bloated_pair()),
                     detail::percent_cell(precision(row.counts)),
                     std::to_string(row.counts.unknown_retained)});
  }
  std::array<std::size_t, 7> widths{};
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < cells[r].size(); ++i) {
      std::string cell = cells[r][i];
      cell.resize(widths[i], ' ');
      if (i) line += "  ";
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += "\n";
    if (r == 0) {
      std::string rule;
      for (std::size_t i = 0; i < widths.size(); ++i) {
        if (i) rule += "  ";
        rule += std::string(widths[i], '-');
      }
      out += rule + "\n";
    }
  }
  return out;
}

inline constexpr const char* kCsvHeader =
    "feature,level,tp,required,bloated_removed,bloated,fn,fp,"
    "soundness_pct,precision_pct,unknown_retained";

inline std::string render_report_csv(const std::vector<ReportRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : rows) {
    const Counts& c = row.counts;
    auto s = soundness(c);
    auto p = precision(c);
    out += row.feature + "," + detail::level_cell(row.level) + "," +
           std::to_string(c.tp) + "," + std::to_string(c.required_total()) +
           "," + std::to_string(c.bloated_removed) + "," +
           std::to_string(c.bloated_total()) + "," + std::to_string(c.fn) +
           "," + std::to_string(c.fp) + "," +
           (s ? std::to_string(percent_half_up(*s)) : "") + "," +
           (p ? std::to_string(percent_half_up(*p)) : "") + "," +
           std::to_string(c.unknown_retained) + "\n";
  }
  return out;
}

inline nlohmann::ordered_json report_row_json(const ReportRow& row) {
  const Counts& c = row.counts;
  auto s = soundness(c);
  auto p = precision(c);
  nlohmann::ordered_json obj;
  obj["feature"] = row.feature;
  obj["level"] = detail::level_cell(row.level);
  obj["required_kept"] = c.tp;
  obj["required_total"] = c.required_total();
  obj["bloated_removed"] = c.bloated_removed;
  obj["bloated_total"] = c.bloated_total();
  obj["fn"] = c.fn;
  obj["fp"] = c.fp;
  if (s) obj["soundness_pct"] = percent_half_up(*s);
  else obj["soundness_pct"] = nullptr;
  if (p) obj["precision_pct"] = percent_half_up(*p);
  else obj["precision_pct"] = nullptr;
  obj["unknown_retained"] = c.unknown_retained;
  return obj;
}

inline std::string render_report_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) doc.push_back(report_row_json(row));
  return doc.dump(1) + "\n";
}

inline std::string render_report(const std::vector<ReportRow>& rows,
                                 ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return render_report_text(rows);
    case ReportFormat::Csv: return render_report_csv(rows);
    case ReportFormat::Json: return render_report_json(rows);
  }
  return {};
}

/// Inverse of render_report_json.
inline std::vector<ReportRow> parse_report_json(const std::string& text) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
  if (!doc.is_array())
    throw std::runtime_error("report JSON: expected an array of rows");
  std::vector<ReportRow> rows;
  for (const auto& obj : doc) {
    ReportRow row;
    row.feature = obj.at("feature").get<std::string>();
    row.level = detail::level_from_name(obj.at("level").get<std::string>());
    row.counts.tp = obj.at("required_kept").get<u8>();
    row.counts.fn = obj.at("required_total").get<u8>() - row.counts.tp;
    row.counts.bloated_removed = obj.at("bloated_removed").get<u8>();
    row.counts.fp = obj.at("bloated_total").get<u8>() - row.counts.bloated_removed;
    row.counts.unknown_retained = obj.at("unknown_retained").get<u8>();
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Inverse of render_report_csv; raw counts reconstruct the rows exactly.
inline std::vector<ReportRow> parse_report_csv(const std::string& text) {
  std::vector<ReportRow> rows;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() : eol + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader)
        throw std::runtime_error("unexpected CSV header: " + line);
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 11)
      throw std::runtime_error("malformed CSV row: " + line);
    ReportRow row;
    row.feature = fields[0];
    row.level = detail::level_from_name(fields[1]);
    row.counts.tp = std::stoull(fields[2]);
    u8 required_total = std::stoull(fields[3]);
    row.counts.bloated_removed = std::stoull(fields[4]);
    u8 bloated_total = std::stoull(fields[5]);
    row.counts.fn = std::stoull(fields[6]);
    row.counts.fp = std::stoull(fields[7]);
    row.counts.unknown_retained = std::stoull(fields[10]);
    if (row.counts.tp + row.counts.fn != required_total ||
        row.counts.fp + row.counts.bloated_removed != bloated_total)
      throw std::runtime_error("inconsistent CSV row: " + line);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace deblometer
