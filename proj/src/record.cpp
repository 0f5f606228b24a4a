#include "chainfib/record.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace chainfib {

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  return std::nullopt;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ojson OutputRecord::to_json() const {
  ojson j = ojson::object();
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["provenance"] = provenance;
  return j;
}

ojson surface_json(const SurfaceType& s) {
  ojson j = ojson::object();
  j["genus"] = s.genus;
  j["punctures"] = s.punctures;
  j["euler_characteristic"] = s.euler_characteristic();
  j["name"] = s.name();
  return j;
}

ojson stretch_json(const StretchFactor& s) {
  ojson j = ojson::object();
  j["trace_abs"] = s.trace_abs;
  j["value"] = format_real(s.value);
  if (s.has_exact) {
    j["exact_p"] = s.exact_p;
    j["exact_q"] = s.exact_q;
    j["exact_form"] = "(" + std::to_string(s.exact_p) + " + sqrt(" +
                      std::to_string(s.exact_q) + "))/2";
  }
  return j;
}

namespace {

std::string scalar_string(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const ojson& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    std::string joined;
    for (const auto& v : node) {
      if (!joined.empty()) joined += " ";
      joined += scalar_string(v);
    }
    out.emplace_back(prefix, joined);
  } else {
    out.emplace_back(prefix, scalar_string(node));
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// a result of shape {"rows": [...]} renders as one CSV/table row per entry
const ojson* row_array(const ojson& result) {
  if (result.is_object() && result.contains("rows") && result["rows"].is_array())
    return &result["rows"];
  return nullptr;
}

std::string render_csv(const OutputRecord& rec) {
  std::ostringstream out;
  if (const ojson* rows = row_array(rec.result)) {
    std::vector<std::string> header;
    if (!rows->empty())
      for (const auto& [key, value] : rows->front().items()) header.push_back(key);
    for (std::size_t i = 0; i < header.size(); ++i)
      out << (i ? "," : "") << csv_escape(header[i]);
    out << "\n";
    for (const auto& row : *rows) {
      for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << csv_escape(scalar_string(row.at(header[i])));
      out << "\n";
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(rec.result, "", kv);
  for (std::size_t i = 0; i < kv.size(); ++i)
    out << (i ? "," : "") << csv_escape(kv[i].first);
  out << "\n";
  for (std::size_t i = 0; i < kv.size(); ++i)
    out << (i ? "," : "") << csv_escape(kv[i].second);
  out << "\n";
  return out.str();
}

std::string render_table(const OutputRecord& rec) {
  std::ostringstream out;
  out << rec.command << "\n";
  if (const ojson* rows = row_array(rec.result)) {
    std::vector<std::string> header;
    if (!rows->empty())
      for (const auto& [key, value] : rows->front().items()) header.push_back(key);
    std::vector<std::size_t> width;
    for (const auto& h : header) width.push_back(h.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : *rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < header.size(); ++i) {
        line.push_back(scalar_string(row.at(header[i])));
        width[i] = std::max(width[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << (i ? "  " : "") << line[i]
            << std::string(width[i] - line[i].size(), ' ');
      }
      out << "\n";
    };
    emit(header);
    for (const auto& line : cells) emit(line);
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(rec.result, "", kv);
  std::size_t width = 0;
  for (const auto& [key, value] : kv) width = std::max(width, key.size());
  for (const auto& [key, value] : kv)
    out << "  " << key << std::string(width - key.size(), ' ') << "  " << value
        << "\n";
  return out.str();
}

}  // namespace

std::string render(const OutputRecord& rec, Format format) {
  switch (format) {
    case Format::json: return rec.to_json().dump(2) + "\n";
    case Format::csv: return render_csv(rec);
    case Format::table: return render_table(rec);
  }
  return "";
}

}  // namespace chainfib
