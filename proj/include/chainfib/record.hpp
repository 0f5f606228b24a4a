#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainfib/bounds.hpp"

namespace chainfib {

// stable key order for golden-file tests
using ojson = nlohmann::ordered_json;

enum class Format { json, csv, table };

std::optional<Format> format_from_name(std::string_view name);

struct OutputRecord {
  std::string command;
  ojson inputs = ojson::object();
  ojson result = ojson::object();
  std::vector<std::string> provenance;

  ojson to_json() const;
};

// 12 significant digits, exact forms rendered alongside where present.
std::string format_real(double x);

ojson surface_json(const SurfaceType& s);
ojson stretch_json(const StretchFactor& s);

std::string render(const OutputRecord& rec, Format format);

}  // namespace chainfib
