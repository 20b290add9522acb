// Copyright 2026 The Pertubox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERTUBOX_SCHEMA_HPP_
#define PERTUBOX_SCHEMA_HPP_

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "pertubox/error.hpp"

namespace pertubox {

enum class ColumnKind { kNumeric, kCategorical, kBoolean };
enum class ColumnRole { kIdentifier, kQuasiIdentifier, kSensitive, kOther };

inline std::string to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kNumeric: return "numeric";
    case ColumnKind::kCategorical: return "categorical";
    case ColumnKind::kBoolean: return "boolean";
  }
  return "numeric";
}

inline std::string to_string(ColumnRole role) {
  switch (role) {
    case ColumnRole::kIdentifier: return "identifier";
    case ColumnRole::kQuasiIdentifier: return "quasi_identifier";
    case ColumnRole::kSensitive: return "sensitive";
    case ColumnRole::kOther: return "other";
  }
  return "other";
}

inline ColumnKind column_kind_from_string(const std::string& s) {
  if (s == "numeric") return ColumnKind::kNumeric;
  if (s == "categorical") return ColumnKind::kCategorical;
  if (s == "boolean") return ColumnKind::kBoolean;
  throw ValidationError("schema: unknown column kind \"" + s + "\"");
}

inline ColumnRole column_role_from_string(const std::string& s) {
  if (s == "identifier") return ColumnRole::kIdentifier;
  if (s == "quasi_identifier") return ColumnRole::kQuasiIdentifier;
  if (s == "sensitive") return ColumnRole::kSensitive;
  if (s == "other") return ColumnRole::kOther;
  throw ValidationError("schema: unknown column role \"" + s + "\"");
}

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::kNumeric;
  ColumnRole role = ColumnRole::kOther;

  bool operator==(const ColumnSpec&) const = default;
};

// Ordered, validated column list. Immutable after construction.
class Schema {
 public:
  explicit Schema(std::vector<ColumnSpec> columns)
      : columns_(std::move(columns)) {
    if (columns_.empty())
      throw ValidationError("schema: needs at least one column");
    std::unordered_set<std::string> seen;
    for (const auto& c : columns_) {
      if (!seen.insert(c.name).second)
        throw ValidationError("schema: duplicate column name \"" + c.name +
                              "\"");
    }
  }

  static Schema from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array())
      throw ValidationError("schema: expected {\"columns\": [...]}");
    std::vector<ColumnSpec> cols;
    for (const auto& c : j["columns"]) {
      ColumnSpec spec;
      spec.name = c.at("name").get<std::string>();
      spec.kind = column_kind_from_string(c.at("kind").get<std::string>());
      spec.role = column_role_from_string(c.at("role").get<std::string>());
      cols.push_back(std::move(spec));
    }
    return Schema(std::move(cols));
  }

  static Schema load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("schema: cannot open " + path.string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("schema: invalid JSON in " + path.string() + ": " +
                            e.what());
    }
    return from_json(j);
  }

  nlohmann::json to_json() const {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : columns_) {
      cols.push_back({{"name", c.name},
                      {"kind", to_string(c.kind)},
                      {"role", to_string(c.role)}});
    }
    return {{"columns", cols}};
  }

  const std::vector<ColumnSpec>& columns() const { return columns_; }
  std::size_t size() const { return columns_.size(); }
  const ColumnSpec& column(std::size_t i) const { return columns_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
      if (columns_[i].name == name) return i;
    return std::nullopt;
  }

  bool operator==(const Schema&) const = default;

 private:
  std::vector<ColumnSpec> columns_;
};

}  // namespace pertubox

#endif  // PERTUBOX_SCHEMA_HPP_
