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

#ifndef PERTUBOX_DATASET_HPP_
#define PERTUBOX_DATASET_HPP_

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "pertubox/error.hpp"
#include "pertubox/matrix.hpp"
#include "pertubox/schema.hpp"

namespace pertubox {

// Column-typed table: one numeric block (n_records x numeric columns) plus
// per-column label sequences for categorical and boolean columns. Immutable
// after construction; every transform produces a new Dataset.
class Dataset {
 public:
  Dataset(Schema schema, Matrix numeric_block,
          std::vector<std::vector<std::string>> categorical_block)
      : schema_(std::move(schema)),
        numeric_block_(std::move(numeric_block)),
        categorical_block_(std::move(categorical_block)) {
    std::size_t num_cols = 0, cat_cols = 0;
    block_position_.resize(schema_.size());
    for (std::size_t i = 0; i < schema_.size(); ++i) {
      if (schema_.column(i).kind == ColumnKind::kNumeric)
        block_position_[i] = num_cols++;
      else
        block_position_[i] = cat_cols++;
    }
    if (numeric_block_.cols() != num_cols && !(num_cols == 0 && numeric_block_.empty()))
      throw ValidationError("dataset: numeric block has wrong column count");
    if (categorical_block_.size() != cat_cols)
      throw ValidationError("dataset: categorical block has wrong column count");

    n_records_ = num_cols > 0 ? numeric_block_.rows()
                              : (cat_cols > 0 ? categorical_block_[0].size() : 0);
    if (num_cols > 0 && numeric_block_.rows() != n_records_)
      throw ValidationError("dataset: block row counts differ");
    for (const auto& col : categorical_block_) {
      if (col.size() != n_records_)
        throw ValidationError("dataset: block row counts differ");
    }
    if (!numeric_block_.all_finite())
      throw ValidationError("dataset: numeric values must be finite");
  }

  const Schema& schema() const { return schema_; }
  std::size_t n_records() const { return n_records_; }
  const Matrix& numeric_block() const { return numeric_block_; }
  const std::vector<std::vector<std::string>>& categorical_block() const {
    return categorical_block_;
  }

  bool all_numeric() const {
    return categorical_block_.empty() && numeric_block_.cols() == schema_.size();
  }

  // Position of schema column i inside its block.
  std::size_t block_position(std::size_t schema_index) const {
    return block_position_[schema_index];
  }

  std::vector<double> numeric_column(const std::string& name) const {
    const auto idx = schema_.index_of(name);
    if (!idx) throw ValidationError("dataset: unknown column \"" + name + "\"");
    if (schema_.column(*idx).kind != ColumnKind::kNumeric)
      throw ValidationError("dataset: column \"" + name + "\" is not numeric");
    std::vector<double> out(n_records_);
    const std::size_t j = block_position_[*idx];
    for (std::size_t i = 0; i < n_records_; ++i) out[i] = numeric_block_(i, j);
    return out;
  }

  const std::vector<std::string>& label_column(const std::string& name) const {
    const auto idx = schema_.index_of(name);
    if (!idx) throw ValidationError("dataset: unknown column \"" + name + "\"");
    if (schema_.column(*idx).kind == ColumnKind::kNumeric)
      throw ValidationError("dataset: column \"" + name + "\" is numeric");
    return categorical_block_[block_position_[*idx]];
  }

  std::vector<bool> bool_column(const std::string& name) const {
    const auto idx = schema_.index_of(name);
    if (!idx) throw ValidationError("dataset: unknown column \"" + name + "\"");
    if (schema_.column(*idx).kind != ColumnKind::kBoolean)
      throw ValidationError("dataset: column \"" + name + "\" is not boolean");
    const auto& labels = categorical_block_[block_position_[*idx]];
    std::vector<bool> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == "true" || labels[i] == "1")
        out[i] = true;
      else if (labels[i] == "false" || labels[i] == "0")
        out[i] = false;
      else
        throw ValidationError("dataset: bad boolean value \"" + labels[i] +
                              "\" in column \"" + name + "\"");
    }
    return out;
  }

  // Same schema, new numeric block (shape-compatible).
  Dataset with_numeric_block(Matrix block) const {
    return Dataset(schema_, std::move(block), categorical_block_);
  }

 private:
  Schema schema_;
  Matrix numeric_block_;
  std::vector<std::vector<std::string>> categorical_block_;
  std::vector<std::size_t> block_position_;
  std::size_t n_records_ = 0;
};

namespace csv {

// RFC 4180: comma separator, double-quote quoting, "" escapes a quote.
inline std::vector<std::vector<std::string>> parse(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_started = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_started = true;
        break;
      case '\r':
        break;
      case '\n':
        if (row_started || !field.empty()) {
          row.push_back(std::move(field));
          field.clear();
          rows.push_back(std::move(row));
          row.clear();
          row_started = false;
        }
        break;
      default:
        field += c;
        row_started = true;
        break;
    }
  }
  if (in_quotes) throw ValidationError("csv: unterminated quoted field");
  if (row_started || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string quote(const std::string& field) {
  const bool needs =
      field.find_first_of(",\"\n\r") != std::string::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace csv

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view cell, std::size_t data_row,
                           const std::string& column) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v))
    throw ValidationError("csv: unparseable numeric cell \"" +
                          std::string(cell) + "\" at row " +
                          std::to_string(data_row) + ", column \"" + column +
                          "\"");
  return v;
}

inline Dataset load_csv(const std::filesystem::path& path,
                        const Schema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("csv: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto rows = csv::parse(buffer.str());
  if (rows.empty()) throw ValidationError("csv: empty file " + path.string());

  const auto& header = rows.front();
  if (header.size() != schema.size())
    throw ValidationError("csv: header has " + std::to_string(header.size()) +
                          " columns, schema expects " +
                          std::to_string(schema.size()));
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != schema.column(i).name)
      throw ValidationError("csv: header column \"" + header[i] +
                            "\" does not match schema column \"" +
                            schema.column(i).name + "\"");
  }
  if (rows.size() == 1) throw ValidationError("csv: empty data body");

  const std::size_t n = rows.size() - 1;
  std::size_t num_cols = 0, cat_cols = 0;
  for (const auto& c : schema.columns())
    (c.kind == ColumnKind::kNumeric ? num_cols : cat_cols)++;

  Matrix numeric(n, num_cols);
  std::vector<std::vector<std::string>> categorical(
      cat_cols, std::vector<std::string>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& cells = rows[r + 1];
    if (cells.size() != schema.size())
      throw ValidationError("csv: row " + std::to_string(r + 1) + " has " +
                            std::to_string(cells.size()) +
                            " cells, expected " +
                            std::to_string(schema.size()));
    std::size_t nj = 0, cj = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto& spec = schema.column(c);
      if (spec.kind == ColumnKind::kNumeric) {
        numeric(r, nj++) = parse_double(cells[c], r + 1, spec.name);
      } else {
        if (cells[c].empty())
          throw ValidationError("csv: missing value at row " +
                                std::to_string(r + 1) + ", column \"" +
                                spec.name + "\"");
        if (spec.kind == ColumnKind::kBoolean && cells[c] != "true" &&
            cells[c] != "false" && cells[c] != "1" && cells[c] != "0")
          throw ValidationError("csv: bad boolean cell \"" + cells[c] +
                                "\" at row " + std::to_string(r + 1) +
                                ", column \"" + spec.name + "\"");
        categorical[cj++][r] = cells[c];
      }
    }
  }
  return Dataset(schema, std::move(numeric), std::move(categorical));
}

inline void write_csv(const Dataset& dataset,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("csv: cannot write " + path.string());
  const auto& schema = dataset.schema();
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (i) out << ',';
    out << csv::quote(schema.column(i).name);
  }
  out << '\n';
  for (std::size_t r = 0; r < dataset.n_records(); ++r) {
    for (std::size_t c = 0; c < schema.size(); ++c) {
      if (c) out << ',';
      const std::size_t pos = dataset.block_position(c);
      if (schema.column(c).kind == ColumnKind::kNumeric)
        out << format_double(dataset.numeric_block()(r, pos));
      else
        out << csv::quote(dataset.categorical_block()[pos][r]);
    }
    out << '\n';
  }
  if (!out) throw ValidationError("csv: write failed for " + path.string());
}

}  // namespace pertubox

#endif  // PERTUBOX_DATASET_HPP_
