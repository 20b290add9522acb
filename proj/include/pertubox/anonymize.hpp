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

#ifndef PERTUBOX_ANONYMIZE_HPP_
#define PERTUBOX_ANONYMIZE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pertubox/dataset.hpp"
#include "pertubox/error.hpp"
#include "pertubox/schema.hpp"

namespace pertubox {

// Rooted generalization tree for one categorical column. Leaves are raw
// values; inner nodes are coarser labels.
class Hierarchy {
 public:
  static Hierarchy from_adjacency(
      const std::map<std::string, std::vector<std::string>>& children) {
    Hierarchy h;
    std::set<std::string> child_set;
    for (const auto& [node, kids] : children) {
      for (const auto& kid : kids) {
        if (!child_set.insert(kid).second)
          throw ValidationError("hierarchy: node \"" + kid +
                                "\" has two parents");
        h.parent_[kid] = node;
      }
    }
    for (const auto& [node, kids] : children) {
      if (!child_set.contains(node)) {
        if (!h.root_.empty())
          throw ValidationError("hierarchy: multiple roots (\"" + h.root_ +
                                "\", \"" + node + "\")");
        h.root_ = node;
      }
    }
    if (h.root_.empty())
      throw ValidationError("hierarchy: no root (cycle or empty)");
    // Depth-first walk assigns leaf order and checks connectivity.
    h.assign_depths(children);
    std::size_t reachable = h.depth_.size();
    std::size_t total = child_set.size() + 1;
    if (reachable != total)
      throw ValidationError("hierarchy: disconnected nodes");
    return h;
  }

  // Flat one-level tree over the given values.
  static Hierarchy flat(const std::set<std::string>& values,
                        const std::string& root = "*") {
    std::map<std::string, std::vector<std::string>> adj;
    adj[root] = std::vector<std::string>(values.begin(), values.end());
    return from_adjacency(adj);
  }

  const std::string& root() const { return root_; }

  bool is_leaf(const std::string& label) const {
    return leaf_index_.contains(label);
  }

  bool contains(const std::string& label) const {
    return depth_.contains(label);
  }

  // Position of a leaf in depth-first order; defines the split ordering.
  std::size_t leaf_index(const std::string& leaf) const {
    const auto it = leaf_index_.find(leaf);
    if (it == leaf_index_.end())
      throw ValidationError("hierarchy: \"" + leaf + "\" is not a leaf");
    return it->second;
  }

  std::size_t leaf_count() const { return leaf_index_.size(); }

  std::string lowest_common_ancestor(const std::set<std::string>& labels) const {
    if (labels.empty())
      throw ValidationError("hierarchy: LCA of empty set");
    auto it = labels.begin();
    std::string lca = *it;
    for (++it; it != labels.end(); ++it) {
      std::string a = lca, b = *it;
      while (depth(a) > depth(b)) a = parent_.at(a);
      while (depth(b) > depth(a)) b = parent_.at(b);
      while (a != b) {
        a = parent_.at(a);
        b = parent_.at(b);
      }
      lca = a;
    }
    return lca;
  }

 private:
  void assign_depths(
      const std::map<std::string, std::vector<std::string>>& children) {
    std::vector<std::pair<std::string, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
      auto [node, d] = stack.back();
      stack.pop_back();
      if (depth_.contains(node))
        throw ValidationError("hierarchy: cycle through \"" + node + "\"");
      depth_[node] = d;
      const auto it = children.find(node);
      if (it == children.end() || it->second.empty()) {
        leaf_index_[node] = leaves_.size();
        leaves_.push_back(node);
        continue;
      }
      // Reverse push keeps depth-first order equal to the listed order.
      for (auto kid = it->second.rbegin(); kid != it->second.rend(); ++kid)
        stack.emplace_back(*kid, d + 1);
    }
  }

  std::size_t depth(const std::string& node) const {
    const auto it = depth_.find(node);
    if (it == depth_.end())
      throw ValidationError("hierarchy: unknown label \"" + node + "\"");
    return it->second;
  }

  std::string root_;
  std::unordered_map<std::string, std::string> parent_;
  std::unordered_map<std::string, std::size_t> depth_;
  std::unordered_map<std::string, std::size_t> leaf_index_;
  std::vector<std::string> leaves_;
};

// Column name -> hierarchy. JSON shape:
// {"column": {"node": ["child", ...], ...}, ...}
class HierarchySet {
 public:
  HierarchySet() = default;

  static HierarchySet from_json(const nlohmann::json& j) {
    if (!j.is_object())
      throw ValidationError("hierarchies: expected a JSON object");
    HierarchySet set;
    for (const auto& [column, adj] : j.items()) {
      std::map<std::string, std::vector<std::string>> children;
      if (!adj.is_object())
        throw ValidationError("hierarchies: column \"" + column +
                              "\" must map nodes to child arrays");
      for (const auto& [node, kids] : adj.items()) {
        std::vector<std::string> v;
        for (const auto& kid : kids) v.push_back(kid.get<std::string>());
        children[node] = std::move(v);
      }
      set.by_column_.emplace(column, Hierarchy::from_adjacency(children));
    }
    return set;
  }

  static HierarchySet load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
      throw ValidationError("hierarchies: cannot open " + path.string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("hierarchies: invalid JSON: " +
                            std::string(e.what()));
    }
    return from_json(j);
  }

  const Hierarchy* find(const std::string& column) const {
    const auto it = by_column_.find(column);
    return it == by_column_.end() ? nullptr : &it->second;
  }

  void insert(const std::string& column, Hierarchy h) {
    by_column_.emplace(column, std::move(h));
  }

 private:
  std::map<std::string, Hierarchy> by_column_;
};

// Generalized quasi-identifier cell: a label or a closed numeric interval.
struct GeneralizedCell {
  enum class Type { kLabel, kInterval };
  Type type = Type::kLabel;
  std::string label;
  double lo = 0.0;
  double hi = 0.0;

  static GeneralizedCell make_label(std::string s) {
    GeneralizedCell c;
    c.type = Type::kLabel;
    c.label = std::move(s);
    return c;
  }
  static GeneralizedCell make_interval(double lo, double hi) {
    GeneralizedCell c;
    c.type = Type::kInterval;
    c.lo = lo;
    c.hi = hi;
    return c;
  }

  bool operator==(const GeneralizedCell&) const = default;

  // Degenerate intervals print as the bare number.
  std::string to_string() const {
    if (type == Type::kLabel) return label;
    if (lo == hi) return format_double(lo);
    return "[" + format_double(lo) + "," + format_double(hi) + "]";
  }
};

struct EquivalenceClass {
  std::vector<std::size_t> record_indices;
  std::size_t size() const { return record_indices.size(); }
};

// One retained column of an anonymized table. Quasi-identifier columns hold
// generalized cells; all other columns pass through unchanged.
struct AnonymizedColumn {
  ColumnSpec spec;
  bool generalized = false;
  std::vector<GeneralizedCell> cells;   // when generalized
  std::vector<double> numeric;          // passthrough, numeric kind
  std::vector<std::string> labels;      // passthrough, other kinds
};

class AnonymizedTable {
 public:
  AnonymizedTable(std::vector<AnonymizedColumn> columns,
                  std::vector<EquivalenceClass> classes,
                  std::size_t suppressed_count)
      : columns_(std::move(columns)),
        classes_(std::move(classes)),
        suppressed_count_(suppressed_count) {}

  const std::vector<AnonymizedColumn>& columns() const { return columns_; }
  const std::vector<EquivalenceClass>& equivalence_classes() const {
    return classes_;
  }
  std::size_t suppressed_count() const { return suppressed_count_; }

  std::size_t n_rows() const {
    if (columns_.empty()) return 0;
    const auto& c = columns_.front();
    if (c.generalized) return c.cells.size();
    return c.spec.kind == ColumnKind::kNumeric ? c.numeric.size()
                                               : c.labels.size();
  }

  const AnonymizedColumn& column(const std::string& name) const {
    for (const auto& c : columns_)
      if (c.spec.name == name) return c;
    throw ValidationError("anonymized table: unknown column \"" + name + "\"");
  }

  // Flattens generalized cells to labels so the table can be written as CSV.
  Dataset to_dataset() const {
    std::vector<ColumnSpec> specs;
    std::size_t num_cols = 0;
    for (const auto& c : columns_) {
      ColumnSpec s = c.spec;
      if (c.generalized) s.kind = ColumnKind::kCategorical;
      if (s.kind == ColumnKind::kNumeric) ++num_cols;
      specs.push_back(std::move(s));
    }
    const std::size_t n = n_rows();
    Matrix numeric(n, num_cols);
    std::vector<std::vector<std::string>> categorical;
    std::size_t nj = 0;
    for (const auto& c : columns_) {
      if (c.generalized) {
        std::vector<std::string> out(n);
        for (std::size_t r = 0; r < n; ++r) out[r] = c.cells[r].to_string();
        categorical.push_back(std::move(out));
      } else if (c.spec.kind == ColumnKind::kNumeric) {
        for (std::size_t r = 0; r < n; ++r) numeric(r, nj) = c.numeric[r];
        ++nj;
      } else {
        categorical.push_back(c.labels);
      }
    }
    return Dataset(Schema(std::move(specs)), std::move(numeric),
                   std::move(categorical));
  }

 private:
  std::vector<AnonymizedColumn> columns_;
  std::vector<EquivalenceClass> classes_;
  std::size_t suppressed_count_ = 0;
};

namespace detail {

struct QiColumn {
  std::size_t schema_index;
  bool numeric;
  std::vector<double> ordinal;       // value, or leaf index for categorical
  const Hierarchy* hierarchy;        // categorical only
  const std::vector<std::string>* raw_labels;  // categorical only
  double global_span;                // (max - min) or (distinct - 1)
};

inline double group_span(const QiColumn& col,
                         const std::vector<std::size_t>& rows) {
  if (col.global_span <= 0.0) return 0.0;
  if (col.numeric) {
    double lo = col.ordinal[rows[0]], hi = lo;
    for (std::size_t r : rows) {
      lo = std::min(lo, col.ordinal[r]);
      hi = std::max(hi, col.ordinal[r]);
    }
    return (hi - lo) / col.global_span;
  }
  std::set<double> distinct;
  for (std::size_t r : rows) distinct.insert(col.ordinal[r]);
  return static_cast<double>(distinct.size() - 1) / col.global_span;
}

}  // namespace detail

// Greedy top-down recursive partitioning: split the group on the widest
// normalized-span quasi-identifier at the lower median whenever both halves
// keep at least k records. Numeric cells generalize to the group [min, max]
// interval, categorical cells to the lowest common hierarchy ancestor.
// Identifier columns are dropped from the output.
inline AnonymizedTable k_anonymize(const Dataset& dataset, std::size_t k,
                                   const HierarchySet& hierarchies,
                                   double max_suppression_fraction) {
  const std::size_t n = dataset.n_records();
  if (k < 1) throw ValidationError("k_anonymize: k must be at least 1");
  if (k > n)
    throw ValidationError("k_anonymize: infeasible, k exceeds record count");
  if (!(max_suppression_fraction >= 0.0 && max_suppression_fraction <= 1.0))
    throw ValidationError(
        "k_anonymize: suppression fraction must be in [0,1]");

  const Schema& schema = dataset.schema();
  std::vector<detail::QiColumn> qi;
  std::vector<Hierarchy> implicit;  // owns flat fallbacks
  implicit.reserve(schema.size());
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const auto& spec = schema.column(i);
    if (spec.role != ColumnRole::kQuasiIdentifier) continue;
    detail::QiColumn col;
    col.schema_index = i;
    col.numeric = spec.kind == ColumnKind::kNumeric;
    col.hierarchy = nullptr;
    col.raw_labels = nullptr;
    if (col.numeric) {
      const auto& block = dataset.numeric_block();
      const std::size_t pos = dataset.block_position(i);
      col.ordinal.resize(n);
      for (std::size_t r = 0; r < n; ++r) col.ordinal[r] = block(r, pos);
      const auto [lo, hi] =
          std::minmax_element(col.ordinal.begin(), col.ordinal.end());
      col.global_span = *hi - *lo;
    } else {
      const auto& labels =
          dataset.categorical_block()[dataset.block_position(i)];
      col.raw_labels = &labels;
      col.hierarchy = hierarchies.find(spec.name);
      if (col.hierarchy == nullptr) {
        implicit.push_back(Hierarchy::flat(
            std::set<std::string>(labels.begin(), labels.end())));
        col.hierarchy = &implicit.back();
      }
      col.ordinal.resize(n);
      std::set<std::string> distinct;
      for (std::size_t r = 0; r < n; ++r) {
        if (!col.hierarchy->is_leaf(labels[r]))
          throw ValidationError("k_anonymize: value \"" + labels[r] +
                                "\" in column \"" + spec.name +
                                "\" is not a hierarchy leaf");
        col.ordinal[r] =
            static_cast<double>(col.hierarchy->leaf_index(labels[r]));
        distinct.insert(labels[r]);
      }
      col.global_span = static_cast<double>(distinct.size()) - 1.0;
    }
    qi.push_back(std::move(col));
  }
  if (qi.empty())
    throw ValidationError("k_anonymize: no quasi-identifier columns");

  // Recursive median splits; leaves become groups.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::vector<std::size_t>> stack;
  {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    stack.push_back(std::move(all));
  }
  while (!stack.empty()) {
    std::vector<std::size_t> rows = std::move(stack.back());
    stack.pop_back();

    std::vector<std::pair<double, std::size_t>> candidates;  // (-span, qi idx)
    for (std::size_t c = 0; c < qi.size(); ++c) {
      const double span = detail::group_span(qi[c], rows);
      if (span > 0.0) candidates.emplace_back(-span, c);
    }
    std::sort(candidates.begin(), candidates.end());

    bool split_done = false;
    for (const auto& [neg_span, c] : candidates) {
      const auto& col = qi[c];
      std::vector<std::size_t> sorted = rows;
      std::sort(sorted.begin(), sorted.end(),
                [&](std::size_t a, std::size_t b) {
                  if (col.ordinal[a] != col.ordinal[b])
                    return col.ordinal[a] < col.ordinal[b];
                  return a < b;
                });
      const double median = col.ordinal[sorted[(sorted.size() - 1) / 2]];
      std::vector<std::size_t> left, right;
      for (std::size_t r : rows)
        (col.ordinal[r] <= median ? left : right).push_back(r);
      if (left.size() >= k && right.size() >= k) {
        stack.push_back(std::move(left));
        stack.push_back(std::move(right));
        split_done = true;
        break;
      }
    }
    if (!split_done) groups.push_back(std::move(rows));
  }
  // Class ids follow the first record of each group.
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  // Generalize each group; suppress any group short of k (cannot occur with
  // median splits from a root of size >= k, but enforces the budget contract).
  std::vector<bool> suppressed(n, false);
  std::size_t suppressed_count = 0;
  for (const auto& g : groups) {
    if (g.size() < k) {
      for (std::size_t r : g) suppressed[r] = true;
      suppressed_count += g.size();
    }
  }
  if (static_cast<double>(suppressed_count) >
      max_suppression_fraction * static_cast<double>(n))
    throw ValidationError(
        "k_anonymize: infeasible within the suppression budget");

  std::vector<std::size_t> kept_index(n, SIZE_MAX);
  std::size_t kept = 0;
  for (std::size_t r = 0; r < n; ++r)
    if (!suppressed[r]) kept_index[r] = kept++;

  // Per-group generalized cells.
  std::vector<std::vector<GeneralizedCell>> qi_cells(
      qi.size(), std::vector<GeneralizedCell>(kept));
  for (const auto& g : groups) {
    if (suppressed[g.front()]) continue;
    for (std::size_t c = 0; c < qi.size(); ++c) {
      GeneralizedCell cell;
      if (qi[c].numeric) {
        double lo = qi[c].ordinal[g[0]], hi = lo;
        for (std::size_t r : g) {
          lo = std::min(lo, qi[c].ordinal[r]);
          hi = std::max(hi, qi[c].ordinal[r]);
        }
        cell = GeneralizedCell::make_interval(lo, hi);
      } else {
        std::set<std::string> values;
        for (std::size_t r : g) values.insert((*qi[c].raw_labels)[r]);
        cell = GeneralizedCell::make_label(
            qi[c].hierarchy->lowest_common_ancestor(values));
      }
      for (std::size_t r : g) qi_cells[c][kept_index[r]] = cell;
    }
  }

  // Equivalence classes: merge groups with identical generalized tuples.
  std::map<std::string, std::size_t> class_of_tuple;
  std::vector<EquivalenceClass> classes;
  for (const auto& g : groups) {
    if (suppressed[g.front()]) continue;
    std::string key;
    for (std::size_t c = 0; c < qi.size(); ++c) {
      key += qi_cells[c][kept_index[g.front()]].to_string();
      key += '\x1f';
    }
    const auto [it, inserted] = class_of_tuple.emplace(key, classes.size());
    if (inserted) classes.emplace_back();
    auto& members = classes[it->second].record_indices;
    for (std::size_t r : g) members.push_back(kept_index[r]);
  }
  for (auto& cls : classes)
    std::sort(cls.record_indices.begin(), cls.record_indices.end());

  // Assemble output columns in schema order, dropping identifiers.
  std::vector<AnonymizedColumn> out_columns;
  std::size_t qi_pos = 0;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const auto& spec = schema.column(i);
    if (spec.role == ColumnRole::kIdentifier) continue;
    AnonymizedColumn col;
    col.spec = spec;
    if (spec.role == ColumnRole::kQuasiIdentifier) {
      col.generalized = true;
      col.cells = std::move(qi_cells[qi_pos++]);
    } else if (spec.kind == ColumnKind::kNumeric) {
      const auto& block = dataset.numeric_block();
      const std::size_t pos = dataset.block_position(i);
      col.numeric.reserve(kept);
      for (std::size_t r = 0; r < n; ++r)
        if (!suppressed[r]) col.numeric.push_back(block(r, pos));
    } else {
      const auto& labels =
          dataset.categorical_block()[dataset.block_position(i)];
      col.labels.reserve(kept);
      for (std::size_t r = 0; r < n; ++r)
        if (!suppressed[r]) col.labels.push_back(labels[r]);
    }
    out_columns.push_back(std::move(col));
  }

  return AnonymizedTable(std::move(out_columns), std::move(classes),
                         suppressed_count);
}

// Rebuilds the class structure of an already-generalized table (e.g. one
// loaded back from CSV): rows with identical quasi-identifier tuples form
// one class.
inline AnonymizedTable anonymized_view(const Dataset& dataset) {
  const Schema& schema = dataset.schema();
  const std::size_t n = dataset.n_records();
  std::vector<AnonymizedColumn> columns;
  std::vector<std::size_t> qi_indices;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const auto& spec = schema.column(i);
    if (spec.role == ColumnRole::kIdentifier) continue;
    AnonymizedColumn col;
    col.spec = spec;
    const std::size_t pos = dataset.block_position(i);
    if (spec.role == ColumnRole::kQuasiIdentifier) {
      col.generalized = true;
      col.cells.resize(n);
      if (spec.kind == ColumnKind::kNumeric) {
        for (std::size_t r = 0; r < n; ++r)
          col.cells[r] = GeneralizedCell::make_interval(
              dataset.numeric_block()(r, pos), dataset.numeric_block()(r, pos));
      } else {
        for (std::size_t r = 0; r < n; ++r)
          col.cells[r] = GeneralizedCell::make_label(
              dataset.categorical_block()[pos][r]);
      }
      qi_indices.push_back(columns.size());
    } else if (spec.kind == ColumnKind::kNumeric) {
      col.numeric.resize(n);
      for (std::size_t r = 0; r < n; ++r)
        col.numeric[r] = dataset.numeric_block()(r, pos);
    } else {
      col.labels = dataset.categorical_block()[pos];
    }
    columns.push_back(std::move(col));
  }
  if (qi_indices.empty())
    throw ValidationError("anonymized_view: no quasi-identifier columns");

  std::map<std::string, std::size_t> class_of_tuple;
  std::vector<EquivalenceClass> classes;
  for (std::size_t r = 0; r < n; ++r) {
    std::string key;
    for (std::size_t c : qi_indices) {
      key += columns[c].cells[r].to_string();
      key += '\x1f';
    }
    const auto [it, inserted] = class_of_tuple.emplace(key, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].record_indices.push_back(r);
  }
  return AnonymizedTable(std::move(columns), std::move(classes), 0);
}

struct KAnonymityVerdict {
  bool holds = true;
  struct Violation {
    std::size_t class_index;
    std::size_t size;
  };
  std::vector<Violation> violations;
};

inline KAnonymityVerdict check_k_anonymity(const AnonymizedTable& table,
                                           std::size_t k) {
  KAnonymityVerdict verdict;
  const auto& classes = table.equivalence_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].size() < k) {
      verdict.holds = false;
      verdict.violations.push_back({i, classes[i].size()});
    }
  }
  return verdict;
}

struct ClassVerdict {
  std::size_t class_index = 0;
  bool holds = true;
  double value = 0.0;  // distinct-value count or distribution distance
};

struct PerClassVerdict {
  bool holds = true;
  std::vector<ClassVerdict> classes;
};

namespace detail {

inline std::vector<std::string> sensitive_labels(const AnonymizedTable& table,
                                                 const std::string& column) {
  const auto& col = table.column(column);
  if (col.generalized)
    throw ValidationError(
        "sensitive column \"" + column + "\" is a quasi-identifier");
  if (col.spec.kind == ColumnKind::kNumeric) {
    std::vector<std::string> out(col.numeric.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = format_double(col.numeric[i]);
    return out;
  }
  return col.labels;
}

// 1-D earth mover's distance between two empirical distributions,
// computed as the integral of |F1 - F2| over the union grid.
inline double earth_movers_1d(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<double> grid;
  grid.reserve(a.size() + b.size());
  grid.insert(grid.end(), a.begin(), a.end());
  grid.insert(grid.end(), b.begin(), b.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  double emd = 0.0;
  std::size_t ia = 0, ib = 0;
  for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
    while (ia < a.size() && a[ia] <= grid[g]) ++ia;
    while (ib < b.size() && b[ib] <= grid[g]) ++ib;
    const double fa = static_cast<double>(ia) / static_cast<double>(a.size());
    const double fb = static_cast<double>(ib) / static_cast<double>(b.size());
    emd += std::abs(fa - fb) * (grid[g + 1] - grid[g]);
  }
  return emd;
}

}  // namespace detail

// Distinct-l diversity: every class holds at least l distinct sensitive
// values.
inline PerClassVerdict check_l_diversity(const AnonymizedTable& table,
                                         const std::string& sensitive_column,
                                         std::size_t l) {
  if (l < 1) throw ValidationError("l_diversity: l must be at least 1");
  const auto labels = detail::sensitive_labels(table, sensitive_column);
  PerClassVerdict verdict;
  const auto& classes = table.equivalence_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::set<std::string> distinct;
    for (std::size_t r : classes[i].record_indices) distinct.insert(labels[r]);
    ClassVerdict cv;
    cv.class_index = i;
    cv.value = static_cast<double>(distinct.size());
    cv.holds = distinct.size() >= l;
    verdict.holds = verdict.holds && cv.holds;
    verdict.classes.push_back(cv);
  }
  return verdict;
}

// t-closeness: per-class distance between the class distribution of the
// sensitive attribute and the whole-table distribution. Total variation for
// categorical values; range-normalized 1-D earth mover's distance for
// numeric values (zero-range columns have distance 0).
inline PerClassVerdict check_t_closeness(const AnonymizedTable& table,
                                         const std::string& sensitive_column,
                                         double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw ValidationError("t_closeness: t must be in [0,1]");
  const auto& col = table.column(sensitive_column);
  const auto& classes = table.equivalence_classes();
  PerClassVerdict verdict;

  if (col.spec.kind == ColumnKind::kNumeric && !col.generalized) {
    const auto& values = col.numeric;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double range = *hi - *lo;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ClassVerdict cv;
      cv.class_index = i;
      if (range > 0.0) {
        std::vector<double> class_values;
        for (std::size_t r : classes[i].record_indices)
          class_values.push_back(values[r]);
        cv.value =
            detail::earth_movers_1d(std::move(class_values), values) / range;
      }
      cv.holds = cv.value <= t;
      verdict.holds = verdict.holds && cv.holds;
      verdict.classes.push_back(cv);
    }
    return verdict;
  }

  const auto labels = detail::sensitive_labels(table, sensitive_column);
  std::map<std::string, double> global;
  for (const auto& v : labels) global[v] += 1.0;
  for (auto& [_, count] : global)
    count /= static_cast<double>(labels.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::map<std::string, double> local;
    for (std::size_t r : classes[i].record_indices) local[labels[r]] += 1.0;
    for (auto& [_, count] : local)
      count /= static_cast<double>(classes[i].size());
    double tv = 0.0;
    for (const auto& [value, p] : global) {
      const auto it = local.find(value);
      tv += std::abs((it == local.end() ? 0.0 : it->second) - p);
    }
    ClassVerdict cv;
    cv.class_index = i;
    cv.value = 0.5 * tv;
    cv.holds = cv.value <= t;
    verdict.holds = verdict.holds && cv.holds;
    verdict.classes.push_back(cv);
  }
  return verdict;
}

}  // namespace pertubox

#endif  // PERTUBOX_ANONYMIZE_HPP_
