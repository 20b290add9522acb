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

#ifndef PERTUBOX_EVALUATE_HPP_
#define PERTUBOX_EVALUATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pertubox/anonymize.hpp"
#include "pertubox/dataset.hpp"
#include "pertubox/error.hpp"
#include "pertubox/linalg.hpp"
#include "pertubox/matrix.hpp"
#include "pertubox/noise.hpp"
#include "pertubox/rng.hpp"
#include "pertubox/value_perturb.hpp"

namespace pertubox {

inline const std::vector<std::string>& technique_ids() {
  static const std::vector<std::string> ids{
      "k_anonymity",       "l_diversity",        "t_closeness",
      "noise_addition",    "randomized_response", "condensation",
      "random_rotation",   "geometric_perturbation",
      "random_projection", "nmf_distortion",     "svd_distortion"};
  return ids;
}

struct PropertyVerdict {
  std::string property;
  bool pass = false;
  double value = 0.0;
};

// Quantitative realization of the privacy-loss / information-loss criteria
// for an (original, modified) pair. A metric is absent when the shapes make
// it undefined (projection changes dimensions, anonymization changes kinds).
struct EvaluationReport {
  bool shapes_comparable = false;

  // privacy loss: how far the modified values moved from the originals
  std::optional<double> value_difference;      // ||X - Xh||_F / ||X||_F
  std::optional<double> rank_position_change;  // mean rank shift / (n-1)
  std::optional<double> attribute_rank_change; // fraction of variance ranks

  // information loss: how much task-relevant structure survived
  std::optional<double> covariance_error;      // relative Frobenius
  std::optional<double> distance_distortion;   // mean relative pair change
  std::optional<double> per_column_ks;         // max two-sample KS statistic

  std::vector<PropertyVerdict> preserved_property_verdicts;

  nlohmann::json to_json() const {
    const auto opt = [](const std::optional<double>& v) {
      return v ? nlohmann::json(*v) : nlohmann::json();
    };
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& pv : preserved_property_verdicts)
      verdicts.push_back({{"property", pv.property},
                          {"pass", pv.pass},
                          {"value", pv.value}});
    return {{"shapes_comparable", shapes_comparable},
            {"privacy_loss",
             {{"value_difference", opt(value_difference)},
              {"rank_position_change", opt(rank_position_change)},
              {"attribute_rank_change", opt(attribute_rank_change)}}},
            {"information_loss",
             {{"covariance_error", opt(covariance_error)},
              {"distance_distortion", opt(distance_distortion)},
              {"per_column_ks", opt(per_column_ks)}}},
            {"preserved_property_verdicts", verdicts}};
  }
};

struct EvaluateOptions {
  std::uint64_t seed = 0;
  std::size_t max_pairs = 500;
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::optional<double> t;
  std::optional<std::string> sensitive_column;
};

namespace detail {

// Midranks (ties share the average rank), zero-based.
inline std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j);
    for (std::size_t r = i; r <= j; ++r) ranks[order[r]] = avg;
    i = j + 1;
  }
  return ranks;
}

inline double two_sample_ks(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double ks = 0.0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    const double fa = static_cast<double>(ia) / static_cast<double>(a.size());
    const double fb = static_cast<double>(ib) / static_cast<double>(b.size());
    ks = std::max(ks, std::abs(fa - fb));
  }
  return ks;
}

inline std::vector<double> column_of(const Matrix& m, std::size_t j) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> sampled_pairs(
    std::size_t n, std::size_t max_pairs, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Rng rng(seed, "evaluate/pairs");
  shuffle(pairs, rng);
  if (pairs.size() > max_pairs) pairs.resize(max_pairs);
  return pairs;
}

inline double record_distance(const Matrix& m, std::size_t p, std::size_t q) {
  double s = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double diff = m(p, j) - m(q, j);
    s += diff * diff;
  }
  return std::sqrt(s);
}

inline std::vector<std::size_t> variance_ranks(const Matrix& m) {
  const std::size_t d = m.cols();
  std::vector<double> var(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) mean += m(i, j);
    mean /= static_cast<double>(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      var[j] += (m(i, j) - mean) * (m(i, j) - mean);
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return var[a] > var[b]; });
  std::vector<std::size_t> rank(d);
  for (std::size_t r = 0; r < d; ++r) rank[order[r]] = r;
  return rank;
}

inline void anonymization_verdicts(const Dataset& modified,
                                   const EvaluateOptions& options,
                                   std::vector<PropertyVerdict>& out) {
  const AnonymizedTable view = anonymized_view(modified);
  if (options.k) {
    const auto verdict = check_k_anonymity(view, *options.k);
    std::size_t min_size = modified.n_records();
    for (const auto& cls : view.equivalence_classes())
      min_size = std::min(min_size, cls.size());
    out.push_back({"k_anonymity", verdict.holds,
                   static_cast<double>(min_size)});
  }
  if (options.l && options.sensitive_column) {
    const auto verdict =
        check_l_diversity(view, *options.sensitive_column, *options.l);
    double min_distinct = 0.0;
    for (const auto& cv : verdict.classes)
      min_distinct = min_distinct == 0.0 ? cv.value
                                         : std::min(min_distinct, cv.value);
    out.push_back({"l_diversity", verdict.holds, min_distinct});
  }
  if (options.t && options.sensitive_column) {
    const auto verdict =
        check_t_closeness(view, *options.sensitive_column, *options.t);
    double max_distance = 0.0;
    for (const auto& cv : verdict.classes)
      max_distance = std::max(max_distance, cv.value);
    out.push_back({"t_closeness", verdict.holds, max_distance});
  }
}

inline void noise_reconstruction_verdict(const Matrix& x, const Matrix& xh,
                                         std::vector<PropertyVerdict>& out) {
  // Per column: estimate the noise from the observed differences, run the
  // density reconstruction on the modified column, and compare to the
  // original column's histogram on the same grid.
  double worst = 0.0;
  bool pass = true;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    std::vector<double> diff(x.rows()), modified(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      diff[i] = xh(i, j) - x(i, j);
      modified[i] = xh(i, j);
    }
    double mean = 0.0;
    for (double v : diff) mean += v;
    mean /= static_cast<double>(diff.size());
    double var = 0.0;
    for (double v : diff) var += (v - mean) * (v - mean);
    var /= static_cast<double>(diff.size());
    const double scale = std::max(max_abs(x), 1.0);
    if (std::sqrt(var) <= 1e-9 * scale || x.rows() < 10) continue;

    const auto est = reconstruct_distribution(
        modified, NoiseSpec::gaussian(std::sqrt(var)), 50);
    std::vector<double> hist(est.bins(), 0.0);
    std::size_t inside = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const double v = x(i, j);
      if (v < est.lo() || v > est.hi()) continue;
      auto b = static_cast<std::size_t>((v - est.lo()) / est.bin_width());
      b = std::min(b, est.bins() - 1);
      hist[b] += 1.0;
      ++inside;
    }
    if (inside == 0) continue;
    for (auto& v : hist) v /= static_cast<double>(inside);
    double l1 = 0.0;
    for (std::size_t b = 0; b < est.bins(); ++b)
      l1 += std::abs(est.probabilities[b] - hist[b]);
    worst = std::max(worst, l1);
    pass = pass && l1 < 0.5;
  }
  out.push_back({"distribution_reconstruction", pass, worst});
}

inline void svd_contract_verdict(const Matrix& x, const Matrix& xh,
                                 std::vector<PropertyVerdict>& out) {
  const auto orig = svd(x);
  const auto mod = svd(xh);
  const double top = mod.singular_values.empty() ? 0.0
                                                 : mod.singular_values.front();
  std::size_t effective_rank = 0;
  for (double s : mod.singular_values)
    if (s > 1e-8 * std::max(top, 1e-300)) ++effective_rank;
  double tail = 0.0;
  for (std::size_t i = effective_rank; i < orig.singular_values.size(); ++i)
    tail += orig.singular_values[i] * orig.singular_values[i];
  const double resid2 =
      std::pow(frobenius_norm(subtract(x, xh)), 2);
  const double scale = std::pow(frobenius_norm(x), 2);
  const double gap = std::abs(resid2 - tail);
  out.push_back({"rank_k_truncation",
                 gap <= 1e-6 * std::max(scale, 1e-300), gap});
}

}  // namespace detail

// Computes the metric set on the numeric blocks of a dataset pair and runs
// the technique-specific preserved-property checks. Shape-dependent metrics
// are left unset (rather than computed) when the pair is not comparable.
inline EvaluationReport evaluate_pair(const Dataset& original,
                                      const Dataset& modified,
                                      const std::string& technique,
                                      const EvaluateOptions& options = {}) {
  const auto& ids = technique_ids();
  if (std::find(ids.begin(), ids.end(), technique) == ids.end())
    throw ValidationError("evaluate: unknown technique \"" + technique + "\"");

  const Matrix& x = original.numeric_block();
  const Matrix& xh = modified.numeric_block();
  const std::size_t n = x.rows();
  const bool same_records = n == xh.rows() && n > 0;
  const bool same_columns = x.cols() == xh.cols() && x.cols() > 0;

  EvaluationReport report;
  report.shapes_comparable = same_records && same_columns;

  if (report.shapes_comparable) {
    const double denom = frobenius_norm(x);
    const double numer = frobenius_norm(subtract(x, xh));
    report.value_difference = denom > 0.0 ? numer / denom : numer;

    double rank_shift = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const auto ro = detail::midranks(detail::column_of(x, j));
      const auto rm = detail::midranks(detail::column_of(xh, j));
      double col_shift = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        col_shift += std::abs(ro[i] - rm[i]);
      rank_shift += n > 1 ? col_shift / static_cast<double>(n) /
                                static_cast<double>(n - 1)
                          : 0.0;
    }
    report.rank_position_change = rank_shift / static_cast<double>(x.cols());
  }

  if (same_columns && x.rows() > 0 && xh.rows() > 0) {
    const auto ro = detail::variance_ranks(x);
    const auto rm = detail::variance_ranks(xh);
    double changed = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j)
      changed += ro[j] != rm[j] ? 1.0 : 0.0;
    report.attribute_rank_change = changed / static_cast<double>(x.cols());

    double ks = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j)
      ks = std::max(ks, detail::two_sample_ks(detail::column_of(x, j),
                                              detail::column_of(xh, j)));
    report.per_column_ks = ks;

    if (x.rows() >= 2 && xh.rows() >= 2) {
      const Matrix co = covariance(transpose(x));
      const Matrix cm = covariance(transpose(xh));
      const double denom = frobenius_norm(co);
      const double numer = frobenius_norm(subtract(co, cm));
      report.covariance_error = denom > 0.0 ? numer / denom : numer;
    }
  }

  if (same_records && n >= 2 && x.cols() > 0 && xh.cols() > 0) {
    const auto pairs = detail::sampled_pairs(n, options.max_pairs, options.seed);
    double total = 0.0;
    std::size_t counted = 0;
    for (const auto& [p, q] : pairs) {
      const double orig = detail::record_distance(x, p, q);
      if (orig == 0.0) continue;
      const double mod = detail::record_distance(xh, p, q);
      total += std::abs(mod - orig) / orig;
      ++counted;
    }
    report.distance_distortion =
        counted > 0 ? total / static_cast<double>(counted) : 0.0;
  }

  // Technique-specific preserved-property checks.
  auto& verdicts = report.preserved_property_verdicts;
  if (technique == "k_anonymity" || technique == "l_diversity" ||
      technique == "t_closeness") {
    detail::anonymization_verdicts(modified, options, verdicts);
  } else if (technique == "noise_addition") {
    if (report.shapes_comparable)
      detail::noise_reconstruction_verdict(x, xh, verdicts);
  } else if (technique == "condensation") {
    if (report.shapes_comparable && report.covariance_error) {
      double mean_gap = 0.0;
      for (std::size_t j = 0; j < x.cols(); ++j) {
        double mo = 0.0, mm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          mo += x(i, j);
          mm += xh(i, j);
        }
        mean_gap = std::max(mean_gap,
                            std::abs(mo - mm) / static_cast<double>(n));
      }
      const bool pass =
          *report.covariance_error <= 1e-6 &&
          mean_gap <= 1e-7 * std::max(max_abs(x), 1.0);
      verdicts.push_back(
          {"covariance_structure", pass, *report.covariance_error});
    }
  } else if (technique == "random_rotation" ||
             technique == "geometric_perturbation") {
    if (report.distance_distortion)
      verdicts.push_back({"isometry", *report.distance_distortion <= 1e-9,
                          *report.distance_distortion});
  } else if (technique == "svd_distortion") {
    if (report.shapes_comparable)
      detail::svd_contract_verdict(x, xh, verdicts);
  } else if (technique == "nmf_distortion") {
    if (xh.cols() > 0) {
      double min_entry = 0.0;
      for (double v : xh.values()) min_entry = std::min(min_entry, v);
      verdicts.push_back(
          {"nonnegative_output", min_entry >= -1e-12, min_entry});
    }
  }
  return report;
}

// --- technique registry ------------------------------------------------------

struct TechniqueRegistryEntry {
  std::string id;
  std::string privacy_loss_label;
  std::string information_loss_label;
  std::string modifies_dm_algorithms;  // "yes" / "no" / "unspecified"
  std::vector<std::string> dm_tasks;   // subset of association/classification/clustering
  std::string data_dimension;          // "single" / "multi" / "unspecified"
  std::string preserved_property;
  std::string data_type;               // "numerical" / "categorical" / "unspecified"
  std::string indistinguishability_level;

  nlohmann::json to_json() const {
    return {{"technique", id},
            {"privacy_loss", privacy_loss_label},
            {"information_loss", information_loss_label},
            {"modifies_dm_algorithms", modifies_dm_algorithms},
            {"dm_tasks", dm_tasks},
            {"data_dimension", data_dimension},
            {"preserved_property", preserved_property},
            {"data_type", data_type},
            {"indistinguishability_level", indistinguishability_level}};
  }
};

// Assessment rows for every technique; cells without a stated value are
// "unspecified" rather than guessed.
inline const std::vector<TechniqueRegistryEntry>& technique_registry() {
  static const std::vector<TechniqueRegistryEntry> registry = [] {
    const std::string u = "unspecified";
    std::vector<TechniqueRegistryEntry> r;
    r.push_back({"k_anonymity", "Average", "Low", "no", {}, "multi", u, u,
                 "k"});
    r.push_back({"l_diversity", u, u, u, {}, u, u, u, u});
    r.push_back({"t_closeness", u, u, u, {}, u, u, u, u});
    r.push_back({"noise_addition", "Average", "Low", "yes", {}, "single",
                 "Values distribution", u, u});
    r.push_back({"randomized_response", "Average", "Low", "yes",
                 {"association", "classification"}, "single",
                 "Values distribution", "Categorical", u});
    r.push_back({"condensation", "Low", "Very Low", "no", {"classification"},
                 "multi", "Covariance structure", "numerical", "k"});
    r.push_back({"random_rotation", "Low", "Very Low", "no",
                 {"classification"}, "multi", "Geometrical characteristic",
                 "numerical", u});
    r.push_back({"geometric_perturbation", "Very Low", "Very Low", "no",
                 {"classification"}, "multi", "Geometrical characteristic",
                 "numerical", u});
    r.push_back({"random_projection", "Very Low", "Very Low", "no",
                 {"classification"}, "multi", "Corelation between dimension",
                 "numerical", u});
    r.push_back({"nmf_distortion", "Very Low", "Very Low", "no",
                 {"classification", "clustering"}, "multi",
                 "Corelation between dimension", "numerical", u});
    r.push_back({"svd_distortion", u, u, u, {"classification"}, "multi", u,
                 u, u});
    // Registry completeness: one entry per implemented technique.
    const auto& ids = technique_ids();
    if (r.size() != ids.size())
      throw std::logic_error("registry/technique id mismatch");
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (r[i].id != ids[i])
        throw std::logic_error("registry order mismatch at " + ids[i]);
    return r;
  }();
  return registry;
}

inline nlohmann::json registry_to_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& entry : technique_registry()) out.push_back(entry.to_json());
  return out;
}

}  // namespace pertubox

#endif  // PERTUBOX_EVALUATE_HPP_
