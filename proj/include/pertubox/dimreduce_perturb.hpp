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

#ifndef PERTUBOX_DIMREDUCE_PERTURB_HPP_
#define PERTUBOX_DIMREDUCE_PERTURB_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pertubox/dataset.hpp"
#include "pertubox/error.hpp"
#include "pertubox/json_util.hpp"
#include "pertubox/linalg.hpp"
#include "pertubox/matrix.hpp"
#include "pertubox/multidim_perturb.hpp"
#include "pertubox/rng.hpp"

namespace pertubox {

enum class ProjectionAxis { kColumnWise, kRowWise };

struct ProjectionSpec {
  std::size_t target_dim = 1;  // k
  ProjectionAxis axis = ProjectionAxis::kColumnWise;
  double entry_stddev = 1.0;   // sigma_r of the projection entries
};

struct ProjectionResult {
  Dataset dataset;
  Matrix projection;  // the secret random matrix R (or R')
};

// Column-wise: G(X) = X R / (sqrt(k) sigma_r) with R d x k, k < d; each
// record keeps its row but lives in k dimensions. Row-wise: G(X) =
// R' X / (sqrt(k) sigma_r) with R' k x n, k < n; the record set itself is
// compressed. Entries of R are i.i.d. N(0, sigma_r^2).
inline ProjectionResult random_project(const Dataset& dataset,
                                       const ProjectionSpec& spec, Rng& rng) {
  detail::require_all_numeric(dataset, "random_project");
  if (spec.entry_stddev <= 0.0)
    throw ValidationError("random_project: entry stddev must be positive");
  const Matrix& block = dataset.numeric_block();
  const std::size_t n = block.rows();
  const std::size_t d = block.cols();
  const std::size_t k = spec.target_dim;
  const std::size_t away =
      spec.axis == ProjectionAxis::kColumnWise ? d : n;
  if (k < 1 || k >= away)
    throw ValidationError(
        "random_project: k must satisfy 1 <= k < " + std::to_string(away));

  Rng r_rng = rng.stream("projection/R");
  const double scale =
      1.0 / (std::sqrt(static_cast<double>(k)) * spec.entry_stddev);

  if (spec.axis == ProjectionAxis::kColumnWise) {
    Matrix r(d, k);
    for (auto& v : r.values()) v = r_rng.gaussian(0.0, spec.entry_stddev);
    Matrix out = multiply(block, r);
    for (auto& v : out.values()) v *= scale;
    std::vector<ColumnSpec> cols;
    for (std::size_t j = 0; j < k; ++j)
      cols.push_back({"proj_" + std::to_string(j + 1), ColumnKind::kNumeric,
                      ColumnRole::kOther});
    return {Dataset(Schema(std::move(cols)), std::move(out), {}),
            std::move(r)};
  }

  Matrix r(k, n);
  for (auto& v : r.values()) v = r_rng.gaussian(0.0, spec.entry_stddev);
  Matrix out = multiply(r, block);
  for (auto& v : out.values()) v *= scale;
  return {dataset.with_numeric_block(std::move(out)), std::move(r)};
}

// Factors of a low-rank distortion. SVD fills u_k/sigma_k/v_k_t; NMF fills
// w/h and the objective trace.
struct FactorizationResult {
  Matrix u_k;
  std::vector<double> sigma_k;
  Matrix v_k_t;
  Matrix w;
  Matrix h;
  double residual_frobenius = 0.0;
  std::vector<double> objective_trace;  // NMF: 0.5 ||A - WH||_F^2 per iteration
  bool converged = true;

  nlohmann::json to_json(bool emit_factors) const {
    nlohmann::json j{{"residual_frobenius", residual_frobenius},
                     {"converged", converged}};
    if (!objective_trace.empty()) j["objective_trace"] = objective_trace;
    if (!sigma_k.empty()) j["singular_values"] = sigma_k;
    if (emit_factors) {
      if (!u_k.empty()) {
        j["u_k"] = matrix_to_json(u_k);
        j["v_k_t"] = matrix_to_json(v_k_t);
      }
      if (!w.empty()) {
        j["w"] = matrix_to_json(w);
        j["h"] = matrix_to_json(h);
      }
    }
    return j;
  }
};

// Rank-k truncation A_k = U_k S_k V_k^T; the discarded tail E_k = A - A_k
// acts as the removed noise, and ||E_k||_F^2 equals the tail singular-value
// energy.
inline std::pair<Dataset, FactorizationResult> svd_distort(
    const Dataset& dataset, std::size_t k) {
  detail::require_all_numeric(dataset, "svd_distort");
  const Matrix& a = dataset.numeric_block();
  const std::size_t s = std::min(a.rows(), a.cols());
  if (k < 1 || k > s)
    throw ValidationError("svd_distort: k must satisfy 1 <= k <= " +
                          std::to_string(s));
  const SvdResult full = svd(a);

  FactorizationResult result;
  result.u_k = Matrix(a.rows(), k);
  result.v_k_t = Matrix(k, a.cols());
  result.sigma_k.assign(full.singular_values.begin(),
                        full.singular_values.begin() + static_cast<long>(k));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t r = 0; r < k; ++r) result.u_k(i, r) = full.u(i, r);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < a.cols(); ++j)
      result.v_k_t(r, j) = full.vt(r, j);

  Matrix ak(a.rows(), a.cols());
  for (std::size_t r = 0; r < k; ++r) {
    const double sv = result.sigma_k[r];
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const double uis = result.u_k(i, r) * sv;
      for (std::size_t j = 0; j < a.cols(); ++j)
        ak(i, j) += uis * result.v_k_t(r, j);
    }
  }
  result.residual_frobenius = frobenius_norm(subtract(a, ak));
  return {dataset.with_numeric_block(std::move(ak)), std::move(result)};
}

// Multiplicative-update NMF for 0.5 ||A - WH||_F^2 with W, H >= 0.
// The objective never increases; iteration stops once the relative decrease
// falls below tol.
inline std::pair<Dataset, FactorizationResult> nmf_distort(
    const Dataset& dataset, std::size_t k, std::size_t max_iter, double tol,
    Rng& rng) {
  detail::require_all_numeric(dataset, "nmf_distort");
  const Matrix& a = dataset.numeric_block();
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (a(i, j) < 0.0)
        throw ValidationError(
            "nmf_distort: negative entry at row " + std::to_string(i + 1) +
            ", column " + std::to_string(j + 1));
  const std::size_t s = std::min(n, m);
  if (k < 1 || k > s)
    throw ValidationError("nmf_distort: k must satisfy 1 <= k <= " +
                          std::to_string(s));

  // Scale-matched uniform start.
  double mean = 0.0;
  for (double v : a.values()) mean += v;
  mean /= static_cast<double>(n * m);
  const double init_scale = std::sqrt(mean / static_cast<double>(k));
  Rng w_rng = rng.stream("nmf/W");
  Rng h_rng = rng.stream("nmf/H");
  Matrix w(n, k), h(k, m);
  for (auto& v : w.values()) v = w_rng.uniform01() * init_scale;
  for (auto& v : h.values()) v = h_rng.uniform01() * init_scale;

  constexpr double kDenomFloor = 1e-12;
  const auto objective = [&]() {
    return 0.5 * std::pow(frobenius_norm(subtract(a, multiply(w, h))), 2);
  };

  FactorizationResult result;
  result.objective_trace.push_back(objective());
  result.converged = false;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    // H <- H .* (W^T A) ./ (W^T W H)
    {
      const Matrix wt = transpose(w);
      const Matrix numer = multiply(wt, a);
      const Matrix denom = multiply(multiply(wt, w), h);
      for (std::size_t i = 0; i < h.values().size(); ++i)
        h.values()[i] *=
            numer.values()[i] / std::max(denom.values()[i], kDenomFloor);
    }
    // W <- W .* (A H^T) ./ (W H H^T)
    {
      const Matrix ht = transpose(h);
      const Matrix numer = multiply(a, ht);
      const Matrix denom = multiply(w, multiply(h, ht));
      for (std::size_t i = 0; i < w.values().size(); ++i)
        w.values()[i] *=
            numer.values()[i] / std::max(denom.values()[i], kDenomFloor);
    }
    const double prev = result.objective_trace.back();
    const double cur = objective();
    result.objective_trace.push_back(cur);
    if (prev - cur <= tol * std::max(prev, 1e-300)) {
      result.converged = true;
      break;
    }
  }

  Matrix approx = multiply(w, h);
  result.residual_frobenius = frobenius_norm(subtract(a, approx));
  result.w = std::move(w);
  result.h = std::move(h);
  return {dataset.with_numeric_block(std::move(approx)), std::move(result)};
}

inline std::pair<Dataset, FactorizationResult> nmf_distort(
    const Dataset& dataset, std::size_t k, Rng& rng) {
  return nmf_distort(dataset, k, 500, 1e-6, rng);
}

}  // namespace pertubox

#endif  // PERTUBOX_DIMREDUCE_PERTURB_HPP_
