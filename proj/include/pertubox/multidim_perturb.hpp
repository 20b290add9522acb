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

#ifndef PERTUBOX_MULTIDIM_PERTURB_HPP_
#define PERTUBOX_MULTIDIM_PERTURB_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pertubox/dataset.hpp"
#include "pertubox/error.hpp"
#include "pertubox/json_util.hpp"
#include "pertubox/linalg.hpp"
#include "pertubox/matrix.hpp"
#include "pertubox/rng.hpp"

namespace pertubox {

namespace detail {

inline void require_all_numeric(const Dataset& dataset, const char* op) {
  if (!dataset.all_numeric())
    throw ValidationError(std::string(op) + ": dataset must be all-numeric");
  if (dataset.n_records() == 0 || dataset.numeric_block().cols() == 0)
    throw ValidationError(std::string(op) + ": dataset is empty");
}

// records are rows of `block`; applies y = R x + t to every record.
inline Matrix apply_affine(const Matrix& block, const Matrix& rotation,
                           const std::vector<double>& translation) {
  const std::size_t n = block.rows();
  const std::size_t d = block.cols();
  Matrix out(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < d; ++i) {
      double s = translation.empty() ? 0.0 : translation[i];
      for (std::size_t j = 0; j < d; ++j) s += rotation(i, j) * block(r, j);
      out(r, i) = s;
    }
  }
  return out;
}

}  // namespace detail

// --- random rotation -------------------------------------------------------

// G(X) = R X with R orthonormal; pairwise distances and inner products of
// the records are preserved.
inline std::pair<Dataset, Matrix> rotate(const Dataset& dataset, Rng& rng) {
  detail::require_all_numeric(dataset, "rotate");
  const std::size_t d = dataset.numeric_block().cols();
  Rng r_rng = rng.stream("rotation/R");
  Matrix r = random_orthonormal(d, r_rng);
  Dataset out = dataset.with_numeric_block(
      detail::apply_affine(dataset.numeric_block(), r, {}));
  return {std::move(out), std::move(r)};
}

#ifdef PERTUBOX_TEST_HOOKS
inline Dataset rotate_with(const Dataset& dataset, const Matrix& rotation) {
  detail::require_all_numeric(dataset, "rotate");
  return dataset.with_numeric_block(
      detail::apply_affine(dataset.numeric_block(), rotation, {}));
}
#endif

// --- geometric perturbation -------------------------------------------------

struct GeometricSecret {
  Matrix rotation;                  // d x d orthonormal
  std::vector<double> translation;  // t; the full term is t * 1^T
  double sigma = 0.0;               // noise std of the additive gaussian

  nlohmann::json to_json() const {
    return {{"rotation", matrix_to_json(rotation)},
            {"translation", translation},
            {"sigma", sigma}};
  }
};

// G(X) = R X + t 1^T + D with D_ij ~ N(0, sigma^2). With sigma = 0 the map
// is an isometry: distances survive, inner products in general do not.
inline std::pair<Dataset, GeometricSecret> geometric_perturb(
    const Dataset& dataset, double sigma, Rng& rng) {
  detail::require_all_numeric(dataset, "geometric_perturb");
  if (sigma < 0.0)
    throw ValidationError("geometric_perturb: sigma must be non-negative");
  const std::size_t d = dataset.numeric_block().cols();

  GeometricSecret secret;
  {
    Rng r_rng = rng.stream("geometric/R");
    secret.rotation = random_orthonormal(d, r_rng);
  }
  {
    Rng t_rng = rng.stream("geometric/t");
    secret.translation.resize(d);
    for (auto& v : secret.translation) v = t_rng.uniform01();
  }
  secret.sigma = sigma;

  Matrix out = detail::apply_affine(dataset.numeric_block(), secret.rotation,
                                    secret.translation);
  if (sigma > 0.0) {
    Rng noise_rng = rng.stream("geometric/noise");
    for (auto& v : out.values()) v += noise_rng.gaussian(0.0, sigma);
  }
  return {dataset.with_numeric_block(std::move(out)), std::move(secret)};
}

#ifdef PERTUBOX_TEST_HOOKS
inline Dataset geometric_perturb_with(const Dataset& dataset,
                                      const Matrix& rotation,
                                      const std::vector<double>& translation,
                                      double sigma, Rng& rng) {
  detail::require_all_numeric(dataset, "geometric_perturb");
  Matrix out =
      detail::apply_affine(dataset.numeric_block(), rotation, translation);
  if (sigma > 0.0) {
    Rng noise_rng = rng.stream("geometric/noise");
    for (auto& v : out.values()) v += noise_rng.gaussian(0.0, sigma);
  }
  return dataset.with_numeric_block(std::move(out));
}
#endif

// --- condensation ------------------------------------------------------------

struct CondensationGroup {
  std::vector<std::size_t> members;  // original record indices, ascending
  std::vector<double> mean;
  Matrix covariance;                 // zero matrix for singleton groups

  nlohmann::json to_json() const {
    return {{"members", members},
            {"mean", mean},
            {"covariance", matrix_to_json(covariance)}};
  }
};

struct CondensationGroups {
  std::size_t group_size = 0;  // requested K
  std::vector<CondensationGroup> groups;

  nlohmann::json to_json() const {
    nlohmann::json gs = nlohmann::json::array();
    for (const auto& g : groups) gs.push_back(g.to_json());
    return {{"group_size", group_size}, {"groups", gs}};
  }
};

namespace detail {

inline std::vector<double> group_mean(const Matrix& block,
                                      const std::vector<std::size_t>& members) {
  const std::size_t d = block.cols();
  std::vector<double> mean(d, 0.0);
  for (std::size_t r : members)
    for (std::size_t j = 0; j < d; ++j) mean[j] += block(r, j);
  for (auto& v : mean) v /= static_cast<double>(members.size());
  return mean;
}

inline Matrix group_covariance(const Matrix& block,
                               const std::vector<std::size_t>& members,
                               const std::vector<double>& mean) {
  const std::size_t d = block.cols();
  Matrix cov(d, d);
  if (members.size() < 2) return cov;
  for (std::size_t r : members)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        cov(i, j) += (block(r, i) - mean[i]) * (block(r, j) - mean[j]);
  const double norm = static_cast<double>(members.size() - 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      cov(i, j) /= norm;
      cov(j, i) = cov(i, j);
    }
  return cov;
}

// Symmetric square root with eigenvalues floored at zero; inverted = true
// gives the pseudo-inverse square root.
inline Matrix symmetric_sqrt(const Matrix& psd, bool inverted) {
  const auto eig = symmetric_eigen(psd);
  const std::size_t d = psd.rows();
  const double tol =
      std::max(eig.values.empty() ? 0.0 : eig.values.front(), 0.0) * 1e-12;
  Matrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const double lam = eig.values[r];
    if (lam <= tol) continue;
    const double f = inverted ? 1.0 / std::sqrt(lam) : std::sqrt(lam);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out(i, j) += f * eig.vectors(i, r) * eig.vectors(j, r);
  }
  return out;
}

}  // namespace detail

// Nearest-neighbor accretion into groups of size K (the final group absorbs
// the remainder, so sizes stay in [K, 2K-1]). Each group is replaced by
// synthetic records drawn from N(mean, covariance) and affinely corrected so
// group sample mean and covariance match the stored statistics.
inline std::pair<Dataset, CondensationGroups> condense(const Dataset& dataset,
                                                       std::size_t group_k,
                                                       Rng& rng) {
  detail::require_all_numeric(dataset, "condense");
  const std::size_t n = dataset.n_records();
  if (group_k < 1) throw ValidationError("condense: K must be at least 1");
  if (group_k > n)
    throw ValidationError("condense: K exceeds the record count");
  const Matrix& block = dataset.numeric_block();
  const std::size_t d = block.cols();

  // Greedy grouping: seed at the smallest unassigned index, gather its K-1
  // nearest unassigned neighbors; ties break on index.
  std::vector<bool> assigned(n, false);
  std::size_t remaining = n;
  CondensationGroups info;
  info.group_size = group_k;
  while (remaining > 0) {
    std::size_t seed = 0;
    while (assigned[seed]) ++seed;
    CondensationGroup group;
    if (remaining < 2 * group_k) {
      for (std::size_t r = seed; r < n; ++r)
        if (!assigned[r]) group.members.push_back(r);
    } else {
      std::vector<std::pair<double, std::size_t>> by_distance;
      for (std::size_t r = 0; r < n; ++r) {
        if (assigned[r] || r == seed) continue;
        double dist2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          const double diff = block(r, j) - block(seed, j);
          dist2 += diff * diff;
        }
        by_distance.emplace_back(dist2, r);
      }
      std::sort(by_distance.begin(), by_distance.end());
      group.members.push_back(seed);
      for (std::size_t i = 0; i + 1 < group_k; ++i)
        group.members.push_back(by_distance[i].second);
      std::sort(group.members.begin(), group.members.end());
    }
    for (std::size_t r : group.members) assigned[r] = true;
    remaining -= group.members.size();
    group.mean = detail::group_mean(block, group.members);
    group.covariance = detail::group_covariance(block, group.members, group.mean);
    info.groups.push_back(std::move(group));
  }

  // Regenerate each group synthetically.
  Matrix synthetic(n, d);
  for (std::size_t gi = 0; gi < info.groups.size(); ++gi) {
    const auto& group = info.groups[gi];
    const std::size_t g = group.members.size();
    if (g == 1) {
      for (std::size_t j = 0; j < d; ++j)
        synthetic(group.members[0], j) = group.mean[j];
      continue;
    }
    Rng group_rng = rng.stream("condense/group" + std::to_string(gi));
    const Matrix target_sqrt = detail::symmetric_sqrt(group.covariance, false);
    Matrix samples(g, d);
    for (std::size_t s = 0; s < g; ++s) {
      std::vector<double> z(d);
      for (auto& v : z) v = group_rng.gaussian();
      for (std::size_t i = 0; i < d; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) acc += target_sqrt(i, j) * z[j];
        samples(s, i) = acc;
      }
    }
    // Exact first/second-moment correction: recenter, whiten with the sample
    // covariance, recolor with the target.
    std::vector<double> sample_mean(d, 0.0);
    for (std::size_t s = 0; s < g; ++s)
      for (std::size_t j = 0; j < d; ++j) sample_mean[j] += samples(s, j);
    for (auto& v : sample_mean) v /= static_cast<double>(g);
    for (std::size_t s = 0; s < g; ++s)
      for (std::size_t j = 0; j < d; ++j) samples(s, j) -= sample_mean[j];

    Matrix sample_cov(d, d);
    for (std::size_t s = 0; s < g; ++s)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
          sample_cov(i, j) += samples(s, i) * samples(s, j);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        sample_cov(i, j) /= static_cast<double>(g - 1);
        sample_cov(j, i) = sample_cov(i, j);
      }
    const Matrix correct =
        multiply(target_sqrt, detail::symmetric_sqrt(sample_cov, true));
    for (std::size_t s = 0; s < g; ++s) {
      for (std::size_t i = 0; i < d; ++i) {
        double acc = group.mean[i];
        for (std::size_t j = 0; j < d; ++j)
          acc += correct(i, j) * samples(s, j);
        synthetic(group.members[s], i) = acc;
      }
    }
  }
  return {dataset.with_numeric_block(std::move(synthetic)), std::move(info)};
}

}  // namespace pertubox

#endif  // PERTUBOX_MULTIDIM_PERTURB_HPP_
