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

#ifndef PERTUBOX_VALUE_PERTURB_HPP_
#define PERTUBOX_VALUE_PERTURB_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "pertubox/error.hpp"
#include "pertubox/noise.hpp"
#include "pertubox/rng.hpp"

namespace pertubox {

// w_i = x_i + y_i with y_i drawn i.i.d. from the noise distribution.
inline std::vector<double> add_noise(std::span<const double> column,
                                     const NoiseSpec& noise, Rng& rng) {
  if (column.empty()) throw ValidationError("add_noise: empty column");
  std::vector<double> out(column.size());
  for (std::size_t i = 0; i < column.size(); ++i)
    out[i] = column[i] + noise.sample(rng);
  return out;
}

// Binned probability density over [lo, hi]: B+1 edges, B probabilities
// summing to one.
struct DensityEstimate {
  std::vector<double> bin_edges;
  std::vector<double> probabilities;
  bool converged = true;
  std::size_t iterations = 0;

  double lo() const { return bin_edges.front(); }
  double hi() const { return bin_edges.back(); }
  std::size_t bins() const { return probabilities.size(); }
  double bin_center(std::size_t b) const {
    return 0.5 * (bin_edges[b] + bin_edges[b + 1]);
  }
  double bin_width() const {
    return (hi() - lo()) / static_cast<double>(bins());
  }

  void validate() const {
    if (bin_edges.size() != probabilities.size() + 1 || probabilities.empty())
      throw ValidationError("density: edge/probability size mismatch");
    for (std::size_t i = 0; i + 1 < bin_edges.size(); ++i)
      if (!(bin_edges[i] < bin_edges[i + 1]))
        throw ValidationError("density: bin edges must increase");
    double sum = 0.0;
    for (double p : probabilities) {
      if (p < 0.0) throw ValidationError("density: negative probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw ValidationError("density: probabilities must sum to 1");
  }
};

// L1 distance between two estimates on the same grid, in probability mass.
inline double l1_distance(const DensityEstimate& a, const DensityEstimate& b) {
  if (a.bins() != b.bins())
    throw ValidationError("density: incompatible grids");
  double s = 0.0;
  for (std::size_t i = 0; i < a.bins(); ++i)
    s += std::abs(a.probabilities[i] - b.probabilities[i]);
  return s;
}

namespace detail {

inline std::vector<double> initial_density(std::span<const double> perturbed,
                                           const NoiseSpec& noise,
                                           const std::vector<double>& centers,
                                           double bin_width) {
  const double n = static_cast<double>(perturbed.size());
  double mean = 0.0;
  for (double w : perturbed) mean += w;
  mean /= n;
  double var = 0.0;
  for (double w : perturbed) var += (w - mean) * (w - mean);
  var /= n;
  const auto [lo_it, hi_it] =
      std::minmax_element(perturbed.begin(), perturbed.end());
  const double range = *hi_it - *lo_it;
  const double floor = 1e-6 * range * range;
  // Moment correction: var(X) ~ var(W) - var(Y), floored away from zero.
  const double sigma2 = std::max(var - noise.variance(), std::max(floor, 1e-300));
  std::vector<double> p(centers.size());
  double total = 0.0;
  for (std::size_t b = 0; b < centers.size(); ++b) {
    const double z = centers[b] - mean;
    p[b] = std::exp(-0.5 * z * z / sigma2) * bin_width;
    total += p[b];
  }
  for (auto& v : p) v /= total;
  return p;
}

}  // namespace detail

// Bayes-rule fixed point on a binned grid: starting from a normal density
// matched to the moment-corrected data, repeat
//   p'_b ∝ p_b * (1/n) Σ_i f_Y(w_i - a_b) / Σ_c f_Y(w_i - a_c) p_c
// until the L1 change drops below tol. Recovers the value distribution
// hidden by additive noise.
inline DensityEstimate reconstruct_distribution(
    std::span<const double> perturbed, const NoiseSpec& noise,
    std::size_t bins, double tol = 1e-4, std::size_t max_iter = 500) {
  if (perturbed.size() < 10)
    throw ValidationError("reconstruct: needs at least 10 values");
  if (bins < 2) throw ValidationError("reconstruct: needs at least 2 bins");

  const auto [lo_it, hi_it] =
      std::minmax_element(perturbed.begin(), perturbed.end());
  const double pad = noise.support_pad();
  const double lo = *lo_it - pad;
  const double hi = *hi_it + pad;

  DensityEstimate est;
  est.bin_edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t b = 0; b <= bins; ++b)
    est.bin_edges[b] = lo + width * static_cast<double>(b);
  std::vector<double> centers(bins);
  for (std::size_t b = 0; b < bins; ++b) centers[b] = est.bin_center(b);

  const std::size_t n = perturbed.size();
  // Kernel K[i][b]: the average of f_Y(w_i - z) over bin b, computed
  // exactly from the noise CDF. Stays well-defined when the noise is much
  // narrower than a bin.
  std::vector<double> kernel(n * bins);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < bins; ++b)
      kernel[i * bins + b] = (noise.cdf(perturbed[i] - est.bin_edges[b]) -
                              noise.cdf(perturbed[i] - est.bin_edges[b + 1])) /
                             width;

  std::vector<double> p =
      detail::initial_density(perturbed, noise, centers, width);
  std::vector<double> next(bins);
  est.converged = false;
  std::size_t iter = 0;
  for (; iter < max_iter; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = &kernel[i * bins];
      double denom = 0.0;
      for (std::size_t b = 0; b < bins; ++b) denom += row[b] * p[b];
      if (denom <= 0.0)
        throw ValidationError(
            "reconstruct: degenerate input, a perturbed value has zero "
            "likelihood on the whole support");
      for (std::size_t b = 0; b < bins; ++b) next[b] += row[b] / denom;
    }
    double total = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
      next[b] *= p[b] / static_cast<double>(n);
      total += next[b];
    }
    double change = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
      next[b] /= total;
      change += std::abs(next[b] - p[b]);
    }
    p.swap(next);
    if (change < tol) {
      est.converged = true;
      ++iter;
      break;
    }
  }
  est.iterations = iter;
  est.probabilities = std::move(p);
  est.validate();
  return est;
}

// Related-question response scrambling: keep the answer with probability
// theta, flip it otherwise.
inline std::vector<bool> randomize_response(const std::vector<bool>& column,
                                            double theta, Rng& rng) {
  if (column.empty()) throw ValidationError("randomize_response: empty column");
  if (!(theta >= 0.0 && theta <= 1.0))
    throw ValidationError("randomize_response: theta must be in [0,1]");
  std::vector<bool> out(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) {
    const bool keep = rng.uniform01() < theta;
    out[i] = keep ? column[i] : !column[i];
  }
  return out;
}

struct ProportionEstimate {
  double p_hat = 0.0;          // estimated true P(yes), clamped to [0,1]
  double standard_error = 0.0;
  bool clamped = false;
  double observed_yes = 0.0;   // raw P*(yes) from the scrambled bits
};

// Inverts P*(yes) = P(yes)·theta + (1 - P(yes))·(1 - theta).
inline ProportionEstimate estimate_true_proportion(
    const std::vector<bool>& scrambled, double theta) {
  if (scrambled.empty())
    throw ValidationError("estimate: empty column");
  if (!(theta >= 0.0 && theta <= 1.0))
    throw ValidationError("estimate: theta must be in [0,1]");
  if (theta == 0.5)
    throw ValidationError("estimate: theta=0.5 non-identifiable");
  const double n = static_cast<double>(scrambled.size());
  double yes = 0.0;
  for (bool b : scrambled) yes += b ? 1.0 : 0.0;
  const double p_star = yes / n;

  ProportionEstimate out;
  out.observed_yes = p_star;
  const double denom = 2.0 * theta - 1.0;
  const double raw = (p_star - (1.0 - theta)) / denom;
  out.p_hat = std::clamp(raw, 0.0, 1.0);
  out.clamped = raw != out.p_hat;
  out.standard_error =
      std::sqrt(p_star * (1.0 - p_star) / n) / std::abs(denom);
  return out;
}

}  // namespace pertubox

#endif  // PERTUBOX_VALUE_PERTURB_HPP_
