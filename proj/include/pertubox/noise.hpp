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

#ifndef PERTUBOX_NOISE_HPP_
#define PERTUBOX_NOISE_HPP_

#include <cmath>
#include <numbers>
#include <string>

#include "pertubox/error.hpp"
#include "pertubox/rng.hpp"

namespace pertubox {

enum class NoiseFamily { kGaussian, kUniform };

// Zero-mean noise distribution: gaussian(sigma) or uniform(-a, a).
class NoiseSpec {
 public:
  static NoiseSpec gaussian(double stddev) {
    return NoiseSpec(NoiseFamily::kGaussian, stddev);
  }
  // Uniform on [-half_width, half_width].
  static NoiseSpec uniform(double half_width) {
    return NoiseSpec(NoiseFamily::kUniform, half_width);
  }

  NoiseFamily family() const { return family_; }
  double parameter() const { return param_; }

  double density(double y) const {
    if (family_ == NoiseFamily::kGaussian) {
      const double z = y / param_;
      return std::exp(-0.5 * z * z) /
             (param_ * std::sqrt(2.0 * std::numbers::pi));
    }
    return std::abs(y) <= param_ ? 1.0 / (2.0 * param_) : 0.0;
  }

  double cdf(double y) const {
    if (family_ == NoiseFamily::kGaussian)
      return 0.5 * std::erfc(-y / (param_ * std::numbers::sqrt2));
    if (y <= -param_) return 0.0;
    if (y >= param_) return 1.0;
    return (y + param_) / (2.0 * param_);
  }

  double sample(Rng& rng) const {
    if (family_ == NoiseFamily::kGaussian) return rng.gaussian(0.0, param_);
    return rng.uniform(-param_, param_);
  }

  double variance() const {
    if (family_ == NoiseFamily::kGaussian) return param_ * param_;
    return param_ * param_ / 3.0;
  }

  double stddev() const { return std::sqrt(variance()); }

  // Margin added around the data when reconstructing the value density:
  // three sigma for gaussian noise, the full half-width for uniform.
  double support_pad() const {
    return family_ == NoiseFamily::kGaussian ? 3.0 * param_ : param_;
  }

  // Simpson quadrature of the density over a six-sigma (gaussian) or
  // full-support (uniform) grid. Used to enforce unit mass.
  double density_integral(std::size_t intervals = 4096) const {
    const double half =
        family_ == NoiseFamily::kGaussian ? 6.0 * param_ : param_;
    const double h = 2.0 * half / static_cast<double>(intervals);
    double sum = density(-half) + density(half);
    for (std::size_t i = 1; i < intervals; ++i) {
      const double x = -half + h * static_cast<double>(i);
      sum += density(x) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
  }

  std::string family_name() const {
    return family_ == NoiseFamily::kGaussian ? "gaussian" : "uniform";
  }

 private:
  NoiseSpec(NoiseFamily family, double param)
      : family_(family), param_(param) {
    if (!(param > 0.0) || !std::isfinite(param))
      throw ValidationError("noise: parameter must be positive and finite");
    if (std::abs(density_integral() - 1.0) > 1e-6)
      throw ValidationError("noise: density does not integrate to 1");
  }

  NoiseFamily family_;
  double param_;
};

}  // namespace pertubox

#endif  // PERTUBOX_NOISE_HPP_
