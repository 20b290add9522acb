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

#ifndef PERTUBOX_LINALG_HPP_
#define PERTUBOX_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "pertubox/error.hpp"
#include "pertubox/matrix.hpp"
#include "pertubox/rng.hpp"

namespace pertubox {

namespace detail {

inline double column_dot(const Matrix& m, std::size_t p, std::size_t q) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, p) * m(i, q);
  return s;
}

// Extends `q` (n x filled, orthonormal columns in positions [0, filled)) to a
// full n x n orthonormal basis using canonical vectors, deterministically.
inline void complete_orthonormal_columns(Matrix& q, std::size_t filled) {
  const std::size_t n = q.rows();
  std::size_t next_canonical = 0;
  for (std::size_t j = filled; j < n; ++j) {
    while (true) {
      if (next_canonical >= n)
        throw ValidationError("basis completion failed");
      std::vector<double> v(n, 0.0);
      v[next_canonical++] = 1.0;
      // Orthogonalize twice against the accepted columns.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < j; ++c) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += v[i] * q(i, c);
          for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q(i, c);
        }
      }
      double norm = std::sqrt(
          std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
      if (norm > 1e-8) {
        for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / norm;
        break;
      }
    }
  }
}

}  // namespace detail

// Haar-distributed orthonormal d x d matrix: modified Gram-Schmidt applied
// to an i.i.d. standard-Gaussian matrix (the R factor has a positive
// diagonal, which fixes the sign convention).
inline Matrix random_orthonormal(std::size_t d, Rng& rng) {
  if (d == 0) throw ValidationError("random_orthonormal: dimension is zero");
  Matrix q(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> v(d);
    while (true) {
      for (std::size_t i = 0; i < d; ++i) v[i] = rng.gaussian();
      for (std::size_t c = 0; c < j; ++c) {
        double dot = 0.0;
        for (std::size_t i = 0; i < d; ++i) dot += v[i] * q(i, c);
        for (std::size_t i = 0; i < d; ++i) v[i] -= dot * q(i, c);
      }
      double norm = std::sqrt(
          std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
      if (norm > 1e-12) {  // resample the (measure-zero) degenerate draw
        for (std::size_t i = 0; i < d; ++i) q(i, j) = v[i] / norm;
        break;
      }
    }
  }
  return q;
}

struct SvdResult {
  Matrix u;                             // n x n orthonormal
  std::vector<double> singular_values;  // min(n, m), descending, >= 0
  Matrix vt;                            // m x m orthonormal

  // U * diag(sigma) * Vt with the rectangular n x m diagonal.
  Matrix reconstruct() const {
    const std::size_t n = u.rows();
    const std::size_t m = vt.rows();
    Matrix a(n, m);
    for (std::size_t r = 0; r < singular_values.size(); ++r) {
      const double s = singular_values[r];
      if (s == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const double uis = u(i, r) * s;
        for (std::size_t j = 0; j < m; ++j) a(i, j) += uis * vt(r, j);
      }
    }
    return a;
  }
};

// Full SVD by one-sided Jacobi. A = U * diag(sigma) * Vt.
inline SvdResult svd(const Matrix& a) {
  if (a.empty()) throw ValidationError("svd: empty matrix");
  if (!a.all_finite()) throw ValidationError("svd: non-finite entry");

  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (n < m) {
    // A^T = U' S V'^T  =>  A = V' S U'^T
    SvdResult t = svd(transpose(a));
    return SvdResult{transpose(t.vt), std::move(t.singular_values),
                     transpose(t.u)};
  }

  Matrix w = a;
  Matrix v = Matrix::identity(m);
  constexpr double kEps = 1e-15;
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double alpha = detail::column_dot(w, p, p);
        const double beta = detail::column_dot(w, q, q);
        const double gamma = detail::column_dot(w, p, q);
        if (gamma == 0.0 || std::abs(gamma) <= kEps * std::sqrt(alpha * beta))
          continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          const double wp = w(i, p), wq = w(i, q);
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (std::size_t i = 0; i < m; ++i) {
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(m);
  for (std::size_t j = 0; j < m; ++j)
    sigma[j] = std::sqrt(detail::column_dot(w, j, j));

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return sigma[i] > sigma[j];
  });

  SvdResult out;
  out.singular_values.resize(m);
  out.u = Matrix(n, n);
  Matrix v_sorted(m, m);
  const double sigma_max = sigma.empty() ? 0.0 : sigma[order[0]];
  const double tiny = std::max(sigma_max, 1.0) * 1e-14;
  std::size_t filled = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t j = order[r];
    out.singular_values[r] = sigma[j];
    for (std::size_t i = 0; i < m; ++i) v_sorted(i, r) = v(i, j);
    if (sigma[j] > tiny && r == filled) {
      for (std::size_t i = 0; i < n; ++i) out.u(i, r) = w(i, j) / sigma[j];
      ++filled;
    }
  }
  detail::complete_orthonormal_columns(out.u, filled);
  out.vt = transpose(v_sorted);
  return out;
}

// Sample covariance of X (rows = dimensions, columns = observations),
// normalized by n - 1.
inline Matrix covariance(const Matrix& x) {
  const std::size_t d = x.rows();
  const std::size_t n = x.cols();
  if (n < 2) throw ValidationError("covariance: needs at least 2 observations");
  std::vector<double> mean(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t t = 0; t < n; ++t) mean[i] += x(i, t);
    mean[i] /= static_cast<double>(n);
  }
  Matrix c(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < n; ++t)
        s += (x(i, t) - mean[i]) * (x(j, t) - mean[j]);
      s /= static_cast<double>(n - 1);
      c(i, j) = s;
      c(j, i) = s;
    }
  }
  return c;
}

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // columns are eigenvectors, A = V diag(l) V^T
};

// Cyclic Jacobi eigenvalue iteration for symmetric matrices.
inline SymmetricEigen symmetric_eigen(Matrix a) {
  const std::size_t d = a.rows();
  if (d == 0 || a.cols() != d)
    throw ValidationError("symmetric_eigen: matrix must be square");
  Matrix v = Matrix::identity(d);
  const double scale = std::max(max_abs(a), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q)
        off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-14 * scale) break;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t =
            std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          if (i != p && i != q) {
            const double aip = a(i, p), aiq = a(i, q);
            a(i, p) = c * aip - s * aiq;
            a(p, i) = a(i, p);
            a(i, q) = s * aip + c * aiq;
            a(q, i) = a(i, q);
          }
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) > a(j, j);
  });
  SymmetricEigen out;
  out.values.resize(d);
  out.vectors = Matrix(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    out.values[r] = a(order[r], order[r]);
    for (std::size_t i = 0; i < d; ++i) out.vectors(i, r) = v(i, order[r]);
  }
  return out;
}

}  // namespace pertubox

#endif  // PERTUBOX_LINALG_HPP_
