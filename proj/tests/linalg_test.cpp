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

#include "pertubox/linalg.hpp"

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "pertubox/matrix.hpp"
#include "pertubox/rng.hpp"

namespace pertubox {
namespace {

Matrix random_matrix(std::size_t n, std::size_t m, Rng& rng) {
  Matrix a(n, m);
  for (auto& v : a.values()) v = rng.gaussian();
  return a;
}

double pairwise_distance(const Matrix& x, std::size_t p, std::size_t q) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double d = x(i, p) - x(i, q);
    s += d * d;
  }
  return std::sqrt(s);
}

TEST_CASE("random_orthonormal satisfies R^T R = I") {
  Rng rng(1, "ortho");
  for (std::size_t d : {1u, 2u, 5u, 17u}) {
    Rng sub = rng.stream("d" + std::to_string(d));
    const Matrix r = random_orthonormal(d, sub);
    const Matrix gram = multiply(transpose(r), r);
    REQUIRE(max_abs_diff(gram, Matrix::identity(d)) < 1e-10);
  }
}

TEST_CASE("random_orthonormal d=1 is plus or minus one") {
  bool saw_plus = false, saw_minus = false;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    Rng rng(seed, "sign");
    const Matrix r = random_orthonormal(1, rng);
    REQUIRE(std::abs(std::abs(r(0, 0)) - 1.0) < 1e-12);
    (r(0, 0) > 0 ? saw_plus : saw_minus) = true;
  }
  REQUIRE(saw_plus);
  REQUIRE(saw_minus);
}

TEST_CASE("random_orthonormal is bitwise deterministic") {
  Rng a(77, "rot");
  Rng b(77, "rot");
  const Matrix r1 = random_orthonormal(6, a);
  const Matrix r2 = random_orthonormal(6, b);
  REQUIRE(r1.values() == r2.values());
}

TEST_CASE("random_orthonormal rejects d=0") {
  Rng rng(0);
  REQUIRE_THROWS_AS(random_orthonormal(0, rng), ValidationError);
}

TEST_CASE("svd of identity") {
  const auto r = svd(Matrix::identity(3));
  for (double s : r.singular_values) REQUIRE(s == Catch::Approx(1.0));
}

TEST_CASE("svd of diagonal matrix") {
  Matrix a(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 2.0;
  const auto r = svd(a);
  REQUIRE(r.singular_values[0] == Catch::Approx(3.0).margin(1e-12));
  REQUIRE(r.singular_values[1] == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("svd reconstructs random matrices") {
  Rng rng(2, "svd");
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{
           {6, 4}, {4, 6}, {5, 5}, {1, 3}, {8, 1}}) {
    Rng sub = rng.stream(std::to_string(n) + "x" + std::to_string(m));
    const Matrix a = random_matrix(n, m, sub);
    const auto r = svd(a);

    REQUIRE(max_abs_diff(multiply(transpose(r.u), r.u),
                         Matrix::identity(n)) < 1e-10);
    REQUIRE(max_abs_diff(multiply(r.vt, transpose(r.vt)),
                         Matrix::identity(m)) < 1e-10);
    for (std::size_t i = 0; i + 1 < r.singular_values.size(); ++i)
      REQUIRE(r.singular_values[i] >= r.singular_values[i + 1]);
    for (double s : r.singular_values) REQUIRE(s >= 0.0);

    const double rel =
        frobenius_norm(subtract(a, r.reconstruct())) / frobenius_norm(a);
    REQUIRE(rel < 1e-8);
  }
}

TEST_CASE("svd of rank-deficient matrix") {
  // Two identical columns: rank 1.
  Matrix a(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    a(i, 0) = static_cast<double>(i + 1);
    a(i, 1) = static_cast<double>(i + 1);
  }
  const auto r = svd(a);
  REQUIRE(r.singular_values[1] < 1e-10);
  REQUIRE(frobenius_norm(subtract(a, r.reconstruct())) < 1e-10);
  REQUIRE(max_abs_diff(multiply(transpose(r.u), r.u), Matrix::identity(3)) <
          1e-10);
}

TEST_CASE("svd rejects empty and non-finite input") {
  REQUIRE_THROWS_AS(svd(Matrix{}), ValidationError);
  Matrix bad(2, 2);
  bad(0, 0) = std::nan("");
  REQUIRE_THROWS_AS(svd(bad), ValidationError);
}

TEST_CASE("eckart-young tail identity") {
  Rng rng(3, "ey");
  const Matrix a = random_matrix(9, 6, rng);
  const auto r = svd(a);
  for (std::size_t k = 0; k <= 6; ++k) {
    SvdResult trunc = r;
    for (std::size_t i = k; i < trunc.singular_values.size(); ++i)
      trunc.singular_values[i] = 0.0;
    const Matrix ak = trunc.reconstruct();
    double tail = 0.0;
    for (std::size_t i = k; i < r.singular_values.size(); ++i)
      tail += r.singular_values[i] * r.singular_values[i];
    const double resid2 = std::pow(frobenius_norm(subtract(a, ak)), 2);
    REQUIRE(resid2 == Catch::Approx(tail).margin(1e-8 * std::max(tail, 1.0)));
  }
}

TEST_CASE("covariance of constant columns is zero") {
  Matrix x(3, 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t t = 0; t < 5; ++t) x(i, t) = static_cast<double>(i);
  REQUIRE(max_abs(covariance(x)) == 0.0);
}

TEST_CASE("covariance worked example") {
  // Two dimensions, two observations: [[0,1],[0,1]].
  Matrix x(2, 2);
  x(0, 1) = 1.0;
  x(1, 1) = 1.0;
  const Matrix c = covariance(x);
  for (double v : c.values()) REQUIRE(v == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("covariance matches brute-force formula") {
  Rng rng(4, "cov");
  const Matrix x = random_matrix(4, 30, rng);
  const Matrix c = covariance(x);
  // Independent route: explicit double loop over the defining sum.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      double mi = 0.0, mj = 0.0;
      for (std::size_t t = 0; t < 30; ++t) {
        mi += x(i, t);
        mj += x(j, t);
      }
      mi /= 30.0;
      mj /= 30.0;
      double s = 0.0;
      for (std::size_t t = 0; t < 30; ++t)
        s += (x(i, t) - mi) * (x(j, t) - mj);
      REQUIRE(c(i, j) == Catch::Approx(s / 29.0).margin(1e-12));
    }
  }
}

TEST_CASE("covariance rejects fewer than two observations") {
  REQUIRE_THROWS_AS(covariance(Matrix(3, 1)), ValidationError);
}

TEST_CASE("covariance is equivariant under rotation") {
  Rng rng(5, "cov-rot");
  const Matrix x = random_matrix(4, 50, rng);
  const Matrix r = random_orthonormal(4, rng);
  const Matrix lhs = covariance(multiply(r, x));
  const Matrix rhs = multiply(multiply(r, covariance(x)), transpose(r));
  REQUIRE(max_abs_diff(lhs, rhs) < 1e-9);
}

TEST_CASE("covariance is positive semi-definite") {
  Rng rng(6, "psd");
  const Matrix x = random_matrix(5, 12, rng);
  const auto eig = symmetric_eigen(covariance(x));
  for (double v : eig.values) REQUIRE(v >= -1e-10);
}

TEST_CASE("rotation preserves pairwise column distances") {
  Rng rng(7, "iso");
  const Matrix x = random_matrix(5, 20, rng);
  const Matrix r = random_orthonormal(5, rng);
  const Matrix rx = multiply(r, x);
  for (std::size_t p = 0; p < 20; ++p)
    for (std::size_t q = p + 1; q < 20; ++q)
      REQUIRE(std::abs(pairwise_distance(rx, p, q) -
                       pairwise_distance(x, p, q)) < 1e-9);
}

TEST_CASE("rotation preserves singular values") {
  Rng rng(8, "sv");
  const Matrix x = random_matrix(4, 9, rng);
  const Matrix r = random_orthonormal(4, rng);
  const auto s1 = svd(x).singular_values;
  const auto s2 = svd(multiply(r, x)).singular_values;
  for (std::size_t i = 0; i < s1.size(); ++i)
    REQUIRE(std::abs(s1[i] - s2[i]) < 1e-8);
}

TEST_CASE("symmetric_eigen reconstructs the input") {
  Rng rng(9, "eig");
  const Matrix g = random_matrix(6, 6, rng);
  const Matrix a = multiply(g, transpose(g));  // symmetric PSD
  const auto eig = symmetric_eigen(a);
  Matrix recon(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        recon(i, j) += eig.values[r] * eig.vectors(i, r) * eig.vectors(j, r);
  REQUIRE(max_abs_diff(recon, a) < 1e-9 * std::max(1.0, max_abs(a)));
  REQUIRE(max_abs_diff(multiply(transpose(eig.vectors), eig.vectors),
                       Matrix::identity(6)) < 1e-10);
  for (std::size_t i = 0; i + 1 < eig.values.size(); ++i)
    REQUIRE(eig.values[i] >= eig.values[i + 1]);
}

}  // namespace
}  // namespace pertubox
