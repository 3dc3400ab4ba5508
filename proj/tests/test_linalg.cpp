#include <gtest/gtest.h>

#include <cmath>

#include "rpgauss/errors.hpp"
#include "rpgauss/linalg.hpp"
#include "rpgauss/nelder_mead.hpp"
#include "rpgauss/rng.hpp"

using namespace rpgauss;

namespace {

Matrix random_symmetric(std::size_t n, RngStream& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = 2 * rng.uniform() - 1;
  return m;
}

}  // namespace

TEST(JacobiEigen, ReconstructsMatrix) {
  RngStream rng(1, 0);
  for (std::size_t n : {1u, 2u, 4u, 6u}) {
    const Matrix a = random_symmetric(n, rng);
    const auto e = jacobi_eigen(a);
    const Matrix rec = e.vectors * Matrix::diagonal(e.values) * e.vectors.transpose();
    EXPECT_LT((rec - a).max_abs(), 1e-12);
    EXPECT_LT((e.vectors.transpose() * e.vectors - Matrix::identity(n)).max_abs(), 1e-12);
  }
}

TEST(JacobiEigen, RejectsNonSquare) {
  EXPECT_THROW(jacobi_eigen(Matrix(2, 3)), DomainError);
}

TEST(PseudoInverse, InvertibleMatchesInverse) {
  RngStream rng(2, 0);
  Matrix a = random_symmetric(4, rng);
  for (std::size_t i = 0; i < 4; ++i) a(i, i) += 5.0;
  const Matrix p = pseudo_inverse(a);
  EXPECT_LT((a * p - Matrix::identity(4)).max_abs(), 1e-12);
}

TEST(PseudoInverse, PenroseConditionsOnRankDeficient) {
  // Rank-2 matrix v v^T + w w^T in R^4.
  Matrix a(4, 4);
  const double v[4] = {1, 2, 0, -1}, w[4] = {0, 1, 1, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = v[i] * v[j] + w[i] * w[j];
  const Matrix p = pseudo_inverse(a);
  EXPECT_LT((a * p * a - a).max_abs(), 1e-10);
  EXPECT_LT((p * a * p - p).max_abs(), 1e-10);
  EXPECT_LT(((a * p).transpose() - a * p).max_abs(), 1e-10);
}

TEST(PseudoInverse, ZeroMatrixGivesZero) {
  EXPECT_EQ(pseudo_inverse(Matrix(3, 3)).max_abs(), 0.0);
}

TEST(NelderMead, FindsQuadraticMinimum) {
  auto f = [](double x, double y) { return (x - 1.5) * (x - 1.5) + 10 * (y + 0.25) * (y + 0.25); };
  const auto r = nelder_mead_2d(f, {0.0, 0.0}, {0.5, 0.5});
  EXPECT_NEAR(r.x[0], 1.5, 1e-4);
  EXPECT_NEAR(r.x[1], -0.25, 1e-4);
  EXPECT_LT(r.fx, 1e-8);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](double x, double y) { return 100 * (y - x * x) * (y - x * x) + (1 - x) * (1 - x); };
  NelderMeadOptions opts;
  opts.max_iter = 2000;
  opts.restarts = 2;
  const auto r = nelder_mead_2d(f, {-1.2, 1.0}, {0.1, 0.1}, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 2e-3);
}

TEST(NelderMead, RespectsIterationCap) {
  auto f = [](double x, double y) { return x * x + y * y; };
  NelderMeadOptions opts;
  opts.max_iter = 5;
  opts.restarts = 0;
  const auto r = nelder_mead_2d(f, {10.0, 10.0}, {1.0, 1.0}, opts);
  EXPECT_LE(r.iterations, 5);
}

TEST(NelderMead, NonFiniteObjectiveThrows) {
  auto f = [](double, double) { return std::nan(""); };
  EXPECT_THROW(nelder_mead_2d(f, {0.0, 0.0}, {1.0, 1.0}), NumericalFailure);
}
