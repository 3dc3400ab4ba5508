#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rpgauss {

// Dense row-major matrix for the small (2N x 2N) systems used by the Epps test.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;  // column j is the eigenvector for values[j]
};

// Cyclic Jacobi rotations; input must be square and symmetric.
SymmetricEigen jacobi_eigen(const Matrix& m);

// Moore-Penrose inverse of a symmetric matrix. Eigenvalues with
// |e| < tol_rel * max|e| are treated as zero.
Matrix pseudo_inverse(const Matrix& m, double tol_rel = 1e-12);

}  // namespace rpgauss
