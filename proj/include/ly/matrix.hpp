#ifndef LY_MATRIX_HPP
#define LY_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ly/rational.hpp"

namespace ly {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec apply(const Vec& x) const;  // m * x
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rat& k) const;
  bool operator==(const Matrix& o) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

/// Commutator AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact rank over the rationals.
std::size_t rank(const Matrix& m);

/// Exact basis of the right null space, in reduced column echelon order.
/// Size is always cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some exact solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Exact inverse, or nullopt when singular. Requires a square matrix.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace ly

#endif
