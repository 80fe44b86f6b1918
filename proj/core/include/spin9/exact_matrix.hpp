#pragma once

#include <cstdint>
#include <vector>

#include "spin9/scalar.hpp"

namespace spin9 {

/// Dense n x n matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static ExactMatrix identity(int n);
  /// 2n x 2n block matrix [[A, B], [C, D]] from n x n blocks.
  static ExactMatrix from_blocks(const ExactMatrix& A, const ExactMatrix& B,
                                 const ExactMatrix& C, const ExactMatrix& D);

  int n() const { return n_; }
  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const Scalar& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }

  ExactMatrix operator*(const ExactMatrix& other) const;
  ExactMatrix operator+(const ExactMatrix& other) const;
  ExactMatrix operator-() const;
  ExactMatrix operator*(const Scalar& c) const;
  ExactMatrix transpose() const;
  bool operator==(const ExactMatrix& other) const = default;

  bool is_symmetric() const;
  bool is_skew() const;
  bool is_orthogonal() const;

  Scalar trace() const;
  /// tr(this^T other), the Frobenius pairing.
  Scalar frobenius(const ExactMatrix& other) const;

  Scalar det() const;
  /// Determinant of the submatrix with the given rows/columns (bitmask over
  /// {1..n}, equal popcounts).
  Scalar minor_det(std::uint32_t rows, std::uint32_t cols) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int n_ = 0;
  std::vector<Scalar> a_;
};

/// Determinant of a square matrix given as rows (used by form evaluation).
Scalar det(std::vector<std::vector<Scalar>> m);

/// Rank over the rationals.
int rank(std::vector<std::vector<Scalar>> m);

}  // namespace spin9
