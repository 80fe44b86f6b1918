#include "spin9/exact_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace spin9 {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_blocks(const ExactMatrix& A, const ExactMatrix& B,
                                     const ExactMatrix& C, const ExactMatrix& D) {
  int n = A.n();
  ExactMatrix m(2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = A.at(r, c);
      m.at(r, c + n) = B.at(r, c);
      m.at(r + n, c) = C.at(r, c);
      m.at(r + n, c + n) = D.at(r, c);
    }
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  ExactMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const Scalar& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < n_; ++c) {
        if (other.at(k, c) == 0) continue;
        out.at(r, c) += x * other.at(k, c);
      }
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

ExactMatrix ExactMatrix::operator*(const Scalar& c) const {
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = c * a_[i];
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool ExactMatrix::is_symmetric() const { return *this == transpose(); }

bool ExactMatrix::is_skew() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c <= r; ++c)
      if (at(r, c) != -at(c, r)) return false;
  return true;
}

bool ExactMatrix::is_orthogonal() const {
  return transpose() * *this == identity(n_);
}

Scalar ExactMatrix::trace() const {
  Scalar t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

Scalar ExactMatrix::frobenius(const ExactMatrix& other) const {
  Scalar t = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) t += a_[i] * other.a_[i];
  return t;
}

Scalar det(std::vector<std::vector<Scalar>> m) {
  const int n = static_cast<int>(m.size());
  Scalar result = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    Scalar inv = 1 / m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Scalar f = m[r][col] * inv;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

int rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rk]);
    Scalar inv = 1 / m[rk][col];
    for (int r = rk + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Scalar f = m[r][col] * inv;
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rk][c];
    }
    ++rk;
  }
  return rk;
}

Scalar ExactMatrix::det() const {
  std::vector<std::vector<Scalar>> m(n_, std::vector<Scalar>(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) m[r][c] = at(r, c);
  return spin9::det(std::move(m));
}

Scalar ExactMatrix::minor_det(std::uint32_t rows, std::uint32_t cols) const {
  const int k = std::popcount(rows);
  std::vector<int> ri, ci;
  for (std::uint32_t t = rows; t; t &= t - 1) ri.push_back(std::countr_zero(t));
  for (std::uint32_t t = cols; t; t &= t - 1) ci.push_back(std::countr_zero(t));
  std::vector<std::vector<Scalar>> m(k, std::vector<Scalar>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m[r][c] = at(ri[r], ci[c]);
  return spin9::det(std::move(m));
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("ExactMatrix::apply: size mismatch");
  std::vector<Scalar> out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

}  // namespace spin9
