#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spin9/blade.hpp"
#include "spin9/errors.hpp"
#include "spin9/scalar.hpp"

namespace spin9 {

class ExactMatrix;

/// Homogeneous exterior form: sparse blade -> coefficient map with fixed
/// ambient dimension and grade. Zero coefficients are never stored, so
/// equality is map equality. The zero form keeps its dim and grade.
class KForm {
 public:
  KForm() = default;
  KForm(int dim, int grade) : dim_(dim), grade_(grade) {}

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }

  Scalar coeff(const Blade& b) const;
  Scalar coeff(std::initializer_list<int> indices) const {
    return coeff(Blade(dim_, indices));
  }

  /// Adds c * blade(bits); erases the entry if the sum cancels.
  void add_term(std::uint32_t bits, const Scalar& c);

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm& operator*=(const Scalar& c);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Scalar& c, KForm a) { return a *= c; }
  KForm operator-() const;
  bool operator==(const KForm& other) const;

  /// Blades of the first form where the two differ (symmetric difference of
  /// coefficients); empty iff equal up to representation.
  std::vector<Blade> diff(const KForm& other) const;

  std::string str() const;

  std::uint32_t full_mask() const { return (1u << dim_) - 1; }

 private:
  int dim_ = 0;
  int grade_ = 0;
  std::map<std::uint32_t, Scalar> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm wedge_square(const KForm& a);
KForm hodge_star(const KForm& a);

/// Evaluates the form on grade-many coordinate vectors, each of length dim.
Scalar evaluate(const KForm& a, const std::vector<std::vector<Scalar>>& vectors);

/// Pullback along the linear map x -> Ax.
KForm pullback(const KForm& a, const ExactMatrix& A);

/// Rank of the Gram matrix of the forms under the inner product making
/// distinct blades orthonormal. All forms must share dim and grade.
int gram_rank(const std::vector<KForm>& forms);

}  // namespace spin9
