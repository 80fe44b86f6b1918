#pragma once

#include <vector>

#include "spin9/kform.hpp"

namespace spin9 {

/// Skew-symmetric d x d matrix of 2-forms (a Kahler matrix).
class FormMatrix {
 public:
  FormMatrix() = default;
  /// Builds the zero matrix of 2-forms in the given ambient dim.
  FormMatrix(int d, int dim);

  int d() const { return d_; }
  int dim() const { return dim_; }

  const KForm& entry(int alpha, int beta) const;  // 1-based
  /// Sets entry (alpha, beta) with alpha < beta and mirrors -f at (beta, alpha).
  void set_entry(int alpha, int beta, const KForm& f);

  bool operator==(const FormMatrix&) const = default;

 private:
  int d_ = 0;
  int dim_ = 0;
  std::vector<KForm> e_;
};

/// Combinatorial Pfaffian of the restriction of M to the 1-based indices in
/// `subset` (even size), with products replaced by wedge. Grade-2 entries
/// commute under wedge, so no ordering convention is needed.
KForm pfaffian_wedge(const FormMatrix& M, const std::vector<int>& subset);

/// tau_{2k}(M): coefficient of t^{d-2k} in det(tI - M), computed as the sum
/// of squared wedge-Pfaffians over all 2k-element principal subsets.
KForm charpoly_coeff(const FormMatrix& M, int two_k);

/// Brute-force wedge determinant of the restriction of M to `subset`, by
/// Leibniz expansion. Test oracle for charpoly_coeff (det = Pf^2 on skew
/// matrices); exponential, keep subsets small.
KForm leibniz_wedge_det(const FormMatrix& M, const std::vector<int>& subset);

}  // namespace spin9
