#pragma once

#include <array>
#include <utility>
#include <vector>

#include "spin9/cayley.hpp"
#include "spin9/exact_matrix.hpp"
#include "spin9/form_matrix.hpp"

namespace spin9 {

/// The four structure families built here. The first three are spanned by
/// anticommuting involutions (d of them); Spin7 instead uses the 7 right
/// multiplications by imaginary units and exposes no involutions.
enum class StructureFamily { ComplexHopf, QuaternionHopf, Spin9, Spin7 };

int family_dim(StructureFamily f);    // ambient dim: 4, 8, 16, 8
int family_count(StructureFamily f);  // d: 3, 5, 9, 7

/// 4x4 matrices of right/left quaternion multiplication, index 1..3 -> i,j,k.
ExactMatrix quaternion_right_mult(int unit);
ExactMatrix quaternion_left_mult(int unit);
/// Same matrices derived from quaternion arithmetic (cross-check path).
ExactMatrix quaternion_right_mult_derived(const Quaternion& q);
ExactMatrix quaternion_left_mult_derived(const Quaternion& q);

/// 8x8 matrix of x -> x*u in the flat octonion basis; linear in u.
ExactMatrix right_mult_matrix(const Octonion& u);

/// The alpha-th involution of the family (1-based). Spin7 has none.
ExactMatrix involution(StructureFamily family, int alpha);

/// J_{ab} = I_a I_b (a < b); for Spin7, R_{ab} = R_a R_b over units i..h.
ExactMatrix complex_structure(StructureFamily family, int alpha, int beta);

/// Kahler 2-form of a skew matrix: sum_{i<j} A_ij dx_i ^ dx_j,
/// i.e. omega(x, y) = <x, Ay>.
KForm kahler_form(const ExactMatrix& A);

/// The full d x d (7 x 7 for Spin7) matrix of Kahler forms.
FormMatrix kahler_matrix(StructureFamily family);

struct Spin7TwoForms {
  std::vector<KForm> phi;        // 7 forms, Kahler forms of R_i..R_h
  std::vector<KForm> phi21;      // 21 forms: phi', phi'', phi''' per unit
};
/// Both generator bases of the 7+21 split of 2-forms on R^8. The 21 forms
/// are the printed constants; kahler_matrix(Spin7) recovers them up to sign.
Spin7TwoForms spin7_two_forms();

/// Symmetric orthogonal involution [[r, R_conj(u)], [R_u, -r]] on R^16.
/// Requires r^2 + N(u) = 1 exactly.
ExactMatrix generator(const Scalar& r, const Octonion& u);

/// Stereographic rational point on S^8: ((1-|t|^2)/(1+|t|^2), 2t/(1+|t|^2)).
std::pair<Scalar, Octonion> rational_sphere_point(const std::array<long, 8>& t);

}  // namespace spin9
