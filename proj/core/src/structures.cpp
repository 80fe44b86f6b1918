#include "spin9/structures.hpp"

namespace spin9 {

int family_dim(StructureFamily f) {
  switch (f) {
    case StructureFamily::ComplexHopf: return 4;
    case StructureFamily::QuaternionHopf: return 8;
    case StructureFamily::Spin9: return 16;
    case StructureFamily::Spin7: return 8;
  }
  throw IndexOutOfRange("family_dim");
}

int family_count(StructureFamily f) {
  switch (f) {
    case StructureFamily::ComplexHopf: return 3;
    case StructureFamily::QuaternionHopf: return 5;
    case StructureFamily::Spin9: return 9;
    case StructureFamily::Spin7: return 7;
  }
  throw IndexOutOfRange("family_count");
}

namespace {

ExactMatrix from_rows4(const int (&rows)[4][4]) {
  ExactMatrix m(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

ExactMatrix quaternion_right_mult(int unit) {
  static const int ri[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  static const int rj[4][4] = {{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  static const int rk[4][4] = {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
  switch (unit) {
    case 1: return from_rows4(ri);
    case 2: return from_rows4(rj);
    case 3: return from_rows4(rk);
  }
  throw IndexOutOfRange("quaternion_right_mult: unit in 1..3");
}

ExactMatrix quaternion_left_mult(int unit) {
  static const int li[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  static const int lj[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  static const int lk[4][4] = {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  switch (unit) {
    case 1: return from_rows4(li);
    case 2: return from_rows4(lj);
    case 3: return from_rows4(lk);
  }
  throw IndexOutOfRange("quaternion_left_mult: unit in 1..3");
}

namespace {

std::array<Scalar, 4> qcoords(const Quaternion& q) { return {q.a, q.b, q.c, q.d}; }

}  // namespace

ExactMatrix quaternion_right_mult_derived(const Quaternion& q) {
  ExactMatrix m(4);
  for (int c = 0; c < 4; ++c) {
    auto col = qcoords(Quaternion::unit(c + 1) * q);
    for (int r = 0; r < 4; ++r) m.at(r, c) = col[r];
  }
  return m;
}

ExactMatrix quaternion_left_mult_derived(const Quaternion& q) {
  ExactMatrix m(4);
  for (int c = 0; c < 4; ++c) {
    auto col = qcoords(q * Quaternion::unit(c + 1));
    for (int r = 0; r < 4; ++r) m.at(r, c) = col[r];
  }
  return m;
}

ExactMatrix right_mult_matrix(const Octonion& u) {
  ExactMatrix m(8);
  for (int c = 0; c < 8; ++c) {
    auto col = omul(Octonion::unit(c + 1), u).coords();
    for (int r = 0; r < 8; ++r) m.at(r, c) = col[r];
  }
  return m;
}

namespace {

/// Real 2x2 form of multiplication by i on C.
ExactMatrix complex_i() {
  ExactMatrix m(2);
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  return m;
}

ExactMatrix hopf_involution(int alpha, int d, const ExactMatrix& ru) {
  const int half = ru.n();
  ExactMatrix zero(half), id = ExactMatrix::identity(half);
  if (alpha == 1) return ExactMatrix::from_blocks(zero, id, id, zero);
  if (alpha == d) return ExactMatrix::from_blocks(id, zero, zero, -id);
  return ExactMatrix::from_blocks(zero, -ru, ru, zero);
}

}  // namespace

ExactMatrix involution(StructureFamily family, int alpha) {
  if (family == StructureFamily::Spin7)
    throw Spin7HasNoInvolutions("Spin(7) admits no such involutions");
  const int d = family_count(family);
  if (alpha < 1 || alpha > d) throw IndexOutOfRange("involution: alpha");
  switch (family) {
    case StructureFamily::ComplexHopf:
      return hopf_involution(alpha, d, alpha == 2 ? complex_i() : ExactMatrix(2));
    case StructureFamily::QuaternionHopf:
      return hopf_involution(
          alpha, d, (alpha >= 2 && alpha <= 4) ? quaternion_right_mult(alpha - 1)
                                               : ExactMatrix(4));
    case StructureFamily::Spin9:
      return hopf_involution(
          alpha, d,
          (alpha >= 2 && alpha <= 8) ? right_mult_matrix(Octonion::unit(alpha))
                                     : ExactMatrix(8));
    default: break;
  }
  throw IndexOutOfRange("involution: family");
}

ExactMatrix complex_structure(StructureFamily family, int alpha, int beta) {
  const int d = family_count(family);
  if (!(1 <= alpha && alpha < beta && beta <= d))
    throw IndexOutOfRange("complex_structure: need 1 <= alpha < beta <= d");
  if (family == StructureFamily::Spin7)
    return right_mult_matrix(Octonion::unit(alpha + 1)) *
           right_mult_matrix(Octonion::unit(beta + 1));
  return involution(family, alpha) * involution(family, beta);
}

KForm kahler_form(const ExactMatrix& A) {
  if (!A.is_skew()) throw NotSkew("kahler_form: matrix not skew-symmetric");
  KForm out(A.n(), 2);
  for (int i = 0; i < A.n(); ++i)
    for (int j = i + 1; j < A.n(); ++j)
      out.add_term((1u << i) | (1u << j), A.at(i, j));
  return out;
}

FormMatrix kahler_matrix(StructureFamily family) {
  const int d = family_count(family);
  FormMatrix m(d, family_dim(family));
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      m.set_entry(a, b, kahler_form(complex_structure(family, a, b)));
  return m;
}

Spin7TwoForms spin7_two_forms() {
  Spin7TwoForms out;
  for (int u = 2; u <= 8; ++u)
    out.phi.push_back(kahler_form(right_mult_matrix(Octonion::unit(u))));
  // The 21 generators of the complementary component, printed constants.
  static const int pairs[7][4][2] = {
      {{1, 2}, {3, 4}, {5, 6}, {7, 8}}, {{1, 3}, {2, 4}, {5, 7}, {6, 8}},
      {{1, 4}, {2, 3}, {5, 8}, {6, 7}}, {{1, 5}, {2, 6}, {3, 7}, {4, 8}},
      {{1, 6}, {2, 5}, {3, 8}, {4, 7}}, {{1, 7}, {2, 8}, {3, 5}, {4, 6}},
      {{1, 8}, {2, 7}, {3, 6}, {4, 5}}};
  static const int signs[7][3][4] = {
      {{1, 1, 1, 1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}},    // i
      {{1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}},    // j
      {{1, 1, 1, 1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}},    // k
      {{-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}},  // e
      {{1, 1, 1, 1}, {-1, -1, 1, 1}, {-1, 1, 1, -1}},    // f
      {{1, 1, 1, 1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}},    // g
      {{1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}}};   // h
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 3; ++v) {
      KForm f(8, 2);
      for (int p = 0; p < 4; ++p)
        f.add_term((1u << (pairs[u][p][0] - 1)) | (1u << (pairs[u][p][1] - 1)),
                   Scalar(signs[u][v][p]));
      out.phi21.push_back(std::move(f));
    }
  return out;
}

ExactMatrix generator(const Scalar& r, const Octonion& u) {
  if (r * r + u.norm() != 1)
    throw NotOnSphere("generator: r^2 + N(u) must be 1");
  ExactMatrix ru = right_mult_matrix(u);
  ExactMatrix ruc = right_mult_matrix(oconj(u));
  ExactMatrix rid = ExactMatrix::identity(8) * r;
  return ExactMatrix::from_blocks(rid, ruc, ru, -rid);
}

std::pair<Scalar, Octonion> rational_sphere_point(const std::array<long, 8>& t) {
  Scalar s = 0;
  for (long v : t) s += Scalar(v) * Scalar(v);
  Scalar denom = 1 + s;
  std::array<Scalar, 8> coords;
  for (int i = 0; i < 8; ++i) coords[i] = frac(2 * t[i]) / denom;
  return {(1 - s) / denom, Octonion::from_coords(coords)};
}

}  // namespace spin9
