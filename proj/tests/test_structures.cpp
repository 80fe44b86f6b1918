#include <doctest.h>

#include "spin9/structures.hpp"
#include "spin9/verify.hpp"

using namespace spin9;

namespace {

ExactMatrix blocks(const ExactMatrix& a, const ExactMatrix& b,
                   const ExactMatrix& c, const ExactMatrix& d) {
  return ExactMatrix::from_blocks(a, b, c, d);
}

}  // namespace

TEST_CASE("right multiplication matrices") {
  ExactMatrix id4 = ExactMatrix::identity(4), z4(4);
  CHECK(right_mult_matrix(Octonion::unit(1)) == ExactMatrix::identity(8));
  CHECK(right_mult_matrix(Octonion::unit(5)) == blocks(z4, -id4, id4, z4));
  CHECK(right_mult_matrix(Octonion::unit(2)) ==
        blocks(quaternion_right_mult(1), z4, z4, -quaternion_right_mult(1)));
}

TEST_CASE("quaternion multiplication matrices match the derived path") {
  for (int u = 1; u <= 3; ++u) {
    CHECK(quaternion_right_mult(u) ==
          quaternion_right_mult_derived(Quaternion::unit(u + 1)));
    CHECK(quaternion_left_mult(u) ==
          quaternion_left_mult_derived(Quaternion::unit(u + 1)));
  }
}

TEST_CASE("involutions") {
  ExactMatrix id8 = ExactMatrix::identity(8), z8(8);
  CHECK(involution(StructureFamily::Spin9, 9) == blocks(id8, z8, z8, -id8));
  ExactMatrix id2 = ExactMatrix::identity(2), z2(2);
  CHECK(involution(StructureFamily::ComplexHopf, 1) == blocks(z2, id2, id2, z2));
  CHECK_THROWS_AS(involution(StructureFamily::Spin7, 1), Spin7HasNoInvolutions);

  for (StructureFamily fam :
       {StructureFamily::ComplexHopf, StructureFamily::QuaternionHopf,
        StructureFamily::Spin9}) {
    const int d = family_count(fam);
    const int n = family_dim(fam);
    for (int a = 1; a <= d; ++a) {
      ExactMatrix I = involution(fam, a);
      CHECK(I.is_symmetric());
      CHECK(I.is_orthogonal());
      CHECK(I * I == ExactMatrix::identity(n));
      for (int b = a + 1; b <= d; ++b) {
        ExactMatrix J = involution(fam, b);
        CHECK(I * J == -(J * I));
      }
    }
  }
}

TEST_CASE("composed complex structures") {
  ExactMatrix id8 = ExactMatrix::identity(8), z8(8), z4(4);
  CHECK(complex_structure(StructureFamily::Spin9, 1, 9) ==
        blocks(z8, -id8, id8, z8));
  ExactMatrix ri = right_mult_matrix(Octonion::unit(2));
  CHECK(complex_structure(StructureFamily::Spin9, 1, 2) ==
        blocks(ri, z8, z8, -ri));
  CHECK(complex_structure(StructureFamily::QuaternionHopf, 3, 4) ==
        blocks(quaternion_right_mult(1), z4, z4, quaternion_right_mult(1)));
}

TEST_CASE("kahler forms of named structures") {
  CHECK(kahler_form(complex_structure(StructureFamily::Spin9, 1, 2)) ==
        parse_terms(16, "-12+34+56-78") - parse_terms(16, "-1'2'+3'4'+5'6'-7'8'"));
  CHECK(kahler_form(complex_structure(StructureFamily::Spin9, 1, 9)) ==
        parse_terms(16, "-11'-22'-33'-44'-55'-66'-77'-88'"));
  Spin7TwoForms tf = spin7_two_forms();
  CHECK(tf.phi[0] == parse_terms(8, "-12+34+56-78"));       // phi_i
  CHECK(tf.phi[3] == parse_terms(8, "-15-26-37-48"));       // phi_e
  CHECK(tf.phi21[4] == parse_terms(8, "-13+24-57+68"));     // phi''_j
}

TEST_CASE("kahler matrices") {
  const FormMatrix& psi = spin9_kahler_matrix();
  CHECK(psi.entry(7, 8) ==
        parse_terms(16, "+12+34+56+78") + parse_terms(16, "+1'2'+3'4'+5'6'+7'8'"));
  FormMatrix theta = kahler_matrix(StructureFamily::QuaternionHopf);
  CHECK(theta.entry(1, 5) == parse_terms(8, "-15-26-37-48"));
  FormMatrix vphi = kahler_matrix(StructureFamily::Spin7);
  Spin7TwoForms tf = spin7_two_forms();
  CHECK(vphi.entry(6, 7) == -tf.phi21[0]);  // varphi_{gh} = -phi'_i
}

TEST_CASE("quaternionic kahler identities") {
  FormMatrix theta = kahler_matrix(StructureFamily::QuaternionHopf);
  auto lift = [](const ExactMatrix& A) {
    return ExactMatrix::from_blocks(A, ExactMatrix(A.n()), ExactMatrix(A.n()), A);
  };
  CHECK(kahler_form(lift(quaternion_right_mult(1))) == theta.entry(3, 4));
  CHECK(kahler_form(lift(quaternion_right_mult(2))) == -theta.entry(2, 4));
  CHECK(kahler_form(lift(quaternion_right_mult(3))) == theta.entry(2, 3));
}

TEST_CASE("sphere generators") {
  ExactMatrix id8 = ExactMatrix::identity(8), z8(8);
  CHECK(generator(1, Octonion{}) == blocks(id8, z8, z8, -id8));
  CHECK(generator(0, Octonion::unit(1)) == blocks(z8, id8, id8, z8));

  Octonion u = frac(4, 5) * Octonion::unit(2);
  ExactMatrix G = generator(frac(3, 5), u);
  CHECK(G.is_symmetric());
  CHECK(G.is_orthogonal());
  CHECK(G * G == ExactMatrix::identity(16));
  CHECK_THROWS_AS(generator(1, Octonion::unit(2)), NotOnSphere);
}

TEST_CASE("rational sphere points") {
  auto [r0, u0] = rational_sphere_point({0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(r0 == 1);
  CHECK(u0 == Octonion{});

  auto [r1, u1] = rational_sphere_point({1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(r1 == 0);
  CHECK(u1 == Octonion::unit(1));

  auto [r2, u2] = rational_sphere_point({1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(r2 == frac(-1, 3));
  CHECK(u2 == Octonion::from_coords(
                  {frac(2, 3), frac(2, 3), 0, 0, 0, 0, 0, 0}));
  CHECK(r2 * r2 + u2.norm() == 1);
}
