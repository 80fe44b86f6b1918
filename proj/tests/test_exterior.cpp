#include <doctest.h>

#include <bit>

#include "spin9/berger.hpp"
#include "spin9/exact_matrix.hpp"
#include "spin9/kform.hpp"
#include "spin9/structures.hpp"
#include "spin9/verify.hpp"

using namespace spin9;

namespace {

KForm blade_form(int dim, std::initializer_list<int> idx) {
  KForm f(dim, static_cast<int>(idx.size()));
  f.add_term(Blade(dim, idx).bits, 1);
  return f;
}

KForm random_form(Lcg& rng, int dim, int grade, int terms) {
  KForm f(dim, grade);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t bits = 0;
    while (std::popcount(bits) != grade)
      bits = rng.next() & ((1u << dim) - 1);
    f.add_term(bits, rng.next_rational(9));
  }
  return f;
}

}  // namespace

TEST_CASE("wedge of coordinate blades") {
  CHECK(wedge(blade_form(8, {1, 2}), blade_form(8, {3, 4})) ==
        blade_form(8, {1, 2, 3, 4}));
  CHECK(wedge(blade_form(8, {1, 2}), blade_form(8, {1, 2})).is_zero());
  CHECK(wedge(blade_form(8, {1, 3}), blade_form(8, {2, 4})) ==
        -blade_form(8, {1, 2, 3, 4}));
}

TEST_CASE("wedge is associative on random sparse triples") {
  Lcg rng(17);
  for (int t = 0; t < 100; ++t) {
    KForm a = random_form(rng, 8, 1, 3);
    KForm b = random_form(rng, 8, 2, 3);
    KForm c = random_form(rng, 8, 2, 3);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("hodge star on blades") {
  KForm top(16, 8);
  top.add_term(0xffu, 1);  // d12345678 in dim 16
  KForm primed(16, 8);
  primed.add_term(0xffu << 8, 1);  // d1'2'3'4'5'6'7'8'
  CHECK(hodge_star(top) == primed);
  CHECK(hodge_star(blade_form(8, {1, 2, 3, 4})) == blade_form(8, {5, 6, 7, 8}));
}

TEST_CASE("star of star is the sign of the grade split") {
  Lcg rng(23);
  for (int dim : {8, 16})
    for (int k = 0; k <= dim; ++k) {
      KForm a = random_form(rng, dim, k, 4);
      KForm ss = hodge_star(hodge_star(a));
      if ((k * (dim - k)) % 2 == 0)
        CHECK(ss == a);
      else
        CHECK(ss == -a);
    }
}

TEST_CASE("evaluate on coordinate vectors") {
  auto e = [](int dim, int i) {
    std::vector<Scalar> v(dim, 0);
    v[i - 1] = 1;
    return v;
  };
  KForm f = blade_form(8, {1, 2, 3, 4});
  CHECK(evaluate(f, {e(8, 1), e(8, 2), e(8, 3), e(8, 4)}) == 1);
  CHECK(evaluate(f, {e(8, 1), e(8, 1), e(8, 3), e(8, 4)}) == 0);
  CHECK(evaluate(spin7_form(), {e(8, 1), e(8, 2), e(8, 3), e(8, 4)}) == 1);
}

TEST_CASE("pullback") {
  Lcg rng(29);
  KForm a = random_form(rng, 8, 3, 5);
  CHECK(pullback(a, ExactMatrix::identity(8)) == a);

  ExactMatrix d = ExactMatrix::identity(4);
  d.at(0, 0) = 2;
  d.at(1, 1) = 3;
  CHECK(pullback(blade_form(4, {1, 2}), d) == Scalar(6) * blade_form(4, {1, 2}));
}

TEST_CASE("gram ranks of the structure 2-forms") {
  Spin7TwoForms tf = spin7_two_forms();
  CHECK(gram_rank(tf.phi) == 7);
  CHECK(gram_rank(tf.phi21) == 21);

  std::vector<KForm> both = tf.phi;
  both.insert(both.end(), tf.phi21.begin(), tf.phi21.end());
  CHECK(gram_rank(both) == 28);  // all of Lambda^2 R^8

  const FormMatrix& psi = spin9_kahler_matrix();
  std::vector<KForm> entries;
  for (int a = 1; a <= 9; ++a)
    for (int b = a + 1; b <= 9; ++b) entries.push_back(psi.entry(a, b));
  CHECK(gram_rank(entries) == 36);
}
