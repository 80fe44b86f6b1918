#include <doctest.h>

#include <bit>
#include <vector>

#include "spin9/exact_matrix.hpp"
#include "spin9/form_matrix.hpp"
#include "spin9/verify.hpp"

using namespace spin9;

namespace {

ExactMatrix random_skew(Lcg& rng, int n) {
  ExactMatrix A(n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      A.at(r, c) = rng.next_rational(9);
      A.at(c, r) = -A.at(r, c);
    }
  return A;
}

// Scalar Pfaffian by recursive expansion along the first remaining index.
Scalar scalar_pfaffian(const ExactMatrix& A, std::vector<int> rows) {
  if (rows.empty()) return 1;
  Scalar acc(0);
  int a = rows.front();
  for (std::size_t t = 1; t < rows.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t u = 1; u < rows.size(); ++u)
      if (u != t) rest.push_back(rows[u]);
    Scalar term = A.at(a, rows[t]) * scalar_pfaffian(A, rest);
    acc += (t % 2 == 1) ? term : -term;
  }
  return acc;
}

Scalar scalar_pfaffian(const ExactMatrix& A) {
  std::vector<int> rows(A.n());
  for (int r = 0; r < A.n(); ++r) rows[r] = r;
  return scalar_pfaffian(A, rows);
}

KForm random_two_form(Lcg& rng, int dim, int terms) {
  KForm f(dim, 2);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t bits = 0;
    while (std::popcount(bits) != 2) bits = rng.next() & ((1u << dim) - 1);
    f.add_term(bits, rng.next_rational(5));
  }
  return f;
}

FormMatrix random_form_matrix(Lcg& rng, int d, int dim) {
  FormMatrix M(d, dim);
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) M.set_entry(a, b, random_two_form(rng, dim, 2));
  return M;
}

}  // namespace

TEST_CASE("pfaffian of a 2x2 block is the single entry") {
  Lcg rng(5);
  FormMatrix M(2, 8);
  KForm a = random_two_form(rng, 8, 3);
  M.set_entry(1, 2, a);
  CHECK(pfaffian_wedge(M, {1, 2}) == a);
}

TEST_CASE("pfaffian of the 4x4 principal block of psi") {
  const FormMatrix& psi = spin9_kahler_matrix();
  KForm expected = wedge(psi.entry(1, 2), psi.entry(3, 4)) -
                   wedge(psi.entry(1, 3), psi.entry(2, 4)) +
                   wedge(psi.entry(1, 4), psi.entry(2, 3));
  CHECK(pfaffian_wedge(psi, {1, 2, 3, 4}) == expected);
}

TEST_CASE("pfaffian with a zero row vanishes") {
  Lcg rng(9);
  FormMatrix M(4, 8);
  M.set_entry(1, 2, random_two_form(rng, 8, 2));
  M.set_entry(1, 3, random_two_form(rng, 8, 2));
  M.set_entry(2, 3, random_two_form(rng, 8, 2));
  // row/column 4 is identically zero
  CHECK(pfaffian_wedge(M, {1, 2, 3, 4}).is_zero());
}

TEST_CASE("squared pfaffian equals the Leibniz wedge determinant") {
  Lcg rng(13);
  for (int d = 2; d <= 5; ++d) {
    FormMatrix M = random_form_matrix(rng, d, 8);
    for (int two_k = 2; two_k <= d; two_k += 2) {
      KForm sum(8, 2 * two_k);
      // enumerate principal subsets of size two_k
      for (std::uint32_t s = 0; s < (1u << d); ++s) {
        if (std::popcount(s) != two_k) continue;
        std::vector<int> subset;
        for (int i = 0; i < d; ++i)
          if (s & (1u << i)) subset.push_back(i + 1);
        KForm pf = pfaffian_wedge(M, subset);
        CHECK(wedge(pf, pf) == leibniz_wedge_det(M, subset));
        sum += leibniz_wedge_det(M, subset);
      }
      CHECK(charpoly_coeff(M, two_k) == sum);
    }
  }
}

TEST_CASE("scalar pfaffian squared equals the determinant") {
  Lcg rng(21);
  for (int n : {4, 4, 6, 6}) {
    ExactMatrix A = random_skew(rng, n);
    Scalar pf = scalar_pfaffian(A);
    CHECK(pf * pf == A.det());
  }
}

TEST_CASE("exact matrix basics") {
  Lcg rng(31);
  ExactMatrix A = random_skew(rng, 4);
  CHECK(A.is_skew());
  CHECK(A.transpose() == -A);
  CHECK(ExactMatrix::identity(6).is_orthogonal());
  ExactMatrix B = ExactMatrix::from_blocks(ExactMatrix::identity(2),
                                           ExactMatrix(2), ExactMatrix(2),
                                           -ExactMatrix::identity(2));
  CHECK(B.n() == 4);
  CHECK(B.trace() == 0);
  CHECK(B.det() == 1);
}
