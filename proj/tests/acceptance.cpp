// Acceptance gate: one line of output per criterion, exit 0 iff all pass.
#include <bit>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "spin9/berger.hpp"
#include "spin9/exact_matrix.hpp"
#include "spin9/table.hpp"
#include "spin9/verify.hpp"

using namespace spin9;

namespace {

bool all_ok = true;

void criterion(int number, const std::string& name, bool passed,
               const std::string& detail = "") {
  std::cout << "criterion " << number << " (" << name
            << "): " << (passed ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n" << std::flush;
  if (!passed) all_ok = false;
}

KForm random_two_form(Lcg& rng, int dim) {
  KForm f(dim, 2);
  for (int t = 0; t < 2; ++t) {
    std::uint32_t bits = 0;
    while (std::popcount(bits) != 2) bits = rng.next() & ((1u << dim) - 1);
    f.add_term(bits, rng.next_rational(5));
  }
  return f;
}

Scalar scalar_pfaffian(const ExactMatrix& A, std::vector<int> rows) {
  if (rows.empty()) return 1;
  Scalar acc(0);
  for (std::size_t t = 1; t < rows.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t u = 1; u < rows.size(); ++u)
      if (u != t) rest.push_back(rows[u]);
    Scalar term = A.at(rows[0], rows[t]) * scalar_pfaffian(A, rest);
    acc += (t % 2 == 1) ? term : -term;
  }
  return acc;
}

bool oracle_checks() {
  // moment closed form vs the dedicated quadrature oracle lives in the unit
  // tests; here we cross-check the two pinned values and the combinatorial
  // oracles that back the characteristic polynomial machinery.
  bool ok = moment({0, 0, 0, 0, 0, 0, 0, 0}, 12).value == frac(1, 7920) &&
            moment({1, 0, 0, 0, 0, 0, 0, 0}, 12).value == frac(1, 110880);

  Lcg rng(61);
  for (int d = 2; d <= 5 && ok; ++d) {
    FormMatrix M(d, 8);
    for (int a = 1; a <= d; ++a)
      for (int b = a + 1; b <= d; ++b) M.set_entry(a, b, random_two_form(rng, 8));
    for (int two_k = 2; two_k <= d; two_k += 2) {
      KForm sum(8, 2 * two_k);
      for (std::uint32_t s = 0; s < (1u << d); ++s) {
        if (std::popcount(s) != two_k) continue;
        std::vector<int> subset;
        for (int i = 0; i < d; ++i)
          if (s & (1u << i)) subset.push_back(i + 1);
        KForm pf = pfaffian_wedge(M, subset);
        if (!(wedge(pf, pf) == leibniz_wedge_det(M, subset))) ok = false;
        sum += leibniz_wedge_det(M, subset);
      }
      if (!(charpoly_coeff(M, two_k) == sum)) ok = false;
    }
  }

  for (int n : {4, 6}) {
    ExactMatrix A(n);
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) {
        A.at(r, c) = rng.next_rational(9);
        A.at(c, r) = -A.at(r, c);
      }
    std::vector<int> rows(n);
    for (int r = 0; r < n; ++r) rows[r] = r;
    Scalar pf = scalar_pfaffian(A, rows);
    if (!(pf * pf == A.det())) ok = false;
  }
  return ok;
}

}  // namespace

int main() {
  const BergerResult& b8 = berger8();
  Scalar c_mag = abs(b8.constant_c.value);
  criterion(1, "table reproduction",
            b8.normalized.term_count() == 702 &&
                table_diff(b8.normalized).empty() &&
                b8.normalized.coeff({1, 2, 3, 4, 5, 6, 7, 8}) == -14 &&
                c_mag == 110880 && b8.constant_c.pi_power == -4,
            "702 terms, anchor -14, |c| = 110880/pi^4");

  bool main_identity = Scalar(360) * b8.normalized == tau_psi(4) &&
                       tau_psi(4).coeff({1, 2, 3, 4, 5, 6, 7, 8}) == -5040;
  criterion(2, "main identity 360*Phi = tau_4(psi)", main_identity,
            "12870 blade comparisons, volume coefficient -5040");

  Report tau2 = verify_tau2();
  const KForm& t8 = tau_psi(8);
  criterion(3, "characteristic polynomial shape",
            tau2.ok() && tau_psi(2).is_zero() && tau_psi(6).is_zero() &&
                t8.term_count() == 1 &&
                t8.terms().begin()->first == t8.full_mask(),
            "tau_2 = tau_6 = 0, tau_8 proportional to the volume form");

  criterion(4, "Spin(7) suite", verify_spin7_identities().ok());

  criterion(5, "quaternionic and complex suites",
            verify_quaternion_identities().ok() &&
                verify_complex_identities().ok());

  criterion(6, "structure algebra",
            verify_algebra(20, 1).ok() && verify_structures().ok());

  criterion(7, "invariance", verify_invariance(b8.normalized, 20, 1).ok(),
            "20 generators on 20 rational 8-tuples, plus self-duality");

  FamilyCensus census = classify_families(b8.normalized);
  criterion(8, "family census",
            verify_families(b8.normalized).ok() && census.total() == 702,
            census.str());

  criterion(9, "combinatorial oracles", oracle_checks(),
            "moment pinned values, charpoly vs Leibniz, Pf^2 = det");

  // lambda with tau_4 ^ tau_4 = lambda * tau_8: computed exactly and
  // reported; the cohomological prediction for the compact model is 12.
  KForm t4sq = wedge(tau_psi(4), tau_psi(4));
  bool proportional = false;
  Scalar lambda(0);
  if (t8.term_count() == 1 && t4sq.term_count() == 1 &&
      t4sq.terms().begin()->first == t8.terms().begin()->first) {
    lambda = t4sq.terms().begin()->second / t8.terms().begin()->second;
    proportional = true;
  }
  criterion(10, "flat-model lambda report", proportional,
            "lambda = " + lambda.get_str() + ", cohomological prediction 12");

  return all_ok ? 0 : 1;
}
