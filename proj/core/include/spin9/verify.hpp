#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spin9/berger.hpp"
#include "spin9/form_matrix.hpp"
#include "spin9/kform.hpp"

namespace spin9 {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void record(const std::string& name, bool passed, std::string detail = "");
  bool ok() const;
  /// Throws VerificationFailed naming the first failing check.
  void require() const;
  std::string str() const;
};

/// Deterministic 64-bit linear congruential generator (Knuth's MMIX
/// constants); all pseudo-random test data flows through this.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint32_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state >> 33);
  }
  long next_int(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint32_t>(hi - lo + 1));
  }
  Scalar next_rational(long height) {
    return frac(next_int(-height, height), next_int(1, height));
  }
};

/// Parses a sum of signed monomial blades like "-12+34+56-78" or
/// "+121'2'-123'4'"; a prime shifts the preceding index by 8. An optional
/// integer magnitude may prefix a blade, as in "-12*1234".
KForm parse_terms(int dim, const std::string& text);

/// Shared exact artifacts, computed once per process.
const FormMatrix& spin9_kahler_matrix();
const KForm& tau_psi(int two_k);        // charpoly coefficients of psi
const BergerResult& berger8();          // the dim-8 Berger integral

// Verification suites. Each returns a full report; nothing throws unless
// stated. Use Report::require() to turn failures into exceptions.
Report verify_algebra(int trials, std::uint64_t seed);
Report verify_structures();
Report verify_tau2();
Report verify_spin7_identities();
Report verify_quaternion_identities();
Report verify_complex_identities();
Report verify_main_theorem();

struct FamilyCensus {
  std::array<int, 8> counts{};
  int cayley_in_family2 = 0;
  int cayley_in_family3 = 0;
  int total() const;
  std::string str() const;  // "2/70/70/336/28/28/84/84"
};

/// Partitions the monomials of an 8-form on R^16 into the eight families by
/// unprimed/primed index coincidences and Cayley-quadruple tests. Throws
/// UnclassifiableMonomial if a nonzero term fits no family.
FamilyCensus classify_families(const KForm& phi);

Report verify_families(const KForm& phi);
Report verify_invariance(const KForm& phi, int trials, std::uint64_t seed);

}  // namespace spin9
