#include "spin9/berger.hpp"

#include <numeric>

namespace spin9 {

std::vector<PolyForm> line_coframe(int algebra_dim) {
  const int k = algebra_dim;
  if (k != 2 && k != 4 && k != 8)
    throw DimMismatch("line_coframe: algebra_dim must be 2, 4 or 8");
  std::vector<PolyForm> out;
  for (int i = 1; i <= k; ++i) {
    PolyForm alpha(2 * k, 1);
    alpha.add_term(1u << (i - 1), MPoly::constant(1));
    // Complex and quaternionic lines are parameterized as {(x, mx)}, so the
    // i-th frame vector is (u_i, m u_i) with m u_i = sum_s m_s (u_s u_i);
    // each unit product hits a single coordinate. The octonionic table
    // corresponds to the opposite side, {(x, xm)} with frame (u_i, u_i m):
    // the two choices differ by the sign of 322 of the 702 coefficients of
    // the 8-form, and only the latter reproduces the tabulated form.
    for (int s = 1; s <= k; ++s) {
      auto prod = k == 8 ? omul(Octonion::unit(i), Octonion::unit(s))
                         : omul(Octonion::unit(s), Octonion::unit(i));
      auto coords = prod.coords();
      for (int j = 1; j <= k; ++j)
        if (coords[j - 1] != 0)
          alpha.add_term(1u << (k + j - 1),
                         MPoly::monomial(MPoly::pack(s), coords[j - 1]));
    }
    out.push_back(std::move(alpha));
  }
  return out;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class double_factorial_odd(int a) {  // (2a-1)!!, with (−1)!! = 1
  mpz_class f = 1;
  for (int t = 2 * a - 1; t > 0; t -= 2) f *= t;
  return f;
}

}  // namespace

ScaledScalar moment(const std::vector<int>& a, int N) {
  const int n = static_cast<int>(a.size());
  if (n % 2 != 0) throw DimMismatch("moment: n must be even here");
  int total = std::accumulate(a.begin(), a.end(), 0);
  for (int ai : a)
    if (ai < 0) throw Divergent("moment: negative exponent");
  if (2 * N <= n + 2 * total)
    throw Divergent("moment: integral diverges");
  // prod Gamma(a_i + 1/2) / Gamma(1/2)^n = prod (2a_i - 1)!! / 2^{a_i}
  Scalar value(1);
  for (int ai : a) {
    Scalar f(double_factorial_odd(ai));
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(ai));
    value *= f / Scalar(den);
  }
  // Gamma(N - n/2 - total) / Gamma(N), both integer arguments
  value *= Scalar(factorial(N - n / 2 - total - 1)) / Scalar(factorial(N - 1));
  value.canonicalize();
  return {value, n / 2};
}

BergerResult berger_form(int algebra_dim) {
  const int k = algebra_dim;
  auto coframe = line_coframe(k);
  PolyForm volume = coframe[0];
  for (int i = 1; i < k; ++i) volume = wedge(volume, coframe[i]);

  // Projector pullback and invariant line measure together weight the
  // integrand by (1 + |m|^2)^{-3k/2}.
  const int weight = k + k / 2;
  BergerResult result;
  result.raw = KForm(2 * k, k);
  result.raw_pi_power = k / 2;
  for (const auto& [bits, poly] : volume.terms()) {
    Scalar blade_value(0);
    for (const auto& [key, c] : poly.terms()) {
      std::vector<int> half(k);
      bool odd = false;
      for (int v = 1; v <= k && !odd; ++v) {
        int e = MPoly::exponent(key, v);
        if (e % 2 != 0) odd = true;
        half[v - 1] = e / 2;
      }
      if (odd) continue;  // odd moments vanish by symmetry
      blade_value += c * moment(half, weight).value;
    }
    result.raw.add_term(bits, blade_value);
  }

  // Normalize by pinning the coefficient of d(1..k) to the integer anchor:
  // +1 in dim 2, -6 in dim 4, -14 in dim 8. (A plain gcd reduction is wrong
  // in dim 4, where the right quaternionic form has all-even coefficients.)
  const Scalar target = k == 2 ? 1 : k == 4 ? -6 : -14;
  const std::uint32_t anchor = (1u << k) - 1;
  Scalar anchor_raw = result.raw.coeff(Blade(2 * k, anchor));
  Scalar scale = target / anchor_raw;
  result.normalized = KForm(2 * k, k);
  for (const auto& [bits, c] : result.raw.terms())
    result.normalized.add_term(bits, c * scale);
  result.constant_c = ScaledScalar(scale, -k / 2);
  return result;
}

KForm spin7_form() {
  KForm out(8, 4);
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b)
      for (int c = b + 1; c <= 8; ++c)
        for (int d = c + 1; d <= 8; ++d) {
          Octonion w = double_cross(Octonion::unit(b), Octonion::unit(c),
                                    Octonion::unit(d));
          Scalar coeff = w.coords()[a - 1];
          if (coeff != 0)
            out.add_term((1u << (a - 1)) | (1u << (b - 1)) | (1u << (c - 1)) |
                             (1u << (d - 1)),
                         coeff);
        }
  return out;
}

}  // namespace spin9
