#include <doctest.h>

#include <cmath>
#include <functional>

#include "spin9/berger.hpp"
#include "spin9/verify.hpp"

using namespace spin9;

namespace {

// Gauss-Legendre nodes and weights on (-1, 1), computed by Newton iteration
// on the Legendre recurrence. The transformed integrand below is analytic,
// so the quadrature error decays geometrically in the point count.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0);
  w.assign(n, 0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2 / ((1 - z * z) * pp * pp);
  }
}

// Numeric value of the 2-variable moment integral
//   int_{R^2} m1^{2a1} m2^{2a2} (1 + m1^2 + m2^2)^{-N} dm1 dm2
// via the substitution m = sinh(u) on each axis (independent oracle for the
// closed form; no Gamma functions involved). The transformed integrand is
// entire in u and decays at least like exp(-3|u|) for every admissible
// instance, so truncating at |u| = 14 loses far less than the tolerance.
double numeric_moment2(int a1, int a2, int N) {
  static std::vector<double> x, w;
  if (x.empty()) gauss_legendre(240, x, w);
  const double cut = 14.0;  // map (-1,1) -> (-cut, cut)
  double total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double m1 = std::sinh(cut * x[i]), d1 = std::cosh(cut * x[i]);
    double row = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      double m2 = std::sinh(cut * x[j]), d2 = std::cosh(cut * x[j]);
      row += w[j] * std::pow(m2, 2 * a2) *
             std::pow(1 + m1 * m1 + m2 * m2, -N) * d2;
    }
    total += w[i] * std::pow(m1, 2 * a1) * d1 * row;
  }
  return total * cut * cut;
}

}  // namespace

TEST_CASE("moment closed form on the pinned instances") {
  // n = 8, all exponents zero, weight 12: pi^4 * 7!/11! = pi^4/7920
  ScaledScalar m0 = moment({0, 0, 0, 0, 0, 0, 0, 0}, 12);
  CHECK(m0.value == frac(1, 7920));
  CHECK(m0.pi_power == 4);

  // n = 8, one squared coordinate: pi^4/110880
  ScaledScalar m1 = moment({1, 0, 0, 0, 0, 0, 0, 0}, 12);
  CHECK(m1.value == frac(1, 110880));
  CHECK(m1.pi_power == 4);
}

TEST_CASE("moment throws on divergent exponent combinations") {
  CHECK_THROWS_AS(moment({0, 0, 0, 0, 0, 0, 0, 0}, 4), Divergent);
  CHECK_THROWS_AS(moment({5, 0}, 6), Divergent);
}

TEST_CASE("moment closed form agrees with numeric quadrature") {
  Lcg rng(41);
  const double pi = 3.14159265358979323846;
  int tested = 0;
  while (tested < 20) {
    int a1 = static_cast<int>(rng.next_int(0, 3));
    int a2 = static_cast<int>(rng.next_int(0, 3));
    int N = a1 + a2 + static_cast<int>(rng.next_int(2, 5));
    ScaledScalar exact = moment({a1, a2}, N);  // value * pi^1
    double closed = exact.value.get_d() * std::pow(pi, exact.pi_power);
    double numeric = numeric_moment2(a1, a2, N);
    CHECK(std::abs(closed - numeric) / std::abs(closed) < 1e-9);
    ++tested;
  }
}
