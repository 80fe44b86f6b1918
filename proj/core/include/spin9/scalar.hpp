#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace spin9 {

/// Exact rational scalar. Arbitrary-precision, always kept canonical
/// (positive denominator, gcd(num, den) = 1).
using Scalar = mpq_class;

inline Scalar frac(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

/// Parses "p/q" or "p".
inline Scalar parse_scalar(const std::string& text) {
  Scalar s;
  if (s.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  s.canonicalize();
  return s;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// value * pi^pi_power. Sums are only defined between equal pi powers.
struct ScaledScalar {
  Scalar value;
  int pi_power = 0;

  ScaledScalar() = default;
  ScaledScalar(Scalar v, int p) : value(std::move(v)), pi_power(p) {}

  ScaledScalar& operator+=(const ScaledScalar& other) {
    if (value == 0) {
      *this = other;
      return *this;
    }
    if (other.value == 0) return *this;
    if (pi_power != other.pi_power)
      throw std::invalid_argument("ScaledScalar: mismatched pi powers");
    value += other.value;
    return *this;
  }
  ScaledScalar operator*(const ScaledScalar& other) const {
    return {value * other.value, pi_power + other.pi_power};
  }
  ScaledScalar operator*(const Scalar& c) const { return {value * c, pi_power}; }
  bool operator==(const ScaledScalar& other) const {
    if (value == 0 && other.value == 0) return true;
    return value == other.value && pi_power == other.pi_power;
  }

  std::string str() const {
    std::string s = value.get_str();
    if (pi_power != 0 && value != 0)
      s += " * pi^" + std::to_string(pi_power);
    return s;
  }
};

}  // namespace spin9
