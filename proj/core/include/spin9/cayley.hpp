#pragma once

#include <array>
#include <vector>

#include "spin9/errors.hpp"
#include "spin9/scalar.hpp"

namespace spin9 {

/// Exact quaternion over basis 1, i, j, k.
struct Quaternion {
  Scalar a, b, c, d;

  Quaternion() : a(0), b(0), c(0), d(0) {}
  Quaternion(Scalar a_, Scalar b_, Scalar c_, Scalar d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion unit(int index);  // 1..4 -> 1, i, j, k

  Quaternion conj() const { return {a, -b, -c, -d}; }
  Scalar norm() const { return a * a + b * b + c * c + d * d; }

  Quaternion operator+(const Quaternion& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  Quaternion operator-(const Quaternion& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
  }
  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  Quaternion operator*(const Quaternion& o) const;
  friend Quaternion operator*(const Scalar& s, const Quaternion& q) {
    return {s * q.a, s * q.b, s * q.c, s * q.d};
  }
  bool operator==(const Quaternion&) const = default;
};

/// Exact octonion as a quaternion pair x = h1 + h2*e. The flat coordinate
/// basis is 1, i, j, k, e, f, g, h with f = ie, g = je, h = ke.
struct Octonion {
  Quaternion h1, h2;

  Octonion() = default;
  Octonion(Quaternion q1, Quaternion q2)
      : h1(std::move(q1)), h2(std::move(q2)) {}

  static Octonion unit(int index);  // 1..8 over the flat basis
  static Octonion from_coords(const std::array<Scalar, 8>& c);
  std::array<Scalar, 8> coords() const;

  Scalar real() const { return h1.a; }
  bool is_imaginary() const { return h1.a == 0; }
  Scalar norm() const { return h1.norm() + h2.norm(); }

  Octonion operator+(const Octonion& o) const { return {h1 + o.h1, h2 + o.h2}; }
  Octonion operator-(const Octonion& o) const { return {h1 - o.h1, h2 - o.h2}; }
  Octonion operator-() const { return {-h1, -h2}; }
  friend Octonion operator*(const Scalar& s, const Octonion& x) {
    return {s * x.h1, s * x.h2};
  }
  bool operator==(const Octonion&) const = default;
};

Octonion omul(const Octonion& x, const Octonion& y);
Octonion oconj(const Octonion& x);

/// [x, y, z] = (xy)z - x(yz).
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

/// Im(conj(y) x) for purely imaginary x, y; throws NonImaginaryInput otherwise.
Octonion cross(const Octonion& x, const Octonion& y);

/// x * y * z = (x (conj(y) z) - z (conj(y) x)) / 2.
Octonion double_cross(const Octonion& x, const Octonion& y, const Octonion& z);

/// True iff the unit of the largest index equals +- the double cross product
/// of the other three (order-independent). Indices in {1..8}, exactly four.
bool is_cayley_quadruple(const std::vector<int>& quad);

}  // namespace spin9
