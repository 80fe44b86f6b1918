#include "spin9/cayley.hpp"

#include <algorithm>
#include <set>

namespace spin9 {

Quaternion Quaternion::unit(int index) {
  Quaternion q;
  switch (index) {
    case 1: q.a = 1; break;
    case 2: q.b = 1; break;
    case 3: q.c = 1; break;
    case 4: q.d = 1; break;
    default: throw IndexOutOfRange("Quaternion::unit");
  }
  return q;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {a * o.a - b * o.b - c * o.c - d * o.d,
          a * o.b + b * o.a + c * o.d - d * o.c,
          a * o.c - b * o.d + c * o.a + d * o.b,
          a * o.d + b * o.c - c * o.b + d * o.a};
}

Octonion Octonion::unit(int index) {
  if (index < 1 || index > 8) throw IndexOutOfRange("Octonion::unit");
  return index <= 4 ? Octonion(Quaternion::unit(index), Quaternion())
                    : Octonion(Quaternion(), Quaternion::unit(index - 4));
}

Octonion Octonion::from_coords(const std::array<Scalar, 8>& c) {
  return {Quaternion(c[0], c[1], c[2], c[3]), Quaternion(c[4], c[5], c[6], c[7])};
}

std::array<Scalar, 8> Octonion::coords() const {
  return {h1.a, h1.b, h1.c, h1.d, h2.a, h2.b, h2.c, h2.d};
}

Octonion omul(const Octonion& x, const Octonion& y) {
  // (h1 h1' - conj(h2') h2) + (h2 conj(h1') + h2' h1) e
  return {x.h1 * y.h1 - y.h2.conj() * x.h2, x.h2 * y.h1.conj() + y.h2 * x.h1};
}

Octonion oconj(const Octonion& x) { return {x.h1.conj(), -x.h2}; }

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return omul(omul(x, y), z) - omul(x, omul(y, z));
}

Octonion cross(const Octonion& x, const Octonion& y) {
  if (!x.is_imaginary() || !y.is_imaginary())
    throw NonImaginaryInput("cross: arguments must be purely imaginary");
  Octonion p = omul(oconj(y), x);
  p.h1.a = 0;  // imaginary part
  return p;
}

Octonion double_cross(const Octonion& x, const Octonion& y, const Octonion& z) {
  Octonion t = omul(x, omul(oconj(y), z)) - omul(z, omul(oconj(y), x));
  return frac(1, 2) * t;
}

bool is_cayley_quadruple(const std::vector<int>& quad) {
  std::set<int> s(quad.begin(), quad.end());
  if (s.size() != 4) throw BadIndexSet("is_cayley_quadruple: need 4 distinct indices");
  for (int i : s)
    if (i < 1 || i > 8) throw BadIndexSet("is_cayley_quadruple: index out of 1..8");
  std::vector<int> idx(s.begin(), s.end());
  Octonion w = double_cross(Octonion::unit(idx[0]), Octonion::unit(idx[1]),
                            Octonion::unit(idx[2]));
  Octonion u = Octonion::unit(idx[3]);
  return w == u || w == -u;
}

}  // namespace spin9
