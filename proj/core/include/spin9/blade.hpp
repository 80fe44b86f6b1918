#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace spin9 {

/// Canonically ordered wedge of distinct coordinate 1-forms, stored as a
/// bitmask over {1..dim}: bit (i-1) set means dx_i is a factor.
struct Blade {
  int dim = 0;
  std::uint32_t bits = 0;

  Blade() = default;
  Blade(int d, std::uint32_t b) : dim(d), bits(b) {}
  Blade(int d, std::initializer_list<int> indices) : dim(d) {
    for (int i : indices) bits |= 1u << (i - 1);
  }

  int grade() const { return std::popcount(bits); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t t = bits; t; t &= t - 1)
      out.push_back(std::countr_zero(t) + 1);
    return out;
  }

  Blade complement() const {
    std::uint32_t full = (dim == 32) ? ~0u : ((1u << dim) - 1);
    return Blade(dim, full & ~bits);
  }

  bool operator==(const Blade&) const = default;
  auto operator<=>(const Blade&) const = default;

  /// Indices 9..16 rendered primed as 1'..8' (the R^16 coordinate split).
  std::string str() const {
    std::string s = "d";
    for (int i : indices()) {
      if (i > 8) {
        s += std::to_string(i - 8);
        s += '\'';
      } else {
        s += std::to_string(i);
      }
    }
    return s;
  }
};

/// Sign of sorting the concatenation (a, b) of two disjoint increasing index
/// lists into one increasing list: parity of the number of inversions.
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inv = 0;
  for (std::uint32_t t = b; t; t &= t - 1) {
    int j = std::countr_zero(t);
    inv += std::popcount(a >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

}  // namespace spin9
