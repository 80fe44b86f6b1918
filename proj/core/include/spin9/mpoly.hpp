#pragma once

#include <cstdint>
#include <map>

#include "spin9/kform.hpp"

namespace spin9 {

/// Sparse polynomial in up to 8 variables m_1..m_8 with rational
/// coefficients. An exponent vector packs into a uint64_t, one byte per
/// variable (degrees stay tiny here).
class MPoly {
 public:
  static std::uint64_t pack(int var, int exp = 1) {
    return static_cast<std::uint64_t>(exp) << (8 * (var - 1));
  }
  static int exponent(std::uint64_t key, int var) {
    return static_cast<int>((key >> (8 * (var - 1))) & 0xff);
  }

  static MPoly constant(const Scalar& c) {
    MPoly p;
    p.add_term(0, c);
    return p;
  }
  static MPoly monomial(std::uint64_t key, const Scalar& c) {
    MPoly p;
    p.add_term(key, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }

  void add_term(std::uint64_t key, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }

  /// this * (c * m^key); exponent bytes cannot overflow at our degrees.
  MPoly times_monomial(std::uint64_t key, const Scalar& c) const {
    MPoly out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k + key, v * c);
    return out;
  }

  MPoly operator*(const MPoly& other) const {
    MPoly out;
    for (const auto& [k, c] : other.terms_) out += times_monomial(k, c);
    return out;
  }

  bool operator==(const MPoly&) const = default;

 private:
  std::map<std::uint64_t, Scalar> terms_;
};

/// Exterior form whose blade coefficients are polynomials in m_1..m_8.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int dim, int grade) : dim_(dim), grade_(grade) {}

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const std::map<std::uint32_t, MPoly>& terms() const { return terms_; }

  void add_term(std::uint32_t bits, const MPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(bits, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool operator==(const PolyForm&) const = default;

 private:
  int dim_ = 0;
  int grade_ = 0;
  std::map<std::uint32_t, MPoly> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

}  // namespace spin9
