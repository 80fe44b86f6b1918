#include "spin9/kform.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "spin9/exact_matrix.hpp"

namespace spin9 {

Scalar KForm::coeff(const Blade& b) const {
  auto it = terms_.find(b.bits);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void KForm::add_term(std::uint32_t bits, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(bits, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KForm& KForm::operator+=(const KForm& other) {
  if (dim_ != other.dim_ || grade_ != other.grade_)
    throw DimMismatch("KForm +: shapes differ");
  for (const auto& [bits, c] : other.terms_) add_term(bits, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& other) {
  if (dim_ != other.dim_ || grade_ != other.grade_)
    throw DimMismatch("KForm -: shapes differ");
  for (const auto& [bits, c] : other.terms_) add_term(bits, -c);
  return *this;
}

KForm& KForm::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [bits, v] : terms_) v *= c;
  return *this;
}

KForm KForm::operator-() const {
  KForm out(dim_, grade_);
  for (const auto& [bits, c] : terms_) out.terms_.emplace(bits, -c);
  return out;
}

bool KForm::operator==(const KForm& other) const {
  return dim_ == other.dim_ && grade_ == other.grade_ && terms_ == other.terms_;
}

std::vector<Blade> KForm::diff(const KForm& other) const {
  std::vector<Blade> out;
  for (const auto& [bits, c] : terms_)
    if (other.coeff(Blade(dim_, bits)) != c) out.emplace_back(dim_, bits);
  for (const auto& [bits, c] : other.terms_)
    if (terms_.find(bits) == terms_.end()) out.emplace_back(dim_, bits);
  return out;
}

std::string KForm::str() const {
  if (terms_.empty()) return "0";
  // Terms sorted lexicographically on their index lists.
  std::vector<std::uint32_t> order;
  order.reserve(terms_.size());
  for (const auto& [bits, c] : terms_) order.push_back(bits);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return Blade(dim_, x).indices() < Blade(dim_, y).indices();
  });
  std::string s;
  for (std::uint32_t bits : order) {
    const Scalar& c = terms_.at(bits);
    Scalar m = abs(c);
    std::string mag = m.get_str();
    if (!s.empty()) s += ' ';
    s += (c < 0) ? '-' : '+';
    s += mag == "1" ? "" : mag + "*";
    s += Blade(dim_, bits).str();
  }
  return s;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimMismatch("wedge: ambient dims differ");
  KForm out(a.dim(), a.grade() + b.grade());
  if (out.grade() > a.dim()) return out;
  for (const auto& [ab, ac] : a.terms())
    for (const auto& [bb, bc] : b.terms()) {
      if (ab & bb) continue;
      out.add_term(ab | bb, Scalar(merge_sign(ab, bb)) * ac * bc);
    }
  return out;
}

KForm wedge_square(const KForm& a) { return wedge(a, a); }

KForm hodge_star(const KForm& a) {
  KForm out(a.dim(), a.dim() - a.grade());
  const std::uint32_t full = a.full_mask();
  for (const auto& [bits, c] : a.terms()) {
    std::uint32_t comp = full & ~bits;
    out.add_term(comp, Scalar(merge_sign(bits, comp)) * c);
  }
  return out;
}

Scalar evaluate(const KForm& a, const std::vector<std::vector<Scalar>>& vectors) {
  const int k = a.grade();
  if (static_cast<int>(vectors.size()) != k)
    throw GradeMismatch("evaluate: expected grade-many vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != a.dim())
      throw DimMismatch("evaluate: vector length != dim");
  Scalar total = 0;
  std::vector<std::vector<Scalar>> sub(k, std::vector<Scalar>(k));
  for (const auto& [bits, c] : a.terms()) {
    auto idx = Blade(a.dim(), bits).indices();
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col) sub[r][col] = vectors[col][idx[r] - 1];
    total += c * det(sub);
  }
  return total;
}

KForm pullback(const KForm& a, const ExactMatrix& A) {
  if (A.n() != a.dim()) throw DimMismatch("pullback: matrix size != dim");
  const int k = a.grade();
  KForm out(a.dim(), k);
  if (k == 0) return a;
  // Enumerate grade-k column subsets once; reuse across source blades.
  std::vector<std::uint32_t> subsets;
  std::uint32_t full = a.full_mask();
  for (std::uint32_t s = 0; s <= full; ++s)
    if (std::popcount(s) == k) subsets.push_back(s);
  for (const auto& [rows, c] : a.terms())
    for (std::uint32_t cols : subsets) {
      Scalar m = A.minor_det(rows, cols);
      if (m != 0) out.add_term(cols, c * m);
    }
  return out;
}

int gram_rank(const std::vector<KForm>& forms) {
  if (forms.empty()) return 0;
  for (const auto& f : forms)
    if (f.dim() != forms[0].dim() || f.grade() != forms[0].grade())
      throw MixedShapes("gram_rank: forms have mixed shapes");
  const int n = static_cast<int>(forms.size());
  std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar dot = 0;
      for (const auto& [bits, c] : forms[i].terms()) {
        Scalar other = forms[j].coeff(Blade(forms[j].dim(), bits));
        if (other != 0) dot += c * other;
      }
      gram[i][j] = dot;
      gram[j][i] = dot;
    }
  return rank(std::move(gram));
}

}  // namespace spin9
