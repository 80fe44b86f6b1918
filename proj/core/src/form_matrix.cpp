#include "spin9/form_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace spin9 {

FormMatrix::FormMatrix(int d, int dim) : d_(d), dim_(dim) {
  e_.assign(static_cast<std::size_t>(d) * d, KForm(dim, 2));
}

const KForm& FormMatrix::entry(int alpha, int beta) const {
  if (alpha < 1 || beta < 1 || alpha > d_ || beta > d_)
    throw IndexOutOfRange("FormMatrix::entry");
  return e_[static_cast<std::size_t>(alpha - 1) * d_ + (beta - 1)];
}

void FormMatrix::set_entry(int alpha, int beta, const KForm& f) {
  if (alpha < 1 || beta < 1 || alpha > d_ || beta > d_ || alpha == beta)
    throw IndexOutOfRange("FormMatrix::set_entry");
  if (f.grade() != 2 || f.dim() != dim_)
    throw DimMismatch("FormMatrix::set_entry: entries must be 2-forms in dim");
  e_[static_cast<std::size_t>(alpha - 1) * d_ + (beta - 1)] = f;
  e_[static_cast<std::size_t>(beta - 1) * d_ + (alpha - 1)] = -f;
}

namespace {

KForm pfaffian_rec(const FormMatrix& M, std::vector<int> idx) {
  if (idx.empty()) return KForm(M.dim(), 0);  // empty Pfaffian: handled by caller
  KForm acc(M.dim(), static_cast<int>(idx.size()));
  const int i0 = idx.front();
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const KForm& top = M.entry(i0, idx[t]);
    if (top.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t s = 1; s < idx.size(); ++s)
      if (s != t) rest.push_back(idx[s]);
    int sign = (t % 2 == 1) ? 1 : -1;
    if (rest.empty()) {
      acc += Scalar(sign) * top;
    } else {
      KForm sub = pfaffian_rec(M, std::move(rest));
      if (!sub.is_zero()) acc += Scalar(sign) * wedge(top, sub);
    }
  }
  return acc;
}

}  // namespace

KForm pfaffian_wedge(const FormMatrix& M, const std::vector<int>& subset) {
  if (subset.size() % 2 != 0)
    throw OddSubset("pfaffian_wedge: subset size must be even");
  if (subset.empty()) return KForm(M.dim(), 0);
  return pfaffian_rec(M, subset);
}

KForm charpoly_coeff(const FormMatrix& M, int two_k) {
  if (two_k % 2 != 0)
    throw OddCoefficientRequested("charpoly_coeff: odd coefficients vanish");
  if (two_k < 0 || two_k > M.d())
    throw IndexOutOfRange("charpoly_coeff: 2k out of range");
  KForm acc(M.dim(), 2 * two_k);
  if (two_k == 0) return acc;  // tau_0 is the scalar 1, not represented here
  std::vector<int> subset(two_k);
  // Iterate over all two_k-element subsets of {1..d}.
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    KForm pf = pfaffian_wedge(M, subset);
    if (!pf.is_zero()) acc += wedge(pf, pf);
    int i = two_k - 1;
    while (i >= 0 && subset[i] == M.d() - (two_k - 1 - i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < two_k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return acc;
}

KForm leibniz_wedge_det(const FormMatrix& M, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  KForm acc(M.dim(), 2 * k);
  do {
    // permutation sign by inversion count
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inv;
    KForm prod(M.dim(), 0);
    bool first = true;
    bool zero = false;
    for (int i = 0; i < k && !zero; ++i) {
      if (subset[i] == subset[perm[i]]) {
        zero = true;  // diagonal entry of a skew matrix
        break;
      }
      const KForm& f = M.entry(subset[i], subset[perm[i]]);
      if (f.is_zero()) {
        zero = true;
        break;
      }
      prod = first ? f : wedge(prod, f);
      first = false;
    }
    if (!zero && !first) acc += Scalar(inv % 2 ? -1 : 1) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace spin9
