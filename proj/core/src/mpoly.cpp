#include "spin9/mpoly.hpp"

namespace spin9 {

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim()) throw DimMismatch("PolyForm wedge: dims differ");
  PolyForm out(a.dim(), a.grade() + b.grade());
  for (const auto& [ab, ap] : a.terms())
    for (const auto& [bb, bp] : b.terms()) {
      if (ab & bb) continue;
      MPoly prod = ap * bp;
      if (merge_sign(ab, bb) < 0) {
        MPoly neg;
        for (const auto& [k, c] : prod.terms()) neg.add_term(k, -c);
        prod = std::move(neg);
      }
      out.add_term(ab | bb, prod);
    }
  return out;
}

}  // namespace spin9
