#pragma once

#include <vector>

#include "spin9/cayley.hpp"
#include "spin9/mpoly.hpp"

namespace spin9 {

/// Coframe of the projective line l_m = {(x, mx)} in A^2 for the algebra of
/// dimension k in {2, 4, 8}: alpha_i is the metric dual of the frame vector
/// (u_i, m u_i), with u_i running over the unit basis. Forms live in R^{2k};
/// coordinates k+1..2k are the primed block.
std::vector<PolyForm> line_coframe(int algebra_dim);

/// Integral of prod_i m_i^{2 a_i} * (1 + |m|^2)^{-N} over R^n as an exact
/// rational multiple of pi^{n/2}. Throws Divergent unless N > n/2 + sum(a).
ScaledScalar moment(const std::vector<int>& a, int N);

struct BergerResult {
  KForm raw;                 // rational parts; every coefficient carries
  int raw_pi_power = 0;      // the common factor pi^raw_pi_power
  KForm normalized;          // coprime integers, anchor sign fixed
  ScaledScalar constant_c;   // normalized = constant_c * raw
};

/// The Berger line-integral form for the algebra of dimension 2, 4 or 8:
/// the Kahler 2-form of C^2, the right quaternionic 4-form of H^2, or the
/// canonical 8-form of O^2.
BergerResult berger_form(int algebra_dim);

/// The structure 4-form on R^8 built from <e_a, e_b x e_c x e_d>.
KForm spin7_form();

}  // namespace spin9
