#pragma once

#include <functional>
#include <vector>

#include "vexloci/fraction.hpp"
#include "vexloci/identities.hpp"

namespace vexloci {

// Value of an integrand at fixed point i (0-based), as a factored fraction.
using PointIntegrand = std::function<FactoredFraction(int i, AtomTable& atoms)>;

// x_j + (-x_i/(1 + b x_i)) + b x_j (-x_i/(1 + b x_i)) = (x_j - x_i)/(1 + b x_i)
FactoredFraction fgl_minus(AtomTable& atoms, int xj, int xi);
// (-x)^k / (1 + b x)^k, the k-th power of the dual root of x
FactoredFraction dual_power(AtomTable& atoms, int x, int k);

// P(E) for E split with the given root variables. The fixed point i is
// S = L_i with h = c_1(S^*) restricting to the dual root of x_i.
FactoredFraction projective_sum(AtomTable& atoms, const std::vector<int>& roots, const PointIntegrand& g);
// Integrand sum_k coeffs[k] h^k with coefficients pulled back from the base.
PointIntegrand h_polynomial(const std::vector<ExactPoly>& coeffs, const std::vector<int>& roots);
// Reduced sum expanded to the bound; throws std::domain_error when a
// non-unit denominator survives.
ExactPoly pushforward_projective(AtomTable& atoms, const std::vector<int>& roots, const PointIntegrand& g,
                                 int max_root_degree);

// Quadric bundle Q(V), V = F + F^*, F = L_1 + ... + L_n with c_1(L_j) = z_j.
// E = sum_{i in I} L_i + sum_{i not in I} L_i^*, so dim(E cap F) = |I|.
struct QuadricFixture {
  VarTablePtr vars;
  std::vector<int> z;  // variable indices
  std::vector<int> I;  // 0-based, sorted

  int n() const { return static_cast<int>(z.size()); }
  bool in_I(int j) const;
};

// A root of V in the frame: z_j or its dual.
struct FrameRoot {
  int j = 0;
  bool dual = false;
};

// w + h at the fixed point p_i, where h restricts to the dual of z_i.
FactoredFraction fgl_weight(AtomTable& atoms, const QuadricFixture& q, FrameRoot w, int i);
// e|_i f|_i / c_top(T_i Q) for i in I.
FactoredFraction quadric_ratio(AtomTable& atoms, const QuadricFixture& q, int i);
// sum over i in I of integrand(i) e|_i f|_i / c_top(T_i Q); the integrand
// multiplies e f.
FactoredFraction quadric_sum(AtomTable& atoms, const QuadricFixture& q, const PointIntegrand& g);
ExactPoly pushforward_quadric(AtomTable& atoms, const QuadricFixture& q, const PointIntegrand& g,
                              int max_root_degree);
// Variables b, z1..zn and a spare u.
QuadricFixture make_quadric(int n, const std::vector<int>& I);

// sum_{i in I} prod_{j in I, j != i} (-z_i-z_j-b z_i z_j)/((1+b z_j)(z_j-z_i))
// equals 1 for odd |I| and 1 - prod 1/(1+b z_i) for even |I|.
IdentityResult verify_localization_identity(int size);

}  // namespace vexloci
