#pragma once

#include <string>
#include <vector>

#include "vexloci/formulas.hpp"
#include "vexloci/identities.hpp"
#include "vexloci/poly.hpp"

namespace vexloci {

// Rank loci of a symmetric or skew-symmetric map W -> W^*, W split with the
// given roots (variable names, "~x" for a dual root). n = rank W.
struct GiambelliInput {
  VarTablePtr vars;
  std::vector<std::string> W;
  int r = 0;

  int n() const { return static_cast<int>(W.size()); }
  int corank() const { return n() - r; }
};

// Pf(m_ij) over c'_m = sum_k b^k c_{m+k}, c = c(W^* - W), lambda = (n-r, ..., 1).
// An odd matrix is bordered by m_0j = c'_{lambda_j}.
ExactPoly giambelli_sym(const GiambelliInput& in, int max_root_degree);
// 2^{-(n-r)} Pf(m_ij) over c'_m = c_m - sum_{k>0} 2^{-k} b^k c_{m+k}, lambda = (n-r-1, ..., 0),
// with the special last column. An odd matrix is bordered by m_0j = c'_{lambda_j}
// for j < n-r and m_{0,n-r} = 2.
ExactPoly giambelli_skew(const GiambelliInput& in, int max_root_degree);

// Triples of the two loci: (n-r, 1, 1) in type C and (n-r, 0, 0) in type D.
Triple giambelli_triple(LieType type, int corank);

// Specialized class_of for the triple above, every channel set to c(W^* - W)
// and, in type D, e_0 = (-1)^{n-r} c(W^*; b).
ExactPoly giambelli_reference(LieType type, const GiambelliInput& in, int max_root_degree, Mode mode,
                              const PfOptions& opt = {});

// giambelli_sym against the specialized Pfaffian (type C) or giambelli_skew
// against it (type D), in the requested normalization.
IdentityResult verify_giambelli(LieType type, const GiambelliInput& in, int max_root_degree,
                                const PfOptions& opt = {});

// W = w1..wn with variables b, w1..wn.
GiambelliInput giambelli_input(int n, int r);

}  // namespace vexloci
