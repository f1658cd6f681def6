#pragma once

#include <string>
#include <vector>

#include "vexloci/series.hpp"

namespace vexloci {

struct IdentityResult {
  bool holds = true;
  std::string detail;
};

// prod_{i<j} (1-R_ij)/(1+R_ij-bT_i) versus the Pfaffian of the same operators
// (augmented by entries 1 when k is odd), both applied to `seed`.
IdentityResult verify_knuth(int k, int N, const ClassSeries& seed);

// H_xy H_xz H_yz = H_yz - (2d_x-1)(2d_y-1) H_xz + (2d_x-1)(2d_y-1) H_xy with
// H_xy = (T_y - d_x d_y T_x) / (T_y + d_x d_y T_x (1 - b T_y)), checked at the
// eight points d in {0,1}^3 by cross-multiplication. `beta_zero` sets b = 0.
IdentityResult verify_H_identity(bool beta_zero = false);

// Perfect matchings of {0..n-1} with their Pfaffian signs.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  int sign = 1;
};
std::vector<Matching> perfect_matchings(int n);

}  // namespace vexloci
