#include "vexloci/identities.hpp"

#include <stdexcept>

#include "vexloci/fraction.hpp"
#include "vexloci/raising.hpp"

namespace vexloci {

std::vector<Matching> perfect_matchings(int n) {
  if (n % 2) throw std::invalid_argument("perfect matchings need an even count");
  std::vector<Matching> out;
  auto rec = [&](auto&& self, std::vector<int> rest, Matching cur) -> void {
    if (rest.empty()) {
      out.push_back(cur);
      return;
    }
    int i = rest[0];
    for (std::size_t t = 1; t < rest.size(); ++t) {
      Matching next = cur;
      next.pairs.emplace_back(i, rest[t]);
      if (t % 2 == 0) next.sign = -next.sign;
      std::vector<int> r2;
      for (std::size_t u = 1; u < rest.size(); ++u)
        if (u != t) r2.push_back(rest[u]);
      self(self, r2, next);
    }
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  rec(rec, all, Matching{});
  return out;
}

IdentityResult verify_knuth(int k, int N, const ClassSeries& seed) {
  if (k < 1 || k > seed.channels()) throw std::invalid_argument("verify_knuth: k outside the seed's channels");
  RaisingExpr prod;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) prod *= pair_factor(i, j);
  ClassSeries lhs = apply_raising(prod, seed, N);

  // channels 1..k, plus 0 for the augmentation
  const bool aug = k % 2 == 1;
  const int n = k + (aug ? 1 : 0);
  ClassSeries rhs(seed.channels());
  auto ms = perfect_matchings(n);
  for (const auto& m : ms) {
    RaisingExpr term;
    for (auto [a, b] : m.pairs) {
      int i = aug ? a : a + 1, j = aug ? b : b + 1;
      if (i > 0) term *= pair_factor(i, j);
    }
    rhs += apply_raising(term, seed, N) * Rational(m.sign);
  }
  auto cmp = compare_series(lhs, rhs, N);
  return {cmp.equal, std::to_string(ms.size()) + " matchings; " + cmp.describe()};
}

IdentityResult verify_H_identity(bool beta_zero) {
  auto vars = make_vars({{"b", -1}, {"Tx", 1}, {"Ty", 1}, {"Tz", 1}});
  auto one = RationalFunction::of(ExactPoly::constant(vars, 1));
  auto b = RationalFunction::of(beta_zero ? ExactPoly(vars) : ExactPoly::beta(vars));
  auto T = [&](const char* name) { return RationalFunction::of(ExactPoly::variable(vars, name)); };
  auto c = [&](long v) { return RationalFunction::of(ExactPoly::constant(vars, v)); };
  auto H = [&](const RationalFunction& tx, const RationalFunction& ty, int dx, int dy) {
    auto d = c(dx * dy);
    return (ty - d * tx) / (ty + d * tx * (one - b * ty));
  };
  IdentityResult out;
  out.detail = "";
  int passed = 0;
  for (int mask = 0; mask < 8; ++mask) {
    int dx = mask & 1, dy = mask >> 1 & 1, dz = mask >> 2 & 1;
    auto tx = T("Tx"), ty = T("Ty"), tz = T("Tz");
    auto hxy = H(tx, ty, dx, dy), hxz = H(tx, tz, dx, dz), hyz = H(ty, tz, dy, dz);
    auto eps = c((2 * dx - 1) * (2 * dy - 1));
    auto lhs = hxy * hxz * hyz;
    auto rhs = hyz - eps * hxz + eps * hxy;
    if (lhs.equals(rhs)) {
      ++passed;
    } else {
      out.holds = false;
      out.detail += "fails at d=(" + std::to_string(dx) + "," + std::to_string(dy) + "," + std::to_string(dz) + "); ";
    }
  }
  out.detail += std::to_string(passed) + "/8 evaluations hold";
  return out;
}

}  // namespace vexloci
