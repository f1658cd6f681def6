#include "vexloci/localization.hpp"

#include <algorithm>
#include <stdexcept>

namespace vexloci {

namespace {

ExactPoly var(const VarTablePtr& v, int i) { return ExactPoly::variable(v, i); }
ExactPoly one(const VarTablePtr& v) { return ExactPoly::constant(v, 1); }
ExactPoly beta(const VarTablePtr& v) { return ExactPoly::beta(v); }

// 1 + b x
ExactPoly unit_atom(const VarTablePtr& v, int x) { return one(v) + beta(v) * var(v, x); }

ExactPoly to_series_checked(AtomTable& atoms, const FactoredFraction& sum, int N, const char* what) {
  FactoredFraction r = ff_reduce(atoms, sum);
  if (!ff_is_series(atoms, r))
    throw std::domain_error(std::string(what) + ": localization sum keeps a non-unit denominator");
  return ff_to_series(atoms, r, N);
}

}  // namespace

FactoredFraction fgl_minus(AtomTable& atoms, int xj, int xi) {
  const auto& v = atoms.vars();
  return FactoredFraction::over(atoms, var(v, xj) - var(v, xi), unit_atom(v, xi));
}

FactoredFraction dual_power(AtomTable& atoms, int x, int k) {
  const auto& v = atoms.vars();
  ExactPoly num = one(v);
  for (int i = 0; i < k; ++i) num *= -var(v, x);
  return FactoredFraction::over(atoms, num, unit_atom(v, x), k);
}

FactoredFraction projective_sum(AtomTable& atoms, const std::vector<int>& roots, const PointIntegrand& g) {
  std::vector<FactoredFraction> terms;
  const int e = static_cast<int>(roots.size());
  for (int i = 0; i < e; ++i) {
    // 1 / prod_{j != i} (x_j - x_i)/(1 + b x_i)
    const auto& v = atoms.vars();
    ExactPoly num = one(v);
    FactoredFraction t = g(i, atoms);
    for (int j = 0; j < e; ++j) {
      if (j == i) continue;
      num *= unit_atom(v, roots[i]);
      t = ff_mul(t, FactoredFraction::over(atoms, one(v), var(v, roots[j]) - var(v, roots[i])));
    }
    t.num *= num;
    terms.push_back(std::move(t));
  }
  return ff_sum(atoms, terms);
}

PointIntegrand h_polynomial(const std::vector<ExactPoly>& coeffs, const std::vector<int>& roots) {
  return [coeffs, roots](int i, AtomTable& atoms) {
    std::vector<FactoredFraction> parts;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      FactoredFraction h = dual_power(atoms, roots[i], static_cast<int>(k));
      h.num *= coeffs[k];
      parts.push_back(std::move(h));
    }
    return ff_sum(atoms, parts);
  };
}

ExactPoly pushforward_projective(AtomTable& atoms, const std::vector<int>& roots, const PointIntegrand& g,
                                 int max_root_degree) {
  if (roots.empty()) throw std::invalid_argument("projective bundle of a rank 0 bundle");
  return to_series_checked(atoms, projective_sum(atoms, roots, g), max_root_degree, "projective pushforward");
}

bool QuadricFixture::in_I(int j) const { return std::binary_search(I.begin(), I.end(), j); }

FactoredFraction fgl_weight(AtomTable& atoms, const QuadricFixture& q, FrameRoot w, int i) {
  const auto& v = atoms.vars();
  const int zi = q.z[i], zj = q.z[w.j];
  if (!w.dual) return fgl_minus(atoms, zj, zi);
  // dual(z_j) + dual(z_i) = -(z_i + z_j + b z_i z_j)/((1 + b z_i)(1 + b z_j))
  ExactPoly num = -(var(v, zi) + var(v, zj) + beta(v) * var(v, zi) * var(v, zj));
  FactoredFraction f = FactoredFraction::over(atoms, num, unit_atom(v, zi));
  return ff_mul(f, FactoredFraction::over(atoms, one(v), unit_atom(v, zj)));
}

FactoredFraction quadric_ratio(AtomTable& atoms, const QuadricFixture& q, int i) {
  if (!q.in_I(i)) throw std::invalid_argument("quadric_ratio: fixed point outside I");
  const auto& v = atoms.vars();
  FactoredFraction r = FactoredFraction::of(one(v));
  // j outside I cancels between the normal and tangent weights
  for (int j : q.I) {
    if (j == i) continue;
    const int zi = q.z[i], zj = q.z[j];
    ExactPoly num = -(var(v, zi) + var(v, zj) + beta(v) * var(v, zi) * var(v, zj));
    FactoredFraction t = FactoredFraction::over(atoms, num, unit_atom(v, zj));
    r = ff_mul(r, ff_mul(t, FactoredFraction::over(atoms, one(v), var(v, zj) - var(v, zi))));
  }
  return r;
}

FactoredFraction quadric_sum(AtomTable& atoms, const QuadricFixture& q, const PointIntegrand& g) {
  std::vector<FactoredFraction> terms;
  for (int i : q.I) terms.push_back(ff_mul(g(i, atoms), quadric_ratio(atoms, q, i)));
  if (terms.empty()) return FactoredFraction::of(ExactPoly(atoms.vars()));
  return ff_sum(atoms, terms);
}

ExactPoly pushforward_quadric(AtomTable& atoms, const QuadricFixture& q, const PointIntegrand& g,
                              int max_root_degree) {
  return to_series_checked(atoms, quadric_sum(atoms, q, g), max_root_degree, "quadric pushforward");
}

QuadricFixture make_quadric(int n, const std::vector<int>& I) {
  if (n < 1) throw std::invalid_argument("quadric needs n >= 1");
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j));
  names.push_back("u");
  QuadricFixture q;
  q.vars = make_root_vars(names);
  for (int j = 0; j < n; ++j) q.z.push_back(q.vars->at(names[j]));
  q.I = I;
  std::sort(q.I.begin(), q.I.end());
  for (int j : q.I)
    if (j < 0 || j >= n) throw std::invalid_argument("quadric subset out of range");
  if (std::adjacent_find(q.I.begin(), q.I.end()) != q.I.end()) throw std::invalid_argument("repeated index in I");
  return q;
}

IdentityResult verify_localization_identity(int size) {
  if (size < 1) throw std::invalid_argument("localization identity needs |I| >= 1");
  std::vector<int> I(size);
  for (int j = 0; j < size; ++j) I[j] = j;
  QuadricFixture q = make_quadric(size, I);
  AtomTable atoms(q.vars);
  std::vector<FactoredFraction> summands;
  for (int i : q.I) summands.push_back(quadric_ratio(atoms, q, i));
  FactoredFraction rhs = FactoredFraction::of(ExactPoly::constant(q.vars, 1));
  if (size % 2 == 0) {
    ExactPoly prod = ExactPoly::constant(q.vars, 1);
    FactoredFraction inv = FactoredFraction::of(ExactPoly::constant(q.vars, 1));
    for (int j : q.I) {
      prod *= unit_atom(q.vars, q.z[j]);
      inv = ff_mul(inv, FactoredFraction::over(atoms, ExactPoly::constant(q.vars, 1), unit_atom(q.vars, q.z[j])));
    }
    // 1 - prod 1/(1 + b z_i) = (prod (1 + b z_i) - 1) / prod (1 + b z_i)
    rhs = inv;
    rhs.num = prod - ExactPoly::constant(q.vars, 1);
  }
  SumCheck s = fraction_sum_equals(atoms, summands, rhs);
  return {s.equal, s.equal ? "|I| = " + std::to_string(size) : "|I| = " + std::to_string(size) + ": " + s.witness};
}

}  // namespace vexloci
