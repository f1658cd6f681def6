#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vexloci/formulas.hpp"

namespace vexloci {

RhoShape check_rho(const std::vector<int>& rho, const std::vector<int>& lambda, int k) {
  const int l = static_cast<int>(rho.size());
  if (l == 0 || l > kMaxChannels) throw std::invalid_argument("rho length out of range");
  if (lambda.size() != rho.size()) throw std::invalid_argument("rho and lambda lengths differ");
  int kmax = 0;
  while (kmax < l && rho[kmax] == kmax) ++kmax;
  if (k < 0) k = kmax;
  if (k > kmax) throw std::invalid_argument("rho_j = j - 1 fails below the distinguished index");
  for (int j = kmax; j < l; ++j) {
    if (rho[j] < 0) throw std::invalid_argument("negative rho entry");
    if (j > 0 && rho[j] > rho[j - 1]) throw std::invalid_argument("rho is not weakly decreasing after index k");
  }
  for (int j = 0; j < l; ++j) {
    if (lambda[j] < 0) throw std::invalid_argument("negative lambda part");
    if (j > 0 && lambda[j] + rho[j] > lambda[j - 1] + rho[j - 1])
      throw std::invalid_argument("lambda is not rho-strict");
  }
  RhoShape out;
  out.distinguished = k;
  out.conjugate.resize(l);
  for (int j = 1; j <= l; ++j)
    out.conjugate[j - 1] = static_cast<int>(std::count_if(rho.begin(), rho.end(), [&](int r) { return r >= j; }));
  return out;
}

RaisingExpr r_rho(const std::vector<int>& rho, RhoForm form, int k, bool tilde) {
  const int l = static_cast<int>(rho.size());
  RaisingExpr r;
  if (form == RhoForm::Product) {
    for (int j = 1; j <= l; ++j)
      for (int i = 1; i <= rho[j - 1]; ++i)
        r *= one_minus_beta_t(i, 1, tilde) * one_plus_r_minus_beta_t_inv(i, j, tilde);
    for (int i = 1; i <= l; ++i)
      for (int j = i + 1; j <= l; ++j) r *= one_minus_r(i, j, tilde);
    return r;
  }
  int n = 0;
  for (int j = 1; j <= l; ++j) {
    n = static_cast<int>(std::count_if(rho.begin(), rho.end(), [&](int x) { return x >= j; }));
    if (n) r *= one_minus_beta_t(j, n, tilde);
  }
  for (int j = k + 1; j <= l; ++j) {
    for (int i = 1; i <= k; ++i) r *= one_minus_r(i, j, tilde);
    for (int i = 1; i <= rho[j - 1]; ++i) r *= one_plus_r_minus_beta_t_inv(i, j, tilde);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r *= pair_factor(i, j, tilde);
  // k < i < j: the pairs with i = k are already in the product above
  for (int i = k + 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) r *= one_minus_r(i, j, tilde);
  return r;
}

ClassSeries theta_series(const std::vector<int>& rho, const std::vector<int>& lambda, int N, RhoForm form, int k) {
  RhoShape sh = check_rho(rho, lambda, k);
  RaisingExpr r = r_rho(rho, form, sh.distinguished);
  for (int i = 1; i <= static_cast<int>(lambda.size()); ++i) r *= one_minus_beta_t(i, -lambda[i - 1]);
  return apply_raising(r, ClassSeries::seed(lambda), N);
}

ClassSeries theta_B_series(const std::vector<int>& rho, const std::vector<int>& lambda, int k, int N,
                           RhoForm form) {
  RhoShape sh = check_rho(rho, lambda, k);
  RaisingExpr r;
  for (int i = 1; i <= k; ++i) r *= one_minus_beta_t(i, 1) * two_minus_beta_t_inv(i);
  r *= r_rho(rho, form, sh.distinguished);
  for (int i = 1; i <= static_cast<int>(lambda.size()); ++i) r *= one_minus_beta_t(i, -lambda[i - 1]);
  return apply_raising(r, ClassSeries::seed(lambda), N);
}

ClassSeries eta_series(const std::vector<int>& rho, const std::vector<int>& lambda, int k, int N, RhoForm form) {
  RhoShape sh = check_rho(rho, lambda, k);
  const int l = static_cast<int>(lambda.size());
  RaisingExpr r;
  for (int i = 1; i <= k; ++i) r *= one_minus_beta_t(i, 1, true) * two_minus_beta_t_inv(i, true);
  r *= r_rho(rho, form, sh.distinguished, true);
  std::vector<int> signs(l, 0);
  for (int i = 1; i <= l; ++i) {
    r *= one_minus_beta_t(i, -lambda[i - 1], true);
    if (i <= k) signs[i - 1] = i % 2 ? -1 : 1;
  }
  return apply_raising(r, d_seed(lambda, signs), N);
}

FormulaOutput theta_poly(const std::vector<int>& rho, const std::vector<int>& lambda, int N) {
  FormulaOutput out;
  out.series = theta_series(rho, lambda, N);
  out.shape.lambda = lambda;
  out.shape.rho = rho;
  out.shape.distinguished = check_rho(rho, lambda).distinguished;
  out.type = LieType::C;
  out.mode = Mode::Theta;
  out.truncation = N;
  return out;
}

FormulaOutput eta_poly(const std::vector<int>& rho, const std::vector<int>& lambda, int k, int N) {
  FormulaOutput out;
  out.series = eta_series(rho, lambda, k, N);
  out.shape.lambda = lambda;
  out.shape.rho = rho;
  out.shape.distinguished = k;
  out.type = LieType::D;
  out.mode = Mode::Eta;
  out.half_integral = true;
  out.truncation = N;
  return out;
}

}  // namespace vexloci
