#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vexloci/matrix.hpp"
#include "vexloci/raising.hpp"
#include "vexloci/triple.hpp"

namespace vexloci {

enum class Mode { Det, Pfaffian, Raising, Theta, Eta };
std::string to_string(Mode m);
// det, pf (or pfaffian), raising, theta, eta
Mode parse_mode(const std::string& s);

struct FormulaOutput {
  ClassSeries series;
  ShapeData shape;
  LieType type = LieType::A;
  Mode mode = Mode::Det;
  bool half_integral = false;
  int truncation = 0;
};

// Channel i carries the classes c(i) (and e(i) in type D). All builders below
// take lambda directly; the triple versions validate and delegate.

// Type A.
SeriesMatrix matrix_A(const std::vector<int>& lambda, int N);
ClassSeries det_A(const std::vector<int>& lambda, int N);
RaisingExpr raising_expr_A(const std::vector<int>& lambda);
ClassSeries raising_A(const std::vector<int>& lambda, int N);
// Determinant in the Segre classes c'_m = (1 - bT)^{-m} c_m.
SeriesMatrix matrix_A_segre(const std::vector<int>& lambda, int N);
ClassSeries himn_A(const std::vector<int>& lambda, int N);

// Pfaffian entries for types C, B, D. Display uses the entry exponents
// (-lambda_i + 1, -lambda_j) of the pair (i, j) and -lambda_j in the
// augmented row, shifted by one in types B and D. Congruence gives channel i
// the exponent k - i - lambda_i (plus one in types B and D) in every entry it
// meets, which is M = S M' S^t with a diagonal S acting on channel i alone.
// The two agree when k <= 2.
enum class PfNormalization { Display, Congruence };
struct PfOptions {
  PfNormalization normalization = PfNormalization::Display;
  // Type D: sign of e in the augmented row, m_0j = ... (c + sign * e).
  // Unset means +1 for Display and (-1)^k for Congruence.
  std::optional<int> augmented_e_sign;
};

// Operator of the Pfaffian entry m_ij (i = 0: the augmented row) in types C, B, D.
// It acts on c_{lambda_i}(i) c_{lambda_j}(j), on d-seeds in type D.
RaisingExpr pf_entry_operator(LieType type, const std::vector<int>& lambda, int i, int j, const PfOptions& opt = {});
// Sign of e in the type D augmented row for k channels.
int augmented_e_sign(const PfOptions& opt, int k);

// Type C. Row 0 is the augmentation when k is odd; row r owns channel r then.
SeriesMatrix matrix_C(const std::vector<int>& lambda, int N, const PfOptions& opt = {});
ClassSeries pf_C(const std::vector<int>& lambda, int N, const PfOptions& opt = {});
// prod_{i<j} (1-R_ij)/(1+R_ij-bT_i) * prod_i (1-bT_i)^{k-i}
RaisingExpr r_k(int k, bool tilde = false);
ClassSeries raising_C(const std::vector<int>& lambda, int N);
// m'_ij from the explicit binomial expansion (no operators involved).
ClassSeries entry_expanded_C(int i, int j, const std::vector<int>& lambda, int N);
// m_ij from the operator form, Display normalization.
ClassSeries entry_operator_C(int i, int j, const std::vector<int>& lambda, int N);

// Type B.
SeriesMatrix matrix_B(const std::vector<int>& lambda, int N, const PfOptions& opt = {});
ClassSeries pf_B(const std::vector<int>& lambda, int N, const PfOptions& opt = {});
ClassSeries raising_B(const std::vector<int>& lambda, int N);

// Type D, over c and e symbols.
SeriesMatrix matrix_D(const std::vector<int>& lambda, int N, const PfOptions& opt = {});
ClassSeries pf_D(const std::vector<int>& lambda, int N, const PfOptions& opt = {});
ClassSeries raising_D(const std::vector<int>& lambda, int N);
// prod_i (c_{lambda_i}(i) + signs[i] e_{lambda_i}(i)), signs in {-1, 0, 1}
ClassSeries d_seed(const std::vector<int>& lambda, const std::vector<int>& signs);

// Classical (beta = 0) determinant and Pfaffians built from the m = 0 terms.
ClassSeries classical_A(const std::vector<int>& lambda);
ClassSeries classical_pf(LieType type, const std::vector<int>& lambda, int augmented_e_sign = 1);

// Theta and eta polynomials.
enum class RhoForm { Product, Factored };
struct RhoShape {
  int distinguished = 0;  // k
  std::vector<int> conjugate;
};
// Throws std::invalid_argument on shape violations. k < 0 picks the maximal index
// with rho_j = j - 1 for j <= k.
RhoShape check_rho(const std::vector<int>& rho, const std::vector<int>& lambda, int k = -1);
RaisingExpr r_rho(const std::vector<int>& rho, RhoForm form, int k, bool tilde = false);
ClassSeries theta_series(const std::vector<int>& rho, const std::vector<int>& lambda, int N,
                         RhoForm form = RhoForm::Product, int k = -1);
// e symbols live on channels <= k with d(i) = c(i) + (-1)^i e(i).
ClassSeries eta_series(const std::vector<int>& rho, const std::vector<int>& lambda, int k, int N,
                       RhoForm form = RhoForm::Product);
// prod_{i<=k} (1-bT_i)/(2-bT_i) applied after the theta polynomial.
ClassSeries theta_B_series(const std::vector<int>& rho, const std::vector<int>& lambda, int k, int N,
                           RhoForm form = RhoForm::Product);

FormulaOutput theta_poly(const std::vector<int>& rho, const std::vector<int>& lambda, int N);
FormulaOutput eta_poly(const std::vector<int>& rho, const std::vector<int>& lambda, int k, int N);

// Triple-level constructors. Throw InvalidTriple on bad input.
FormulaOutput classA_det(const Triple& t, int N);
FormulaOutput classA_raising(const Triple& t, int N);
FormulaOutput classA_himn(const Triple& t, int N);
FormulaOutput classC_pf(const Triple& t, int N, const PfOptions& opt = {});
FormulaOutput classC_raising(const Triple& t, int N);
FormulaOutput classB_pf(const Triple& t, int N, const PfOptions& opt = {});
FormulaOutput classB_raising(const Triple& t, int N);
FormulaOutput classD_pf(const Triple& t, int N, const PfOptions& opt = {});
FormulaOutput classD_raising(const Triple& t, int N);
FormulaOutput classC5(const Triple& t, int N);
FormulaOutput classB5(const Triple& t, int N);
FormulaOutput classD5(const Triple& t, int N);

// Default form for a triple: det (A), Pfaffian (B/C/D), theta/eta for extended triples.
FormulaOutput class_of(const Triple& t, int N, const PfOptions& opt = {});
// Raising-operator form for a triple (theta/eta for extended triples).
FormulaOutput raising_of(const Triple& t, int N);

// Default truncation |lambda| + 4.
int default_truncation(const std::vector<int>& lambda);

}  // namespace vexloci
