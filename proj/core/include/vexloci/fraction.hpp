#pragma once

#include <map>
#include <string>
#include <vector>

#include "vexloci/poly.hpp"

namespace vexloci {

// Registry of denominator atoms. Atoms are compared up to sign; the sign is
// pushed into the numerator of whoever registers it.
class AtomTable {
 public:
  explicit AtomTable(VarTablePtr vars) : vars_(std::move(vars)) {}
  // Returns (id, sign) with poly == sign * atom(id).
  std::pair<int, int> intern(const ExactPoly& poly);
  const ExactPoly& atom(int id) const { return atoms_.at(id); }
  std::size_t size() const { return atoms_.size(); }
  const VarTablePtr& vars() const { return vars_; }
  // Atom is a unit in the power-series ring: nonzero scalar constant part.
  bool is_unit(int id) const;

 private:
  VarTablePtr vars_;
  std::vector<ExactPoly> atoms_;
};

struct FactoredFraction {
  ExactPoly num;
  std::map<int, int> den;  // atom id -> multiplicity

  static FactoredFraction of(const ExactPoly& p) { return {p, {}}; }
  // num / (atom)^mult, interning atom with its sign
  static FactoredFraction over(AtomTable& atoms, const ExactPoly& num, const ExactPoly& atom,
                               int mult = 1);
  ExactPoly den_poly(const AtomTable& atoms) const;
};

FactoredFraction ff_mul(const FactoredFraction& a, const FactoredFraction& b);
// Common denominator, no cancellation.
FactoredFraction ff_sum(const AtomTable& atoms, const std::vector<FactoredFraction>& terms);
// Divides out every non-unit atom that divides the numerator exactly.
FactoredFraction ff_reduce(const AtomTable& atoms, const FactoredFraction& f);
// True when no non-unit atom remains in the denominator.
bool ff_is_series(const AtomTable& atoms, const FactoredFraction& f);
// Expands the remaining unit atoms as power series. Throws if a non-unit atom remains.
ExactPoly ff_to_series(const AtomTable& atoms, const FactoredFraction& f, int max_root_degree);

struct SumCheck {
  bool equal = false;
  std::string witness;  // first differing monomial, empty on success
};

// Sum of summands equals rhs, checked by cross-multiplication.
SumCheck fraction_sum_equals(const AtomTable& atoms, const std::vector<FactoredFraction>& summands,
                             const FactoredFraction& rhs);

// num/den pair compared by cross-multiplication; used for operator identities.
struct RationalFunction {
  ExactPoly num;
  ExactPoly den;

  static RationalFunction of(const ExactPoly& p);
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  bool equals(const RationalFunction& o) const;
};

// First monomial (as text) where a and b differ, empty when equal.
std::string first_difference(const ExactPoly& a, const ExactPoly& b);

}  // namespace vexloci
