#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vexloci/rational.hpp"

namespace vexloci {

// Name of the interpolation parameter; it carries degree -1.
inline constexpr std::string_view kBetaName = "b";

class VarTable {
 public:
  // Returns the new index. Names are unique.
  int add(const std::string& name, int degree);
  int find(std::string_view name) const;  // -1 when absent
  int at(std::string_view name) const;    // throws when absent
  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_.at(i); }
  int degree(int i) const { return degrees_.at(i); }
  int beta() const { return find(kBetaName); }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// Builds a frozen table. Root variables are degree 1, "b" is degree -1.
VarTablePtr make_vars(const std::vector<std::pair<std::string, int>>& entries);
// b followed by the given degree-1 names.
VarTablePtr make_root_vars(const std::vector<std::string>& roots);

using Exponent = std::vector<std::uint8_t>;

class ExactPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  ExactPoly() = default;
  explicit ExactPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

  static ExactPoly constant(VarTablePtr vars, const Rational& c);
  static ExactPoly variable(VarTablePtr vars, int index, unsigned power = 1);
  static ExactPoly variable(VarTablePtr vars, std::string_view name, unsigned power = 1);
  static ExactPoly beta(VarTablePtr vars, unsigned power = 1);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;
  int root_degree(const Exponent& e) const;
  int graded_degree(const Exponent& e) const;
  // -1 for the zero polynomial
  int max_root_degree() const;

  void add_term(const Exponent& e, const Rational& c);

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const Rational& c);
  ExactPoly& operator*=(const ExactPoly& o);
  ExactPoly operator-() const;

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(ExactPoly a, const Rational& c) { return a *= c; }
  friend ExactPoly operator*(const Rational& c, ExactPoly a) { return a *= c; }
  friend bool operator==(const ExactPoly& a, const ExactPoly& b);

  ExactPoly truncate(int max_root_degree) const;
  // Sets variable `var` to zero.
  ExactPoly set_zero(int var) const;
  // Replaces variable `var` by `value`; truncates when max_root_degree >= 0.
  ExactPoly substitute(int var, const ExactPoly& value, int max_root_degree = -1) const;
  // Homogeneous piece of the given root degree.
  ExactPoly root_part(int degree) const;

  std::string str() const;

 private:
  void check_same(const ExactPoly& o) const;
  void adopt(const ExactPoly& o);

  VarTablePtr vars_;
  TermMap terms_;
};

ExactPoly mul_trunc(const ExactPoly& a, const ExactPoly& b, int max_root_degree);
ExactPoly pow_trunc(const ExactPoly& a, unsigned e, int max_root_degree);

// Inverse of a power series whose non-constant terms all have positive root degree.
ExactPoly series_inverse(const ExactPoly& p, int max_root_degree);

// x + y + b x y
ExactPoly fgl_sum(const ExactPoly& x, const ExactPoly& y);
// -x/(1 + b x) expanded to the given root degree
ExactPoly fgl_inverse(const ExactPoly& x, int max_root_degree);

// Quotient when d divides p exactly, by lex-leading-term division.
std::optional<ExactPoly> divide_exact(const ExactPoly& p, const ExactPoly& d);

}  // namespace vexloci
