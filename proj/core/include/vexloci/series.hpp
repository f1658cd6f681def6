#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vexloci/rational.hpp"

namespace vexloci {

inline constexpr int kMaxChannels = 12;

enum class Kind : std::uint8_t { C = 0, E = 1 };

// beta^t * s_{a_1}(1) ... s_{a_k}(k). Channel arguments of the public
// functions are 1-based; the arrays here are 0-based.
struct Monomial {
  std::int16_t beta = 0;
  std::uint8_t channels = 0;
  std::uint16_t ekinds = 0;
  std::array<std::int16_t, kMaxChannels> idx{};

  auto operator<=>(const Monomial&) const = default;

  Kind kind(int ch0) const { return (ekinds >> ch0) & 1u ? Kind::E : Kind::C; }
  void set_kind(int ch0, Kind k) {
    if (k == Kind::E) ekinds = static_cast<std::uint16_t>(ekinds | (1u << ch0));
    else ekinds = static_cast<std::uint16_t>(ekinds & ~(1u << ch0));
  }
  int index_sum() const;
  int degree() const { return index_sum() - beta; }
  bool has_negative_index() const;
  std::string text() const;
};

// Parses the canonical text form, e.g. "b^2 * c[3](1) * e[0](2)".
Monomial parse_monomial(const std::string& text);

class ClassSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit ClassSeries(int channels = 0);
  // Coefficient-one monomial with the given indices (kinds default to c).
  static ClassSeries seed(const std::vector<int>& idx, const std::vector<Kind>& kinds = {});
  static ClassSeries constant(int channels, const Rational& c);

  int channels() const { return channels_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  ClassSeries& operator+=(const ClassSeries& o);
  ClassSeries& operator-=(const ClassSeries& o);
  ClassSeries& operator*=(const Rational& c);
  friend ClassSeries operator+(ClassSeries a, const ClassSeries& b) { return a += b; }
  friend ClassSeries operator-(ClassSeries a, const ClassSeries& b) { return a -= b; }
  friend ClassSeries operator*(ClassSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const ClassSeries& a, const ClassSeries& b) {
    return a.channels_ == b.channels_ && a.terms_ == b.terms_;
  }

  ClassSeries truncate(int max_index_sum) const;
  ClassSeries beta_zero() const;
  // Drops monomials with a negative index (c_m = 0 for m < 0).
  ClassSeries drop_negative() const;
  // Same terms viewed with more channels (new channels hold c_0).
  ClassSeries widen(int channels) const;

  std::string text() const;

 private:
  int channels_;
  TermMap terms_;
};

ClassSeries shift(const ClassSeries& s, int channel, int power);
ClassSeries apply_delta(const ClassSeries& s, int channel);
// Product of series supported on disjoint channel sets (1-based).
ClassSeries disjoint_mul(const ClassSeries& a, const ClassSeries& b, const std::vector<int>& channels_a,
                         const std::vector<int>& channels_b, int max_index_sum);

struct Comparison {
  bool equal = true;
  std::optional<Monomial> where;
  Rational lhs, rhs;
  std::string describe() const;
};
Comparison compare_series(const ClassSeries& a, const ClassSeries& b, int max_index_sum);

// c_m(i) -> sum_j binom(m-1+j, j) b^j c_{m+j}(i).
ClassSeries segre_convert(const ClassSeries& s, int channel, int max_index_sum);

}  // namespace vexloci
