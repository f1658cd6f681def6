#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vexloci/poly.hpp"
#include "vexloci/series.hpp"

namespace vexloci {

enum class Structure { A, Symplectic, OrthogonalEven };

std::string to_string(Structure s);
Structure parse_structure(const std::string& s);

// A split bundle. Roots are variable names, "~x" standing for the dual root
// fgl_inverse(x).
struct BundleSpec {
  std::string name;
  std::vector<std::string> roots;

  int rank() const { return static_cast<int>(roots.size()); }
};

struct Root {
  int var = -1;
  bool dual = false;
  friend bool operator==(const Root&, const Root&) = default;
};

Root parse_root(const VarTable& vars, const std::string& text);
std::string root_text(const VarTable& vars, const Root& r);
// x, or -x/(1 + b x) expanded to the given root degree.
ExactPoly root_value(const VarTablePtr& vars, const Root& r, int max_root_degree);

// Channel i carries c(plus - minus); in orthogonal fixtures it may also carry
// the Euler class e(E_p, F_q) of two isotropic bundles.
struct ChannelSpec {
  std::vector<std::string> plus;
  std::vector<std::string> minus;
  std::optional<std::pair<std::string, std::string>> euler;  // (E_p, F_q)
};

// Bundles named V, E, F are the ambient bundle and the maximal isotropic pair
// in symplectic and orthogonal fixtures.
struct RootFixture {
  VarTablePtr vars;
  std::map<std::string, BundleSpec> bundles;
  Structure structure = Structure::A;
  std::optional<int> dim_EF;
  std::vector<ChannelSpec> channels;

  const BundleSpec& bundle(const std::string& name) const;
  std::vector<Root> roots_of(const std::string& name) const;
  void add(BundleSpec b) { bundles[b.name] = std::move(b); }
  // Throws std::invalid_argument describing the first broken invariant.
  void validate() const;
  // Shared roots of E and F.
  int shared_EF() const;
};

// Coefficients c_0..c_N of prod(1 + y u) / prod(1 + x u), y in plus, x in minus.
std::vector<ExactPoly> chern_of_virtual(const VarTablePtr& vars, const std::vector<ExactPoly>& plus,
                                        const std::vector<ExactPoly>& minus, int max_root_degree);
std::vector<ExactPoly> chern_of_virtual(const RootFixture& fx, const std::vector<std::string>& plus,
                                        const std::vector<std::string>& minus, int max_root_degree);
// sum_m c_m u^m, truncated.
ExactPoly chern_at(const std::vector<ExactPoly>& c, const ExactPoly& u, int max_root_degree);
// Root values of a bundle.
std::vector<ExactPoly> root_values(const RootFixture& fx, const std::string& name, int max_root_degree);
// Same roots with every root replaced by its dual.
std::vector<ExactPoly> dual_root_values(const RootFixture& fx, const std::string& name, int max_root_degree);

// c(V - E - F; b/2) for the maximal isotropic pair of the fixture.
ExactPoly gamma_of(const RootFixture& fx, int max_root_degree);
// (-1)^{dim(E cap F)} gamma(E, F) c_{p+q}(E/E_p + F/F_q).
ExactPoly euler_value(const RootFixture& fx, const std::string& Ep, const std::string& Fq, int max_root_degree);
// p + q for the pair, read off the ranks.
int euler_index(const RootFixture& fx, const std::string& Ep, const std::string& Fq);

// Concrete values for the channel symbols.
struct ChannelClasses {
  std::vector<ExactPoly> c;  // c_0..c_N
  std::optional<ExactPoly> e;
  int e_index = -1;
};

struct Specialization {
  VarTablePtr vars;
  int max_root_degree = 0;
  std::vector<ChannelClasses> channels;
};

Specialization specialization_of(const RootFixture& fx, int max_root_degree);

// Substitutes c_a(i), e_a(i) and b. Throws std::invalid_argument when the
// series has more channels than the specialization.
ExactPoly specialize(const ClassSeries& s, const Specialization& sp);
ExactPoly specialize(const ClassSeries& s, const RootFixture& fx, int max_root_degree);

}  // namespace vexloci
