#pragma once

#include <cstdint>
#include <vector>

#include "vexloci/fixture.hpp"
#include "vexloci/formulas.hpp"
#include "vexloci/identities.hpp"
#include "vexloci/triple.hpp"

namespace vexloci {

// Split bundles whose roots all lie on one line: every root is r * t for a
// fixed integer r, so classes are polynomials in b and t alone.
// Type A: E_p is spanned by the first p of x_1.., and V/F_q by the first q of y_1...
// Type C: V = x + ~x, E = x_1..x_n, F picks x_j or ~x_j in a shuffled order;
// E_p and F_q are the leading n+1-p and n+1-q roots.
struct LineFixture {
  LieType type = LieType::A;
  VarTablePtr vars;                      // b, t
  std::vector<long> x;                   // slopes of x_1..
  std::vector<long> y;                   // type A: slopes of y_1..
  std::vector<std::pair<int, bool>> f;   // type C: F as (index into x, dual)

  int n() const { return static_cast<int>(x.size()); }
};

// Random distinct slopes in [1, 1000] drawn from the seed; sized for every p and q in `triples`.
// `symbols` free degree-1 variables a1.. are appended to the table after t.
LineFixture make_line_fixture(LieType type, const std::vector<Triple>& triples, std::uint64_t seed,
                              int symbols = 0);

// c(i) for channel i = c(V - E_{p_j} - F_{q_j}) at the anchor j of channel i.
// Shapes are read in relaxed gap mode so inflated triples are accepted.
Specialization line_specialization(const Triple& t, const LineFixture& fx, int max_root_degree);

struct InflationOptions {
  int trials = 3;
  std::uint64_t seed = 0x5eed;
  PfOptions pf;
  int truncation = -1;  // -1: |lambda| + 4
};

// For each entry of inflate(t): the original entry it was inserted before and
// the number d of insertion steps between them (0 for original entries).
struct InsertionOrigin {
  int entry = 0;
  int steps = 0;
};
std::vector<InsertionOrigin> insertion_origins(const Triple& t, const Triple& inflated);

// The class of inflate(t) with every inserted channel set to c(old) (1 + a_1)...(1 + a_d),
// a_j fresh free symbols, against the class of t; base classes come from a line fixture.
// Throws std::invalid_argument when t has no gap. Types A and C.
IdentityResult inflation_invariance_check(const Triple& t, const InflationOptions& opt = {});

// Same comparison with both triples specialized to their own bundles on the line fixture.
IdentityResult inflation_bundle_check(const Triple& t, const InflationOptions& opt = {});

}  // namespace vexloci
