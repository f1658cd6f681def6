#pragma once

#include <string>
#include <vector>

#include "vexloci/fixture.hpp"
#include "vexloci/identities.hpp"
#include "vexloci/localization.hpp"
#include "vexloci/triple.hpp"

namespace vexloci {

// Split fixture on the quadric frame: F = z1..zn, E = z_j (j in I) and the
// duals of the other z_j, V = F + F^*. The table also holds a spare
// degree-1 variable u. Structure is orthogonal-even or symplectic.
RootFixture frame_fixture(const QuadricFixture& q, Structure s);
// Bundle holding the first `rank` roots of `from` (in fixture order).
BundleSpec leading(const RootFixture& fx, const std::string& from, int rank, const std::string& name);

// c_e(E (x) L^*) = (1 - bT)^{-e} c_e(E - L) for split E of rank e.
IdentityResult verify_property_a(int e, int N);
// (-c_1(L))^a c_b(E - L) = c_{a+b}(E - L) for b >= e, exact.
IdentityResult verify_property_b(int e, int a, int b);
// Both of the above for a <= 3 and e <= b <= e + 2.
IdentityResult verify_property_a_b(int e, int N);
// pi_* c(Q) = (1 - b)^{e-1} and pi_* 1 = (-b)^{e-1} on P(E), exact.
IdentityResult verify_property_c(int e);

// gamma^2 = c(b), gamma at b = 0 is 1, gamma(E/D, F/D) = gamma c(D; b),
// c_n(F^*) = (-1)^{dim} gamma c_n(E), and c(u) c(b - u) = c(b).
// D lists roots shared by E and F.
IdentityResult verify_gamma_props(const RootFixture& fx, const std::vector<std::string>& D, int N);

// pi_*(e f) = 1 for odd |I| and 1 - gamma for even |I|.
IdentityResult verify_pushforward_ef(int n, const std::vector<int>& I, int N);
// (1 - bT)/(2 - bT) c_0 = 1 - gamma/2 and, for k > 0,
// pi_*(h^k/(1 + b h)^{k-a} e f) = (1 - bT)/(2 - bT) (1 - bT)^{-a} c_k.
IdentityResult verify_pushforward_prop(int n, const std::vector<int>& I, int k, int a, int N);

// The locus D_1 = E_{n-1} inside F_q, pushed forward from the quadric, against
// (1-bT)/(2-bT)(1-bT)^{-n+1-q} c_{n-1+q} - e/2.
IdentityResult verify_basicD(int n, int q, const std::vector<int>& I, int N);

// Dominant cases. Type A uses E_i = x1..xi and quotients V/F_{q_i} spanned by
// the first q_i of y1..y_{q_1}. Types C and D run on frame_fixture(n, I) with
// D_i the first i roots of E and F_{q_i} the leading roots of F; D_{i-1} must
// lie in F_{q_i}.
struct DominantSpec {
  LieType type = LieType::A;
  int n = 0;               // C and D
  std::vector<int> q;      // one entry per step, weakly decreasing
  std::vector<int> I;      // C and D
};
IdentityResult verify_dominant_case(const DominantSpec& spec, int N);

// Relation with c(1) = c(2) = c(V - E_p - F_q) on frame_fixture(n, I).
// Type C: (1-bT_1)^{-l}(1-bT_2)^{-l}(1-R_12)/(1+R_12-bT_1) c_l(1) c_l(2) = 0, l = p+q-1.
// Type D: the tilde version on d = (c - e, c + e) and on (c + e, c - e), l = p+q.
IdentityResult verify_relation_lemma(LieType type, int n, int p, int q, const std::vector<int>& I, int N);

}  // namespace vexloci
