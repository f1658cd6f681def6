#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vexloci {

enum class LieType { A, B, C, D };

LieType parse_lie_type(const std::string& s);
std::string to_string(LieType t);

struct Triple {
  LieType type = LieType::A;
  std::vector<int> k, p, q;
  bool extended = false;

  int length() const { return static_cast<int>(k.size()); }
  int rank() const { return k.empty() ? 0 : k.back(); }  // k_s, the number of channels
  std::string text() const;
  friend bool operator==(const Triple&, const Triple&) = default;
};

enum class Strictness { Weak, Strict, RhoStrict };

struct ShapeData {
  std::vector<int> lambda;  // lambda_1..lambda_{k_s}
  std::vector<int> rho;     // extended mode only
  int split_index = 0;      // a: entries 1..a are isotropic
  int distinguished = 0;    // k_a in extended mode, k_s otherwise
  Strictness strictness = Strictness::Weak;
  std::vector<int> anchor;  // channel k (0-based) -> entry i (0-based) with k_{i-1} < k+1 <= k_i

  int weight() const;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationResult {
  std::optional<ShapeData> shape;
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // flagged boundary cases that are not violations
  bool ok() const { return violations.empty(); }
  std::string report() const;
};

struct ValidateOptions {
  // Accept k_i - k_{i-1} <= dp + dq in types B/C/D (the form inflation produces).
  bool relaxed_gap = false;
};

ValidationResult validate_triple(const Triple& t, const ValidateOptions& opt = {});

class InvalidTriple : public std::invalid_argument {
 public:
  explicit InvalidTriple(const ValidationResult& r) : std::invalid_argument(r.report()), result(r) {}
  ValidationResult result;
};

// Throws InvalidTriple listing every violation.
ShapeData shape_of(const Triple& t, const ValidateOptions& opt = {});

std::vector<int> rho_conjugate(const std::vector<int>& rho);

// Adds 1 to every p and to every non-negative q.
Triple plus_triple(const Triple& d);

// Triples after each single insertion, ending with k'_i = i.
std::vector<Triple> inflation_chain(const Triple& t);
Triple inflate(const Triple& t);
// True when some k_i - k_{i-1} > 1 (k_0 = 0).
bool has_gap(const Triple& t);

// Size caps for exhaustive scans of plain triples.
struct ScanCaps {
  int max_length = 3;  // s
  int max_entry = 6;   // entries of k, p, q
  int max_rank = 4;    // k_s
  int max_weight = 8;  // |lambda|
  bool extended = false;  // B/C/D: q ranges over nonzero values in [-max_entry, max_entry]
};

// Every valid plain triple of the type within the caps, in lexicographic
// order of (k, p, q).
std::vector<Triple> enumerate_triples(LieType type, const ScanCaps& caps = {});

}  // namespace vexloci
