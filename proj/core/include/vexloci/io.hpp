#pragma once

#include <stdexcept>
#include <string>

#include "vexloci/fixture.hpp"
#include "vexloci/formulas.hpp"
#include "vexloci/triple.hpp"

namespace vexloci {

// Malformed JSON or a document that does not match its schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"kind": "A", "k": [...], "p": [...], "q": [...], "extended": false}
std::string triple_to_json(const Triple& t);
Triple triple_from_json(const std::string& text);

// Shape fields plus the monomial list [{"m": canonical text, "c": "p/q"}, ...].
// Serialization is canonical, so parse then dump reproduces the bytes.
std::string formula_to_json(const FormulaOutput& f);
FormulaOutput formula_from_json(const std::string& text);

// {"structure": "symplectic", "variables": [...], "bundles": {"V": ["z1", "~z1"], ...},
//  "dim_EF": 1, "channels": [{"plus": ["V"], "minus": ["E2", "F1"], "euler": ["E2", "F1"]}]}
// "variables" may be omitted; the roots then define them in order of appearance.
std::string fixture_to_json(const RootFixture& fx);
RootFixture fixture_from_json(const std::string& text);

// Header lines (type, mode, lambda, N) followed by the canonical series text.
std::string formula_text(const FormulaOutput& f);

std::string series_latex(const ClassSeries& s);
std::string raising_latex(const RaisingExpr& r);
// Matrix form with operator entries (det and Pfaffian modes), then the expanded series.
std::string formula_latex(const FormulaOutput& f, const PfOptions& opt = {});

}  // namespace vexloci
