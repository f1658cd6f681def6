#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vexloci/fixture.hpp"
#include "vexloci/formulas.hpp"
#include "vexloci/io.hpp"
#include "vexloci/suites.hpp"
#include "vexloci/triple.hpp"

using namespace vexloci;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

// Bad input that is not a mathematical failure: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TripleArgs {
  std::string type = "A";
  std::string k, p, q;
  std::string file;
  bool extended = false;
  bool relaxed_gap = false;
};

struct FormulaArgs {
  std::string mode;
  int trunc = -1;
  std::string normalization = "display";
};

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_triple_options(CLI::App* cmd, TripleArgs& a) {
  cmd->add_option("--type", a.type, "A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}));
  cmd->add_option("--k", a.k, "comma separated, strictly increasing");
  cmd->add_option("--p", a.p, "comma separated");
  cmd->add_option("--q", a.q, "comma separated, negative entries in extended mode");
  cmd->add_option("--triple", a.file, "triple JSON file")->check(CLI::ExistingFile);
  cmd->add_flag("--extended", a.extended, "coisotropic conditions allowed (B/C/D)");
}

void add_formula_options(CLI::App* cmd, FormulaArgs& f) {
  cmd->add_option("--mode", f.mode, "det, pf, raising, theta or eta (default: det in A, pf in B/C/D, theta/eta when extended)")
      ->check(CLI::IsMember({"det", "pf", "pfaffian", "raising", "theta", "eta"}));
  cmd->add_option("--trunc", f.trunc, "truncation N (default |lambda|+4)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--normalization", f.normalization, "Pfaffian entry normalization")
      ->check(CLI::IsMember({"display", "congruence"}));
}

Triple triple_of(const TripleArgs& a) {
  if (!a.file.empty()) {
    try {
      return triple_from_json(read_file(a.file));
    } catch (const FormatError& e) {
      throw UsageError(e.what());
    }
  }
  if (a.k.empty() || a.p.empty() || a.q.empty()) throw UsageError("give --k, --p and --q, or --triple FILE");
  return Triple{parse_lie_type(a.type), parse_list(a.k, "k"), parse_list(a.p, "p"), parse_list(a.q, "q"), a.extended};
}

PfOptions pf_of(const FormulaArgs& f) {
  PfOptions o;
  o.normalization = f.normalization == "congruence" ? PfNormalization::Congruence : PfNormalization::Display;
  return o;
}

// Prints the violations and returns the shape, or nothing for an invalid triple.
std::optional<ShapeData> checked_shape(const Triple& t, bool relaxed) {
  ValidationResult v = validate_triple(t, ValidateOptions{relaxed});
  if (!v.ok()) {
    std::cout << "invalid " << t.text() << "\n" << v.report() << "\n";
    return std::nullopt;
  }
  return v.shape;
}

std::string ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

FormulaOutput build(const Triple& t, const FormulaArgs& f, int N) {
  const PfOptions pf = pf_of(f);
  if (f.mode.empty()) return class_of(t, N, pf);
  const Mode m = parse_mode(f.mode);
  auto mismatch = [&] { return UsageError("mode " + f.mode + " does not apply to " + t.text()); };
  if (t.extended) {
    if ((m == Mode::Theta && t.type != LieType::D) || (m == Mode::Eta && t.type == LieType::D)) return class_of(t, N, pf);
    if (m == Mode::Raising) return raising_of(t, N);
    throw mismatch();
  }
  switch (m) {
    case Mode::Det:
      if (t.type != LieType::A) throw mismatch();
      return classA_det(t, N);
    case Mode::Pfaffian:
      if (t.type == LieType::A) throw mismatch();
      return class_of(t, N, pf);
    case Mode::Raising: return raising_of(t, N);
    case Mode::Theta:
    case Mode::Eta: throw mismatch();
  }
  throw mismatch();
}

int truncation_for(const FormulaArgs& f, const ShapeData& sh) {
  int w = sh.weight();
  if (f.trunc < 0) return default_truncation(sh.lambda);
  if (f.trunc < w) throw UsageError("truncation " + std::to_string(f.trunc) + " is below |lambda| = " + std::to_string(w));
  return f.trunc;
}

int cmd_validate(const TripleArgs& a, const std::string& format) {
  Triple t = triple_of(a);
  auto sh = checked_shape(t, a.relaxed_gap);
  if (!sh) return kMathFailure;
  if (format == "json") {
    std::cout << triple_to_json(t) << "\n";
  } else {
    std::cout << "valid " << t.text() << "\n";
  }
  std::cout << "lambda=" << ints(sh->lambda) << "\n";
  return kOk;
}

int cmd_shape(const TripleArgs& a, bool inflate_too) {
  Triple t = triple_of(a);
  auto sh = checked_shape(t, a.relaxed_gap);
  if (!sh) return kMathFailure;
  std::cout << "triple " << t.text() << "\n";
  std::cout << "lambda " << ints(sh->lambda) << "\n";
  std::cout << "weight " << sh->weight() << "\n";
  if (t.extended) {
    std::cout << "rho " << ints(sh->rho) << "\n";
    std::cout << "split_index " << sh->split_index << "\n";
    std::cout << "distinguished " << sh->distinguished << "\n";
  }
  std::cout << "anchor " << ints(sh->anchor) << "\n";
  if (inflate_too) {
    if (t.extended || t.type == LieType::D) throw UsageError("inflation applies to non-extended A, B and C triples");
    Triple ti = inflate(t);
    std::cout << "inflated " << ti.text() << "\n";
    std::cout << "inflated lambda " << ints(shape_of(ti, ValidateOptions{true}).lambda) << "\n";
  }
  return kOk;
}

int cmd_formula(const TripleArgs& a, const FormulaArgs& f, const std::string& format) {
  Triple t = triple_of(a);
  auto sh = checked_shape(t, false);
  if (!sh) return kMathFailure;
  FormulaOutput out = build(t, f, truncation_for(f, *sh));
  if (format == "json") std::cout << formula_to_json(out);
  else if (format == "latex") std::cout << formula_latex(out, pf_of(f));
  else std::cout << formula_text(out);
  return kOk;
}

int cmd_expand(const TripleArgs& a, const FormulaArgs& f, const std::string& format) {
  Triple t = triple_of(a);
  auto sh = checked_shape(t, false);
  if (!sh) return kMathFailure;
  const int N = truncation_for(f, *sh);
  FormulaOutput out = build(t, f, N);
  if (format == "json") {
    std::cout << formula_to_json(out);
    return kOk;
  }
  // one line per power of b: the degree |lambda| + j part carries b^j
  std::map<int, ClassSeries> by_beta;
  for (const auto& [m, c] : out.series.terms()) {
    auto it = by_beta.try_emplace(m.beta, out.series.channels()).first;
    it->second.add(m, c);
  }
  for (const auto& [j, part] : by_beta) {
    if (format == "latex") std::cout << "% b^" << j << "\n" << series_latex(part) << "\n";
    else std::cout << "[b^" << j << "] " << part.text() << "\n";
  }
  if (by_beta.empty()) std::cout << "0\n";
  return kOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, bool verbose) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else if (is_suite(suite)) names = {suite};
  else throw UsageError("unknown suite '" + suite + "'");
  bool ok = true;
  for (const auto& n : names) {
    SuiteReport r = run_suite(n, opt);
    std::cout << report_text(r, verbose) << std::flush;
    ok = ok && r.passed();
  }
  return ok ? kOk : kMathFailure;
}

int cmd_specialize(const TripleArgs& a, const FormulaArgs& f, const std::string& fixture_file,
                   const std::string& format) {
  Triple t = triple_of(a);
  auto sh = checked_shape(t, false);
  if (!sh) return kMathFailure;
  RootFixture fx;
  try {
    fx = fixture_from_json(read_file(fixture_file));
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(fx.channels.size()) < t.rank())
    throw UsageError("fixture has " + std::to_string(fx.channels.size()) + " channels, the triple needs " +
                     std::to_string(t.rank()));
  const int N = truncation_for(f, *sh);
  FormulaOutput out = build(t, f, N);
  ExactPoly value = specialize(out.series, fx, N);
  if (format == "json") {
    std::cout << "{\"triple\": " << triple_to_json(t) << ", \"truncation\": " << N << ", \"value\": \"" << value.str()
              << "\"}\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connective K-theory classes of vexillary degeneracy loci"};
  app.require_subcommand(1, 1);

  TripleArgs triple;
  FormulaArgs formula;
  std::string format = "text";
  bool inflate_too = false;
  std::string suite = "all";
  SuiteOptions suite_opt;
  bool verbose = false;
  std::string fixture_file;

  auto* validate = app.add_subcommand("validate", "check a triple and print lambda");
  add_triple_options(validate, triple);
  validate->add_flag("--relaxed-gap", triple.relaxed_gap, "accept the gaps that inflation produces");
  validate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* shape = app.add_subcommand("shape", "print lambda, rho, split index and anchors");
  add_triple_options(shape, triple);
  shape->add_flag("--relaxed-gap", triple.relaxed_gap, "accept the gaps that inflation produces");
  shape->add_flag("--inflate", inflate_too, "also print the inflated triple");

  auto* form = app.add_subcommand("formula", "emit the class of a triple");
  add_triple_options(form, triple);
  add_formula_options(form, formula);
  form->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));

  auto* expand = app.add_subcommand("expand", "truncated expansion grouped by powers of b");
  add_triple_options(expand, triple);
  add_formula_options(expand, formula);
  expand->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string names_help = "all";
  for (const auto& n : suite_names()) names_help += ", " + n;
  verify->add_option("--suite", suite, names_help);
  verify->add_option("--max-size", suite_opt.max_size, "scale of the suite")->check(CLI::PositiveNumber);
  verify->add_option("--workers", suite_opt.workers, "worker threads (default VEXLOCI_WORKERS or all cores)");
  verify->add_option("--seed", suite_opt.seed, "seed of the random fixtures");
  verify->add_option("--normalization", formula.normalization, "Pfaffian entry normalization")
      ->check(CLI::IsMember({"display", "congruence"}));
  verify->add_flag("--verbose", verbose, "print passing checks too");

  auto* spec = app.add_subcommand("specialize", "evaluate the class on a split fixture");
  add_triple_options(spec, triple);
  add_formula_options(spec, formula);
  spec->add_option("--fixture", fixture_file, "fixture JSON file")->required()->check(CLI::ExistingFile);
  spec->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(triple, format);
    if (*shape) return cmd_shape(triple, inflate_too);
    if (*form) return cmd_formula(triple, formula, format);
    if (*expand) return cmd_expand(triple, formula, format);
    if (*verify) {
      suite_opt.pf = pf_of(formula);
      return cmd_verify(suite, suite_opt, verbose);
    }
    if (*spec) return cmd_specialize(triple, formula, fixture_file, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidTriple& e) {
    std::cout << e.what() << "\n";
    return kMathFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
