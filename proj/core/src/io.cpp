#include "vexloci/io.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace vexloci {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return field<T>(j, key);
}

std::string strictness_name(Strictness s) {
  switch (s) {
    case Strictness::Weak: return "weak";
    case Strictness::Strict: return "strict";
    case Strictness::RhoStrict: return "rho-strict";
  }
  return "weak";
}

Strictness parse_strictness(const std::string& s) {
  if (s == "weak") return Strictness::Weak;
  if (s == "strict") return Strictness::Strict;
  if (s == "rho-strict") return Strictness::RhoStrict;
  throw FormatError("unknown strictness '" + s + "'");
}

template <class F>
auto wrap(F&& f) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_symbol(Kind kind, int index, int channel) {
  return std::string(kind == Kind::E ? "e" : "c") + "_{" + std::to_string(index) + "}(" + std::to_string(channel) + ")";
}

std::string latex_monomial(const Monomial& m) {
  std::string s;
  if (m.beta == 1) s = "\\beta";
  else if (m.beta != 0) s = "\\beta^{" + std::to_string(m.beta) + "}";
  for (int i = 0; i < m.channels; ++i) {
    // c_0 = 1 is left out; e_0 is a genuine class
    if (m.idx[i] == 0 && m.kind(i) == Kind::C) continue;
    if (!s.empty()) s += " ";
    s += latex_symbol(m.kind(i), m.idx[i], i + 1);
  }
  return s;
}

std::string latex_t(const Factor& f) {
  return std::string(f.tilde ? "\\tilde T_{" : "T_{") + std::to_string(f.i) + "}";
}

std::string latex_r(const Factor& f) {
  std::string r = "R_{" + std::to_string(f.i) + std::to_string(f.j) + "}";
  if (f.tilde) r = "\\delta_{" + std::to_string(f.i) + "}\\delta_{" + std::to_string(f.j) + "}" + r;
  return r;
}

std::string latex_factor(const Factor& f) {
  switch (f.kind) {
    case FactorKind::Scalar: {
      std::string s = latex_rational(f.scalar);
      if (f.beta_power) s += " \\beta^{" + std::to_string(f.beta_power) + "}";
      if (f.n) s += " T_{" + std::to_string(f.i) + "}^{" + std::to_string(f.n) + "}";
      return s;
    }
    case FactorKind::OneMinusBetaT:
      if (f.n == 0) return "";
      return "(1-\\beta " + latex_t(f) + ")" + (f.n == 1 ? "" : "^{" + std::to_string(f.n) + "}");
    case FactorKind::TwoMinusBetaTInv: return "(2-\\beta " + latex_t(f) + ")^{-1}";
    case FactorKind::OneMinusR: return "(1-" + latex_r(f) + ")";
    case FactorKind::OnePlusRInv: return "(1+" + latex_r(f) + "-\\beta " + latex_t(f) + ")^{-1}";
  }
  return "";
}

// c_{l}(i), or (c_l(i) + sign e_l(i)) in type D
std::string latex_seed(int channel, int index, int e_sign) {
  std::string c = latex_symbol(Kind::C, index, channel);
  if (e_sign == 0) return c;
  return "(" + c + (e_sign > 0 ? " + " : " - ") + latex_symbol(Kind::E, index, channel) + ")";
}

std::string latex_matrix_form(const FormulaOutput& f, const PfOptions& opt) {
  const auto& lambda = f.shape.lambda;
  const int k = static_cast<int>(lambda.size());
  std::ostringstream os;
  if (f.mode == Mode::Det && f.type == LieType::A) {
    os << "\\[\n\\det\\begin{pmatrix}\n";
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        os << (j > 1 ? " & " : "") << latex_factor(one_minus_beta_t(i, -lambda[i - 1]).factors[0]) << " "
           << latex_symbol(Kind::C, lambda[i - 1] + j - i, i);
      }
      os << (i < k ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n\\]\n";
    return os.str();
  }
  if (f.mode == Mode::Raising && f.type == LieType::A) {
    os << "\\[\n" << raising_latex(raising_expr_A(lambda)) << "\\cdot";
    for (int i = 1; i <= k; ++i) os << " " << latex_symbol(Kind::C, lambda[i - 1], i);
    os << "\n\\]\n";
    return os.str();
  }
  if (f.mode != Mode::Pfaffian) return "";
  const bool tilde = f.type == LieType::D;
  const int sigma = k % 2 ? -1 : 1;
  os << "\\[\n\\operatorname{Pf}(m_{ij})_{" << (k % 2 ? 0 : 1) << " \\le i < j \\le " << k << "}";
  if (f.type == LieType::B || f.type == LieType::D) os << ", \\quad \\text{entries over } \\mathbb{Z}[1/2]";
  os << "\n\\]\n\\begin{align*}\n";
  bool first = true;
  for (int i = (k % 2 ? 0 : 1); i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      if (!first) os << " \\\\\n";
      first = false;
      os << "m_{" << i << j << "} &= " << raising_latex(pf_entry_operator(f.type, lambda, i, j, opt)) << " \\cdot ";
      if (i == 0) os << latex_seed(j, lambda[j - 1], tilde ? augmented_e_sign(opt, k) : 0);
      else os << latex_seed(i, lambda[i - 1], tilde ? -sigma : 0) << " " << latex_seed(j, lambda[j - 1], tilde ? sigma : 0);
    }
  os << "\n\\end{align*}\n";
  return os.str();
}

}  // namespace

std::string triple_to_json(const Triple& t) {
  Json j;
  j["kind"] = to_string(t.type);
  j["k"] = t.k;
  j["p"] = t.p;
  j["q"] = t.q;
  j["extended"] = t.extended;
  return j.dump();
}

Triple triple_from_json(const std::string& text) {
  Json j = parse(text);
  return wrap([&] {
    Triple t;
    t.type = parse_lie_type(field<std::string>(j, "kind"));
    t.k = field<std::vector<int>>(j, "k");
    t.p = field<std::vector<int>>(j, "p");
    t.q = field<std::vector<int>>(j, "q");
    t.extended = field_or<bool>(j, "extended", false);
    return t;
  });
}

std::string formula_to_json(const FormulaOutput& f) {
  Json j;
  j["type"] = to_string(f.type);
  j["mode"] = to_string(f.mode);
  j["truncation"] = f.truncation;
  j["half_integral"] = f.half_integral;
  j["lambda"] = f.shape.lambda;
  j["rho"] = f.shape.rho;
  j["split_index"] = f.shape.split_index;
  j["distinguished"] = f.shape.distinguished;
  j["strictness"] = strictness_name(f.shape.strictness);
  j["anchor"] = f.shape.anchor;
  j["channels"] = f.series.channels();
  Json terms = Json::array();
  for (const auto& [m, c] : f.series.terms()) terms.push_back(Json{{"m", m.text()}, {"c", c.get_str()}});
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

FormulaOutput formula_from_json(const std::string& text) {
  Json j = parse(text);
  return wrap([&] {
    FormulaOutput f;
    f.type = parse_lie_type(field<std::string>(j, "type"));
    f.mode = parse_mode(field<std::string>(j, "mode"));
    f.truncation = field<int>(j, "truncation");
    f.half_integral = field<bool>(j, "half_integral");
    f.shape.lambda = field<std::vector<int>>(j, "lambda");
    f.shape.rho = field_or<std::vector<int>>(j, "rho", {});
    f.shape.split_index = field_or<int>(j, "split_index", 0);
    f.shape.distinguished = field_or<int>(j, "distinguished", 0);
    f.shape.strictness = parse_strictness(field_or<std::string>(j, "strictness", "weak"));
    f.shape.anchor = field_or<std::vector<int>>(j, "anchor", {});
    const int channels = field<int>(j, "channels");
    if (channels < 0 || channels > kMaxChannels) throw FormatError("channel count out of range");
    f.series = ClassSeries(channels);
    const Json& terms = j.at("terms");
    if (!terms.is_array()) throw FormatError("'terms' must be an array");
    for (const auto& t : terms) {
      Monomial m = parse_monomial(field<std::string>(t, "m"));
      if (m.channels > channels) throw FormatError("monomial '" + m.text() + "' exceeds the channel count");
      m.channels = static_cast<std::uint8_t>(channels);
      f.series.add(m, parse_rational(field<std::string>(t, "c")));
    }
    return f;
  });
}

std::string fixture_to_json(const RootFixture& fx) {
  Json j;
  j["structure"] = to_string(fx.structure);
  Json vars = Json::array();
  for (std::size_t i = 0; i < fx.vars->size(); ++i)
    if (static_cast<int>(i) != fx.vars->beta()) vars.push_back(fx.vars->name(static_cast<int>(i)));
  j["variables"] = std::move(vars);
  Json bundles = Json::object();
  for (const auto& [name, b] : fx.bundles) bundles[name] = b.roots;
  j["bundles"] = std::move(bundles);
  j["dim_EF"] = fx.dim_EF ? Json(*fx.dim_EF) : Json(nullptr);
  Json channels = Json::array();
  for (const auto& ch : fx.channels) {
    Json c;
    c["plus"] = ch.plus;
    c["minus"] = ch.minus;
    if (ch.euler) c["euler"] = {ch.euler->first, ch.euler->second};
    channels.push_back(std::move(c));
  }
  j["channels"] = std::move(channels);
  return j.dump(2) + "\n";
}

RootFixture fixture_from_json(const std::string& text) {
  Json j = parse(text);
  return wrap([&] {
    RootFixture fx;
    fx.structure = parse_structure(field_or<std::string>(j, "structure", "A"));
    if (!j.contains("bundles") || !j.at("bundles").is_object()) throw FormatError("'bundles' must be an object");
    std::vector<std::string> names;
    if (j.contains("variables")) {
      names = field<std::vector<std::string>>(j, "variables");
    } else {
      std::set<std::string> seen;
      for (const auto& [name, roots] : j.at("bundles").items())
        for (const auto& r : roots.get<std::vector<std::string>>()) {
          std::string v = !r.empty() && r[0] == '~' ? r.substr(1) : r;
          if (seen.insert(v).second) names.push_back(v);
        }
    }
    fx.vars = make_root_vars(names);
    for (const auto& [name, roots] : j.at("bundles").items())
      fx.add(BundleSpec{name, roots.get<std::vector<std::string>>()});
    if (j.contains("dim_EF") && !j.at("dim_EF").is_null()) fx.dim_EF = field<int>(j, "dim_EF");
    for (const auto& c : field_or<Json>(j, "channels", Json::array())) {
      ChannelSpec ch;
      ch.plus = field_or<std::vector<std::string>>(c, "plus", {});
      ch.minus = field_or<std::vector<std::string>>(c, "minus", {});
      if (c.contains("euler")) {
        auto e = field<std::vector<std::string>>(c, "euler");
        if (e.size() != 2) throw FormatError("'euler' takes two bundle names");
        ch.euler = std::make_pair(e[0], e[1]);
      }
      fx.channels.push_back(std::move(ch));
    }
    fx.validate();
    return fx;
  });
}

std::string formula_text(const FormulaOutput& f) {
  std::ostringstream os;
  os << "type " << to_string(f.type) << "\n";
  os << "mode " << to_string(f.mode) << "\n";
  os << "lambda (" << join_ints(f.shape.lambda) << ")\n";
  if (!f.shape.rho.empty()) os << "rho (" << join_ints(f.shape.rho) << ")\n";
  os << "N " << f.truncation << "\n";
  os << f.series.text() << "\n";
  return os.str();
}

std::string series_latex(const ClassSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    Rational a = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono = latex_monomial(m);
    if (mono.empty()) out += latex_rational(a);
    else out += (a == 1 ? "" : latex_rational(a) + " ") + mono;
  }
  return out;
}

std::string raising_latex(const RaisingExpr& r) {
  std::string out;
  for (const auto& f : r.factors) {
    std::string s = latex_factor(f);
    if (s.empty()) continue;
    out += (out.empty() ? "" : " ") + s;
  }
  return out.empty() ? "1" : out;
}

std::string formula_latex(const FormulaOutput& f, const PfOptions& opt) {
  std::ostringstream os;
  os << "% type " << to_string(f.type) << ", mode " << to_string(f.mode) << ", lambda = (" << join_ints(f.shape.lambda)
     << "), N = " << f.truncation << "\n";
  os << latex_matrix_form(f, opt);
  os << "\\begin{multline*}\n" << series_latex(f.series) << "\n\\end{multline*}\n";
  return os.str();
}

}  // namespace vexloci
