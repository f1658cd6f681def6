#include "vexloci/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vexloci {

int VarTable::add(const std::string& name, int degree) {
  if (find(name) >= 0) throw std::invalid_argument("duplicate variable " + name);
  names_.push_back(name);
  degrees_.push_back(degree);
  return static_cast<int>(names_.size()) - 1;
}

int VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int VarTable::at(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw std::invalid_argument("unknown variable " + std::string(name));
  return i;
}

VarTablePtr make_vars(const std::vector<std::pair<std::string, int>>& entries) {
  auto t = std::make_shared<VarTable>();
  for (const auto& [n, d] : entries) t->add(n, d);
  return t;
}

VarTablePtr make_root_vars(const std::vector<std::string>& roots) {
  auto t = std::make_shared<VarTable>();
  t->add(std::string(kBetaName), -1);
  for (const auto& r : roots) t->add(r, 1);
  return t;
}

ExactPoly ExactPoly::constant(VarTablePtr vars, const Rational& c) {
  ExactPoly p(vars);
  p.add_term(Exponent(p.vars_->size(), 0), c);
  return p;
}

ExactPoly ExactPoly::variable(VarTablePtr vars, int index, unsigned power) {
  ExactPoly p(vars);
  Exponent e(p.vars_->size(), 0);
  if (power > 255) throw std::overflow_error("exponent overflow");
  e.at(index) = static_cast<std::uint8_t>(power);
  p.add_term(e, Rational(1));
  return p;
}

ExactPoly ExactPoly::variable(VarTablePtr vars, std::string_view name, unsigned power) {
  int i = vars->at(name);
  return variable(std::move(vars), i, power);
}

ExactPoly ExactPoly::beta(VarTablePtr vars, unsigned power) {
  return variable(vars, kBetaName, power);
}

Rational ExactPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ExactPoly::constant_term() const {
  if (!vars_) return 0;
  return coefficient(Exponent(vars_->size(), 0));
}

int ExactPoly::root_degree(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (vars_->degree(static_cast<int>(i)) > 0) d += e[i] * vars_->degree(static_cast<int>(i));
  return d;
}

int ExactPoly::graded_degree(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * vars_->degree(static_cast<int>(i));
  return d;
}

int ExactPoly::max_root_degree() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, root_degree(e));
  return m;
}

void ExactPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ExactPoly::check_same(const ExactPoly& o) const {
  if (vars_ && o.vars_ && vars_ != o.vars_) throw std::invalid_argument("mismatched VarTable");
}

void ExactPoly::adopt(const ExactPoly& o) {
  check_same(o);
  if (!vars_) vars_ = o.vars_;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ExactPoly& ExactPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) {
  *this = *this * o;
  return *this;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) { return mul_trunc(a, b, -1); }

bool operator==(const ExactPoly& a, const ExactPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  a.check_same(b);
  return a.terms_ == b.terms_;
}

ExactPoly ExactPoly::truncate(int max_root_degree) const {
  ExactPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (root_degree(e) <= max_root_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

ExactPoly ExactPoly::root_part(int degree) const {
  ExactPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (root_degree(e) == degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

ExactPoly ExactPoly::set_zero(int var) const {
  ExactPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

ExactPoly ExactPoly::substitute(int var, const ExactPoly& value, int max_root_degree) const {
  // group by the exponent of var, then Horner from the top power
  std::map<int, ExactPoly> groups;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    int k = f[var];
    f[var] = 0;
    auto it = groups.try_emplace(k, vars_).first;
    it->second.add_term(f, c);
  }
  ExactPoly r(vars_);
  if (groups.empty()) return r;
  int top = groups.rbegin()->first;
  for (int k = top; k >= 0; --k) {
    if (k != top) r = mul_trunc(r, value, max_root_degree);
    auto it = groups.find(k);
    if (it != groups.end()) r += it->second;
  }
  return max_root_degree >= 0 ? r.truncate(max_root_degree) : r;
}

std::string ExactPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending root degree reads better
  std::vector<std::pair<Exponent, Rational>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
    return root_degree(x.first) < root_degree(y.first);
  });
  for (const auto& [e, c] : v) {
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (a == 1);
    bool any = false;
    if (!unit) os << a.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!unit || any) os << "*";
      os << vars_->name(static_cast<int>(i));
      if (e[i] > 1) os << "^" << int(e[i]);
      any = true;
    }
    if (unit && !any) os << "1";
  }
  return os.str();
}

namespace {

struct Indexed {
  const Exponent* e;
  const Rational* c;
  int rd;
};

std::vector<Indexed> index_terms(const ExactPoly& p) {
  std::vector<Indexed> v;
  v.reserve(p.size());
  for (const auto& [e, c] : p.terms()) v.push_back({&e, &c, p.root_degree(e)});
  std::sort(v.begin(), v.end(), [](const Indexed& a, const Indexed& b) { return a.rd < b.rd; });
  return v;
}

}  // namespace

ExactPoly mul_trunc(const ExactPoly& a, const ExactPoly& b, int max_root_degree) {
  if (a.vars() && b.vars() && a.vars() != b.vars()) throw std::invalid_argument("mismatched VarTable");
  ExactPoly r(a.vars() ? a.vars() : b.vars());
  if (a.is_zero() || b.is_zero()) return r;
  auto va = index_terms(a);
  auto vb = index_terms(b);
  const std::size_t n = va.front().e->size();
  Exponent buf(n);
  Rational prod;
  std::map<Exponent, Rational> acc;
  for (const auto& x : va) {
    for (const auto& y : vb) {
      if (max_root_degree >= 0 && x.rd + y.rd > max_root_degree) break;
      for (std::size_t i = 0; i < n; ++i) {
        unsigned s = unsigned((*x.e)[i]) + (*y.e)[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        buf[i] = static_cast<std::uint8_t>(s);
      }
      mpq_mul(prod.get_mpq_t(), x.c->get_mpq_t(), y.c->get_mpq_t());
      auto [it, fresh] = acc.try_emplace(buf, prod);
      if (!fresh) it->second += prod;
    }
  }
  for (auto& [e, c] : acc)
    if (c != 0) r.add_term(e, c);
  return r;
}

ExactPoly pow_trunc(const ExactPoly& a, unsigned e, int max_root_degree) {
  ExactPoly r = ExactPoly::constant(a.vars(), 1);
  ExactPoly base = a;
  while (e) {
    if (e & 1u) r = mul_trunc(r, base, max_root_degree);
    e >>= 1u;
    if (e) base = mul_trunc(base, base, max_root_degree);
  }
  return max_root_degree >= 0 ? r.truncate(max_root_degree) : r;
}

ExactPoly series_inverse(const ExactPoly& p, int max_root_degree) {
  if (max_root_degree < 0) throw std::invalid_argument("series_inverse needs a root-degree bound");
  Rational c0 = p.constant_term();
  if (c0 == 0) throw std::domain_error("series_inverse: zero constant term");
  ExactPoly rest = p - ExactPoly::constant(p.vars(), c0);
  for (const auto& [e, c] : rest.terms())
    if (p.root_degree(e) == 0) throw std::domain_error("series_inverse: constant part is not a scalar");
  Rational inv = 1 / c0;
  ExactPoly step = rest * (-inv);
  ExactPoly term = ExactPoly::constant(p.vars(), inv);
  ExactPoly r = term;
  for (int k = 1; k <= max_root_degree; ++k) {
    term = mul_trunc(term, step, max_root_degree);
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

ExactPoly fgl_sum(const ExactPoly& x, const ExactPoly& y) {
  const VarTablePtr& v = x.vars() ? x.vars() : y.vars();
  if (!v || v->beta() < 0) throw std::invalid_argument("fgl_sum needs a table with b");
  return x + y + ExactPoly::beta(v) * x * y;
}

ExactPoly fgl_inverse(const ExactPoly& x, int max_root_degree) {
  if (!x.vars() || x.vars()->beta() < 0) throw std::invalid_argument("fgl_inverse needs a table with b");
  if (x.constant_term() != 0) throw std::domain_error("fgl_inverse: nonzero constant term");
  ExactPoly one = ExactPoly::constant(x.vars(), 1);
  ExactPoly den = one + ExactPoly::beta(x.vars()) * x;
  return mul_trunc(-x, series_inverse(den, max_root_degree), max_root_degree);
}

std::optional<ExactPoly> divide_exact(const ExactPoly& p, const ExactPoly& d) {
  if (d.is_zero()) throw std::domain_error("divide_exact by zero");
  ExactPoly q(p.vars() ? p.vars() : d.vars());
  ExactPoly r = p;
  const auto& [ld, lc] = *d.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [le, c] = *r.terms().rbegin();
    Exponent t(le.size());
    for (std::size_t i = 0; i < le.size(); ++i) {
      if (le[i] < ld[i]) return std::nullopt;
      t[i] = static_cast<std::uint8_t>(le[i] - ld[i]);
    }
    Rational f = c / lc;
    ExactPoly mono(q.vars());
    mono.add_term(t, f);
    q += mono;
    r -= mono * d;
  }
  return q;
}

}  // namespace vexloci
