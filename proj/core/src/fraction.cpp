#include "vexloci/fraction.hpp"

#include <stdexcept>

namespace vexloci {

std::pair<int, int> AtomTable::intern(const ExactPoly& poly) {
  if (poly.is_zero()) throw std::domain_error("zero denominator atom");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == poly) return {static_cast<int>(i), 1};
    if (atoms_[i] == -poly) return {static_cast<int>(i), -1};
  }
  atoms_.push_back(poly);
  return {static_cast<int>(atoms_.size()) - 1, 1};
}

bool AtomTable::is_unit(int id) const {
  const ExactPoly& a = atoms_.at(id);
  if (a.constant_term() == 0) return false;
  for (const auto& [e, c] : a.terms())
    if (a.root_degree(e) == 0 && e != Exponent(e.size(), 0)) return false;
  return true;
}

FactoredFraction FactoredFraction::over(AtomTable& atoms, const ExactPoly& num, const ExactPoly& atom,
                                        int mult) {
  auto [id, sign] = atoms.intern(atom);
  FactoredFraction f{num, {}};
  if (mult % 2 && sign < 0) f.num = -f.num;
  if (mult > 0) f.den[id] = mult;
  return f;
}

ExactPoly FactoredFraction::den_poly(const AtomTable& atoms) const {
  ExactPoly d = ExactPoly::constant(atoms.vars(), 1);
  for (const auto& [id, m] : den)
    for (int i = 0; i < m; ++i) d *= atoms.atom(id);
  return d;
}

FactoredFraction ff_mul(const FactoredFraction& a, const FactoredFraction& b) {
  FactoredFraction r{a.num * b.num, a.den};
  for (const auto& [id, m] : b.den) r.den[id] += m;
  return r;
}

namespace {

ExactPoly scale_up(const AtomTable& atoms, const FactoredFraction& f, const std::map<int, int>& target) {
  ExactPoly n = f.num;
  for (const auto& [id, m] : target) {
    auto it = f.den.find(id);
    int have = it == f.den.end() ? 0 : it->second;
    for (int i = have; i < m; ++i) n *= atoms.atom(id);
  }
  return n;
}

std::map<int, int> common_den(const std::vector<const FactoredFraction*>& fs) {
  std::map<int, int> d;
  for (const auto* f : fs)
    for (const auto& [id, m] : f->den) d[id] = std::max(d[id], m);
  return d;
}

}  // namespace

FactoredFraction ff_sum(const AtomTable& atoms, const std::vector<FactoredFraction>& terms) {
  std::vector<const FactoredFraction*> ptrs;
  for (const auto& t : terms) ptrs.push_back(&t);
  FactoredFraction r{ExactPoly(atoms.vars()), common_den(ptrs)};
  for (const auto& t : terms) r.num += scale_up(atoms, t, r.den);
  return r;
}

FactoredFraction ff_reduce(const AtomTable& atoms, const FactoredFraction& f) {
  FactoredFraction r = f;
  for (auto it = r.den.begin(); it != r.den.end();) {
    while (it->second > 0 && !atoms.is_unit(it->first)) {
      auto q = divide_exact(r.num, atoms.atom(it->first));
      if (!q) break;
      r.num = std::move(*q);
      --it->second;
    }
    if (it->second == 0) it = r.den.erase(it);
    else ++it;
  }
  return r;
}

bool ff_is_series(const AtomTable& atoms, const FactoredFraction& f) {
  for (const auto& [id, m] : f.den)
    if (m > 0 && !atoms.is_unit(id)) return false;
  return true;
}

ExactPoly ff_to_series(const AtomTable& atoms, const FactoredFraction& f, int max_root_degree) {
  if (!ff_is_series(atoms, f)) throw std::domain_error("fraction keeps a non-unit denominator");
  ExactPoly r = f.num.truncate(max_root_degree);
  for (const auto& [id, m] : f.den) {
    ExactPoly inv = series_inverse(atoms.atom(id), max_root_degree);
    for (int i = 0; i < m; ++i) r = mul_trunc(r, inv, max_root_degree);
  }
  return r;
}

std::string first_difference(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly d = a - b;
  if (d.is_zero()) return {};
  const auto& [e, c] = *d.terms().begin();
  ExactPoly m(d.vars());
  m.add_term(e, 1);
  return m.str() + " (lhs " + a.coefficient(e).get_str() + ", rhs " + b.coefficient(e).get_str() + ")";
}

SumCheck fraction_sum_equals(const AtomTable& atoms, const std::vector<FactoredFraction>& summands,
                             const FactoredFraction& rhs) {
  std::vector<const FactoredFraction*> ptrs;
  for (const auto& t : summands) ptrs.push_back(&t);
  ptrs.push_back(&rhs);
  auto den = common_den(ptrs);
  ExactPoly lhs(atoms.vars());
  for (const auto& t : summands) lhs += scale_up(atoms, t, den);
  ExactPoly r = scale_up(atoms, rhs, den);
  SumCheck out;
  out.witness = first_difference(lhs, r);
  out.equal = out.witness.empty();
  return out;
}

RationalFunction RationalFunction::of(const ExactPoly& p) {
  return {p, ExactPoly::constant(p.vars(), 1)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num.is_zero()) throw std::domain_error("division by zero rational function");
  return {a.num * b.den, a.den * b.num};
}

bool RationalFunction::equals(const RationalFunction& o) const { return num * o.den == o.num * den; }

}  // namespace vexloci
