#include "vexloci/series.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace vexloci {

namespace {

void check_channel(int channel, int channels) {
  if (channel < 1 || channel > channels)
    throw std::out_of_range("channel " + std::to_string(channel) + " outside 1.." + std::to_string(channels));
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

int Monomial::index_sum() const {
  int s = 0;
  for (int i = 0; i < channels; ++i) s += idx[i];
  return s;
}

bool Monomial::has_negative_index() const {
  for (int i = 0; i < channels; ++i)
    if (idx[i] < 0) return true;
  return false;
}

std::string Monomial::text() const {
  std::ostringstream os;
  bool first = true;
  if (beta > 0) {
    os << (beta == 1 ? std::string("b") : "b^" + std::to_string(beta));
    first = false;
  }
  for (int i = 0; i < channels; ++i) {
    if (!first) os << " * ";
    first = false;
    os << (kind(i) == Kind::E ? 'e' : 'c') << '[' << idx[i] << "](" << (i + 1) << ')';
  }
  if (first) os << '1';
  return os.str();
}

Monomial parse_monomial(const std::string& text) {
  static const std::regex beta_re(R"(b(\^(\d+))?)");
  static const std::regex sym_re(R"(([ce])\[(-?\d+)\]\((\d+)\))");
  Monomial m;
  std::vector<int> seen;
  std::string s = trim(text);
  if (s == "1") return m;
  std::stringstream ss(s);
  std::string tok;
  int max_ch = 0;
  std::vector<std::pair<int, std::pair<Kind, int>>> syms;
  while (std::getline(ss, tok, '*')) {
    tok = trim(tok);
    std::smatch mt;
    if (std::regex_match(tok, mt, beta_re)) {
      m.beta = static_cast<std::int16_t>(m.beta + (mt[2].matched ? std::stoi(mt[2]) : 1));
    } else if (std::regex_match(tok, mt, sym_re)) {
      int ch = std::stoi(mt[3]);
      if (ch < 1 || ch > kMaxChannels) throw std::invalid_argument("bad channel in " + text);
      syms.push_back({ch, {mt[1] == "e" ? Kind::E : Kind::C, std::stoi(mt[2])}});
      max_ch = std::max(max_ch, ch);
    } else {
      throw std::invalid_argument("bad monomial token '" + tok + "'");
    }
  }
  m.channels = static_cast<std::uint8_t>(max_ch);
  std::vector<bool> have(max_ch + 1, false);
  for (const auto& [ch, ks] : syms) {
    if (have[ch]) throw std::invalid_argument("channel repeated in " + text);
    have[ch] = true;
    m.set_kind(ch - 1, ks.first);
    m.idx[ch - 1] = static_cast<std::int16_t>(ks.second);
  }
  for (int ch = 1; ch <= max_ch; ++ch)
    if (!have[ch]) throw std::invalid_argument("channel missing in " + text);
  return m;
}

ClassSeries::ClassSeries(int channels) : channels_(channels) {
  if (channels < 0 || channels > kMaxChannels) throw std::out_of_range("channel count");
}

ClassSeries ClassSeries::seed(const std::vector<int>& idx, const std::vector<Kind>& kinds) {
  ClassSeries s(static_cast<int>(idx.size()));
  Monomial m;
  m.channels = static_cast<std::uint8_t>(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    m.idx[i] = static_cast<std::int16_t>(idx[i]);
    if (i < kinds.size()) m.set_kind(static_cast<int>(i), kinds[i]);
  }
  s.add(m, 1);
  return s;
}

ClassSeries ClassSeries::constant(int channels, const Rational& c) {
  ClassSeries s(channels);
  Monomial m;
  m.channels = static_cast<std::uint8_t>(channels);
  s.add(m, c);
  return s;
}

Rational ClassSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ClassSeries::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.channels != channels_) throw std::invalid_argument("monomial channel count mismatch");
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassSeries& ClassSeries::operator+=(const ClassSeries& o) {
  if (is_zero() && channels_ != o.channels_) channels_ = o.channels_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ClassSeries& ClassSeries::operator-=(const ClassSeries& o) {
  if (is_zero() && channels_ != o.channels_) channels_ = o.channels_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ClassSeries& ClassSeries::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ClassSeries ClassSeries::truncate(int max_index_sum) const {
  ClassSeries r(channels_);
  for (const auto& [m, c] : terms_)
    if (m.index_sum() <= max_index_sum) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

ClassSeries ClassSeries::beta_zero() const {
  ClassSeries r(channels_);
  for (const auto& [m, c] : terms_)
    if (m.beta == 0) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

ClassSeries ClassSeries::drop_negative() const {
  ClassSeries r(channels_);
  for (const auto& [m, c] : terms_)
    if (!m.has_negative_index()) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

ClassSeries ClassSeries::widen(int channels) const {
  if (channels < channels_) throw std::invalid_argument("widen cannot shrink");
  ClassSeries r(channels);
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    m.channels = static_cast<std::uint8_t>(channels);
    r.add(m, c);
  }
  return r;
}

std::string ClassSeries::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1) os << a.get_str() << " * ";
    os << m.text();
  }
  return os.str();
}

ClassSeries shift(const ClassSeries& s, int channel, int power) {
  check_channel(channel, s.channels());
  ClassSeries r(s.channels());
  for (const auto& [key, c] : s.terms()) {
    Monomial m = key;
    int v = m.idx[channel - 1] + power;
    if (v < 0) continue;
    m.idx[channel - 1] = static_cast<std::int16_t>(v);
    r.add(m, c);
  }
  return r;
}

ClassSeries apply_delta(const ClassSeries& s, int channel) {
  check_channel(channel, s.channels());
  ClassSeries r(s.channels());
  for (const auto& [m, c] : s.terms())
    if (m.kind(channel - 1) == Kind::C) r.add(m, c);
  return r;
}

ClassSeries disjoint_mul(const ClassSeries& a, const ClassSeries& b, const std::vector<int>& channels_a,
                         const std::vector<int>& channels_b, int max_index_sum) {
  int k = std::max(a.channels(), b.channels());
  std::vector<int> owner(k + 1, 0);
  for (int ch : channels_a) {
    check_channel(ch, k);
    owner[ch] = 1;
  }
  for (int ch : channels_b) {
    check_channel(ch, k);
    if (owner[ch]) throw std::invalid_argument("disjoint_mul: channel " + std::to_string(ch) + " overlaps");
    owner[ch] = 2;
  }
  auto check_support = [&](const ClassSeries& s, int who) {
    for (const auto& [m, c] : s.terms())
      for (int ch = 1; ch <= s.channels(); ++ch)
        if (owner[ch] != who && (m.idx[ch - 1] != 0 || m.kind(ch - 1) != Kind::C))
          throw std::invalid_argument("disjoint_mul: series not supported on its channel set");
  };
  ClassSeries wa = a.widen(k), wb = b.widen(k);
  check_support(wa, 1);
  check_support(wb, 2);
  ClassSeries r(k);
  for (const auto& [ma, ca] : wa.terms()) {
    int sa = ma.index_sum();
    if (sa > max_index_sum) continue;
    for (const auto& [mb, cb] : wb.terms()) {
      if (sa + mb.index_sum() > max_index_sum) continue;
      Monomial m = ma;
      m.beta = static_cast<std::int16_t>(ma.beta + mb.beta);
      for (int ch = 1; ch <= k; ++ch)
        if (owner[ch] == 2) {
          m.idx[ch - 1] = mb.idx[ch - 1];
          m.set_kind(ch - 1, mb.kind(ch - 1));
        }
      r.add(m, ca * cb);
    }
  }
  return r;
}

std::string Comparison::describe() const {
  if (equal) return "equal";
  return "mismatch at " + where->text() + ": " + lhs.get_str() + " vs " + rhs.get_str();
}

Comparison compare_series(const ClassSeries& a, const ClassSeries& b, int max_index_sum) {
  Comparison out;
  ClassSeries d = a.truncate(max_index_sum) - b.truncate(max_index_sum);
  if (d.is_zero()) return out;
  out.equal = false;
  out.where = d.terms().begin()->first;
  out.lhs = a.coefficient(*out.where);
  out.rhs = b.coefficient(*out.where);
  return out;
}

ClassSeries segre_convert(const ClassSeries& s, int channel, int max_index_sum) {
  check_channel(channel, s.channels());
  ClassSeries r(s.channels());
  const int ch = channel - 1;
  for (const auto& [m, c] : s.terms()) {
    if (m.kind(ch) != Kind::C) throw std::invalid_argument("segre_convert on an e-kind symbol");
    int base = m.index_sum();
    for (int j = 0; base + j <= max_index_sum; ++j) {
      Rational coef = binom_gen(m.idx[ch] - 1 + j, j);
      if (coef == 0) {
        if (j > 0) break;
        continue;
      }
      Monomial n = m;
      n.beta = static_cast<std::int16_t>(m.beta + j);
      n.idx[ch] = static_cast<std::int16_t>(m.idx[ch] + j);
      r.add(n, c * coef);
    }
  }
  return r;
}

}  // namespace vexloci
