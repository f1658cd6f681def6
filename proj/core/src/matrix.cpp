#include "vexloci/matrix.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace vexloci {

SeriesMatrix::SeriesMatrix(int size, int channels, Symmetry symmetry)
    : size_(size), channels_(channels), symmetry_(symmetry) {
  if (size < 0 || size > 20) throw std::invalid_argument("matrix size out of range");
  cells_.assign(static_cast<std::size_t>(size) * size, ClassSeries(channels));
  owned_.resize(size);
}

int SeriesMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw std::out_of_range("matrix index");
  if (symmetry_ == Symmetry::Skew && i >= j) throw std::out_of_range("skew matrices store i < j only");
  return i * size_ + j;
}

ClassSeries& SeriesMatrix::at(int i, int j) { return cells_[index(i, j)]; }
const ClassSeries& SeriesMatrix::at(int i, int j) const { return cells_[index(i, j)]; }

void SeriesMatrix::set_owned(int row, std::vector<int> channels) { owned_.at(row) = std::move(channels); }

namespace {

std::vector<int> channels_of(const SeriesMatrix& m, unsigned rows) {
  std::vector<int> out;
  for (int r = 0; r < m.size(); ++r)
    if (rows >> r & 1u) out.insert(out.end(), m.owned(r).begin(), m.owned(r).end());
  return out;
}

void check_disjoint(const SeriesMatrix& m) {
  std::vector<int> seen(m.channels() + 1, 0);
  for (int r = 0; r < m.size(); ++r)
    for (int ch : m.owned(r)) {
      if (ch < 1 || ch > m.channels()) throw std::invalid_argument("owned channel out of range");
      if (seen[ch]++) throw std::invalid_argument("rows do not own disjoint channels");
    }
}

}  // namespace

ClassSeries det_of(const SeriesMatrix& m, int max_index_sum) {
  if (m.symmetry() != Symmetry::General) throw std::invalid_argument("det_of needs a general matrix");
  check_disjoint(m);
  const int n = m.size();
  // g[mask]: signed sum over assignments of rows 0..|mask|-1 to the columns in mask
  std::vector<ClassSeries> g(std::size_t(1) << n, ClassSeries(m.channels()));
  g[0] = ClassSeries::constant(m.channels(), 1);
  for (unsigned mask = 0; mask < g.size(); ++mask) {
    if (g[mask].is_zero()) continue;
    int r = std::popcount(mask);
    if (r == n) continue;
    auto done = channels_of(m, (1u << r) - 1);
    for (int c = 0; c < n; ++c) {
      if (mask >> c & 1u) continue;
      const ClassSeries& e = m.at(r, c);
      if (e.is_zero()) continue;
      ClassSeries t = disjoint_mul(g[mask], e, done, m.owned(r), max_index_sum);
      if (std::popcount(mask >> (c + 1)) % 2) t *= -1;
      g[mask | 1u << c] += t;
    }
  }
  return g.back().truncate(max_index_sum);
}

ClassSeries pf_of(const SeriesMatrix& m, int max_index_sum) {
  if (m.symmetry() != Symmetry::Skew) throw std::invalid_argument("pf_of needs a skew matrix");
  if (m.size() % 2) throw std::invalid_argument("Pfaffian of odd size; augment first");
  check_disjoint(m);
  std::unordered_map<unsigned, ClassSeries> memo;
  auto rec = [&](auto&& self, unsigned set) -> ClassSeries {
    if (set == 0) return ClassSeries::constant(m.channels(), 1);
    if (auto it = memo.find(set); it != memo.end()) return it->second;
    int i = std::countr_zero(set);
    unsigned rest = set & ~(1u << i);
    ClassSeries out(m.channels());
    int t = 0;
    for (int j = i + 1; j < m.size(); ++j) {
      if (!(rest >> j & 1u)) continue;
      ++t;
      const ClassSeries& e = m.at(i, j);
      if (e.is_zero()) continue;
      unsigned minor = rest & ~(1u << j);
      ClassSeries sub = self(self, minor);
      ClassSeries term = disjoint_mul(e, sub, channels_of(m, (1u << i) | (1u << j)), channels_of(m, minor),
                                      max_index_sum);
      if (t % 2 == 0) term *= -1;
      out += term;
    }
    memo.emplace(set, out);
    return out;
  };
  return rec(rec, (1u << m.size()) - 1).truncate(max_index_sum);
}

}  // namespace vexloci
