#pragma once

#include <vector>

#include "vexloci/series.hpp"

namespace vexloci {

enum class Symmetry { General, Skew };

// Square matrix of class series. Each row owns a set of channels; an entry
// in row r may only involve the channels owned by r (general) or by r and
// its column (skew). Skew matrices store only i < j.
class SeriesMatrix {
 public:
  SeriesMatrix(int size, int channels, Symmetry symmetry);

  int size() const { return size_; }
  int channels() const { return channels_; }
  Symmetry symmetry() const { return symmetry_; }

  ClassSeries& at(int i, int j);
  const ClassSeries& at(int i, int j) const;

  void set_owned(int row, std::vector<int> channels);
  const std::vector<int>& owned(int row) const { return owned_.at(row); }

 private:
  int index(int i, int j) const;

  int size_;
  int channels_;
  Symmetry symmetry_;
  std::vector<ClassSeries> cells_;
  std::vector<std::vector<int>> owned_;
};

// Leibniz expansion, accumulated row by row over column subsets.
ClassSeries det_of(const SeriesMatrix& m, int max_index_sum);
// Recursive first-row expansion; Pf((0, a), (-a, 0)) = a.
ClassSeries pf_of(const SeriesMatrix& m, int max_index_sum);

}  // namespace vexloci
