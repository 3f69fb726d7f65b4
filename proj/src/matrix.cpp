#include "gvkit/matrix.hpp"

#include <algorithm>

namespace gvkit {

std::vector<size_t> FqMatrix::rref() {
  const Field& F = field_;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
    FieldElement piv_inv = F.inv({at(row, col)});
    for (size_t c = col; c < cols_; ++c)
      at(row, c) = F.mul(piv_inv, {at(row, c)}).v;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      FieldElement factor{at(r, col)};
      for (size_t c = col; c < cols_; ++c)
        at(r, c) = F.sub({at(r, c)}, F.mul(factor, {at(row, c)})).v;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t FqMatrix::rank() const {
  FqMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<uint32_t>> FqMatrix::nullspace() const {
  FqMatrix r = *this;
  std::vector<size_t> pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<uint32_t>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[free] = 1;
    // pivot row i has leading 1 at pivots[i]; solve x_pivot = -A[i][free]
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = field_.neg({r.at(i, free)}).v;
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpan::reduce(std::vector<uint32_t>& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t coeff = v[pivots_[i]];
    if (coeff == 0) continue;
    FieldElement c{coeff};
    for (size_t j = 0; j < cols_; ++j)
      v[j] = field_.sub({v[j]}, field_.mul(c, {rows_[i][j]})).v;
  }
}

bool RowSpan::add(std::vector<uint32_t> v) {
  if (v.size() != cols_) throw UsageError("row length mismatch");
  reduce(v);
  size_t pivot = cols_;
  for (size_t j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == cols_) return false;
  FieldElement inv = field_.inv({v[pivot]});
  for (size_t j = 0; j < cols_; ++j) v[j] = field_.mul(inv, {v[j]}).v;
  // keep earlier rows reduced against the new one
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t coeff = rows_[i][pivot];
    if (coeff == 0) continue;
    FieldElement c{coeff};
    for (size_t j = 0; j < cols_; ++j)
      rows_[i][j] = field_.sub({rows_[i][j]}, field_.mul(c, {v[j]})).v;
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

bool RowSpan::contains(std::vector<uint32_t> v) const {
  if (v.size() != cols_) throw UsageError("row length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

}  // namespace gvkit
