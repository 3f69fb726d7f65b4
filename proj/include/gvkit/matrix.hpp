#pragma once

#include <cstdint>
#include <vector>

#include "gvkit/field.hpp"

namespace gvkit {

/// Dense row-major matrix over F_q. Small sizes only; everything here is
/// plain Gaussian elimination.
class FqMatrix {
 public:
  FqMatrix(Field f, size_t rows, size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  FqMatrix(Field f, size_t rows, size_t cols, std::vector<uint32_t> data)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
    if (a_.size() != rows * cols) throw UsageError("matrix data size");
  }

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<uint32_t>& data() const { return a_; }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref();

  size_t rank() const;

  /// Basis of {x : A x = 0}, one vector per free column.
  std::vector<std::vector<uint32_t>> nullspace() const;

 private:
  Field field_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

/// Incrementally maintained row space (reduced echelon rows), for
/// membership tests and rank growth during sampling.
class RowSpan {
 public:
  RowSpan(Field f, size_t cols) : field_(std::move(f)), cols_(cols) {}

  size_t dim() const { return rows_.size(); }
  size_t cols() const { return cols_; }

  /// Adds the vector to the span; returns false if it was already a member.
  bool add(std::vector<uint32_t> v);

  bool contains(std::vector<uint32_t> v) const;

 private:
  void reduce(std::vector<uint32_t>& v) const;

  Field field_;
  size_t cols_;
  std::vector<std::vector<uint32_t>> rows_;  // echelon, normalized pivots
  std::vector<size_t> pivots_;
};

}  // namespace gvkit
