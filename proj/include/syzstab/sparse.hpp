#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "syzstab/rational.hpp"

namespace syzstab {

struct SparseEntry {
  std::uint32_t col;
  Rat val;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector: entries strictly increasing in col, no explicit zeros.
using SparseVec = std::vector<SparseEntry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rat val;
};

/// Value of v at column c (zero when absent).
Rat coeff_at(const SparseVec& v, std::uint32_t c);

/// a*x + b*y, merged and with zeros dropped.
SparseVec lin_comb(const Rat& a, const SparseVec& x, const Rat& b, const SparseVec& y);

/// Row-major sparse matrix over Q. Rows are SparseVecs, so entries are
/// sorted by (row, col) with no duplicates and no stored zeros.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows) {}

  /// Takes rows that are already normalized (sorted, zero-free); checks it.
  static SparseMat from_rows(std::size_t ncols, std::vector<SparseVec> rows);
  /// Sums duplicate positions and drops zeros.
  static SparseMat from_triplets(std::size_t nrows, std::size_t ncols, std::vector<Triplet> entries);
  static SparseMat from_dense(const std::vector<std::vector<Rat>>& dense, std::size_t ncols);
  static SparseMat identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t nnz() const;
  bool empty() const { return rows_.empty(); }

  const SparseVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  Rat at(std::size_t i, std::size_t j) const;

  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Rat>> to_dense() const;
  SparseMat transpose() const;
  /// Rows [first, first+count).
  SparseMat row_block(std::size_t first, std::size_t count) const;

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ncols_ = 0;
  std::vector<SparseVec> rows_;
};

}  // namespace syzstab
