#include "syzstab/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace syzstab {

Rat coeff_at(const SparseVec& v, std::uint32_t c) {
  auto it = std::lower_bound(v.begin(), v.end(), c, [](const SparseEntry& e, std::uint32_t col) { return e.col < col; });
  if (it != v.end() && it->col == c) return it->val;
  return 0;
}

SparseVec lin_comb(const Rat& a, const SparseVec& x, const Rat& b, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  auto i = x.begin(), j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->col < j->col)) {
      if (a != 0) out.push_back({i->col, a * i->val});
      ++i;
    } else if (i == x.end() || j->col < i->col) {
      if (b != 0) out.push_back({j->col, b * j->val});
      ++j;
    } else {
      Rat s = a * i->val + b * j->val;
      if (s != 0) out.push_back({i->col, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMat SparseMat::from_rows(std::size_t ncols, std::vector<SparseVec> rows) {
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].col >= ncols) throw std::out_of_range("sparse row column out of range");
      if (r[k].val == 0) throw std::invalid_argument("explicit zero in sparse row");
      if (k > 0 && r[k - 1].col >= r[k].col) throw std::invalid_argument("sparse row not strictly sorted");
    }
  }
  SparseMat m;
  m.ncols_ = ncols;
  m.rows_ = std::move(rows);
  return m;
}

SparseMat SparseMat::from_triplets(std::size_t nrows, std::size_t ncols, std::vector<Triplet> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  SparseMat m(nrows, ncols);
  for (std::size_t k = 0; k < entries.size();) {
    const auto& t = entries[k];
    if (t.row >= nrows || t.col >= ncols) throw std::out_of_range("triplet index out of range");
    Rat sum = 0;
    std::size_t l = k;
    for (; l < entries.size() && entries[l].row == t.row && entries[l].col == t.col; ++l) sum += entries[l].val;
    if (sum != 0) m.rows_[t.row].push_back({static_cast<std::uint32_t>(t.col), std::move(sum)});
    k = l;
  }
  return m;
}

SparseMat SparseMat::from_dense(const std::vector<std::vector<Rat>>& dense, std::size_t ncols) {
  SparseMat m(dense.size(), ncols);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != ncols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < ncols; ++j)
      if (dense[i][j] != 0) m.rows_[i].push_back({static_cast<std::uint32_t>(j), dense[i][j]});
  }
  return m;
}

SparseMat SparseMat::identity(std::size_t n) {
  SparseMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({static_cast<std::uint32_t>(i), Rat(1)});
  return m;
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rat SparseMat::at(std::size_t i, std::size_t j) const { return coeff_at(rows_.at(i), static_cast<std::uint32_t>(j)); }

std::vector<Triplet> SparseMat::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i]) out.push_back({i, e.col, e.val});
  return out;
}

std::vector<std::vector<Rat>> SparseMat::to_dense() const {
  std::vector<std::vector<Rat>> d(rows_.size(), std::vector<Rat>(ncols_));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i]) d[i][e.col] = e.val;
  return d;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(ncols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i]) t.rows_[e.col].push_back({static_cast<std::uint32_t>(i), e.val});
  return t;
}

SparseMat SparseMat::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_.size()) throw std::out_of_range("row block out of range");
  SparseMat m;
  m.ncols_ = ncols_;
  m.rows_.assign(rows_.begin() + static_cast<std::ptrdiff_t>(first),
                 rows_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return m;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.ncols() != b.nrows()) throw std::invalid_argument("matrix product shape mismatch");
  SparseMat c(a.nrows(), b.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    std::map<std::uint32_t, Rat> acc;
    for (const auto& e : a.row(i))
      for (const auto& f : b.row(e.col)) acc[f.col] += e.val * f.val;
    for (auto& [col, v] : acc)
      if (v != 0) c.rows_[i].push_back({col, std::move(v)});
  }
  return c;
}

}  // namespace syzstab
