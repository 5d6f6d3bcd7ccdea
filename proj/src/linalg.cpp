#include "syzstab/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>

namespace syzstab {

namespace {

// Fraction-free elimination on integer rows. Every row is kept primitive
// (content 1, positive leading coefficient); RREF is recovered at the end by
// dividing each row by its lead.

template <class T>
struct IntEntry {
  std::uint32_t col;
  T val;
};

template <class T>
using IntRow = std::vector<IntEntry<T>>;

// int64 kernels report overflow instead of wrapping; INT64_MIN is excluded so
// that negation and abs stay safe.
bool mul_sub(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y, std::int64_t& out) {
  __int128 v = static_cast<__int128>(a) * x - static_cast<__int128>(b) * y;
  if (v > std::numeric_limits<std::int64_t>::max() || v <= std::numeric_limits<std::int64_t>::min()) return false;
  out = static_cast<std::int64_t>(v);
  return true;
}

bool mul_sub(const BigInt& a, const BigInt& x, const BigInt& b, const BigInt& y, BigInt& out) {
  out = a * x - b * y;
  return true;
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
BigInt gcd_abs(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_zero(std::int64_t v) { return v == 0; }
bool is_zero(const BigInt& v) { return v == 0; }
bool is_one(std::int64_t v) { return v == 1; }
bool is_one(const BigInt& v) { return v == 1; }
bool is_negative(std::int64_t v) { return v < 0; }
bool is_negative(const BigInt& v) { return v < 0; }

template <class T>
void make_primitive(IntRow<T>& row) {
  if (row.empty()) return;
  T g = row[0].val < 0 ? T(-row[0].val) : row[0].val;
  for (std::size_t k = 1; k < row.size() && !is_one(g); ++k) g = gcd_abs(g, row[k].val);
  const bool flip = is_negative(row[0].val);
  if (!is_one(g)) {
    for (auto& e : row) e.val /= g;
  }
  if (flip) {
    for (auto& e : row) e.val = -e.val;
  }
}

template <class T>
const T* find_coeff(const IntRow<T>& row, std::uint32_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const IntEntry<T>& e, std::uint32_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? &it->val : nullptr;
}

// row <- a*row - b*pivot with a, b chosen to cancel column c. False on overflow.
template <class T>
bool reduce_row(IntRow<T>& row, const IntRow<T>& pivot, std::uint32_t c) {
  const T* alpha_p = find_coeff(pivot, c);
  const T* beta_p = find_coeff(row, c);
  if (!beta_p) return true;
  T g = gcd_abs(*alpha_p, *beta_p);
  T a = *alpha_p / g, b = *beta_p / g;
  const T zero = 0;
  IntRow<T> out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin(), j = pivot.begin();
  T v;
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->col < j->col)) {
      if (!mul_sub(a, i->val, zero, zero, v)) return false;
      out.push_back({i->col, v});
      ++i;
    } else if (i == row.end() || j->col < i->col) {
      if (!mul_sub(zero, zero, b, j->val, v)) return false;
      out.push_back({j->col, v});
      ++j;
    } else {
      if (!mul_sub(a, i->val, b, j->val, v)) return false;
      if (!is_zero(v)) out.push_back({i->col, v});
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  row = std::move(out);
  return true;
}

template <class T>
struct Echelon {
  std::vector<IntRow<T>> rows;
  std::vector<std::uint32_t> pivot_rows;  // ordered by pivot column
};

// Forward elimination by leading-column buckets. Within a bucket the pivot is
// the smallest row index; the remaining rows are reduced independently, which
// is the data-parallel inner loop.
template <class T>
bool forward(Echelon<T>& ech, std::size_t ncols, Exec exec) {
  std::vector<std::vector<std::uint32_t>> buckets(ncols);
  for (std::uint32_t i = 0; i < ech.rows.size(); ++i)
    if (!ech.rows[i].empty()) buckets[ech.rows[i][0].col].push_back(i);
  std::atomic<bool> ok{true};
  for (std::uint32_t c = 0; c < ncols; ++c) {
    auto& bucket = buckets[c];
    if (bucket.empty()) continue;
    std::sort(bucket.begin(), bucket.end());
    const std::uint32_t piv = bucket[0];
    const IntRow<T>& pivot_row = ech.rows[piv];
    for_each_index(bucket.size() > 8 ? exec : Exec::serial, bucket.size() - 1, [&](std::size_t k) {
      if (!ok.load(std::memory_order_relaxed)) return;
      if (!reduce_row(ech.rows[bucket[k + 1]], pivot_row, c)) ok.store(false);
    });
    if (!ok) return false;
    for (std::size_t k = 1; k < bucket.size(); ++k) {
      const auto& r = ech.rows[bucket[k]];
      if (!r.empty()) buckets[r[0].col].push_back(bucket[k]);
    }
    ech.pivot_rows.push_back(piv);
    std::vector<std::uint32_t>().swap(bucket);
  }
  return true;
}

template <class T>
bool back_substitute(Echelon<T>& ech, Exec exec) {
  const auto& pr = ech.pivot_rows;
  std::atomic<bool> ok{true};
  for (std::size_t j = pr.size(); j-- > 1;) {
    const IntRow<T>& pivot_row = ech.rows[pr[j]];
    const std::uint32_t c = pivot_row[0].col;
    for_each_index(j > 32 ? exec : Exec::serial, j, [&](std::size_t i) {
      if (!ok.load(std::memory_order_relaxed)) return;
      auto& row = ech.rows[pr[i]];
      if (find_coeff(row, c) && !reduce_row(row, pivot_row, c)) ok.store(false);
    });
    if (!ok) return false;
  }
  return true;
}

// Rows scaled to primitive integer vectors (row space unchanged).
std::vector<IntRow<BigInt>> integer_rows(const SparseMat& m) {
  std::vector<IntRow<BigInt>> out(m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    const auto& r = m.row(i);
    BigInt l = 1;
    for (const auto& e : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.val.get_den_mpz_t());
    out[i].reserve(r.size());
    for (const auto& e : r) out[i].push_back({e.col, BigInt(e.val.get_num() * (l / e.val.get_den()))});
    make_primitive(out[i]);
  }
  return out;
}

std::optional<std::vector<IntRow<std::int64_t>>> narrow(const std::vector<IntRow<BigInt>>& rows) {
  std::vector<IntRow<std::int64_t>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(rows[i].size());
    for (const auto& e : rows[i]) {
      if (!e.val.fits_slong_p() || e.val == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
      out[i].push_back({e.col, static_cast<std::int64_t>(e.val.get_si())});
    }
  }
  return out;
}

Rat to_rat(std::int64_t v) { return Rat(static_cast<long>(v)); }
Rat to_rat(const BigInt& v) { return Rat(v); }

template <class T>
RrefResult finish_rref(Echelon<T>& ech, std::size_t ncols) {
  RrefResult res;
  std::vector<SparseVec> out;
  out.reserve(ech.pivot_rows.size());
  for (auto id : ech.pivot_rows) {
    const auto& row = ech.rows[id];
    Rat lead = to_rat(row[0].val);
    SparseVec v;
    v.reserve(row.size());
    for (const auto& e : row) v.push_back({e.col, to_rat(e.val) / lead});
    res.pivots.push_back(row[0].col);
    out.push_back(std::move(v));
  }
  res.rank = out.size();
  res.reduced = SparseMat::from_rows(ncols, std::move(out));
  return res;
}

template <class T>
std::optional<RrefResult> try_rref(std::vector<IntRow<T>> rows, std::size_t ncols, Exec exec, bool full) {
  Echelon<T> ech{std::move(rows), {}};
  if (!forward(ech, ncols, exec)) return std::nullopt;
  if (full && !back_substitute(ech, exec)) return std::nullopt;
  return finish_rref(ech, ncols);
}

RrefResult eliminate(const SparseMat& m, Exec exec, bool full) {
  auto big = integer_rows(m);
  if (auto small = narrow(big)) {
    if (auto res = try_rref(std::move(*small), m.ncols(), exec, full)) return std::move(*res);
  }
  return *try_rref(std::move(big), m.ncols(), exec, full);
}

}  // namespace

RrefResult rref(const SparseMat& m, Exec exec) { return eliminate(m, exec, true); }

std::size_t rank(const SparseMat& m, Exec exec) { return eliminate(m, exec, false).rank; }

SparseMat kernel_basis(const SparseMat& m, Exec exec) {
  const RrefResult r = rref(m, exec);
  std::vector<char> is_pivot(m.ncols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  // For a free column f: x_f = 1 and x_{pivot_i} = -R[i][f].
  std::vector<std::vector<Triplet>> per_free;
  std::vector<std::uint32_t> free_cols;
  for (std::uint32_t c = 0; c < m.ncols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::vector<std::size_t> free_index(m.ncols(), 0);
  for (std::size_t k = 0; k < free_cols.size(); ++k) free_index[free_cols[k]] = k;
  std::vector<Triplet> entries;
  for (std::size_t k = 0; k < free_cols.size(); ++k) entries.push_back({k, free_cols[k], Rat(1)});
  for (std::size_t i = 0; i < r.rank; ++i)
    for (const auto& e : r.reduced.row(i))
      if (!is_pivot[e.col]) entries.push_back({free_index[e.col], r.pivots[i], -e.val});
  SparseMat vectors = SparseMat::from_triplets(free_cols.size(), m.ncols(), std::move(entries));
  return rref(vectors, exec).reduced;
}

WeightElimination weight_elimination(const SparseMat& rows, std::span<const std::int64_t> col_weights, Exec exec) {
  if (col_weights.size() != rows.ncols()) throw std::invalid_argument("one weight per column required");
  const std::size_t n = rows.ncols();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return col_weights[a] < col_weights[b]; });
  std::vector<std::uint32_t> position(n);
  for (std::uint32_t k = 0; k < n; ++k) position[order[k]] = k;

  std::vector<SparseVec> permuted(rows.nrows());
  for (std::size_t i = 0; i < rows.nrows(); ++i) {
    for (const auto& e : rows.row(i)) permuted[i].push_back({position[e.col], e.val});
    std::sort(permuted[i].begin(), permuted[i].end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  }
  const RrefResult ech = rref(SparseMat::from_rows(n, std::move(permuted)), exec);
  if (ech.rank != rows.nrows()) throw NotABasis();

  WeightElimination out;
  std::vector<SparseVec> initial(ech.rank);
  for (std::size_t i = 0; i < ech.rank; ++i) {
    const std::int64_t w = col_weights[order[ech.pivots[i]]];
    out.row_weights.push_back(w);
    out.det_weight += w;
    for (const auto& e : ech.reduced.row(i))
      if (col_weights[order[e.col]] == w) initial[i].push_back({order[e.col], e.val});
    std::sort(initial[i].begin(), initial[i].end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  }
  out.initial_rows = rref(SparseMat::from_rows(n, std::move(initial)), exec).reduced;
  return out;
}

SparseVec reduce_against(const RrefResult& basis, const SparseVec& v) {
  SparseVec cur = v;
  for (std::size_t i = 0; i < basis.rank; ++i) {
    Rat c = coeff_at(cur, basis.pivots[i]);
    if (c != 0) cur = lin_comb(Rat(1), cur, Rat(-c), basis.reduced.row(i));
  }
  return cur;
}

bool in_row_space(const RrefResult& basis, const SparseVec& v) { return reduce_against(basis, v).empty(); }

}  // namespace syzstab
