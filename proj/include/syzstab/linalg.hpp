#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "syzstab/parallel.hpp"
#include "syzstab/sparse.hpp"

namespace syzstab {

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivots;  // ascending
  SparseMat reduced;                  // the `rank` nonzero rows of the RREF
};

/// Reduced row-echelon form over Q. Exact and deterministic; the Exec choice
/// never changes the output.
RrefResult rref(const SparseMat& m, Exec exec = Exec::parallel);

/// Rank via forward elimination only (no back substitution).
std::size_t rank(const SparseMat& m, Exec exec = Exec::parallel);

/// Basis of the right null space {x : m x = 0}, one vector per row, in RREF.
SparseMat kernel_basis(const SparseMat& m, Exec exec = Exec::parallel);

struct NotABasis : std::invalid_argument {
  NotABasis() : std::invalid_argument("not a basis") {}
};

struct WeightElimination {
  SparseMat initial_rows;  // RREF basis of the initial subspace
  std::int64_t det_weight = 0;
  std::vector<std::int64_t> row_weights;  // minimal weight of each echelon row, ascending
};

/// Initial (lowest-weight) subspace of the row space of `rows` under the
/// column grading `col_weights`. Rows must be linearly independent.
WeightElimination weight_elimination(const SparseMat& rows, std::span<const std::int64_t> col_weights,
                                     Exec exec = Exec::parallel);

/// Reduces v against an RREF basis; zero result means v lies in the row space.
SparseVec reduce_against(const RrefResult& basis, const SparseVec& v);
bool in_row_space(const RrefResult& basis, const SparseVec& v);

}  // namespace syzstab
