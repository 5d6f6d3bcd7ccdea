#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzstab/ideals.hpp"

namespace syzstab {

/// One graded piece U_q of a module over S together with the action of the
/// variables: mult[v][b] is x_v * (basis element b) in coordinates of U_{q+1}.
struct ModuleSlice {
  int r = 0;
  int q = 0;
  std::size_t dim = 0;
  std::size_t next_dim = 0;
  std::vector<std::vector<SparseVec>> mult;
};

ModuleSlice free_slice(int r, int q);
/// Basis of I_q: its echelon rows. Coordinates in I_{q+1}: values at its pivots.
ModuleSlice ideal_slice(const GradedSubspace& iq, const GradedSubspace& iq1);
/// Basis of R_q = Sym^q / I_q: the monomials that are not pivots of I_q.
ModuleSlice quotient_slice(const GradedSubspace& iq, const GradedSubspace& iq1);

/// d_{p,q}: Λ^p V ⊗ U_q -> Λ^{p-1} V ⊗ U_{q+1} as a matrix acting on columns,
///   x_J ⊗ y  ->  sum_i (-1)^i x_{J \ j_i} ⊗ x_{j_i} y.
/// Basis index of x_J ⊗ b is (index of J) * dim + b. For p = 0 the map is zero
/// (a 0-row matrix), so the kernel is all of U_q.
SparseMat koszul_matrix(int p, const ModuleSlice& u, Exec exec = Exec::parallel);

/// dim of the Schur module for the hook (q, 1^p): C(r+q-1, p+q) * C(p+q-1, p).
std::uint64_t schur_dim(int r, int p, int q);

struct KoszulCell {
  int p = 0;
  int q = 0;
  std::size_t dim = 0;
  friend bool operator==(const KoszulCell&, const KoszulCell&) = default;
};

/// dim K_{p,q}(R) for R = S / I_X, from the quotient pieces.
std::size_t koszul_dim(const Scheme& x, int p, int q, Exec exec = Exec::parallel);

struct BettiTable {
  std::string name;
  int r = 0;
  int pmax = 0;
  int qmax = 0;
  std::vector<KoszulCell> cells;  // sorted by (p, q)

  std::size_t at(int p, int q) const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// All K_{p,q} with p <= pmax, q <= qmax. Cells are independent and run in parallel.
BettiTable betti_table(const Scheme& x, int pmax, int qmax, Exec exec = Exec::parallel);
inline BettiTable betti_table_serial(const Scheme& x, int pmax, int qmax) {
  return betti_table(x, pmax, qmax, Exec::serial);
}

std::string betti_json(const BettiTable& t);
std::string betti_csv(const BettiTable& t);
std::string betti_pretty(const BettiTable& t);

struct SyzygyUndefined : std::runtime_error {
  SyzygyUndefined() : std::runtime_error("syzygy point undefined") {}
};

/// ker(Λ^p V ⊗ I_q -> Λ^{p-1} V ⊗ I_{q+1}) inside Λ^p V ⊗ Sym^q V.
struct SyzygyKernel {
  int p = 0;
  int q = 0;
  GradedSubspace basis;
  std::size_t dim() const { return basis.dim(); }
};

SyzygyKernel syzygy_kernel(const Scheme& x, int p, int q, Exec exec = Exec::parallel);

/// Torus weight of each basis vector x_J ⊗ m of the ambient.
std::vector<std::int64_t> ambient_weights(const Ambient& a, const std::vector<std::int64_t>& rho);

}  // namespace syzstab
