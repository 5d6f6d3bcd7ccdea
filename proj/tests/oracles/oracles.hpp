#pragma once

// Naive reference implementations, independent of the library's linear algebra.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

struct Echelon {
  Dense rows;                     // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan on a dense copy, pivots scaled to 1.
Echelon gauss_jordan(Dense m, std::size_t ncols);
std::size_t rank(const Dense& m, std::size_t ncols);
/// Basis of {x : m x = 0}, one vector per free column.
Dense nullspace(const Dense& m, std::size_t ncols);
/// True when the row spaces coincide.
bool same_span(const Dense& a, const Dense& b, std::size_t ncols);

/// Sum of the weights of the initial (lowest weight) space of span(rows),
/// from the dimensions of the pieces {v : v_j = 0 whenever w_j < c}.
std::int64_t initial_det_weight(const Dense& rows, std::size_t ncols, const std::vector<std::int64_t>& w);

/// Pascal triangle, zero outside 0 <= k <= n.
mpz_class pascal(int n, int k);
mpz_class summation_brute(int r, int p, int a);

using Exps = std::vector<int>;
struct Binomial {
  Exps plus, minus;  // plus - minus
};
/// The 2x2 minors of a 2 x n matrix of variables given by index.
std::vector<Binomial> minors_2xn(const std::vector<int>& top, const std::vector<int>& bottom, int r);
/// -(weight of the initial space of span(gens)) through initial_det_weight,
/// with the binomials expanded over monomials(r, degree).
std::int64_t binomial_mu(const std::vector<Binomial>& gens, const std::vector<std::int64_t>& rho);

/// Monomials of degree q in r variables (any fixed order) and an index map.
std::vector<Exps> monomials(int r, int q);

/// Koszul differential on the free module built with plain loops:
/// rows index subsets of size p-1 times monomials of degree q+1.
Dense free_koszul(int r, int p, int q);

/// Random dense matrix with entries in [-range, range], about density fraction nonzero.
Dense random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range, double density);

}  // namespace oracle
