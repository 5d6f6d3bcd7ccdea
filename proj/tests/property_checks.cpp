#include "property_checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "syzstab/koszul.hpp"
#include "syzstab/linalg.hpp"
#include "syzstab/stability.hpp"

using namespace syzstab;

namespace props {

namespace {

std::string where(const std::string& what, std::uint64_t i) { return what + " #" + std::to_string(i); }

/// Mostly sparse noise or a low rank product.
oracle::Dense structured_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: return oracle::random_matrix(rng, rows, cols, 5, 0.05);
    case 1: {
      std::uniform_int_distribution<std::size_t> kd(1, 12);
      const std::size_t k = kd(rng);
      const auto a = oracle::random_matrix(rng, rows, k, 2, 0.5), b = oracle::random_matrix(rng, k, cols, 2, 0.3);
      oracle::Dense m(rows, std::vector<oracle::Q>(cols, 0));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < k; ++l)
          if (a[i][l] != 0)
            for (std::size_t j = 0; j < cols; ++j) m[i][j] += a[i][l] * b[l][j];
      return m;
    }
    default: return oracle::random_matrix(rng, rows, cols, 1, 0.02);
  }
}

Polynomial random_form(std::mt19937_64& rng, int r, int q, int terms) {
  const auto basis = sym_basis(r, q);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial f(r);
  for (int t = 0; t < terms; ++t) {
    int v = 0;
    while (v == 0) v = c(rng);
    f.add_term(basis[pick(rng)], Rat(v));
  }
  return f;
}

Scheme random_quadrics(std::mt19937_64& rng, int r, bool monomial) {
  std::uniform_int_distribution<int> count(1, 3), terms(2, 4);
  std::vector<Polynomial> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) gens.push_back(random_form(rng, r, 2, monomial ? 1 : terms(rng)));
  return Scheme("random", IdealPresentation(RingCtx(r), std::move(gens)));
}

OneParamSubgroup random_rho(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> w(-5, 5);
  while (true) {
    std::vector<std::int64_t> v(r);
    for (auto& x : v) x = w(rng);
    const auto s = std::accumulate(v.begin(), v.end(), std::int64_t{0});
    v[r - 1] -= s;
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) return OneParamSubgroup(v);
  }
}

/// mu at (1,2) when defined, else at (0,2); returns the p used.
int defined_p(const Scheme& x) {
  try {
    syzygy_kernel(x, 1, 2);
    return 1;
  } catch (const SyzygyUndefined&) {
    return 0;
  }
}

}  // namespace

Outcome rref_oracle(int trials, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto d = structured_matrix(rng, rows, cols);
    const auto m = testing::to_sparse(d, cols);
    const auto e = oracle::gauss_jordan(d, cols);
    const auto r = rref(m);
    std::vector<std::size_t> piv(r.pivots.begin(), r.pivots.end());
    o.record(r.rank == e.pivots.size() && piv == e.pivots && r.reduced.to_dense() == e.rows, where("rref", t));
    o.record(rank(m) == e.pivots.size() && rank(m.transpose()) == e.pivots.size(), where("rank", t));
    const auto k = kernel_basis(m);
    const bool annihilates = (m * k.transpose()).nnz() == 0;
    const bool nullity = k.nrows() == cols - e.pivots.size();
    const bool span = k.nrows() == 0 || oracle::same_span(k.to_dense(), oracle::nullspace(d, cols), cols);
    o.record(annihilates && nullity && span, where("kernel", t));
  }
  return o;
}

Outcome d_squared_zero(int cells, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 2), rd(2, 5), qd(1, 2);
  for (int c = 0; c < cells; ++c) {
    const int r = rd(rng);
    const int q = qd(rng);
    std::uniform_int_distribution<int> pd(2, r);
    const int p = pd(rng);
    ModuleSlice a, b;
    const int k = kind(rng);
    if (k == 0) {
      a = free_slice(r, q);
      b = free_slice(r, q + 1);
    } else {
      const Scheme x = random_quadrics(rng, r, false);
      const auto i0 = x.piece(q), i1 = x.piece(q + 1), i2 = x.piece(q + 2);
      a = k == 1 ? ideal_slice(*i0, *i1) : quotient_slice(*i0, *i1);
      b = k == 1 ? ideal_slice(*i1, *i2) : quotient_slice(*i1, *i2);
    }
    const SparseMat d1 = koszul_matrix(p, a), d2 = koszul_matrix(p - 1, b);
    o.record(d1.nrows() == d2.ncols() && (d2 * d1).nnz() == 0, where("cell", c));
  }
  return o;
}

Outcome schur_vs_kernels(int rmax) {
  Outcome o;
  for (int r = 1; r <= rmax; ++r)
    for (int p = 0; p < r; ++p)
      for (int q = 1; p + q <= 5; ++q) {
        const SparseMat d = koszul_matrix(p, free_slice(r, q));
        const std::size_t kernel = d.ncols() - rank(d);
        bool ok = kernel == schur_dim(r, p, q);
        if (ok && p >= 1 && d.ncols() <= 400) ok = d.ncols() - oracle::rank(oracle::free_koszul(r, p, q), d.ncols()) == kernel;
        o.record(ok, "r=" + std::to_string(r) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
  return o;
}

Outcome mu_homogeneity(int probes, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rd(3, 5), kd(2, 4);
  for (int t = 0; t < probes; ++t) {
    const Scheme x = random_quadrics(rng, rd(rng), false);
    const auto rho = random_rho(rng, x.r());
    const int k = kd(rng);
    const int p = defined_p(x);
    o.record(hm_weight(x, p, 2, rho.scaled(k)) == k * hm_weight(x, p, 2, rho), where("probe", t));
  }
  return o;
}

Outcome mu_permutation(int probes, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rd(3, 5);
  for (int t = 0; t < probes; ++t) {
    const Scheme x = random_quadrics(rng, rd(rng), false);
    const auto rho = random_rho(rng, x.r());
    std::vector<int> sigma(x.r());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const Scheme y = x.permuted(sigma, 3);
    const int p = defined_p(x);
    o.record(hm_weight(y, p, 2, rho.permuted(sigma)) == hm_weight(x, p, 2, rho), where("probe", t));
  }
  return o;
}

Outcome mu_antisymmetry(int probes, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rd(3, 5);
  for (int t = 0; t < probes; ++t) {
    const Scheme x = random_quadrics(rng, rd(rng), true);
    const auto rho = random_rho(rng, x.r());
    const int p = defined_p(x);
    o.record(hm_weight(x, p, 2, rho.inverse()) == -hm_weight(x, p, 2, rho), where("probe", t));
  }
  return o;
}

Outcome mu_oracle(int probes, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rd(3, 5);
  for (int t = 0; t < probes; ++t) {
    const Scheme x = random_quadrics(rng, rd(rng), false);
    const auto rho = random_rho(rng, x.r());
    // column weights of Sym^2 from the oracle's own monomial list
    const auto mons = oracle::monomials(x.r(), 2);
    oracle::Dense rows;
    for (const auto& g : x.ideal()->generators()) {
      std::vector<oracle::Q> v(mons.size(), 0);
      for (std::size_t j = 0; j < mons.size(); ++j) v[j] = g.coeff(Monomial{mons[j]});
      rows.push_back(std::move(v));
    }
    std::vector<std::int64_t> w;
    for (const auto& m : mons) {
      std::int64_t s = 0;
      for (int i = 0; i < x.r(); ++i) s += m[i] * rho.weights()[i];
      w.push_back(s);
    }
    o.record(hm_weight(x, 0, 2, rho) == -oracle::initial_det_weight(rows, mons.size(), w), where("probe", t));
  }
  return o;
}

Outcome serial_parallel(int trials, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rd(3, 5);
  for (int t = 0; t < trials; ++t) {
    const auto d = structured_matrix(rng, 50, 70);
    const auto m = testing::to_sparse(d, 70);
    const auto a = rref(m, Exec::serial), b = rref(m, Exec::parallel);
    o.record(a.rank == b.rank && a.pivots == b.pivots && a.reduced == b.reduced, where("rref", t));
    o.record(kernel_basis(m, Exec::serial) == kernel_basis(m, Exec::parallel), where("kernel", t));
    const Scheme x = random_quadrics(rng, rd(rng), false);
    const Scheme y("copy", IdealPresentation(x.ctx(), x.ideal()->generators()));
    o.record(betti_table(x, 3, 2, Exec::serial).cells == betti_table(y, 3, 2, Exec::parallel).cells, where("betti", t));
    const auto rho = random_rho(rng, x.r());
    o.record(hm_weight(x, 0, 2, rho, Exec::serial) == hm_weight(y, 0, 2, rho, Exec::parallel), where("mu", t));
  }
  return o;
}

}  // namespace props
