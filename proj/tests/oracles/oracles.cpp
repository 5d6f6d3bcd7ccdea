#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

Echelon gauss_jordan(Dense m, std::size_t ncols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Dense& m, std::size_t ncols) { return gauss_jordan(m, ncols).pivots.size(); }

Dense nullspace(const Dense& m, std::size_t ncols) {
  const Echelon e = gauss_jordan(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Dense out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Q> v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

bool same_span(const Dense& a, const Dense& b, std::size_t ncols) {
  const Echelon ea = gauss_jordan(a, ncols), eb = gauss_jordan(b, ncols);
  return ea.pivots == eb.pivots && ea.rows == eb.rows;
}

std::int64_t initial_det_weight(const Dense& rows, std::size_t ncols, const std::vector<std::int64_t>& w) {
  const std::size_t dim = rank(rows, ncols);
  std::set<std::int64_t> levels(w.begin(), w.end());
  // k(c) = dim of the vectors whose lowest weight is >= c
  auto k = [&](std::int64_t c) {
    Dense proj;
    for (const auto& row : rows) {
      std::vector<Q> p;
      for (std::size_t j = 0; j < ncols; ++j)
        if (w[j] < c) p.push_back(row[j]);
      proj.push_back(std::move(p));
    }
    std::size_t pc = 0;
    for (std::size_t j = 0; j < ncols; ++j) pc += w[j] < c;
    return dim - (pc == 0 ? 0 : rank(proj, pc));
  };
  std::int64_t total = 0;
  std::vector<std::int64_t> lv(levels.begin(), levels.end());
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const std::size_t here = k(lv[i]);
    const std::size_t above = i + 1 < lv.size() ? k(lv[i + 1]) : 0;
    total += lv[i] * static_cast<std::int64_t>(here - above);
  }
  return total;
}

mpz_class pascal(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<mpz_class> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

mpz_class summation_brute(int r, int p, int a) {
  mpz_class s = 0;
  for (int i = 0; i <= p; ++i) {
    mpz_class t = pascal(r, p - i) * pascal(i, a);
    s += (i % 2 == 0) ? t : mpz_class(-t);
  }
  return s;
}

std::vector<Binomial> minors_2xn(const std::vector<int>& top, const std::vector<int>& bottom, int r) {
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      Binomial b{Exps(r, 0), Exps(r, 0)};
      b.plus[top[i]]++;
      b.plus[bottom[j]]++;
      b.minus[top[j]]++;
      b.minus[bottom[i]]++;
      out.push_back(b);
    }
  return out;
}

std::int64_t binomial_mu(const std::vector<Binomial>& gens, const std::vector<std::int64_t>& rho) {
  if (gens.empty()) return 0;
  const int r = static_cast<int>(rho.size());
  int deg = 0;
  for (int e : gens.front().plus) deg += e;
  const auto mons = monomials(r, deg);
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  Dense rows;
  for (const auto& g : gens) {
    std::vector<Q> v(mons.size(), 0);
    v[index.at(g.plus)] += 1;
    v[index.at(g.minus)] -= 1;
    rows.push_back(std::move(v));
  }
  std::vector<std::int64_t> w;
  for (const auto& m : mons) {
    std::int64_t s = 0;
    for (int i = 0; i < r; ++i) s += m[i] * rho[i];
    w.push_back(s);
  }
  return -initial_det_weight(rows, mons.size(), w);
}

std::vector<Exps> monomials(int r, int q) {
  std::vector<Exps> out;
  Exps e(r, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == r - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  if (r > 0) rec(rec, 0, q);
  return out;
}

Dense free_koszul(int r, int p, int q) {
  std::vector<std::vector<int>> src_sets, dst_sets;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (static_cast<int>(s.size()) == p) src_sets.push_back(s);
    if (static_cast<int>(s.size()) == p - 1) dst_sets.push_back(s);
  }
  const auto src_mon = monomials(r, q), dst_mon = monomials(r, q + 1);
  std::map<std::vector<int>, std::size_t> dset;
  for (std::size_t i = 0; i < dst_sets.size(); ++i) dset[dst_sets[i]] = i;
  std::map<Exps, std::size_t> dmon;
  for (std::size_t i = 0; i < dst_mon.size(); ++i) dmon[dst_mon[i]] = i;
  Dense m(dst_sets.size() * dst_mon.size(), std::vector<Q>(src_sets.size() * src_mon.size(), 0));
  for (std::size_t s = 0; s < src_sets.size(); ++s)
    for (std::size_t b = 0; b < src_mon.size(); ++b)
      for (std::size_t i = 0; i < src_sets[s].size(); ++i) {
        std::vector<int> rest = src_sets[s];
        const int v = rest[i];
        rest.erase(rest.begin() + static_cast<long>(i));
        Exps e = src_mon[b];
        e[v]++;
        m[dset[rest] * dst_mon.size() + dmon[e]][s * src_mon.size() + b] += (i % 2 ? -1 : 1);
      }
  return m;
}

Dense random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range, double density) {
  std::uniform_int_distribution<int> val(-range, range);
  std::bernoulli_distribution keep(density);
  Dense m(rows, std::vector<Q>(cols, 0));
  for (auto& row : m)
    for (auto& x : row)
      if (keep(rng)) x = val(rng);
  return m;
}

}  // namespace oracle
