#include "syzstab/koszul.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace syzstab {

ModuleSlice free_slice(int r, int q) {
  ModuleSlice u;
  u.r = r;
  u.q = q;
  u.dim = sym_dim(r, q);
  u.next_dim = sym_dim(r, q + 1);
  const auto basis = sym_basis(r, q);
  u.mult.assign(r, std::vector<SparseVec>(basis.size()));
  for (int v = 0; v < r; ++v)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Monomial m = basis[b];
      ++m.exps[v];
      u.mult[v][b] = {{sym_index(m), Rat(1)}};
    }
  return u;
}

namespace {

void check_consecutive(const GradedSubspace& iq, const GradedSubspace& iq1) {
  const auto& a = iq.ambient();
  const auto& b = iq1.ambient();
  if (a.kind != Ambient::Kind::sym || b.kind != Ambient::Kind::sym || a.r != b.r || b.q != a.q + 1)
    throw std::invalid_argument("slices need pieces of Sym in consecutive degrees");
}

}  // namespace

ModuleSlice ideal_slice(const GradedSubspace& iq, const GradedSubspace& iq1) {
  check_consecutive(iq, iq1);
  const int r = iq.ambient().r, q = iq.ambient().q;
  ModuleSlice u;
  u.r = r;
  u.q = q;
  u.dim = iq.dim();
  u.next_dim = iq1.dim();
  std::unordered_map<std::uint32_t, std::uint32_t> row_of_pivot;
  for (std::uint32_t i = 0; i < iq1.pivots().size(); ++i) row_of_pivot.emplace(iq1.pivots()[i], i);
  const auto basis = sym_basis(r, q);
  u.mult.assign(r, std::vector<SparseVec>(u.dim));
  for (int v = 0; v < r; ++v) {
    std::vector<std::uint32_t> shifted(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Monomial m = basis[k];
      ++m.exps[v];
      shifted[k] = sym_index(m);
    }
    for (std::size_t b = 0; b < u.dim; ++b) {
      SparseVec& out = u.mult[v][b];
      for (const auto& e : iq.rows().row(b)) {
        auto it = row_of_pivot.find(shifted[e.col]);
        if (it != row_of_pivot.end()) out.push_back({it->second, e.val});
      }
      std::sort(out.begin(), out.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.col < y.col; });
    }
  }
  return u;
}

ModuleSlice quotient_slice(const GradedSubspace& iq, const GradedSubspace& iq1) {
  check_consecutive(iq, iq1);
  const int r = iq.ambient().r, q = iq.ambient().q;
  auto standard = [](const GradedSubspace& s) {
    std::vector<std::int64_t> pos(s.ambient().dim(), -1);
    std::vector<char> pivot(s.ambient().dim(), 0);
    for (auto c : s.pivots()) pivot[c] = 1;
    std::int64_t n = 0;
    for (std::size_t c = 0; c < pos.size(); ++c)
      if (!pivot[c]) pos[c] = n++;
    return std::make_pair(pos, n);
  };
  const auto [pos_q, n_q] = standard(iq);
  const auto [pos_q1, n_q1] = standard(iq1);
  std::unordered_map<std::uint32_t, std::uint32_t> row_of_pivot;
  for (std::uint32_t i = 0; i < iq1.pivots().size(); ++i) row_of_pivot.emplace(iq1.pivots()[i], i);

  ModuleSlice u;
  u.r = r;
  u.q = q;
  u.dim = static_cast<std::size_t>(n_q);
  u.next_dim = static_cast<std::size_t>(n_q1);
  u.mult.assign(r, std::vector<SparseVec>(u.dim));
  const auto basis = sym_basis(r, q);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (pos_q[c] < 0) continue;
    for (int v = 0; v < r; ++v) {
      Monomial m = basis[c];
      ++m.exps[v];
      const std::uint32_t idx = sym_index(m);
      SparseVec& out = u.mult[v][pos_q[c]];
      if (pos_q1[idx] >= 0) {
        out.push_back({static_cast<std::uint32_t>(pos_q1[idx]), Rat(1)});
        continue;
      }
      // normal form of a pivot monomial: minus the rest of its echelon row
      for (const auto& e : iq1.rows().row(row_of_pivot.at(idx)))
        if (pos_q1[e.col] >= 0) out.push_back({static_cast<std::uint32_t>(pos_q1[e.col]), -e.val});
    }
  }
  return u;
}

SparseMat koszul_matrix(int p, const ModuleSlice& u, Exec exec) {
  const int r = u.r;
  if (p < 0 || p > r) throw std::out_of_range("homological degree out of range");
  if (p == 0) return SparseMat(0, u.dim);
  const WedgeBasis src(r, p), dst(r, p - 1);
  const std::size_t ncols = src.size() * u.dim;
  std::vector<std::vector<Triplet>> per_subset(src.size());
  for_each_index(exec, src.size(), [&](std::size_t s) {
    auto& out = per_subset[s];
    const auto& subset = src.subset(s);
    for (int i = 0; i < p; ++i) {
      const int j = subset[i];
      const std::size_t t = static_cast<std::size_t>(dst.index_of_mask(src.mask(s) & ~(1u << j)));
      const bool negative = i % 2 == 1;
      for (std::size_t b = 0; b < u.dim; ++b)
        for (const auto& e : u.mult[j][b])
          out.push_back({t * u.next_dim + e.col, s * u.dim + b, negative ? Rat(-e.val) : e.val});
    }
  });
  std::vector<Triplet> all;
  for (auto& v : per_subset) std::move(v.begin(), v.end(), std::back_inserter(all));
  return SparseMat::from_triplets(dst.size() * u.next_dim, ncols, std::move(all));
}

std::uint64_t schur_dim(int r, int p, int q) {
  if (p < 0 || p >= r || q < 1) throw std::out_of_range("schur_dim needs 0 <= p < r and q >= 1");
  return BigInt(binom(r + q - 1, p + q) * binom(p + q - 1, p)).get_ui();
}

// ------------------------------------------------------------ Betti tables

namespace {

std::size_t wedge_dim(int r, int p) { return (p < 0 || p > r) ? 0 : binom(r, p).get_ui(); }

struct QuotientPieces {
  const Scheme& x;
  Exec exec;

  ModuleSlice slice(int q) const {
    auto iq = x.piece(q, exec);
    auto iq1 = x.piece(q + 1, exec);
    return quotient_slice(*iq, *iq1);
  }
  std::size_t dim(int q) const { return q < 0 ? 0 : x.hilbert(q, exec); }
};

// rank of d^R_{p,q}; zero when either side vanishes
std::size_t differential_rank(const QuotientPieces& pieces, int p, int q, Exec exec) {
  const int r = pieces.x.r();
  if (p <= 0 || p > r || q < 0) return 0;
  if (pieces.dim(q) == 0 || pieces.dim(q + 1) == 0) return 0;
  return rank(koszul_matrix(p, pieces.slice(q), exec), exec);
}

}  // namespace

std::size_t koszul_dim(const Scheme& x, int p, int q, Exec exec) {
  const int r = x.r();
  if (p < 0 || q < 0) throw std::out_of_range("Koszul cell out of range");
  if (p > r) return 0;
  QuotientPieces pieces{x, exec};
  const std::size_t kernel = wedge_dim(r, p) * pieces.dim(q) - differential_rank(pieces, p, q, exec);
  return kernel - differential_rank(pieces, p + 1, q - 1, exec);
}

std::size_t BettiTable::at(int p, int q) const {
  for (const auto& c : cells)
    if (c.p == p && c.q == q) return c.dim;
  throw std::out_of_range("cell not in table");
}

BettiTable betti_table(const Scheme& x, int pmax, int qmax, Exec exec) {
  const int r = x.r();
  if (pmax < 0 || qmax < 0) throw std::out_of_range("negative table bounds");
  // fill the piece cache up front
  for (int q = 0; q <= qmax + 1; ++q) x.piece(q, exec);
  QuotientPieces pieces{x, exec};

  // rank[p][q] for p in [0, pmax + 1], q in [0, qmax]
  const int np = pmax + 2, nq = qmax + 1;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(np * nq), 0);
  for_each_index(exec, ranks.size(), [&](std::size_t job) {
    const int p = static_cast<int>(job) / nq, q = static_cast<int>(job) % nq;
    ranks[job] = differential_rank(pieces, p, q, Exec::serial);
  });
  auto rank_at = [&](int p, int q) -> std::size_t {
    if (p < 0 || q < 0 || p >= np || q >= nq) return 0;
    return ranks[static_cast<std::size_t>(p * nq + q)];
  };

  BettiTable t;
  t.name = x.name();
  t.r = r;
  t.pmax = pmax;
  t.qmax = qmax;
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) {
      std::size_t dim = 0;
      if (p <= r) dim = wedge_dim(r, p) * pieces.dim(q) - rank_at(p, q) - rank_at(p + 1, q - 1);
      t.cells.push_back({p, q, dim});
    }
  return t;
}

std::string betti_json(const BettiTable& t) {
  nlohmann::ordered_json j;
  j["name"] = t.name;
  j["r"] = t.r;
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : t.cells) j["cells"].push_back({{"p", c.p}, {"q", c.q}, {"dim", c.dim}});
  return j.dump();
}

std::string betti_csv(const BettiTable& t) {
  std::string out = "p,q,dim\n";
  for (const auto& c : t.cells) out += std::to_string(c.p) + "," + std::to_string(c.q) + "," + std::to_string(c.dim) + "\n";
  return out;
}

std::string betti_pretty(const BettiTable& t) {
  std::ostringstream out;
  out << t.name << " (r=" << t.r << ")\n";
  out << std::setw(4) << "";
  for (int p = 0; p <= t.pmax; ++p) out << std::setw(6) << p;
  out << '\n';
  for (int q = 0; q <= t.qmax; ++q) {
    out << std::setw(3) << q << ':';
    for (int p = 0; p <= t.pmax; ++p) {
      const std::size_t d = t.at(p, q);
      out << std::setw(6) << (d == 0 ? std::string(".") : std::to_string(d));
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------- syzygy points

SyzygyKernel syzygy_kernel(const Scheme& x, int p, int q, Exec exec) {
  const int r = x.r();
  if (p < 0 || p >= r || q < 1) throw std::out_of_range("syzygy cell out of range");
  if (koszul_dim(x, p, q, exec) != 0) throw SyzygyUndefined();
  auto iq = x.piece(q, exec);
  auto iq1 = x.piece(q + 1, exec);
  const ModuleSlice u = ideal_slice(*iq, *iq1);
  const SparseMat k = kernel_basis(koszul_matrix(p, u, exec), exec);
  const Ambient amb = Ambient::wedge_sym(r, p, q);
  const std::size_t sdim = sym_dim(r, q);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < k.nrows(); ++i)
    for (const auto& e : k.row(i)) {
      const std::size_t subset = e.col / u.dim, b = e.col % u.dim;
      for (const auto& g : iq->rows().row(b)) t.push_back({i, subset * sdim + g.col, e.val * g.val});
    }
  SyzygyKernel out;
  out.p = p;
  out.q = q;
  out.basis = GradedSubspace(amb, SparseMat::from_triplets(k.nrows(), amb.dim(), std::move(t)), exec);
  return out;
}

std::vector<std::int64_t> ambient_weights(const Ambient& a, const std::vector<std::int64_t>& rho) {
  if (static_cast<int>(rho.size()) != a.r) throw std::invalid_argument("weight vector has wrong length");
  std::vector<std::int64_t> sym;
  for (const auto& m : sym_basis(a.r, a.q)) {
    std::int64_t w = 0;
    for (int i = 0; i < a.r; ++i) w += rho[i] * m.exps[i];
    sym.push_back(w);
  }
  if (a.kind == Ambient::Kind::sym) return sym;
  const WedgeBasis wb(a.r, a.p);
  std::vector<std::int64_t> out;
  out.reserve(wb.size() * sym.size());
  for (std::size_t s = 0; s < wb.size(); ++s) {
    std::int64_t ws = 0;
    for (int j : wb.subset(s)) ws += rho[j];
    for (auto w : sym) out.push_back(ws + w);
  }
  return out;
}

}  // namespace syzstab
