#include "syzstab/ideals.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace syzstab {

std::size_t Ambient::dim() const {
  const std::size_t s = sym_dim(r, q);
  if (kind == Kind::sym) return s;
  return binom(r, p).get_ui() * s;
}

std::string Ambient::label() const {
  if (kind == Kind::sym) return "Sym^" + std::to_string(q) + " V";
  return "L^" + std::to_string(p) + " V (x) Sym^" + std::to_string(q) + " V";
}

GradedSubspace::GradedSubspace(Ambient ambient, const SparseMat& spanning, Exec exec) : ambient_(ambient) {
  if (spanning.ncols() != ambient.dim()) throw std::invalid_argument("rows do not live in " + ambient.label());
  echelon_ = rref(spanning, exec);
}

GradedSubspace GradedSubspace::from_rref(Ambient ambient, RrefResult rref) {
  GradedSubspace g;
  g.ambient_ = ambient;
  g.echelon_ = std::move(rref);
  return g;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  if (!(other.ambient_ == ambient_)) return false;
  for (const auto& row : other.rows().rows())
    if (!contains(row)) return false;
  return true;
}

std::vector<Polynomial> GradedSubspace::polynomials() const {
  if (ambient_.kind != Ambient::Kind::sym) throw std::logic_error("not a space of polynomials");
  std::vector<Polynomial> out;
  for (const auto& row : rows().rows()) out.push_back(Polynomial::from_vector(ambient_.r, ambient_.q, row));
  return out;
}

// ------------------------------------------------------ IdealPresentation

IdealPresentation::IdealPresentation(RingCtx ctx, std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)), generators_(std::move(generators)), cache_(std::make_shared<detail::PieceCache>()) {
  for (auto& g : generators_) {
    if (g.r() != ctx_.r()) throw std::invalid_argument("generator lives in the wrong ring");
    if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
  }
  std::erase_if(generators_, [](const Polynomial& g) { return g.is_zero(); });
}

PiecePtr IdealPresentation::piece(int q, Exec exec) const {
  if (q < 0) throw std::out_of_range("negative degree");
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->pieces.find(q); it != cache_->pieces.end()) return it->second;
  }
  // I_q = V * I_{q-1} + (generators of degree q)
  std::vector<SparseVec> rows;
  if (q > 0) {
    PiecePtr prev = piece(q - 1, exec);
    for (int v = 0; v < r(); ++v) {
      SparseMat shifted = mult_map(r(), q - 1, prev->rows(), v).transpose();
      for (const auto& row : shifted.rows()) rows.push_back(row);
    }
  }
  for (const auto& g : generators_)
    if (g.degree() == q) rows.push_back(g.to_vector(q));
  auto result = std::make_shared<const GradedSubspace>(Ambient::sym(r(), q),
                                                       SparseMat::from_rows(sym_dim(r(), q), std::move(rows)), exec);
  std::lock_guard lock(cache_->mutex);
  return cache_->pieces.emplace(q, std::move(result)).first->second;
}

// ------------------------------------------------------- Parameterization

Parameterization::Parameterization(RingCtx ctx, TargetAlgebra target, std::vector<TargetPoly> images,
                                   std::optional<int> homogeneous_degree)
    : ctx_(std::move(ctx)),
      target_(std::move(target)),
      images_(std::move(images)),
      homogeneous_degree_(homogeneous_degree),
      cache_(std::make_shared<detail::PieceCache>()) {
  if (static_cast<int>(images_.size()) != ctx_.r()) throw std::invalid_argument("need one image per variable");
  if (target_.vars.size() > 3) throw std::invalid_argument("target algebra has at most three variables");
  if (homogeneous_degree_) {
    for (const auto& img : images_)
      for (const auto& [k, c] : img.terms())
        if (k[0] + k[1] + k[2] != *homogeneous_degree_)
          throw std::invalid_argument("image is not homogeneous of the declared degree");
  }
}

SparseMat Parameterization::substitution_matrix(int q, Exec exec) const {
  const auto basis = sym_basis(r(), q);
  std::vector<TargetPoly> col_images(basis.size());
  for_each_index(exec, basis.size(), [&](std::size_t j) {
    TargetPoly img = TargetPoly::constant(1);
    for (int i = 0; i < r(); ++i)
      for (int e = 0; e < basis[j].exps[i]; ++e) img = img * images_[i];
    col_images[j] = std::move(img);
  });
  std::map<TargetPoly::Key, std::size_t> row_of;
  for (const auto& img : col_images)
    for (const auto& [k, c] : img.terms()) row_of.emplace(k, 0);
  std::size_t n = 0;
  for (auto& [k, idx] : row_of) idx = n++;
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < col_images.size(); ++j)
    for (const auto& [k, c] : col_images[j].terms()) t.push_back({row_of[k], j, c});
  return SparseMat::from_triplets(n, basis.size(), std::move(t));
}

PiecePtr Parameterization::piece(int q, Exec exec) const {
  if (q < 0) throw std::out_of_range("negative degree");
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->pieces.find(q); it != cache_->pieces.end()) return it->second;
  }
  SparseMat k = kernel_basis(substitution_matrix(q, exec), exec);
  RrefResult ech;
  ech.rank = k.nrows();
  for (const auto& row : k.rows()) ech.pivots.push_back(row.front().col);
  ech.reduced = std::move(k);
  auto result = std::make_shared<const GradedSubspace>(GradedSubspace::from_rref(Ambient::sym(r(), q), std::move(ech)));
  std::lock_guard lock(cache_->mutex);
  return cache_->pieces.emplace(q, std::move(result)).first->second;
}

// ------------------------------------------------------------------ Scheme

const RingCtx& Scheme::ctx() const {
  return std::visit([](const auto& s) -> const RingCtx& { return s.ctx(); }, source_);
}

PiecePtr Scheme::piece(int q, Exec exec) const {
  return std::visit([&](const auto& s) { return s.piece(q, exec); }, source_);
}

std::size_t Scheme::hilbert(int q, Exec exec) const { return sym_dim(r(), q) - piece(q, exec)->dim(); }

std::vector<Polynomial> Scheme::minimal_generators(int max_degree, Exec exec) const {
  std::vector<Polynomial> gens;
  for (int q = 0; q <= max_degree; ++q) {
    const PiecePtr cur = piece(q, exec);
    std::vector<SparseVec> rows;
    if (q > 0) {
      const PiecePtr prev = piece(q - 1, exec);
      for (int v = 0; v < r(); ++v) {
        const SparseMat images = mult_map(r(), q - 1, prev->rows(), v).transpose();
        for (const auto& row : images.rows()) rows.push_back(row);
      }
    }
    GradedSubspace lower(Ambient::sym(r(), q), SparseMat::from_rows(cur->ambient().dim(), std::move(rows)), exec);
    // extend a basis of V*I_{q-1} to I_q using the canonical rows of I_q
    for (const auto& row : cur->rows().rows()) {
      if (lower.contains(row)) continue;
      gens.push_back(Polynomial::from_vector(r(), q, row));
      std::vector<SparseVec> grown = lower.rows().rows();
      grown.push_back(row);
      lower = GradedSubspace(Ambient::sym(r(), q), SparseMat::from_rows(cur->ambient().dim(), std::move(grown)), exec);
    }
  }
  return gens;
}

Scheme Scheme::permuted(const std::vector<int>& sigma, int max_degree) const {
  std::vector<Polynomial> gens;
  for (const auto& g : minimal_generators(max_degree)) gens.push_back(g.permute_variables(sigma));
  return Scheme(name_, IdealPresentation(ctx(), std::move(gens)));
}

PiecePtr ideal_piece(const Scheme& x, int q, Exec exec) { return x.piece(q, exec); }
std::size_t hilbert_fn(const Scheme& x, int q, Exec exec) { return x.hilbert(q, exec); }

Parameterization hyperplane_restrict(const Parameterization& carpet) {
  if (!carpet.carpet_k) throw std::invalid_argument("hyperplane section is only defined for carpets");
  const int k = *carpet.carpet_k;
  TargetAlgebra alg{{"t"}, true, "e"};
  std::vector<TargetPoly> images;
  for (int i = 0; i <= k; ++i) images.push_back(TargetPoly::var(0, i));
  for (int i = 1; i <= k; ++i) {
    TargetPoly y = TargetPoly::var(0, k + i);
    TargetPoly tail = TargetPoly::eps() * Rat(i);
    if (i > 1) tail = tail * TargetPoly::var(0, i - 1);
    images.push_back(y + tail);
  }
  return Parameterization(RingCtx(2 * k + 1), alg, std::move(images));
}

// ----------------------------------------------------- determinantal ideals

namespace {

void check_linear(const PolyMatrix& m, const RingCtx& ctx) {
  for (const auto& row : m)
    for (const auto& f : row) {
      if (f.r() != ctx.r() && !f.is_zero()) throw std::invalid_argument("matrix entry lives in the wrong ring");
      if (!f.is_zero() && f.degree() != 1) throw std::invalid_argument("matrix entries must be linear forms");
    }
}

Polynomial entry(const PolyMatrix& m, std::size_t i, std::size_t j, int r) {
  const Polynomial& f = m[i][j];
  return f.r() == 0 ? Polynomial(r) : f;
}

}  // namespace

IdealPresentation minors_ideal(const RingCtx& ctx, const PolyMatrix& m) {
  if (m.size() != 2 || m[1].size() != m[0].size() || m[0].size() < 2)
    throw std::invalid_argument("minors_ideal expects a 2 x n matrix with n >= 2");
  check_linear(m, ctx);
  std::vector<Polynomial> gens;
  const std::size_t n = m[0].size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(entry(m, 0, i, ctx.r()) * entry(m, 1, j, ctx.r()) -
                     entry(m, 0, j, ctx.r()) * entry(m, 1, i, ctx.r()));
  return IdealPresentation(ctx, std::move(gens));
}

IdealPresentation sym_minors_ideal(const RingCtx& ctx, const PolyMatrix& m) {
  if (m.size() != 3 || std::any_of(m.begin(), m.end(), [](const auto& row) { return row.size() != 3; }))
    throw std::invalid_argument("sym_minors_ideal expects a 3 x 3 matrix");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(entry(m, i, j, ctx.r()) == entry(m, j, i, ctx.r())))
        throw std::invalid_argument("matrix is not symmetric");
  check_linear(m, ctx);
  std::vector<Polynomial> gens;
  const int rows[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& a : rows)
    for (const auto& b : rows) {
      Polynomial f = entry(m, a[0], b[0], ctx.r()) * entry(m, a[1], b[1], ctx.r()) -
                     entry(m, a[0], b[1], ctx.r()) * entry(m, a[1], b[0], ctx.r());
      if (f.is_zero()) continue;
      bool seen = std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g == f || g == -f; });
      if (!seen) gens.push_back(f);
    }
  return IdealPresentation(ctx, std::move(gens));
}

IdealPresentation pfaffian_ideal(const RingCtx& ctx, const PolyMatrix& m) {
  if (m.size() != 5 || std::any_of(m.begin(), m.end(), [](const auto& row) { return row.size() != 5; }))
    throw std::invalid_argument("pfaffian_ideal expects a 5 x 5 matrix");
  const int r = ctx.r();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (!(entry(m, i, j, r) == -entry(m, j, i, r))) throw std::invalid_argument("matrix is not antisymmetric");
  check_linear(m, ctx);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 5; ++k) {
    int idx[4], n = 0;
    for (int i = 0; i < 5; ++i)
      if (i != k) idx[n++] = i;
    auto a = [&](int i, int j) { return entry(m, idx[i], idx[j], r); };
    gens.push_back(a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2));
  }
  return IdealPresentation(ctx, std::move(gens));
}

// ---------------------------------------------------------------- file io

IdealPresentation read_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<RingCtx> ctx;
  std::vector<Polynomial> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!ctx) {
      if (line.rfind("r=", 0) != 0 && line.rfind("r =", 0) != 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected header r=<int>");
      std::string num = line.substr(line.find('=') + 1);
      try {
        std::size_t used = 0;
        int r = std::stoi(num, &used);
        if (num.find_first_not_of(" \t", used) != std::string::npos || r < 1) throw std::invalid_argument("");
        ctx.emplace(r);
      } catch (const std::logic_error&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad variable count");
      }
      continue;
    }
    try {
      Polynomial g = parse_polynomial(*ctx, line);
      if (!g.is_homogeneous()) throw ParseError("generator is not homogeneous");
      gens.push_back(std::move(g));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!ctx) throw ParseError("missing header r=<int>");
  return IdealPresentation(*ctx, std::move(gens));
}

IdealPresentation read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_ideal(buf.str());
}

std::string write_ideal(const RingCtx& ctx, const std::vector<Polynomial>& generators) {
  std::string out = "r=" + std::to_string(ctx.r()) + "\n";
  for (const auto& g : generators) out += format_polynomial(ctx, g) + "\n";
  return out;
}

}  // namespace syzstab
