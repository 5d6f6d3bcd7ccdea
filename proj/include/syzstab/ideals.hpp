#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "syzstab/linalg.hpp"
#include "syzstab/polyring.hpp"

namespace syzstab {

/// Names the graded piece a subspace lives in: Sym^q V, or Λ^p V ⊗ Sym^q V
/// with basis index subset_index * dim Sym^q + monomial_index.
struct Ambient {
  enum class Kind { sym, wedge_sym };
  Kind kind = Kind::sym;
  int r = 1;
  int p = 0;
  int q = 0;

  static Ambient sym(int r, int q) { return {Kind::sym, r, 0, q}; }
  static Ambient wedge_sym(int r, int p, int q) { return {Kind::wedge_sym, r, p, q}; }
  std::size_t dim() const;
  std::string label() const;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

class GradedSubspace {
 public:
  GradedSubspace() = default;
  /// Any spanning set; it is brought to reduced echelon form.
  GradedSubspace(Ambient ambient, const SparseMat& spanning, Exec exec = Exec::parallel);
  static GradedSubspace from_rref(Ambient ambient, RrefResult rref);

  const Ambient& ambient() const { return ambient_; }
  const SparseMat& rows() const { return echelon_.reduced; }
  const std::vector<std::uint32_t>& pivots() const { return echelon_.pivots; }
  const RrefResult& echelon() const { return echelon_; }
  std::size_t dim() const { return echelon_.rank; }

  bool contains(const SparseVec& v) const { return in_row_space(echelon_, v); }
  bool contains(const GradedSubspace& other) const;
  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.ambient_ == b.ambient_ && a.echelon_.reduced == b.echelon_.reduced;
  }

  /// Rows as polynomials (Sym ambients only).
  std::vector<Polynomial> polynomials() const;

 private:
  Ambient ambient_;
  RrefResult echelon_;
};

using PiecePtr = std::shared_ptr<const GradedSubspace>;

namespace detail {
struct PieceCache {
  std::mutex mutex;
  std::map<int, PiecePtr> pieces;
};
}  // namespace detail

class IdealPresentation {
 public:
  IdealPresentation(RingCtx ctx, std::vector<Polynomial> generators);

  const RingCtx& ctx() const { return ctx_; }
  int r() const { return ctx_.r(); }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Span of all m*g with deg m + deg g = q. Cached; safe to call concurrently.
  PiecePtr piece(int q, Exec exec = Exec::parallel) const;

 private:
  RingCtx ctx_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<detail::PieceCache> cache_;
};

class Parameterization {
 public:
  Parameterization(RingCtx ctx, TargetAlgebra target, std::vector<TargetPoly> images,
                   std::optional<int> homogeneous_degree = std::nullopt);

  const RingCtx& ctx() const { return ctx_; }
  int r() const { return ctx_.r(); }
  const TargetAlgebra& target() const { return target_; }
  const std::vector<TargetPoly>& images() const { return images_; }
  std::optional<int> homogeneous_degree() const { return homogeneous_degree_; }

  /// Set for carpets built by carpet(k); hyperplane_restrict needs it.
  std::optional<int> carpet_k;

  /// Kernel of the substitution map on Sym^q. Cached.
  PiecePtr piece(int q, Exec exec = Exec::parallel) const;
  /// The substitution matrix on Sym^q (rows: target monomials).
  SparseMat substitution_matrix(int q, Exec exec = Exec::parallel) const;

 private:
  RingCtx ctx_;
  TargetAlgebra target_;
  std::vector<TargetPoly> images_;
  std::optional<int> homogeneous_degree_;
  std::shared_ptr<detail::PieceCache> cache_;
};

/// A projective scheme given either by generators or by a parameterization.
class Scheme {
 public:
  Scheme(std::string name, IdealPresentation ideal) : name_(std::move(name)), source_(std::move(ideal)) {}
  Scheme(std::string name, Parameterization param) : name_(std::move(name)), source_(std::move(param)) {}

  const std::string& name() const { return name_; }
  const RingCtx& ctx() const;
  int r() const { return ctx().r(); }
  bool is_parameterized() const { return std::holds_alternative<Parameterization>(source_); }
  const IdealPresentation* ideal() const { return std::get_if<IdealPresentation>(&source_); }
  const Parameterization* parameterization() const { return std::get_if<Parameterization>(&source_); }

  PiecePtr piece(int q, Exec exec = Exec::parallel) const;
  std::size_t hilbert(int q, Exec exec = Exec::parallel) const;

  /// Minimal generators in degrees <= max_degree, read off degree by degree.
  std::vector<Polynomial> minimal_generators(int max_degree, Exec exec = Exec::parallel) const;
  /// Same scheme under x_i -> x_{sigma[i]}, presented by generators up to max_degree.
  Scheme permuted(const std::vector<int>& sigma, int max_degree) const;

 private:
  std::string name_;
  std::variant<IdealPresentation, Parameterization> source_;
};

PiecePtr ideal_piece(const Scheme& x, int q, Exec exec = Exec::parallel);
std::size_t hilbert_fn(const Scheme& x, int q, Exec exec = Exec::parallel);

/// Hyperplane section of a carpet: s = t^k, duplicated coordinate dropped.
Parameterization hyperplane_restrict(const Parameterization& carpet);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// All 2x2 minors of a 2 x n matrix, columns (i, j) with i < j in lex order.
IdealPresentation minors_ideal(const RingCtx& ctx, const PolyMatrix& m);
/// 2x2 minors of a symmetric 3x3 matrix, deduplicated up to sign.
IdealPresentation sym_minors_ideal(const RingCtx& ctx, const PolyMatrix& m);
/// The five 4x4 principal Pfaffians of an antisymmetric 5x5 matrix.
IdealPresentation pfaffian_ideal(const RingCtx& ctx, const PolyMatrix& m);

/// Ideal file: "r=<int>" header then one generator per line; '#' starts a comment.
IdealPresentation read_ideal(std::string_view text);
IdealPresentation read_ideal_file(const std::string& path);
std::string write_ideal(const RingCtx& ctx, const std::vector<Polynomial>& generators);

}  // namespace syzstab
