#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "syzstab/rational.hpp"
#include "syzstab/sparse.hpp"

namespace syzstab {

class RingCtx {
 public:
  explicit RingCtx(int r);
  explicit RingCtx(std::vector<std::string> names);

  int r() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(std::string_view name) const;  // -1 if absent

  friend bool operator==(const RingCtx& a, const RingCtx& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

struct Monomial {
  std::vector<int> exps;

  int degree() const;
  Monomial operator*(const Monomial& o) const;
  static Monomial var(int r, int i);
  static Monomial one(int r) { return Monomial{std::vector<int>(r, 0)}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex with x0 > x1 > ...: true when a comes before b in basis order
/// (a is the larger monomial).
bool grlex_before(const Monomial& a, const Monomial& b);

struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_before(a, b); }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rat, GrlexDesc>;

  Polynomial() = default;
  explicit Polynomial(int r) : r_(r) {}
  static Polynomial constant(int r, const Rat& c);
  static Polynomial monomial(const Monomial& m, const Rat& c = 1);
  static Polynomial var(int r, int i) { return monomial(Monomial::var(r, i)); }

  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous polynomial (-1 for zero). Throws otherwise.
  int degree() const;
  Rat coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  Polynomial pow(int e) const;

  /// x_i -> x_{sigma[i]}.
  Polynomial permute_variables(const std::vector<int>& sigma) const;
  /// Coordinates in sym_basis(r, q) order.
  SparseVec to_vector(int q) const;
  static Polynomial from_vector(int r, int q, const SparseVec& v);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

 private:
  int r_ = 0;
  Terms terms_;
};

/// Grammar: terms joined by + or -, each term a product of factors with
/// optional '*'; a factor is an integer, a/b, or a variable with optional ^exp.
/// Whitespace is ignored.
Polynomial parse_polynomial(const RingCtx& ctx, std::string_view text);
std::string format_polynomial(const RingCtx& ctx, const Polynomial& f);

/// All degree-q monomials in r variables, graded-lex descending.
std::vector<Monomial> sym_basis(int r, int q);
std::uint64_t sym_dim(int r, int q);
/// Position of m within sym_basis(r, deg m).
std::uint32_t sym_index(const Monomial& m);

/// Strictly increasing p-subsets of {0..r-1} in lexicographic order.
class WedgeBasis {
 public:
  WedgeBasis(int r, int p);
  int r() const { return r_; }
  int p() const { return p_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<int>& subset(std::size_t i) const { return subsets_[i]; }
  std::uint32_t mask(std::size_t i) const { return masks_[i]; }
  /// Index of the subset with this bitmask; -1 if it has the wrong size.
  std::int64_t index_of_mask(std::uint32_t mask) const;

 private:
  int r_, p_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::uint32_t> masks_;
  std::unordered_map<std::uint32_t, std::uint32_t> index_;
};

/// Matrix of multiplication by x_v from the span of `rows` (vectors in
/// Sym^q) into Sym^{q+1}: one column per row of U.
SparseMat mult_map(int r, int q, const SparseMat& rows, int v);

/// Polynomial algebra in up to three variables, optionally extended by one
/// nilpotent e with e^2 = 0.
struct TargetAlgebra {
  std::vector<std::string> vars;
  bool nilpotent = false;
  std::string nilpotent_name = "e";
};

class TargetPoly {
 public:
  using Key = std::array<int, 4>;  // exponents of the variables, then of e

  TargetPoly() = default;
  static TargetPoly constant(const Rat& c);
  static TargetPoly var(int i, int e = 1);
  static TargetPoly eps();

  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Rat& c);

  TargetPoly operator+(const TargetPoly& o) const;
  TargetPoly operator-(const TargetPoly& o) const;
  TargetPoly operator*(const TargetPoly& o) const;
  TargetPoly operator*(const Rat& c) const;
  TargetPoly pow(int e) const;

  friend bool operator==(const TargetPoly&, const TargetPoly&) = default;

 private:
  std::map<Key, Rat> terms_;
};

TargetPoly parse_target(const TargetAlgebra& alg, std::string_view text);
std::string format_target(const TargetAlgebra& alg, const TargetPoly& f);

/// Ring homomorphism x_i -> images[i]; e^2 is truncated to zero.
TargetPoly substitute(const Polynomial& f, const std::vector<TargetPoly>& images);

}  // namespace syzstab
