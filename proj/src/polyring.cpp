#include "syzstab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace syzstab {

RingCtx::RingCtx(int r) {
  if (r < 1) throw std::invalid_argument("ring needs at least one variable");
  for (int i = 0; i < r; ++i) names_.push_back("x" + std::to_string(i));
}

RingCtx::RingCtx(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("variable names must be distinct");
}

int RingCtx::index_of(std::string_view name) const {
  for (int i = 0; i < r(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
  return m;
}

Monomial Monomial::var(int r, int i) {
  Monomial m = one(r);
  m.exps[i] = 1;
  return m;
}

bool grlex_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(int r, const Rat& c) {
  Polynomial f(r);
  f.add_term(Monomial::one(r), c);
  return f;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rat& c) {
  Polynomial f(static_cast<int>(m.exps.size()));
  f.add_term(m, c);
  return f;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  return terms_.begin()->first.degree();
}

Rat Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.exps.size()) != r_) throw std::invalid_argument("monomial has wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial f = *this;
  if (f.r_ == 0) f.r_ = o.r_;
  for (const auto& [m, c] : o.terms_) f.add_term(m, c);
  return f;
}

Polynomial Polynomial::operator-() const {
  Polynomial f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial f(r_ ? r_ : o.r_);
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : o.terms_) f.add_term(m * n, c * d);
  return f;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial f(r_);
  if (c == 0) return f;
  for (const auto& [m, d] : terms_) f.terms_.emplace(m, d * c);
  return f;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial out = constant(r_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::permute_variables(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != r_) throw std::invalid_argument("permutation has wrong length");
  Polynomial f(r_);
  for (const auto& [m, c] : terms_) {
    Monomial n = Monomial::one(r_);
    for (int i = 0; i < r_; ++i) n.exps[sigma[i]] = m.exps[i];
    f.add_term(n, c);
  }
  return f;
}

SparseVec Polynomial::to_vector(int q) const {
  SparseVec v;
  for (const auto& [m, c] : terms_) {
    if (m.degree() != q) throw std::invalid_argument("polynomial has a term outside degree " + std::to_string(q));
    v.push_back({sym_index(m), c});
  }
  std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  return v;
}

Polynomial Polynomial::from_vector(int r, int q, const SparseVec& v) {
  auto basis = sym_basis(r, q);
  Polynomial f(r);
  for (const auto& e : v) f.add_term(basis.at(e.col), e.val);
  return f;
}

// ------------------------------------------------------------------- parsing

namespace {

struct RawTerm {
  Rat coeff = 1;
  std::vector<std::pair<int, int>> factors;  // (variable, exponent)
};

class TermParser {
 public:
  TermParser(std::string_view text, const std::vector<std::string>& names) : names_(names) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    if (s_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RawTerm t = term();
      if (negative) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  bool at_factor() const {
    return pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }

  RawTerm term() {
    RawTerm t;
    if (!at_factor()) fail("expected a term");
    while (true) {
      factor(t);
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        if (!at_factor()) fail("expected a factor after '*'");
        continue;
      }
      if (!at_factor()) break;
    }
    return t;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void factor(RawTerm& t) {
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected a denominator");
      }
      t.coeff *= parse_rat(num + "/" + den);
      return;
    }
    // longest variable name matching here
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.size() > best_len && s_.compare(pos_, n.size(), n) == 0) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best < 0) fail("unknown variable");
    pos_ += best_len;
    int e = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      std::string d = digits();
      if (d.empty()) fail("expected an exponent");
      e = std::stoi(d);
    }
    t.factors.emplace_back(best, e);
  }

  std::string s_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& names_;
};

std::string format_coeff_term(const Rat& c, const std::string& mono, bool first) {
  std::string out;
  Rat a = abs(c);
  if (c < 0) out += first ? "-" : " - ";
  else if (!first) out += " + ";
  if (mono.empty()) return out + to_string(a);
  if (a != 1) out += to_string(a) + "*";
  return out + mono;
}

}  // namespace

Polynomial parse_polynomial(const RingCtx& ctx, std::string_view text) {
  Polynomial f(ctx.r());
  for (const auto& t : TermParser(text, ctx.names()).parse()) {
    Monomial m = Monomial::one(ctx.r());
    for (auto [v, e] : t.factors) m.exps[v] += e;
    f.add_term(m, t.coeff);
  }
  return f;
}

std::string format_polynomial(const RingCtx& ctx, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string mono;
    for (int i = 0; i < ctx.r(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx.name(i);
      if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
    }
    out += format_coeff_term(c, mono, first);
    first = false;
  }
  return out;
}

// ------------------------------------------------------------------- bases

std::uint64_t sym_dim(int r, int q) {
  if (q < 0) return 0;
  return binom(r + q - 1, q).get_ui();
}

std::vector<Monomial> sym_basis(int r, int q) {
  std::vector<Monomial> out;
  out.reserve(sym_dim(r, q));
  Monomial m = Monomial::one(r);
  // descending lex over exponent vectors of total degree q
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r - 1) {
      m.exps[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exps[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, q);
  return out;
}

std::uint32_t sym_index(const Monomial& m) {
  const int r = static_cast<int>(m.exps.size());
  int left = m.degree();
  std::uint64_t idx = 0;
  for (int i = 0; i + 1 < r; ++i) {
    // monomials with the same prefix and a larger exponent at i
    for (int e = left; e > m.exps[i]; --e) idx += sym_dim(r - i - 1, left - e);
    left -= m.exps[i];
  }
  return static_cast<std::uint32_t>(idx);
}

WedgeBasis::WedgeBasis(int r, int p) : r_(r), p_(p) {
  if (p < 0 || p > r || r > 32) throw std::out_of_range("wedge degree out of range");
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      std::uint32_t mask = 0;
      for (int i : cur) mask |= 1u << i;
      index_.emplace(mask, static_cast<std::uint32_t>(subsets_.size()));
      subsets_.push_back(cur);
      masks_.push_back(mask);
      return;
    }
    for (int i = start; i < r; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::int64_t WedgeBasis::index_of_mask(std::uint32_t mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

SparseMat mult_map(int r, int q, const SparseMat& rows, int v) {
  if (rows.ncols() != sym_dim(r, q)) throw std::invalid_argument("rows are not in Sym^q");
  auto basis = sym_basis(r, q);
  std::vector<std::uint32_t> shifted(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Monomial m = basis[k];
    ++m.exps[v];
    shifted[k] = sym_index(m);
  }
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < rows.nrows(); ++j)
    for (const auto& e : rows.row(j)) t.push_back({shifted[e.col], j, e.val});
  return SparseMat::from_triplets(sym_dim(r, q + 1), rows.nrows(), std::move(t));
}

// ---------------------------------------------------------------- TargetPoly

TargetPoly TargetPoly::constant(const Rat& c) {
  TargetPoly f;
  f.add_term({0, 0, 0, 0}, c);
  return f;
}

TargetPoly TargetPoly::var(int i, int e) {
  if (i < 0 || i > 2) throw std::out_of_range("target algebra has at most three variables");
  Key k{0, 0, 0, 0};
  k[i] = e;
  TargetPoly f;
  f.add_term(k, 1);
  return f;
}

TargetPoly TargetPoly::eps() {
  TargetPoly f;
  f.add_term({0, 0, 0, 1}, 1);
  return f;
}

void TargetPoly::add_term(const Key& k, const Rat& c) {
  if (c == 0 || k[3] > 1) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TargetPoly TargetPoly::operator+(const TargetPoly& o) const {
  TargetPoly f = *this;
  for (const auto& [k, c] : o.terms_) f.add_term(k, c);
  return f;
}

TargetPoly TargetPoly::operator-(const TargetPoly& o) const { return *this + o * Rat(-1); }

TargetPoly TargetPoly::operator*(const TargetPoly& o) const {
  TargetPoly f;
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_) {
      if (a[3] + b[3] > 1) continue;
      f.add_term({a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}, c * d);
    }
  return f;
}

TargetPoly TargetPoly::operator*(const Rat& c) const {
  TargetPoly f;
  for (const auto& [k, d] : terms_) f.add_term(k, d * c);
  return f;
}

TargetPoly TargetPoly::pow(int e) const {
  TargetPoly out = constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

namespace {

std::vector<std::string> target_names(const TargetAlgebra& alg) {
  if (alg.vars.size() > 3) throw std::invalid_argument("target algebra has at most three variables");
  auto names = alg.vars;
  if (alg.nilpotent) names.push_back(alg.nilpotent_name);
  return names;
}

}  // namespace

TargetPoly parse_target(const TargetAlgebra& alg, std::string_view text) {
  const auto names = target_names(alg);
  TargetPoly f;
  for (const auto& t : TermParser(text, names).parse()) {
    TargetPoly::Key k{0, 0, 0, 0};
    for (auto [v, e] : t.factors) k[v < static_cast<int>(alg.vars.size()) ? v : 3] += e;
    f.add_term(k, t.coeff);
  }
  return f;
}

std::string format_target(const TargetAlgebra& alg, const TargetPoly& f) {
  if (f.is_zero()) return "0";
  const auto names = target_names(alg);
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < 4; ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < alg.vars.size() ? alg.vars[i] : alg.nilpotent_name;
      if (k[i] > 1) mono += "^" + std::to_string(k[i]);
    }
    out += format_coeff_term(c, mono, first);
    first = false;
  }
  return out;
}

TargetPoly substitute(const Polynomial& f, const std::vector<TargetPoly>& images) {
  if (static_cast<int>(images.size()) != f.r()) throw std::invalid_argument("need one image per variable");
  std::vector<std::vector<TargetPoly>> powers(images.size());
  TargetPoly out;
  for (const auto& [m, c] : f.terms()) {
    TargetPoly term = TargetPoly::constant(c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int e = m.exps[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(TargetPoly::constant(1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    out = out + term;
  }
  return out;
}

}  // namespace syzstab
