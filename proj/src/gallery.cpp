#include "syzstab/gallery.hpp"

#include <algorithm>

#include "syzstab/koszul.hpp"

namespace syzstab {

namespace {

// Stored generic quadric for the section of the singular del Pezzo. Picked
// from {-3..3} coefficients with a nonzero x0^2 term; checked against the
// expected Betti table and the wall at 4.
constexpr const char* kGenericQuadric =
    "-x0^2 + 2*x0*x1 + x0*x2 - 2*x0*x3 - x0*x4 - 2*x0*x5 + 2*x1^2 - 2*x1*x3 - 2*x1*x4 + x1*x5 + 2*x2^2"
    " + 2*x2*x3 - 3*x2*x4 - x2*x5 - 2*x3^2 - 2*x3*x4 + 2*x3*x5 - 3*x4^2 - 2*x4*x5 - 2*x5^2";

PolyMatrix matrix_from_strings(const RingCtx& ctx, const std::vector<std::vector<std::string>>& cells) {
  PolyMatrix m;
  for (const auto& row : cells) {
    std::vector<Polynomial> out;
    for (const auto& c : row) out.push_back(c == "0" ? Polynomial(ctx.r()) : parse_polynomial(ctx, c));
    m.push_back(std::move(out));
  }
  return m;
}

Scheme as_scheme(const std::string& name, const IdealPresentation& i) { return Scheme(name, i); }

std::string count(std::size_t n) { return std::to_string(n); }

ExpectedCheck hilbert_check(int q, std::size_t value, std::string source) {
  return {"hilbert(" + std::to_string(q) + ")", count(value), std::move(source),
          [q](const Scheme& x) { return count(x.hilbert(q)); }};
}

ExpectedCheck piece_dim_check(int q, std::size_t value, std::string source) {
  return {"dim I_" + std::to_string(q), count(value), std::move(source),
          [q](const Scheme& x) { return count(x.piece(q)->dim()); }};
}

ExpectedCheck contains_check(int q, std::string poly, std::string source) {
  return {"I_" + std::to_string(q) + " contains " + poly, "yes", std::move(source), [q, poly](const Scheme& x) {
            const Polynomial f = parse_polynomial(x.ctx(), poly);
            return x.piece(q)->contains(f.to_vector(q)) ? std::string("yes") : std::string("no");
          }};
}

ExpectedCheck span_check(int q, std::vector<std::string> polys, std::string source) {
  std::string label = "I_" + std::to_string(q) + " = span(";
  for (std::size_t i = 0; i < polys.size(); ++i) label += (i ? ", " : "") + polys[i];
  label += ")";
  return {label, "equal", std::move(source), [q, polys](const Scheme& x) {
            std::vector<SparseVec> rows;
            for (const auto& p : polys) rows.push_back(parse_polynomial(x.ctx(), p).to_vector(q));
            GradedSubspace s(Ambient::sym(x.r(), q), SparseMat::from_rows(sym_dim(x.r(), q), std::move(rows)));
            return s == *x.piece(q) ? std::string("equal") : std::string("different");
          }};
}

std::vector<ExpectedCheck> carpet_checks(int k) {
  std::vector<ExpectedCheck> out;
  for (int q = 1; q <= 3; ++q)
    out.push_back(hilbert_check(q, static_cast<std::size_t>(2 + 2 * k * q * q), "published rank 2+i^2(g-1)"));
  if (k == 1) {
    out.push_back(piece_dim_check(2, 0, "published: a double quadric"));
    out.push_back(contains_check(4, "x0^2*x3^2 - 2*x0*x1*x2*x3 + x1^2*x2^2", "published: a double quadric"));
  }
  if (k == 2)
    out.push_back(span_check(2, {"x0*x2 - x1^2", "x3*x5 - x4^2", "x0*x5 + x2*x3 - 2*x1*x4"},
                             "published: a (2,2,2) complete intersection"));
  return out;
}

std::vector<ExpectedCheck> ribbon_checks(int k) {
  std::vector<ExpectedCheck> out;
  out.push_back(hilbert_check(1, static_cast<std::size_t>(2 * k + 1), "canonical curve of genus 2k+1"));
  for (int q = 2; q <= 3; ++q)
    out.push_back(hilbert_check(q, static_cast<std::size_t>((2 * q - 1) * 2 * k),
                                "derived: Hilbert polynomial of a canonical curve"));
  return out;
}

ExpectedCheck equals_param_check(int q, std::function<Parameterization()> make, std::string label,
                                 std::string source) {
  return {"I_" + std::to_string(q) + " equals " + label, "equal", std::move(source), [q, make](const Scheme& x) {
            return *x.piece(q) == *make().piece(q) ? std::string("equal") : std::string("different");
          }};
}

}  // namespace

// -------------------------------------------------------------- constructors

Parameterization carpet(int k) {
  if (k < 1) throw std::invalid_argument("carpet needs k >= 1");
  TargetAlgebra alg{{"s", "t"}, true, "e"};
  std::vector<TargetPoly> images;
  for (int i = 0; i <= k; ++i) images.push_back(TargetPoly::var(1, i));
  for (int i = 0; i <= k; ++i) {
    TargetPoly y = TargetPoly::var(0) * TargetPoly::var(1, i);
    if (i > 0) y = y + TargetPoly::eps() * TargetPoly::var(1, i - 1) * Rat(i);
    images.push_back(y);
  }
  Parameterization p(RingCtx(2 * k + 2), alg, std::move(images));
  p.carpet_k = k;
  return p;
}

Parameterization ribbon(int k) { return hyperplane_restrict(carpet(k)); }

IdealPresentation scroll(int a) {
  if (a != 1 && a != 2) throw std::invalid_argument("scroll needs a in {1, 2}");
  RingCtx ctx(6);
  PolyMatrix m(2);
  for (int row = 0; row < 2; ++row) {
    for (int i = 0; i < a; ++i) m[row].push_back(Polynomial::var(6, i + row));
    for (int i = a + 1; i <= 4; ++i) m[row].push_back(Polynomial::var(6, i + row));
  }
  return minors_ideal(ctx, m);
}

IdealPresentation veronese() {
  RingCtx ctx(6);
  return sym_minors_ideal(ctx, matrix_from_strings(ctx, {{"x0", "x1", "x2"}, {"x1", "x3", "x4"}, {"x2", "x4", "x5"}}));
}

PolyMatrix del_pezzo_singular_matrix() {
  RingCtx ctx(6);
  // its Pfaffians vanish on del_pezzo_singular_param()
  return matrix_from_strings(ctx, {{"0", "x1", "x1", "x2", "-x0"},
                                   {"-x1", "0", "-x4", "0", "x2"},
                                   {"-x1", "x4", "0", "x5", "x3"},
                                   {"-x2", "0", "-x5", "0", "x3"},
                                   {"x0", "-x2", "-x3", "-x3", "0"}});
}

IdealPresentation del_pezzo_singular() { return pfaffian_ideal(RingCtx(6), del_pezzo_singular_matrix()); }

Parameterization del_pezzo_singular_param() {
  TargetAlgebra alg{{"x", "y", "z"}, false, "e"};
  std::vector<TargetPoly> images;
  for (const char* f : {"x^2*y - x*y^2", "z*x^2", "z*x*y", "z*y^2", "z^2*x", "z^2*y"})
    images.push_back(parse_target(alg, f));
  return Parameterization(RingCtx(6), alg, std::move(images), 3);
}

Parameterization del_pezzo_smooth() {
  TargetAlgebra alg{{"x", "y", "z"}, false, "e"};
  std::vector<TargetPoly> images;
  for (const char* f : {"x^2*y - x*y*z", "x^2*z - x*y*z", "x*y^2 - x*y*z", "y^2*z - x*y*z", "x*z^2 - x*y*z",
                        "y*z^2 - x*y*z"})
    images.push_back(parse_target(alg, f));
  return Parameterization(RingCtx(6), alg, std::move(images), 3);
}

IdealPresentation quadric_section(const Scheme& s, const Polynomial& q) {
  if (q.r() != s.r() || q.degree() != 2) throw std::invalid_argument("section needs a quadric in the same ring");
  std::vector<Polynomial> gens = s.piece(2)->polynomials();
  gens.push_back(q);
  return IdealPresentation(s.ctx(), std::move(gens));
}

IdealPresentation c_zero() {
  return quadric_section(Scheme("sigma0", del_pezzo_singular()), Polynomial::var(6, 0).pow(2));
}

Polynomial generic_quadric() { return parse_polynomial(RingCtx(6), kGenericQuadric); }

PolyMatrix default_elliptic_matrix() {
  // Heisenberg-invariant form m_ij = l_{j-i} x_{1+(i+j mod 5)}, l = (0, a, b, -b, -a)
  const int a = 1, b = 1;
  const int lam[5] = {0, a, b, -b, -a};
  PolyMatrix m(5, std::vector<Polynomial>(5, Polynomial(6)));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const int l = lam[((j - i) % 5 + 5) % 5];
      if (l != 0) m[i][j] = Polynomial::var(6, 1 + (i + j) % 5) * Rat(l);
    }
  return m;
}

IdealPresentation elliptic_cone(const PolyMatrix& m) {
  IdealPresentation cone = pfaffian_ideal(RingCtx(6), m);
  for (const auto& g : cone.generators())
    for (const auto& [mono, c] : g.terms())
      if (mono.exps[0] != 0) throw std::invalid_argument("cone matrix must not involve x0");
  // the base curve in x1..x5
  std::vector<int> drop{0, 0, 1, 2, 3, 4};
  std::vector<Polynomial> base;
  for (const auto& g : cone.generators()) {
    Polynomial f(5);
    for (const auto& [mono, c] : g.terms()) {
      Monomial n = Monomial::one(5);
      for (int i = 1; i < 6; ++i) n.exps[drop[i]] = mono.exps[i];
      f.add_term(n, c);
    }
    base.push_back(f);
  }
  Scheme curve("elliptic-quintic", IdealPresentation(RingCtx(5), base));
  for (int q = 1; q <= 4; ++q)
    if (curve.hilbert(q) != static_cast<std::size_t>(5 * q))
      throw std::invalid_argument("matrix does not cut out an elliptic normal quintic (hilbert(" +
                                  std::to_string(q) + ") = " + std::to_string(curve.hilbert(q)) + ")");
  return cone;
}

// ------------------------------------------------------------------ catalog

std::vector<std::string> gallery_names() {
  return {"carpet-1", "carpet-2", "carpet-3", "ribbon-1", "ribbon-2", "ribbon-3", "scroll-1", "scroll-2",
          "veronese", "sigma",    "sigma0",   "sigma0-param", "C0", "sigma0-section", "elliptic-cone"};
}

bool is_reserved_name(const std::string& name) {
  static const std::vector<std::string> reserved{"dp5-2A1", "dp5-A2", "dp5-A1A2", "dp5-A3", "dp5-A4"};
  return std::find(reserved.begin(), reserved.end(), name) != reserved.end();
}

namespace {

std::optional<int> suffix_k(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string rest = name.substr(prefix.size());
  if (rest.empty() || rest.size() > 2 || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return std::nullopt;
  const int k = std::stoi(rest);
  return k >= 1 ? std::optional<int>(k) : std::nullopt;
}

}  // namespace

GalleryItem gallery_item(const std::string& name) {
  if (is_reserved_name(name))
    throw std::invalid_argument("gallery name '" + name + "' is reserved but not implemented");
  if (auto k = suffix_k(name, "carpet-"))
    return {name, "K3 carpet on the balanced scroll in P^" + std::to_string(2 * *k + 1), Scheme(name, carpet(*k)),
            carpet_checks(*k)};
  if (auto k = suffix_k(name, "ribbon-"))
    return {name, "balanced canonical ribbon of genus " + std::to_string(2 * *k + 1), Scheme(name, ribbon(*k)),
            ribbon_checks(*k)};
  if (name == "scroll-1" || name == "scroll-2") {
    const int a = name.back() - '0';
    return {name,
            "rational normal scroll S(" + std::to_string(a) + "," + std::to_string(4 - a) + "), Maroni invariant " +
                std::to_string(std::abs(4 - 2 * a)),
            as_scheme(name, scroll(a)),
            {piece_dim_check(2, 6, a == 2 ? "published: 6 quadrics" : "derived: rank of the C(4,2) minors"),
             hilbert_check(1, 6, "no linear forms vanish")}};
  }
  if (name == "veronese") {
    auto param = [] {
      TargetAlgebra alg{{"x", "y", "z"}, false, "e"};
      std::vector<TargetPoly> images;
      for (const char* f : {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}) images.push_back(parse_target(alg, f));
      return Parameterization(RingCtx(6), alg, std::move(images), 2);
    };
    return {name,
            "Veronese surface in P^5",
            as_scheme(name, veronese()),
            {piece_dim_check(2, 6, "derived: rank of the symmetric minors"),
             hilbert_check(2, 15, "derived: h0(P^2, O(4))"),
             equals_param_check(2, param, "the Veronese map", "derived: kernel of the Veronese map")}};
  }
  if (name == "sigma0")
    return {name,
            "singular quintic del Pezzo (Pfaffian model)",
            as_scheme(name, del_pezzo_singular()),
            {piece_dim_check(2, 5, "published: five quadrics"), contains_check(2, "x3*x4 - x2*x5", "published generator"),
             piece_dim_check(3, 25, "derived: 56 - 31 by Riemann-Roch"), hilbert_check(2, 16, "derived: 21 - 5"),
             equals_param_check(2, del_pezzo_singular_param, "the cubic model", "derived: kernel of the cubic model"),
             equals_param_check(3, del_pezzo_singular_param, "the cubic model", "derived: kernel of the cubic model")}};
  if (name == "sigma0-param")
    return {name,
            "singular quintic del Pezzo (cubics through infinitely near points)",
            Scheme(name, del_pezzo_singular_param()),
            {piece_dim_check(2, 5, "published: five quadrics"), piece_dim_check(3, 25, "derived: Riemann-Roch")}};
  if (name == "sigma")
    return {name,
            "smooth quintic del Pezzo (cubics through four points)",
            Scheme(name, del_pezzo_smooth()),
            {hilbert_check(1, 6, "no linear forms vanish"), piece_dim_check(2, 5, "published: five quadrics"),
             piece_dim_check(3, 25, "derived: Riemann-Roch")}};
  if (name == "C0")
    return {name,
            "x0^2 together with the quadrics of sigma0",
            as_scheme(name, c_zero()),
            {piece_dim_check(2, 6, "published: six generators"), hilbert_check(2, 15, "derived: 21 - 6")}};
  if (name == "sigma0-section")
    return {name,
            "stored generic quadric section of sigma0",
            as_scheme(name, quadric_section(Scheme("sigma0", del_pezzo_singular()), generic_quadric())),
            {piece_dim_check(2, 6, "published: five quadrics and one more"), hilbert_check(2, 15, "genus 6 canonical"),
             hilbert_check(3, 25, "genus 6 canonical")}};
  if (name == "elliptic-cone")
    return {name,
            "cone over an elliptic normal quintic",
            as_scheme(name, elliptic_cone(default_elliptic_matrix())),
            {piece_dim_check(2, 5, "derived: Pfaffian quadrics"), hilbert_check(1, 6, "no linear forms vanish")}};
  throw std::invalid_argument("unknown gallery item '" + name + "'");
}

std::vector<CheckResult> run_checks(const GalleryItem& item) {
  std::vector<CheckResult> out;
  for (const auto& c : item.expected) {
    CheckResult r{item.name, c.check, c.expected, "", c.source, false};
    try {
      r.actual = c.compute(item.scheme);
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.pass = r.actual == r.expected;
    out.push_back(std::move(r));
  }
  return out;
}

std::string export_item(const GalleryItem& item, int max_degree) {
  return write_ideal(item.scheme.ctx(), item.scheme.minimal_generators(max_degree));
}

}  // namespace syzstab
