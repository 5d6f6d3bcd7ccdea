#include "syzstab/divisors.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace syzstab {

std::string basis_name(DivisorBasis b) {
  switch (b) {
    case DivisorBasis::Mg: return "Mg";
    case DivisorBasis::K3A: return "K3A";
    case DivisorBasis::K3B: return "K3B";
  }
  return "?";
}

const std::vector<std::string>& basis_symbols(DivisorBasis b) {
  static const std::vector<std::string> mg{"lambda", "delta"};
  static const std::vector<std::string> a{"lambda", "kappa11", "kappa30"};
  static const std::vector<std::string> bb{"lambda", "gamma"};
  switch (b) {
    case DivisorBasis::Mg: return mg;
    case DivisorBasis::K3A: return a;
    case DivisorBasis::K3B: return bb;
  }
  return mg;
}

DivisorClass::DivisorClass(DivisorBasis basis, int g)
    : basis_(basis), g_(g), c_(basis_symbols(basis).size(), Rat(0)) {}

DivisorClass::DivisorClass(DivisorBasis basis, int g, std::vector<Rat> coeffs)
    : basis_(basis), g_(g), c_(std::move(coeffs)) {
  if (c_.size() != basis_symbols(basis).size()) throw std::invalid_argument("wrong number of coefficients");
}

namespace {

std::size_t symbol_index(DivisorBasis b, const std::string& s) {
  const auto& syms = basis_symbols(b);
  auto it = std::find(syms.begin(), syms.end(), s);
  if (it == syms.end()) throw std::invalid_argument("no symbol '" + s + "' in basis " + basis_name(b));
  return static_cast<std::size_t>(it - syms.begin());
}

void check_compatible(const DivisorClass& a, const DivisorClass& b) {
  if (a.basis() != b.basis() || a.g() != b.g()) throw std::invalid_argument("classes live in different bases");
}

Rat binq(long n, long k) { return Rat(binom(n, k)); }

}  // namespace

const Rat& DivisorClass::coeff(const std::string& symbol) const { return c_[symbol_index(basis_, symbol)]; }
Rat& DivisorClass::coeff(const std::string& symbol) { return c_[symbol_index(basis_, symbol)]; }

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  check_compatible(*this, o);
  DivisorClass d = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) d.c_[i] += o.c_[i];
  return d;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + o * Rat(-1); }

DivisorClass DivisorClass::operator*(const Rat& s) const {
  DivisorClass d = *this;
  for (auto& c : d.c_) c *= s;
  return d;
}

DivisorClass DivisorClass::to_k3b() const {
  if (basis_ == DivisorBasis::K3B) return *this;
  if (basis_ != DivisorBasis::K3A) throw std::invalid_argument("only K3 classes convert between K3A and K3B");
  const Rat g1(g_ + 1);
  const Rat& l = c_[0];
  const Rat& k11 = c_[1];
  const Rat& k30 = c_[2];
  return DivisorClass(DivisorBasis::K3B, g_,
                      {l + 12 * k11 + Rat(3 * (g_ - 1)) * k30, Rat(-4) / g1 * k11 + Rat(2) / g1 * k30});
}

DivisorClass DivisorClass::to_k3a() const {
  if (basis_ == DivisorBasis::K3A) return *this;
  if (basis_ != DivisorBasis::K3B) throw std::invalid_argument("only K3 classes convert between K3A and K3B");
  const Rat& gm = c_[1];
  return DivisorClass(DivisorBasis::K3A, g_, {c_[0], -Rat(g_ - 1) / 4 * gm, gm});
}

std::string DivisorClass::str() const {
  const auto& syms = basis_symbols(basis_);
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const Rat a = abs(c_[i]);
    if (out.empty()) out += c_[i] < 0 ? "-" : "";
    else out += c_[i] < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += syms[i];
  }
  return out.empty() ? "0" : out;
}

std::string DivisorClass::json() const {
  nlohmann::ordered_json j;
  j["basis"] = basis_name(basis_);
  nlohmann::ordered_json coeffs;
  const auto& syms = basis_symbols(basis_);
  for (std::size_t i = 0; i < c_.size(); ++i) coeffs[syms[i]] = to_string(c_[i]);
  j["coeffs"] = coeffs;
  return j.dump();
}

BigInt summation(int r, int p, int a) {
  if (a < 0 || a > p || p > r) throw std::out_of_range("summation needs 0 <= a <= p <= r");
  BigInt s = 0;
  for (int i = 0; i <= p; ++i) {
    BigInt t = binom(r, p - i) * binom(i, a);
    if (i % 2) s -= t;
    else s += t;
  }
  return s;
}

BigInt rank_E(Family f, int g, int n) {
  if (n < 0) throw std::out_of_range("negative twist");
  if (n == 0) return 1;
  if (f == Family::k3) return BigInt(2) + BigInt(n) * n * (g - 1);
  if (n == 1) return g;
  return BigInt(2 * n - 1) * (g - 1);
}

// ----------------------------------------------------------------------- K3

DivisorClass c1_E_k3(int g, int i) {
  if (i < 1) throw std::out_of_range("c1(E_i) needs i >= 1");
  const Rat r(i);
  return DivisorClass(DivisorBasis::K3A, g, {-(Rat(g - 1) * r * r / 2 + 1), r / 12, r * r * r / 6});
}

DivisorClass c1_S_pq_k3(int g, int p, int q) {
  if (p < 0 || p > g || q < 2) throw std::out_of_range("c1_S_pq_k3 needs 0 <= p <= g and q >= 2");
  DivisorClass s(DivisorBasis::K3A, g);
  for (int i = 0; i <= p; ++i) s = s + c1_E_k3(g, q + i) * (binq(g + 1, p - i) * (i % 2 ? -1 : 1));
  return s;
}

DivisorClass c1_S_pq_k3_closed(int g, int p, int q) {
  const Rat Q(q);
  const Rat b0 = binq(g, p), b1 = binq(g - 1, p - 1), b2 = binq(g - 2, p - 2), b3 = binq(g - 3, p - 3);
  const Rat k11 = (Q * b0 - b1) / 12;
  const Rat k30 = (Q * Q * Q * b0 - (3 * Q * Q + 3 * Q + 1) * b1 + (6 * Q + 6) * b2 - 6 * b3) / 6;
  const Rat lam = -Rat(g - 1) / 2 * (Q * Q * b0 - (2 * Q + 1) * b1 + 2 * b2) - b0;
  return DivisorClass(DivisorBasis::K3A, g, {lam, k11, k30});
}

DivisorClass c1_S_p2_k3_simplified(int g, int p) {
  const Rat b = binq(g - 2, p);
  const Rat k30 = b * (1 - Rat(p) / Rat(g - 2));
  const Rat lam = -b * (Rat(g - 1) - Rat(g - 1) / Rat(g - p - 1));
  return DivisorClass(DivisorBasis::K3A, g, {lam, Rat(0), k30});
}

DivisorClass k3_effective_class(int g, int p) {
  return DivisorClass(DivisorBasis::K3B, g,
                      {Rat((g - 1) * (2 * g - 3 * p - 1)) / Rat(g - p - 1), Rat(2) / Rat(g + 1)});
}

// ----------------------------------------------------------------------- Mg

DivisorClass c1_E_mg(int g, int n) {
  const Rat b = binq(n, 2);
  const Rat lam = 12 * b + 1 - Rat(n * (2 * n - 1)) * Rat(g - 1) / Rat(g);
  return DivisorClass(DivisorBasis::Mg, g, {lam, -b});
}

DivisorClass c1_S_pq_mg(int g, int p, int q) {
  if (p < 0 || p > g || q < 1) throw std::out_of_range("c1_S_pq_mg needs 0 <= p <= g and q >= 1");
  DivisorClass s(DivisorBasis::Mg, g);
  for (int i = 0; i <= p; ++i) s = s + c1_E_mg(g, q + i) * (binq(g, p - i) * (i % 2 ? -1 : 1));
  return s;
}

DivisorClass c1_S_pq_mg_closed(int g, int p, int q) {
  const Rat G(g);
  const Rat m = binq(g - 3, p - 2) - q * binq(g - 2, p - 1) + binq(q, 2) * binq(g - 1, p);
  const Rat lam = m * (8 + 4 / G) - (G - 1) / G * (q * binq(g - 1, p) - binq(g - 2, p - 1)) + binq(g - 1, p);
  return DivisorClass(DivisorBasis::Mg, g, {lam, -m});
}

DivisorClass c1_S_0q_mg(int g, int q) {
  const Rat G(g), b = binq(q, 2);
  return DivisorClass(DivisorBasis::Mg, g, {b * (8 + 4 / G) - (Rat(q - 1) - Rat(q) / G), -b});
}

DivisorClass c1_S_p2_mg(int g, int p) {
  const Rat G(g), b = binq(g - 3, p);
  return DivisorClass(DivisorBasis::Mg, g, {b * (8 + 4 / G - Rat((g - 1) * (g - 2)) / (G * (g - p - 1))), -b});
}

DivisorClass polarization(const Rat& beta) {
  if (beta < 0) throw std::out_of_range("beta must be non-negative");
  return c1_S_pq_mg(6, 0, 2) + c1_S_pq_mg(6, 1, 2) * beta;
}

Rat slope(const DivisorClass& d) {
  if (d.basis() != DivisorBasis::Mg) throw std::invalid_argument("slope needs a class in lambda, delta");
  const Rat b = -d.coeff("delta");
  if (b == 0) throw std::domain_error("infinite slope");
  return d.coeff("lambda") / b;
}

Rat alpha_of_slope(const Rat& s) {
  if (s == 0) throw std::domain_error("zero slope");
  return 2 - Rat(13) / s;
}

Rat alpha_of_beta(const Rat& beta) { return alpha_of_slope(slope(polarization(beta))); }

Rat alpha_limit() { return alpha_of_slope(slope(c1_S_pq_mg(6, 1, 2))); }

}  // namespace syzstab
