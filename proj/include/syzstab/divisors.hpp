#pragma once

#include <array>
#include <string>
#include <vector>

#include "syzstab/rational.hpp"

namespace syzstab {

/// Mg: {lambda, delta}; K3A: {lambda, kappa11, kappa30}; K3B: {lambda, gamma}.
enum class DivisorBasis { Mg, K3A, K3B };

std::string basis_name(DivisorBasis b);
const std::vector<std::string>& basis_symbols(DivisorBasis b);

/// Formal Q-linear combination of tautological classes at genus g.
class DivisorClass {
 public:
  DivisorClass(DivisorBasis basis, int g);
  DivisorClass(DivisorBasis basis, int g, std::vector<Rat> coeffs);

  DivisorBasis basis() const { return basis_; }
  int g() const { return g_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(const std::string& symbol) const;
  Rat& coeff(const std::string& symbol);

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator*(const Rat& s) const;

  /// kappa11 = 12 lambda - 4/(g+1) gamma, kappa30 = 3(g-1) lambda + 2/(g+1) gamma.
  DivisorClass to_k3b() const;
  /// gamma = kappa30 - (g-1)/4 kappa11.
  DivisorClass to_k3a() const;

  std::string str() const;
  std::string json() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  DivisorBasis basis_;
  int g_;
  std::vector<Rat> c_;
};

/// sum_{i=0}^{p} (-1)^i C(r, p-i) C(i, a).
BigInt summation(int r, int p, int a);

enum class Family { k3, curve };
/// K3: 2 + i^2 (g-1) (i >= 1). Curves: g for n = 1, (2n-1)(g-1) for n >= 2.
BigInt rank_E(Family f, int g, int n);

/// c1(E_i) = i/12 kappa11 + i^3/6 kappa30 - ((g-1) i^2 / 2 + 1) lambda.
DivisorClass c1_E_k3(int g, int i);
/// sum_{i=0}^{p} (-1)^i C(g+1, p-i) c1(E_{q+i}), in K3A.
DivisorClass c1_S_pq_k3(int g, int p, int q);
/// Closed form of the same sum after the summation lemma.
DivisorClass c1_S_pq_k3_closed(int g, int p, int q);
/// q = 2 simplification: C(g-2,p)((1 - p/(g-2)) kappa30 - (g-1 - (g-1)/(g-p-1)) lambda).
DivisorClass c1_S_p2_k3_simplified(int g, int p);
/// (g-1)(2g-3p-1)/(g-p-1) lambda + 2/(g+1) gamma, in K3B.
DivisorClass k3_effective_class(int g, int p);

/// c1(E_n) = C(n,2)(12 lambda - delta) + lambda - n(2n-1)(g-1)/g lambda.
DivisorClass c1_E_mg(int g, int n);
/// sum_{i=0}^{p} (-1)^i C(g, p-i) c1(E_{q+i}).
DivisorClass c1_S_pq_mg(int g, int p, int q);
DivisorClass c1_S_pq_mg_closed(int g, int p, int q);
/// C(q,2)((8 + 4/g) lambda - delta) - (q - 1 - q/g) lambda.
DivisorClass c1_S_0q_mg(int g, int q);
/// C(g-3,p)[(8 + 4/g - (g-1)(g-2)/(g(g-p-1))) lambda - delta].
DivisorClass c1_S_p2_mg(int g, int p);

/// c1(S_{0,2}) + beta c1(S_{1,2}) on M_6.
DivisorClass polarization(const Rat& beta);
/// a/b for a lambda - b delta; throws "infinite slope" when b = 0.
Rat slope(const DivisorClass& d);
/// alpha with 13 / (2 - alpha) = slope.
Rat alpha_of_slope(const Rat& s);
Rat alpha_of_beta(const Rat& beta);
/// beta -> infinity: alpha of the slope of c1(S_{1,2}).
Rat alpha_limit();

}  // namespace syzstab
