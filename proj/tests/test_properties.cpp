#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "property_checks.hpp"
#include "syzstab/divisors.hpp"

using namespace syzstab;

namespace {

void require(const props::Outcome& o, int expected) {
  CAPTURE(o.first_failure);
  CHECK(o.checked == expected);
  CHECK(o.failed == 0);
}

}  // namespace

TEST_SUITE("property") {
  TEST_CASE("rref and kernels against the dense oracle") { require(props::rref_oracle(200, 60, 80, 11), 600); }

  TEST_CASE("d squared is zero") { require(props::d_squared_zero(200, 12), 200); }

  TEST_CASE("schur dimensions are kernel dimensions") {
    const auto o = props::schur_vs_kernels(8);
    CAPTURE(o.first_failure);
    CHECK(o.ok());
  }

  TEST_CASE("mu is homogeneous") { require(props::mu_homogeneity(100, 13), 100); }
  TEST_CASE("mu is permutation equivariant") { require(props::mu_permutation(100, 14), 100); }
  TEST_CASE("mu flips sign at fixed points") { require(props::mu_antisymmetry(100, 15), 100); }
  TEST_CASE("mu_{0,2} against the projection oracle") { require(props::mu_oracle(100, 16), 100); }
  TEST_CASE("serial and parallel agree") { require(props::serial_parallel(30, 17), 120); }

  TEST_CASE("summation lemma, brute force") {
    for (int r = 0; r <= 12; ++r)
      for (int p = 0; p <= r; ++p)
        for (int a = 0; a <= p; ++a) {
          CAPTURE(r);
          CAPTURE(p);
          CAPTURE(a);
          const BigInt s = summation(r, p, a);
          CHECK(s == oracle::summation_brute(r, p, a));
          CHECK(s == BigInt(a % 2 ? -1 : 1) * binom(r - 1 - a, p - a));
        }
  }

  TEST_CASE("K3 basis conversion round trips") {
    std::mt19937_64 rng(18);
    std::uniform_int_distribution<int> c(-50, 50), d(1, 9), gd(2, 30);
    auto rat = [&]() -> Rat { return Rat(c(rng)) / d(rng); };
    for (int t = 0; t < 200; ++t) {
      const int g = gd(rng);
      const DivisorClass b(DivisorBasis::K3B, g, {rat(), rat()});
      CHECK(b.to_k3a().to_k3b() == b);
      const DivisorClass a(DivisorBasis::K3A, g, {rat(), rat(), rat()});
      CHECK(a.to_k3b().to_k3a().to_k3b() == a.to_k3b());
    }
  }

  TEST_CASE("closed forms agree with the alternating sums") {
    for (int g = 3; g <= 15; g += 2)
      for (int p = 0; p <= (g - 3) / 2; ++p) {
        CAPTURE(g);
        CAPTURE(p);
        for (int q = 2; q <= 3; ++q) CHECK(c1_S_pq_k3(g, p, q) == c1_S_pq_k3_closed(g, p, q));
        const auto b = c1_S_pq_k3(g, p, 2).to_k3b();
        CHECK(b == c1_S_p2_k3_simplified(g, p).to_k3b());
        CHECK(b * (Rat(2) / Rat(g + 1) / b.coeff("gamma")) == k3_effective_class(g, p));
      }
    for (int g = 3; g <= 15; ++g)
      for (int p = 0; p <= g - 2; ++p)
        for (int q = 1; q <= 4; ++q) CHECK(c1_S_pq_mg(g, p, q) == c1_S_pq_mg_closed(g, p, q));
    for (int g = 4; g <= 15; ++g)
      for (int p = 0; p <= g - 3; ++p) CHECK(c1_S_pq_mg(g, p, 2) == c1_S_p2_mg(g, p));
    for (int g = 3; g <= 15; ++g)
      for (int q = 1; q <= 5; ++q) CHECK(c1_S_0q_mg(g, q) == c1_S_pq_mg(g, 0, q));
  }

  TEST_CASE("alpha decreases in beta") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> n(0, 400), d(1, 20);
    for (int t = 0; t < 200; ++t) {
      Rat a = Rat(n(rng)) / d(rng), b = Rat(n(rng)) / d(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      CHECK(alpha_of_beta(a) > alpha_of_beta(b));
      CHECK(alpha_of_beta(b) > alpha_limit());
    }
  }
}
