#include <doctest.h>

#include "support.hpp"
#include "syzstab/gallery.hpp"
#include "syzstab/koszul.hpp"
#include "syzstab/linalg.hpp"

using namespace syzstab;

TEST_SUITE("koszul") {
  TEST_CASE("free differential matches the naive construction in rank") {
    for (int r = 2; r <= 5; ++r)
      for (int p = 1; p <= r; ++p)
        for (int q = 0; q <= 2; ++q) {
          const auto m = koszul_matrix(p, free_slice(r, q));
          const auto d = oracle::free_koszul(r, p, q);
          CHECK(rank(m) == oracle::rank(d, m.ncols()));
        }
  }

  TEST_CASE("p = 0 has no target") {
    const auto m = koszul_matrix(0, free_slice(3, 2));
    CHECK(m.nrows() == 0);
    CHECK(m.ncols() == 6);
  }

  TEST_CASE("schur dimensions") {
    CHECK(schur_dim(4, 0, 2) == 10);
    CHECK(schur_dim(3, 1, 1) == 3);
    CHECK_THROWS(schur_dim(3, 3, 1));
    CHECK_THROWS(schur_dim(3, 1, 0));
  }

  TEST_CASE("betti table of the twisted cubic") {
    const auto m = minors_ideal(RingCtx(4), PolyMatrix{{Polynomial::var(4, 0), Polynomial::var(4, 1), Polynomial::var(4, 2)},
                                                        {Polynomial::var(4, 1), Polynomial::var(4, 2), Polynomial::var(4, 3)}});
    const auto t = betti_table(Scheme("cubic", m), 3, 2);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == 3);
    CHECK(t.at(2, 1) == 2);
    CHECK(t.at(1, 2) == 0);
    CHECK(t.at(3, 1) == 0);
  }

  TEST_CASE("betti output formats") {
    const auto t = betti_table(testing::ideal_scheme(3, {"x0*x1"}, "xy"), 2, 2);
    CHECK(betti_json(t).rfind("{\"name\":\"xy\",\"r\":3,\"cells\":[{\"p\":0,\"q\":0,\"dim\":1}", 0) == 0);
    CHECK(betti_csv(t).rfind("p,q,dim\n", 0) == 0);
    CHECK(betti_pretty(t).find('.') != std::string::npos);
  }

  TEST_CASE("syzygy kernel of the quadrics of the twisted cubic") {
    const auto x = Scheme("cubic", minors_ideal(RingCtx(4), PolyMatrix{{Polynomial::var(4, 0), Polynomial::var(4, 1), Polynomial::var(4, 2)},
                                                                         {Polynomial::var(4, 1), Polynomial::var(4, 2), Polynomial::var(4, 3)}}));
    CHECK(syzygy_kernel(x, 0, 2).dim() == 3);
    CHECK(syzygy_kernel(x, 1, 2).dim() == 2);
    CHECK_THROWS_AS(syzygy_kernel(testing::ideal_scheme(3, {"x0^2", "x1^3"}), 1, 2), SyzygyUndefined);
    CHECK_THROWS(syzygy_kernel(x, 4, 2));
  }
}
