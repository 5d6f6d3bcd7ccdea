#include <doctest.h>

#include "syzstab/gallery.hpp"
#include "syzstab/koszul.hpp"

using namespace syzstab;

TEST_SUITE("gallery") {
  TEST_CASE("every listed item passes its own checks") {
    for (const auto& name : gallery_names()) {
      CAPTURE(name);
      for (const auto& r : run_checks(gallery_item(name))) {
        CAPTURE(r.check);
        CAPTURE(r.actual);
        CHECK(r.pass);
      }
    }
  }

  TEST_CASE("names") {
    CHECK_THROWS_WITH(gallery_item("nope"), doctest::Contains("unknown"));
    CHECK(is_reserved_name("dp5-A4"));
    CHECK_THROWS_WITH(gallery_item("dp5-A4"), doctest::Contains("reserved"));
    CHECK(gallery_item("carpet-4").scheme.r() == 10);
    CHECK_THROWS(gallery_item("carpet-0"));
    CHECK_THROWS(scroll(3));
  }

  TEST_CASE("C0 is the section by x0^2") {
    CHECK(*Scheme("a", c_zero()).piece(2) ==
          *Scheme("b", quadric_section(Scheme("s", del_pezzo_singular()), Polynomial::var(6, 0).pow(2))).piece(2));
  }

  TEST_CASE("the singular del Pezzo models agree") {
    const Scheme a("pf", del_pezzo_singular()), b("param", del_pezzo_singular_param());
    for (int q = 1; q <= 3; ++q) CHECK(*a.piece(q) == *b.piece(q));
  }

  TEST_CASE("smooth and singular del Pezzo share the Betti table") {
    const auto s = betti_table(Scheme("s", del_pezzo_smooth()), 3, 2);
    const auto t = betti_table(Scheme("t", del_pezzo_singular()), 3, 2);
    CHECK(s.cells == t.cells);
    CHECK(s.at(1, 1) == 5);
    CHECK(s.at(2, 1) == 5);
  }

  TEST_CASE("a matrix that is not an elliptic quintic is rejected") {
    PolyMatrix m(5, std::vector<Polynomial>(5, Polynomial(6)));
    CHECK_THROWS(elliptic_cone(m));
  }

  TEST_CASE("export and reimport give the same pieces") {
    for (const auto& name : gallery_names()) {
      CAPTURE(name);
      const auto item = gallery_item(name);
      const Scheme back(name, read_ideal(export_item(item)));
      REQUIRE(back.r() == item.scheme.r());
      for (int q = 1; q <= 3; ++q) CHECK(*back.piece(q) == *item.scheme.piece(q));
    }
  }
}
