#include <doctest.h>

#include "satake/characters.hpp"
#include "satake/deodhar.hpp"
#include "satake/error.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/mvcells.hpp"

using namespace satake;

TEST_SUITE("mvcells") {

TEST_CASE("PGL2 cells of the repelling orbits") {
  const RootDatum g = RootDatum::preset("PGL2");
  for (Int m = 1; m <= 8; ++m) {
    for (Int n = -m; n <= m; n += 2) {
      const CellList c = mv_decomposition(g, {m}, {n}, Orbit::Minus);
      std::vector<Cell> expected;
      if (n == m)
        expected = {{0, 0}};
      else if (n == -m)
        expected = {{static_cast<int>(m), 0}};
      else
        expected = {{static_cast<int>((m - n) / 2 - 1), 1}};
      CHECK(c.cells == expected);
    }
    CHECK(mv_decomposition(g, {m}, {m - 1}, Orbit::Minus).empty());
    CHECK(mv_decomposition(g, {m}, {m}, Orbit::Plus).cells == std::vector<Cell>{{static_cast<int>(m), 0}});
  }
  CHECK(point_count_poly(g, {2}, {0}, Orbit::Minus) == LaurentPoly::q() - 1);
}

TEST_CASE("dimension law and top cells give weight multiplicities") {
  for (const auto& name : RootDatum::preset_names()) {
    CAPTURE(name);
    const RootDatum g = RootDatum::preset(name);
    for (const auto& mu : g.dominant_coweights(8, 4)) {
      CAPTURE(to_string(mu));
      const Character chi = weyl_character(g, mu);
      for (const auto& [nu, m] : chi) {
        const CellList plus = mv_decomposition(g, mu, nu, Orbit::Plus);
        CHECK(2 * plus.dimension() == g.height2(mu) + g.height2(nu));
        CHECK(plus.top_cells() == m);
        CHECK(weight_multiplicity(g, mu, nu) == m);
        const CellList minus = mv_decomposition(g, mu, nu, Orbit::Minus);
        CHECK(2 * minus.dimension() == g.height2(mu) - g.height2(nu));
      }
      // weights outside the character have empty intersections
      for (const auto& [nu, cells] : *mv_cells_all(g, mu)) CHECK(chi.count(nu) == 1);
    }
  }
}

TEST_CASE("cells partition the Schubert cell") {
  for (const auto& name : RootDatum::preset_names()) {
    CAPTURE(name);
    const RootDatum g = RootDatum::preset(name);
    for (const auto& mu : g.dominant_coweights(8, 4)) {
      LaurentPoly plus, minus;
      for (const auto& [nu, m] : weyl_character(g, mu)) {
        plus += point_count_poly(g, mu, nu, Orbit::Plus);
        minus += point_count_poly(g, mu, nu, Orbit::Minus);
      }
      CHECK(plus == schubert_formula_poly(g, mu));
      CHECK(minus == schubert_formula_poly(g, mu));
    }
  }
}

TEST_CASE("Schubert cell sizes") {
  const RootDatum g = RootDatum::preset("PGL2");
  CHECK(schubert_cell_count(g, {1}, 2) == 3);
  CHECK(schubert_cell_count(g, {2}, 2) == 6);
  CHECK(schubert_formula_poly(g, {2}) == LaurentPoly::q_power(2) + LaurentPoly::q());
  for (const auto& name : {"SL2", "PGL2", "GL2"}) {
    const RootDatum h = RootDatum::preset(name);
    for (int q : {2, 3, 4}) {
      const LatticeOracle oracle(h, q);
      for (const auto& mu : h.dominant_coweights(6, 4))
        CHECK(oracle.schubert_count(mu) == schubert_formula_poly(h, mu).evaluate_int(q));
    }
  }
}

TEST_CASE("finite-field counts of the semi-infinite intersections") {
  for (const auto& name : {"SL2", "PGL2", "GL2"}) {
    CAPTURE(name);
    const RootDatum g = RootDatum::preset(name);
    for (int q : {2, 3}) {
      const LatticeOracle oracle(g, q);
      for (const auto& mu : g.dominant_coweights(6, 4))
        for (const auto& [nu, m] : weyl_character(g, mu))
          for (Orbit s : {Orbit::Plus, Orbit::Minus})
            CHECK(oracle.semiinfinite_count(mu, nu, static_cast<int>(s)) ==
                  point_count_poly(g, mu, nu, s).evaluate_int(q));
    }
  }
}

TEST_CASE("products of groups multiply cells") {
  const RootDatum g = RootDatum::preset("SL2xPGL2");
  const RootDatum a = RootDatum::preset("SL2"), b = RootDatum::preset("PGL2");
  for (Int x : {1, 2})
    for (Int y : {1, 2, 3})
      for (const auto& [n1, m1] : weyl_character(a, {x}))
        for (const auto& [n2, m2] : weyl_character(b, {y}))
          CHECK(point_count_poly(g, {x, y}, {n1[0], n2[0]}, Orbit::Plus) ==
                point_count_poly(a, {x}, n1, Orbit::Plus) * point_count_poly(b, {y}, n2, Orbit::Plus));
}

TEST_CASE("memoized and seeded results agree") {
  const RootDatum g = RootDatum::preset("Sp4");
  for (const auto& mu : g.dominant_coweights(6, 3)) {
    const auto a = mv_cells_all(g, mu, 0), b = mv_cells_all(g, mu, 3);
    REQUIRE(a->size() == b->size());
    for (const auto& [nu, cells] : *a) CHECK(cell_poly(cells) == cell_poly(b->at(nu)));
    CHECK(mv_cells_all(g, mu, 0) == a);
  }
}

TEST_CASE("invalid input") {
  const RootDatum g = RootDatum::preset("SL3");
  CHECK_THROWS_AS(mv_decomposition(g, {-1, 2}, {0, 0}, Orbit::Plus), ValidationError);
  CHECK_THROWS_AS(mv_decomposition(g, {1}, {1}, Orbit::Plus), ValidationError);
}

}
