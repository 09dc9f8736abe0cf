#include <doctest.h>

#include "satake/characters.hpp"
#include "satake/hecke.hpp"
#include "satake/interpolation.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/oracle_cache.hpp"

#include <random>

using namespace satake;

namespace {

HeckeElement random_element(const RootDatum& g, std::mt19937& rng, Int max_height) {
  const auto gens = g.dominant_coweights(max_height, max_height);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coef(-2, 2), deg(0, 2);
  HeckeElement h;
  for (int k = 0; k < 2; ++k) h.add(gens[pick(rng)], LaurentPoly::q_power(deg(rng), coef(rng)) + 1);
  return h;
}

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("phi basis product for PGL2") {
  const RootDatum g = RootDatum::preset("PGL2");
  const auto p = phi_basis_product(g, {1}, {1});
  CHECK(p == std::map<Coweight, LaurentPoly>{{{0}, LaurentPoly::q()}, {{2}, 1}});
}

TEST_CASE("change of basis") {
  const RootDatum g = RootDatum::preset("PGL2");
  const auto& d = change_of_basis(g, {2});
  CHECK(d == std::map<Coweight, LaurentPoly>{{{0}, 1}, {{2}, 1}});
  for (const auto& name : {"SL2", "PGL2", "GL2"}) {
    CAPTURE(name);
    const RootDatum h = RootDatum::preset(name);
    for (const auto& mu : h.dominant_coweights(6, 4)) {
      CAPTURE(to_string(mu));
      CHECK(change_of_basis_oracle(h, mu) == change_of_basis(h, mu));
    }
  }
}

TEST_CASE("f basis round trip") {
  std::mt19937 rng(3);
  for (const auto& name : {"SL3", "Sp4", "G2", "GL2"}) {
    const RootDatum g = RootDatum::preset(name);
    for (int k = 0; k < 10; ++k) {
      const HeckeElement h = random_element(g, rng, 6);
      CHECK(from_f_basis(g, to_f_basis(g, h)) == h);
    }
  }
}

TEST_CASE("structure constants match lattice convolution counts") {
  for (const auto& name : {"SL2", "PGL2", "GL2"}) {
    CAPTURE(name);
    const RootDatum g = RootDatum::preset(name);
    const auto gens = g.dominant_coweights(4, 4);
    for (const auto& mu : gens)
      for (const auto& lambda : gens) {
        if (g.height2(mu + lambda) > 4) continue;
        const HeckeElement prod = hecke_multiply(g, HeckeElement::basis(mu), HeckeElement::basis(lambda));
        for (int q : {2, 3, 4}) {
          std::map<Coweight, Int> got;
          for (const auto& [nu, c] : prod.terms())
            if (Int v = c.evaluate_int(q); v != 0) got[nu] = v;
          CHECK(got == cached_convolution_counts(g, q, mu, lambda));
        }
        CHECK(prod.coeff(mu + lambda) == LaurentPoly(1));
      }
  }
}

TEST_CASE("multiplication is commutative and associative with unit T_0") {
  std::mt19937 rng(5);
  for (const auto& name : {"SL3", "Sp4", "GL2"}) {
    const RootDatum g = RootDatum::preset(name);
    const HeckeElement one = HeckeElement::basis(Coweight(g.rank(), 0));
    for (int k = 0; k < 5; ++k) {
      const HeckeElement a = random_element(g, rng, 4), b = random_element(g, rng, 4), c = random_element(g, rng, 4);
      CHECK(hecke_multiply(g, a, b) == hecke_multiply(g, b, a));
      CHECK(hecke_multiply(g, hecke_multiply(g, a, b), c) == hecke_multiply(g, a, hecke_multiply(g, b, c)));
      CHECK(hecke_multiply(g, one, a) == a);
    }
  }
}

TEST_CASE("Satake transform routes agree and are multiplicative") {
  for (const auto& name : RootDatum::preset_names()) {
    CAPTURE(name);
    const RootDatum g = RootDatum::preset(name);
    const auto gens = g.dominant_coweights(6, 4);
    for (const auto& mu : gens) {
      const HeckeElement t = HeckeElement::basis(mu);
      const SphericalFunction s = satake_classical(g, t);
      CHECK(s == satake_from_cells(g, t));
      for (const auto& [nu, c] : s) CHECK(s.at(g.dominant_rep(nu)) == c);
    }
    for (const auto& mu : gens)
      for (const auto& lambda : gens) {
        if (g.height2(mu + lambda) > 6) continue;
        const HeckeElement a = HeckeElement::basis(mu), b = HeckeElement::basis(lambda);
        CHECK(satake_classical(g, hecke_multiply(g, a, b)) ==
              spherical_product(satake_classical(g, a), satake_classical(g, b)));
      }
  }
}

TEST_CASE("PGL2 Satake transform of T_1") {
  const RootDatum g = RootDatum::preset("PGL2");
  const auto s = satake_classical(g, HeckeElement::basis({1}));
  const LaurentPoly root_q = LaurentPoly::half_power(1);
  CHECK(s == SphericalFunction{{{-1}, root_q}, {{1}, root_q}});
}

TEST_CASE("invalid elements") {
  const RootDatum g = RootDatum::preset("SL3");
  CHECK_THROWS(hecke_multiply(g, HeckeElement::basis({1}), HeckeElement::basis({1})));
  CHECK_THROWS(hecke_multiply(g, HeckeElement::basis({-1, 0}), HeckeElement::basis({1, 0})));
  CHECK_THROWS(change_of_basis_oracle(g, {1, 0}));
}

}

TEST_SUITE("hecke") {

TEST_CASE("interpolation under the loose degree bound") {
  // deg N <= <rho, mu + lambda - nu> + <2rho, nu>, with one spare sample
  const std::vector<Int> primes{2, 3, 4, 5, 7, 8, 9, 11, 13};
  for (const auto& name : {"PGL2", "SL2", "GL2"}) {
    CAPTURE(name);
    const RootDatum g = RootDatum::preset(name);
    const auto gens = g.dominant_coweights(4, 2);
    for (const auto& mu : gens)
      for (const auto& lambda : gens) {
        if (g.height2(mu + lambda) > 4) continue;
        const HeckeElement prod = hecke_multiply(g, HeckeElement::basis(mu), HeckeElement::basis(lambda));
        for (const auto& [nu, n] : prod.terms()) {
          const int bound = static_cast<int>(g.height2(mu + lambda - nu) / 2 + g.height2(nu));
          REQUIRE(static_cast<std::size_t>(bound + 2) <= primes.size());
          std::vector<Int> xs, ys;
          for (std::size_t k = 0; k < static_cast<std::size_t>(bound + 2); ++k) {
            const auto counts = cached_convolution_counts(g, static_cast<int>(primes[k]), mu, lambda);
            const auto it = counts.find(nu);
            xs.push_back(primes[k]);
            ys.push_back(it == counts.end() ? 0 : it->second);
          }
          const auto fit = interpolate_checked(xs, ys, bound);
          REQUIRE(fit);
          CHECK(LaurentPoly::from_coeffs(*fit) == n);
        }
      }
  }
}

}
