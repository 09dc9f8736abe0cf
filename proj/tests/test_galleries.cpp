#include <doctest.h>

#include "satake/deodhar.hpp"
#include "satake/galleries.hpp"
#include "satake/root_datum.hpp"

#include <bit>

using namespace satake;

namespace {

// point-count polynomial per target over all galleries of the model
std::map<IntVector, LaurentPoly> counts_by_target(const GalleryModel& m) {
  std::map<IntVector, LaurentPoly> out;
  m.enumerate([&](const CombinatorialGallery& gal) {
    const auto cells = m.cells(gal);
    if (!cells.empty()) out[m.target(gal)] += cell_poly(cells);
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE("galleries") {

TEST_CASE("PGL2 minimal gallery crosses alternating walls") {
  const RootDatum g = RootDatum::preset("PGL2");
  for (Int m = 1; m <= 6; ++m) {
    const DatumGalleries dg(g, {m});
    REQUIRE(dg.components().size() == 1);
    const GalleryModel& model = dg.components()[0];
    const GalleryType& t = model.type();
    // alcoves joined through m - 1 walls, alternately of the two vertex types
    CHECK(t.length() == m - 1);
    for (GenMask a : t.t) CHECK(a == 0);
    for (int j = 1; j <= t.length(); ++j) {
      const GenMask wall = t.t_prime[static_cast<std::size_t>(j)];
      CHECK(std::popcount(wall) == 1);
      if (j > 1) CHECK(wall != t.t_prime[static_cast<std::size_t>(j - 1)]);
    }
    CHECK(std::popcount(t.t_mu) == 1);
    CHECK(model.count() == (std::size_t{1} << m));
    CHECK(model.is_normal_form(model.minimal()));
  }
}

TEST_CASE("PGL2 has one positively folded gallery per weight") {
  const RootDatum g = RootDatum::preset("PGL2");
  for (Int m = 1; m <= 6; ++m) {
    const DatumGalleries dg(g, {m});
    const GalleryModel& model = dg.components()[0];
    std::map<Coweight, int> positive;
    model.enumerate([&](const CombinatorialGallery& gal) {
      if (model.analyze(gal).positive) ++positive[dg.from_adjoint({model.target(gal)})];
      return true;
    });
    std::map<Coweight, int> expected;
    for (Int n = -m; n <= m; n += 2) expected[{n}] = 1;
    CHECK(positive == expected);
  }
}

TEST_CASE("PGL2 turning gallery is folded once") {
  const RootDatum g = RootDatum::preset("PGL2");
  const DatumGalleries dg(g, {2});
  const GalleryModel& model = dg.components()[0];
  int found = 0;
  model.enumerate([&](const CombinatorialGallery& gal) {
    if (dg.from_adjoint({model.target(gal)}) != Coweight{0}) return true;
    const FoldAnalysis fa = model.analyze(gal);
    if (fa.positive) {
      ++found;
      CHECK(fa.folds.size() == 1);
      CHECK(fa.j_minus.size() == 1);
      CHECK(fa.j_plus.empty());
    }
    return true;
  });
  CHECK(found == 1);
}

TEST_CASE("cells come only from positively folded galleries") {
  for (const auto& name : {"SL3", "Sp4", "G2"}) {
    const RootDatum g = RootDatum::preset(name);
    for (const auto& mu : g.dominant_coweights(6, 3)) {
      const DatumGalleries dg(g, mu);
      for (const auto& model : dg.components())
        model.enumerate([&](const CombinatorialGallery& gal) {
          if (!model.cells(gal).empty()) CHECK(model.analyze(gal).positive);
          return true;
        });
    }
  }
}

TEST_CASE("positivity is a real restriction in rank two") {
  const RootDatum g = RootDatum::preset("SL3");
  const DatumGalleries dg(g, {1, 2});
  const GalleryModel& model = dg.components()[0];
  std::size_t total = 0, positive = 0;
  model.enumerate([&](const CombinatorialGallery& gal) {
    ++total;
    positive += model.analyze(gal).positive;
    return true;
  });
  CHECK(total == 27);
  CHECK(positive == 10);
}

TEST_CASE("pruned enumeration finds every contributing gallery") {
  const RootDatum g = RootDatum::preset("SL3");
  const DatumGalleries dg(g, {2, 1});
  const GalleryModel& model = dg.components()[0];
  std::map<CombinatorialGallery, std::vector<Cell>> full, pruned;
  model.enumerate([&](const CombinatorialGallery& gal) {
    auto c = model.cells(gal);
    if (!c.empty()) full[gal] = c;
    return true;
  });
  for (auto d0 : model.first_choices())
    model.enumerate_contributing(d0, [&](const CombinatorialGallery& gal, const std::vector<Cell>& c) {
      pruned[gal] = c;
    });
  CHECK(full == pruned);
}

TEST_CASE("point counts do not depend on the minimal gallery") {
  const RootDatum g = RootDatum::preset("SL3");
  for (const Coweight& mu : {Coweight{1, 1}, Coweight{2, 1}, Coweight{2, 2}}) {
    CAPTURE(to_string(mu));
    const auto reference = counts_by_target(DatumGalleries(g, mu, 0).components()[0]);
    for (int seed = 1; seed < 5; ++seed) {
      const DatumGalleries dg(g, mu, seed);
      const GalleryModel& model = dg.components()[0];
      CHECK(model.is_normal_form(model.minimal()));
      CHECK(counts_by_target(model) == reference);
    }
  }
}

TEST_CASE("galleries split along components") {
  const RootDatum g = RootDatum::preset("GL2");
  const DatumGalleries dg(g, {2, 0});
  CHECK(dg.components().size() == 1);
  CHECK(dg.same_coset({1, 1}));
  CHECK_FALSE(dg.same_coset({2, 1}));
  const RootDatum h = RootDatum::preset("SL2xSL3");
  CHECK(DatumGalleries(h, {2, 1, 1}).components().size() == 2);
}

}
