#include <doctest.h>

#include "satake/error.hpp"
#include "satake/flag_oracle.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/oracle_cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <random>

#include <unistd.h>

using namespace satake;

namespace {

FqLaurent random_laurent(std::mt19937& rng, int q, int lo, int hi) {
  std::uniform_int_distribution<int> c(0, q - 1);
  FqLaurent f;
  for (int e = lo; e <= hi; ++e)
    if (int v = c(rng); v != 0) f[e] = v;
  return f;
}

FqLaurent mul(const FiniteField& k, const FqLaurent& a, const FqLaurent& b) {
  FqLaurent out;
  for (const auto& [e, x] : a)
    for (const auto& [f, y] : b) {
      auto& slot = out[e + f];
      slot = k.add(slot, k.mul(x, y));
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FqLaurent add(const FiniteField& k, FqLaurent a, const FqLaurent& b) {
  for (const auto& [e, y] : b) a[e] = k.add(a[e], y);
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("lattice normal form is idempotent and K-invariant") {
  std::mt19937 rng(1);
  for (int q : {2, 3, 4}) {
    const LatticeOracle oracle(LatticeGroup::GL2, q);
    const FiniteField& k = oracle.field();
    std::uniform_int_distribution<int> val(-3, 3), unit(1, q - 1);
    for (int trial = 0; trial < 1000 / 3 + 1; ++trial) {
      // upper triangular lattice basis
      const int a = val(rng), b = val(rng);
      FqLaurent f;
      for (const auto& [e, c] : random_laurent(rng, q, b - 2, a - 1))
        if (e < a) f[e] = c;
      const FqLaurent ta{{a, unit(rng)}}, tb{{b, 1}};
      const Gl2Lattice l = oracle.normalize(ta, f, {}, tb, 12);
      CHECK(l.a == a);
      CHECK(l.b == b);
      const FqLaurent top{{l.a, 1}}, bot{{l.b, 1}};
      CHECK(oracle.normalize(top, l.f, {}, bot, 12) == l);
      // right multiplication by [[1, x], [y, 1 + xy]] in GL2(O)
      const FqLaurent x = random_laurent(rng, q, 0, 3), y = random_laurent(rng, q, 0, 3);
      const FqLaurent one{{0, 1}};
      const FqLaurent d = add(k, one, mul(k, x, y));
      const FqLaurent p2 = add(k, ta, mul(k, f, y)), r2 = add(k, mul(k, ta, x), mul(k, f, d));
      const FqLaurent s2 = mul(k, tb, y), u2 = mul(k, tb, d);
      CHECK(oracle.normalize(p2, r2, s2, u2, 16) == l);
    }
  }
}

TEST_CASE("Schubert cells of GL2") {
  const LatticeOracle oracle(LatticeGroup::GL2, 2);
  CHECK(oracle.schubert_count({1, 0}) == 3);
  CHECK(oracle.schubert_count({0, 0}) == 1);
  CHECK(oracle.schubert_count({2, 0}) == 6);
  for (const auto& l : oracle.enumerate_schubert({2, 0})) CHECK(l.a + l.b == 2);
  CHECK_THROWS_AS(LatticeOracle(LatticeGroup::GL2, 3, 10).enumerate_schubert({6, 0}), BudgetExceeded);
}

TEST_CASE("convolution counts do not depend on the base point") {
  for (const auto& name : {"GL2", "PGL2", "SL2"}) {
    const RootDatum g = RootDatum::preset(name);
    const LatticeOracle oracle(g, 3);
    for (const auto& mu : g.dominant_coweights(4, 3))
      for (const auto& lambda : g.dominant_coweights(4, 3)) {
        if (g.height2(mu + lambda) > 4) continue;
        for (const auto& [nu, c] : oracle.convolution_counts(mu, lambda))
          for (unsigned seed = 1; seed <= 5; ++seed) CHECK(oracle.convolution_count(mu, lambda, nu, seed) == c);
      }
  }
}

TEST_CASE("PGL2 semi-infinite examples") {
  const RootDatum g = RootDatum::preset("PGL2");
  CHECK(LatticeOracle(g, 3).semiinfinite_count({2}, {0}, -1) == 2);
  CHECK(LatticeOracle(g, 2).semiinfinite_count({3}, {-3}, -1) == 8);
  CHECK(LatticeOracle(g, 2).semiinfinite_count({3}, {0}, -1) == 0);
}

TEST_CASE("flag varieties") {
  CHECK(FlagOracle(RootDatum::preset("SL2"), 3).flag_count() == 4);
  CHECK(FlagOracle(RootDatum::preset("SL3"), 2).flag_count() == 21);
  CHECK(FlagOracle(RootDatum::preset("Sp4"), 2).flag_count() == 45);
  CHECK_FALSE(FlagOracle::supported(RootDatum::preset("G2")));
  const RootDatum g = RootDatum::preset("SL3");
  const FlagOracle oracle(g, 2);
  const auto& w = g.weyl();
  for (FiniteCoxeterGroup::Elem y = 0; y < w.size(); ++y) {
    Int total = 0;
    for (FiniteCoxeterGroup::Elem x = 0; x < w.size(); ++x) total += oracle.richardson_count(x, y);
    CHECK(total == Int{1} << w.length(y));
  }
}

TEST_CASE("disk cache") {
  const auto dir = std::filesystem::temp_directory_path() / ("satake-cache-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  ::setenv("SATAKE_CACHE_DIR", dir.c_str(), 1);
  REQUIRE(oracle_cache_dir() == dir);
  const RootDatum g = RootDatum::preset("GL2");
  const auto file = dir / "conv-GL2-q5-mu2_1-lambda1_0.json";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(file);
    out << R"({"cache_version": 0, "group": "GL2", "q": 5, "mu": [2,1], "lambda": [1,0], "counts": []})";
  }
  const auto counts = cached_convolution_counts(g, 5, {2, 1}, {1, 0});
  CHECK(counts == LatticeOracle(g, 5).convolution_counts({2, 1}, {1, 0}));
  std::ifstream in(file);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("cache_version").get<int>() == kOracleCacheVersion);
  CHECK(j.at("counts").size() == counts.size());
  std::filesystem::remove_all(dir);
  ::unsetenv("SATAKE_CACHE_DIR");
  CHECK_FALSE(oracle_cache_dir());
}

}
