// Acceptance suite: one PASS/FAIL line per criterion. A criterion passes when
// every comparison is exact and it finishes within its time limit.

#include "satake/characters.hpp"
#include "satake/deodhar.hpp"
#include "satake/flag_oracle.hpp"
#include "satake/hecke.hpp"
#include "satake/interpolation.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/mvcells.hpp"
#include "satake/oracle_cache.hpp"
#include "satake/vinberg.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace satake;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

bool run_criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= limit_seconds;
  const bool pass = out.failures == 0 && out.checks > 0 && in_time;
  std::printf("%s [%d] %s: %zu checks, %zu mismatches, %.2f s (limit %.0f s)", pass ? "PASS" : "FAIL", id, title,
              out.checks, out.failures, secs, limit_seconds);
  if (out.failures > 0) std::printf("; first: %s", out.first_failure.c_str());
  if (!in_time) std::printf("; over time");
  std::printf("\n");
  std::fflush(stdout);
  return pass;
}

std::string str(const Coweight& x) { return to_string(x); }

void pgl2_exactness(Outcome& out) {
  const RootDatum g = RootDatum::preset("PGL2");
  for (Int m = 1; m <= 6; ++m)
    for (Int n = -m; n <= m; n += 2) {
      std::vector<Cell> expected;
      if (n == m)
        expected = {{0, 0}};
      else if (n == -m)
        expected = {{static_cast<int>(m), 0}};
      else
        expected = {{static_cast<int>((m - n) / 2 - 1), 1}};
      out.expect(mv_decomposition(g, {m}, {n}, Orbit::Minus).cells == expected,
                 "mu=" + std::to_string(m) + " nu=" + std::to_string(n));
    }
}

void weight_multiplicities(Outcome& out) {
  for (const auto& name : {"SL2", "PGL2", "GL2", "SL3", "Sp4"}) {
    const RootDatum g = RootDatum::preset(name);
    for (const auto& mu : g.dominant_coweights(6, 6)) {
      const Character chi = weyl_character(g, mu);
      for (const auto& [nu, m] : chi)
        out.expect(weight_multiplicity(g, mu, nu) == m, std::string(name) + " mu=" + str(mu) + " nu=" + str(nu));
      for (const auto& [nu, cells] : *mv_cells_all(g, mu))
        out.expect(chi.count(nu) == 1, std::string(name) + " spurious weight " + str(nu));
    }
  }
}

void point_count_partition(Outcome& out) {
  for (const auto& name : RootDatum::preset_names()) {
    const RootDatum g = RootDatum::preset(name);
    for (const auto& mu : g.dominant_coweights(6, 6)) {
      LaurentPoly total;
      for (const auto& [nu, m] : weyl_character(g, mu)) total += point_count_poly(g, mu, nu, Orbit::Plus);
      for (Int q : {2, 3, 4, 5}) {
        const Int count = schubert_cell_count(g, mu, q);
        out.expect(total.evaluate_int(q) == count, std::string(name) + " mu=" + str(mu) + " q=" + std::to_string(q));
        if (lattice_group(g))
          out.expect(count == schubert_formula_poly(g, mu).evaluate_int(q),
                     std::string(name) + " oracle vs formula mu=" + str(mu));
      }
    }
  }
}

void deodhar_vs_flags(Outcome& out) {
  for (const auto& name : {"SL2", "SL3"}) {
    const RootDatum g = RootDatum::preset(name);
    const auto& w = g.weyl();
    for (int q : {2, 3}) {
      const FlagOracle oracle(g, q);
      for (FiniteCoxeterGroup::Elem y = 0; y < w.size(); ++y) {
        if (w.length(y) > 3) continue;
        for (FiniteCoxeterGroup::Elem x = 0; x < w.size(); ++x)
          out.expect(richardson_count(w, w.word(y), x, q) == oracle.richardson_count(x, y),
                     std::string(name) + " y=" + std::to_string(y) + " x=" + std::to_string(x));
      }
    }
  }
}

void generic_hecke(Outcome& out) {
  const std::vector<Int> samples{2, 3, 4, 5, 7};
  const Int extra = 8;
  for (const auto& name : {"GL2", "PGL2", "SL2"}) {
    const RootDatum g = RootDatum::preset(name);
    const auto gens = g.dominant_coweights(6, 3);
    for (const auto& mu : gens)
      for (const auto& lambda : gens) {
        if (g.height2(mu + lambda) > 6) continue;
        const HeckeElement prod = hecke_multiply(g, HeckeElement::basis(mu), HeckeElement::basis(lambda));
        std::map<Int, std::map<Coweight, Int>> counts;
        for (Int q : samples) counts[q] = cached_convolution_counts(g, static_cast<int>(q), mu, lambda);
        counts[extra] = cached_convolution_counts(g, static_cast<int>(extra), mu, lambda);
        std::set<Coweight> nus;
        for (const auto& [nu, c] : prod.terms()) nus.insert(nu);
        for (const auto& [q, m] : counts)
          for (const auto& [nu, c] : m) nus.insert(nu);
        for (const auto& nu : nus) {
          const std::string where = std::string(name) + " mu=" + str(mu) + " lambda=" + str(lambda) + " nu=" + str(nu);
          const LaurentPoly n = prod.coeff(nu);
          std::vector<Int> xs, ys;
          for (Int q : samples) {
            const auto it = counts[q].find(nu);
            const Int oracle = it == counts[q].end() ? 0 : it->second;
            out.expect(n.evaluate_int(q) == oracle, where + " q=" + std::to_string(q));
            xs.push_back(q);
            ys.push_back(oracle);
          }
          // degree bound <rho, mu + lambda - nu>
          const Int h = g.height2(mu + lambda - nu);
          const int bound = static_cast<int>(h / 2);
          const auto fit = interpolate_checked(xs, ys, bound);
          const auto it = counts[extra].find(nu);
          xs.push_back(extra);
          ys.push_back(it == counts[extra].end() ? 0 : it->second);
          const auto refit = interpolate_checked(xs, ys, bound);
          out.expect(fit && refit && *fit == *refit, where + " interpolation unstable");
          out.expect(fit && LaurentPoly::from_coeffs(*fit) == n, where + " interpolated polynomial");
        }
      }
  }
}

void satake_diagram(Outcome& out) {
  for (const auto& name : RootDatum::preset_names()) {
    const RootDatum g = RootDatum::preset(name);
    const auto gens = g.dominant_coweights(6, 3);
    for (Int q0 : {2, 3, 5}) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out.expect(check_diagram(g, HeckeElement::basis(gens[i]), q0), std::string(name) + " T" + str(gens[i]));
        for (std::size_t k = i; k < gens.size(); ++k) {
          if (g.height2(gens[i] + gens[k]) > 6) continue;
          const HeckeElement p = hecke_multiply(g, HeckeElement::basis(gens[i]), HeckeElement::basis(gens[k]));
          out.expect(check_diagram(g, p, q0), std::string(name) + " T" + str(gens[i]) + "T" + str(gens[k]));
        }
      }
    }
  }
}

void vinberg_criterion(Outcome& out) {
  for (const auto& name : RootDatum::preset_names()) {
    const RootDatum g = RootDatum::preset(name);
    for (const auto& mu : g.dominant_coweights(6, 6)) {
      for (Int n = 0; n <= 3; ++n)
        out.expect(extends_to_vinberg(g, ic_class(g, mu, n)).extends,
                   std::string(name) + " IC" + str(mu) + "(-" + std::to_string(n) + ")");
      out.expect(!extends_to_vinberg(g, tate_twist(ic_class(g, mu, 0), 1)).extends,
                 std::string(name) + " IC" + str(mu) + "(1)");
    }
  }
}

HeckeElement random_element(const std::vector<Coweight>& gens, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), terms(1, 2);
  HeckeElement h;
  for (int k = terms(rng); k > 0; --k)
    h.add(gens[pick(rng)], LaurentPoly::q_power(deg(rng), coef(rng)) + LaurentPoly(coef(rng)));
  return h;
}

void algebra_laws(Outcome& out) {
  std::mt19937 rng(2024);
  for (const auto& name : RootDatum::preset_names()) {
    const RootDatum g = RootDatum::preset(name);
    const auto gens = g.dominant_coweights(4, 2);
    for (int t = 0; t < 50; ++t) {
      const HeckeElement a = random_element(gens, rng), b = random_element(gens, rng), c = random_element(gens, rng);
      const std::string where = std::string(name) + " triple " + std::to_string(t);
      const HeckeElement ab = hecke_multiply(g, a, b);
      out.expect(ab == hecke_multiply(g, b, a), where + " commutativity");
      out.expect(hecke_multiply(g, ab, c) == hecke_multiply(g, a, hecke_multiply(g, b, c)), where + " associativity");
      out.expect(satake_classical(g, ab) == spherical_product(satake_classical(g, a), satake_classical(g, b)),
                 where + " Satake product");
      out.expect(satake_classical(g, a + b) ==
                     [&] {
                       SphericalFunction s = satake_classical(g, a);
                       for (const auto& [nu, p] : satake_classical(g, b)) s[nu] += p;
                       std::erase_if(s, [](const auto& kv) { return kv.second.is_zero(); });
                       return s;
                     }(),
                 where + " Satake sum");
    }
  }
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  bool ok = true;
  ok &= run_criterion(1, "PGL2 cells of S^- cap Gr^mu, 1 <= mu <= 6", 1, pgl2_exactness);
  ok &= run_criterion(2, "top cells give Freudenthal multiplicities", 30, weight_multiplicities);
  ok &= run_criterion(3, "point counts partition Gr^mu", 60, point_count_partition);
  ok &= run_criterion(4, "Deodhar cells vs flag enumeration", 30, deodhar_vs_flags);
  ok &= run_criterion(5, "generic Hecke algebra vs lattice convolution", 300, generic_hecke);
  ok &= run_criterion(6, "Satake diagram commutes", 120, satake_diagram);
  ok &= run_criterion(7, "Vinberg monoid weight criterion", 5, vinberg_criterion);
  ok &= run_criterion(8, "commutativity, associativity, Satake is a ring map", 120, algebra_laws);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME FAILED");
  return ok ? 0 : 1;
}
