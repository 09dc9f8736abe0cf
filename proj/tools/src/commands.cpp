#include "commands.hpp"

#include "satake/characters.hpp"
#include "satake/deodhar.hpp"
#include "satake/error.hpp"
#include "satake/flag_oracle.hpp"
#include "satake/galleries.hpp"
#include "satake/hecke.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/mvcells.hpp"
#include "satake/oracle_cache.hpp"
#include "satake/vinberg.hpp"

#include <fstream>
#include <sstream>

namespace satake::cli {

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

Json mask_json(GenMask m) {
  Json out = Json::array();
  for (int i = 0; i < 32; ++i)
    if (m & (GenMask{1} << i)) out.push_back(i);
  return out;
}

Json word_json(const std::vector<int>& w) {
  Json out = Json::array();
  for (int s : w) out.push_back(s + 1);
  return out;
}

Coweight coweight(const RootDatum& g, const std::string& s, const char* what) {
  if (s.empty()) throw ValidationError(std::string("missing --") + what);
  Coweight x = parse_int_vector(s);
  if (x.size() != g.rank())
    throw ValidationError(std::string("--") + what + " needs " + std::to_string(g.rank()) + " coordinates");
  return x;
}

Orbit parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return Orbit::Plus;
  if (s == "minus" || s == "-") return Orbit::Minus;
  throw ValidationError("--sign must be plus or minus");
}

FiniteCoxeterGroup::Elem weyl_elem(const RootDatum& g, const std::string& s) {
  const auto w = parse_word(s);
  for (int i : w)
    if (i < 0 || static_cast<std::size_t>(i) >= g.semisimple_rank())
      throw ValidationError("simple reflection index out of range in '" + s + "'");
  return g.weyl().from_word(w);
}

}  // namespace

RootDatum load_datum(const Options& o) {
  if (!o.datum_file.empty()) {
    std::ifstream in(o.datum_file);
    if (!in) throw ValidationError("cannot read datum file " + o.datum_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return RootDatum::from_json(buf.str());
  }
  return RootDatum::preset(o.group);
}

std::vector<int> parse_word(const std::string& s) {
  if (s.empty() || s == "e") return {};
  std::vector<int> out;
  for (Int i : parse_int_vector(s)) {
    if (i < 1) throw ValidationError("simple reflections are numbered from 1");
    out.push_back(static_cast<int>(i - 1));
  }
  return out;
}

GenMask parse_mask(const std::string& s) {
  GenMask m = 0;
  for (int i : parse_word(s)) m |= GenMask{1} << i;
  return m;
}

Json cmd_rootdata(const Options& o) {
  const RootDatum g = load_datum(o);
  Json j = Json::parse(g.to_json());
  j["simple_roots"] = g.simple_roots();
  j["simple_coroots"] = g.simple_coroots();
  j["positive_roots"] = g.positive_roots();
  j["positive_coroots"] = g.positive_coroots();
  j["two_rho"] = g.two_rho();
  j["weyl_order"] = g.weyl().size();
  j["fundamental_group"] = g.fundamental_group();
  if (!o.mu.empty()) {
    const Coweight mu = coweight(g, o.mu, "mu");
    Json ch = Json::array();
    for (const auto& [nu, m] : weyl_character(g, mu)) ch.push_back({{"nu", nu}, {"mult", m}});
    j["character"] = {{"mu", mu}, {"dimension", weyl_dimension(g, mu)}, {"weights", ch}};
  }
  return j;
}

Json cmd_galleries(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu");
  const DatumGalleries dg(g, mu, o.seed);
  Json comps = Json::array();
  for (std::size_t c = 0; c < dg.components().size(); ++c) {
    const GalleryModel& m = dg.components()[c];
    const GalleryType& t = m.type();
    Json type = {{"t0", mask_json(t.t0)}, {"t_prime", Json::array()}, {"t", Json::array()}, {"t_mu", mask_json(t.t_mu)}};
    for (int j = 1; j <= t.length(); ++j) type["t_prime"].push_back(mask_json(t.t_prime[static_cast<std::size_t>(j)]));
    for (int j = 0; j <= t.length(); ++j) type["t"].push_back(mask_json(t.t[static_cast<std::size_t>(j)]));
    Json list = Json::array();
    std::size_t shown = 0;
    m.enumerate([&](const CombinatorialGallery& gal) {
      const auto cells = m.cells(gal);
      if (o.contributing_only && cells.empty()) return true;
      const auto fa = m.analyze(gal);
      Json cj = Json::array();
      for (const auto& x : cells) cj.push_back({{"A", x.a}, {"Gm", x.b}});
      list.push_back({{"words", m.words(gal)},
                      {"target_adjoint", m.target(gal)},
                      {"positively_folded", fa.positive},
                      {"folds", fa.folds},
                      {"cells", cj}});
      return ++shown < o.limit;
    });
    comps.push_back({{"simple_indices", dg.component_indices()[c]},
                     {"cartan", matrix_json(m.frame().cartan())},
                     {"mu_adjoint", m.mu()},
                     {"type", type},
                     {"minimal", m.words(m.minimal())},
                     {"count", m.count()},
                     {"galleries", list},
                     {"truncated", shown >= o.limit}});
  }
  return {{"group", g.name()}, {"mu", mu}, {"seed", o.seed}, {"components", comps}};
}

Json cmd_mv_cells(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu");
  const Orbit sign = parse_sign(o.sign);
  if (!o.nu.empty()) {
    Json j = cell_list_to_json(mv_decomposition(g, mu, coweight(g, o.nu, "nu"), sign, o.seed));
    j["group"] = g.name();
    return j;
  }
  Json all = Json::array();
  for (const auto& [nu, cells] : *mv_cells_all(g, mu, o.seed)) {
    const Coweight key = sign == Orbit::Plus ? nu : g.w0(nu);
    all.push_back(cell_list_to_json(mv_decomposition(g, mu, key, sign, o.seed)));
  }
  return {{"group", g.name()}, {"mu", mu}, {"sign", o.sign}, {"decompositions", all}};
}

Json cmd_deodhar(const Options& o) {
  const RootDatum g = load_datum(o);
  const auto& w = g.weyl();
  const auto word = parse_word(o.word);
  const auto y = weyl_elem(g, o.word);
  const auto x = weyl_elem(g, o.x);
  std::vector<DeodharCell> cells;
  if (!o.parabolic.empty())
    cells = parabolic_reduce(w, parse_mask(o.parabolic), y, x);
  else
    cells = deodhar_cells(g, word, x);
  Json cj = Json::array();
  for (const auto& c : cells) {
    Json sigma = Json::array();
    for (auto s : c.sub.sigma) sigma.push_back(word_json(w.word(s)));
    cj.push_back({{"sigma", sigma}, {"A", c.m}, {"Gm", c.n}});
  }
  const LaurentPoly p = cell_poly(cells);
  Json j = {{"group", g.name()}, {"y", word_json(w.word(y))}, {"x", word_json(w.word(x))}, {"cells", cj}, {"poly", poly_to_json(p)}};
  if (!o.parabolic.empty()) j["parabolic"] = word_json(parse_word(o.parabolic));
  if (o.has_q) {
    j["q"] = o.q;
    j["count"] = p.evaluate_int(o.q);
    if (o.oracle) {
      const FlagOracle oracle(g, static_cast<int>(o.q));
      j["oracle_count"] = o.parabolic.empty() ? oracle.richardson_count(x, y)
                                              : oracle.partial_richardson_count(parse_mask(o.parabolic), y, x);
    }
  }
  return j;
}

Json cmd_hecke_mul(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu"), lambda = coweight(g, o.lambda, "lambda");
  Json j = hecke_to_json(hecke_multiply(g, HeckeElement::basis(mu), HeckeElement::basis(lambda)));
  j["group"] = g.name();
  j["mu"] = mu;
  j["lambda"] = lambda;
  return j;
}

Json cmd_hecke_basis(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu");
  const auto& d = change_of_basis(g, mu);
  Json terms = Json::array();
  for (const auto& [l, p] : d) terms.push_back({{"lambda", l}, {"d", poly_to_json(p)}});
  Json j = {{"group", g.name()}, {"mu", mu}, {"f", terms}};
  if (o.oracle) j["oracle_agrees"] = change_of_basis_oracle(g, mu) == d;
  return j;
}

Json cmd_satake_diagram(const Options& o) {
  const RootDatum g = load_datum(o);
  const auto gens = g.dominant_coweights(o.max_height, o.max_height);
  std::size_t cases = 0;
  Json failures = Json::array();
  auto check = [&](const HeckeElement& h, const Json& label) {
    ++cases;
    if (!check_diagram(g, h, o.q)) failures.push_back(label);
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check(HeckeElement::basis(gens[i]), {{"mu", gens[i]}});
    for (std::size_t k = i; k < gens.size(); ++k) {
      if (g.height2(gens[i] + gens[k]) > o.max_height) continue;
      check(hecke_multiply(g, HeckeElement::basis(gens[i]), HeckeElement::basis(gens[k])),
            {{"mu", gens[i]}, {"lambda", gens[k]}});
    }
  }
  return {{"group", g.name()}, {"q", o.q}, {"ok", failures.empty()}, {"cases", cases}, {"failures", failures}};
}

Json cmd_satake_transform(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu");
  const HeckeElement t = HeckeElement::basis(mu);
  Json j = {{"group", g.name()}, {"mu", mu}};
  if (o.has_q) {
    Json vals = Json::array();
    for (const auto& [nu, v] : satake_specialized(g, t, o.q)) vals.push_back({{"nu", nu}, {"value", v.to_string()}});
    j["q"] = o.q;
    j["values"] = vals;
  } else {
    j["transform"] = spherical_to_json(satake_classical(g, t));
  }
  return j;
}

Json cmd_vinberg_check(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu");
  // IC_mu(twist): a negative twist is the effective class ic_class(mu, -twist)
  const GradedCharacter c = o.twist <= 0 ? ic_class(g, mu, -o.twist) : tate_twist(ic_class(g, mu, 0), o.twist);
  const VinbergCheck res = extends_to_vinberg(g, c);
  Json witness = nullptr;
  if (res.witness) witness = {{"nu", res.witness->first}, {"grading", res.witness->second}};
  return {{"group", g.name()}, {"mu", mu}, {"twist", o.twist}, {"extends", res.extends}, {"witness", witness},
          {"character", graded_to_json(c)}};
}

Json cmd_vinberg_psi(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu");
  const VinbergClass v = psi(g, HeckeElement::basis(mu));
  return {{"group", g.name()}, {"mu", mu}, {"class", vinberg_class_to_json(v)},
          {"character", graded_to_json(character(g, v))}};
}

Json cmd_oracle_conv(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu"), lambda = coweight(g, o.lambda, "lambda");
  Json j = {{"group", g.name()}, {"q", o.q}, {"mu", mu}, {"lambda", lambda}};
  if (!o.nu.empty()) {
    const Coweight nu = coweight(g, o.nu, "nu");
    j["nu"] = nu;
    j["count"] = LatticeOracle(g, static_cast<int>(o.q)).convolution_count(mu, lambda, nu, static_cast<unsigned>(o.seed));
    return j;
  }
  Json counts = Json::array();
  for (const auto& [nu, c] : cached_convolution_counts(g, static_cast<int>(o.q), mu, lambda))
    counts.push_back({{"nu", nu}, {"count", c}});
  j["counts"] = counts;
  return j;
}

Json cmd_oracle_schubert(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu");
  return {{"group", g.name()}, {"q", o.q}, {"mu", mu},
          {"count", LatticeOracle(g, static_cast<int>(o.q)).schubert_count(mu)}};
}

Json cmd_oracle_semiinfinite(const Options& o) {
  const RootDatum g = load_datum(o);
  const Coweight mu = coweight(g, o.mu, "mu"), nu = coweight(g, o.nu, "nu");
  return {{"group", g.name()}, {"q", o.q}, {"mu", mu}, {"nu", nu}, {"sign", o.sign},
          {"count", LatticeOracle(g, static_cast<int>(o.q)).semiinfinite_count(mu, nu, static_cast<int>(parse_sign(o.sign)))}};
}

Json cmd_oracle_flag(const Options& o) {
  const RootDatum g = load_datum(o);
  const auto y = weyl_elem(g, o.y), x = weyl_elem(g, o.x);
  const FlagOracle oracle(g, static_cast<int>(o.q));
  const Int count = o.parabolic.empty() ? oracle.richardson_count(x, y)
                                        : oracle.partial_richardson_count(parse_mask(o.parabolic), y, x);
  return {{"group", g.name()}, {"q", o.q}, {"y", word_json(g.weyl().word(y))}, {"x", word_json(g.weyl().word(x))},
          {"count", count}};
}

}  // namespace satake::cli
