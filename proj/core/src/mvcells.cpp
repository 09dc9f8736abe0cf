#include "satake/mvcells.hpp"

#include "satake/error.hpp"
#include "satake/deodhar.hpp"
#include "satake/lattice_oracle.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace satake {

namespace {

using TargetCells = std::map<IntVector, std::vector<Cell>>;
using Elem = FiniteCoxeterGroup::Elem;

TargetCells component_cells(const GalleryModel& model) {
  if (model.type().length() < 0) return {{model.mu(), {{0, 0}}}};
  const auto firsts = model.first_choices();
  std::vector<std::future<TargetCells>> jobs;
  jobs.reserve(firsts.size());
  for (Elem d0 : firsts)
    jobs.push_back(std::async(std::launch::async, [&model, d0] {
      TargetCells part;
      model.enumerate_contributing(d0, [&](const CombinatorialGallery& g, const std::vector<Cell>& cells) {
        auto& slot = part[model.target(g)];
        slot.insert(slot.end(), cells.begin(), cells.end());
      });
      return part;
    }));
  TargetCells out;
  for (auto& job : jobs)
    for (auto& [t, cells] : job.get()) {
      auto& slot = out[t];
      slot.insert(slot.end(), cells.begin(), cells.end());
    }
  return out;
}

std::map<Coweight, std::vector<Cell>> compute_all(const RootDatum& g, const Coweight& mu, int seed) {
  const DatumGalleries dg(g, mu, seed);
  // product over components of (adjoint target -> cells)
  std::vector<std::pair<std::vector<IntVector>, std::vector<Cell>>> acc{{{}, {{0, 0}}}};
  for (const auto& model : dg.components()) {
    const TargetCells part = component_cells(model);
    std::vector<std::pair<std::vector<IntVector>, std::vector<Cell>>> next;
    for (const auto& [targets, cells] : acc)
      for (const auto& [t, c] : part) {
        auto ts = targets;
        ts.push_back(t);
        next.emplace_back(std::move(ts), cell_product(cells, c));
      }
    acc = std::move(next);
  }
  std::map<Coweight, std::vector<Cell>> out;
  const Int dim_mu = g.height2(mu);
  for (auto& [targets, cells] : acc) {
    const Coweight nu = dg.from_adjoint(targets);
    std::sort(cells.begin(), cells.end());
    // every cell sits inside a variety of dimension <rho, mu + nu>, attained
    const Int bound2 = dim_mu + g.height2(nu);
    int top = -1;
    for (const auto& c : cells) top = std::max(top, c.a + c.b);
    if (2 * static_cast<Int>(top) != bound2)
      throw std::logic_error("cell dimensions violate the dimension law at nu = " + to_string(nu));
    out.emplace(nu, std::move(cells));
  }
  return out;
}

}  // namespace

LaurentPoly CellList::poly() const { return cell_poly(cells); }

int CellList::dimension() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.a + c.b);
  return d;
}

int CellList::top_cells() const {
  const int d = dimension();
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [d](const Cell& c) { return c.a + c.b == d; }));
}

std::shared_ptr<const std::map<Coweight, std::vector<Cell>>> mv_cells_all(const RootDatum& g, const Coweight& mu,
                                                                           int seed) {
  using Key = std::tuple<std::string, Coweight, int>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const std::map<Coweight, std::vector<Cell>>>> memo;
  if (mu.size() != g.rank()) throw ValidationError("coweight " + to_string(mu) + " has the wrong rank");
  if (!g.is_dominant(mu)) throw ValidationError("mu must be dominant: " + to_string(mu));
  const Key key{g.to_json(), mu, seed};
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto value = std::make_shared<const std::map<Coweight, std::vector<Cell>>>(compute_all(g, mu, seed));
  std::unique_lock lock(mutex);
  return memo.emplace(key, std::move(value)).first->second;
}

CellList mv_decomposition(const RootDatum& g, const Coweight& mu, const Coweight& nu, Orbit sign, int seed) {
  if (nu.size() != g.rank()) throw ValidationError("coweight " + to_string(nu) + " has the wrong rank");
  const auto all = mv_cells_all(g, mu, seed);
  // U^- = w0 U w0, so S^-_nu cap Gr^mu = w0 (S^+_{w0 nu} cap Gr^mu)
  const Coweight key = sign == Orbit::Plus ? nu : g.w0(nu);
  CellList out{mu, nu, sign, {}};
  if (auto it = all->find(key); it != all->end()) out.cells = it->second;
  return out;
}

LaurentPoly point_count_poly(const RootDatum& g, const Coweight& mu, const Coweight& nu, Orbit sign) {
  return mv_decomposition(g, mu, nu, sign).poly();
}

Int weight_multiplicity(const RootDatum& g, const Coweight& mu, const Coweight& nu) {
  const auto cl = mv_decomposition(g, mu, nu, Orbit::Plus);
  if (cl.empty()) return 0;
  return cl.top_cells();
}

LaurentPoly schubert_formula_poly(const RootDatum& g, const Coweight& mu) {
  if (!g.is_dominant(mu)) throw ValidationError("mu must be dominant: " + to_string(mu));
  const auto& w = g.weyl();
  GenMask stab = 0;
  for (std::size_t i = 0; i < g.semisimple_rank(); ++i)
    if (dot(g.simple_roots()[i], mu) == 0) stab |= GenMask{1} << i;
  const int dim_flag = w.length(w.longest()) - w.length(w.parabolic_longest(stab));
  LaurentPoly flag;
  for (Elem x : w.min_right_reps(stab)) flag += LaurentPoly::q_power(w.length(x));
  return flag * LaurentPoly::q_power(static_cast<int>(g.height2(mu)) - dim_flag);
}

Int schubert_cell_count(const RootDatum& g, const Coweight& mu, Int q) {
  if (lattice_group(g)) {
    if (!g.is_dominant(mu)) throw ValidationError("mu must be dominant: " + to_string(mu));
    return LatticeOracle(g, static_cast<int>(q)).schubert_count(mu);
  }
  return schubert_formula_poly(g, mu).evaluate_int(q);
}

}  // namespace satake
