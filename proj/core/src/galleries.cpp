#include "satake/galleries.hpp"

#include "satake/deodhar.hpp"
#include "satake/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace satake {

using Elem = FiniteCoxeterGroup::Elem;

std::vector<Cell> cell_product(const std::vector<Cell>& x, const std::vector<Cell>& y) {
  std::vector<Cell> out;
  out.reserve(x.size() * y.size());
  for (const auto& c : x)
    for (const auto& d : y) out.push_back({c.a + d.a, c.b + d.b});
  return out;
}

std::string mask_to_string(GenMask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int k = 0; k < 32; ++k)
    if (m >> k & 1u) {
      os << (first ? "" : ",") << k;
      first = false;
    }
  os << '}';
  return os.str();
}

namespace {

int popcount(GenMask m) { return __builtin_popcount(m); }

Rational rdot(const IntVector& a, const RatVector& x) { return dot(a, x); }

// Whether `to` is in the orbit of `from` under the group generated by `walls`.
bool reachable(const RatVector& from, const RatVector& to, const std::vector<AffineMap>& walls) {
  std::set<RatVector> seen{from};
  std::deque<RatVector> todo{from};
  while (!todo.empty()) {
    const RatVector x = todo.front();
    todo.pop_front();
    if (x == to) return true;
    for (const auto& r : walls)
      if (RatVector y = r.apply(x); seen.insert(y).second) todo.push_back(std::move(y));
  }
  return false;
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace

// ---------------------------------------------------------------- AffineFrame

AffineFrame::AffineFrame(IntMatrix cartan) : cartan_(std::move(cartan)) {
  const std::size_t l = cartan_.rows();
  if (l == 0) throw ValidationError("affine frame needs a nonempty Cartan matrix");
  std::map<IntVector, IntVector> coroot_of;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l, 0);
    e[i] = 1;
    coroot_of.emplace(e, cartan_.col(i));
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector b = queue.front();
    queue.pop_front();
    const IntVector bv = coroot_of.at(b);
    for (std::size_t i = 0; i < l; ++i) {
      Int pair = 0;  // <beta, alpha_i^vee>
      for (std::size_t k = 0; k < l; ++k) pair += b[k] * cartan_(k, i);
      IntVector r = b;
      r[i] -= pair;
      const IntVector rv = bv - scale(bv[i], cartan_.col(i));
      if (coroot_of.emplace(r, rv).second) queue.push_back(r);
    }
  }
  std::vector<std::pair<IntVector, IntVector>> pos;
  for (const auto& [b, bv] : coroot_of)
    if (std::all_of(b.begin(), b.end(), [](Int v) { return v >= 0; })) pos.emplace_back(b, bv);
  std::sort(pos.begin(), pos.end(), [](const auto& x, const auto& y) {
    Int hx = 0, hy = 0;
    for (Int v : x.first) hx += v;
    for (Int v : y.first) hy += v;
    return hx != hy ? hx < hy : x.first > y.first;
  });
  for (auto& [b, bv] : pos) {
    roots_.push_back(b);
    coroots_.push_back(bv);
  }
  theta_index_ = roots_.size() - 1;

  gens_.push_back(root_reflection(theta_index_, 1));
  for (std::size_t i = 0; i < l; ++i) gens_.push_back(root_reflection(i, 0));
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l, 0);
    e[i] = 1;
    if (roots_[i] != e) throw std::logic_error("simple roots must come first");
  }
}

AffineMap AffineFrame::root_reflection(std::size_t root, Int m) const {
  const std::size_t l = rank();
  AffineMap s = AffineMap::identity(l);
  const auto& b = roots_.at(root);
  const auto& bv = coroots_.at(root);
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t c = 0; c < l; ++c) s.linear(r, c) -= bv[r] * b[c];
    s.translation[r] = m * bv[r];
  }
  return s;
}

RatVector AffineFrame::vertex(int k) const {
  RatVector v(rank(), Rational(0));
  if (k > 0) v[static_cast<std::size_t>(k - 1)] = Rational(1, theta()[static_cast<std::size_t>(k - 1)]);
  return v;
}

RatVector AffineFrame::barycenter(GenMask type) const {
  RatVector sum(rank(), Rational(0));
  int n = 0;
  for (int k = 0; k <= static_cast<int>(rank()); ++k)
    if (!(type >> k & 1u)) {
      sum = sum + vertex(k);
      ++n;
    }
  if (n == 0) throw ValidationError("a face type must omit at least one vertex");
  return scale(Rational(1, n), sum);
}

int AffineFrame::face_dimension(GenMask type) const { return static_cast<int>(rank()) - popcount(type); }

std::pair<AffineMap, GenMask> AffineFrame::locate(const RatVector& p) const {
  RatVector y = p;
  AffineMap g = AffineMap::identity(rank());
  for (;;) {
    int k = -1;
    for (std::size_t i = 0; i < rank(); ++i)
      if (y[i] < Rational(0)) {
        k = static_cast<int>(i) + 1;
        break;
      }
    if (k < 0 && rdot(theta(), y) > Rational(1)) k = 0;
    if (k < 0) break;
    y = reflection(k).apply(y);
    g = g * reflection(k);
  }
  GenMask type = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    if (y[i].numerator() == 0) type |= GenMask{1} << (i + 1);
  if (rdot(theta(), y) == Rational(1)) type |= 1u;
  return {g, type};
}

std::vector<std::pair<std::size_t, Int>> AffineFrame::walls_through(const RatVector& p) const {
  std::vector<std::pair<std::size_t, Int>> out;
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    const Rational v = rdot(roots_[k], p);
    if (is_integer(v)) out.emplace_back(k, v.numerator());
  }
  return out;
}

// ------------------------------------------------------------------ Parahoric

GenMask Parahoric::local(GenMask global) const {
  GenMask out = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (global >> labels[i] & 1u) out |= GenMask{1} << i;
  if ((global & ~mask) != 0) throw std::logic_error("mask " + mask_to_string(global) + " not inside parahoric " + mask_to_string(mask));
  return out;
}

std::vector<int> Parahoric::global_word(Elem e) const {
  std::vector<int> w;
  for (int s : group.word(e)) w.push_back(labels[static_cast<std::size_t>(s)]);
  return w;
}

// --------------------------------------------------------------- GalleryModel

GalleryModel::GalleryModel(std::shared_ptr<const AffineFrame> frame, IntVector mu_adj, int seed)
    : frame_(std::move(frame)), mu_(std::move(mu_adj)) {
  if (mu_.size() != frame_->rank()) throw ValidationError("coweight has the wrong rank for this component");
  for (Int v : mu_)
    if (v < 0) throw ValidationError("mu must be dominant");
  parahoric(frame_->finite_mask());
  if (std::all_of(mu_.begin(), mu_.end(), [](Int v) { return v == 0; })) return;  // p = -1
  // a few perturbations may be non-generic; try further seeds
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      build(seed + 1009 * attempt);
      return;
    } catch (const std::domain_error&) {
    }
  }
  throw std::logic_error("no generic segment found for the minimal gallery");
}

const Parahoric& GalleryModel::parahoric(GenMask mask) {
  auto it = parahorics_.find(mask);
  if (it != parahorics_.end()) return it->second;
  Parahoric p;
  p.mask = mask;
  std::vector<AffineMap> gens;
  for (int k = 0; k <= static_cast<int>(frame_->rank()); ++k)
    if (mask >> k & 1u) {
      p.labels.push_back(k);
      gens.push_back(frame_->reflection(k));
    }
  p.group = FiniteCoxeterGroup(std::move(gens));
  return parahorics_.emplace(mask, std::move(p)).first->second;
}

void GalleryModel::build(int seed) {
  const AffineFrame& f = *frame_;
  const std::size_t l = f.rank();
  const RatVector mu = to_rational(mu_);

  GenMask t0 = 0;
  for (std::size_t i = 0; i < l; ++i)
    if (mu_[i] == 0) t0 |= GenMask{1} << (i + 1);

  RatVector a = f.barycenter(t0);
  for (std::size_t i = 0; i < l; ++i) {
    if (t0 >> (i + 1) & 1u) continue;
    const Int r = (static_cast<Int>(seed) * 37 + static_cast<Int>(i) * 53 + 11) % 97 + 1;
    a[i] *= Rational(1000 + r, 1000);
  }

  // crossing parameters along x(s) = a + s (mu - a), 0 < s < 1
  std::map<Rational, std::vector<std::pair<std::size_t, Int>>> cross;
  for (std::size_t k = 0; k < f.roots().size(); ++k) {
    const Rational av = rdot(f.roots()[k], a);
    const Rational mv = rdot(f.roots()[k], mu);
    if (av == mv) continue;
    const Rational lo = std::min(av, mv), hi = std::max(av, mv);
    Int m = lo.numerator() / lo.denominator();
    if (Rational(m) <= lo) ++m;
    for (; Rational(m) < hi; ++m) cross[(Rational(m) - av) / (mv - av)].emplace_back(k, m);
  }
  std::vector<Rational> params;
  crossings_.assign(1, {});
  for (auto& [s, walls] : cross) {
    params.push_back(s);
    crossings_.push_back(walls);
  }
  const int p = static_cast<int>(params.size());
  auto point = [&](const Rational& s) { return a + scale(s, mu - a); };

  type_ = GalleryType{};
  type_.t0 = t0;
  type_.t.assign(static_cast<std::size_t>(p) + 1, 0);
  type_.t_prime.assign(static_cast<std::size_t>(p) + 1, f.finite_mask());
  type_.t[0] = t0;
  std::vector<std::pair<AffineMap, GenMask>> big(static_cast<std::size_t>(p) + 1), small(static_cast<std::size_t>(p) + 1);
  for (int j = 1; j <= p; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    big[sj] = f.locate(point(params[sj - 1]));
    const Rational next = j < p ? params[sj] : Rational(1);
    small[sj] = f.locate(point((params[sj - 1] + next) / Rational(2)));
    if (popcount(big[sj].second) != popcount(t0) + 1) throw std::domain_error("non-generic crossing");
    if (popcount(small[sj].second) != popcount(t0)) throw std::domain_error("non-generic face");
    type_.t_prime[sj] = big[sj].second;
    type_.t[sj] = small[sj].second;
  }

  minimal_.deltas.assign(static_cast<std::size_t>(p) + 1, 0);
  AffineMap g = AffineMap::identity(l);
  for (int j = 1; j <= p; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    const GenMask tp = type_.t_prime[sj], tj = type_.t[sj], tprev = type_.t[sj - 1];
    if ((tj & ~tp) || (tprev & ~tp)) throw std::logic_error("gallery type is not nested");
    const RatVector bp = f.barycenter(tp);
    if (g.apply(bp) != big[sj].first.apply(bp)) throw std::logic_error("crossing face is not adjacent to the previous face");
    const Parahoric& w = parahoric(tp);
    const RatVector bs = f.barycenter(tj);
    const RatVector want = small[sj].first.apply(bs);
    std::optional<Elem> best;
    for (Elem e = 0; e < w.group.size(); ++e)
      if (g.apply(w.group.map(e).apply(bs)) == want && (!best || w.group.length(e) < w.group.length(*best))) best = e;
    if (!best) throw std::logic_error("no parahoric element reaches the next face");
    const Elem tau = *best;
    const GenMask lt = w.local(tj), lprev = w.local(tprev);
    if (w.group.min_right_rep(tau, lt) != tau) throw std::logic_error("tau is not a minimal representative");
    if (w.group.min_double_rep(tau, lprev, lt) != w.group.min_double_rep(w.group.longest(), lprev, lt))
      throw std::logic_error("consecutive faces of the minimal gallery are not opposite");
    minimal_.deltas[sj] = tau;
    g = g * w.group.map(tau);
  }

  const auto [hm, tmu] = f.locate(mu);
  type_.t_mu = tmu;
  type_.mu_vertex = -1;
  for (int k = 0; k <= static_cast<int>(l); ++k)
    if (!(tmu >> k & 1u)) type_.mu_vertex = k;
  if (popcount(tmu) != static_cast<int>(l)) throw std::logic_error("mu is not a vertex");
  if (g.apply(f.vertex(type_.mu_vertex)) != mu) throw std::logic_error("minimal gallery does not end at mu");
  for (int j = 1; j <= p; ++j) parahoric(type_.t_prime[static_cast<std::size_t>(j)]);
}

const Parahoric& GalleryModel::big_group(int j) const {
  if (j == 0) return parahorics_.at(frame_->finite_mask());
  return parahorics_.at(type_.t_prime.at(static_cast<std::size_t>(j)));
}

GenMask GalleryModel::small_mask(int j) const { return type_.t.at(static_cast<std::size_t>(j)); }

std::vector<Elem> GalleryModel::first_choices() const {
  if (type_.length() < 0) return {};
  const Parahoric& w = big_group(0);
  return w.group.min_right_reps(w.local(type_.t0));
}

std::size_t GalleryModel::count() const {
  if (type_.length() < 0) return 1;
  std::size_t n = 1;
  for (int j = 0; j <= type_.length(); ++j) {
    const Parahoric& w = big_group(j);
    n *= w.group.min_right_reps(w.local(small_mask(j))).size();
  }
  return n;
}

void GalleryModel::enumerate(const std::function<bool(const CombinatorialGallery&)>& visit) const {
  if (type_.length() < 0) {
    visit(CombinatorialGallery{});
    return;
  }
  for (Elem d0 : first_choices()) {
    bool go = true;
    enumerate_from(d0, [&](const CombinatorialGallery& g) { return go = visit(g); });
    if (!go) return;
  }
}

void GalleryModel::enumerate_from(Elem delta0, const std::function<bool(const CombinatorialGallery&)>& visit) const {
  const int p = type_.length();
  if (p < 0) {
    visit(CombinatorialGallery{});
    return;
  }
  std::vector<std::vector<Elem>> choices(static_cast<std::size_t>(p) + 1);
  choices[0] = {delta0};
  for (int j = 1; j <= p; ++j) {
    const Parahoric& w = big_group(j);
    choices[static_cast<std::size_t>(j)] = w.group.min_right_reps(w.local(small_mask(j)));
  }
  CombinatorialGallery g;
  g.deltas.assign(static_cast<std::size_t>(p) + 1, 0);
  std::vector<std::size_t> pos(static_cast<std::size_t>(p) + 1, 0);
  // odometer over the choice lists
  for (;;) {
    for (std::size_t j = 0; j < pos.size(); ++j) g.deltas[j] = choices[j][pos[j]];
    if (!visit(g)) return;
    std::size_t k = pos.size();
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
  }
}

void GalleryModel::enumerate_contributing(
    Elem delta0, const std::function<void(const CombinatorialGallery&, const std::vector<Cell>&)>& visit) const {
  const int p = type_.length();
  if (p < 0) {
    visit(CombinatorialGallery{}, {{0, 0}});
    return;
  }
  CombinatorialGallery g;
  g.deltas.assign(static_cast<std::size_t>(p) + 1, 0);
  g.deltas[0] = delta0;
  std::vector<std::vector<Elem>> choices(static_cast<std::size_t>(p) + 1);
  for (int j = 1; j <= p; ++j) {
    const Parahoric& w = big_group(j);
    choices[static_cast<std::size_t>(j)] = w.group.min_right_reps(w.local(small_mask(j)));
  }
  std::function<void(int, const std::vector<Cell>&)> descend = [&](int j, const std::vector<Cell>& acc) {
    if (j > p) {
      visit(g, acc);
      return;
    }
    for (Elem d : choices[static_cast<std::size_t>(j)]) {
      g.deltas[static_cast<std::size_t>(j)] = d;
      const auto step = step_cells(g, j);
      if (!step.empty()) descend(j + 1, cell_product(acc, step));
    }
  };
  const auto first = step_cells(g, 0);
  if (!first.empty()) descend(1, first);
}

AffineMap GalleryModel::prefix_map(const CombinatorialGallery& g, int j) const {
  AffineMap m = AffineMap::identity(frame_->rank());
  for (int k = 0; k < j; ++k) m = m * big_group(k).group.map(g.deltas.at(static_cast<std::size_t>(k)));
  return m;
}

IntVector GalleryModel::target(const CombinatorialGallery& g) const {
  if (type_.length() < 0) return mu_;
  const RatVector t = prefix_map(g, type_.length() + 1).apply(frame_->vertex(type_.mu_vertex));
  IntVector out;
  for (const auto& x : t) {
    if (!is_integer(x)) throw std::logic_error("gallery target is not a lattice point");
    out.push_back(x.numerator());
  }
  return out;
}

bool GalleryModel::is_normal_form(const CombinatorialGallery& g) const {
  const int p = type_.length();
  if (static_cast<int>(g.deltas.size()) != p + 1) return false;
  for (int j = 0; j <= p; ++j) {
    const Parahoric& w = big_group(j);
    const Elem d = g.deltas[static_cast<std::size_t>(j)];
    if (d >= w.group.size() || !w.group.is_min_right_rep(d, w.local(small_mask(j)))) return false;
  }
  return true;
}

std::vector<std::vector<int>> GalleryModel::words(const CombinatorialGallery& g) const {
  std::vector<std::vector<int>> out;
  for (std::size_t j = 0; j < g.deltas.size(); ++j) out.push_back(big_group(static_cast<int>(j)).global_word(g.deltas[j]));
  return out;
}

FoldAnalysis GalleryModel::analyze(const CombinatorialGallery& g) const {
  if (!is_normal_form(g)) throw ValidationError("gallery is not in minimal-representative normal form");
  FoldAnalysis out;
  const AffineFrame& f = *frame_;
  for (int j = 1; j <= type_.length(); ++j) {
    const auto sj = static_cast<std::size_t>(j);
    const AffineMap pre = prefix_map(g, j);
    const Parahoric& w = big_group(j);
    const RatVector bt = f.barycenter(small_mask(j));
    const RatVector sigma = pre.apply(w.group.map(g.deltas[sj]).apply(bt));
    const RatVector omega = pre.apply(w.group.map(minimal_.deltas[sj]).apply(bt));
    const bool fold = g.deltas[sj] != minimal_.deltas[sj];
    std::vector<AffineMap> positive_walls;
    for (const auto& [root, m] : f.walls_through(pre.apply(f.barycenter(type_.t_prime[sj])))) {
      const Rational vs = rdot(f.roots()[root], sigma) - Rational(m);
      if (vs.numerator() == 0) continue;
      const Rational vo = rdot(f.roots()[root], omega) - Rational(m);
      const bool folding = (vs.numerator() > 0) != (vo.numerator() > 0) && vo.numerator() != 0;
      const WallRef ref{j, root, m};
      if (vs.numerator() > 0) {
        positive_walls.push_back(f.root_reflection(root, m));
        out.load_bearing.push_back(ref);
        (folding ? out.j_minus : out.j_plus).push_back(ref);
      }
    }
    if (fold) {
      out.folds.push_back(j);
      if (reachable(omega, sigma, positive_walls))
        out.positive_folds.push_back(j);
      else
        out.positive = false;
    }
  }
  return out;
}

std::vector<Cell> GalleryModel::step_cells(const CombinatorialGallery& g, int j) const {
  const AffineFrame& f = *frame_;
  const auto sj = static_cast<std::size_t>(j);
  if (j == 0) {
    const Parahoric& w = big_group(0);
    const auto& grp = w.group;
    const Elem pos = grp.min_right_rep(grp.mul(grp.inverse(grp.longest()), g.deltas[0]), w.local(type_.t0));
    return {{grp.length(pos), 0}};
  }
  const AffineMap pre = prefix_map(g, j);
  const Parahoric& w = big_group(j);
  const auto& grp = w.group;
  const auto walls = f.walls_through(pre.apply(f.barycenter(type_.t_prime[sj])));
  const RatVector chamber = f.barycenter(0);
  std::optional<Elem> wminus;
  for (Elem e = 0; e < grp.size() && !wminus; ++e) {
    const RatVector c = pre.apply(grp.map(e).apply(chamber));
    bool below = true;
    for (const auto& [root, m] : walls) below = below && rdot(f.roots()[root], c) < Rational(m);
    if (below) wminus = e;
  }
  if (!wminus) throw std::logic_error("no antidominant chamber around a crossing face");
  const GenMask prev = w.local(small_mask(j - 1)), next = w.local(small_mask(j));
  const Elem winv = grp.inverse(*wminus);
  const Elem a = grp.min_right_rep(grp.mul(winv, g.deltas[sj]), next);
  const Elem start = grp.min_left_rep(*wminus, prev);
  const Elem goal = grp.min_double_rep(minimal_.deltas[sj], prev, next);

  std::vector<Cell> out;
  for (const auto& br : position_walk(grp, grp.word(a), start, prev))
    if (grp.min_double_rep(br.end, prev, next) == goal) out.push_back(br.cell);
  return out;
}

std::vector<Cell> GalleryModel::cells(const CombinatorialGallery& g) const {
  if (type_.length() < 0) return {{0, 0}};
  std::vector<Cell> out = step_cells(g, 0);
  for (int j = 1; j <= type_.length() && !out.empty(); ++j) out = cell_product(out, step_cells(g, j));
  return out;
}

// -------------------------------------------------------------- DatumGalleries

DatumGalleries::DatumGalleries(const RootDatum& g, const Coweight& mu, int seed)
    : datum_(std::make_shared<RootDatum>(g)), mu_(mu) {
  if (mu.size() != g.rank()) throw ValidationError("coweight " + to_string(mu) + " has the wrong rank");
  if (!g.is_dominant(mu)) throw ValidationError("mu must be dominant: " + to_string(mu));
  indices_ = g.components();
  const auto adj = to_adjoint(mu);
  for (std::size_t c = 0; c < indices_.size(); ++c) {
    const auto& idx = indices_[c];
    IntMatrix a(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        a(i, j) = g.cartan()(static_cast<std::size_t>(idx[i]), static_cast<std::size_t>(idx[j]));
    models_.emplace_back(std::make_shared<AffineFrame>(a), adj[c], seed);
  }
}

std::vector<IntVector> DatumGalleries::to_adjoint(const Coweight& x) const {
  std::vector<IntVector> out;
  for (const auto& idx : indices_) {
    IntVector v;
    for (int i : idx) v.push_back(dot(datum_->simple_roots()[static_cast<std::size_t>(i)], x));
    out.push_back(std::move(v));
  }
  return out;
}

Coweight DatumGalleries::from_adjoint(const std::vector<IntVector>& targets) const {
  const RootDatum& g = *datum_;
  const std::size_t l = g.semisimple_rank();
  RatVector diff(l);
  const auto mu_adj = to_adjoint(mu_);
  for (std::size_t c = 0; c < indices_.size(); ++c)
    for (std::size_t i = 0; i < indices_[c].size(); ++i)
      diff[static_cast<std::size_t>(indices_[c][i])] = mu_adj[c][i] - targets.at(c).at(i);
  const auto coeff = solve(g.cartan(), diff);
  if (!coeff) throw std::logic_error("singular Cartan matrix");
  Coweight nu = mu_;
  for (std::size_t i = 0; i < l; ++i) {
    if (!is_integer((*coeff)[i])) throw std::logic_error("target outside the coset of mu");
    nu = nu - scale((*coeff)[i].numerator(), g.simple_coroots()[i]);
  }
  return nu;
}

bool DatumGalleries::same_coset(const Coweight& x) const { return datum_->in_coroot_lattice(x - mu_); }

}  // namespace satake
