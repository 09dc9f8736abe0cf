#include "satake/root_datum.hpp"

#include "satake/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace satake {

namespace {

using nlohmann::json;

IntMatrix matrix_of(std::initializer_list<IntVector> rows) { return IntMatrix::from_rows(rows); }

const IntMatrix& cartan_of_type(const std::string& type) {
  static const std::map<std::string, IntMatrix> table = {
      {"A1", matrix_of({{2}})},
      {"A2", matrix_of({{2, -1}, {-1, 2}})},
      {"C2", matrix_of({{2, -1}, {-2, 2}})},
      {"B2", matrix_of({{2, -2}, {-1, 2}})},
      {"G2", matrix_of({{2, -1}, {-3, 2}})},
  };
  return table.at(type);
}

// X_*(T) spanned by the simple coroots.
RootDatum simply_connected(const std::string& name, const std::string& type) {
  const IntMatrix& a = cartan_of_type(type);
  const std::size_t l = a.rows();
  std::vector<IntVector> roots, coroots;
  for (std::size_t i = 0; i < l; ++i) {
    roots.push_back(a.row(i));
    IntVector e(l, 0);
    e[i] = 1;
    coroots.push_back(e);
  }
  return RootDatum(name, a, roots, coroots);
}

// X_*(T) spanned by the fundamental coweights.
RootDatum adjoint(const std::string& name, const std::string& type) {
  const IntMatrix& a = cartan_of_type(type);
  const std::size_t l = a.rows();
  std::vector<IntVector> roots, coroots;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l, 0);
    e[i] = 1;
    roots.push_back(e);
    coroots.push_back(a.col(i));
  }
  return RootDatum(name, a, roots, coroots);
}

RootDatum single_preset(const std::string& name) {
  if (name == "SL2") return simply_connected(name, "A1");
  if (name == "PGL2") return adjoint(name, "A1");
  if (name == "GL2") return RootDatum(name, cartan_of_type("A1"), {{1, -1}}, {{1, -1}});
  if (name == "SL3") return simply_connected(name, "A2");
  if (name == "PGL3") return adjoint(name, "A2");
  if (name == "Sp4") return simply_connected(name, "C2");
  if (name == "SO5") return adjoint(name, "B2");
  if (name == "G2" || name == "G2-adjoint") return simply_connected("G2", "G2");
  throw ValidationError("unknown root datum preset: " + name);
}

RootDatum product(const RootDatum& x, const RootDatum& y) {
  const std::size_t lx = x.semisimple_rank(), ly = y.semisimple_rank();
  const std::size_t nx = x.rank(), ny = y.rank();
  IntMatrix a(lx + ly, lx + ly);
  for (std::size_t i = 0; i < lx; ++i)
    for (std::size_t j = 0; j < lx; ++j) a(i, j) = x.cartan()(i, j);
  for (std::size_t i = 0; i < ly; ++i)
    for (std::size_t j = 0; j < ly; ++j) a(lx + i, lx + j) = y.cartan()(i, j);
  std::vector<IntVector> roots, coroots;
  auto pad = [&](const IntVector& v, std::size_t offset) {
    IntVector out(nx + ny, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
  };
  for (std::size_t i = 0; i < lx; ++i) {
    roots.push_back(pad(x.simple_roots()[i], 0));
    coroots.push_back(pad(x.simple_coroots()[i], 0));
  }
  for (std::size_t i = 0; i < ly; ++i) {
    roots.push_back(pad(y.simple_roots()[i], nx));
    coroots.push_back(pad(y.simple_coroots()[i], nx));
  }
  return RootDatum(x.name() + "x" + y.name(), a, roots, coroots);
}

void validate_cartan(const IntMatrix& a) {
  const std::size_t l = a.rows();
  if (a.cols() != l) throw ValidationError("Cartan matrix must be square");
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) {
        if (a(i, j) != 2) throw ValidationError("Cartan matrix diagonal must be 2");
        continue;
      }
      if (a(i, j) > 0 || a(i, j) < -3) throw ValidationError("Cartan off-diagonal entries must lie in {0,-1,-2,-3}");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw ValidationError("Cartan matrix zero pattern is not symmetric");
      if (a(i, j) * a(j, i) > 3) throw ValidationError("Cartan matrix is not of finite type");
    }
}

}  // namespace

RootDatum::RootDatum(std::string name, IntMatrix cartan, std::vector<IntVector> simple_roots,
                     std::vector<IntVector> simple_coroots)
    : name_(std::move(name)),
      cartan_(std::move(cartan)),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  validate_cartan(cartan_);
  const std::size_t l = cartan_.rows();
  if (simple_roots_.size() != l || simple_coroots_.size() != l)
    throw ValidationError("need one simple root and one simple coroot per Cartan row");
  rank_ = l == 0 ? 0 : simple_roots_.front().size();
  for (std::size_t i = 0; i < l; ++i) {
    if (simple_roots_[i].size() != rank_ || simple_coroots_[i].size() != rank_)
      throw ValidationError("root and coroot vectors must have the lattice rank as length");
    for (std::size_t j = 0; j < l; ++j)
      if (dot(simple_roots_[i], simple_coroots_[j]) != cartan_(i, j))
        throw ValidationError("pairing <alpha_i, alpha_j^vee> disagrees with the Cartan matrix at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
  }

  // Weyl group on X_*(T): s_i = I - alpha_i^vee alpha_i^T
  std::vector<AffineMap> gens;
  for (std::size_t i = 0; i < l; ++i) {
    AffineMap s = AffineMap::identity(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) s.linear(r, c) -= simple_coroots_[i][r] * simple_roots_[i][c];
    gens.push_back(std::move(s));
  }
  try {
    weyl_ = FiniteCoxeterGroup(std::move(gens));
  } catch (const BudgetExceeded&) {
    throw ValidationError("Weyl group is not finite");
  }

  // all roots with their coroots by closure under simple reflections
  std::map<IntVector, IntVector> coroot_of;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < l; ++i) {
    coroot_of.emplace(simple_roots_[i], simple_coroots_[i]);
    queue.push_back(simple_roots_[i]);
  }
  while (!queue.empty()) {
    const IntVector beta = queue.front();
    queue.pop_front();
    const IntVector bv = coroot_of.at(beta);
    for (std::size_t i = 0; i < l; ++i) {
      IntVector r = beta - scale(dot(beta, simple_coroots_[i]), simple_roots_[i]);
      IntVector rv = bv - scale(dot(simple_roots_[i], bv), simple_coroots_[i]);
      if (coroot_of.emplace(r, rv).second) queue.push_back(r);
    }
  }

  const IntMatrix at = cartan_.transpose();
  struct Entry {
    IntVector simple, root, coroot, coroot_simple;
  };
  std::vector<Entry> pos;
  for (const auto& [beta, bv] : coroot_of) {
    if (dot(beta, bv) != 2) throw ValidationError("<beta, beta^vee> != 2 for root " + to_string(beta));
    RatVector p(l), pv(l);
    for (std::size_t j = 0; j < l; ++j) {
      p[j] = dot(beta, simple_coroots_[j]);
      pv[j] = dot(simple_roots_[j], bv);
    }
    const auto c = solve(at, p);
    const auto cv = solve(cartan_, pv);
    if (!c || !cv) throw ValidationError("Cartan matrix is singular");
    IntVector ci(l), cvi(l);
    bool positive = true;
    for (std::size_t j = 0; j < l; ++j) {
      if ((*c)[j].denominator() != 1 || (*cv)[j].denominator() != 1)
        throw ValidationError("root not integral in simple roots");
      ci[j] = (*c)[j].numerator();
      cvi[j] = (*cv)[j].numerator();
      if (ci[j] < 0) positive = false;
    }
    if (positive) pos.push_back({ci, beta, bv, cvi});
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    Int ha = 0, hb = 0;
    for (Int x : a.simple) ha += x;
    for (Int x : b.simple) hb += x;
    if (ha != hb) return ha < hb;
    return a.simple < b.simple;
  });
  two_rho_.assign(rank_, 0);
  two_rho_dual_.assign(rank_, 0);
  for (auto& e : pos) {
    two_rho_ = two_rho_ + e.root;
    two_rho_dual_ = two_rho_dual_ + e.coroot;
    pos_roots_simple_.push_back(std::move(e.simple));
    pos_roots_.push_back(std::move(e.root));
    pos_coroots_.push_back(std::move(e.coroot));
    pos_coroots_simple_.push_back(std::move(e.coroot_simple));
  }
  for (std::size_t i = 0; i < l; ++i)
    if (dot(two_rho_, simple_coroots_[i]) != 2) throw ValidationError("<2rho, alpha_i^vee> != 2");
  if (static_cast<std::size_t>(weyl_.length(weyl_.longest())) != pos_roots_.size())
    throw ValidationError("length of w0 differs from the number of positive roots");

  IntMatrix coroot_cols(rank_, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t r = 0; r < rank_; ++r) coroot_cols(r, i) = simple_coroots_[i][r];
  fundamental_group_ = l == 0 ? std::vector<Int>(rank_, 0) : smith_invariants(coroot_cols);
}

RootDatum RootDatum::preset(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x' || ch == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  RootDatum d = single_preset(parts.front());
  for (std::size_t k = 1; k < parts.size(); ++k) d = product(d, single_preset(parts[k]));
  return d;
}

std::vector<std::string> RootDatum::preset_names() {
  return {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SO5", "G2"};
}

RootDatum RootDatum::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid datum JSON: ") + e.what());
  }
  try {
    const auto name = j.at("name").get<std::string>();
    const auto cartan_rows = j.at("cartan").get<std::vector<IntVector>>();
    const auto basis = j.at("coweight_basis").get<std::vector<IntVector>>();
    const auto coroots = j.at("coroots_in_basis").get<std::vector<IntVector>>();
    const std::size_t l = cartan_rows.size();
    for (const auto& row : basis)
      if (row.size() != l) throw ValidationError("each coweight_basis row needs one entry per simple root");
    std::vector<IntVector> roots(l, IntVector(basis.size(), 0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < l; ++i) roots[i][k] = basis[k][i];
    return RootDatum(name, IntMatrix::from_rows(cartan_rows), roots, coroots);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed datum JSON: ") + e.what());
  }
}

std::string RootDatum::to_json() const {
  json j;
  j["name"] = name_;
  std::vector<IntVector> cartan_rows;
  for (std::size_t i = 0; i < cartan_.rows(); ++i) cartan_rows.push_back(cartan_.row(i));
  j["cartan"] = cartan_rows;
  std::vector<IntVector> basis(rank_, IntVector(semisimple_rank(), 0));
  for (std::size_t k = 0; k < rank_; ++k)
    for (std::size_t i = 0; i < semisimple_rank(); ++i) basis[k][i] = simple_roots_[i][k];
  j["coweight_basis"] = basis;
  j["coroots_in_basis"] = simple_coroots_;
  return j.dump();
}

IntVector RootDatum::act_on_character(FiniteCoxeterGroup::Elem w, const IntVector& chi) const {
  // <w chi, x> = <chi, w^{-1} x>, so w acts by the transpose of w^{-1}
  return weyl_.map(weyl_.inverse(w)).linear.transpose() * chi;
}

bool RootDatum::is_dominant(const Coweight& x) const {
  for (const auto& a : simple_roots_)
    if (dot(a, x) < 0) return false;
  return true;
}

bool RootDatum::is_regular(const Coweight& x) const {
  for (const auto& a : pos_roots_)
    if (dot(a, x) == 0) return false;
  return true;
}

std::optional<IntVector> RootDatum::coroot_coords(const Coweight& x) const {
  const std::size_t l = semisimple_rank();
  RatVector p(l);
  for (std::size_t j = 0; j < l; ++j) p[j] = dot(simple_roots_[j], x);
  const auto c = solve(cartan_, p);
  if (!c) return std::nullopt;
  IntVector ci(l);
  IntVector rest = x;
  for (std::size_t i = 0; i < l; ++i) {
    if ((*c)[i].denominator() != 1) return std::nullopt;
    ci[i] = (*c)[i].numerator();
    rest = rest - scale(ci[i], simple_coroots_[i]);
  }
  for (Int v : rest)
    if (v != 0) return std::nullopt;
  return ci;
}

bool RootDatum::dominance_leq(const Coweight& lambda, const Coweight& mu) const {
  const auto c = coroot_coords(mu - lambda);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](Int v) { return v >= 0; });
}

Coweight RootDatum::dominant_rep(const Coweight& x) const {
  Coweight y = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < semisimple_rank(); ++i) {
      const Int p = dot(simple_roots_[i], y);
      if (p < 0) {
        y = y - scale(p, simple_coroots_[i]);
        changed = true;
      }
    }
  }
  return y;
}

Coweight RootDatum::antidominant_rep(const Coweight& x) const { return w0(dominant_rep(x)); }

std::set<Coweight> RootDatum::weyl_orbit(const Coweight& x) const {
  std::set<Coweight> orbit{x};
  std::deque<Coweight> queue{x};
  while (!queue.empty()) {
    const Coweight y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < semisimple_rank(); ++i) {
      Coweight z = y - scale(dot(simple_roots_[i], y), simple_coroots_[i]);
      if (orbit.insert(z).second) queue.push_back(std::move(z));
    }
  }
  return orbit;
}

std::vector<Coweight> RootDatum::dominant_coweights(Int max_height, Int box) const {
  std::vector<Coweight> out;
  Coweight x(rank_, -box);
  if (rank_ == 0) return {Coweight{}};
  while (true) {
    if (is_dominant(x) && height2(x) <= max_height) out.push_back(x);
    std::size_t k = 0;
    while (k < rank_ && x[k] == box) x[k++] = -box;
    if (k == rank_) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    if (height2(a) != height2(b)) return height2(a) < height2(b);
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> RootDatum::components() const {
  const int l = static_cast<int>(semisimple_rank());
  std::vector<int> comp(static_cast<std::size_t>(l), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < l; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    out.emplace_back();
    std::deque<int> queue{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size()) - 1;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      out.back().push_back(i);
      for (int j = 0; j < l; ++j)
        if (comp[static_cast<std::size_t>(j)] < 0 && cartan_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0) {
          comp[static_cast<std::size_t>(j)] = comp[static_cast<std::size_t>(s)];
          queue.push_back(j);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

RootDatum RootDatum::dual() const {
  return RootDatum(name_ + "^", cartan_.transpose(), simple_coroots_, simple_roots_);
}

IntVector parse_int_vector(const std::string& s) {
  IntVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("not an integer vector: '" + s + "'");
    }
  }
  if (out.empty()) throw ValidationError("empty integer vector");
  return out;
}

}  // namespace satake
