#include "commands.hpp"

#include "satake/hecke.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/mvcells.hpp"
#include "satake/oracle_cache.hpp"

#include <algorithm>
#include <ostream>

namespace satake::cli {

namespace {

std::vector<Cell> expected_minus_cells(Int mu, Int nu) {
  if (nu == mu) return {{0, 0}};
  if (nu == -mu) return {{static_cast<int>(mu), 0}};
  return {{static_cast<int>((mu - nu) / 2 - 1), 1}};
}

}  // namespace

Json cmd_report_pgl2(const Options& o) {
  const RootDatum g = RootDatum::preset("PGL2");
  std::vector<Int> qs;
  for (Int q : parse_int_vector(o.q_list)) qs.push_back(q);
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& name, const Json& where, bool pass) {
    ok = ok && pass;
    checks.push_back({{"check", name}, {"at", where}, {"ok", pass}});
  };

  for (Int m = 1; m <= o.max_height; ++m) {
    const Coweight mu{m};
    std::map<Int, LaurentPoly> polys;
    for (Int n = -m; n <= m; n += 2) {
      const Coweight nu{n};
      const CellList minus = mv_decomposition(g, mu, nu, Orbit::Minus);
      record("cells", {{"mu", m}, {"nu", n}}, minus.cells == expected_minus_cells(m, n));
      record("multiplicity", {{"mu", m}, {"nu", n}}, weight_multiplicity(g, mu, nu) == 1);
      polys[n] = minus.poly();
    }
    // wrong parity and out-of-range weights are empty
    record("empty", {{"mu", m}, {"nu", m + 1}}, mv_decomposition(g, mu, {m + 1}, Orbit::Minus).empty());
    record("empty", {{"mu", m}, {"nu", -m - 2}}, mv_decomposition(g, mu, {-m - 2}, Orbit::Minus).empty());

    for (Int q : qs) {
      const LatticeOracle oracle(g, static_cast<int>(q));
      Int total = 0;
      for (const auto& [n, p] : polys) {
        const Int expect = p.evaluate_int(q);
        total += expect;
        record("oracle_minus_count", {{"mu", m}, {"nu", n}, {"q", q}},
               oracle.semiinfinite_count(mu, {n}, -1) == expect);
      }
      record("schubert_partition", {{"mu", m}, {"q", q}}, oracle.schubert_count(mu) == total);
    }

    // T_1 * T_{m-1} against lattice convolution counts
    if (m >= 2 && m <= 4) {
      const Coweight one{1}, rest{m - 1};
      for (Int q : qs) {
        const auto counts = cached_convolution_counts(g, static_cast<int>(q), one, rest);
        for (Int n = m; n >= 0; n -= 2) {
          const Int expect = structure_constant(g, one, rest, {n}).evaluate_int(q);
          const auto it = counts.find({n});
          const Int got = it == counts.end() ? 0 : it->second;
          record("structure_constant", {{"mu", 1}, {"lambda", m - 1}, {"nu", n}, {"q", q}}, got == expect);
        }
      }
    }
  }
  std::size_t failed = 0;
  for (const auto& c : checks)
    if (!c["ok"].get<bool>()) ++failed;
  return {{"group", "PGL2"}, {"max_mu", o.max_height}, {"q", qs}, {"ok", ok},
          {"checks", checks.size()}, {"failed", failed}, {"details", checks}};
}

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_rows(const Json& rows, std::ostream& out) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& r : rows)
      if (r.contains(cols[c])) width[c] = std::max(width[c], cell_text(r[cols[c]]).size());
  }
  auto line = [&](auto&& cell) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string s = cell(c);
      out << s << std::string(width[c] - s.size() + 2, ' ');
    }
    out << '\n';
  };
  line([&](std::size_t c) { return cols[c]; });
  line([&](std::size_t c) { return std::string(width[c], '-'); });
  for (const auto& r : rows) line([&](std::size_t c) { return r.contains(cols[c]) ? cell_text(r[cols[c]]) : ""; });
}

}  // namespace

void print_table(const Json& j, std::ostream& out) {
  if (j.is_array()) {
    bool objects = !j.empty();
    for (const auto& r : j) objects = objects && r.is_object();
    if (objects)
      print_rows(j, out);
    else
      out << j.dump() << '\n';
    return;
  }
  if (!j.is_object()) {
    out << cell_text(j) << '\n';
    return;
  }
  std::size_t key_width = 0;
  for (const auto& [k, v] : j.items())
    if (!v.is_array() || v.empty() || !v.front().is_object()) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : j.items())
    if (!v.is_array() || v.empty() || !v.front().is_object())
      out << k << std::string(key_width - k.size() + 2, ' ') << cell_text(v) << '\n';
  for (const auto& [k, v] : j.items())
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << '\n' << k << ":\n";
      print_rows(v, out);
    }
}

}  // namespace satake::cli
