#pragma once

#include "satake/galleries.hpp"
#include "satake/laurent.hpp"
#include "satake/root_datum.hpp"

#include <map>
#include <memory>
#include <vector>

namespace satake {

/// +1 for S^+_nu = U(F) t^nu, -1 for S^-_nu = U^-(F) t^nu.
enum class Orbit { Plus = 1, Minus = -1 };

/// Cells A^a x Gm^b of S^{+/-}_nu cap Gr^mu, sorted.
struct CellList {
  Coweight mu;
  Coweight nu;
  Orbit sign = Orbit::Plus;
  std::vector<Cell> cells;

  bool empty() const { return cells.empty(); }
  /// sum q^a (q-1)^b
  LaurentPoly poly() const;
  /// Largest a + b, or -1 when empty.
  int dimension() const;
  /// Number of cells with a + b == dimension().
  int top_cells() const;
};

/// Nonempty S^+_nu cap Gr^mu for all nu at once, keyed by nu. Memoized per
/// (datum, mu, seed); the seed picks the minimal gallery.
std::shared_ptr<const std::map<Coweight, std::vector<Cell>>> mv_cells_all(const RootDatum& g, const Coweight& mu,
                                                                           int seed = 0);

/// Throws ValidationError if mu is not dominant or has the wrong rank.
CellList mv_decomposition(const RootDatum& g, const Coweight& mu, const Coweight& nu, Orbit sign, int seed = 0);

LaurentPoly point_count_poly(const RootDatum& g, const Coweight& mu, const Coweight& nu, Orbit sign);

/// Number of top-dimensional cells of S^+_nu cap Gr^mu.
Int weight_multiplicity(const RootDatum& g, const Coweight& mu, const Coweight& nu);

/// |G/P_mu|(q) q^{<2rho,mu> - dim G/P_mu} with P_mu the stabilizer parabolic.
LaurentPoly schubert_formula_poly(const RootDatum& g, const Coweight& mu);

/// |Gr^mu(F_q)|: the lattice oracle for GL2, SL2 and PGL2, the formula otherwise.
Int schubert_cell_count(const RootDatum& g, const Coweight& mu, Int q);

}  // namespace satake
