#pragma once

#include "satake/coxeter.hpp"
#include "satake/galleries.hpp"
#include "satake/laurent.hpp"
#include "satake/root_datum.hpp"

#include <vector>

namespace satake {

/// sigma_0 = e, sigma_1, ..., sigma_k along a fixed word s_1 ... s_k, with
/// sigma_{j-1}^{-1} sigma_j in {e, s_j}.
struct Subexpression {
  std::vector<FiniteCoxeterGroup::Elem> sigma;
  FiniteCoxeterGroup::Elem endpoint() const { return sigma.back(); }
};

/// A piece A^m x Gm^n of B y B/B intersected with B^- x B/B.
struct DeodharCell {
  Subexpression sub;
  int m = 0;
  int n = 0;
};

/// All distinguished subexpressions: sigma_j <= sigma_{j-1} s_j for each j.
std::vector<Subexpression> distinguished_subexpressions(const FiniteCoxeterGroup& w, const std::vector<int>& word);

/// Cells of the Richardson piece indexed by the endpoint x. Throws
/// ValidationError if the word is not reduced.
std::vector<DeodharCell> deodhar_cells(const FiniteCoxeterGroup& w, const std::vector<int>& word,
                                       FiniteCoxeterGroup::Elem x);
std::vector<DeodharCell> deodhar_cells(const RootDatum& g, const std::vector<int>& word, FiniteCoxeterGroup::Elem x);

LaurentPoly richardson_poly(const FiniteCoxeterGroup& w, const std::vector<int>& word, FiniteCoxeterGroup::Elem x);
Int richardson_count(const FiniteCoxeterGroup& w, const std::vector<int>& word, FiniteCoxeterGroup::Elem x, Int q);

/// Cells of B v P/P intersected with B^- w P/P for the standard parabolic with
/// generators `p`; v and w must be minimal representatives of W/W_P. The
/// cells are those of B v B/B cap B^- x B/B for x in w W_P.
std::vector<DeodharCell> parabolic_reduce(const FiniteCoxeterGroup& w, GenMask p, FiniteCoxeterGroup::Elem v,
                                          FiniteCoxeterGroup::Elem x);

/// One branch of a relative-position walk: where it ends and its cell.
struct WalkBranch {
  FiniteCoxeterGroup::Elem end;
  Cell cell;
};

/// Walks the word from `start`, tracking a position in W_I \ W (stored as the
/// minimal representative). An ascent moves along and contributes A^1; a
/// descent branches into the descended position (a point) or staying put
/// (a Gm). With I empty and start w0 this reproduces the distinguished
/// subexpressions multiplied on the left by w0.
std::vector<WalkBranch> position_walk(const FiniteCoxeterGroup& w, const std::vector<int>& word,
                                      FiniteCoxeterGroup::Elem start, GenMask left = 0);

LaurentPoly cell_poly(const std::vector<Cell>& cells);
LaurentPoly cell_poly(const std::vector<DeodharCell>& cells);

}  // namespace satake
