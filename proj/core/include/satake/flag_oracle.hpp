#pragma once

#include "satake/finite_field.hpp"
#include "satake/root_datum.hpp"

#include <map>
#include <utility>
#include <vector>

namespace satake {

/// Point counts of open Richardson varieties by enumerating all flags over
/// F_q. Supports the SL2, SL3 and Sp4 presets; Sp4 acts on F_q^4 with basis
/// (e1, e2, e-2, e-1) and the antidiagonal symplectic form.
class FlagOracle {
 public:
  using Elem = FiniteCoxeterGroup::Elem;

  FlagOracle(const RootDatum& g, int q);

  static bool supported(const RootDatum& g);

  /// #(B y B cap B^- x B)/B over F_q.
  Int richardson_count(Elem x, Elem y) const;
  /// #(B v P cap B^- w P)/P over F_q for P = P_J; v and w are reduced to
  /// minimal representatives of W/W_J.
  Int partial_richardson_count(GenMask j, Elem v, Elem w) const;
  /// Number of complete flags.
  Int flag_count() const { return static_cast<Int>(flags_.size()); }

 private:
  using Vec = std::vector<FiniteField::Elt>;
  using Subspace = std::vector<Vec>;  // reduced row echelon form
  struct Flag {
    std::vector<Subspace> chain;  // chain[d-1] has dimension d, for the stored dims
    Elem pos = 0;                 // relative to the standard flag
    Elem opp = 0;                 // relative to the opposite flag
  };

  Subspace rref(Subspace rows) const;
  std::vector<Vec> canonical_lines(const Subspace& mod) const;
  int dim_meet_first(const Subspace& v, int j) const;
  int dim_meet_last(const Subspace& v, int j) const;
  Elem position(const std::vector<std::vector<int>>& ranks, bool opposite) const;
  void classify(Flag& f) const;

  FiniteCoxeterGroup weyl_;
  FiniteField field_;
  int n_ = 0;
  bool symplectic_ = false;
  std::map<std::vector<int>, Elem> perm_to_elem_;
  std::vector<Flag> flags_;
  std::map<std::pair<Elem, Elem>, Int> counts_;
};

}  // namespace satake
