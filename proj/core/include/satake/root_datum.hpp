#pragma once

#include "satake/coxeter.hpp"
#include "satake/linalg.hpp"

#include <set>
#include <string>
#include <vector>

namespace satake {

/// Coweights are integer vectors in a fixed basis of X_*(T). Characters are
/// integer vectors in the dual basis, so the pairing is the dot product.
using Coweight = IntVector;

/// A split reductive root datum of finite type.
///
/// Preset bases of X_*(T):
///   SL2, SL3, Sp4, G2   coroot basis (simply connected)
///   PGL2, PGL3, SO5     fundamental coweight basis (adjoint)
///   GL2                 standard basis of Z^2
/// Products such as "SL2xPGL2" use block-diagonal data.
class RootDatum {
 public:
  RootDatum() = default;

  /// simple_roots[i] in X^*(T), simple_coroots[i] in X_*(T), both of length
  /// `rank`. Throws ValidationError unless the data is a finite-type datum
  /// whose Cartan matrix is `cartan`.
  RootDatum(std::string name, IntMatrix cartan, std::vector<IntVector> simple_roots,
            std::vector<IntVector> simple_coroots);

  static RootDatum preset(const std::string& name);
  /// {"name", "cartan", "coweight_basis", "coroots_in_basis"}; see README.
  static RootDatum from_json(const std::string& text);
  std::string to_json() const;
  static std::vector<std::string> preset_names();

  const std::string& name() const { return name_; }
  /// Rank of the lattice X_*(T).
  std::size_t rank() const { return rank_; }
  /// Number of simple roots.
  std::size_t semisimple_rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }

  const std::vector<IntVector>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVector>& simple_coroots() const { return simple_coroots_; }
  /// Positive roots and their coroots, index-aligned.
  const std::vector<IntVector>& positive_roots() const { return pos_roots_; }
  const std::vector<IntVector>& positive_coroots() const { return pos_coroots_; }
  /// Positive roots in simple-root coordinates; positive coroots in
  /// simple-coroot coordinates.
  const std::vector<IntVector>& positive_roots_simple() const { return pos_roots_simple_; }
  const std::vector<IntVector>& positive_coroots_simple() const { return pos_coroots_simple_; }
  const IntVector& two_rho() const { return two_rho_; }
  /// Sum of positive coroots (2 rho of the dual group), in X_*(T).
  const IntVector& two_rho_dual() const { return two_rho_dual_; }
  /// Invariant factors of X_*(T) / coroot lattice; 0 marks a free Z summand.
  const std::vector<Int>& fundamental_group() const { return fundamental_group_; }

  /// Weyl group acting linearly on X_*(T); generator i is s_i.
  const FiniteCoxeterGroup& weyl() const { return weyl_; }
  Coweight act(FiniteCoxeterGroup::Elem w, const Coweight& x) const { return weyl_.map(w).apply(x); }
  /// Action on characters: the contragredient of the action on coweights.
  IntVector act_on_character(FiniteCoxeterGroup::Elem w, const IntVector& chi) const;

  /// <2 rho, x>.
  Int height2(const Coweight& x) const { return dot(two_rho_, x); }
  bool is_dominant(const Coweight& x) const;
  bool is_regular(const Coweight& x) const;
  /// Coefficients of x in the simple coroots if x lies in their span.
  std::optional<IntVector> coroot_coords(const Coweight& x) const;
  bool in_coroot_lattice(const Coweight& x) const { return coroot_coords(x).has_value(); }
  /// True iff mu - lambda is a nonnegative integer combination of simple coroots.
  bool dominance_leq(const Coweight& lambda, const Coweight& mu) const;

  Coweight dominant_rep(const Coweight& x) const;
  Coweight antidominant_rep(const Coweight& x) const;
  std::set<Coweight> weyl_orbit(const Coweight& x) const;
  /// w0(x).
  Coweight w0(const Coweight& x) const { return act(weyl_.longest(), x); }

  /// Dominant coweights with <2rho, x> <= max_height and every coordinate in
  /// [-box, box].
  std::vector<Coweight> dominant_coweights(Int max_height, Int box) const;

  /// Simple indices of each irreducible component of the Dynkin diagram.
  std::vector<std::vector<int>> components() const;

  /// The dual datum: roots and coroots exchanged, X^*(T) becomes X_*.
  RootDatum dual() const;

 private:
  std::string name_;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  std::vector<IntVector> simple_roots_, simple_coroots_;
  std::vector<IntVector> pos_roots_, pos_coroots_;
  std::vector<IntVector> pos_roots_simple_, pos_coroots_simple_;
  IntVector two_rho_, two_rho_dual_;
  std::vector<Int> fundamental_group_;
  FiniteCoxeterGroup weyl_;
};

/// Parses "1,0" or "2" into an integer vector.
IntVector parse_int_vector(const std::string& s);

}  // namespace satake
