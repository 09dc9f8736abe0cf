#pragma once

#include "satake/laurent.hpp"
#include "satake/root_datum.hpp"

#include <map>

namespace satake {

/// Weight multiplicities of a (virtual) representation of the dual group.
/// Weights are coweights of G; dual roots are the coroots of G.
using Character = std::map<Coweight, Int>;

/// Character of the irreducible dual-group representation with highest
/// weight mu, by Freudenthal's recursion.
Character weyl_character(const RootDatum& g, const Coweight& mu);

/// Weyl dimension formula for the dual group.
Int weyl_dimension(const RootDatum& g, const Coweight& mu);

Character character_product(const Character& a, const Character& b);
Character character_add(const Character& a, const Character& b, Int scale_b = 1);

/// Expresses a Weyl-invariant character as a combination of irreducible
/// characters by repeatedly removing the highest remaining weight.
std::map<Coweight, Int> decompose_character(const RootDatum& g, Character c);

/// Multiplicity of V_nu in V_mu (x) V_lambda.
Int tensor_multiplicity(const RootDatum& g, const Coweight& mu, const Coweight& lambda, const Coweight& nu);
std::map<Coweight, Int> tensor_decomposition(const RootDatum& g, const Coweight& mu, const Coweight& lambda);

/// Coefficient of e^beta in prod over positive coroots of 1/(1 - q e^alpha).
/// Zero unless beta is a nonnegative integer combination of simple coroots.
LaurentPoly q_kostant_partition(const RootDatum& g, const Coweight& beta);

/// sum_w (-1)^l(w) P_q(w(mu + rho) - (lambda + rho)), rho of the dual group.
LaurentPoly lusztig_q_analog(const RootDatum& g, const Coweight& mu, const Coweight& lambda);

}  // namespace satake
