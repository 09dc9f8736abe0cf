#pragma once

#include "satake/hecke.hpp"
#include "satake/root_datum.hpp"

#include <map>
#include <optional>
#include <utility>

namespace satake {

/// (nu, m) -> multiplicity, where m is the Gm-grading. The grading of a
/// weight nu of IC_mu(-n) is m = <2rho, mu> + 2n, so a weight contributes
/// q^{m/2} e^nu after specialization.
using GradedCharacter = std::map<std::pair<Coweight, Int>, Int>;

/// (mu, n) -> coefficient of [IC_mu(-n)].
using VinbergClass = std::map<std::pair<Coweight, Int>, Int>;

/// Throws ValidationError if mu is not dominant or n < 0.
GradedCharacter ic_class(const RootDatum& g, const Coweight& mu, Int n);

/// M(k): every grading drops by 2k.
GradedCharacter tate_twist(const GradedCharacter& c, Int k);

struct VinbergCheck {
  bool extends = true;
  /// A failing (weight, grading), the dominant one when there is a choice.
  std::optional<std::pair<Coweight, Int>> witness;
};

/// Whether every (lambda, m) in the support has (-1)^{<2rho,lambda>} = (-1)^m
/// and <2rho, lambda_-> >= -m. Throws ValidationError unless c is
/// Weyl-invariant.
VinbergCheck extends_to_vinberg(const RootDatum& g, const GradedCharacter& c);

/// q^n f_mu -> [IC_mu(-n)]. Throws ValidationError on negative or half powers of q.
VinbergClass psi(const RootDatum& g, const HeckeElement& t);
HeckeElement psi_inverse(const RootDatum& g, const VinbergClass& v);

GradedCharacter character(const RootDatum& g, const VinbergClass& v);
GradedCharacter graded_product(const GradedCharacter& a, const GradedCharacter& b);
/// sum mult * q^{m/2} e^nu
SphericalFunction graded_to_spherical(const GradedCharacter& c);

/// Compares q0-specialized Psi_cl(h), computed from the cells, with the
/// character of psi(h) at q^{1/2} = sqrt(q0).
bool check_diagram(const RootDatum& g, const HeckeElement& t, Int q0);

}  // namespace satake
