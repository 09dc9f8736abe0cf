#pragma once

#include "satake/laurent.hpp"
#include "satake/root_datum.hpp"

#include <map>
#include <optional>
#include <vector>

namespace satake {

/// Finitely supported dominant coweight -> coefficient. Used both for
/// T-basis and f-basis expansions; zero coefficients are never stored.
class HeckeElement {
 public:
  HeckeElement() = default;
  static HeckeElement basis(const Coweight& mu, LaurentPoly coeff = 1);

  const std::map<Coweight, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const Coweight& mu) const;
  void add(const Coweight& mu, const LaurentPoly& c);
  bool is_zero() const { return terms_.empty(); }

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const LaurentPoly& c) const;
  bool operator==(const HeckeElement& o) const = default;

  std::string to_string() const;

 private:
  std::map<Coweight, LaurentPoly> terms_;
};

/// Element of Z[q^{+-1/2}][X_*(T)]: coweight -> coefficient.
using SphericalFunction = std::map<Coweight, LaurentPoly>;

/// phi_mu phi_lambda = sum_nu c^nu q^{<rho, mu+lambda-nu>} phi_nu, as nu -> coefficient.
std::map<Coweight, LaurentPoly> phi_basis_product(const RootDatum& g, const Coweight& mu, const Coweight& lambda);

/// d_{mu,lambda}(q) with f_mu = sum_lambda d_{mu,lambda} T_lambda and d_{mu,mu} = 1,
/// from Lusztig's q-analogue: d = q^{<rho, mu-lambda>} K_{mu,lambda}(q^{-1}). Memoized.
const std::map<Coweight, LaurentPoly>& change_of_basis(const RootDatum& g, const Coweight& mu);

/// The same polynomials from finite-field point counts (GL2, SL2, PGL2 only):
/// at each sample q, solve the triangular system relating f_mu to the
/// semi-infinite orbit counts of the lattice oracle, then interpolate. Uses
/// the first deg + 2 entries of `samples` for each lambda, so one sample always
/// checks the fit. Throws ValidationError if the values are not integral or
/// the fit fails, BudgetExceeded if there are too few samples.
std::map<Coweight, LaurentPoly> change_of_basis_oracle(const RootDatum& g, const Coweight& mu,
                                                       const std::vector<int>& samples = {2, 3, 4, 5, 7, 8, 9, 11, 13});

/// T-basis -> f-basis and back.
HeckeElement to_f_basis(const RootDatum& g, const HeckeElement& t);
HeckeElement from_f_basis(const RootDatum& g, const HeckeElement& f);

/// Product in the T-basis through the f-basis and phi_basis_product. Throws
/// ValidationError if a coefficient of an input is not a polynomial in q or
/// a coweight is not dominant.
HeckeElement hecke_multiply(const RootDatum& g, const HeckeElement& a, const HeckeElement& b);

/// N_{mu,lambda,nu}(q): the coefficient of T_nu in T_mu T_lambda.
LaurentPoly structure_constant(const RootDatum& g, const Coweight& mu, const Coweight& lambda, const Coweight& nu);

/// Classical Satake transform of a T-basis element, from Psi(f_mu) = q^{<rho,mu>} chi_mu.
SphericalFunction satake_classical(const RootDatum& g, const HeckeElement& t);
/// The same transform specialized at q = q0 (q^{1/2} -> sqrt(q0)).
std::map<Coweight, SurdValue> satake_specialized(const RootDatum& g, const HeckeElement& t, Int q0);

/// Psi(T_mu) from the cells instead: sum_nu q^{-<rho,nu>} #(S^+_nu cap Gr^mu) e^nu,
/// extended linearly.
SphericalFunction satake_from_cells(const RootDatum& g, const HeckeElement& t);

/// Exponents e(nu) (in units of q^{1/2}) with coefficient of e^nu in
/// satake_classical(T_mu) equal to q^{e(nu)} point_count_poly(mu, nu, S^+),
/// if such exponents exist.
std::optional<std::map<Coweight, int>> gallery_bridge_exponents(const RootDatum& g, const Coweight& mu);

SphericalFunction spherical_product(const SphericalFunction& a, const SphericalFunction& b);
std::map<Coweight, SurdValue> specialize(const SphericalFunction& f, Int q0);

}  // namespace satake
