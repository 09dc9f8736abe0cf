#pragma once

#include "satake/finite_field.hpp"
#include "satake/root_datum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace satake {

/// Laurent polynomial over F_q: exponent -> nonzero coefficient.
using FqLaurent = std::map<int, FiniteField::Elt>;

/// A lattice g O^2 in F_q((t))^2 in column Hermite normal form
/// [[t^a, f], [0, t^b]] with every exponent of f below a.
struct Gl2Lattice {
  int a = 0;
  int b = 0;
  FqLaurent f;
  friend bool operator==(const Gl2Lattice&, const Gl2Lattice&) = default;
  friend auto operator<=>(const Gl2Lattice&, const Gl2Lattice&) = default;
};

/// Groups the lattice model covers: GL2 directly, SL2 and PGL2 through it.
enum class LatticeGroup { GL2, SL2, PGL2 };

/// By preset name; nullopt for anything else.
std::optional<LatticeGroup> lattice_group(const RootDatum& g);

/// Brute-force point counts on the affine Grassmannian of GL2, SL2 or PGL2
/// over F_q. Coweights are in the coordinates of the corresponding preset.
class LatticeOracle {
 public:
  /// Enumerations larger than max_points throw BudgetExceeded.
  LatticeOracle(LatticeGroup group, int q, std::size_t max_points = kDefaultMaxPoints);
  LatticeOracle(const RootDatum& g, int q, std::size_t max_points = kDefaultMaxPoints);

  static constexpr std::size_t kDefaultMaxPoints = 20'000'000;

  LatticeGroup group() const { return group_; }
  const FiniteField& field() const { return field_; }

  /// Points of Gr^mu, mu dominant.
  std::vector<Gl2Lattice> enumerate_schubert(const Coweight& mu) const;
  Int schubert_count(const Coweight& mu) const { return static_cast<Int>(enumerate_schubert(mu).size()); }

  /// #{x in Gr^mu : x^{-1} y in Gr^lambda} for y in the K-orbit of t^nu.
  /// y is t^nu for seed 0 and a pseudo-random point of Gr^nu otherwise; the
  /// answer does not depend on the choice.
  Int convolution_count(const Coweight& mu, const Coweight& lambda, const Coweight& nu,
                        unsigned seed = 0) const;
  /// All nonzero convolution_count values for dominant nu.
  std::map<Coweight, Int> convolution_counts(const Coweight& mu, const Coweight& lambda) const;

  /// #(S^{+/-}_nu cap Gr^mu)(F_q); sign is +1 or -1.
  Int semiinfinite_count(const Coweight& mu, const Coweight& nu, int sign) const;

  /// Hermite normal form of the lattice spanned by the columns of an
  /// invertible matrix with Laurent polynomial entries. `precision` bounds the
  /// number of power series terms used when dividing by units.
  Gl2Lattice normalize(const FqLaurent& p, const FqLaurent& r, const FqLaurent& s,
                       const FqLaurent& u, int precision) const;

 private:
  std::pair<Int, Int> lift(const Coweight& x) const;
  Coweight unlift(std::pair<Int, Int> x) const;
  Gl2Lattice random_point(std::pair<Int, Int> nu, unsigned seed) const;
  std::pair<Int, Int> relative_type(const Gl2Lattice& x, const Gl2Lattice& y) const;

  LatticeGroup group_;
  FiniteField field_;
  std::size_t max_points_;
};

}  // namespace satake
