#pragma once

#include "satake/coxeter.hpp"
#include "satake/root_datum.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace satake {

/// (a, b) stands for A^a x Gm^b.
struct Cell {
  int a = 0;
  int b = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cartesian product of cell multisets.
std::vector<Cell> cell_product(const std::vector<Cell>& x, const std::vector<Cell>& y);

/// The standard apartment of one irreducible component in adjoint
/// coordinates x_i = <alpha_i, x>. Affine simple reflections are numbered
/// 0..l with 0 the affine one; points of the apartment are rational vectors.
class AffineFrame {
 public:
  explicit AffineFrame(IntMatrix cartan);

  std::size_t rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  /// Positive roots in simple-root coordinates, so <beta, x> = beta . x.
  const std::vector<IntVector>& roots() const { return roots_; }
  /// Coroot of each positive root in adjoint coordinates.
  const std::vector<IntVector>& coroots() const { return coroots_; }
  /// theta = sum c_i alpha_i.
  const IntVector& theta() const { return roots_[theta_index_]; }

  const AffineMap& reflection(int k) const { return gens_.at(static_cast<std::size_t>(k)); }
  /// s_{beta,m}: x -> x - (<beta,x> - m) beta^vee.
  AffineMap root_reflection(std::size_t root, Int m) const;

  /// Vertex of the fundamental alcove opposite to the wall k.
  RatVector vertex(int k) const;
  /// Barycenter of the face of the fundamental alcove of the given type.
  RatVector barycenter(GenMask type) const;
  GenMask all_mask() const { return static_cast<GenMask>((1u << (rank() + 1)) - 1); }
  /// Mask of the finite simple reflections 1..l.
  GenMask finite_mask() const { return all_mask() & ~GenMask{1}; }
  int face_dimension(GenMask type) const;

  /// Folds p into the closed fundamental alcove: p = g(y). Returns g and the
  /// type of the face containing y.
  std::pair<AffineMap, GenMask> locate(const RatVector& p) const;

  /// Walls H_{beta,m} through p, as (root index, m).
  std::vector<std::pair<std::size_t, Int>> walls_through(const RatVector& p) const;

 private:
  IntMatrix cartan_;
  std::vector<IntVector> roots_, coroots_;
  std::size_t theta_index_ = 0;
  std::vector<AffineMap> gens_;
};

/// A standard parahoric Weyl subgroup W_t for a proper subset t of 0..l.
struct Parahoric {
  GenMask mask = 0;
  /// Global affine labels of the local generators.
  std::vector<int> labels;
  FiniteCoxeterGroup group;

  GenMask local(GenMask global) const;
  /// Reduced word in global labels.
  std::vector<int> global_word(FiniteCoxeterGroup::Elem e) const;
};

/// Type of the minimal gallery joining 0 with mu:
/// t'_0 = S  >  t_0  <  t'_1  >  t_1  < ... <  t'_p  >  t_p  <  t_mu.
struct GalleryType {
  GenMask t0 = 0;
  /// Index j = 1..p; entry 0 is unused.
  std::vector<GenMask> t_prime;
  /// Index j = 0..p.
  std::vector<GenMask> t;
  GenMask t_mu = 0;
  /// Vertex of the fundamental alcove whose orbit contains mu.
  int mu_vertex = 0;
  int length() const { return static_cast<int>(t.size()) - 1; }
};

/// [delta_0, ..., delta_p], each a minimal coset representative stored as an
/// element of the corresponding parahoric group.
struct CombinatorialGallery {
  std::vector<FiniteCoxeterGroup::Elem> deltas;
  friend bool operator==(const CombinatorialGallery&, const CombinatorialGallery&) = default;
  friend auto operator<=>(const CombinatorialGallery&, const CombinatorialGallery&) = default;
};

/// A wall H_{beta,m} met at step j.
struct WallRef {
  int step = 0;
  std::size_t root = 0;
  Int level = 0;
  friend bool operator==(const WallRef&, const WallRef&) = default;
  friend auto operator<=>(const WallRef&, const WallRef&) = default;
};

struct FoldAnalysis {
  std::vector<int> folds;
  /// A fold is positive when the folded face is reached from the unfolded one
  /// by reflections in walls that have the folded face on their positive side.
  std::vector<int> positive_folds;
  bool positive = true;
  /// Load-bearing walls, split by whether they fold the gallery.
  std::vector<WallRef> load_bearing;
  std::vector<WallRef> j_plus;
  std::vector<WallRef> j_minus;
};

/// Galleries of the minimal type joining 0 with an adjoint dominant coweight
/// of one irreducible component.
class GalleryModel {
 public:
  /// mu_adj in adjoint coordinates; must be dominant. `seed` selects among
  /// generic perturbations, so different seeds may give different minimal
  /// galleries.
  GalleryModel(std::shared_ptr<const AffineFrame> frame, IntVector mu_adj, int seed = 0);

  const AffineFrame& frame() const { return *frame_; }
  const IntVector& mu() const { return mu_; }
  const GalleryType& type() const { return type_; }
  const CombinatorialGallery& minimal() const { return minimal_; }
  /// Walls separating 0 from mu, in crossing order, grouped per step.
  const std::vector<std::vector<std::pair<std::size_t, Int>>>& crossings() const { return crossings_; }

  /// W_{t'_j} for j >= 1, and the finite Weyl group for j = 0.
  const Parahoric& big_group(int j) const;
  /// W_{t_j}.
  GenMask small_mask(int j) const;

  /// Number of galleries of this type: |W/W_{t0}| prod |W'_j/W_j|.
  std::size_t count() const;
  /// Visits every gallery once; stops early if the visitor returns false.
  void enumerate(const std::function<bool(const CombinatorialGallery&)>& visit) const;
  /// Galleries whose first entry is delta0.
  void enumerate_from(FiniteCoxeterGroup::Elem delta0,
                      const std::function<bool(const CombinatorialGallery&)>& visit) const;
  std::vector<FiniteCoxeterGroup::Elem> first_choices() const;
  /// Galleries starting with delta0 whose cell list is nonempty, with their
  /// cells. Prunes as soon as a step contributes nothing.
  void enumerate_contributing(
      FiniteCoxeterGroup::Elem delta0,
      const std::function<void(const CombinatorialGallery&, const std::vector<Cell>&)>& visit) const;

  /// delta_0 ... delta_p applied to the mu-vertex.
  IntVector target(const CombinatorialGallery& g) const;
  FoldAnalysis analyze(const CombinatorialGallery& g) const;
  /// Cells A^a x Gm^b of the piece indexed by the gallery; empty if the
  /// gallery does not contribute.
  std::vector<Cell> cells(const CombinatorialGallery& g) const;
  /// The part of `cells` coming from step j alone, given delta_0..delta_{j-1}.
  std::vector<Cell> step_cells(const CombinatorialGallery& g, int j) const;

  bool is_normal_form(const CombinatorialGallery& g) const;
  std::vector<std::vector<int>> words(const CombinatorialGallery& g) const;

 private:
  AffineMap prefix_map(const CombinatorialGallery& g, int j) const;
  const Parahoric& parahoric(GenMask mask);
  void build(int seed);

  std::shared_ptr<const AffineFrame> frame_;
  IntVector mu_;
  GalleryType type_;
  CombinatorialGallery minimal_;
  std::vector<std::vector<std::pair<std::size_t, Int>>> crossings_;
  std::map<GenMask, Parahoric> parahorics_;
};

/// Gallery models for every irreducible component of a datum.
class DatumGalleries {
 public:
  DatumGalleries(const RootDatum& g, const Coweight& mu, int seed = 0);

  const RootDatum& datum() const { return *datum_; }
  const Coweight& mu() const { return mu_; }
  const std::vector<GalleryModel>& components() const { return models_; }
  const std::vector<std::vector<int>>& component_indices() const { return indices_; }

  /// Coweight with the given adjoint image in the coset of mu.
  Coweight from_adjoint(const std::vector<IntVector>& component_targets) const;
  /// Adjoint image of a coweight, split by component.
  std::vector<IntVector> to_adjoint(const Coweight& x) const;
  /// Whether x lies in mu + coroot lattice.
  bool same_coset(const Coweight& x) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  Coweight mu_;
  std::vector<std::vector<int>> indices_;
  std::vector<GalleryModel> models_;
};

std::string mask_to_string(GenMask m);

}  // namespace satake
