#pragma once

// Lax and op-lax cones over a 2-functor A → Cat, their modifications, the
// category of σ-s-cones with a given vertex, and the σ-s-limit computed as
// the category of σ-s-cones with vertex 𝟙.

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pielift/two_cat.hpp"

namespace pielift {

/// Lax: θ_f : Ff θ_A ⇒ θ_B.  Op-lax: θ_f : θ_B ⇒ Ff θ_A.
enum class Orientation { Lax, Oplax };

std::string_view to_string(Orientation o);

struct LaxCone {
  Orientation orientation = Orientation::Lax;
  Cat vertex;
  std::vector<Functor> legs;
  std::vector<NatTrans> cells;
};

bool operator==(const LaxCone& a, const LaxCone& b);

/// Types of legs and cells, LC0, LC1 and LC2.
Diagnostics validate_cone(const LaxCone& c, const TwoFunctor& F);
/// σsC: every θ_f with f ∈ Σ is an identity.
bool is_sigma_s_cone(const LaxCone& c, const SigmaFamily& sigma);

struct Modification {
  LaxCone dom;
  LaxCone cod;
  std::vector<NatTrans> components;
};

/// Types of the components and LCM.
Diagnostics validate_modification(const Modification& m, const TwoFunctor& F);

/// All cones (σ-s-cones when `sigma` is given) with the given vertex. With
/// `fixed_legs` only the structural cells are searched.
std::vector<LaxCone> enumerate_cone_objects(
    const Cat& vertex, const TwoFunctor& F, const SigmaFamily* sigma,
    Orientation o, const std::vector<Functor>* fixed_legs = nullptr);

/// All modifications between two cones of the same vertex and orientation.
std::vector<std::vector<NatTrans>> enumerate_modifications(
    const LaxCone& dom, const LaxCone& cod, const TwoFunctor& F);

struct ConeCategory {
  Cat cat;
  Cat vertex;
  Orientation orientation = Orientation::Lax;
  std::vector<LaxCone> cones;
  /// Components of the modification behind each arrow of `cat`.
  std::vector<std::vector<NatTrans>> components;

  Modification modification(int arrow) const;
  std::optional<int> find_cone(const LaxCone& c) const;
  std::optional<int> find_modification(int dom, int cod,
                                       const std::vector<NatTrans>& comps) const;

  std::map<std::vector<int>, int> cone_index;
  std::map<std::vector<int>, int> modification_index;
};

/// Cones_ℓ(E, F), or its full subcategory on σ-s-cones when `sigma_s_only`.
ConeCategory enumerate_cones(const Cat& vertex, const TwoFunctor& F,
                             const SigmaFamily& sigma, bool sigma_s_only,
                             Orientation o);

/// The op-lax (or lax) cone obtained by transporting along invertible
/// α_A : θ_A ⇒ θ′_A, with the modification α. Throws std::invalid_argument
/// when some α_A is not invertible or has the wrong type.
std::pair<LaxCone, Modification> modify_cone(const LaxCone& c,
                                             const std::vector<Functor>& new_legs,
                                             const std::vector<NatTrans>& alpha,
                                             const TwoFunctor& F);

struct LimitResult {
  Orientation orientation = Orientation::Lax;
  TwoFunctor diagram;
  SigmaFamily sigma;
  Cat L;
  std::vector<Functor> projections;
  /// π_f, oriented like the cones.
  std::vector<NatTrans> cells;
  std::optional<PieStructure> pie;
  ConeCategory cones;

  /// The limit cone (π_A, π_f) with vertex L.
  LaxCone cone() const;
};

LimitResult sigma_s_limit(const TwoFunctor& F, const SigmaFamily& sigma,
                          Orientation o);

/// The unique E → L whose composite with the limit cone is `c`. Throws
/// std::invalid_argument when `c` is not a σ-s-cone of the right kind.
Functor factor_cone(const LimitResult& lim, const LaxCone& c);

/// The unique natural φ ⇒ φ′ between factorizations inducing `m`.
NatTrans factor_modification(const LimitResult& lim, const Modification& m);

/// π ∘ u, using the stored projections and cells.
LaxCone compose_with_limit(const LimitResult& lim, const Functor& u);
/// π · τ
std::vector<NatTrans> compose_with_limit(const LimitResult& lim,
                                         const NatTrans& tau);

/// Hom(E, L) → Cones_σ^s(E, F) by post-composition is an isomorphism.
bool verify_universal_property(const LimitResult& lim, const Cat& vertex);

/// Modifications with components in Ω (at every object, or only at the
/// chosen initials) induce 2-cells in Ω between the factorizations.
bool compatibility_check(const LimitResult& lim, CellClass omega, bool a0_only,
                         const Cat& vertex);

}  // namespace pielift
