#pragma once

// 2-monads on finite categories, strict algebras, ω-morphisms for the three
// cell classes, and the lifting of σ-s-op-limits over a PIE pair to algebras.
//
// Conventions. An ω-morphism (f, f̄) : (A, a) → (B, b) has f̄ : b ∘ Tf ⇒ f ∘ a,
// subject to
//   unit:           f̄ · η_A = id_f
//   multiplication: f̄ · m_A = (f̄ · Ta) ∘ (b · Tf̄)
// Composition: (g, ḡ) ∘ (f, f̄) = (gf, (g · f̄) ∘ (ḡ · Tf)).
// An algebra 2-cell ρ : (f, f̄) ⇒ (g, ḡ) is ρ : f ⇒ g with
//   ḡ ∘ (b · Tρ) = (ρ · a) ∘ f̄.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pielift/cones.hpp"

namespace pielift {

/// A strict 2-monad on finite categories, given by code. Implementations
/// must be pure; laws are checked on whatever a run touches.
class MonadInstance {
 public:
  virtual ~MonadInstance() = default;
  virtual std::string name() const = 0;
  virtual Cat apply(const Cat& c) const = 0;
  virtual Functor apply(const Functor& f) const = 0;
  virtual NatTrans apply(const NatTrans& a) const = 0;
  /// η_C : C → TC
  virtual Functor unit(const Cat& c) const = 0;
  /// m_C : TTC → TC
  virtual Functor mult(const Cat& c) const = 0;
};

using Monad = std::shared_ptr<const MonadInstance>;

Monad identity_monad();
/// T(C) = C ⊔ 𝟙; η the inclusion, m folds the two added points.
Monad pointed_monad();
/// T(C) = C × Z2, Z2 discrete with xor. Algebras are involutive
/// automorphisms σ; a cell f̄ lives at the objects (x, 1) and the
/// multiplication coherence reads f̄_{σx} ∘ σ(f̄_x) = id.
Monad z2_monad();
std::vector<Monad> builtin_monads();
/// nullptr when unknown.
Monad find_monad(std::string_view name);

/// Monad laws, 2-functoriality and strict 2-naturality of η and m, on the
/// given categories and on the functors and naturals between them.
Diagnostics validate_monad(const MonadInstance& t, const std::vector<Cat>& cats,
                           const std::vector<Functor>& functors = {},
                           const std::vector<NatTrans>& naturals = {});

struct Algebra {
  Cat carrier;
  Functor structure;  // TA → A
};

bool operator==(const Algebra& a, const Algebra& b);

Diagnostics validate_algebra(const MonadInstance& t, const Algebra& a);
std::vector<Algebra> enumerate_algebras(const MonadInstance& t, const Cat& c);

struct OmegaMorphism {
  Algebra dom;
  Algebra cod;
  Functor f;
  NatTrans bar;  // b ∘ Tf ⇒ f ∘ a
  CellClass cls = CellClass::Lax;
};

Diagnostics validate_omega_morphism(const MonadInstance& t, const OmegaMorphism& m);
OmegaMorphism identity_morphism(const MonadInstance& t, const Algebra& a);
/// g ∘ f
OmegaMorphism compose(const MonadInstance& t, const OmegaMorphism& g,
                      const OmegaMorphism& f);
bool is_algebra_cell(const MonadInstance& t, const NatTrans& rho, const OmegaMorphism& f,
                     const OmegaMorphism& g);
/// All coherent ω-morphisms A → B whose cell lies in `omega`.
std::vector<OmegaMorphism> enumerate_omega_morphisms(const MonadInstance& t,
                                                     const Algebra& a, const Algebra& b,
                                                     CellClass omega);

/// A 2-functor from a PIE shape into T-Alg_ω^Ω.
struct AlgebraDiagram {
  std::string name;
  TwoCat shape;
  SigmaFamily sigma;
  std::vector<Algebra> objects;
  std::vector<OmegaMorphism> ones;
  std::vector<NatTrans> twos;

  TwoFunctor underlying() const;
};

/// Underlying 2-functor, every morphism coherent and in `omega`, identities
/// and composites preserved, every 2-cell an algebra 2-cell.
Diagnostics validate_algebra_diagram(const MonadInstance& t, const AlgebraDiagram& d,
                                     CellClass omega);

/// All algebra diagrams over F with morphisms in `omega`, at most `limit` of
/// them, in enumeration order.
std::vector<AlgebraDiagram> enumerate_algebra_diagrams(const MonadInstance& t,
                                                       const TwoFunctor& f,
                                                       const SigmaFamily& sigma,
                                                       CellClass omega,
                                                       std::size_t limit);

class LiftError : public std::runtime_error {
 public:
  enum class Kind { NotPie, NonInvertibleCanonical, InvalidDiagram, NotCompatible };
  LiftError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(LiftError::Kind k);

struct LiftOptions {
  /// Vertices for the Ω-compatibility check on the base limit.
  std::vector<Cat> compatibility_vertices;
  /// Vertex algebras for the universal property in T-Alg.
  std::vector<Algebra> vertex_algebras;
};

/// 𝟙, 𝟚 and the walking isomorphism; all algebras on 𝟙 and 𝟚.
LiftOptions default_lift_options(const MonadInstance& t);

struct LiftResult {
  CellClass omega = CellClass::Lax;
  LimitResult base;  // op-lax
  Algebra algebra;   // (L, l)
  /// (π_A, π̄_A) with π̄_A = α_A.
  std::vector<OmegaMorphism> projections;

  /// Cones with vertex TL: θ, μ, the modification α : θ ⇒ μ, and the
  /// pasted diagram-(1) composites.
  LaxCone theta;
  LaxCone mu;
  std::vector<NatTrans> alpha;
  std::vector<NatTrans> pasted;

  bool compatible = false;
  bool theta_is_cone = false;
  bool mu_matches_pasting = false;
  bool mu_sigma_identities = false;
  bool algebra_axioms = false;
  bool projections_valid = false;
  bool cells_are_algebra_cells = false;
  /// Objects A with π̄_A an identity.
  std::vector<int> strict_projections;
  bool base_projections_strict = false;
  bool universal = false;

  bool all_pass() const;
};

/// Throws LiftError.
LiftResult lift_limit(const Monad& t, const AlgebraDiagram& d, CellClass omega,
                      const LiftOptions& opts);
LiftResult lift_limit(const Monad& t, const AlgebraDiagram& d, CellClass omega);

/// The 1- and 2-dimensional universal properties of the lifted cone in
/// T-Alg_ω^Ω, over one vertex algebra.
bool verify_lifted_universal_property(const MonadInstance& t, const LiftResult& lift,
                                      const AlgebraDiagram& d, const Algebra& vertex);

/// For every ω-morphism z : Z → L from the given sources: if every
/// π_{A₀} ∘ z has its cell in Ω′, so does z.
bool detection_check(const MonadInstance& t, const LiftResult& lift, CellClass omega_prime,
                     const std::vector<Algebra>& sources);

struct DetectionWitness {
  Algebra source;
  OmegaMorphism z;
};

std::optional<DetectionWitness> detection_counterexample(
    const MonadInstance& t, const LiftResult& lift, CellClass omega_prime,
    const std::vector<Algebra>& sources);

}  // namespace pielift
