#pragma once

// Category-valued weights, strict weighted limits, and the 2-category of
// elements El_W together with its dual Γ_W.

#include <vector>

#include "pielift/cones.hpp"

namespace pielift {

/// A weight A → Cat; the same data as a diagram.
using Weight = TwoFunctor;

/// El_W (or Γ_W when `dual`) with its projection onto A and the family of
/// element arrows (f, id).
///
/// El_W: objects (A, x ∈ WA); 1-cells (f, w) : (A, x) → (B, y) with
/// w : Wf(x) → y; (g, v) ∘ (f, w) = (gf, v ∘ Wg(w)); 2-cells (f, w) ⇒ (g, w′)
/// are the γ : f ⇒ g of A with w′ ∘ (Wγ)_x = w. Whiskering and vertical
/// composition are computed on γ.
///
/// Γ_W: w : y → Wf(x); (g, v) ∘ (f, w) = (gf, Wg(w) ∘ v); 2-cells need
/// (Wγ)_x ∘ w = w′.
struct ElCategory {
  bool dual = false;
  TwoCat el;
  TwoMap projection;
  SigmaFamily sigma;
  /// Per object: (A, x).
  std::vector<std::pair<int, int>> elements;
  /// Per 1-cell: (f, w).
  std::vector<std::pair<int, int>> arrows;
  /// Per 2-cell: γ.
  std::vector<int> cells;
};

ElCategory grothendieck(const Weight& w);
ElCategory grothendieck_dual(const Weight& w);

/// Strict 2-natural transformations W ⇒ F and their modifications.
struct WeightedLimit {
  Cat cat;
  /// Per object: the components τ_A : WA → FA.
  std::vector<std::vector<Functor>> naturals;
  /// Per arrow: the components m_A : τ_A ⇒ τ′_A.
  std::vector<std::vector<NatTrans>> modifications;
};

WeightedLimit weighted_limit(const Weight& w, const TwoFunctor& f);

/// The conical diagram F ∘ ◇_W.
TwoFunctor conical_diagram(const ElCategory& el, const TwoFunctor& f);

/// The comparison {W, F} → σ-s-lim of F ∘ ◇_W (lax over El_W, op-lax over
/// Γ_W). Throws std::invalid_argument when a 2-natural has no matching cone.
Functor weighted_comparison(const WeightedLimit& wl, const ElCategory& el,
                            const LimitResult& lim);

/// iso_check of the comparison, over El_W with lax cones and over Γ_W with
/// op-lax cones.
bool compare_weighted_conical(const Weight& w, const TwoFunctor& f);

/// pie_analysis succeeds on (El_W, Σ).
bool is_pie_weight(const Weight& w);

}  // namespace pielift
