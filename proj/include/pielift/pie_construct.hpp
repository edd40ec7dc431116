#pragma once

// σ-s-limits over a PIE pair assembled from a product, an inserter and an
// equifier, and compared with the direct computation.
//
// The product ∏ FA₀ over the chosen initial objects is materialized. The
// products indexed by 1-cells, composable pairs and 2-cells appear only as
// codomains of the inserter and the equifier, and are kept as families of
// their factors: an inserter (equifier) into a product is the joint inserter
// (equifier) of the components.

#include <string>
#include <utility>
#include <vector>

#include "pielift/cones.hpp"

namespace pielift {

struct CellPair {
  /// What the pair expresses, e.g. "LC1 g.f".
  std::string label;
  NatTrans first;
  NatTrans second;
};

struct PieAssembly {
  Orientation orientation = Orientation::Lax;
  TwoFunctor diagram;
  SigmaFamily sigma;
  PieStructure pie;

  /// ∏ FA₀ and, per 1-cell f : A → B, the components at f of φ₀ and φ₁,
  /// F(f f_A) π_{A₀} and F(f_B) π_{B₀}.
  ProductResult base;
  std::vector<Functor> phi0;
  std::vector<Functor> phi1;

  /// The inserter I of φ₀, φ₁ (of φ₁, φ₀ for the op-lax orientation) and the
  /// cone it carries: legs θ_A = F(f_A) θ_{A₀}, cells θ_f.
  InserterResult inserter;
  std::vector<Functor> legs;
  std::vector<NatTrans> cells;

  /// The parallel pairs of the equifier: σsC per f ∈ Σ, LC1 per composable
  /// pair, LC2 per 2-cell.
  std::vector<CellPair> sigma_pairs;
  std::vector<CellPair> lc1_pairs;
  std::vector<CellPair> lc2_pairs;

  EquifierResult final;
  /// The σ-s-cone on final.cat restricted from I.
  LaxCone cone;
};

/// Throws std::invalid_argument when the pair (A, Σ) is not PIE.
PieAssembly build_via_pie(const TwoFunctor& f, const SigmaFamily& sigma, Orientation o);
PieAssembly build_via_pie(const TwoFunctor& f, const PieStructure& pie,
                          const SigmaFamily& sigma, Orientation o);

/// Recomputes the equifier and the restricted cone from the three families.
void equify(PieAssembly& a);

/// All equifier pairs, in the order σsC, LC1, LC2.
std::vector<std::pair<NatTrans, NatTrans>> equifier_pairs(const PieAssembly& a);

/// The functor final.cat → L factoring the assembled cone, when it is a
/// σ-s-cone.
std::optional<Functor> assembly_comparison(const PieAssembly& a, const LimitResult& lim);

bool assembly_matches(const PieAssembly& a, const LimitResult& lim);

/// Direct σ-s-limit versus the assembly.
bool compare_constructions(const TwoFunctor& f, const SigmaFamily& sigma, Orientation o);

}  // namespace pielift
