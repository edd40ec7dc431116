#include <algorithm>
#include <functional>
#include <set>

#include "pielift/algebras.hpp"

namespace pielift {

std::string_view to_string(LiftError::Kind k) {
  switch (k) {
    case LiftError::Kind::NotPie: return "NotPie";
    case LiftError::Kind::NonInvertibleCanonical: return "NonInvertibleCanonical";
    case LiftError::Kind::InvalidDiagram: return "InvalidDiagram";
    case LiftError::Kind::NotCompatible: return "NotCompatible";
  }
  return "?";
}

LiftOptions default_lift_options(const MonadInstance& t) {
  LiftOptions o;
  o.compatibility_vertices = {terminal_category(), walking_arrow(), walking_iso()};
  for (const auto& c : {terminal_category(), walking_arrow()})
    for (auto& a : enumerate_algebras(t, c)) o.vertex_algebras.push_back(std::move(a));
  return o;
}

bool LiftResult::all_pass() const {
  return compatible && theta_is_cone && mu_matches_pasting && mu_sigma_identities &&
         algebra_axioms && projections_valid && cells_are_algebra_cells &&
         base_projections_strict && universal;
}

LiftResult lift_limit(const Monad& t, const AlgebraDiagram& d, CellClass omega) {
  return lift_limit(t, d, omega, default_lift_options(*t));
}

LiftResult lift_limit(const Monad& tp, const AlgebraDiagram& d, CellClass omega,
                      const LiftOptions& opts) {
  const auto& t = *tp;
  const auto& a = *d.shape;
  if (auto diag = validate_algebra_diagram(t, d, omega); !diag.empty())
    throw LiftError(LiftError::Kind::InvalidDiagram, d.name + ": " + to_string(diag));
  const auto F = d.underlying();
  const auto analysis = pie_analysis(a, d.sigma);
  if (const auto* bad = std::get_if<NotPie>(&analysis))
    throw LiftError(LiftError::Kind::NotPie, d.name + ": " + bad->reason);
  const auto& pie = std::get<PieStructure>(analysis);
  for (int x = 0; x < a.object_count(); ++x) {
    const int fa = pie.canonical[x];
    if (!is_invertible(d.ones[fa].bar))
      throw LiftError(LiftError::Kind::NonInvertibleCanonical,
                      d.name + ": the cell of " + a.one_cell_name(fa) + " : " +
                          a.object_name(pie.base(x)) + " → " + a.object_name(x) +
                          " is not invertible");
  }

  LiftResult r;
  r.omega = omega;
  r.base = sigma_s_limit(F, d.sigma, Orientation::Oplax);
  r.compatible = std::all_of(
      opts.compatibility_vertices.begin(), opts.compatibility_vertices.end(),
      [&](const Cat& v) { return compatibility_check(r.base, omega, false, v); });
  if (!r.compatible)
    throw LiftError(LiftError::Kind::NotCompatible,
                    d.name + ": base limit is not " + std::string(to_string(omega)) +
                        "-compatible");

  const auto& L = r.base.L;
  const auto tl = t.apply(L);
  const auto& pi = r.base.projections;
  const auto& pif = r.base.cells;
  auto st = [&](int x) -> const Functor& { return d.objects[x].structure; };
  auto bar = [&](int f) -> const NatTrans& { return d.ones[f].bar; };
  std::vector<Functor> tpi;
  for (const auto& p : pi) tpi.push_back(t.apply(p));

  // θ_A = a T(π_A), θ_f = (F̄f · Tπ_A) ∘ (b · Tπ_f)
  r.theta = LaxCone{Orientation::Oplax, tl, {}, {}};
  for (int x = 0; x < a.object_count(); ++x) r.theta.legs.push_back(compose(st(x), tpi[x]));
  for (int f = 0; f < a.one_cell_count(); ++f)
    r.theta.cells.push_back(vcompose(whisker(bar(f), tpi[a.src(f)]),
                                     whisker(st(a.tgt(f)), t.apply(pif[f]))));
  r.theta_is_cone = validate_cone(r.theta, F).empty();

  // μ_A = F(f_A) a₀ Tπ_{A₀}, α_A = F̄(f_A) · Tπ_{A₀}
  std::vector<Functor> mu_legs;
  for (int x = 0; x < a.object_count(); ++x) {
    const int x0 = pie.base(x), fa = pie.canonical[x];
    mu_legs.push_back(compose(F.one(fa), compose(st(x0), tpi[x0])));
    r.alpha.push_back(whisker(bar(fa), tpi[x0]));
  }
  r.mu = modify_cone(r.theta, mu_legs, r.alpha, F).first;

  // Diagram (1), pasted left to right.
  for (int f = 0; f < a.one_cell_count(); ++f) {
    const int x = a.src(f), y = a.tgt(f);
    const int x0 = pie.base(x), y0 = pie.base(y);
    const auto s1 = whisker(*inverse(bar(pie.canonical[y])), tpi[y0]);
    const auto s2 = whisker(st(y), t.apply(pif[f]));
    const auto s3 = whisker(bar(f), tpi[x]);
    const auto s4 = whisker(F.one(f), whisker(bar(pie.canonical[x]), tpi[x0]));
    r.pasted.push_back(vcompose(s4, vcompose(s3, vcompose(s2, s1))));
  }
  r.mu_matches_pasting = r.mu.cells == r.pasted;
  r.mu_sigma_identities = std::all_of(d.sigma.cells.begin(), d.sigma.cells.end(), [&](int f) {
    return is_identity(r.pasted[f]) && is_identity(r.mu.cells[f]);
  });
  if (!validate_cone(r.mu, F).empty() || !is_sigma_s_cone(r.mu, d.sigma))
    throw std::logic_error("lift_limit: μ is not a σ-s-cone on " + d.name);

  r.algebra = Algebra{L, factor_cone(r.base, r.mu)};
  r.algebra_axioms = validate_algebra(t, r.algebra).empty();

  r.projections_valid = true;
  for (int x = 0; x < a.object_count(); ++x) {
    OmegaMorphism p{r.algebra, d.objects[x], pi[x], r.alpha[x], omega};
    r.projections_valid = r.projections_valid && validate_omega_morphism(t, p).empty();
    if (is_identity(p.bar)) r.strict_projections.push_back(x);
    r.projections.push_back(std::move(p));
  }
  const auto initials = pie.initials();
  r.base_projections_strict = std::all_of(initials.begin(), initials.end(), [&](int x) {
    return std::binary_search(r.strict_projections.begin(), r.strict_projections.end(), x);
  });

  r.cells_are_algebra_cells = r.projections_valid;
  for (int f = 0; f < a.one_cell_count() && r.cells_are_algebra_cells; ++f) {
    const auto other = compose(t, d.ones[f], r.projections[a.src(f)]);
    r.cells_are_algebra_cells = whisker(pif[f], r.algebra.structure) == r.mu.cells[f] &&
                                is_algebra_cell(t, pif[f], r.projections[a.tgt(f)], other);
  }

  r.universal = r.algebra_axioms && r.projections_valid && r.cells_are_algebra_cells;
  for (const auto& e : opts.vertex_algebras) {
    if (!r.universal) break;
    r.universal = verify_lifted_universal_property(t, r, d, e);
  }
  return r;
}

namespace {

struct AlgebraCone {
  LaxCone under;
  std::vector<OmegaMorphism> legs;
};

bool same_legs(const std::vector<OmegaMorphism>& p, const std::vector<OmegaMorphism>& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p[i].f == q[i].f) || !(p[i].bar == q[i].bar)) return false;
  return true;
}

// σ-s-op-cones in T-Alg with vertex e, enumerated without reference to L.
std::vector<AlgebraCone> algebra_cones(const MonadInstance& t, const AlgebraDiagram& d,
                                       const Algebra& e, CellClass omega) {
  const auto F = d.underlying();
  const auto& a = *d.shape;
  const int n = a.object_count();
  std::vector<AlgebraCone> out;
  for (auto& c : enumerate_cone_objects(e.carrier, F, &d.sigma, Orientation::Oplax)) {
    std::vector<std::vector<OmegaMorphism>> per(n);
    for (int x = 0; x < n; ++x) {
      const auto& h = c.legs[x];
      const auto& ax = d.objects[x];
      for (auto& b : enumerate_naturals(compose(ax.structure, t.apply(h)),
                                        compose(h, e.structure))) {
        if (!contains(omega, b)) continue;
        OmegaMorphism m{e, ax, h, std::move(b), omega};
        if (validate_omega_morphism(t, m).empty()) per[x].push_back(std::move(m));
      }
    }
    std::vector<OmegaMorphism> legs(n);
    std::function<void(int)> rec = [&](int x) {
      if (x == n) {
        for (int f = 0; f < a.one_cell_count(); ++f)
          if (!is_algebra_cell(t, c.cells[f], legs[a.tgt(f)],
                               compose(t, d.ones[f], legs[a.src(f)])))
            return;
        out.push_back(AlgebraCone{c, legs});
        return;
      }
      for (const auto& m : per[x]) {
        legs[x] = m;
        rec(x + 1);
      }
    };
    rec(0);
  }
  return out;
}

bool cells_between(const MonadInstance& t, const std::vector<OmegaMorphism>& p,
                   const std::vector<OmegaMorphism>& q, const std::vector<NatTrans>& comps) {
  for (std::size_t x = 0; x < comps.size(); ++x)
    if (!is_algebra_cell(t, comps[x], p[x], q[x])) return false;
  return true;
}

}  // namespace

bool verify_lifted_universal_property(const MonadInstance& t, const LiftResult& lift,
                                      const AlgebraDiagram& d, const Algebra& vertex) {
  const auto& lim = lift.base;
  const auto zs = enumerate_omega_morphisms(t, vertex, lift.algebra, lift.omega);
  const auto cones = algebra_cones(t, d, vertex, lift.omega);
  if (zs.size() != cones.size()) return false;

  std::vector<std::size_t> image;
  std::set<std::size_t> hit;
  for (const auto& z : zs) {
    const auto under = compose_with_limit(lim, z.f);
    std::vector<OmegaMorphism> legs;
    for (const auto& p : lift.projections) legs.push_back(compose(t, p, z));
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < cones.size() && !found; ++i)
      if (cones[i].under == under && same_legs(cones[i].legs, legs)) found = i;
    if (!found || !hit.insert(*found).second) return false;
    image.push_back(*found);
  }

  const auto F = d.underlying();
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = 0; j < zs.size(); ++j) {
      std::vector<std::vector<NatTrans>> induced;
      for (auto& rho : enumerate_naturals(zs[i].f, zs[j].f)) {
        if (!is_algebra_cell(t, rho, zs[i], zs[j])) continue;
        induced.push_back(compose_with_limit(lim, rho));
      }
      const auto& ci = cones[image[i]];
      const auto& cj = cones[image[j]];
      std::vector<std::vector<NatTrans>> mods;
      for (auto& m : enumerate_modifications(ci.under, cj.under, F))
        if (cells_between(t, ci.legs, cj.legs, m)) mods.push_back(std::move(m));
      if (induced.size() != mods.size()) return false;
      std::vector<bool> used(mods.size(), false);
      for (const auto& c : induced) {
        auto it = std::find(mods.begin(), mods.end(), c);
        if (it == mods.end()) return false;
        const auto k = static_cast<std::size_t>(it - mods.begin());
        if (used[k]) return false;
        used[k] = true;
      }
    }
  return true;
}

std::optional<DetectionWitness> detection_counterexample(
    const MonadInstance& t, const LiftResult& lift, CellClass omega_prime,
    const std::vector<Algebra>& sources) {
  const auto initials = lift.base.pie->initials();
  for (const auto& z0 : sources)
    for (auto& z : enumerate_omega_morphisms(t, z0, lift.algebra, lift.omega)) {
      bool premise = true;
      for (int x : initials)
        premise = premise && contains(omega_prime, compose(t, lift.projections[x], z).bar);
      if (premise && !contains(omega_prime, z.bar)) return DetectionWitness{z0, std::move(z)};
    }
  return std::nullopt;
}

bool detection_check(const MonadInstance& t, const LiftResult& lift, CellClass omega_prime,
                     const std::vector<Algebra>& sources) {
  return !detection_counterexample(t, lift, omega_prime, sources).has_value();
}

}  // namespace pielift
