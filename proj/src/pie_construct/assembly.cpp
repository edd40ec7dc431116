#include <numeric>
#include <stdexcept>

#include "pielift/pie_construct.hpp"

namespace pielift {

PieAssembly build_via_pie(const TwoFunctor& f, const SigmaFamily& sigma, Orientation o) {
  auto p = pie_analysis(*f.dom, sigma);
  if (const auto* bad = std::get_if<NotPie>(&p))
    throw std::invalid_argument("build_via_pie: not a PIE pair: " + bad->reason);
  return build_via_pie(f, std::get<PieStructure>(p), sigma, o);
}

PieAssembly build_via_pie(const TwoFunctor& f, const PieStructure& pie,
                          const SigmaFamily& sigma, Orientation o) {
  const auto& a = *f.dom;
  const bool lax = o == Orientation::Lax;
  PieAssembly r;
  r.orientation = o;
  r.diagram = f;
  r.sigma = sigma;
  r.pie = pie;

  const auto initials = pie.initials();
  std::vector<int> factor_of(a.object_count(), -1);
  std::vector<Cat> factors;
  for (int x : initials) {
    factor_of[x] = static_cast<int>(factors.size());
    factors.push_back(f(x));
  }
  r.base = product(factors);

  // Legs on ∏ FA₀ before inserting anything: F(f_A) π_{A₀}.
  std::vector<Functor> base_legs;
  for (int x = 0; x < a.object_count(); ++x)
    base_legs.push_back(compose(f.one(pie.canonical[x]),
                                r.base.projections[factor_of[pie.base(x)]]));
  for (int g = 0; g < a.one_cell_count(); ++g) {
    r.phi0.push_back(compose(f.one(g), base_legs[a.src(g)]));
    r.phi1.push_back(base_legs[a.tgt(g)]);
  }

  if (r.phi0.empty()) {
    r.inserter = InserterResult{r.base.cat, identity_functor(r.base.cat), {}};
  } else {
    r.inserter = lax ? inserter(r.phi0, r.phi1) : inserter(r.phi1, r.phi0);
  }
  for (const auto& l : base_legs) r.legs.push_back(compose(l, r.inserter.projection));
  r.cells = r.inserter.cells;

  const auto& th = r.cells;
  for (int g : sigma.cells) {
    r.sigma_pairs.push_back(
        {"sigma " + a.one_cell_name(g), identity_natural(r.legs[a.tgt(g)]), th[g]});
  }
  for (int g = 0; g < a.one_cell_count(); ++g)
    for (int h = 0; h < a.one_cell_count(); ++h) {
      if (!a.composable(g, h)) continue;
      const auto fg = whisker(f.one(g), th[h]);
      r.lc1_pairs.push_back({"LC1 " + a.one_cell_name(g) + "." + a.one_cell_name(h),
                             th[a.compose(g, h)],
                             lax ? vcompose(th[g], fg) : vcompose(fg, th[g])});
    }
  for (int c = 0; c < a.two_cell_count(); ++c) {
    const int s = a.cell_src(c), t = a.cell_tgt(c);
    const auto fc = whisker(f.two(c), r.legs[a.src(s)]);
    r.lc2_pairs.push_back({"LC2 " + a.two_cell_name(c), lax ? th[s] : th[t],
                           lax ? vcompose(th[t], fc) : vcompose(fc, th[s])});
  }
  equify(r);
  return r;
}

std::vector<std::pair<NatTrans, NatTrans>> equifier_pairs(const PieAssembly& a) {
  std::vector<std::pair<NatTrans, NatTrans>> out;
  for (const auto* fam : {&a.sigma_pairs, &a.lc1_pairs, &a.lc2_pairs})
    for (const auto& p : *fam) out.emplace_back(p.first, p.second);
  return out;
}

void equify(PieAssembly& a) {
  const auto pairs = equifier_pairs(a);
  if (pairs.empty()) {
    std::vector<int> all(a.inserter.cat->object_count());
    std::iota(all.begin(), all.end(), 0);
    a.final = full_subcategory(a.inserter.cat, all, "eq(" + a.inserter.cat->name() + ")");
  } else {
    a.final = equifier(pairs);
  }
  const auto& incl = a.final.inclusion;
  a.cone = LaxCone{a.orientation, a.final.cat, {}, {}};
  for (const auto& l : a.legs) a.cone.legs.push_back(compose(l, incl));
  for (const auto& c : a.cells) a.cone.cells.push_back(whisker(c, incl));
}

std::optional<Functor> assembly_comparison(const PieAssembly& a, const LimitResult& lim) {
  if (!validate_cone(a.cone, a.diagram).empty() || !is_sigma_s_cone(a.cone, a.sigma))
    return std::nullopt;
  try {
    return factor_cone(lim, a.cone);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool assembly_matches(const PieAssembly& a, const LimitResult& lim) {
  const auto u = assembly_comparison(a, lim);
  return u && validate_functor(*u).empty() && iso_check(*u);
}

bool compare_constructions(const TwoFunctor& f, const SigmaFamily& sigma, Orientation o) {
  const auto lim = sigma_s_limit(f, sigma, o);
  if (!lim.pie) throw std::invalid_argument("compare_constructions: not a PIE pair");
  return assembly_matches(build_via_pie(f, *lim.pie, sigma, o), lim);
}

}  // namespace pielift
