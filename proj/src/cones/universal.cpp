#include <stdexcept>

#include "pielift/cones.hpp"

namespace pielift {

LaxCone LimitResult::cone() const {
  return LaxCone{orientation, L, projections, cells};
}

LimitResult sigma_s_limit(const TwoFunctor& F, const SigmaFamily& sigma,
                          Orientation o) {
  const auto& a = *F.dom;
  LimitResult r;
  r.orientation = o;
  r.diagram = F;
  r.sigma = sigma;
  r.cones = enumerate_cones(terminal_category(), F, sigma, true, o);
  r.L = r.cones.cat;
  const int n = r.L->object_count();
  const int m = r.L->arrow_count();
  for (int x = 0; x < a.object_count(); ++x) {
    Functor p{r.L, F(x), std::vector<int>(n), std::vector<int>(m)};
    for (int i = 0; i < n; ++i) p.on_objects[i] = r.cones.cones[i].legs[x](0);
    for (int k = 0; k < m; ++k) p.on_arrows[k] = r.cones.components[k][x][0];
    r.projections.push_back(std::move(p));
  }
  for (int f = 0; f < a.one_cell_count(); ++f) {
    auto top = compose(F.one(f), r.projections[a.src(f)]);
    const auto& other = r.projections[a.tgt(f)];
    NatTrans c = o == Orientation::Lax ? NatTrans{top, other, {}}
                                       : NatTrans{other, top, {}};
    for (int i = 0; i < n; ++i) c.components.push_back(r.cones.cones[i].cells[f][0]);
    r.cells.push_back(std::move(c));
  }
  if (auto p = pie_analysis(a, sigma); std::holds_alternative<PieStructure>(p))
    r.pie = std::get<PieStructure>(std::move(p));
  return r;
}

namespace {

// The cone with vertex 𝟙 obtained by evaluating c at the object e.
LaxCone evaluate(const LaxCone& c, int e) {
  auto one = terminal_category();
  LaxCone out{c.orientation, one, {}, {}};
  for (const auto& l : c.legs)
    out.legs.push_back(point(one, l.cod, l(e)));
  for (std::size_t f = 0; f < c.cells.size(); ++f) {
    const auto& n = c.cells[f];
    out.cells.push_back(NatTrans{point(one, n.dom.cod, n.dom(e)),
                                 point(one, n.cod.cod, n.cod(e)),
                                 {n[e]}});
  }
  return out;
}

std::vector<NatTrans> evaluate(const std::vector<NatTrans>& comps, int e) {
  auto one = terminal_category();
  std::vector<NatTrans> out;
  for (const auto& n : comps)
    out.push_back(NatTrans{point(one, n.dom.cod, n.dom(e)),
                           point(one, n.cod.cod, n.cod(e)),
                           {n[e]}});
  return out;
}

}  // namespace

Functor factor_cone(const LimitResult& lim, const LaxCone& c) {
  if (c.orientation != lim.orientation)
    throw std::invalid_argument("factor_cone: orientation mismatch");
  const auto& e = *c.vertex;
  Functor u{c.vertex, lim.L, {}, {}};
  for (int x = 0; x < e.object_count(); ++x) {
    auto i = lim.cones.find_cone(evaluate(c, x));
    if (!i) throw std::invalid_argument("factor_cone: not a σ-s-cone");
    u.on_objects.push_back(*i);
  }
  for (int k = 0; k < e.arrow_count(); ++k) {
    std::vector<NatTrans> comps;
    for (const auto& l : c.legs) {
      auto one = terminal_category();
      comps.push_back(NatTrans{point(one, l.cod, l(e.src(k))),
                               point(one, l.cod, l(e.tgt(k))),
                               {l.arrow(k)}});
    }
    auto a = lim.cones.find_modification(u(e.src(k)), u(e.tgt(k)), comps);
    if (!a) throw std::invalid_argument("factor_cone: not a σ-s-cone");
    u.on_arrows.push_back(*a);
  }
  return u;
}

NatTrans factor_modification(const LimitResult& lim, const Modification& m) {
  const auto u = factor_cone(lim, m.dom);
  const auto v = factor_cone(lim, m.cod);
  NatTrans out{u, v, {}};
  for (int x = 0; x < m.dom.vertex->object_count(); ++x) {
    auto a = lim.cones.find_modification(u(x), v(x), evaluate(m.components, x));
    if (!a) throw std::invalid_argument("factor_modification: not a modification");
    out.components.push_back(*a);
  }
  return out;
}

LaxCone compose_with_limit(const LimitResult& lim, const Functor& u) {
  LaxCone c{lim.orientation, u.dom, {}, {}};
  for (const auto& p : lim.projections) c.legs.push_back(compose(p, u));
  for (const auto& n : lim.cells) c.cells.push_back(whisker(n, u));
  return c;
}

std::vector<NatTrans> compose_with_limit(const LimitResult& lim,
                                         const NatTrans& tau) {
  std::vector<NatTrans> out;
  for (const auto& p : lim.projections) out.push_back(whisker(p, tau));
  return out;
}

bool verify_universal_property(const LimitResult& lim, const Cat& vertex) {
  auto hom = functor_category(vertex, lim.L);
  auto cones = enumerate_cones(vertex, lim.diagram, lim.sigma, true, lim.orientation);
  Functor post{hom.cat, cones.cat, {}, {}};
  for (const auto& u : hom.functors) {
    auto i = cones.find_cone(compose_with_limit(lim, u));
    if (!i) return false;
    post.on_objects.push_back(*i);
  }
  for (int k = 0; k < hom.cat->arrow_count(); ++k) {
    auto a = cones.find_modification(post(hom.cat->src(k)), post(hom.cat->tgt(k)),
                                     compose_with_limit(lim, hom.naturals[k]));
    if (!a) return false;
    post.on_arrows.push_back(*a);
  }
  return validate_functor(post).empty() && iso_check(post);
}

bool compatibility_check(const LimitResult& lim, CellClass omega, bool a0_only,
                         const Cat& vertex) {
  std::vector<int> objects;
  if (a0_only) {
    if (!lim.pie)
      throw std::invalid_argument("compatibility_check: A₀ needs a PIE pair");
    objects = lim.pie->initials();
  } else {
    for (int x = 0; x < lim.diagram.dom->object_count(); ++x) objects.push_back(x);
  }
  auto cones = enumerate_cones(vertex, lim.diagram, lim.sigma, true, lim.orientation);
  for (int k = 0; k < cones.cat->arrow_count(); ++k) {
    const auto& comps = cones.components[k];
    bool premise = true;
    for (int x : objects) premise = premise && contains(omega, comps[x]);
    if (!premise) continue;
    if (!contains(omega, factor_modification(lim, cones.modification(k))))
      return false;
  }
  return true;
}

}  // namespace pielift
