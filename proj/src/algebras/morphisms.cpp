#include <functional>

#include "pielift/algebras.hpp"

namespace pielift {

namespace {

CellClass join(CellClass a, CellClass b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

std::string describe(const OmegaMorphism& m) {
  return m.dom.carrier->name() + "→" + m.cod.carrier->name();
}

}  // namespace

bool operator==(const Algebra& a, const Algebra& b) {
  return same_category(a.carrier, b.carrier) && a.structure == b.structure;
}

Diagnostics validate_algebra(const MonadInstance& t, const Algebra& a) {
  Diagnostics d;
  const auto& c = a.carrier;
  const auto tc = t.apply(c);
  if (!same_category(a.structure.dom, tc) || !same_category(a.structure.cod, c)) {
    add(d, "algebra-type", c->name() + ": structure is not TA → A");
    return d;
  }
  for (auto& e : validate_functor(a.structure)) add(d, "algebra-type", e.message);
  if (!d.empty()) return d;
  if (!(compose(a.structure, t.unit(c)) == identity_functor(c)))
    add(d, "algebra-unit", c->name() + ": a ∘ η ≠ id");
  if (!(compose(a.structure, t.apply(a.structure)) == compose(a.structure, t.mult(c))))
    add(d, "algebra-mult", c->name() + ": a ∘ Ta ≠ a ∘ m");
  return d;
}

std::vector<Algebra> enumerate_algebras(const MonadInstance& t, const Cat& c) {
  std::vector<Algebra> out;
  for (auto& s : enumerate_functors(t.apply(c), c)) {
    Algebra a{c, std::move(s)};
    if (validate_algebra(t, a).empty()) out.push_back(std::move(a));
  }
  return out;
}

Diagnostics validate_omega_morphism(const MonadInstance& t, const OmegaMorphism& m) {
  Diagnostics d;
  const auto what = describe(m);
  const auto& a = m.dom.structure;
  const auto& b = m.cod.structure;
  if (!same_category(m.f.dom, m.dom.carrier) || !same_category(m.f.cod, m.cod.carrier)) {
    add(d, "morphism-type", what + ": functor has the wrong type");
    return d;
  }
  const auto tf = t.apply(m.f);
  if (!(m.bar.dom == compose(b, tf)) || !(m.bar.cod == compose(m.f, a))) {
    add(d, "morphism-type", what + ": cell is not b∘Tf ⇒ f∘a");
    return d;
  }
  for (auto& e : validate_natural(m.bar)) add(d, "morphism-type", what + ": " + e.message);
  if (!d.empty()) return d;
  if (!contains(m.cls, m.bar))
    add(d, "morphism-class",
        what + ": cell is not " + std::string(to_string(m.cls)));
  const auto& A = m.dom.carrier;
  if (!is_identity(whisker(m.bar, t.unit(A))))
    add(d, "morphism-unit", what + ": f̄·η ≠ id");
  const auto lhs = whisker(m.bar, t.mult(A));
  const auto rhs =
      vcompose(whisker(m.bar, t.apply(a)), whisker(b, t.apply(m.bar)));
  if (!(lhs == rhs)) add(d, "morphism-mult", what + ": f̄·m ≠ (f̄·Ta)∘(b·Tf̄)");
  return d;
}

OmegaMorphism identity_morphism(const MonadInstance& t, const Algebra& a) {
  const auto id = identity_functor(a.carrier);
  const auto dom = compose(a.structure, t.apply(id));
  NatTrans bar{dom, compose(id, a.structure), identity_natural(dom).components};
  return OmegaMorphism{a, a, id, std::move(bar), CellClass::Strict};
}

OmegaMorphism compose(const MonadInstance& t, const OmegaMorphism& g,
                      const OmegaMorphism& f) {
  auto bar = vcompose(whisker(g.f, f.bar), whisker(g.bar, t.apply(f.f)));
  return OmegaMorphism{f.dom, g.cod, compose(g.f, f.f), std::move(bar), join(g.cls, f.cls)};
}

bool is_algebra_cell(const MonadInstance& t, const NatTrans& rho, const OmegaMorphism& f,
                     const OmegaMorphism& g) {
  if (!(rho.dom == f.f) || !(rho.cod == g.f) || !validate_natural(rho).empty()) return false;
  const auto lhs = vcompose(g.bar, whisker(g.cod.structure, t.apply(rho)));
  const auto rhs = vcompose(whisker(rho, f.dom.structure), f.bar);
  return lhs == rhs;
}

std::vector<OmegaMorphism> enumerate_omega_morphisms(const MonadInstance& t,
                                                     const Algebra& a, const Algebra& b,
                                                     CellClass omega) {
  std::vector<OmegaMorphism> out;
  for (auto& f : enumerate_functors(a.carrier, b.carrier)) {
    const auto top = compose(b.structure, t.apply(f));
    const auto bottom = compose(f, a.structure);
    for (auto& n : enumerate_naturals(top, bottom)) {
      if (!contains(omega, n)) continue;
      OmegaMorphism m{a, b, f, std::move(n), omega};
      if (validate_omega_morphism(t, m).empty()) out.push_back(std::move(m));
    }
  }
  return out;
}

TwoFunctor AlgebraDiagram::underlying() const {
  TwoFunctor f{shape, {}, {}, twos};
  for (const auto& a : objects) f.on_objects.push_back(a.carrier);
  for (const auto& m : ones) f.on_one.push_back(m.f);
  return f;
}

Diagnostics validate_algebra_diagram(const MonadInstance& t, const AlgebraDiagram& d,
                                     CellClass omega) {
  Diagnostics out;
  const auto& a = *d.shape;
  if (static_cast<int>(d.objects.size()) != a.object_count() ||
      static_cast<int>(d.ones.size()) != a.one_cell_count() ||
      static_cast<int>(d.twos.size()) != a.two_cell_count()) {
    add(out, "diagram-shape", d.name + ": assignment does not cover " + a.name());
    return out;
  }
  for (auto& e : validate_sigma_family(a, d.sigma)) out.push_back(e);
  for (auto& e : validate_two_functor(d.underlying())) out.push_back(e);
  for (int x = 0; x < a.object_count(); ++x)
    for (auto& e : validate_algebra(t, d.objects[x]))
      add(out, e.kind, a.object_name(x) + ": " + e.message);
  if (!out.empty()) return out;

  for (int f = 0; f < a.one_cell_count(); ++f) {
    const auto& m = d.ones[f];
    const auto& n = a.one_cell_name(f);
    if (!(m.dom == d.objects[a.src(f)]) || !(m.cod == d.objects[a.tgt(f)])) {
      add(out, "morphism-type", n + ": endpoints differ from the object algebras");
      continue;
    }
    for (auto& e : validate_omega_morphism(t, m)) add(out, e.kind, n + ": " + e.message);
    if (!contains(omega, m.bar))
      add(out, "morphism-class", n + ": cell is not " + std::string(to_string(omega)));
    if (a.is_identity(f) && !is_identity(m.bar))
      add(out, "identity", n + ": identity 1-cell with a non-identity cell");
  }
  if (!out.empty()) return out;
  for (int g = 0; g < a.one_cell_count(); ++g)
    for (int f = 0; f < a.one_cell_count(); ++f)
      if (a.composable(g, f) &&
          !(d.ones[a.compose(g, f)].bar == compose(t, d.ones[g], d.ones[f]).bar))
        add(out, "composite",
            a.one_cell_name(g) + "∘" + a.one_cell_name(f) + ": cell is not the composite");
  for (int c = 0; c < a.two_cell_count(); ++c)
    if (!is_algebra_cell(t, d.twos[c], d.ones[a.cell_src(c)], d.ones[a.cell_tgt(c)]))
      add(out, "algebra-cell", a.two_cell_name(c) + ": not an algebra 2-cell");
  return out;
}

std::vector<AlgebraDiagram> enumerate_algebra_diagrams(const MonadInstance& t,
                                                       const TwoFunctor& F,
                                                       const SigmaFamily& sigma,
                                                       CellClass omega,
                                                       std::size_t limit) {
  const auto& a = *F.dom;
  const int n = a.object_count();
  std::vector<std::vector<Algebra>> choices;
  for (int x = 0; x < n; ++x) choices.push_back(enumerate_algebras(t, F(x)));

  std::vector<int> gens;
  for (int f = 0; f < a.one_cell_count(); ++f)
    if (!a.is_identity(f)) gens.push_back(f);

  std::vector<AlgebraDiagram> out;
  AlgebraDiagram cur{F.dom->name(), F.dom, sigma, std::vector<Algebra>(n),
                     std::vector<OmegaMorphism>(a.one_cell_count()), F.on_two};
  std::vector<bool> set(a.one_cell_count(), false);

  // Composites and 2-cells whose data is complete once `f` is set.
  auto consistent = [&](int f) {
    for (int g = 0; g < a.one_cell_count(); ++g)
      for (int h = 0; h < a.one_cell_count(); ++h) {
        if (!a.composable(g, h)) continue;
        const int gh = a.compose(g, h);
        if (g != f && h != f && gh != f) continue;
        if (!set[g] || !set[h] || !set[gh]) continue;
        if (!(cur.ones[gh].bar == compose(t, cur.ones[g], cur.ones[h]).bar)) return false;
      }
    for (int c = 0; c < a.two_cell_count(); ++c) {
      const int s = a.cell_src(c), u = a.cell_tgt(c);
      if (s != f && u != f) continue;
      if (!set[s] || !set[u]) continue;
      if (!is_algebra_cell(t, cur.twos[c], cur.ones[s], cur.ones[u])) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> ones = [&](std::size_t k) {
    if (out.size() >= limit) return;
    if (k == gens.size()) {
      out.push_back(cur);
      return;
    }
    const int f = gens[k];
    const auto& dom = cur.objects[a.src(f)];
    const auto& cod = cur.objects[a.tgt(f)];
    const auto& ff = F.one(f);
    for (auto& bar : enumerate_naturals(compose(cod.structure, t.apply(ff)),
                                        compose(ff, dom.structure))) {
      if (!contains(omega, bar)) continue;
      OmegaMorphism m{dom, cod, ff, std::move(bar), omega};
      if (!validate_omega_morphism(t, m).empty()) continue;
      cur.ones[f] = std::move(m);
      set[f] = true;
      if (consistent(f)) ones(k + 1);
      set[f] = false;
      if (out.size() >= limit) return;
    }
  };

  std::function<void(int)> objects = [&](int x) {
    if (out.size() >= limit) return;
    if (x == n) {
      for (int y = 0; y < n; ++y) {
        auto id = identity_morphism(t, cur.objects[y]);
        id.cls = omega;
        cur.ones[a.identity(y)] = std::move(id);
        set[a.identity(y)] = true;
      }
      bool ok = true;
      for (int y = 0; y < n && ok; ++y) ok = consistent(a.identity(y));
      if (ok) ones(0);
      return;
    }
    for (const auto& alg : choices[x]) {
      cur.objects[x] = alg;
      objects(x + 1);
      if (out.size() >= limit) return;
    }
  };
  objects(0);
  return out;
}

}  // namespace pielift
