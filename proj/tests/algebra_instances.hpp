#pragma once

// Algebra diagrams for the pointed monad.

#include <string>
#include <vector>

#include "instances.hpp"
#include "pielift/algebras.hpp"

namespace pielift::testing {

/// C with basepoint x: identity on C, the added point to x.
inline Algebra pointed(const MonadInstance& t, const Cat& c, int x) {
  Functor s{t.apply(c), c, {}, {}};
  for (int y = 0; y < c->object_count(); ++y) s.on_objects.push_back(y);
  s.on_objects.push_back(x);
  for (int a = 0; a < c->arrow_count(); ++a) s.on_arrows.push_back(a);
  s.on_arrows.push_back(c->identity(x));
  return Algebra{c, s};
}

/// (f, f̄) between pointed categories; f̄ is `at_point` at the added point
/// and an identity elsewhere.
inline OmegaMorphism pointed_morphism(const MonadInstance& t, const Algebra& a,
                                      const Algebra& b, const Functor& f,
                                      const std::string& at_point, CellClass cls) {
  NatTrans bar{compose(b.structure, t.apply(f)), compose(f, a.structure), {}};
  for (int x = 0; x < a.carrier->object_count(); ++x)
    bar.components.push_back(b.carrier->identity(f(x)));
  bar.components.push_back(b.carrier->find_arrow(at_point));
  return OmegaMorphism{a, b, f, bar, cls};
}

/// 0 ⇄ 1 → 2 with j = i⁻¹, v : 1 → 2 and w = v i.
inline Cat iso_plus() {
  static const Cat c = FinCategory::build(category_data(
      "Iso+", {"0", "1", "2"},
      {{"i", "0", "1"}, {"j", "1", "0"}, {"v", "1", "2"}, {"w", "0", "2"}},
      {{"j", "i", "id_0"}, {"i", "j", "id_1"}, {"v", "i", "w"}, {"w", "j", "v"}}));
  return c;
}

/// Inserter shape, Σ = {f}, over A = (𝟚, 0) and B = (Iso+, 1). The 1-cell f
/// is 0 ↦ 0, 1 ↦ 2 with f̄ = j (pseudo); g is constant at 2 with ḡ = v, which
/// is not invertible. With `bad_canonical`, f is constant at 2 with f̄ = v.
inline AlgebraDiagram pointed_inserter(const MonadInstance& t, bool bad_canonical = false) {
  auto sh = inserter_shape();
  const auto two = walking_arrow();
  const auto ip = iso_plus();
  const auto A = pointed(t, two, 0);
  const auto B = pointed(t, ip, 1);
  const auto f = bad_canonical ? constant_functor(two, ip, 2) : fun(two, ip, {0, 2}, {"id_0", "id_2", "w"});
  const auto g = constant_functor(two, ip, 2);
  auto F = instance(sh.a, {{{"A", two}, {"B", ip}}, {{"f", f}, {"g", g}}, {}});
  const auto& s = *sh.a;
  AlgebraDiagram d{"pointed_inserter", sh.a, sh.sigma, {A, B},
                   std::vector<OmegaMorphism>(s.one_cell_count()), F.on_two};
  for (int k = 0; k < s.one_cell_count(); ++k)
    if (s.is_identity(k)) d.ones[k] = identity_morphism(t, d.objects[s.src(k)]);
  d.ones[s.find_one_cell("f")] =
      pointed_morphism(t, A, B, f, bad_canonical ? "v" : "j", CellClass::Lax);
  d.ones[s.find_one_cell("g")] = pointed_morphism(t, A, B, g, "v", CellClass::Lax);
  for (auto& m : d.ones) m.cls = CellClass::Lax;
  return d;
}

/// Source algebras with at most two objects.
inline std::vector<Algebra> small_sources(const MonadInstance& t) {
  std::vector<Algebra> out;
  for (const auto& c : {terminal_category(), walking_arrow(), discrete_category(2),
                        walking_iso(), involution()})
    for (auto& a : enumerate_algebras(t, c)) out.push_back(std::move(a));
  return out;
}

}  // namespace pielift::testing
