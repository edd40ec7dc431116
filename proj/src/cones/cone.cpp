#include <stdexcept>

#include "pielift/cones.hpp"

namespace pielift {

std::string_view to_string(Orientation o) {
  return o == Orientation::Lax ? "lax" : "oplax";
}

bool operator==(const LaxCone& a, const LaxCone& b) {
  return a.orientation == b.orientation && same_category(a.vertex, b.vertex) &&
         a.legs == b.legs && a.cells == b.cells;
}

Diagnostics validate_cone(const LaxCone& c, const TwoFunctor& F) {
  Diagnostics d;
  const auto& a = *F.dom;
  if (static_cast<int>(c.legs.size()) != a.object_count() ||
      static_cast<int>(c.cells.size()) != a.one_cell_count()) {
    add(d, "cone-shape", "legs or cells do not cover " + a.name());
    return d;
  }
  for (int x = 0; x < a.object_count(); ++x)
    if (!same_category(c.legs[x].dom, c.vertex) ||
        !same_category(c.legs[x].cod, F(x)))
      add(d, "cone-type", "leg at " + a.object_name(x));
  if (!d.empty()) return d;
  const bool lax = c.orientation == Orientation::Lax;
  for (int f = 0; f < a.one_cell_count(); ++f) {
    const auto top = compose(F.one(f), c.legs[a.src(f)]);
    const auto& other = c.legs[a.tgt(f)];
    const auto& cell = c.cells[f];
    if (!(cell.dom == (lax ? top : other)) || !(cell.cod == (lax ? other : top)))
      add(d, "cone-type", "cell at " + a.one_cell_name(f));
  }
  if (!d.empty()) return d;

  for (int x = 0; x < a.object_count(); ++x)
    if (!is_identity(c.cells[a.identity(x)]))
      add(d, "LC0", "cell at " + a.one_cell_name(a.identity(x)) + " is not an identity");
  for (int g = 0; g < a.one_cell_count(); ++g)
    for (int f = 0; f < a.one_cell_count(); ++f) {
      if (!a.composable(g, f)) continue;
      const auto fg = whisker(F.one(g), c.cells[f]);
      const auto rhs = lax ? vcompose(c.cells[g], fg) : vcompose(fg, c.cells[g]);
      if (!(c.cells[a.compose(g, f)] == rhs))
        add(d, "LC1", a.one_cell_name(g) + " . " + a.one_cell_name(f));
    }
  for (int gamma = 0; gamma < a.two_cell_count(); ++gamma) {
    const int f = a.cell_src(gamma), g = a.cell_tgt(gamma);
    const auto fg = whisker(F.two(gamma), c.legs[a.src(f)]);
    const bool ok = lax ? c.cells[f] == vcompose(c.cells[g], fg)
                        : c.cells[g] == vcompose(fg, c.cells[f]);
    if (!ok) add(d, "LC2", a.two_cell_name(gamma));
  }
  return d;
}

bool is_sigma_s_cone(const LaxCone& c, const SigmaFamily& sigma) {
  for (int f : sigma.cells)
    if (!is_identity(c.cells[f])) return false;
  return true;
}

Diagnostics validate_modification(const Modification& m, const TwoFunctor& F) {
  Diagnostics d;
  const auto& a = *F.dom;
  if (m.dom.orientation != m.cod.orientation ||
      !same_category(m.dom.vertex, m.cod.vertex)) {
    add(d, "modification-type", "cones differ in vertex or orientation");
    return d;
  }
  if (static_cast<int>(m.components.size()) != a.object_count()) {
    add(d, "modification-shape", "components do not cover " + a.name());
    return d;
  }
  for (int x = 0; x < a.object_count(); ++x)
    if (!(m.components[x].dom == m.dom.legs[x]) ||
        !(m.components[x].cod == m.cod.legs[x]))
      add(d, "modification-type", "component at " + a.object_name(x));
  if (!d.empty()) return d;
  const bool lax = m.dom.orientation == Orientation::Lax;
  for (int f = 0; f < a.one_cell_count(); ++f) {
    const auto& aa = m.components[a.src(f)];
    const auto& ab = m.components[a.tgt(f)];
    const auto ffa = whisker(F.one(f), aa);
    const bool ok =
        lax ? vcompose(m.cod.cells[f], ffa) == vcompose(ab, m.dom.cells[f])
            : vcompose(m.cod.cells[f], ab) == vcompose(ffa, m.dom.cells[f]);
    if (!ok) add(d, "LCM", a.one_cell_name(f));
  }
  return d;
}

std::pair<LaxCone, Modification> modify_cone(const LaxCone& c,
                                             const std::vector<Functor>& new_legs,
                                             const std::vector<NatTrans>& alpha,
                                             const TwoFunctor& F) {
  const auto& a = *F.dom;
  if (static_cast<int>(new_legs.size()) != a.object_count() ||
      static_cast<int>(alpha.size()) != a.object_count())
    throw std::invalid_argument("modify_cone: families do not cover the shape");
  std::vector<NatTrans> inv;
  for (int x = 0; x < a.object_count(); ++x) {
    if (!(alpha[x].dom == c.legs[x]) || !(alpha[x].cod == new_legs[x]))
      throw std::invalid_argument("modify_cone: component at " + a.object_name(x) +
                                  " has the wrong type");
    auto i = inverse(alpha[x]);
    if (!i)
      throw std::invalid_argument("modify_cone: component at " + a.object_name(x) +
                                  " is not invertible");
    inv.push_back(std::move(*i));
  }
  LaxCone out{c.orientation, c.vertex, new_legs, {}};
  for (int f = 0; f < a.one_cell_count(); ++f) {
    const int x = a.src(f), y = a.tgt(f);
    if (c.orientation == Orientation::Oplax) {
      // θ′_f = Ff α_A ∘ θ_f ∘ α_B⁻¹
      out.cells.push_back(vcompose(whisker(F.one(f), alpha[x]),
                                   vcompose(c.cells[f], inv[y])));
    } else {
      // θ′_f = α_B ∘ θ_f ∘ Ff α_A⁻¹
      out.cells.push_back(
          vcompose(alpha[y], vcompose(c.cells[f], whisker(F.one(f), inv[x]))));
    }
  }
  Modification m{c, out, alpha};
  return {std::move(out), std::move(m)};
}

}  // namespace pielift
