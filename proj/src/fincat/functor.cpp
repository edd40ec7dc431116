#include <stdexcept>

#include "pielift/fincat.hpp"

namespace pielift {

bool operator==(const Functor& f, const Functor& g) {
  return f.on_objects == g.on_objects && f.on_arrows == g.on_arrows &&
         same_category(f.dom, g.dom) && same_category(f.cod, g.cod);
}

Diagnostics validate_functor(const Functor& f) {
  Diagnostics d;
  const auto& c = *f.dom;
  const auto& e = *f.cod;
  if (static_cast<int>(f.on_objects.size()) != c.object_count() ||
      static_cast<int>(f.on_arrows.size()) != c.arrow_count()) {
    add(d, "functor-shape", "maps do not cover the domain");
    return d;
  }
  for (int x = 0; x < c.object_count(); ++x)
    if (f(x) < 0 || f(x) >= e.object_count())
      add(d, "functor-object", "object " + c.object_name(x) + " unmapped");
  for (int a = 0; a < c.arrow_count(); ++a)
    if (f.arrow(a) < 0 || f.arrow(a) >= e.arrow_count())
      add(d, "functor-arrow", "arrow " + c.arrow_name(a) + " unmapped");
  if (!d.empty()) return d;
  for (int a = 0; a < c.arrow_count(); ++a) {
    const int b = f.arrow(a);
    if (e.src(b) != f(c.src(a)) || e.tgt(b) != f(c.tgt(a)))
      add(d, "functor-endpoints",
          c.arrow_name(a) + " maps to " + e.arrow_name(b) +
              " with mismatched endpoints");
  }
  for (int x = 0; x < c.object_count(); ++x)
    if (f.arrow(c.identity(x)) != e.identity(f(x)))
      add(d, "functor-identity",
          "identity of " + c.object_name(x) + " not preserved");
  if (!d.empty()) return d;
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int h = 0; h < c.arrow_count(); ++h)
      if (c.composable(g, h) &&
          f.arrow(c.compose(g, h)) != e.compose(f.arrow(g), f.arrow(h)))
        add(d, "functor-composition",
            c.arrow_name(g) + "." + c.arrow_name(h) + " not preserved");
  return d;
}

Functor identity_functor(const Cat& c) {
  Functor f{c, c, {}, {}};
  for (int x = 0; x < c->object_count(); ++x) f.on_objects.push_back(x);
  for (int a = 0; a < c->arrow_count(); ++a) f.on_arrows.push_back(a);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.cod, g.dom))
    throw std::invalid_argument("compose: functors are not composable (" +
                                f.cod->name() + " vs " + g.dom->name() + ")");
  Functor h{f.dom, g.cod, {}, {}};
  h.on_objects.reserve(f.on_objects.size());
  h.on_arrows.reserve(f.on_arrows.size());
  for (int y : f.on_objects) h.on_objects.push_back(g(y));
  for (int b : f.on_arrows) h.on_arrows.push_back(g.arrow(b));
  return h;
}

Functor point(const Cat& terminal, const Cat& c, int x) {
  return constant_functor(terminal, c, x);
}

Functor constant_functor(const Cat& dom, const Cat& cod, int x) {
  Functor f{dom, cod, {}, {}};
  f.on_objects.assign(dom->object_count(), x);
  f.on_arrows.assign(dom->arrow_count(), cod->identity(x));
  return f;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.components == b.components && a.dom == b.dom && a.cod == b.cod;
}

Diagnostics validate_natural(const NatTrans& n) {
  Diagnostics d;
  const auto& c = *n.dom.dom;
  const auto& e = *n.dom.cod;
  if (!same_category(n.dom.dom, n.cod.dom) ||
      !same_category(n.dom.cod, n.cod.cod)) {
    add(d, "natural-parallel", "functors are not parallel");
    return d;
  }
  if (static_cast<int>(n.components.size()) != c.object_count()) {
    add(d, "natural-shape", "components do not cover the domain");
    return d;
  }
  for (int x = 0; x < c.object_count(); ++x) {
    const int k = n[x];
    if (k < 0 || k >= e.arrow_count() || e.src(k) != n.dom(x) ||
        e.tgt(k) != n.cod(x))
      add(d, "natural-component",
          "component at " + c.object_name(x) + " has wrong endpoints");
  }
  if (!d.empty()) return d;
  for (int a = 0; a < c.arrow_count(); ++a) {
    const int x = c.src(a);
    const int y = c.tgt(a);
    if (e.compose(n.cod.arrow(a), n[x]) != e.compose(n[y], n.dom.arrow(a)))
      add(d, "naturality", "square at " + c.arrow_name(a) + " fails");
  }
  return d;
}

NatTrans identity_natural(const Functor& f) {
  NatTrans n{f, f, {}};
  n.components.reserve(f.on_objects.size());
  for (int y : f.on_objects) n.components.push_back(f.cod->identity(y));
  return n;
}

NatTrans vcompose(const NatTrans& b, const NatTrans& a) {
  if (!(a.cod == b.dom))
    throw std::invalid_argument("vcompose: 2-cells are not composable");
  NatTrans n{a.dom, b.cod, {}};
  const auto& e = *a.dom.cod;
  n.components.reserve(a.components.size());
  for (std::size_t x = 0; x < a.components.size(); ++x)
    n.components.push_back(e.compose(b.components[x], a.components[x]));
  return n;
}

NatTrans whisker(const Functor& h, const NatTrans& a) {
  NatTrans n{compose(h, a.dom), compose(h, a.cod), {}};
  n.components.reserve(a.components.size());
  for (int k : a.components) n.components.push_back(h.arrow(k));
  return n;
}

NatTrans whisker(const NatTrans& a, const Functor& k) {
  NatTrans n{compose(a.dom, k), compose(a.cod, k), {}};
  n.components.reserve(k.on_objects.size());
  for (int x : k.on_objects) n.components.push_back(a.components[x]);
  return n;
}

bool is_identity(const NatTrans& n) {
  const auto& e = *n.dom.cod;
  for (std::size_t x = 0; x < n.components.size(); ++x)
    if (n.components[x] != e.identity(n.dom.on_objects[x])) return false;
  return n.dom.on_arrows == n.cod.on_arrows;
}

bool is_invertible(const NatTrans& n) {
  const auto& e = *n.dom.cod;
  for (int k : n.components)
    if (!e.is_iso(k)) return false;
  return true;
}

std::optional<NatTrans> inverse(const NatTrans& n) {
  NatTrans inv{n.cod, n.dom, {}};
  const auto& e = *n.dom.cod;
  for (int k : n.components) {
    auto i = e.inverse(k);
    if (!i) return std::nullopt;
    inv.components.push_back(*i);
  }
  return inv;
}

bool contains(CellClass c, const NatTrans& n) {
  switch (c) {
    case CellClass::Strict:
      return is_identity(n);
    case CellClass::Pseudo:
      return is_invertible(n);
    case CellClass::Lax:
      return true;
  }
  return false;
}

std::string_view to_string(CellClass c) {
  switch (c) {
    case CellClass::Strict:
      return "strict";
    case CellClass::Pseudo:
      return "pseudo";
    case CellClass::Lax:
      return "lax";
  }
  return "?";
}

std::optional<CellClass> parse_cell_class(std::string_view s) {
  if (s == "s" || s == "strict") return CellClass::Strict;
  if (s == "p" || s == "pseudo") return CellClass::Pseudo;
  if (s == "l" || s == "lax") return CellClass::Lax;
  return std::nullopt;
}

}  // namespace pielift
