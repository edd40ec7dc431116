#include <sstream>

#include "pielift/dsl.hpp"

namespace pielift::dsl {

namespace {

template <class T, class F>
void section(std::ostream& os, const char* key, const std::vector<T>& xs, F item) {
  if (xs.empty()) return;
  os << "  " << key << ": ";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    item(xs[i]);
  }
  os << ";\n";
}

std::string ref(const CatRef& r) {
  return r.monad.empty() ? r.name.text : r.monad + "(" + r.name.text + ")";
}

std::string expr(const FunctorExpr& e) {
  switch (e.kind) {
    case FunctorExpr::Kind::Name: return e.name.text;
    case FunctorExpr::Kind::Apply: return e.name.text + "(" + expr(e.args[0]) + ")";
    case FunctorExpr::Kind::Compose: {
      std::string s;
      for (const auto& a : e.args) s += (s.empty() ? "" : " * ") + expr(a);
      return s;
    }
  }
  return {};
}

void skeleton(std::ostream& os, const CategoryDecl& d) {
  section(os, "objects", d.objects, [&](const Name& n) { os << n.text; });
  section(os, "arrows", d.arrows,
          [&](const Triple& t) { os << t.a.text << ": " << t.b.text << " -> " << t.c.text; });
  section(os, "compose", d.composites,
          [&](const Triple& t) { os << t.a.text << "." << t.b.text << " = " << t.c.text; });
}

void mappings(std::ostream& os, const char* key, const std::vector<Mapping>& ms) {
  section(os, key, ms, [&](const Mapping& m) { os << m.from.text << " |-> " << m.to.text; });
}

bool same_twocat(const TwoCategory& a, const TwoCategory& b) {
  if (!same_category(a.skeleton(), b.skeleton()) || !same_category(a.vertical(), b.vertical()))
    return false;
  for (int f = 0; f < a.one_cell_count(); ++f)
    for (int x = 0; x < a.two_cell_count(); ++x)
      if (a.whisker(f, x) != b.whisker(f, x) || a.whisker_right(x, f) != b.whisker_right(x, f))
        return false;
  return true;
}

bool same_diagram(const TwoFunctor& a, const TwoFunctor& b) {
  if (!same_twocat(*a.dom, *b.dom) || a.on_objects.size() != b.on_objects.size()) return false;
  for (std::size_t i = 0; i < a.on_objects.size(); ++i)
    if (!same_category(a.on_objects[i], b.on_objects[i])) return false;
  return a.on_one == b.on_one && a.on_two == b.on_two;
}

bool same_morphism(const OmegaMorphism& a, const OmegaMorphism& b) {
  return a.dom == b.dom && a.cod == b.cod && a.f == b.f && a.bar == b.bar && a.cls == b.cls;
}

bool same_algebra(const ResolvedAlgebra& a, const ResolvedAlgebra& b) {
  const auto& x = a.diagram;
  const auto& y = b.diagram;
  if (a.monad->name() != b.monad->name() || a.omega != b.omega) return false;
  if (!same_twocat(*x.shape, *y.shape) || !(x.sigma == y.sigma)) return false;
  if (x.objects != y.objects || x.twos != y.twos || x.ones.size() != y.ones.size()) return false;
  for (std::size_t i = 0; i < x.ones.size(); ++i)
    if (!same_morphism(x.ones[i], y.ones[i])) return false;
  return true;
}

}  // namespace

std::string print_workspace(const Workspace& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : w.entries_) {
    if (!first) os << "\n";
    first = false;
    switch (e.kind) {
      case EntityKind::Category: {
        const auto& d = w.category_decls_.at(e.name);
        os << "category " << e.name << " {\n";
        skeleton(os, d);
        break;
      }
      case EntityKind::TwoCategory: {
        const auto& d = w.twocat_decls_.at(e.name);
        os << "twocat " << e.name << " {\n";
        skeleton(os, d.skeleton);
        section(os, "twocells", d.twocells, [&](const Triple& t) {
          os << t.a.text << ": " << t.b.text << " => " << t.c.text;
        });
        section(os, "vcompose", d.vcomposites, [&](const Triple& t) {
          os << t.a.text << "." << t.b.text << " = " << t.c.text;
        });
        section(os, "whisker", d.whiskers, [&](const Triple& t) {
          os << t.a.text << "." << t.b.text << " = " << t.c.text;
        });
        section(os, "sigma", d.sigma, [&](const Name& n) { os << n.text; });
        break;
      }
      case EntityKind::Functor: {
        const auto& d = w.functor_decls_.at(e.name);
        os << "functor " << e.name << ": " << ref(d.dom) << " -> " << ref(d.cod) << " {\n";
        mappings(os, "objects", d.objects);
        mappings(os, "arrows", d.arrows);
        break;
      }
      case EntityKind::Natural: {
        const auto& d = w.natural_decls_.at(e.name);
        os << "natural " << e.name << ": " << expr(d.dom) << " => " << expr(d.cod) << " {\n";
        mappings(os, "components", d.components);
        break;
      }
      case EntityKind::Diagram:
      case EntityKind::Weight: {
        const auto& d = w.diagram_decls_.at(e.name);
        os << (d.weight ? "weight " : "diagram ") << e.name << ": " << d.shape.text
           << " -> cat {\n";
        for (const auto& [x, r] : d.objects) os << "  " << x.text << " |-> " << ref(r) << ";\n";
        for (const auto& m : d.arrows) os << "  " << m.from.text << " |-> " << m.to.text << ";\n";
        for (const auto& m : d.twocells)
          os << "  " << m.from.text << " |-> " << m.to.text << ";\n";
        break;
      }
      case EntityKind::Algebra: {
        const auto& d = w.algebra_decls_.at(e.name);
        os << "algebra " << e.name << ": " << d.diagram.text << " monad " << d.monad.text;
        if (d.omega) os << " omega " << d.omega->text;
        os << " {\n";
        for (const auto& m : d.objects) os << "  " << m.from.text << " |-> " << m.to.text << ";\n";
        for (const auto& m : d.arrows) os << "  " << m.from.text << " |-> " << m.to.text << ";\n";
        break;
      }
    }
    os << "}\n";
  }
  return os.str();
}

bool equivalent(const Workspace& a, const Workspace& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].kind != y[i].kind || x[i].name != y[i].name) return false;
    const auto& n = x[i].name;
    switch (x[i].kind) {
      case EntityKind::Category:
        if (!same_category(a.category(n), b.category(n))) return false;
        break;
      case EntityKind::TwoCategory:
        if (!same_twocat(*a.twocat(n), *b.twocat(n)) || !(a.sigma(n) == b.sigma(n))) return false;
        break;
      case EntityKind::Functor:
        if (!(a.functor(n) == b.functor(n))) return false;
        break;
      case EntityKind::Natural:
        if (!(a.natural(n) == b.natural(n))) return false;
        break;
      case EntityKind::Diagram:
      case EntityKind::Weight:
        if (a.shape_of(n) != b.shape_of(n) || !same_diagram(a.diagram(n), b.diagram(n)))
          return false;
        break;
      case EntityKind::Algebra:
        if (a.base_of(n) != b.base_of(n) || !same_algebra(a.algebra(n), b.algebra(n)))
          return false;
        break;
    }
  }
  return true;
}

}  // namespace pielift::dsl
