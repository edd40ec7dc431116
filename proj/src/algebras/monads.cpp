#include <algorithm>

#include "pielift/algebras.hpp"

namespace pielift {

namespace {

class IdentityMonad final : public MonadInstance {
 public:
  std::string name() const override { return "identity"; }
  Cat apply(const Cat& c) const override { return c; }
  Functor apply(const Functor& f) const override { return f; }
  NatTrans apply(const NatTrans& a) const override { return a; }
  Functor unit(const Cat& c) const override { return identity_functor(c); }
  Functor mult(const Cat& c) const override { return identity_functor(c); }
};

// C ⊔ 𝟙. The new object and its identity come last, so indices of C are kept.
class PointedMonad final : public MonadInstance {
 public:
  std::string name() const override { return "pointed"; }

  Cat apply(const Cat& c) const override {
    std::string pt = "pt";
    while (c->find_object(pt) >= 0 || c->find_arrow("id_" + pt) >= 0) pt += "'";
    auto objects = c->objects();
    auto arrows = c->arrows();
    std::vector<int> identity;
    for (int x = 0; x < c->object_count(); ++x) identity.push_back(c->identity(x));
    const int n = c->object_count();
    const int m = c->arrow_count();
    objects.push_back(pt);
    arrows.push_back(ArrowDecl{"id_" + pt, n, n});
    identity.push_back(m);
    auto cc = c;
    return FinCategory::assemble("T(" + c->name() + ")", std::move(objects),
                                 std::move(arrows), std::move(identity),
                                 [cc, m](int g, int f) {
                                   if (g == m) return f;
                                   if (f == m) return g;
                                   return cc->compose(g, f);
                                 });
  }

  Functor apply(const Functor& f) const override {
    Functor r{apply(f.dom), apply(f.cod), f.on_objects, f.on_arrows};
    r.on_objects.push_back(f.cod->object_count());
    r.on_arrows.push_back(f.cod->arrow_count());
    return r;
  }

  NatTrans apply(const NatTrans& a) const override {
    NatTrans r{apply(a.dom), apply(a.cod), a.components};
    r.components.push_back(a.dom.cod->arrow_count());
    return r;
  }

  Functor unit(const Cat& c) const override {
    Functor r{c, apply(c), {}, {}};
    for (int x = 0; x < c->object_count(); ++x) r.on_objects.push_back(x);
    for (int a = 0; a < c->arrow_count(); ++a) r.on_arrows.push_back(a);
    return r;
  }

  // TTC has the inner point at n and the outer one at n + 1; both go to n.
  Functor mult(const Cat& c) const override {
    auto tc = apply(c);
    Functor r{apply(tc), tc, {}, {}};
    const int n = c->object_count(), m = c->arrow_count();
    for (int x = 0; x <= n + 1; ++x) r.on_objects.push_back(std::min(x, n));
    for (int a = 0; a <= m + 1; ++a) r.on_arrows.push_back(std::min(a, m));
    return r;
  }
};

// C × Z2 with Z2 discrete, multiplied by xor. Object (x, i) sits at 2x + i,
// arrow (c, i) at 2c + i.
class Z2Monad final : public MonadInstance {
 public:
  std::string name() const override { return "z2"; }

  Cat apply(const Cat& c) const override {
    std::vector<std::string> objects;
    std::vector<ArrowDecl> arrows;
    std::vector<int> identity;
    for (int x = 0; x < c->object_count(); ++x)
      for (int i = 0; i < 2; ++i) {
        objects.push_back("(" + c->object_name(x) + "," + std::to_string(i) + ")");
        identity.push_back(2 * c->identity(x) + i);
      }
    for (int a = 0; a < c->arrow_count(); ++a)
      for (int i = 0; i < 2; ++i)
        arrows.push_back(ArrowDecl{"(" + c->arrow_name(a) + "," + std::to_string(i) + ")",
                                   2 * c->src(a) + i, 2 * c->tgt(a) + i});
    auto cc = c;
    return FinCategory::assemble("Z(" + c->name() + ")", std::move(objects), std::move(arrows),
                                 std::move(identity), [cc](int g, int f) {
                                   return 2 * cc->compose(g / 2, f / 2) + g % 2;
                                 });
  }

  Functor apply(const Functor& f) const override {
    Functor r{apply(f.dom), apply(f.cod), {}, {}};
    for (int x : f.on_objects)
      for (int i = 0; i < 2; ++i) r.on_objects.push_back(2 * x + i);
    for (int a : f.on_arrows)
      for (int i = 0; i < 2; ++i) r.on_arrows.push_back(2 * a + i);
    return r;
  }

  NatTrans apply(const NatTrans& a) const override {
    NatTrans r{apply(a.dom), apply(a.cod), {}};
    for (int c : a.components)
      for (int i = 0; i < 2; ++i) r.components.push_back(2 * c + i);
    return r;
  }

  Functor unit(const Cat& c) const override {
    Functor r{c, apply(c), {}, {}};
    for (int x = 0; x < c->object_count(); ++x) r.on_objects.push_back(2 * x);
    for (int a = 0; a < c->arrow_count(); ++a) r.on_arrows.push_back(2 * a);
    return r;
  }

  Functor mult(const Cat& c) const override {
    auto tc = apply(c);
    Functor r{apply(tc), tc, {}, {}};
    for (int y = 0; y < tc->object_count(); ++y)
      for (int j = 0; j < 2; ++j) r.on_objects.push_back(2 * (y / 2) + (y % 2 ^ j));
    for (int b = 0; b < tc->arrow_count(); ++b)
      for (int j = 0; j < 2; ++j) r.on_arrows.push_back(2 * (b / 2) + (b % 2 ^ j));
    return r;
  }
};

void check_equal(Diagnostics& d, const Functor& a, const Functor& b, const std::string& kind,
                 const std::string& what) {
  if (!(a == b)) add(d, kind, what);
}

void check_equal(Diagnostics& d, const NatTrans& a, const NatTrans& b, const std::string& kind,
                 const std::string& what) {
  if (!(a == b)) add(d, kind, what);
}

}  // namespace

Monad identity_monad() { return std::make_shared<IdentityMonad>(); }
Monad pointed_monad() { return std::make_shared<PointedMonad>(); }

Monad z2_monad() { return std::make_shared<Z2Monad>(); }

std::vector<Monad> builtin_monads() {
  return {identity_monad(), pointed_monad(), z2_monad()};
}

Monad find_monad(std::string_view name) {
  for (auto& t : builtin_monads())
    if (t->name() == name) return t;
  return nullptr;
}

Diagnostics validate_monad(const MonadInstance& t, const std::vector<Cat>& cats,
                           const std::vector<Functor>& functors,
                           const std::vector<NatTrans>& naturals) {
  Diagnostics d;
  for (const auto& c : cats) {
    const auto& n = c->name();
    auto tc = t.apply(c);
    for (auto& e : validate_category(tc->data())) add(d, "T-object", n + ": " + e.message);
    const auto eta = t.unit(c);
    const auto m = t.mult(c);
    if (!validate_functor(eta).empty()) add(d, "unit", n + ": η is not a functor");
    if (!validate_functor(m).empty()) add(d, "mult", n + ": m is not a functor");
    if (!d.empty()) continue;
    const auto id_tc = identity_functor(tc);
    check_equal(d, t.apply(identity_functor(c)), id_tc, "functoriality", n + ": T(id) ≠ id");
    check_equal(d, compose(m, t.apply(eta)), id_tc, "unit-law", n + ": m ∘ Tη ≠ id");
    check_equal(d, compose(m, t.unit(tc)), id_tc, "unit-law", n + ": m ∘ ηT ≠ id");
    check_equal(d, compose(m, t.apply(m)), compose(m, t.mult(tc)), "assoc-law",
                n + ": m ∘ Tm ≠ m ∘ mT");
  }
  if (!d.empty()) return d;

  for (const auto& f : functors) {
    const auto what = f.dom->name() + "→" + f.cod->name();
    const auto tf = t.apply(f);
    if (!validate_functor(tf).empty()) {
      add(d, "functoriality", what + ": Tf is not a functor");
      continue;
    }
    check_equal(d, compose(tf, t.unit(f.dom)), compose(t.unit(f.cod), f), "unit-naturality",
                what);
    check_equal(d, compose(tf, t.mult(f.dom)), compose(t.mult(f.cod), t.apply(tf)),
                "mult-naturality", what);
    for (const auto& g : functors)
      if (same_category(f.cod, g.dom))
        check_equal(d, t.apply(compose(g, f)), compose(t.apply(g), tf), "functoriality",
                    what + " then " + g.cod->name() + ": T(gf) ≠ Tg Tf");
  }

  for (const auto& a : naturals) {
    const auto what = a.dom.dom->name() + "→" + a.dom.cod->name();
    const auto ta = t.apply(a);
    if (!validate_natural(ta).empty()) {
      add(d, "functoriality", what + ": Tα is not natural");
      continue;
    }
    check_equal(d, t.apply(identity_natural(a.dom)), identity_natural(t.apply(a.dom)),
                "functoriality", what + ": T(id) ≠ id");
    const auto& c = a.dom.dom;
    const auto& e = a.dom.cod;
    check_equal(d, whisker(ta, t.unit(c)), whisker(t.unit(e), a), "unit-naturality", what);
    check_equal(d, whisker(ta, t.mult(c)), whisker(t.mult(e), t.apply(ta)), "mult-naturality",
                what);
    for (const auto& b : naturals)
      if (b.dom == a.cod)
        check_equal(d, t.apply(vcompose(b, a)), vcompose(t.apply(b), ta), "functoriality",
                    what + ": T(β∘α) ≠ Tβ ∘ Tα");
    for (const auto& h : functors) {
      if (same_category(h.dom, e))
        check_equal(d, t.apply(whisker(h, a)), whisker(t.apply(h), ta), "functoriality",
                    what + ": T(h·α) ≠ Th·Tα");
      if (same_category(h.cod, c))
        check_equal(d, t.apply(whisker(a, h)), whisker(ta, t.apply(h)), "functoriality",
                    what + ": T(α·k) ≠ Tα·Tk");
    }
  }
  return d;
}

}  // namespace pielift
