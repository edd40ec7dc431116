#include "pielift/two_cat.hpp"

namespace pielift {

Diagnostics validate_two_functor(const TwoFunctor& F) {
  Diagnostics d;
  const auto& a = *F.dom;
  if (static_cast<int>(F.on_objects.size()) != a.object_count() ||
      static_cast<int>(F.on_one.size()) != a.one_cell_count() ||
      static_cast<int>(F.on_two.size()) != a.two_cell_count()) {
    add(d, "two-functor-shape", "maps do not cover " + a.name());
    return d;
  }
  for (int f = 0; f < a.one_cell_count(); ++f) {
    const auto& Ff = F.one(f);
    if (!same_category(Ff.dom, F(a.src(f))) || !same_category(Ff.cod, F(a.tgt(f)))) {
      add(d, "two-functor-type", "F(" + a.one_cell_name(f) + ") has the wrong type");
      continue;
    }
    for (auto& x : validate_functor(Ff))
      add(d, x.kind, "F(" + a.one_cell_name(f) + "): " + x.message);
  }
  for (int c = 0; c < a.two_cell_count(); ++c) {
    const auto& Fc = F.two(c);
    if (!(Fc.dom == F.one(a.cell_src(c))) || !(Fc.cod == F.one(a.cell_tgt(c)))) {
      add(d, "two-functor-type", "F(" + a.two_cell_name(c) + ") has the wrong type");
      continue;
    }
    for (auto& x : validate_natural(Fc))
      add(d, x.kind, "F(" + a.two_cell_name(c) + "): " + x.message);
  }
  if (!d.empty()) return d;

  for (int x = 0; x < a.object_count(); ++x)
    if (!(F.one(a.identity(x)) == identity_functor(F(x))))
      add(d, "two-functor-identity", a.one_cell_name(a.identity(x)));
  for (int g = 0; g < a.one_cell_count(); ++g)
    for (int f = 0; f < a.one_cell_count(); ++f)
      if (a.composable(g, f) &&
          !(F.one(a.compose(g, f)) == compose(F.one(g), F.one(f))))
        add(d, "two-functor-composition",
            a.one_cell_name(g) + " . " + a.one_cell_name(f));
  for (int f = 0; f < a.one_cell_count(); ++f)
    if (!is_identity(F.two(a.cell_identity(f))))
      add(d, "two-functor-identity", a.two_cell_name(a.cell_identity(f)));
  for (int b = 0; b < a.two_cell_count(); ++b)
    for (int c = 0; c < a.two_cell_count(); ++c)
      if (a.cell_src(b) == a.cell_tgt(c) &&
          !(F.two(a.vcompose(b, c)) == vcompose(F.two(b), F.two(c))))
        add(d, "two-functor-vertical",
            a.two_cell_name(b) + " . " + a.two_cell_name(c));
  for (int h = 0; h < a.one_cell_count(); ++h)
    for (int c = 0; c < a.two_cell_count(); ++c) {
      const int f = a.cell_src(c);
      if (a.src(h) == a.tgt(f) &&
          !(F.two(a.whisker(h, c)) == whisker(F.one(h), F.two(c))))
        add(d, "two-functor-whisker",
            a.one_cell_name(h) + " * " + a.two_cell_name(c));
      if (a.tgt(h) == a.src(f) &&
          !(F.two(a.whisker_right(c, h)) == whisker(F.two(c), F.one(h))))
        add(d, "two-functor-whisker",
            a.two_cell_name(c) + " * " + a.one_cell_name(h));
    }
  return d;
}

Diagnostics validate_two_map(const TwoMap& p) {
  Diagnostics d;
  const auto& a = *p.dom;
  const auto& b = *p.cod;
  if (static_cast<int>(p.on_objects.size()) != a.object_count() ||
      static_cast<int>(p.on_one.size()) != a.one_cell_count() ||
      static_cast<int>(p.on_two.size()) != a.two_cell_count()) {
    add(d, "two-map-shape", "maps do not cover " + a.name());
    return d;
  }
  for (int f = 0; f < a.one_cell_count(); ++f) {
    const int g = p.on_one[f];
    if (g < 0 || g >= b.one_cell_count() || b.src(g) != p.on_objects[a.src(f)] ||
        b.tgt(g) != p.on_objects[a.tgt(f)])
      add(d, "two-map-type", a.one_cell_name(f));
  }
  for (int c = 0; c < a.two_cell_count(); ++c) {
    const int e = p.on_two[c];
    if (e < 0 || e >= b.two_cell_count() || b.cell_src(e) != p.on_one[a.cell_src(c)] ||
        b.cell_tgt(e) != p.on_one[a.cell_tgt(c)])
      add(d, "two-map-type", a.two_cell_name(c));
  }
  if (!d.empty()) return d;
  for (int x = 0; x < a.object_count(); ++x)
    if (p.on_one[a.identity(x)] != b.identity(p.on_objects[x]))
      add(d, "two-map-identity", a.one_cell_name(a.identity(x)));
  for (int g = 0; g < a.one_cell_count(); ++g)
    for (int f = 0; f < a.one_cell_count(); ++f)
      if (a.composable(g, f) &&
          p.on_one[a.compose(g, f)] != b.compose(p.on_one[g], p.on_one[f]))
        add(d, "two-map-composition", a.one_cell_name(g) + " . " + a.one_cell_name(f));
  for (int f = 0; f < a.one_cell_count(); ++f)
    if (p.on_two[a.cell_identity(f)] != b.cell_identity(p.on_one[f]))
      add(d, "two-map-identity", a.two_cell_name(a.cell_identity(f)));
  for (int e = 0; e < a.two_cell_count(); ++e)
    for (int c = 0; c < a.two_cell_count(); ++c)
      if (a.cell_src(e) == a.cell_tgt(c) &&
          p.on_two[a.vcompose(e, c)] != b.vcompose(p.on_two[e], p.on_two[c]))
        add(d, "two-map-vertical", a.two_cell_name(e) + " . " + a.two_cell_name(c));
  for (int h = 0; h < a.one_cell_count(); ++h)
    for (int c = 0; c < a.two_cell_count(); ++c) {
      const int f = a.cell_src(c);
      if (a.src(h) == a.tgt(f) &&
          p.on_two[a.whisker(h, c)] != b.whisker(p.on_one[h], p.on_two[c]))
        add(d, "two-map-whisker", a.one_cell_name(h) + " * " + a.two_cell_name(c));
      if (a.tgt(h) == a.src(f) &&
          p.on_two[a.whisker_right(c, h)] != b.whisker_right(p.on_two[c], p.on_one[h]))
        add(d, "two-map-whisker", a.two_cell_name(c) + " * " + a.one_cell_name(h));
    }
  return d;
}

TwoFunctor precompose(const TwoFunctor& F, const TwoMap& p) {
  TwoFunctor out{p.dom, {}, {}, {}};
  for (int x : p.on_objects) out.on_objects.push_back(F(x));
  for (int f : p.on_one) out.on_one.push_back(F.one(f));
  for (int c : p.on_two) out.on_two.push_back(F.two(c));
  return out;
}

TwoFunctor complete_two_functor(const TwoCat& dom, TwoFunctorSpec spec) {
  const auto& a = *dom;
  spec.objects.resize(a.object_count());
  spec.ones.resize(a.one_cell_count());
  spec.twos.resize(a.two_cell_count());
  Diagnostics d;
  for (int x = 0; x < a.object_count(); ++x) {
    if (!spec.objects[x]) {
      add(d, "unassigned", "object " + a.object_name(x));
      continue;
    }
    if (!spec.ones[a.identity(x)])
      spec.ones[a.identity(x)] = identity_functor(*spec.objects[x]);
  }
  if (!d.empty()) throw ValidationError(std::move(d));

  for (bool changed = true; changed;) {
    changed = false;
    for (int g = 0; g < a.one_cell_count(); ++g)
      for (int f = 0; f < a.one_cell_count(); ++f) {
        if (!a.composable(g, f) || !spec.ones[g] || !spec.ones[f]) continue;
        auto& slot = spec.ones[a.compose(g, f)];
        if (slot) continue;
        slot = compose(*spec.ones[g], *spec.ones[f]);
        changed = true;
      }
  }
  for (int f = 0; f < a.one_cell_count(); ++f) {
    if (!spec.ones[f]) {
      add(d, "unassigned", "1-cell " + a.one_cell_name(f));
      continue;
    }
    if (!spec.twos[a.cell_identity(f)])
      spec.twos[a.cell_identity(f)] = identity_natural(*spec.ones[f]);
  }
  if (!d.empty()) throw ValidationError(std::move(d));

  for (bool changed = true; changed;) {
    changed = false;
    auto fill = [&](int slot, auto make) {
      if (slot < 0 || spec.twos[slot]) return;
      spec.twos[slot] = make();
      changed = true;
    };
    for (int c = 0; c < a.two_cell_count(); ++c) {
      if (!spec.twos[c]) continue;
      const int f = a.cell_src(c);
      for (int h = 0; h < a.one_cell_count(); ++h) {
        if (a.src(h) == a.tgt(f))
          fill(a.whisker(h, c), [&] { return whisker(*spec.ones[h], *spec.twos[c]); });
        if (a.tgt(h) == a.src(f))
          fill(a.whisker_right(c, h),
               [&] { return whisker(*spec.twos[c], *spec.ones[h]); });
      }
      for (int b = 0; b < a.two_cell_count(); ++b)
        if (spec.twos[b] && a.cell_src(b) == a.cell_tgt(c))
          fill(a.vcompose(b, c), [&] { return vcompose(*spec.twos[b], *spec.twos[c]); });
    }
  }
  for (int c = 0; c < a.two_cell_count(); ++c)
    if (!spec.twos[c]) add(d, "unassigned", "2-cell " + a.two_cell_name(c));
  if (!d.empty()) throw ValidationError(std::move(d));

  TwoFunctor out{dom, {}, {}, {}};
  for (auto& x : spec.objects) out.on_objects.push_back(std::move(*x));
  for (auto& f : spec.ones) out.on_one.push_back(std::move(*f));
  for (auto& c : spec.twos) out.on_two.push_back(std::move(*c));
  d = validate_two_functor(out);
  if (!d.empty()) throw ValidationError(std::move(d));
  return out;
}

}  // namespace pielift
