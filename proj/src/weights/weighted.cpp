#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "pielift/weights.hpp"

namespace pielift {

namespace {

// The 1-cells and non-identity 2-cells of A grouped by the later of their
// endpoint objects, so a search over objects can check them as it goes.
struct Schedule {
  std::vector<std::vector<int>> ones;
  std::vector<std::vector<int>> twos;

  explicit Schedule(const TwoCategory& a)
      : ones(a.object_count()), twos(a.object_count()) {
    for (int f = 0; f < a.one_cell_count(); ++f)
      if (!a.is_identity(f)) ones[std::max(a.src(f), a.tgt(f))].push_back(f);
    for (int c = 0; c < a.two_cell_count(); ++c) {
      if (a.is_identity_cell(c)) continue;
      const int f = a.cell_src(c);
      twos[std::max(a.src(f), a.tgt(f))].push_back(c);
    }
  }
};

std::vector<int> key_of(const std::vector<NatTrans>& comps) {
  std::vector<int> k;
  for (const auto& n : comps) k.insert(k.end(), n.components.begin(), n.components.end());
  return k;
}

}  // namespace

WeightedLimit weighted_limit(const Weight& w, const TwoFunctor& f) {
  const auto& a = *w.dom;
  const int n = a.object_count();
  const Schedule sched(a);
  WeightedLimit out;

  std::vector<Functor> tau(n);
  std::function<void(int)> naturals = [&](int x) {
    if (x == n) {
      out.naturals.push_back(tau);
      return;
    }
    for (auto& t : enumerate_functors(w(x), f(x))) {
      tau[x] = std::move(t);
      bool ok = true;
      for (int g : sched.ones[x])
        ok = ok && compose(f.one(g), tau[a.src(g)]) == compose(tau[a.tgt(g)], w.one(g));
      for (int c : sched.twos[x]) {
        const int g = a.cell_src(c);
        ok = ok && whisker(f.two(c), tau[a.src(g)]) == whisker(tau[a.tgt(g)], w.two(c));
      }
      if (ok) naturals(x + 1);
    }
  };
  naturals(0);

  CategoryBuilder b("{" + a.name() + "}");
  for (std::size_t i = 0; i < out.naturals.size(); ++i) b.add_object("tau" + std::to_string(i));
  std::map<std::vector<int>, int> index;
  std::vector<int> arrow_src, arrow_tgt;
  for (std::size_t i = 0; i < out.naturals.size(); ++i)
    for (std::size_t j = 0; j < out.naturals.size(); ++j) {
      const auto& s = out.naturals[i];
      const auto& t = out.naturals[j];
      std::vector<NatTrans> m(n);
      std::function<void(int)> mods = [&](int x) {
        if (x == n) {
          const int ai = static_cast<int>(i), aj = static_cast<int>(j);
          bool identity = ai == aj;
          for (const auto& c : m) identity = identity && is_identity(c);
          auto k = key_of(m);
          k.insert(k.begin(), {ai, aj});
          const int arrow = b.add_arrow(ai, aj, tuple_string(key_of(m)));
          if (identity) b.set_identity(ai, arrow);
          index.emplace(std::move(k), arrow);
          arrow_src.push_back(ai);
          arrow_tgt.push_back(aj);
          out.modifications.push_back(m);
          return;
        }
        for (auto& c : enumerate_naturals(s[x], t[x])) {
          m[x] = std::move(c);
          bool ok = true;
          for (int g : sched.ones[x])
            ok = ok && whisker(f.one(g), m[a.src(g)]) == whisker(m[a.tgt(g)], w.one(g));
          if (ok) mods(x + 1);
        }
      };
      mods(0);
    }
  out.cat = b.finish([&](int g, int h) {
    std::vector<NatTrans> comps;
    for (int x = 0; x < n; ++x)
      comps.push_back(vcompose(out.modifications[g][x], out.modifications[h][x]));
    auto k = key_of(comps);
    k.insert(k.begin(), {arrow_src[h], arrow_tgt[g]});
    return index.at(k);
  });
  return out;
}

TwoFunctor conical_diagram(const ElCategory& el, const TwoFunctor& f) {
  return precompose(f, el.projection);
}

Functor weighted_comparison(const WeightedLimit& wl, const ElCategory& el,
                            const LimitResult& lim) {
  const auto& g = lim.diagram;
  const auto& e = *el.el;
  const auto one = terminal_category();
  const auto orientation = el.dual ? Orientation::Oplax : Orientation::Lax;

  Functor u{wl.cat, lim.L, {}, {}};
  for (const auto& tau : wl.naturals) {
    LaxCone c{orientation, one, {}, {}};
    for (int el_x = 0; el_x < e.object_count(); ++el_x) {
      const auto [x, v] = el.elements[el_x];
      if (!same_category(tau[x].cod, g(el_x)))
        throw std::invalid_argument("weighted_comparison: diagrams differ at " +
                                    e.object_name(el_x));
      c.legs.push_back(point(one, g(el_x), tau[x](v)));
    }
    for (int p = 0; p < e.one_cell_count(); ++p) {
      const int arrow = el.arrows[p].second;
      const auto top = compose(g.one(p), c.legs[e.src(p)]);
      const auto& other = c.legs[e.tgt(p)];
      const int comp = tau[el.projection.on_objects[e.tgt(p)]].arrow(arrow);
      c.cells.push_back(el.dual ? NatTrans{other, top, {comp}}
                                : NatTrans{top, other, {comp}});
    }
    auto i = lim.cones.find_cone(c);
    if (!i) throw std::invalid_argument("weighted_comparison: 2-natural without a cone");
    u.on_objects.push_back(*i);
  }
  for (int k = 0; k < wl.cat->arrow_count(); ++k) {
    const auto& m = wl.modifications[k];
    std::vector<NatTrans> comps;
    const auto& s = wl.naturals[wl.cat->src(k)];
    const auto& t = wl.naturals[wl.cat->tgt(k)];
    for (int el_x = 0; el_x < e.object_count(); ++el_x) {
      const auto [x, v] = el.elements[el_x];
      comps.push_back(NatTrans{point(one, g(el_x), s[x](v)), point(one, g(el_x), t[x](v)),
                               {m[x][v]}});
    }
    auto a = lim.cones.find_modification(u(wl.cat->src(k)), u(wl.cat->tgt(k)), comps);
    if (!a) throw std::invalid_argument("weighted_comparison: modification without a match");
    u.on_arrows.push_back(*a);
  }
  return u;
}

bool compare_weighted_conical(const Weight& w, const TwoFunctor& f) {
  const auto wl = weighted_limit(w, f);
  for (bool dual : {false, true}) {
    const auto el = dual ? grothendieck_dual(w) : grothendieck(w);
    const auto lim = sigma_s_limit(conical_diagram(el, f), el.sigma,
                                   dual ? Orientation::Oplax : Orientation::Lax);
    try {
      const auto u = weighted_comparison(wl, el, lim);
      if (!validate_functor(u).empty() || !iso_check(u)) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return true;
}

}  // namespace pielift
