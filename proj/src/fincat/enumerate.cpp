#include <algorithm>
#include <map>
#include <stdexcept>

#include "pielift/fincat.hpp"

namespace pielift {

namespace {

// Depth-first search over functors C → D. Objects are assigned first, then
// the non-identity arrows of C in declaration order; each composition
// constraint is checked as soon as all arrows in it are assigned. With
// `fixed_objects` the object map is given; with `injective` distinct arrows
// must get distinct images (used by the isomorphism search).
class FunctorSearch {
 public:
  FunctorSearch(const Cat& c, const Cat& d) : c_(c), d_(d) {
    for (int a = 0; a < c->arrow_count(); ++a)
      if (!c->is_identity(a)) order_.push_back(a);
    pos_.assign(c->arrow_count(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i)
      pos_[order_[i]] = static_cast<int>(i);
    checks_.assign(order_.size(), {});
    for (int g : order_)
      for (int f : order_) {
        if (!c->composable(g, f)) continue;
        const int h = c->compose(g, f);
        const int p = std::max({pos_[g], pos_[f], pos_[h]});
        checks_[p].push_back({g, f, h});
      }
    arrows_by_max_end_.assign(c->object_count(), {});
    for (int a : order_)
      arrows_by_max_end_[std::max(c->src(a), c->tgt(a))].push_back(a);
  }

  bool injective = false;
  const std::vector<int>* fixed_objects = nullptr;

  // Returns false from `visit` to stop.
  void run(const std::function<bool(const Functor&)>& visit) {
    f_ = Functor{c_, d_, std::vector<int>(c_->object_count(), -1),
                 std::vector<int>(c_->arrow_count(), -1)};
    visit_ = &visit;
    stop_ = false;
    used_.assign(d_->arrow_count(), false);
    if (fixed_objects) {
      f_.on_objects = *fixed_objects;
      assign_identities();
      arrows(0);
    } else {
      objects(0);
    }
  }

 private:
  void assign_identities() {
    for (int x = 0; x < c_->object_count(); ++x)
      f_.on_arrows[c_->identity(x)] = d_->identity(f_(x));
  }

  void objects(int x) {
    if (stop_) return;
    if (x == c_->object_count()) {
      assign_identities();
      arrows(0);
      return;
    }
    for (int y = 0; y < d_->object_count(); ++y) {
      if (injective && std::find(f_.on_objects.begin(),
                                 f_.on_objects.begin() + x,
                                 y) != f_.on_objects.begin() + x)
        continue;
      f_.on_objects[x] = y;
      bool ok = true;
      for (int a : arrows_by_max_end_[x])
        if (d_->hom(f_(c_->src(a)), f_(c_->tgt(a))).empty()) ok = false;
      if (ok) objects(x + 1);
      if (stop_) return;
    }
    f_.on_objects[x] = -1;
  }

  void arrows(std::size_t i) {
    if (stop_) return;
    if (i == order_.size()) {
      if (!(*visit_)(f_)) stop_ = true;
      return;
    }
    const int a = order_[i];
    for (int b : d_->hom(f_(c_->src(a)), f_(c_->tgt(a)))) {
      if (injective && (used_[b] || d_->is_identity(b))) continue;
      f_.on_arrows[a] = b;
      bool ok = true;
      for (const auto& [g, f, h] : checks_[i])
        if (f_.arrow(h) != d_->compose(f_.arrow(g), f_.arrow(f))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (injective) used_[b] = true;
      arrows(i + 1);
      if (injective) used_[b] = false;
      if (stop_) return;
    }
    f_.on_arrows[a] = -1;
  }

  struct Check {
    int g, f, h;
  };

  Cat c_, d_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<std::vector<Check>> checks_;
  std::vector<std::vector<int>> arrows_by_max_end_;
  Functor f_;
  const std::function<bool(const Functor&)>* visit_ = nullptr;
  bool stop_ = false;
  std::vector<bool> used_;
};

}  // namespace

std::vector<Functor> enumerate_functors(const Cat& c, const Cat& d) {
  std::vector<Functor> out;
  FunctorSearch s(c, d);
  s.run([&](const Functor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<NatTrans> enumerate_naturals(const Functor& f, const Functor& g) {
  if (!same_category(f.dom, g.dom) || !same_category(f.cod, g.cod))
    throw std::invalid_argument("enumerate_naturals: functors not parallel");
  const auto& c = *f.dom;
  const auto& d = *f.cod;
  std::vector<std::vector<int>> by_max(c.object_count());
  for (int a = 0; a < c.arrow_count(); ++a)
    if (!c.is_identity(a)) by_max[std::max(c.src(a), c.tgt(a))].push_back(a);

  std::vector<NatTrans> out;
  NatTrans n{f, g, std::vector<int>(c.object_count(), -1)};
  std::function<void(int)> rec = [&](int x) {
    if (x == c.object_count()) {
      out.push_back(n);
      return;
    }
    for (int k : d.hom(f(x), g(x))) {
      n.components[x] = k;
      bool ok = true;
      for (int a : by_max[x]) {
        const int s = c.src(a), t = c.tgt(a);
        if (d.compose(g.arrow(a), n[s]) != d.compose(n[t], f.arrow(a))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(x + 1);
    }
    n.components[x] = -1;
  };
  rec(0);
  return out;
}

FunctorCategory functor_category(const Cat& c, const Cat& d) {
  FunctorCategory fc;
  fc.functors = enumerate_functors(c, d);
  CategoryBuilder b("[" + c->name() + "," + d->name() + "]");
  for (std::size_t i = 0; i < fc.functors.size(); ++i)
    b.add_object(tuple_string(fc.functors[i].on_objects) +
                 tuple_string(fc.functors[i].on_arrows));
  std::map<std::vector<int>, int> index;  // (src, tgt, components...)
  std::vector<int> src, tgt;
  for (std::size_t i = 0; i < fc.functors.size(); ++i) {
    for (std::size_t j = 0; j < fc.functors.size(); ++j) {
      for (auto& n : enumerate_naturals(fc.functors[i], fc.functors[j])) {
        const int a = b.add_arrow(static_cast<int>(i), static_cast<int>(j),
                                  tuple_string(n.components));
        std::vector<int> key{static_cast<int>(i), static_cast<int>(j)};
        key.insert(key.end(), n.components.begin(), n.components.end());
        index[key] = a;
        src.push_back(static_cast<int>(i));
        tgt.push_back(static_cast<int>(j));
        if (i == j && is_identity(n)) b.set_identity(static_cast<int>(i), a);
        fc.naturals.push_back(std::move(n));
      }
    }
  }
  fc.cat = b.finish([&](int g, int f) {
    std::vector<int> key{src[f], tgt[g]};
    const auto& nf = fc.naturals[f].components;
    const auto& ng = fc.naturals[g].components;
    for (std::size_t x = 0; x < nf.size(); ++x)
      key.push_back(d->compose(ng[x], nf[x]));
    return index.at(key);
  });
  return fc;
}

bool iso_check(const Functor& f) {
  const auto& c = *f.dom;
  const auto& d = *f.cod;
  if (c.object_count() != d.object_count() ||
      c.arrow_count() != d.arrow_count())
    return false;
  std::vector<bool> hit(d.object_count(), false);
  for (int y : f.on_objects) {
    if (y < 0 || y >= d.object_count() || hit[y]) return false;
    hit[y] = true;
  }
  for (int x = 0; x < c.object_count(); ++x) {
    for (int y = 0; y < c.object_count(); ++y) {
      auto src = c.hom(x, y);
      auto dst = d.hom(f(x), f(y));
      if (src.size() != dst.size()) return false;
      std::vector<int> img;
      for (int a : src) {
        const int b = f.arrow(a);
        if (std::find(dst.begin(), dst.end(), b) == dst.end()) return false;
        img.push_back(b);
      }
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end())
        return false;
    }
  }
  return true;
}

std::optional<Functor> find_isomorphism(const Cat& c, const Cat& d) {
  if (c->object_count() != d->object_count() ||
      c->arrow_count() != d->arrow_count())
    return std::nullopt;
  const int n = c->object_count();
  std::optional<Functor> found;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int x) {
    if (x == n) {
      FunctorSearch s(c, d);
      s.injective = true;
      s.fixed_objects = &perm;
      s.run([&](const Functor& f) {
        if (iso_check(f)) {
          found = f;
          return false;
        }
        return true;
      });
      return found.has_value();
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      perm[x] = y;
      bool ok = true;
      for (int z = 0; z <= x && ok; ++z)
        ok = c->hom(x, z).size() == d->hom(y, perm[z]).size() &&
             c->hom(z, x).size() == d->hom(perm[z], y).size();
      if (!ok) continue;
      used[y] = true;
      if (rec(x + 1)) return true;
      used[y] = false;
    }
    perm[x] = -1;
    return false;
  };
  rec(0);
  return found;
}

std::vector<Cat> small_categories(int max_objects, int max_arrows) {
  std::vector<Cat> out;
  for (int n = 0; n <= max_objects; ++n)
    for (int k = 0; n + k <= max_arrows; ++k) {
      if (n == 0 && k > 0) break;
      const int m = n + k;
      std::vector<Cat> found;
      // Non-identity arrows are unlabelled: take their (src, tgt) pairs in
      // non-decreasing order.
      std::vector<int> ends(k, 0);
      std::function<void(int, int)> place = [&](int i, int lo) {
        if (i < k) {
          for (int p = lo; p < n * n; ++p) {
            ends[i] = p;
            place(i + 1, p);
          }
          return;
        }
        auto src = [&](int a) { return a < n ? a : ends[a - n] / n; };
        auto tgt = [&](int a) { return a < n ? a : ends[a - n] % n; };
        std::vector<std::pair<int, int>> pairs;
        std::vector<std::vector<int>> choices;
        std::vector<std::size_t> sizes;
        for (int g = n; g < m; ++g)
          for (int f = n; f < m; ++f) {
            if (tgt(f) != src(g)) continue;
            std::vector<int> c;
            for (int h = 0; h < m; ++h)
              if (src(h) == src(f) && tgt(h) == tgt(g) && (h >= n || h == src(f)))
                c.push_back(h);
            if (c.empty()) return;
            pairs.emplace_back(g, f);
            sizes.push_back(c.size());
            choices.push_back(std::move(c));
          }
        std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
        auto comp = [&](int g, int f) {
          if (g < n) return f;
          if (f < n) return g;
          return table[static_cast<std::size_t>(g) * m + f];
        };
        for_each_tuple(sizes, [&](const std::vector<std::size_t>& t) {
          for (std::size_t i = 0; i < pairs.size(); ++i)
            table[static_cast<std::size_t>(pairs[i].first) * m + pairs[i].second] =
                choices[i][t[i]];
          for (int h = n; h < m; ++h)
            for (int g = n; g < m; ++g)
              for (int f = n; f < m; ++f)
                if (tgt(f) == src(g) && tgt(g) == src(h) &&
                    comp(comp(h, g), f) != comp(h, comp(g, f)))
                  return;
          CategoryData d;
          for (int x = 0; x < n; ++x) {
            d.objects.push_back(std::to_string(x));
            d.identity.push_back(x);
            d.arrows.push_back({"id_" + std::to_string(x), x, x});
          }
          for (int a = n; a < m; ++a)
            d.arrows.push_back({std::string(1, static_cast<char>('a' + a - n)), src(a), tgt(a)});
          for (int g = 0; g < m; ++g)
            for (int f = 0; f < m; ++f)
              if (tgt(f) == src(g)) d.composites.push_back({g, f, comp(g, f)});
          d.name = "E" + std::to_string(n) + "." + std::to_string(m) + "." +
                   std::to_string(found.size());
          auto c = FinCategory::build(d);
          for (const auto& e : found)
            if (find_isomorphism(c, e)) return;
          found.push_back(c);
        });
      };
      place(0, 0);
      out.insert(out.end(), found.begin(), found.end());
    }
  return out;
}

}  // namespace pielift
