#include <map>
#include <stdexcept>

#include "pielift/fincat.hpp"

namespace pielift {

namespace {

// Mixed-radix index of a tuple; the first coordinate is most significant.
struct Radix {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> strides;
  std::size_t total = 1;

  explicit Radix(std::vector<std::size_t> s) : sizes(std::move(s)) {
    strides.assign(sizes.size(), 1);
    for (std::size_t i = sizes.size(); i-- > 0;) {
      strides[i] = total;
      total *= sizes[i];
    }
  }
  int digit(std::size_t index, std::size_t i) const {
    return static_cast<int>((index / strides[i]) % sizes[i]);
  }
};

std::string join_names(std::span<const Cat> cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ",";
    s += cs[i]->name();
  }
  return s;
}

}  // namespace

void for_each_tuple(std::span<const std::size_t> sizes,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  for (auto s : sizes)
    if (s == 0) return;
  std::vector<std::size_t> pos(sizes.size(), 0);
  while (true) {
    fn(pos);
    std::size_t i = sizes.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (++pos[i] < sizes[i]) break;
      pos[i] = 0;
    }
  }
}

ProductResult product(std::span<const Cat> factors) {
  std::vector<std::size_t> osz, asz;
  for (const auto& c : factors) {
    osz.push_back(c->object_count());
    asz.push_back(c->arrow_count());
  }
  const Radix objs(osz), arrs(asz);
  const std::size_t k = factors.size();

  std::vector<std::string> onames, anames, oprov, aprov;
  std::vector<ArrowDecl> arrows;
  std::vector<int> identity(objs.total);
  for (std::size_t o = 0; o < objs.total; ++o) {
    onames.push_back("o" + std::to_string(o));
    std::string p = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) p += ',';
      p += factors[i]->object_name(objs.digit(o, i));
    }
    oprov.push_back(p + ")");
  }
  for (std::size_t a = 0; a < arrs.total; ++a) {
    std::size_t s = 0, t = 0;
    bool ident = true;
    std::string p = "(";
    for (std::size_t i = 0; i < k; ++i) {
      const int ai = arrs.digit(a, i);
      s += objs.strides[i] * factors[i]->src(ai);
      t += objs.strides[i] * factors[i]->tgt(ai);
      ident = ident && factors[i]->is_identity(ai);
      if (i) p += ',';
      p += factors[i]->arrow_name(ai);
    }
    arrows.push_back({"a" + std::to_string(a), static_cast<int>(s),
                      static_cast<int>(t)});
    aprov.push_back(p + ")");
    if (ident) identity[s] = static_cast<int>(a);
  }
  auto compose = [&](int g, int f) {
    std::size_t h = 0;
    for (std::size_t i = 0; i < k; ++i)
      h += arrs.strides[i] *
           factors[i]->compose(arrs.digit(g, i), arrs.digit(f, i));
    return static_cast<int>(h);
  };
  auto cat = FinCategory::assemble("prod(" + join_names(factors) + ")",
                                   onames, arrows, identity, compose)
                 ->with_provenance(oprov, aprov);

  ProductResult r{cat, {}};
  for (std::size_t i = 0; i < k; ++i) {
    Functor p{cat, factors[i], {}, {}};
    for (std::size_t o = 0; o < objs.total; ++o)
      p.on_objects.push_back(objs.digit(o, i));
    for (std::size_t a = 0; a < arrs.total; ++a)
      p.on_arrows.push_back(arrs.digit(a, i));
    r.projections.push_back(std::move(p));
  }
  return r;
}

Functor pair_functors(const ProductResult& p, const Cat& dom,
                      std::span<const Functor> legs) {
  if (legs.size() != p.projections.size())
    throw std::invalid_argument("pair_functors: wrong number of legs");
  Functor f{dom, p.cat, {}, {}};
  std::vector<std::size_t> ostride(legs.size(), 1), astride(legs.size(), 1);
  for (std::size_t i = legs.size(); i-- > 1;) {
    ostride[i - 1] = ostride[i] * p.projections[i].cod->object_count();
    astride[i - 1] = astride[i] * p.projections[i].cod->arrow_count();
  }
  for (int x = 0; x < dom->object_count(); ++x) {
    std::size_t o = 0;
    for (std::size_t i = 0; i < legs.size(); ++i) o += ostride[i] * legs[i](x);
    f.on_objects.push_back(static_cast<int>(o));
  }
  for (int a = 0; a < dom->arrow_count(); ++a) {
    std::size_t o = 0;
    for (std::size_t i = 0; i < legs.size(); ++i)
      o += astride[i] * legs[i].arrow(a);
    f.on_arrows.push_back(static_cast<int>(o));
  }
  return f;
}

InserterResult inserter(const Functor& f, const Functor& g) {
  return inserter(std::span<const Functor>(&f, 1),
                  std::span<const Functor>(&g, 1));
}

InserterResult inserter(std::span<const Functor> fs,
                        std::span<const Functor> gs) {
  if (fs.size() != gs.size() || fs.empty())
    throw std::invalid_argument("inserter: need matching non-empty families");
  const Cat c = fs[0].dom;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!same_category(fs[i].dom, c) || !same_category(gs[i].dom, c) ||
        !same_category(fs[i].cod, gs[i].cod))
      throw std::invalid_argument("inserter: functors are not parallel");
  const std::size_t k = fs.size();

  // Objects (x, φ) with φ_i : F_i x → G_i x, enumerated per x in
  // lexicographic order of φ.
  std::vector<int> base;
  std::vector<std::vector<int>> phis;
  std::vector<std::vector<int>> over(c->object_count());
  for (int x = 0; x < c->object_count(); ++x) {
    std::vector<std::span<const int>> homs;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < k; ++i) {
      homs.push_back(fs[i].cod->hom(fs[i](x), gs[i](x)));
      sizes.push_back(homs.back().size());
    }
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& pos) {
      std::vector<int> phi(k);
      for (std::size_t i = 0; i < k; ++i) phi[i] = homs[i][pos[i]];
      over[x].push_back(static_cast<int>(base.size()));
      base.push_back(x);
      phis.push_back(std::move(phi));
    });
  }

  CategoryBuilder b("ins(" + fs[0].cod->name() + ")");
  for (std::size_t o = 0; o < base.size(); ++o) {
    std::string s = "(" + c->object_name(base[o]) + ";";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ',';
      s += fs[i].cod->arrow_name(phis[o][i]);
    }
    b.add_object(s + ")");
  }

  // Arrows w : (x, φ) → (y, φ') with G_i w ∘ φ_i = φ'_i ∘ F_i w.
  std::vector<int> arrow_base, arrow_src, arrow_tgt;
  std::map<std::tuple<int, int, int>, int> arrow_of;
  const int n = static_cast<int>(base.size());
  for (int x = 0; x < c->object_count(); ++x) {
    for (int y = 0; y < c->object_count(); ++y) {
      for (int w : c->hom(x, y)) {
        for (int p : over[x]) {
          for (int q : over[y]) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
              const auto& d = *fs[i].cod;
              ok = d.compose(gs[i].arrow(w), phis[p][i]) ==
                   d.compose(phis[q][i], fs[i].arrow(w));
            }
            if (!ok) continue;
            const int a = b.add_arrow(p, q, c->arrow_name(w));
            arrow_of[{p, q, w}] = a;
            arrow_base.push_back(w);
            arrow_src.push_back(p);
            arrow_tgt.push_back(q);
            if (p == q && w == c->identity(x)) b.set_identity(p, a);
          }
        }
      }
    }
  }
  auto cat = b.finish([&](int g, int f) {
    return arrow_of.at(
        {arrow_src[f], arrow_tgt[g], c->compose(arrow_base[g], arrow_base[f])});
  });

  InserterResult r{cat, Functor{cat, c, base, arrow_base}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    NatTrans cell{compose(fs[i], r.projection), compose(gs[i], r.projection),
                  {}};
    for (int o = 0; o < n; ++o) cell.components.push_back(phis[o][i]);
    r.cells.push_back(std::move(cell));
  }
  return r;
}

EquifierResult full_subcategory(const Cat& c, std::span<const int> objects,
                                std::string name) {
  CategoryBuilder b(std::move(name));
  std::vector<int> local(c->object_count(), -1);
  for (int x : objects) local[x] = b.add_object(c->object_name(x));
  std::vector<int> arrow_map, local_arrow(c->arrow_count(), -1);
  for (int a = 0; a < c->arrow_count(); ++a) {
    if (local[c->src(a)] < 0 || local[c->tgt(a)] < 0) continue;
    local_arrow[a] = b.add_arrow(local[c->src(a)], local[c->tgt(a)],
                                 c->arrow_name(a));
    arrow_map.push_back(a);
  }
  for (int x : objects) b.set_identity(local[x], local_arrow[c->identity(x)]);
  auto cat = b.finish([&](int g, int f) {
    return local_arrow[c->compose(arrow_map[g], arrow_map[f])];
  });
  return {cat, Functor{cat, c, std::vector<int>(objects.begin(), objects.end()),
                       arrow_map}};
}

EquifierResult equifier(const NatTrans& a, const NatTrans& b) {
  std::pair<NatTrans, NatTrans> p{a, b};
  return equifier(std::span<const std::pair<NatTrans, NatTrans>>(&p, 1));
}

EquifierResult equifier(
    std::span<const std::pair<NatTrans, NatTrans>> pairs) {
  if (pairs.empty())
    throw std::invalid_argument("equifier: empty family");
  const Cat c = pairs[0].first.dom.dom;
  for (const auto& [a, b] : pairs)
    if (!same_category(a.dom.dom, c) || !(a.dom == b.dom) ||
        !(a.cod == b.cod))
      throw std::invalid_argument("equifier: 2-cells are not parallel");
  std::vector<int> keep;
  for (int x = 0; x < c->object_count(); ++x) {
    bool ok = true;
    for (const auto& [a, b] : pairs) ok = ok && a[x] == b[x];
    if (ok) keep.push_back(x);
  }
  return full_subcategory(c, keep, "eq(" + c->name() + ")");
}

}  // namespace pielift
