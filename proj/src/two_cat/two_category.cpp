#include <map>

#include "pielift/two_cat.hpp"

namespace pielift {

namespace {

CategoryData skeleton_data(const TwoCategoryData& raw) {
  return {raw.name, raw.objects, raw.one_cells, raw.one_identity,
          raw.one_composites};
}

CategoryData vertical_data(const TwoCategoryData& raw) {
  CategoryData d;
  d.name = raw.name + "/cells";
  for (const auto& f : raw.one_cells) d.objects.push_back(f.name);
  for (const auto& c : raw.two_cells) d.arrows.push_back({c.name, c.src, c.tgt});
  d.identity = raw.two_identity;
  d.composites = raw.vcomposites;
  return d;
}

// Fills one whisker table from its declarations. Slots hold -1 when empty and
// -2 when a declaration was present but wrong (so it is not also "missing").
void fill_whiskers(const FinCategory& s, const FinCategory& v,
                   const std::vector<WhiskerDecl>& decls, bool left,
                   std::vector<int>& table, Diagnostics& d) {
  const int n1 = s.arrow_count();
  const int n2 = v.arrow_count();
  const char* side = left ? "left" : "right";
  table.assign(static_cast<std::size_t>(n1) * n2, -1);
  auto ok_pair = [&](int h, int a) {
    const int f = v.src(a);
    return left ? s.tgt(f) == s.src(h) : s.tgt(h) == s.src(f);
  };
  auto label = [&](int h, int a) {
    return left ? s.arrow_name(h) + " * " + v.arrow_name(a)
                : v.arrow_name(a) + " * " + s.arrow_name(h);
  };
  for (const auto& w : decls) {
    if (w.one_cell < 0 || w.one_cell >= n1 || w.two_cell < 0 ||
        w.two_cell >= n2 || w.result < 0 || w.result >= n2) {
      add(d, "bad-whisker", std::string(side) + " whisker with an unknown cell");
      continue;
    }
    const int h = w.one_cell, a = w.two_cell;
    if (!ok_pair(h, a)) {
      add(d, "non-whiskerable", "(" + label(h, a) + ")");
      continue;
    }
    auto& slot = table[static_cast<std::size_t>(h) * n2 + a];
    if (slot != -1) {
      add(d, "duplicate-whisker", label(h, a));
      continue;
    }
    const int f = v.src(a), g = v.tgt(a);
    const int es = left ? s.compose(h, f) : s.compose(f, h);
    const int et = left ? s.compose(h, g) : s.compose(g, h);
    if (v.src(w.result) != es || v.tgt(w.result) != et) {
      add(d, "whisker-endpoints",
          label(h, a) + " = " + v.arrow_name(w.result) + " has wrong endpoints");
      slot = -2;
      continue;
    }
    slot = w.result;
  }
  for (int h = 0; h < n1; ++h)
    for (int a = 0; a < n2; ++a)
      if (ok_pair(h, a) && table[static_cast<std::size_t>(h) * n2 + a] == -1)
        add(d, "missing-whisker", label(h, a));
}

void check_laws(const FinCategory& s, const FinCategory& v,
                const std::vector<int>& left, const std::vector<int>& right,
                Diagnostics& d) {
  const int n1 = s.arrow_count();
  const int n2 = v.arrow_count();
  auto L = [&](int h, int a) { return left[static_cast<std::size_t>(h) * n2 + a]; };
  auto R = [&](int a, int k) { return right[static_cast<std::size_t>(k) * n2 + a]; };
  auto obj_of = [&](int a) { return std::pair{s.src(v.src(a)), s.tgt(v.src(a))}; };
  const auto& an = [&](int h) -> const std::string& { return s.arrow_name(h); };
  const auto& cn = [&](int a) -> const std::string& { return v.arrow_name(a); };

  for (int a = 0; a < n2; ++a) {
    auto [x, y] = obj_of(a);
    if (L(s.identity(y), a) != a) add(d, "whisker-unit", an(s.identity(y)) + " * " + cn(a));
    if (R(a, s.identity(x)) != a) add(d, "whisker-unit", cn(a) + " * " + an(s.identity(x)));
  }
  for (int f = 0; f < n1; ++f) {
    const int i = v.identity(f);
    for (int h = 0; h < n1; ++h) {
      if (s.src(h) == s.tgt(f) && L(h, i) != v.identity(s.compose(h, f)))
        add(d, "whisker-identity", an(h) + " * " + cn(i));
      if (s.tgt(h) == s.src(f) && R(i, h) != v.identity(s.compose(f, h)))
        add(d, "whisker-identity", cn(i) + " * " + an(h));
    }
  }
  for (int a = 0; a < n2; ++a) {
    auto [x, y] = obj_of(a);
    for (int h = 0; h < n1; ++h) {
      if (s.src(h) == y) {
        for (int h2 = 0; h2 < n1; ++h2)
          if (s.src(h2) == s.tgt(h) && L(s.compose(h2, h), a) != L(h2, L(h, a)))
            add(d, "whisker-associativity",
                an(h2) + " * " + an(h) + " * " + cn(a));
        for (int k = 0; k < n1; ++k)
          if (s.tgt(k) == x && R(L(h, a), k) != L(h, R(a, k)))
            add(d, "whisker-associativity",
                an(h) + " * " + cn(a) + " * " + an(k));
      }
      if (s.tgt(h) == x) {
        for (int k2 = 0; k2 < n1; ++k2)
          if (s.tgt(k2) == s.src(h) && R(a, s.compose(h, k2)) != R(R(a, h), k2))
            add(d, "whisker-associativity",
                cn(a) + " * " + an(h) + " * " + an(k2));
      }
    }
  }
  for (int b = 0; b < n2; ++b) {
    for (int a = 0; a < n2; ++a) {
      if (!v.composable(b, a)) continue;
      const int ba = v.compose(b, a);
      auto [x, y] = obj_of(a);
      for (int h = 0; h < n1; ++h) {
        if (s.src(h) == y && L(h, ba) != v.compose(L(h, b), L(h, a)))
          add(d, "whisker-vertical", an(h) + " * (" + cn(b) + " . " + cn(a) + ")");
        if (s.tgt(h) == x && R(ba, h) != v.compose(R(b, h), R(a, h)))
          add(d, "whisker-vertical", "(" + cn(b) + " . " + cn(a) + ") * " + an(h));
      }
    }
  }
  // (g'·α)∘(β·f) = (β·f')∘(g·α) for α: f ⇒ f' and β: g ⇒ g'.
  for (int beta = 0; beta < n2; ++beta) {
    for (int alpha = 0; alpha < n2; ++alpha) {
      const int f = v.src(alpha), f2 = v.tgt(alpha);
      const int g = v.src(beta), g2 = v.tgt(beta);
      if (s.tgt(f) != s.src(g)) continue;
      if (v.compose(L(g2, alpha), R(beta, f)) != v.compose(R(beta, f2), L(g, alpha)))
        add(d, "interchange", "(" + cn(beta) + ", " + cn(alpha) + ")");
    }
  }
}

}  // namespace

Diagnostics validate_two_category(const TwoCategoryData& raw) {
  Diagnostics d = validate_category(skeleton_data(raw));
  if (!d.empty()) return d;
  for (auto& x : validate_category(vertical_data(raw)))
    add(d, "vertical-" + x.kind, x.message);
  const int n1 = static_cast<int>(raw.one_cells.size());
  for (const auto& c : raw.two_cells) {
    if (c.src < 0 || c.src >= n1 || c.tgt < 0 || c.tgt >= n1) continue;
    const auto& f = raw.one_cells[c.src];
    const auto& g = raw.one_cells[c.tgt];
    if (f.src != g.src || f.tgt != g.tgt)
      add(d, "two-cell-parallel",
          c.name + ": " + f.name + " and " + g.name + " are not parallel");
  }
  if (!d.empty()) return d;

  auto s = FinCategory::build(skeleton_data(raw));
  auto v = FinCategory::build(vertical_data(raw));
  std::vector<int> left, right;
  fill_whiskers(*s, *v, raw.left_whiskers, true, left, d);
  fill_whiskers(*s, *v, raw.right_whiskers, false, right, d);
  if (!d.empty()) return d;
  check_laws(*s, *v, left, right, d);
  return d;
}

TwoCategoryData two_category_data(std::string name,
                                  std::vector<std::string> objects,
                                  const std::vector<ArrowSpec>& one_cells,
                                  const std::vector<CompositeSpec>& one_composites,
                                  const std::vector<TwoCellSpec>& two_cells,
                                  const std::vector<CompositeSpec>& vcomposites,
                                  const std::vector<WhiskerSpec>& left_whiskers,
                                  const std::vector<WhiskerSpec>& right_whiskers) {
  auto sk = category_data(std::move(name), std::move(objects), one_cells,
                          one_composites);
  TwoCategoryData t;
  t.name = sk.name;
  t.objects = sk.objects;
  t.one_cells = sk.arrows;
  t.one_identity = sk.identity;
  t.one_composites = sk.composites;

  std::vector<std::string> cell_objects;
  for (const auto& a : sk.arrows) cell_objects.push_back(a.name);
  std::vector<ArrowSpec> cs;
  for (const auto& c : two_cells) cs.push_back({c.name, c.src, c.tgt});
  auto v = category_data(t.name, std::move(cell_objects), cs, vcomposites);
  for (const auto& a : v.arrows) t.two_cells.push_back({a.name, a.src, a.tgt});
  t.two_identity = v.identity;
  t.vcomposites = v.composites;

  std::map<std::pair<int, int>, int> comp;
  for (const auto& c : sk.composites)
    if (c.second >= 0 && c.first >= 0 && c.result >= 0)
      comp.emplace(std::pair{c.second, c.first}, c.result);
  std::map<std::string, int> one_index, cell_index;
  for (std::size_t i = 0; i < t.one_cells.size(); ++i)
    one_index.emplace(t.one_cells[i].name, static_cast<int>(i));
  for (std::size_t i = 0; i < t.two_cells.size(); ++i)
    cell_index.emplace(t.two_cells[i].name, static_cast<int>(i));
  auto find = [](const std::map<std::string, int>& m, const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? -1 : it->second;
  };

  const int n1 = static_cast<int>(t.one_cells.size());
  for (int a = 0; a < static_cast<int>(t.two_cells.size()); ++a) {
    const int f = t.two_cells[a].src;
    if (f < 0 || t.one_cells[f].src < 0 || t.one_cells[f].tgt < 0) continue;
    const int x = t.one_cells[f].src, y = t.one_cells[f].tgt;
    t.left_whiskers.push_back({t.one_identity[y], a, a});
    t.right_whiskers.push_back({t.one_identity[x], a, a});
    if (t.two_identity[f] != a) continue;
    for (int h = 0; h < n1; ++h) {
      const int hs = t.one_cells[h].src;
      if (hs < 0 || t.one_identity[hs] == h) continue;
      if (t.one_cells[h].src == y) {
        auto it = comp.find({h, f});
        if (it != comp.end())
          t.left_whiskers.push_back({h, a, t.two_identity[it->second]});
      }
      if (t.one_cells[h].tgt == x) {
        auto it = comp.find({f, h});
        if (it != comp.end())
          t.right_whiskers.push_back({h, a, t.two_identity[it->second]});
      }
    }
  }
  for (const auto& w : left_whiskers)
    t.left_whiskers.push_back({find(one_index, w.one_cell),
                               find(cell_index, w.two_cell),
                               find(cell_index, w.result)});
  for (const auto& w : right_whiskers)
    t.right_whiskers.push_back({find(one_index, w.one_cell),
                                find(cell_index, w.two_cell),
                                find(cell_index, w.result)});
  return t;
}

TwoCat TwoCategory::build(const TwoCategoryData& raw) {
  auto d = validate_two_category(raw);
  if (!d.empty()) throw ValidationError(std::move(d));
  std::shared_ptr<TwoCategory> t(new TwoCategory());
  t->skeleton_ = FinCategory::build(skeleton_data(raw));
  t->vertical_ = FinCategory::build(vertical_data(raw));
  Diagnostics ignored;
  fill_whiskers(*t->skeleton_, *t->vertical_, raw.left_whiskers, true, t->left_,
                ignored);
  fill_whiskers(*t->skeleton_, *t->vertical_, raw.right_whiskers, false,
                t->right_, ignored);
  return t;
}

TwoCat TwoCategory::assemble(Cat skeleton, std::vector<TwoCellDecl> cells,
                             std::vector<int> cell_identity,
                             const std::function<int(int, int)>& vcompose,
                             const std::function<int(int, int)>& left_whisker,
                             const std::function<int(int, int)>& right_whisker) {
  std::shared_ptr<TwoCategory> t(new TwoCategory());
  std::vector<ArrowDecl> arrows;
  for (auto& c : cells) arrows.push_back({std::move(c.name), c.src, c.tgt});
  t->vertical_ = FinCategory::assemble(skeleton->name() + "/cells",
                                       [&] {
                                         std::vector<std::string> names;
                                         for (const auto& a : skeleton->arrows())
                                           names.push_back(a.name);
                                         return names;
                                       }(),
                                       std::move(arrows), std::move(cell_identity),
                                       vcompose);
  t->skeleton_ = std::move(skeleton);
  const auto& s = *t->skeleton_;
  const auto& v = *t->vertical_;
  const int n1 = s.arrow_count(), n2 = v.arrow_count();
  t->left_.assign(static_cast<std::size_t>(n1) * n2, -1);
  t->right_.assign(static_cast<std::size_t>(n1) * n2, -1);
  for (int h = 0; h < n1; ++h)
    for (int a = 0; a < n2; ++a) {
      const int f = v.src(a);
      if (s.src(h) == s.tgt(f)) t->left_[t->index(h, a)] = left_whisker(h, a);
      if (s.tgt(h) == s.src(f)) t->right_[t->index(h, a)] = right_whisker(a, h);
    }
  return t;
}

TwoCat TwoCategory::locally_discrete(const Cat& c) {
  std::vector<TwoCellDecl> cells;
  std::vector<int> ids;
  for (int a = 0; a < c->arrow_count(); ++a) {
    cells.push_back({"id_" + c->arrow_name(a), a, a});
    ids.push_back(a);
  }
  return assemble(
      c, std::move(cells), std::move(ids), [](int b, int) { return b; },
      [&](int h, int a) { return c->compose(h, a); },
      [&](int a, int k) { return c->compose(a, k); });
}

int TwoCategory::hcompose(int b, int a) const {
  return vcompose(whisker_right(b, cell_tgt(a)), whisker(cell_src(b), a));
}

TwoCategoryData TwoCategory::data() const {
  auto sk = skeleton_->data();
  auto v = vertical_->data();
  TwoCategoryData t;
  t.name = sk.name;
  t.objects = std::move(sk.objects);
  t.one_cells = std::move(sk.arrows);
  t.one_identity = std::move(sk.identity);
  t.one_composites = std::move(sk.composites);
  for (auto& a : v.arrows) t.two_cells.push_back({std::move(a.name), a.src, a.tgt});
  t.two_identity = std::move(v.identity);
  t.vcomposites = std::move(v.composites);
  for (int h = 0; h < one_cell_count(); ++h)
    for (int a = 0; a < two_cell_count(); ++a) {
      if (left_[index(h, a)] >= 0) t.left_whiskers.push_back({h, a, left_[index(h, a)]});
      if (right_[index(h, a)] >= 0)
        t.right_whiskers.push_back({h, a, right_[index(h, a)]});
    }
  return t;
}

}  // namespace pielift
