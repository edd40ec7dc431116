#include <stdexcept>

#include "pielift/cones.hpp"

namespace pielift {

namespace {

std::vector<int> cone_key(const LaxCone& c) {
  std::vector<int> k;
  for (const auto& l : c.legs) {
    k.insert(k.end(), l.on_objects.begin(), l.on_objects.end());
    k.insert(k.end(), l.on_arrows.begin(), l.on_arrows.end());
  }
  for (const auto& n : c.cells)
    k.insert(k.end(), n.components.begin(), n.components.end());
  return k;
}

std::vector<int> modification_key(int dom, int cod,
                                  const std::vector<NatTrans>& comps) {
  std::vector<int> k{dom, cod};
  for (const auto& n : comps)
    k.insert(k.end(), n.components.begin(), n.components.end());
  return k;
}

// Depth-first search for cones with a given vertex. Each object's leg is
// chosen, followed by the cells of the 1-cells whose later endpoint it is;
// LC1 and LC2 instances are checked as soon as all their cells are known.
class ConeSearch {
 public:
  ConeSearch(const Cat& e, const TwoFunctor& F, const SigmaFamily* sigma,
             Orientation o, const std::vector<Functor>* fixed)
      : e_(e), F_(F), a_(*F.dom), sigma_(sigma), o_(o), fixed_(fixed) {
    const int n = a_.object_count();
    const int m = a_.one_cell_count();
    step_of_cell_.assign(m, -1);
    for (int x = 0; x < n; ++x) {
      steps_.push_back({true, x});
      for (int f = 0; f < m; ++f)
        if (std::max(a_.src(f), a_.tgt(f)) == x) {
          step_of_cell_[f] = static_cast<int>(steps_.size());
          steps_.push_back({false, f});
        }
    }
    lc1_.assign(steps_.size(), {});
    lc2_.assign(steps_.size(), {});
    for (int g = 0; g < m; ++g)
      for (int f = 0; f < m; ++f) {
        if (!a_.composable(g, f) || a_.is_identity(g) || a_.is_identity(f)) continue;
        const int s = std::max({step_of_cell_[g], step_of_cell_[f],
                                step_of_cell_[a_.compose(g, f)]});
        lc1_[s].push_back({g, f});
      }
    for (int c = 0; c < a_.two_cell_count(); ++c) {
      if (a_.is_identity_cell(c)) continue;
      const int s = std::max(step_of_cell_[a_.cell_src(c)], step_of_cell_[a_.cell_tgt(c)]);
      lc2_[s].push_back(c);
    }
    legs_.resize(n);
    cells_.resize(m);
    leg_candidates_.resize(n);
  }

  std::vector<LaxCone> run() {
    out_.clear();
    rec(0);
    return std::move(out_);
  }

 private:
  const std::vector<Functor>& leg_candidates(int x) {
    auto& c = leg_candidates_[x];
    if (!c) c = fixed_ ? std::vector<Functor>{(*fixed_)[x]} : enumerate_functors(e_, F_(x));
    return *c;
  }

  std::vector<NatTrans> cell_candidates(int f) {
    const auto& lx = legs_[a_.src(f)];
    const auto& ly = legs_[a_.tgt(f)];
    if (a_.is_identity(f)) return {identity_natural(lx)};
    auto top = compose(F_.one(f), lx);
    if (sigma_ && sigma_->contains(f)) {
      if (top == ly) return {identity_natural(ly)};
      return {};
    }
    return o_ == Orientation::Lax ? enumerate_naturals(top, ly)
                                  : enumerate_naturals(ly, top);
  }

  bool checks(std::size_t s) {
    const bool lax = o_ == Orientation::Lax;
    for (auto [g, f] : lc1_[s]) {
      const auto fg = whisker(F_.one(g), cells_[f]);
      const auto rhs = lax ? vcompose(cells_[g], fg) : vcompose(fg, cells_[g]);
      if (cells_[a_.compose(g, f)].components != rhs.components) return false;
    }
    for (int c : lc2_[s]) {
      const int f = a_.cell_src(c), g = a_.cell_tgt(c);
      const auto fg = whisker(F_.two(c), legs_[a_.src(f)]);
      if (lax ? cells_[f].components != vcompose(cells_[g], fg).components
              : cells_[g].components != vcompose(fg, cells_[f]).components)
        return false;
    }
    return true;
  }

  void rec(std::size_t s) {
    if (s == steps_.size()) {
      out_.push_back(LaxCone{o_, e_, legs_, cells_});
      return;
    }
    auto [is_object, id] = steps_[s];
    if (is_object) {
      for (const auto& l : leg_candidates(id)) {
        legs_[id] = l;
        if (checks(s)) rec(s + 1);
      }
    } else {
      for (auto& c : cell_candidates(id)) {
        cells_[id] = std::move(c);
        if (checks(s)) rec(s + 1);
      }
    }
  }

  Cat e_;
  const TwoFunctor& F_;
  const TwoCategory& a_;
  const SigmaFamily* sigma_;
  Orientation o_;
  const std::vector<Functor>* fixed_;
  std::vector<std::pair<bool, int>> steps_;
  std::vector<int> step_of_cell_;
  std::vector<std::vector<std::pair<int, int>>> lc1_;
  std::vector<std::vector<int>> lc2_;
  std::vector<std::optional<std::vector<Functor>>> leg_candidates_;
  std::vector<Functor> legs_;
  std::vector<NatTrans> cells_;
  std::vector<LaxCone> out_;
};

std::string describe_cone(const LaxCone& c, const TwoCategory& a) {
  const bool point = c.vertex->object_count() == 1;
  std::string s;
  for (int x = 0; x < a.object_count(); ++x) {
    if (x) s += ", ";
    const auto& l = c.legs[x];
    s += a.object_name(x) + "=" +
         (point ? l.cod->object_name(l(0))
                : tuple_string(l.on_objects) + tuple_string(l.on_arrows));
  }
  std::string cells;
  for (int f = 0; f < a.one_cell_count(); ++f) {
    if (a.is_identity(f)) continue;
    if (!cells.empty()) cells += ", ";
    const auto& n = c.cells[f];
    cells += a.one_cell_name(f) + "=" +
             (point ? n.dom.cod->arrow_name(n[0]) : tuple_string(n.components));
  }
  return cells.empty() ? s : s + "; " + cells;
}

}  // namespace

std::vector<LaxCone> enumerate_cone_objects(const Cat& vertex, const TwoFunctor& F,
                                            const SigmaFamily* sigma, Orientation o,
                                            const std::vector<Functor>* fixed_legs) {
  return ConeSearch(vertex, F, sigma, o, fixed_legs).run();
}

std::vector<std::vector<NatTrans>> enumerate_modifications(const LaxCone& dom,
                                                           const LaxCone& cod,
                                                           const TwoFunctor& F) {
  const auto& a = *F.dom;
  const int n = a.object_count();
  const bool lax = dom.orientation == Orientation::Lax;
  std::vector<std::vector<int>> at(n);
  for (int f = 0; f < a.one_cell_count(); ++f)
    if (!a.is_identity(f)) at[std::max(a.src(f), a.tgt(f))].push_back(f);
  std::vector<std::vector<NatTrans>> out;
  std::vector<NatTrans> comps(n);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      out.push_back(comps);
      return;
    }
    for (auto& k : enumerate_naturals(dom.legs[x], cod.legs[x])) {
      comps[x] = std::move(k);
      bool ok = true;
      for (int f : at[x]) {
        const auto& ax = comps[a.src(f)];
        const auto& ay = comps[a.tgt(f)];
        const auto ffa = whisker(F.one(f), ax);
        ok = lax ? vcompose(cod.cells[f], ffa).components ==
                       vcompose(ay, dom.cells[f]).components
                 : vcompose(cod.cells[f], ay).components ==
                       vcompose(ffa, dom.cells[f]).components;
        if (!ok) break;
      }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

Modification ConeCategory::modification(int arrow) const {
  return {cones[cat->src(arrow)], cones[cat->tgt(arrow)], components[arrow]};
}

std::optional<int> ConeCategory::find_cone(const LaxCone& c) const {
  auto it = cone_index.find(cone_key(c));
  if (it == cone_index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ConeCategory::find_modification(
    int dom, int cod, const std::vector<NatTrans>& comps) const {
  auto it = modification_index.find(modification_key(dom, cod, comps));
  if (it == modification_index.end()) return std::nullopt;
  return it->second;
}

ConeCategory enumerate_cones(const Cat& vertex, const TwoFunctor& F,
                             const SigmaFamily& sigma, bool sigma_s_only,
                             Orientation o) {
  const auto& a = *F.dom;
  ConeCategory cc;
  cc.vertex = vertex;
  cc.orientation = o;
  cc.cones = enumerate_cone_objects(vertex, F, sigma_s_only ? &sigma : nullptr, o);
  CategoryBuilder b(std::string(sigma_s_only ? "SCones" : "Cones") + "(" +
                    vertex->name() + "," + a.name() + ")");
  for (std::size_t i = 0; i < cc.cones.size(); ++i) {
    b.add_object(describe_cone(cc.cones[i], a));
    cc.cone_index.emplace(cone_key(cc.cones[i]), static_cast<int>(i));
  }
  std::vector<int> arrow_src, arrow_tgt;
  for (std::size_t i = 0; i < cc.cones.size(); ++i)
    for (std::size_t j = 0; j < cc.cones.size(); ++j)
      for (auto& comps : enumerate_modifications(cc.cones[i], cc.cones[j], F)) {
        std::string prov;
        bool all_identity = i == j;
        for (int x = 0; x < a.object_count(); ++x) {
          if (x) prov += ", ";
          prov += a.object_name(x) + "=" + tuple_string(comps[x].components);
          all_identity = all_identity && is_identity(comps[x]);
        }
        const int ai = static_cast<int>(i), aj = static_cast<int>(j);
        const int arrow = b.add_arrow(ai, aj, std::move(prov));
        arrow_src.push_back(ai);
        arrow_tgt.push_back(aj);
        if (all_identity) b.set_identity(ai, arrow);
        cc.modification_index.emplace(modification_key(ai, aj, comps), arrow);
        cc.components.push_back(std::move(comps));
      }
  cc.cat = b.finish([&](int g, int f) {
    const auto& cg = cc.components[g];
    const auto& cf = cc.components[f];
    std::vector<NatTrans> comps;
    comps.reserve(cg.size());
    for (std::size_t x = 0; x < cg.size(); ++x) comps.push_back(vcompose(cg[x], cf[x]));
    return cc.modification_index.at(
        modification_key(arrow_src[f], arrow_tgt[g], comps));
  });
  return cc;
}

}  // namespace pielift
