#include <map>
#include <tuple>

#include "pielift/weights.hpp"

namespace pielift {

namespace {

ElCategory build_elements(const Weight& w, bool dual) {
  const auto& a = *w.dom;
  ElCategory out;
  out.dual = dual;

  std::vector<std::string> objects;
  std::vector<std::vector<int>> element_of(a.object_count());
  for (int x = 0; x < a.object_count(); ++x)
    for (int e = 0; e < w(x)->object_count(); ++e) {
      element_of[x].push_back(static_cast<int>(out.elements.size()));
      out.elements.push_back({x, e});
      objects.push_back("(" + a.object_name(x) + "," + w(x)->object_name(e) + ")");
    }

  // 1-cells keyed by (f, source element, w).
  std::vector<ArrowDecl> ones;
  std::map<std::tuple<int, int, int>, int> one_index;
  std::vector<int> one_source;
  for (int f = 0; f < a.one_cell_count(); ++f) {
    const int x = a.src(f), y = a.tgt(f);
    const auto& wb = *w(y);
    for (int e = 0; e < w(x)->object_count(); ++e) {
      const int image = w.one(f)(e);
      for (int t = 0; t < wb.object_count(); ++t)
        for (int arrow : dual ? wb.hom(t, image) : wb.hom(image, t)) {
          one_index[{f, e, arrow}] = static_cast<int>(ones.size());
          ones.push_back({"(" + w(x)->object_name(e) + ":" + a.one_cell_name(f) + "," +
                              wb.arrow_name(arrow) + ")",
                          element_of[x][e], element_of[y][t]});
          out.arrows.push_back({f, arrow});
          one_source.push_back(e);
        }
    }
  }
  std::vector<int> identity;
  for (const auto& [x, e] : out.elements)
    identity.push_back(one_index.at({a.identity(x), e, w(x)->identity(e)}));

  auto compose_one = [&](int g, int f) {
    const auto [fa, fw] = out.arrows[f];
    const auto [ga, gw] = out.arrows[g];
    const auto& wc = *w(a.tgt(ga));
    const int lifted = w.one(ga).arrow(fw);
    const int arrow = dual ? wc.compose(lifted, gw) : wc.compose(gw, lifted);
    return one_index.at({a.compose(ga, fa), one_source[f], arrow});
  };
  auto skeleton = FinCategory::assemble(std::string(dual ? "Gamma" : "El") + "(" +
                                            a.name() + ")",
                                        std::move(objects), ones, identity, compose_one);

  // 2-cells keyed by (γ, source 1-cell, target 1-cell).
  std::vector<TwoCellDecl> cells;
  std::map<std::tuple<int, int, int>, int> cell_index;
  const int n1 = skeleton->arrow_count();
  for (int gamma = 0; gamma < a.two_cell_count(); ++gamma) {
    const int f = a.cell_src(gamma), g = a.cell_tgt(gamma);
    const auto& wg = w.two(gamma);
    for (int p = 0; p < n1; ++p) {
      if (out.arrows[p].first != f) continue;
      for (int q = 0; q < n1; ++q) {
        if (out.arrows[q].first != g || skeleton->src(q) != skeleton->src(p) ||
            skeleton->tgt(q) != skeleton->tgt(p))
          continue;
        const auto& wb = *w(a.tgt(f));
        const int comp = wg[one_source[p]];
        const int pw = out.arrows[p].second, qw = out.arrows[q].second;
        const bool ok = dual ? wb.compose(comp, pw) == qw : wb.compose(qw, comp) == pw;
        if (!ok) continue;
        cell_index[{gamma, p, q}] = static_cast<int>(cells.size());
        const std::string name =
            a.is_identity_cell(gamma) && p == q
                ? "id_" + skeleton->arrow_name(p)
                : "(" + a.two_cell_name(gamma) + ";" + skeleton->arrow_name(p) + "=>" +
                      skeleton->arrow_name(q) + ")";
        cells.push_back({name, p, q});
        out.cells.push_back(gamma);
      }
    }
  }
  std::vector<int> cell_identity;
  for (int p = 0; p < n1; ++p)
    cell_identity.push_back(cell_index.at({a.cell_identity(out.arrows[p].first), p, p}));

  auto cell_at = [&](int gamma, int p, int q) { return cell_index.at({gamma, p, q}); };
  auto vcompose = [&](int b, int c) {
    return cell_at(a.vcompose(out.cells[b], out.cells[c]), cells[c].src, cells[b].tgt);
  };
  auto left = [&](int h, int c) {
    return cell_at(a.whisker(out.arrows[h].first, out.cells[c]),
                   skeleton->compose(h, cells[c].src), skeleton->compose(h, cells[c].tgt));
  };
  auto right = [&](int c, int k) {
    return cell_at(a.whisker_right(out.cells[c], out.arrows[k].first),
                   skeleton->compose(cells[c].src, k), skeleton->compose(cells[c].tgt, k));
  };
  const auto decls = cells;
  out.el = TwoCategory::assemble(skeleton, decls, std::move(cell_identity), vcompose,
                                 left, right);

  out.projection.dom = out.el;
  out.projection.cod = w.dom;
  for (const auto& [x, e] : out.elements) out.projection.on_objects.push_back(x);
  for (const auto& [f, arrow] : out.arrows) out.projection.on_one.push_back(f);
  out.projection.on_two = out.cells;

  for (int p = 0; p < n1; ++p) {
    const auto [f, arrow] = out.arrows[p];
    if (w(a.tgt(f))->is_identity(arrow)) out.sigma.cells.push_back(p);
  }
  return out;
}

}  // namespace

ElCategory grothendieck(const Weight& w) { return build_elements(w, false); }
ElCategory grothendieck_dual(const Weight& w) { return build_elements(w, true); }

bool is_pie_weight(const Weight& w) {
  const auto el = grothendieck(w);
  return std::holds_alternative<PieStructure>(pie_analysis(*el.el, el.sigma));
}

}  // namespace pielift
