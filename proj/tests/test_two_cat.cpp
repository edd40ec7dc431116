#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "pielift/two_cat.hpp"
#include "shapes.hpp"
#include "support.hpp"

using namespace pielift;
using namespace pielift::testing;

namespace {

// Oracle working from the raw tables: Warshall closure of the undirected
// Σ-graph, then an initial-object scan.
struct OracleResult {
  bool pie = false;
  std::set<std::string> initials;
  std::map<std::string, std::string> canonical;
};

OracleResult pie_oracle(const TwoCategory& a, const SigmaFamily& s) {
  auto raw = a.data();
  const std::size_t n = raw.objects.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) r[x][x] = true;
  for (int f : s.cells) {
    const auto& d = raw.one_cells[f];
    r[d.src][d.tgt] = r[d.tgt][d.src] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  OracleResult out{true, {}, {}};
  std::vector<bool> done(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t y = 0; y < n; ++y)
      if (r[x][y]) comp.push_back(y), done[y] = true;
    bool found = false;
    for (std::size_t i : comp) {
      std::map<std::size_t, std::vector<int>> out_arrows;
      for (int f : s.cells)
        if (static_cast<std::size_t>(raw.one_cells[f].src) == i)
          out_arrows[raw.one_cells[f].tgt].push_back(f);
      bool ok = std::all_of(comp.begin(), comp.end(),
                            [&](std::size_t y) { return out_arrows[y].size() == 1; });
      if (!ok) continue;
      found = true;
      out.initials.insert(raw.objects[i]);
      for (std::size_t y : comp)
        out.canonical[raw.objects[y]] = raw.one_cells[out_arrows[y][0]].name;
      break;
    }
    if (!found) out.pie = false;
  }
  return out;
}

std::set<std::string> initial_names(const TwoCategory& a, const PieStructure& p) {
  std::set<std::string> out;
  for (int x : p.initials()) out.insert(a.object_name(x));
  return out;
}

}  // namespace

TEST_CASE("validate_two_category") {
  SUBCASE("inserter and equifier shapes are valid") {
    CHECK(validate_two_category(inserter_shape().a->data()).empty());
    CHECK(validate_two_category(equifier_shape().a->data()).empty());
    CHECK(equifier_shape().a->two_cell_count() == 2 + 2 + 2);  // ids + al, be
  }
  SUBCASE("all example shapes validate, also after a data() round trip") {
    for (auto sh : {product_shape(), inserter_shape(), equifier_shape(),
                    inverter_shape(), cotensor_shape(), comma_shape()}) {
      auto raw = sh.a->data();
      CHECK(validate_two_category(raw).empty());
      auto again = TwoCategory::build(raw);
      CHECK(same_category(again->skeleton(), sh.a->skeleton()));
      CHECK(same_category(again->vertical(), sh.a->vertical()));
    }
  }
  SUBCASE("a broken interchange gives exactly one violation") {
    auto d = validate_two_category(broken_interchange());
    REQUIRE(d.size() == 1);
    CHECK(d[0].kind == "interchange");
    CHECK(d[0].message == "(be, al)");
  }
  SUBCASE("the repaired shape is valid") {
    auto raw = broken_interchange();
    const int d1 = static_cast<int>(
        std::find_if(raw.two_cells.begin(), raw.two_cells.end(),
                     [](const TwoCellDecl& c) { return c.name == "d1"; }) -
        raw.two_cells.begin());
    for (auto& c : raw.vcomposites)
      if (raw.two_cells[c.result].name == "d2" && raw.two_cells[c.second].name == "bef'" &&
          raw.two_cells[c.first].name == "gal")
        c.result = d1;
    auto d = validate_two_category(raw);
    CHECK_MESSAGE(d.empty(), to_string(d));
  }
  SUBCASE("whisker problems are reported") {
    auto raw = inverter_shape().a->data();
    auto missing = raw;
    missing.left_whiskers.erase(std::find_if(
        missing.left_whiskers.begin(), missing.left_whiskers.end(),
        [&](const WhiskerDecl& w) {
          return raw.one_cells[w.one_cell].name == "k" &&
                 raw.two_cells[w.two_cell].name == "hal";
        }));
    auto d = validate_two_category(missing);
    REQUIRE(d.size() == 1);
    CHECK(d[0].kind == "missing-whisker");
    CHECK(d[0].message == "k * hal");
  }
  SUBCASE("non-parallel 2-cell") {
    auto raw = two_category_data("X", {"A", "B"}, {{"f", "A", "B"}}, {},
                                 {{"al", "f", "id_A"}});
    auto d = validate_two_category(raw);
    REQUIRE(!d.empty());
    CHECK(d[0].kind == "two-cell-parallel");
  }
  SUBCASE("locally discrete 2-categories are valid") {
    for (const auto& c : small_corpus())
      CHECK(validate_two_category(TwoCategory::locally_discrete(c)->data()).empty());
  }
}

TEST_CASE("hcompose agrees with both interchange forms") {
  auto a = inverter_shape().a;
  for (int b = 0; b < a->two_cell_count(); ++b)
    for (int c = 0; c < a->two_cell_count(); ++c) {
      if (a->tgt(a->cell_src(c)) != a->src(a->cell_src(b))) continue;
      const int lhs = a->hcompose(b, c);
      const int rhs = a->vcompose(a->whisker(a->cell_tgt(b), c),
                                  a->whisker_right(b, a->cell_src(c)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("validate_sigma_family") {
  auto ins = inserter_shape();
  CHECK(validate_sigma_family(*ins.a, identities_only(*ins.a)).empty());
  CHECK(validate_sigma_family(*ins.a, ins.sigma).empty());
  SigmaFamily no_idb{{ins.a->identity(0), ins.a->find_one_cell("f")}};
  auto d = validate_sigma_family(*ins.a, no_idb);
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "identity not in Σ: id_B");

  auto inv = inverter_shape();
  CHECK(validate_sigma_family(*inv.a, inv.sigma).empty());
  auto h_and_f = sigma_from_names(*inv.a, {"f", "h"});
  d = validate_sigma_family(*inv.a, h_and_f);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == "sigma-closure");
}

TEST_CASE("pie_analysis on the worked examples") {
  SUBCASE("inserter") {
    auto sh = inserter_shape();
    auto r = pie_analysis(*sh.a, sh.sigma);
    REQUIRE(std::holds_alternative<PieStructure>(r));
    const auto& p = std::get<PieStructure>(r);
    CHECK(p.components.size() == 1);
    CHECK(initial_names(*sh.a, p) == std::set<std::string>{"A"});
    CHECK(sh.a->one_cell_name(p.canonical[sh.a->find_object("B")]) == "f");
  }
  SUBCASE("comma") {
    auto sh = comma_shape();
    auto r = pie_analysis(*sh.a, sh.sigma);
    REQUIRE(std::holds_alternative<PieStructure>(r));
    const auto& p = std::get<PieStructure>(r);
    REQUIRE(p.components.size() == 2);
    CHECK(p.components[0] == std::vector<int>{0});
    CHECK(p.components[1] == std::vector<int>{1, 2});
    CHECK(initial_names(*sh.a, p) == std::set<std::string>{"A", "C"});
    CHECK(sh.a->one_cell_name(p.canonical[sh.a->find_object("B")]) == "g");
  }
  SUBCASE("cospan is not PIE") {
    auto sh = cospan_shape();
    auto r = pie_analysis(*sh.a, sh.sigma);
    REQUIRE(std::holds_alternative<NotPie>(r));
    CHECK(std::get<NotPie>(r).component == std::vector<int>{0, 1, 2});
  }
  SUBCASE("a non-identity Σ endo-arrow is not PIE") {
    auto a = TwoCategory::build(two_category_data(
        "E", {"A"}, {{"e", "A", "A"}}, {{"e", "e", "e"}}));
    CHECK(std::holds_alternative<NotPie>(pie_analysis(*a, sigma_from_names(*a, {"e"}))));
    CHECK(std::holds_alternative<PieStructure>(pie_analysis(*a, identities_only(*a))));
  }
}

TEST_CASE("pie_analysis agrees with the oracle and satisfies its invariants") {
  const std::map<std::string, std::set<std::string>> expected{
      {"Prod", {"A", "B"}}, {"Ins", {"A"}},  {"Eq", {"A"}},
      {"Inv", {"A"}},       {"Cot", {"0", "1"}}, {"Comma", {"A", "C"}}};
  for (auto sh : {product_shape(), inserter_shape(), equifier_shape(),
                  inverter_shape(), cotensor_shape(), comma_shape()}) {
    CAPTURE(sh.a->name());
    auto r = pie_analysis(*sh.a, sh.sigma);
    REQUIRE(std::holds_alternative<PieStructure>(r));
    const auto& p = std::get<PieStructure>(r);
    auto o = pie_oracle(*sh.a, sh.sigma);
    CHECK(o.pie);
    CHECK(initial_names(*sh.a, p) == o.initials);
    CHECK(initial_names(*sh.a, p) == expected.at(sh.a->name()));
    for (int x = 0; x < sh.a->object_count(); ++x) {
      CHECK(sh.sigma.contains(p.canonical[x]));
      CHECK(o.canonical.at(sh.a->object_name(x)) ==
            sh.a->one_cell_name(p.canonical[x]));
    }
    for (int a0 : p.initial) CHECK(p.canonical[a0] == sh.a->identity(a0));
    for (int s : sh.sigma.cells) {
      const int x = sh.a->src(s), y = sh.a->tgt(s);
      CHECK(sh.a->compose(s, p.canonical[x]) == p.canonical[y]);
    }
  }
  CHECK_FALSE(pie_oracle(*cospan_shape().a, cospan_shape().sigma).pie);
}

TEST_CASE("2-functors") {
  auto one = terminal_category();
  auto two = walking_arrow();
  auto ins = inserter_shape();
  TwoFunctorSpec spec;
  spec.objects = {one, two};
  spec.ones.resize(ins.a->one_cell_count());
  spec.ones[ins.a->find_one_cell("f")] = constant_functor(one, two, 0);
  spec.ones[ins.a->find_one_cell("g")] = constant_functor(one, two, 1);
  auto F = complete_two_functor(ins.a, spec);
  CHECK(validate_two_functor(F).empty());

  SUBCASE("unassigned cells are reported") {
    TwoFunctorSpec partial;
    partial.objects = {one, two};
    CHECK_THROWS_AS(complete_two_functor(ins.a, partial), ValidationError);
  }
  SUBCASE("wrong identity image is caught") {
    auto bad = F;
    bad.on_one[ins.a->identity(1)] = constant_functor(two, two, 0);
    auto d = validate_two_functor(bad);
    CHECK(!d.empty());
  }
  SUBCASE("inverter instance completes composites and whiskers") {
    auto inv = inverter_shape();
    auto y = iso_category();
    TwoFunctorSpec s;
    s.objects = {two, y, y};
    s.ones.resize(inv.a->one_cell_count());
    s.twos.resize(inv.a->two_cell_count());
    Functor f0{two, y, {0, 1}, {y->identity(0), y->identity(1), y->find_arrow("i")}};
    Functor f1{two, y, {1, 1}, {y->identity(1), y->identity(1), y->identity(1)}};
    s.ones[inv.a->find_one_cell("f")] = f0;
    s.ones[inv.a->find_one_cell("g")] = f1;
    s.ones[inv.a->find_one_cell("h")] = identity_functor(y);
    s.ones[inv.a->find_one_cell("k")] = identity_functor(y);
    auto ns = enumerate_naturals(f0, f1);
    REQUIRE(ns.size() == 1);
    s.twos[inv.a->find_two_cell("al")] = ns[0];
    auto G = complete_two_functor(inv.a, s);
    CHECK(validate_two_functor(G).empty());
    CHECK(G.two(inv.a->find_two_cell("hal")) == ns[0]);
  }
  SUBCASE("precomposition with the identity map") {
    TwoMap id{ins.a, ins.a, {0, 1}, {}, {}};
    for (int f = 0; f < ins.a->one_cell_count(); ++f) id.on_one.push_back(f);
    for (int c = 0; c < ins.a->two_cell_count(); ++c) id.on_two.push_back(c);
    CHECK(validate_two_map(id).empty());
    auto G = precompose(F, id);
    CHECK(validate_two_functor(G).empty());
    auto bad = id;
    std::swap(bad.on_one[ins.a->find_one_cell("f")], bad.on_one[ins.a->identity(0)]);
    CHECK(!validate_two_map(bad).empty());
  }
}
