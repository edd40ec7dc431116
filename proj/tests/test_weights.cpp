#include "doctest.h"
#include "weight_instances.hpp"

using namespace pielift;
using namespace pielift::testing;

namespace {

bool pie(const ElCategory& el) {
  return std::holds_alternative<PieStructure>(pie_analysis(*el.el, el.sigma));
}

void check_well_formed(const ElCategory& el) {
  CHECK(validate_two_category(el.el->data()).empty());
  CHECK(validate_sigma_family(*el.el, el.sigma).empty());
  CHECK(validate_two_map(el.projection).empty());
}

}  // namespace

TEST_CASE("elements of the constant weight reproduce A") {
  auto w = product_weight();
  for (const auto& el : {grothendieck(w), grothendieck_dual(w)}) {
    check_well_formed(el);
    CHECK(el.el->object_count() == 2);
    CHECK(el.el->one_cell_count() == 2);
    CHECK(el.sigma == all_one_cells(*el.el));
  }
}

TEST_CASE("elements of the 2-weight") {
  auto w = cotensor_weight();
  auto el = grothendieck(w);
  auto gamma = grothendieck_dual(w);
  check_well_formed(el);
  check_well_formed(gamma);
  for (const auto* e : {&el, &gamma}) {
    CHECK(e->el->object_count() == 2);
    CHECK(e->el->one_cell_count() == 3);
    CHECK(e->sigma == identities_only(*e->el));
  }
  const int x0 = el.el->find_object("(*,0)");
  const int x1 = el.el->find_object("(*,1)");
  CHECK(el.el->one_cells(x0, x1).size() == 1);
  CHECK(el.el->one_cells(x1, x0).empty());
  CHECK(gamma.el->one_cells(x1, x0).size() == 1);
  CHECK(gamma.el->one_cells(x0, x1).empty());
}

TEST_CASE("elements of the equifier weight") {
  // Counted by hand: elements (A,*), (B,0), (B,1); 1-cells the three
  // identities, (f,id_0), (f,u), (g,id_1), (id_B,u); 2-cells the seven
  // identities plus al, be : (f,u) ⇒ (g,id_1), as u ∘ id = u is forced.
  auto w = equifier_weight();
  auto el = grothendieck(w);
  check_well_formed(el);
  CHECK(el.el->object_count() == 3);
  CHECK(el.el->one_cell_count() == 7);
  CHECK(el.el->two_cell_count() == 9);
  const int fu = el.el->find_one_cell("(*:f,u)");
  const int g1 = el.el->find_one_cell("(*:g,id_1)");
  REQUIRE(fu >= 0);
  REQUIRE(g1 >= 0);
  CHECK(el.el->two_cells(fu, g1).size() == 2);
  CHECK(el.sigma.cells.size() == 5);

  // Γ_W: (B,1) ← ... the element arrows point the other way, so f only
  // reaches (B,0) and g reaches both; al, be : (f,id_0) ⇒ (g,u).
  auto gamma = grothendieck_dual(w);
  check_well_formed(gamma);
  CHECK(gamma.el->one_cell_count() == 7);
  CHECK(gamma.el->two_cell_count() == 9);
  const int f0 = gamma.el->find_one_cell("(*:f,id_0)");
  const int gu = gamma.el->find_one_cell("(*:g,u)");
  REQUIRE(f0 >= 0);
  REQUIRE(gu >= 0);
  CHECK(gamma.el->two_cells(f0, gu).size() == 2);
}

TEST_CASE("projection preserves composition") {
  for (const auto& c : weight_cases())
    for (const auto& el : {grothendieck(c.w), grothendieck_dual(c.w)}) {
      CAPTURE(c.name);
      const auto& e = *el.el;
      const auto& a = *c.w.dom;
      const auto& p = el.projection;
      for (int g = 0; g < e.one_cell_count(); ++g)
        for (int f = 0; f < e.one_cell_count(); ++f)
          if (e.composable(g, f))
            CHECK(p.on_one[e.compose(g, f)] == a.compose(p.on_one[g], p.on_one[f]));
      for (int b = 0; b < e.two_cell_count(); ++b)
        for (int x = 0; x < e.two_cell_count(); ++x)
          if (e.cell_tgt(x) == e.cell_src(b))
            CHECK(p.on_two[e.vcompose(b, x)] == a.vcompose(p.on_two[b], p.on_two[x]));
    }
}

TEST_CASE("weighted limits of the standard weights") {
  SUBCASE("constant weight gives the product") {
    auto in = product_2x2();
    auto wl = weighted_limit(product_weight(), in.F);
    auto two = walking_arrow();
    std::vector<Cat> fs{two, two};
    CHECK(find_isomorphism(wl.cat, product(fs).cat).has_value());
  }
  SUBCASE("2-weight gives the functor category") {
    for (const auto& d : {walking_arrow(), involution(), iso_category(), three()}) {
      auto wl = weighted_limit(cotensor_weight(), on_point(d));
      CHECK(validate_category(wl.cat->data()).empty());
      CHECK(find_isomorphism(wl.cat, functor_category(walking_arrow(), d).cat).has_value());
    }
  }
  SUBCASE("inserter weight gives the inserter") {
    for (const auto& in : {inserter_points(), inserter_identity(), inserter_z2()}) {
      CAPTURE(in.name);
      auto wl = weighted_limit(inserter_weight(), in.F);
      const auto& a = *in.shape.a;
      auto ins = inserter(in.F.one(a.find_one_cell("f")), in.F.one(a.find_one_cell("g")));
      CHECK(find_isomorphism(wl.cat, ins.cat).has_value());
    }
  }
  SUBCASE("equifier weight gives the equifier") {
    auto in = equifier_pair();
    auto wl = weighted_limit(equifier_weight(), in.F);
    const auto& a = *in.shape.a;
    auto eq = equifier(in.F.two(a.find_two_cell("al")), in.F.two(a.find_two_cell("be")));
    CHECK(find_isomorphism(wl.cat, eq.cat).has_value());
  }
}

TEST_CASE("compare_weighted_conical") {
  for (const auto& c : weight_cases()) {
    CAPTURE(c.name);
    CHECK(compare_weighted_conical(c.w, c.f));
  }
}

TEST_CASE("comparison rejects a mismatched limit") {
  // The conical limit of a different diagram cannot receive the comparison.
  auto c = weight_cases()[1];
  auto el = grothendieck(c.w);
  auto wl = weighted_limit(c.w, c.f);
  auto other = sigma_s_limit(conical_diagram(el, on_point(involution())), el.sigma,
                             Orientation::Lax);
  CHECK_THROWS_AS(weighted_comparison(wl, el, other), std::invalid_argument);
}

TEST_CASE("is_pie_weight") {
  CHECK(is_pie_weight(product_weight()));
  CHECK(is_pie_weight(cotensor_weight()));
  CHECK(is_pie_weight(inserter_weight()));
  CHECK(is_pie_weight(equifier_weight()));
  CHECK_FALSE(is_pie_weight(equalizer_weight()));
  for (const auto& c : weight_cases()) {
    CAPTURE(c.name);
    CHECK(pie(grothendieck(c.w)) == is_pie_weight(c.w));
    CHECK(pie(grothendieck_dual(c.w)) == is_pie_weight(c.w));
  }
  CHECK_FALSE(pie(grothendieck_dual(equalizer_weight())));
}
