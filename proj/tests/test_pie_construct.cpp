#include "doctest.h"
#include "instances.hpp"
#include "pielift/pie_construct.hpp"

using namespace pielift;
using namespace pielift::testing;

namespace {

const Orientation kBoth[] = {Orientation::Lax, Orientation::Oplax};

std::size_t count_cells(const Functor& s, const Functor& t, int x) {
  return s.cod->hom(s(x), t(x)).size();
}

}  // namespace

TEST_CASE("the assembly agrees with the direct limit") {
  for (const auto& in : pie_instances())
    for (auto o : kBoth) {
      CAPTURE(in.name);
      CAPTURE(to_string(o));
      auto lim = sigma_s_limit(in.F, in.shape.sigma, o);
      auto asm_ = build_via_pie(in.F, in.shape.sigma, o);
      CHECK(validate_category(asm_.inserter.cat->data()).empty());
      CHECK(validate_category(asm_.final.cat->data()).empty());
      CHECK(validate_cone(asm_.cone, in.F).empty());
      CHECK(is_sigma_s_cone(asm_.cone, in.shape.sigma));
      CHECK(assembly_matches(asm_, lim));
      CHECK(compare_constructions(in.F, in.shape.sigma, o));
      for (const auto& p : equifier_pairs(asm_)) {
        CHECK(p.first.dom == p.second.dom);
        CHECK(p.first.cod == p.second.cod);
      }
    }
}

TEST_CASE("inserter objects are families of base legs and cells") {
  // Counted directly: a tuple of objects of the FA₀ and, for every 1-cell,
  // an arrow between the two induced objects.
  for (const auto& in : pie_instances())
    for (auto o : kBoth) {
      CAPTURE(in.name);
      auto asm_ = build_via_pie(in.F, in.shape.sigma, o);
      const auto& base = *asm_.base.cat;
      std::size_t expected = 0;
      for (int x = 0; x < base.object_count(); ++x) {
        std::size_t n = 1;
        for (std::size_t g = 0; g < asm_.phi0.size(); ++g)
          n *= o == Orientation::Lax ? count_cells(asm_.phi0[g], asm_.phi1[g], x)
                                     : count_cells(asm_.phi1[g], asm_.phi0[g], x);
        expected += n;
      }
      CHECK(asm_.inserter.cat->object_count() == static_cast<int>(expected));
    }
}

TEST_CASE("the equifier is a full subcategory of the inserter") {
  for (const auto& in : pie_instances()) {
    CAPTURE(in.name);
    auto asm_ = build_via_pie(in.F, in.shape.sigma, Orientation::Oplax);
    const auto& e = asm_.final;
    const auto& i = *asm_.inserter.cat;
    for (int x = 0; x < e.cat->object_count(); ++x)
      for (int y = 0; y < e.cat->object_count(); ++y)
        CHECK(e.cat->hom(x, y).size() == i.hom(e.inclusion(x), e.inclusion(y)).size());
  }
}

TEST_CASE("family inserter matches the inserter into the materialized product") {
  for (const auto& in : {product_2x2(), inserter_points(), inserter_identity(),
                         cotensor_const(walking_arrow(), "cotensor_2"), comma_point()}) {
    CAPTURE(in.name);
    auto asm_ = build_via_pie(in.F, in.shape.sigma, Orientation::Lax);
    std::vector<Cat> cods;
    for (const auto& f : asm_.phi1) cods.push_back(f.cod);
    auto prod = product(cods);
    REQUIRE(prod.cat->object_count() <= 64);
    auto p0 = pair_functors(prod, asm_.base.cat, asm_.phi0);
    auto p1 = pair_functors(prod, asm_.base.cat, asm_.phi1);
    auto direct = inserter(p0, p1);
    CHECK(find_isomorphism(direct.cat, asm_.inserter.cat).has_value());
  }
}

TEST_CASE("worked cases") {
  SUBCASE("discrete shape: no insertion, trivial equifier") {
    auto in = product_2x2();
    auto asm_ = build_via_pie(in.F, in.shape.sigma, Orientation::Lax);
    CHECK(asm_.inserter.cat->object_count() == asm_.base.cat->object_count());
    CHECK(asm_.final.cat->object_count() == asm_.base.cat->object_count());
    auto two = walking_arrow();
    std::vector<Cat> fs{two, two};
    CHECK(find_isomorphism(asm_.final.cat, product(fs).cat).has_value());
  }
  SUBCASE("inserter shape gives the inserter") {
    // Op-lax cells θ_g : Ff θ_A ⇒ Fg θ_A; lax cells point the other way.
    for (const auto& in : {inserter_points(), inserter_identity(), inserter_z2()}) {
      CAPTURE(in.name);
      const auto& a = *in.shape.a;
      const auto& ff = in.F.one(a.find_one_cell("f"));
      const auto& fg = in.F.one(a.find_one_cell("g"));
      auto oplax = build_via_pie(in.F, in.shape.sigma, Orientation::Oplax);
      CHECK(find_isomorphism(oplax.final.cat, inserter(ff, fg).cat).has_value());
      auto lax = build_via_pie(in.F, in.shape.sigma, Orientation::Lax);
      CHECK(find_isomorphism(lax.final.cat, inserter(fg, ff).cat).has_value());
    }
  }
  SUBCASE("non-PIE input is rejected") {
    auto sh = cospan_shape();
    auto one = terminal_category();
    auto id = identity_functor(one);
    auto f = instance(sh.a, {{{"A", one}, {"A'", one}, {"B", one}}, {{"f", id}, {"g", id}}, {}});
    CHECK_THROWS_AS(build_via_pie(f, sh.sigma, Orientation::Lax), std::invalid_argument);
  }
}

TEST_CASE("an altered equifier pair is detected") {
  int detected = 0;
  for (const auto& in : pie_instances())
    for (auto o : kBoth) {
      auto lim = sigma_s_limit(in.F, in.shape.sigma, o);
      auto good = build_via_pie(in.F, in.shape.sigma, o);
      for (auto* fam : {&good.sigma_pairs, &good.lc1_pairs, &good.lc2_pairs})
        for (std::size_t k = 0; k < fam->size(); ++k) {
          CAPTURE(in.name);
          CAPTURE((*fam)[k].label);
          auto bad = good;
          auto* bad_fam = fam == &good.sigma_pairs ? &bad.sigma_pairs
                          : fam == &good.lc1_pairs ? &bad.lc1_pairs
                                                   : &bad.lc2_pairs;
          auto& pair = (*bad_fam)[k];
          pair.second = pair.first;
          equify(bad);
          // Dropping a constraint can only matter when it removed something.
          const bool same = bad.final.cat->object_count() == good.final.cat->object_count();
          CHECK(assembly_matches(bad, lim) == same);
          detected += !same;
        }
    }
  CHECK(detected > 0);
}
