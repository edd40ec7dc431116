#include <doctest.h>

#include "algebra_instances.hpp"
#include "instances.hpp"
#include "pielift/dsl.hpp"
#include "weight_instances.hpp"

using namespace pielift;
using namespace pielift::dsl;
using namespace pielift::testing;

namespace {

const Workspace& corpus() {
  static const Workspace w = load_files(corpus_files(PIELIFT_CORPUS_DIR));
  return w;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_workspace(text, "t");
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no error for:\n" << text);
  throw;
}

bool same_two_functor(const TwoFunctor& a, const TwoFunctor& b) {
  if (!same_category(a.dom->skeleton(), b.dom->skeleton()) ||
      !same_category(a.dom->vertical(), b.dom->vertical()))
    return false;
  for (std::size_t i = 0; i < a.on_objects.size(); ++i)
    if (!same_category(a.on_objects[i], b.on_objects[i])) return false;
  return a.on_one == b.on_one && a.on_two == b.on_two;
}

const std::string kArrow = "category two {\n  objects: a, b;\n  arrows: u: a -> b;\n}\n";

}  // namespace

TEST_CASE("a one-object category") {
  auto w = parse_workspace("category one { objects: x; }  # the point\n");
  REQUIRE(w.entries().size() == 1);
  CHECK(w.kind_of("one") == EntityKind::Category);
  const auto& c = *w.category("one");
  CHECK(c.object_count() == 1);
  CHECK(c.arrow_count() == 1);
  CHECK(c.arrow_name(0) == "id_x");
}

TEST_CASE("non-composable pair is named at its position") {
  auto e = parse_error(kArrow + "category bad {\n  objects: a, b;\n  arrows: u: a -> b;\n"
                                "  compose: u.u = u;\n}\n");
  CHECK(e.location().line == 8);
  CHECK(e.location().column == 12);
  CHECK(e.message().find("'u' and 'u' are not composable") != std::string::npos);
  CHECK(std::string(e.what()).rfind("t:8:12: ", 0) == 0);
}

TEST_CASE("duplicate names across entities") {
  auto e = parse_error(kArrow + "twocat two { objects: A; }\n");
  CHECK(e.location().line == 5);
  CHECK(e.location().column == 8);
  CHECK(e.message().find("duplicate name 'two', first declared at t:1:10") !=
        std::string::npos);
}

TEST_CASE("dangling references") {
  SUBCASE("category in a functor") {
    auto e = parse_error(kArrow + "functor F: two -> three { objects: a |-> a; }\n");
    CHECK(e.location().line == 5);
    CHECK(e.location().column == 19);
    CHECK(e.message() == "unknown category 'three'");
  }
  SUBCASE("functor in a diagram") {
    auto e = parse_error(kArrow +
                         "twocat S { objects: A, B; arrows: f: A -> B; }\n"
                         "diagram D: S -> cat {\n  A |-> two;\n  B |-> two;\n  f |-> G;\n}\n");
    CHECK(e.location().line == 9);
    CHECK(e.location().column == 9);
    CHECK(e.message() == "unknown functor 'G'");
  }
  SUBCASE("arrow in a functor") {
    auto e = parse_error(kArrow + "functor F: two -> two {\n  objects: a |-> a, b |-> b;\n"
                                  "  arrows: u |-> v;\n}\n");
    CHECK(e.location().line == 7);
    CHECK(e.location().column == 17);
  }
}

TEST_CASE("composition tables are not completed") {
  auto e = parse_error(
      "category three {\n  objects: a, b, c;\n  arrows: u: a -> b, v: b -> c;\n}\n");
  CHECK(e.location().line == 1);
  CHECK(e.message().find("category 'three' is invalid") != std::string::npos);
}

TEST_CASE("syntax errors and columns count code points") {
  auto e = parse_error("category é { objects: x }");
  CHECK(e.location().line == 1);
  CHECK(e.location().column == 25);
  CHECK(e.message() == "expected ';', found '}'");

  auto f = parse_error("category c { objects: x; } <");
  CHECK(f.location().column == 28);

  auto g = parse_error("categroy c { }");
  CHECK(g.message().find("expected a declaration") != std::string::npos);

  auto h = parse_error("category c {");
  CHECK(h.message().find("end of input") != std::string::npos);
}

TEST_CASE("law failures surface at the declaration") {
  // u ↦ id_a does not respect the target of u
  auto e = parse_error(kArrow + "functor F: two -> two {\n  objects: a |-> a, b |-> b;\n"
                                "  arrows: u |-> id_a;\n}\n");
  CHECK(e.location().line == 5);
  CHECK(e.message().find("functor 'F' is invalid") != std::string::npos);

  // a ↦ b breaks the unit law
  const std::string alg =
      kArrow +
      "twocat S { objects: A; }\n"
      "diagram D: S -> cat { A |-> two; }\n"
      "functor s: pointed(two) -> two {\n  objects: a |-> b, b |-> b, pt |-> b;\n"
      "  arrows: u |-> id_b;\n}\n"
      "algebra X: D monad pointed { A |-> s; }\n";
  auto a = parse_error(alg);
  CHECK(a.location().line == 11);
  CHECK(a.message().find("not an algebra") != std::string::npos);

  auto m = parse_error(kArrow + "twocat S { objects: A; }\ndiagram D: S -> cat { A |-> two; }\n"
                                "algebra X: D monad free { }\n");
  CHECK(m.message() == "unknown monad 'free'");
}

TEST_CASE("corpus loads and matches the hand-built fixtures") {
  const auto& w = corpus();
  CHECK(w.names(EntityKind::TwoCategory).size() == 7);
  for (const auto& inst : pie_instances()) {
    CAPTURE(inst.name);
    REQUIRE(w.kind_of(inst.name) == EntityKind::Diagram);
    CHECK(same_two_functor(w.diagram(inst.name), inst.F));
    CHECK(w.sigma(w.shape_of(inst.name)) == inst.shape.sigma);
  }
  CHECK(same_two_functor(w.diagram("w_product"), product_weight()));
  CHECK(same_two_functor(w.diagram("w_inserter"), inserter_weight()));
  CHECK(same_two_functor(w.diagram("w_equifier"), equifier_weight()));
  CHECK(same_two_functor(w.diagram("w_equalizer"), equalizer_weight()));
  CHECK(w.kind_of("w_product") == EntityKind::Weight);

  const auto t = pointed_monad();
  const auto& x = w.algebra("pointed_inserter");
  const auto y = pointed_inserter(*t);
  CHECK(x.monad->name() == "pointed");
  CHECK(x.omega == CellClass::Lax);
  CHECK(x.diagram.objects == y.objects);
  REQUIRE(x.diagram.ones.size() == y.ones.size());
  for (std::size_t i = 0; i < y.ones.size(); ++i) {
    CHECK(x.diagram.ones[i].f == y.ones[i].f);
    CHECK(x.diagram.ones[i].bar == y.ones[i].bar);
  }
  const auto& bad = w.algebra("pointed_inserter_bad").diagram;
  const auto yb = pointed_inserter(*t, true);
  for (std::size_t i = 0; i < yb.ones.size(); ++i) CHECK(bad.ones[i].bar == yb.ones[i].bar);
  CHECK(w.algebra("pointed_comma").omega == CellClass::Pseudo);
}

TEST_CASE("the inserter shape from the corpus has A0 = {A}") {
  const auto& w = corpus();
  const auto& a = w.twocat("Ins");
  auto p = pie_analysis(*a, w.sigma("Ins"));
  REQUIRE(std::holds_alternative<PieStructure>(p));
  const auto init = std::get<PieStructure>(p).initials();
  REQUIRE(init.size() == 1);
  CHECK(a->object_name(init[0]) == "A");
}

TEST_CASE("print and reparse over the corpus") {
  const auto& w = corpus();
  const auto text = print_workspace(w);
  const auto back = parse_workspace(text, "printed");
  CHECK(equivalent(w, back));
  CHECK(print_workspace(back) == text);
}

TEST_CASE("equivalent notices a changed value") {
  auto a = parse_workspace(kArrow);
  auto b = parse_workspace("category two {\n  objects: a, b;\n  arrows: u: b -> a;\n}\n");
  auto c = parse_workspace("category two { objects: b, a; arrows: u: a -> b; }");
  CHECK(equivalent(a, parse_workspace(print_workspace(a))));
  CHECK_FALSE(equivalent(a, b));
  CHECK_FALSE(equivalent(a, c));
}
