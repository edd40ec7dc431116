#pragma once

// Indexing 2-categories used across the tests, written out by hand.

#include <string>
#include <vector>

#include "pielift/two_cat.hpp"

namespace pielift::testing {

struct Shape {
  TwoCat a;
  SigmaFamily sigma;
};

inline Shape make_shape(const TwoCategoryData& raw,
                        const std::vector<std::string>& sigma) {
  auto a = TwoCategory::build(raw);
  return {a, sigma_from_names(*a, sigma)};
}

inline Shape product_shape() {
  return make_shape(two_category_data("Prod", {"A", "B"}, {}, {}), {});
}

inline Shape inserter_shape() {
  return make_shape(
      two_category_data("Ins", {"A", "B"}, {{"f", "A", "B"}, {"g", "A", "B"}}, {}),
      {"f"});
}

inline Shape equifier_shape() {
  return make_shape(
      two_category_data("Eq", {"A", "B"}, {{"f", "A", "B"}, {"g", "A", "B"}}, {},
                        {{"al", "f", "g"}, {"be", "f", "g"}}),
      {"f"});
}

// k and h are mutually inverse between B and C; al : f ⇒ k.g and its
// whisker h.al : h.f ⇒ g.
inline Shape inverter_shape() {
  return make_shape(
      two_category_data(
          "Inv", {"A", "B", "C"},
          {{"f", "A", "B"},
           {"g", "A", "C"},
           {"h", "B", "C"},
           {"k", "C", "B"},
           {"hf", "A", "C"},
           {"kg", "A", "B"}},
          {{"h", "f", "hf"},
           {"k", "g", "kg"},
           {"k", "h", "id_B"},
           {"h", "k", "id_C"},
           {"h", "kg", "g"},
           {"k", "hf", "f"}},
          {{"al", "f", "kg"}, {"hal", "hf", "g"}}, {},
          {{"h", "al", "hal"}, {"k", "hal", "al"}}),
      {"f", "g"});
}

/// The walking arrow with Σ = identities.
inline Shape cotensor_shape() {
  return make_shape(two_category_data("Cot", {"0", "1"}, {{"u", "0", "1"}}, {}),
                    {});
}

inline Shape comma_shape() {
  return make_shape(
      two_category_data("Comma", {"A", "B", "C"},
                        {{"f", "A", "B"}, {"g", "C", "B"}}, {}),
      {"g"});
}

inline Shape cospan_shape() {
  return make_shape(
      two_category_data("Cospan", {"A", "A'", "B"},
                        {{"f", "A", "B"}, {"g", "A'", "B"}}, {}),
      {"f", "g"});
}

/// Interchange fails for (be, al): the two composites are d1 and d2.
inline TwoCategoryData broken_interchange() {
  return two_category_data(
      "Broken", {"A", "B", "C"},
      {{"f", "A", "B"},
       {"f'", "A", "B"},
       {"g", "B", "C"},
       {"g'", "B", "C"},
       {"gf", "A", "C"},
       {"gf'", "A", "C"},
       {"g'f", "A", "C"},
       {"g'f'", "A", "C"}},
      {{"g", "f", "gf"}, {"g", "f'", "gf'"}, {"g'", "f", "g'f"}, {"g'", "f'", "g'f'"}},
      {{"al", "f", "f'"},
       {"be", "g", "g'"},
       {"gal", "gf", "gf'"},
       {"g'al", "g'f", "g'f'"},
       {"bef", "gf", "g'f"},
       {"bef'", "gf'", "g'f'"},
       {"d1", "gf", "g'f'"},
       {"d2", "gf", "g'f'"}},
      {{"g'al", "bef", "d1"}, {"bef'", "gal", "d2"}},
      {{"g", "al", "gal"}, {"g'", "al", "g'al"}},
      {{"f", "be", "bef"}, {"f'", "be", "bef'"}});
}

}  // namespace pielift::testing
