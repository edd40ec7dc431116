#pragma once

// Standard weights for the basic PIE limits, paired with diagrams.

#include "instances.hpp"
#include "pielift/weights.hpp"

namespace pielift::testing {

inline TwoCat point_shape() {
  return TwoCategory::locally_discrete(terminal_category()->renamed("pt"));
}

/// Constant at 𝟙 over the discrete pair {A, B}.
inline Weight product_weight() {
  auto sh = product_shape();
  auto one = terminal_category();
  return instance(sh.a, {{{"A", one}, {"B", one}}, {}, {}});
}

/// 𝟚 on the point.
inline Weight cotensor_weight() {
  auto a = point_shape();
  return instance(a, {{{"*", walking_arrow()}}, {}, {}});
}

/// f ↦ 0, g ↦ 1 : 𝟙 → 𝟚.
inline Weight inserter_weight() {
  auto sh = inserter_shape();
  auto one = terminal_category();
  auto two = walking_arrow();
  return instance(sh.a, {{{"A", one}, {"B", two}},
                         {{"f", constant_functor(one, two, 0)},
                          {"g", constant_functor(one, two, 1)}},
                         {}});
}

/// As the inserter weight, with both 2-cells sent to u.
inline Weight equifier_weight() {
  auto sh = equifier_shape();
  auto one = terminal_category();
  auto two = walking_arrow();
  auto f = constant_functor(one, two, 0);
  auto g = constant_functor(one, two, 1);
  return instance(sh.a, {{{"A", one}, {"B", two}},
                         {{"f", f}, {"g", g}},
                         {{"al", nat(f, g, {"u"})}, {"be", nat(f, g, {"u"})}}});
}

/// Constant at 𝟙 on a parallel pair: the equalizer weight, not PIE.
inline Weight equalizer_weight() {
  auto sh = inserter_shape();
  auto one = terminal_category();
  return instance(sh.a, {{{"A", one}, {"B", one}},
                         {{"f", identity_functor(one)}, {"g", identity_functor(one)}},
                         {}});
}

struct WeightCase {
  std::string name;
  Weight w;
  TwoFunctor f;
};

inline TwoFunctor on_point(const Cat& d) {
  return instance(point_shape(), {{{"*", d}}, {}, {}});
}

inline std::vector<WeightCase> weight_cases() {
  return {
      {"product_2x2", product_weight(), product_2x2().F},
      {"cotensor_2", cotensor_weight(), on_point(walking_arrow())},
      {"cotensor_z2", cotensor_weight(), on_point(involution())},
      {"cotensor_iso", cotensor_weight(), on_point(iso_category())},
      {"inserter_points", inserter_weight(), inserter_points().F},
      {"inserter_identity", inserter_weight(), inserter_identity().F},
      {"inserter_z2", inserter_weight(), inserter_z2().F},
      {"equifier_pair", equifier_weight(), equifier_pair().F},
  };
}

}  // namespace pielift::testing
