#pragma once

// Small fixtures shared by the unit tests.

#include <string>
#include <vector>

#include "pielift/fincat.hpp"

namespace pielift::testing {

/// Two objects with mutually inverse arrows i : 0 → 1, j : 1 → 0.
inline Cat iso_category() {
  static const Cat c = FinCategory::build(
      category_data("I", {"0", "1"}, {{"i", "0", "1"}, {"j", "1", "0"}},
                    {{"j", "i", "id_0"}, {"i", "j", "id_1"}}));
  return c;
}

/// Two parallel arrows p, q : 0 → 1.
inline Cat parallel_pair() {
  static const Cat c = FinCategory::build(
      category_data("P", {"0", "1"}, {{"p", "0", "1"}, {"q", "0", "1"}}, {}));
  return c;
}

/// 0 → 1 → 2.
inline Cat three() {
  static const Cat c = FinCategory::build(category_data(
      "3", {"0", "1", "2"}, {{"u", "0", "1"}, {"v", "1", "2"}, {"w", "0", "2"}},
      {{"v", "u", "w"}}));
  return c;
}

/// One object with an idempotent e.
inline Cat idempotent() {
  static const Cat c = FinCategory::build(
      category_data("Idem", {"*"}, {{"e", "*", "*"}}, {{"e", "e", "e"}}));
  return c;
}

/// One object with an involution s.
inline Cat involution() {
  static const Cat c = FinCategory::build(
      category_data("Z2", {"*"}, {{"s", "*", "*"}}, {{"s", "s", "id_*"}}));
  return c;
}

inline std::vector<Cat> small_corpus() {
  return {terminal_category(), walking_arrow(), discrete_category(2),
          iso_category(),      parallel_pair(), idempotent(),
          involution(),        three()};
}

/// Counts functors by trying every object and arrow assignment.
inline int brute_force_functor_count(const Cat& c, const Cat& d) {
  const int n = c->object_count();
  const int m = c->arrow_count();
  std::vector<int> obj(n, 0), arr(m, 0);
  int count = 0;
  auto next = [](std::vector<int>& v, int base) {
    for (std::size_t i = v.size(); i-- > 0;) {
      if (++v[i] < base) return true;
      v[i] = 0;
    }
    return false;
  };
  do {
    std::fill(arr.begin(), arr.end(), 0);
    do {
      bool ok = true;
      for (int a = 0; a < m && ok; ++a)
        ok = d->src(arr[a]) == obj[c->src(a)] && d->tgt(arr[a]) == obj[c->tgt(a)];
      for (int x = 0; x < n && ok; ++x)
        ok = arr[c->identity(x)] == d->identity(obj[x]);
      for (int g = 0; g < m && ok; ++g)
        for (int f = 0; f < m && ok; ++f)
          if (c->composable(g, f))
            ok = arr[c->compose(g, f)] == d->compose(arr[g], arr[f]);
      if (ok) ++count;
    } while (m > 0 && next(arr, d->arrow_count()));
  } while (n > 0 && next(obj, d->object_count()));
  return count;
}

}  // namespace pielift::testing
