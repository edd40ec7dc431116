#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pielift/two_cat.hpp"

namespace pielift {

bool SigmaFamily::contains(int f) const {
  return std::binary_search(cells.begin(), cells.end(), f);
}

SigmaFamily identities_only(const TwoCategory& a) {
  SigmaFamily s;
  for (int x = 0; x < a.object_count(); ++x) s.cells.push_back(a.identity(x));
  std::sort(s.cells.begin(), s.cells.end());
  return s;
}

SigmaFamily all_one_cells(const TwoCategory& a) {
  SigmaFamily s;
  s.cells.resize(a.one_cell_count());
  std::iota(s.cells.begin(), s.cells.end(), 0);
  return s;
}

SigmaFamily sigma_from_names(const TwoCategory& a,
                             const std::vector<std::string>& names) {
  SigmaFamily s = identities_only(a);
  for (const auto& n : names) {
    const int f = a.find_one_cell(n);
    if (f < 0) throw std::invalid_argument("unknown 1-cell in sigma: " + n);
    s.cells.push_back(f);
  }
  std::sort(s.cells.begin(), s.cells.end());
  s.cells.erase(std::unique(s.cells.begin(), s.cells.end()), s.cells.end());
  return s;
}

Diagnostics validate_sigma_family(const TwoCategory& a, const SigmaFamily& s) {
  Diagnostics d;
  for (int f : s.cells)
    if (f < 0 || f >= a.one_cell_count()) {
      add(d, "sigma-range", "1-cell #" + std::to_string(f));
      return d;
    }
  for (int x = 0; x < a.object_count(); ++x)
    if (!s.contains(a.identity(x)))
      add(d, "sigma-identity", "identity not in Σ: " + a.one_cell_name(a.identity(x)));
  for (int g : s.cells)
    for (int f : s.cells)
      if (a.composable(g, f) && !s.contains(a.compose(g, f)))
        add(d, "sigma-closure", a.one_cell_name(g) + " . " + a.one_cell_name(f) +
                                    " = " + a.one_cell_name(a.compose(g, f)) +
                                    " is not in Σ");
  return d;
}

std::vector<int> PieStructure::initials() const {
  auto out = initial;
  std::sort(out.begin(), out.end());
  return out;
}

PieAnalysis pie_analysis(const TwoCategory& a, const SigmaFamily& s) {
  const int n = a.object_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f : s.cells) {
    const int r1 = root(a.src(f)), r2 = root(a.tgt(f));
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }

  PieStructure p;
  p.component_of.assign(n, -1);
  p.canonical.assign(n, -1);
  std::vector<int> comp_of_root(n, -1);
  for (int x = 0; x < n; ++x) {
    const int r = root(x);
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = static_cast<int>(p.components.size());
      p.components.emplace_back();
    }
    p.component_of[x] = comp_of_root[r];
    p.components[comp_of_root[r]].push_back(x);
  }

  auto sigma_hom = [&](int x, int y) {
    std::vector<int> out;
    for (int f : a.one_cells(x, y))
      if (s.contains(f)) out.push_back(f);
    return out;
  };

  for (const auto& comp : p.components) {
    int chosen = -1;
    for (int x : comp) {
      bool ok = true;
      for (int y : comp)
        if (sigma_hom(x, y).size() != 1) {
          ok = false;
          break;
        }
      if (ok) {
        chosen = x;
        break;
      }
    }
    if (chosen < 0) {
      std::string names;
      for (int x : comp) names += (names.empty() ? "" : ", ") + a.object_name(x);
      return NotPie{comp, "component {" + names +
                              "} has no object with exactly one Σ-arrow to each "
                              "of its objects"};
    }
    p.initial.push_back(chosen);
    for (int y : comp) p.canonical[y] = sigma_hom(chosen, y).front();
  }
  return p;
}

}  // namespace pielift
