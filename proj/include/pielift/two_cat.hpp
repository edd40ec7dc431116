#pragma once

// Finite strict 2-categories, marked families Σ of 1-cells, PIE analysis of
// a pair (A, Σ), and 2-functors into finite categories.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pielift/fincat.hpp"

namespace pielift {

/// A 2-cell between the 1-cells `src` and `tgt` (indices).
struct TwoCellDecl {
  std::string name;
  int src = -1;
  int tgt = -1;

  bool operator==(const TwoCellDecl&) const = default;
};

/// `one_cell · two_cell = result` (left) or `two_cell · one_cell = result`
/// (right), depending on the table it lives in.
struct WhiskerDecl {
  int one_cell = -1;
  int two_cell = -1;
  int result = -1;

  bool operator==(const WhiskerDecl&) const = default;
};

struct TwoCategoryData {
  std::string name;
  std::vector<std::string> objects;
  std::vector<ArrowDecl> one_cells;
  std::vector<int> one_identity;
  std::vector<CompositeDecl> one_composites;
  std::vector<TwoCellDecl> two_cells;
  std::vector<int> two_identity;  // identity 2-cell per 1-cell
  std::vector<CompositeDecl> vcomposites;
  std::vector<WhiskerDecl> left_whiskers;
  std::vector<WhiskerDecl> right_whiskers;
};

Diagnostics validate_two_category(const TwoCategoryData& raw);

struct TwoCellSpec {
  std::string name;
  std::string src;
  std::string tgt;
};

struct WhiskerSpec {
  std::string one_cell;
  std::string two_cell;
  std::string result;
};

/// Table data from names. Identity 1-cells are `id_<object>`, identity
/// 2-cells `id_<1-cell>`. Composites and whiskers involving an identity are
/// filled in; everything else must be listed.
TwoCategoryData two_category_data(
    std::string name, std::vector<std::string> objects,
    const std::vector<ArrowSpec>& one_cells,
    const std::vector<CompositeSpec>& one_composites,
    const std::vector<TwoCellSpec>& two_cells = {},
    const std::vector<CompositeSpec>& vcomposites = {},
    const std::vector<WhiskerSpec>& left_whiskers = {},
    const std::vector<WhiskerSpec>& right_whiskers = {});

class TwoCategory;
using TwoCat = std::shared_ptr<const TwoCategory>;

class TwoCategory {
 public:
  /// Validates and indexes. Throws ValidationError.
  static TwoCat build(const TwoCategoryData& raw);

  /// Trusted generated data: the callbacks are queried once for every
  /// composable pair and must return 2-cell indices.
  static TwoCat assemble(
      Cat skeleton, std::vector<TwoCellDecl> cells,
      std::vector<int> cell_identity,
      const std::function<int(int, int)>& vcompose,
      const std::function<int(int, int)>& left_whisker,
      const std::function<int(int, int)>& right_whisker);

  /// Only identity 2-cells.
  static TwoCat locally_discrete(const Cat& c);

  const std::string& name() const { return skeleton_->name(); }
  /// Objects and 1-cells.
  const Cat& skeleton() const { return skeleton_; }
  /// 1-cells as objects, 2-cells as arrows, vertical composition.
  const Cat& vertical() const { return vertical_; }

  int object_count() const { return skeleton_->object_count(); }
  int one_cell_count() const { return skeleton_->arrow_count(); }
  int two_cell_count() const { return vertical_->arrow_count(); }

  const std::string& object_name(int x) const { return skeleton_->object_name(x); }
  const std::string& one_cell_name(int f) const { return skeleton_->arrow_name(f); }
  const std::string& two_cell_name(int a) const { return vertical_->arrow_name(a); }

  int src(int f) const { return skeleton_->src(f); }
  int tgt(int f) const { return skeleton_->tgt(f); }
  int identity(int x) const { return skeleton_->identity(x); }
  bool is_identity(int f) const { return skeleton_->is_identity(f); }
  int compose(int g, int f) const { return skeleton_->compose(g, f); }
  bool composable(int g, int f) const { return skeleton_->composable(g, f); }
  std::span<const int> one_cells(int x, int y) const { return skeleton_->hom(x, y); }

  int cell_src(int a) const { return vertical_->src(a); }
  int cell_tgt(int a) const { return vertical_->tgt(a); }
  int cell_identity(int f) const { return vertical_->identity(f); }
  bool is_identity_cell(int a) const { return vertical_->is_identity(a); }
  /// b ∘ a
  int vcompose(int b, int a) const { return vertical_->compose(b, a); }
  std::span<const int> two_cells(int f, int g) const { return vertical_->hom(f, g); }

  /// h · a, or -1 when tgt(cell_src(a)) != src(h).
  int whisker(int h, int a) const { return left_[index(h, a)]; }
  /// a · k, or -1 when tgt(k) != src(cell_src(a)).
  int whisker_right(int a, int k) const { return right_[index(k, a)]; }
  /// Horizontal composite b * a = (b · cod a) ∘ (dom b · a).
  int hcompose(int b, int a) const;

  int find_object(std::string_view n) const { return skeleton_->find_object(n); }
  int find_one_cell(std::string_view n) const { return skeleton_->find_arrow(n); }
  int find_two_cell(std::string_view n) const { return vertical_->find_arrow(n); }

  TwoCategoryData data() const;

 private:
  TwoCategory() = default;
  std::size_t index(int f, int a) const {
    return static_cast<std::size_t>(f) * two_cell_count() + a;
  }

  Cat skeleton_;
  Cat vertical_;
  std::vector<int> left_;
  std::vector<int> right_;
};

// ---------------------------------------------------------------------------
// Marked families

/// A set of 1-cells, kept sorted.
struct SigmaFamily {
  std::vector<int> cells;

  bool contains(int f) const;
  bool operator==(const SigmaFamily&) const = default;
};

SigmaFamily identities_only(const TwoCategory& a);
SigmaFamily all_one_cells(const TwoCategory& a);
/// Members by name plus all identities. Throws std::invalid_argument on an
/// unknown name.
SigmaFamily sigma_from_names(const TwoCategory& a,
                             const std::vector<std::string>& names);

Diagnostics validate_sigma_family(const TwoCategory& a, const SigmaFamily& s);

struct PieStructure {
  /// Components in order of their first object; objects ascending.
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
  /// initial[c] is the chosen A₀ of component c.
  std::vector<int> initial;
  /// canonical[A] = f_A : A₀ → A.
  std::vector<int> canonical;

  int base(int a) const { return initial[component_of[a]]; }
  /// The chosen initial objects, ascending.
  std::vector<int> initials() const;
};

struct NotPie {
  std::vector<int> component;
  std::string reason;
};

using PieAnalysis = std::variant<PieStructure, NotPie>;

PieAnalysis pie_analysis(const TwoCategory& a, const SigmaFamily& s);

// ---------------------------------------------------------------------------
// 2-functors

/// A strict 2-functor A → Cat with finite categories as values.
struct TwoFunctor {
  TwoCat dom;
  std::vector<Cat> on_objects;
  std::vector<Functor> on_one;
  std::vector<NatTrans> on_two;

  const Cat& operator()(int x) const { return on_objects[x]; }
  const Functor& one(int f) const { return on_one[f]; }
  const NatTrans& two(int a) const { return on_two[a]; }
};

Diagnostics validate_two_functor(const TwoFunctor& f);

/// A partial assignment, indexed like the domain's tables.
struct TwoFunctorSpec {
  std::vector<std::optional<Cat>> objects;
  std::vector<std::optional<Functor>> ones;
  std::vector<std::optional<NatTrans>> twos;
};

/// Fills identities, then every unassigned cell that is a composite or
/// whisker of assigned ones, and validates the result. Throws
/// ValidationError when something stays unassigned or a law fails.
TwoFunctor complete_two_functor(const TwoCat& a, TwoFunctorSpec spec);

/// A strict 2-functor between finite 2-categories, as index maps.
struct TwoMap {
  TwoCat dom;
  TwoCat cod;
  std::vector<int> on_objects;
  std::vector<int> on_one;
  std::vector<int> on_two;
};

Diagnostics validate_two_map(const TwoMap& p);

/// F ∘ P
TwoFunctor precompose(const TwoFunctor& f, const TwoMap& p);

}  // namespace pielift
