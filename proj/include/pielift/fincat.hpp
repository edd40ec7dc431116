#pragma once

// Finite categories given by explicit tables, together with functors, natural
// transformations and the three limit primitives used throughout the engine:
// products, inserters and equifiers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pielift/diagnostics.hpp"

namespace pielift {

struct ArrowDecl {
  std::string name;
  int src = -1;
  int tgt = -1;

  bool operator==(const ArrowDecl&) const = default;
};

/// `second ∘ first = result`, all arrow indices.
struct CompositeDecl {
  int second = -1;
  int first = -1;
  int result = -1;

  bool operator==(const CompositeDecl&) const = default;
};

/// Raw, unvalidated table form of a finite category. `identity[x]` is the
/// index of the identity arrow on object x (or -1 when missing). The
/// composition table must list every composable pair, identities included.
struct CategoryData {
  std::string name;
  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;
  std::vector<int> identity;
  std::vector<CompositeDecl> composites;
};

Diagnostics validate_category(const CategoryData& raw);

struct ArrowSpec {
  std::string name;
  std::string src;
  std::string tgt;
};

struct CompositeSpec {
  std::string second;
  std::string first;
  std::string result;
};

/// Table data from names. Adds an identity `id_<x>` for every object and the
/// composites involving an identity; every other composable pair must be
/// listed. Unknown names become -1 and are reported by validate_category.
CategoryData category_data(std::string name, std::vector<std::string> objects,
                           const std::vector<ArrowSpec>& arrows,
                           const std::vector<CompositeSpec>& composites);

class FinCategory;
using Cat = std::shared_ptr<const FinCategory>;

/// A validated finite category. Immutable; shared through `Cat`.
class FinCategory {
 public:
  /// Validates `raw` and indexes it. Throws ValidationError.
  static Cat build(const CategoryData& raw);

  /// Builds from trusted generated data: `compose(g, f)` is called once for
  /// every composable pair. No law checking is done here; callers producing
  /// constructions are covered by tests that run validate_category on them.
  static Cat assemble(std::string name, std::vector<std::string> objects,
                      std::vector<ArrowDecl> arrows, std::vector<int> identity,
                      const std::function<int(int, int)>& compose);

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(int x) const { return objects_[x]; }
  const std::string& arrow_name(int a) const { return arrows_[a].name; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<ArrowDecl>& arrows() const { return arrows_; }
  int src(int a) const { return arrows_[a].src; }
  int tgt(int a) const { return arrows_[a].tgt; }
  int identity(int x) const { return identity_[x]; }
  bool is_identity(int a) const { return identity_[src(a)] == a; }

  /// g ∘ f; requires tgt(f) == src(g).
  int compose(int g, int f) const {
    return table_[offset_[g] + local_in_[f]];
  }
  bool composable(int g, int f) const { return tgt(f) == src(g); }

  /// Arrows x → y in declaration order.
  std::span<const int> hom(int x, int y) const {
    const auto k = static_cast<std::size_t>(x) * objects_.size() + y;
    return {hom_arrows_.data() + hom_offset_[k],
            hom_arrows_.data() + hom_offset_[k + 1]};
  }

  std::optional<int> inverse(int a) const;
  bool is_iso(int a) const { return inverse(a).has_value(); }

  int find_object(std::string_view name) const;
  int find_arrow(std::string_view name) const;

  /// Table form, with composites listed for every composable pair.
  CategoryData data() const;

  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Optional human-readable description of generated objects/arrows
  /// (canonical tuples of constituent ids); empty for declared categories.
  const std::vector<std::string>& object_provenance() const {
    return object_provenance_;
  }
  const std::vector<std::string>& arrow_provenance() const {
    return arrow_provenance_;
  }
  Cat with_provenance(std::vector<std::string> objects,
                      std::vector<std::string> arrows) const;
  Cat renamed(std::string name) const;

 private:
  friend bool same_category(const FinCategory& a, const FinCategory& b);

  FinCategory() = default;
  void index();
  void compute_fingerprint();

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<ArrowDecl> arrows_;
  std::vector<int> identity_;

  std::vector<std::vector<int>> in_;  // arrows by target
  std::vector<int> local_in_;         // position of an arrow in in_[tgt]
  std::vector<std::size_t> offset_;   // start of g's row in table_
  std::vector<int> table_;
  std::vector<std::size_t> hom_offset_;
  std::vector<int> hom_arrows_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> arrow_index_;
  std::vector<std::string> object_provenance_;
  std::vector<std::string> arrow_provenance_;
  std::uint64_t fingerprint_ = 0;
};

/// Structural equality: same object/arrow names and the same tables.
bool same_category(const FinCategory& a, const FinCategory& b);
inline bool same_category(const Cat& a, const Cat& b) {
  return a == b || same_category(*a, *b);
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct Functor {
  Cat dom;
  Cat cod;
  std::vector<int> on_objects;
  std::vector<int> on_arrows;

  int operator()(int x) const { return on_objects[x]; }
  int arrow(int a) const { return on_arrows[a]; }
};

bool operator==(const Functor& f, const Functor& g);

Diagnostics validate_functor(const Functor& f);
Functor identity_functor(const Cat& c);
/// g ∘ f
Functor compose(const Functor& g, const Functor& f);
/// The functor from the terminal category picking out object x.
Functor point(const Cat& terminal, const Cat& c, int x);
Functor constant_functor(const Cat& dom, const Cat& cod, int x);

struct NatTrans {
  Functor dom;
  Functor cod;
  std::vector<int> components;

  int operator[](int x) const { return components[x]; }
};

bool operator==(const NatTrans& a, const NatTrans& b);

Diagnostics validate_natural(const NatTrans& n);
NatTrans identity_natural(const Functor& f);
/// b ∘ a (vertical); requires a.cod == b.dom.
NatTrans vcompose(const NatTrans& b, const NatTrans& a);
/// h · a
NatTrans whisker(const Functor& h, const NatTrans& a);
/// a · k
NatTrans whisker(const NatTrans& a, const Functor& k);
bool is_identity(const NatTrans& n);
bool is_invertible(const NatTrans& n);
std::optional<NatTrans> inverse(const NatTrans& n);

/// Classes of 2-cells of Cat: identities, invertibles, everything.
enum class CellClass { Strict, Pseudo, Lax };

bool contains(CellClass c, const NatTrans& n);
std::string_view to_string(CellClass c);
std::optional<CellClass> parse_cell_class(std::string_view s);

// ---------------------------------------------------------------------------
// Standard small categories

Cat terminal_category();
/// 0 → 1 with arrow `u`.
Cat walking_arrow();
/// i : 0 → 1 and its inverse j.
Cat walking_iso();
Cat discrete_category(int n, std::string name = {});

// ---------------------------------------------------------------------------
// Limits by enumeration

struct ProductResult {
  Cat cat;
  std::vector<Functor> projections;
};

/// Empty `factors` yields the terminal category.
ProductResult product(std::span<const Cat> factors);

/// The functor into a product induced by a family of functors.
Functor pair_functors(const ProductResult& p, const Cat& dom,
                      std::span<const Functor> legs);

struct InserterResult {
  Cat cat;
  Functor projection;
  /// cells[i]: fs[i] ∘ projection ⇒ gs[i] ∘ projection
  std::vector<NatTrans> cells;
};

InserterResult inserter(const Functor& f, const Functor& g);
/// Inserter of a family of parallel pairs with common domain; equivalently the
/// inserter into the product of the codomains, without materializing it.
InserterResult inserter(std::span<const Functor> fs,
                        std::span<const Functor> gs);

struct EquifierResult {
  Cat cat;
  Functor inclusion;
};

EquifierResult equifier(const NatTrans& a, const NatTrans& b);
/// Joint equifier of a family of parallel pairs with common domain.
EquifierResult equifier(std::span<const std::pair<NatTrans, NatTrans>> pairs);

/// Full subcategory on the given objects (kept in the given order).
EquifierResult full_subcategory(const Cat& c, std::span<const int> objects,
                                std::string name);

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Functor> enumerate_functors(const Cat& c, const Cat& d);
std::vector<NatTrans> enumerate_naturals(const Functor& f, const Functor& g);

struct FunctorCategory {
  Cat cat;
  std::vector<Functor> functors;
  std::vector<NatTrans> naturals;
};

FunctorCategory functor_category(const Cat& c, const Cat& d);

/// Bijective on objects and on every hom-set.
bool iso_check(const Functor& f);

/// Searches for some isomorphism c ≅ d.
std::optional<Functor> find_isomorphism(const Cat& c, const Cat& d);

/// One category from each isomorphism class with at most `max_objects`
/// objects and `max_arrows` arrows (identities included), by object count,
/// then arrow count. The empty category comes first.
std::vector<Cat> small_categories(int max_objects, int max_arrows);

// ---------------------------------------------------------------------------
// Construction helper shared by generated categories.

/// Accumulates generated objects/arrows keyed by canonical tuples and assigns
/// fresh flat ids (`o0`, `a0`, ...) in insertion order.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name) : name_(std::move(name)) {}

  int add_object(std::string provenance);
  int add_arrow(int src, int tgt, std::string provenance);
  void set_identity(int object, int arrow);
  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  Cat finish(const std::function<int(int, int)>& compose) const;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<ArrowDecl> arrows_;
  std::vector<int> identity_;
  std::vector<std::string> object_prov_;
  std::vector<std::string> arrow_prov_;
};

std::string tuple_string(std::span<const int> xs);

/// Calls `fn` on every tuple in the odometer order (last coordinate fastest).
void for_each_tuple(
    std::span<const std::size_t> sizes,
    const std::function<void(const std::vector<std::size_t>&)>& fn);

}  // namespace pielift
