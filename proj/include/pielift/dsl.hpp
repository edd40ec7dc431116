#pragma once

// Text format for categories, 2-categories with a marked family, functors,
// naturals, diagrams, weights and algebra diagrams.
//
//   category C { objects: a, b; arrows: u: a -> b; compose: v.u = w; }
//   twocat A { objects: ...; arrows: ...; compose: ...;
//              twocells: al: f => g; vcompose: be.al = ga;
//              whisker: h.al = x, al.k = y; sigma: f; }
//   functor F: C -> D { objects: a |-> x; arrows: u |-> v; }
//   natural n: F => G * H { components: a |-> u; }
//   diagram D: A -> cat { A |-> C; f |-> F; al |-> n; }
//   weight W: A -> cat { ... }
//   algebra X: D monad pointed omega l { A |-> a; f |-> fbar; }
//
// `#` starts a comment. Identities `id_<x>` and everything forced by the
// unit laws are implicit; every other composite must be listed. Category
// references may apply a monad, `pointed(C)`; functor expressions compose
// with ` * ` (right to left; `*` inside a word is part of the name, as in
// `id_*`) and apply a monad with `m(F)`. Diagrams, weights
// and algebra diagrams assign generators; composites are computed.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pielift/algebras.hpp"
#include "pielift/weights.hpp"

namespace pielift::dsl {

struct SourceLoc {
  std::string file;
  int line = 0;
  int column = 0;
};

std::string to_string(const SourceLoc& loc);

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc loc, const std::string& message);
  const SourceLoc& location() const noexcept { return loc_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourceLoc loc_;
  std::string message_;
};

struct Name {
  std::string text;
  SourceLoc loc;
};

/// `C` or `m(C)`.
struct CatRef {
  std::string monad;
  Name name;
};

/// A name, `m(e)`, or `e₁ * e₂ * …` (applied right to left).
struct FunctorExpr {
  enum class Kind { Name, Apply, Compose } kind = Kind::Name;
  Name name;  // functor name, or monad for Apply
  std::vector<FunctorExpr> args;
};

struct Triple {
  Name a, b, c;  // `a: b -> c`, `a.b = c`, `a: b => c`
};

struct Mapping {
  Name from, to;
};

struct CategoryDecl {
  Name name;
  std::vector<Name> objects;
  std::vector<Triple> arrows;
  std::vector<Triple> composites;
};

struct TwoCatDecl {
  CategoryDecl skeleton;
  std::vector<Triple> twocells;
  std::vector<Triple> vcomposites;
  std::vector<Triple> whiskers;
  std::vector<Name> sigma;
};

struct FunctorDecl {
  Name name;
  CatRef dom, cod;
  std::vector<Mapping> objects;
  std::vector<Mapping> arrows;
};

struct NaturalDecl {
  Name name;
  FunctorExpr dom, cod;
  std::vector<Mapping> components;
};

/// Diagrams and weights.
struct DiagramDecl {
  bool weight = false;
  Name name;
  Name shape;
  /// As written; sorted into the three lists below when resolved.
  std::vector<std::pair<Name, CatRef>> items;
  std::vector<std::pair<Name, CatRef>> objects;
  std::vector<Mapping> arrows;
  std::vector<Mapping> twocells;
};

struct AlgebraDecl {
  Name name;
  Name diagram;
  Name monad;
  std::optional<Name> omega;
  std::vector<Mapping> items;
  std::vector<Mapping> objects;
  std::vector<Mapping> arrows;
};

enum class EntityKind { Category, TwoCategory, Functor, Natural, Diagram, Weight, Algebra };

std::string_view to_string(EntityKind k);

struct ResolvedAlgebra {
  Monad monad;
  std::optional<CellClass> omega;
  AlgebraDiagram diagram;
};

/// Everything parsed from one or more files, resolved and validated.
class Workspace {
 public:
  struct Entry {
    EntityKind kind;
    std::string name;
    SourceLoc loc;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  /// Digest inputs: file name and raw text, in load order.
  const std::vector<std::pair<std::string, std::string>>& sources() const { return sources_; }

  std::optional<EntityKind> kind_of(const std::string& name) const;

  const Cat& category(const std::string& n) const { return categories_.at(n); }
  const TwoCat& twocat(const std::string& n) const { return twocats_.at(n); }
  const SigmaFamily& sigma(const std::string& n) const { return sigmas_.at(n); }
  const Functor& functor(const std::string& n) const { return functors_.at(n); }
  const NatTrans& natural(const std::string& n) const { return naturals_.at(n); }
  /// Diagrams and weights.
  const TwoFunctor& diagram(const std::string& n) const { return diagrams_.at(n); }
  /// The 2-category a diagram or weight is defined on.
  const std::string& shape_of(const std::string& n) const { return shapes_.at(n); }
  const ResolvedAlgebra& algebra(const std::string& n) const { return algebras_.at(n); }
  /// The diagram an algebra diagram lies over.
  const std::string& base_of(const std::string& n) const { return bases_.at(n); }

  std::vector<std::string> names(EntityKind k) const;

  friend class Loader;
  friend void parse_into(Workspace& w, const std::string& text, const std::string& file);
  friend std::string print_workspace(const Workspace& w);

 private:
  std::vector<Entry> entries_;
  std::vector<std::pair<std::string, std::string>> sources_;
  std::map<std::string, EntityKind> kinds_;

  std::map<std::string, Cat> categories_;
  std::map<std::string, TwoCat> twocats_;
  std::map<std::string, SigmaFamily> sigmas_;
  std::map<std::string, Functor> functors_;
  std::map<std::string, NatTrans> naturals_;
  std::map<std::string, TwoFunctor> diagrams_;
  std::map<std::string, std::string> shapes_;
  std::map<std::string, ResolvedAlgebra> algebras_;
  std::map<std::string, std::string> bases_;

  // Declarations as parsed, for printing.
  std::map<std::string, CategoryDecl> category_decls_;
  std::map<std::string, TwoCatDecl> twocat_decls_;
  std::map<std::string, FunctorDecl> functor_decls_;
  std::map<std::string, NaturalDecl> natural_decls_;
  std::map<std::string, DiagramDecl> diagram_decls_;
  std::map<std::string, AlgebraDecl> algebra_decls_;
};

/// Parses `text` and adds its declarations to `w`; names from earlier
/// inputs are in scope. Throws ParseError, leaving `w` unspecified.
void parse_into(Workspace& w, const std::string& text, const std::string& file);
Workspace parse_workspace(const std::string& text, const std::string& file = "<input>");
/// Reads and parses the files in order. Throws ParseError, and
/// std::runtime_error on I/O failure.
Workspace load_files(const std::vector<std::string>& paths);
/// The corpus files (.2cat, .diag, .wt, .alg) of a directory, sorted by
/// extension in that order, then by name.
std::vector<std::string> corpus_files(const std::string& dir);

/// Canonical text; reparses to an equal workspace.
std::string print_workspace(const Workspace& w);

/// Same entries in the same order, with equal resolved values.
bool equivalent(const Workspace& a, const Workspace& b);

}  // namespace pielift::dsl
