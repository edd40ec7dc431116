#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "pielift/dsl.hpp"

namespace pielift::dsl {

std::string to_string(const SourceLoc& loc) {
  return loc.file + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

ParseError::ParseError(SourceLoc loc, const std::string& message)
    : std::runtime_error(to_string(loc) + ": " + message),
      loc_(std::move(loc)),
      message_(message) {}

std::string_view to_string(EntityKind k) {
  switch (k) {
    case EntityKind::Category: return "category";
    case EntityKind::TwoCategory: return "twocat";
    case EntityKind::Functor: return "functor";
    case EntityKind::Natural: return "natural";
    case EntityKind::Diagram: return "diagram";
    case EntityKind::Weight: return "weight";
    case EntityKind::Algebra: return "algebra";
  }
  return "?";
}

std::optional<EntityKind> Workspace::kind_of(const std::string& name) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Workspace::names(EntityKind k) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.kind == k) out.push_back(e.name);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
  enum class Kind { Ident, Punct, End } kind;
  std::string text;
  SourceLoc loc;
};

bool ident_char(unsigned char c) {
  if (c >= 0x80 || std::isalnum(c)) return true;
  return std::strchr("_'+!?@$%&~^", c) != nullptr;
}

std::vector<Token> lex(const std::string& text, const std::string& file) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto here = [&] { return SourceLoc{file, line, col}; };
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      const auto c = static_cast<unsigned char>(text[i]);
      if (c == '\n') {
        ++line;
        col = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const auto loc = here();
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() &&
             (ident_char(static_cast<unsigned char>(text[j])) || text[j] == '*'))
        ++j;
      out.push_back({Token::Kind::Ident, text.substr(i, j - i), loc});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const char* p : {"|->", "->", "=>", "{", "}", "(", ")", ";", ":", ",", ".", "=", "*"}) {
      const std::size_t n = std::strlen(p);
      if (text.compare(i, n, p) == 0) {
        out.push_back({Token::Kind::Punct, p, loc});
        advance(n);
        matched = true;
        break;
      }
    }
    if (!matched)
      throw ParseError(loc, "unexpected character '" + std::string(1, text[i]) + "'");
  }
  out.push_back({Token::Kind::End, "", here()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }

  bool is(const char* p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == p;
  }
  bool is_word(const char* w) const {
    return peek().kind == Token::Kind::Ident && peek().text == w;
  }

  void expect(const char* p) {
    if (!is(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  void expect_word(const char* w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "'");
    ++pos_;
  }
  bool accept(const char* p) {
    if (!is(p)) return false;
    ++pos_;
    return true;
  }

  Name name() {
    const auto& t = peek();
    if (t.kind == Token::Kind::Ident || (t.kind == Token::Kind::Punct && t.text == "*")) {
      ++pos_;
      return Name{t.text, t.loc};
    }
    fail("expected a name");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(t.loc, msg + (t.kind == Token::Kind::End ? " at end of input"
                                                              : ", found '" + t.text + "'"));
  }

  // `key: items;`, where `item` parses one element. Empty lists allowed.
  template <class F>
  void list(F item) {
    if (accept(";")) return;
    do item();
    while (accept(","));
    expect(";");
  }

  std::string section() {
    auto n = name();
    expect(":");
    return n.text;
  }

  Triple arrow_triple(const char* arrow) {
    Triple t;
    t.a = name();
    expect(":");
    t.b = name();
    expect(arrow);
    t.c = name();
    return t;
  }

  Triple dot_triple() {
    Triple t;
    t.a = name();
    expect(".");
    t.b = name();
    expect("=");
    t.c = name();
    return t;
  }

  Mapping mapping() {
    Mapping m;
    m.from = name();
    expect("|->");
    m.to = name();
    return m;
  }

  CatRef cat_ref() {
    CatRef r;
    auto n = name();
    if (accept("(")) {
      r.monad = n.text;
      r.name = name();
      expect(")");
    } else {
      r.name = n;
    }
    return r;
  }

  FunctorExpr functor_expr() {
    FunctorExpr first = functor_term();
    if (!is("*")) return first;
    FunctorExpr e;
    e.kind = FunctorExpr::Kind::Compose;
    e.name = first.name;
    e.args.push_back(std::move(first));
    while (accept("*")) e.args.push_back(functor_term());
    return e;
  }

  FunctorExpr functor_term() {
    FunctorExpr e;
    e.name = name();
    if (accept("(")) {
      e.kind = FunctorExpr::Kind::Apply;
      e.args.push_back(functor_expr());
      expect(")");
    }
    return e;
  }

  void skeleton_section(const std::string& key, CategoryDecl& d) {
    if (key == "objects") {
      list([&] { d.objects.push_back(name()); });
    } else if (key == "arrows") {
      list([&] { d.arrows.push_back(arrow_triple("->")); });
    } else if (key == "compose") {
      list([&] { d.composites.push_back(dot_triple()); });
    } else {
      --pos_;
      --pos_;
      fail("unknown section");
    }
  }

  CategoryDecl category() {
    CategoryDecl d;
    d.name = name();
    expect("{");
    while (!accept("}")) skeleton_section(section(), d);
    return d;
  }

  TwoCatDecl twocat() {
    TwoCatDecl d;
    d.skeleton.name = name();
    expect("{");
    while (!accept("}")) {
      const auto key = section();
      if (key == "twocells")
        list([&] { d.twocells.push_back(arrow_triple("=>")); });
      else if (key == "vcompose")
        list([&] { d.vcomposites.push_back(dot_triple()); });
      else if (key == "whisker")
        list([&] { d.whiskers.push_back(dot_triple()); });
      else if (key == "sigma")
        list([&] { d.sigma.push_back(name()); });
      else
        skeleton_section(key, d.skeleton);
    }
    return d;
  }

  FunctorDecl functor() {
    FunctorDecl d;
    d.name = name();
    expect(":");
    d.dom = cat_ref();
    expect("->");
    d.cod = cat_ref();
    expect("{");
    while (!accept("}")) {
      const auto key = section();
      if (key == "objects")
        list([&] { d.objects.push_back(mapping()); });
      else if (key == "arrows")
        list([&] { d.arrows.push_back(mapping()); });
      else
        back_and_fail();
    }
    return d;
  }

  NaturalDecl natural() {
    NaturalDecl d;
    d.name = name();
    expect(":");
    d.dom = functor_expr();
    expect("=>");
    d.cod = functor_expr();
    expect("{");
    while (!accept("}")) {
      if (section() != "components") back_and_fail();
      list([&] { d.components.push_back(mapping()); });
    }
    return d;
  }

  DiagramDecl diagram(bool weight) {
    DiagramDecl d;
    d.weight = weight;
    d.name = name();
    expect(":");
    d.shape = name();
    expect("->");
    expect_word("cat");
    expect("{");
    while (!accept("}")) {
      auto from = name();
      expect("|->");
      d.items.emplace_back(std::move(from), cat_ref());
      expect(";");
    }
    return d;
  }

  AlgebraDecl algebra() {
    AlgebraDecl d;
    d.name = name();
    expect(":");
    d.diagram = name();
    expect_word("monad");
    d.monad = name();
    if (is_word("omega")) {
      ++pos_;
      d.omega = name();
    }
    expect("{");
    while (!accept("}")) {
      d.items.push_back(mapping());
      expect(";");
    }
    return d;
  }

 private:
  [[noreturn]] void back_and_fail() {
    pos_ -= 2;
    fail("unknown section");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Resolution

class Loader {
 public:
  explicit Loader(Workspace& w) : w_(w) {}

  void declare(EntityKind k, const Name& n) {
    auto it = w_.kinds_.find(n.text);
    if (it != w_.kinds_.end()) {
      for (const auto& e : w_.entries_)
        if (e.name == n.text)
          throw ParseError(n.loc, "duplicate name '" + n.text + "', first declared at " +
                                      to_string(e.loc));
    }
    w_.kinds_[n.text] = k;
    w_.entries_.push_back({k, n.text, n.loc});
  }

  [[noreturn]] static void fail(const SourceLoc& loc, const std::string& msg) {
    throw ParseError(loc, msg);
  }

  static void fail_diagnostics(const Name& n, const std::string& what, const Diagnostics& d) {
    fail(n.loc, what + " '" + n.text + "' is invalid: " + pielift::to_string(d));
  }

  // Categories ---------------------------------------------------------------

  static void check_skeleton(const CategoryDecl& d) {
    std::map<std::string, int> objects;
    for (const auto& o : d.objects) {
      if (objects.count(o.text)) fail(o.loc, "duplicate object '" + o.text + "'");
      objects.emplace(o.text, static_cast<int>(objects.size()));
    }
    std::map<std::string, std::pair<std::string, std::string>> arrows;
    for (const auto& o : d.objects) arrows["id_" + o.text] = {o.text, o.text};
    for (const auto& a : d.arrows) {
      if (arrows.count(a.a.text)) fail(a.a.loc, "duplicate arrow '" + a.a.text + "'");
      for (const auto* e : {&a.b, &a.c})
        if (!objects.count(e->text)) fail(e->loc, "unknown object '" + e->text + "'");
      arrows[a.a.text] = {a.b.text, a.c.text};
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& c : d.composites) {
      for (const auto* e : {&c.a, &c.b, &c.c})
        if (!arrows.count(e->text)) fail(e->loc, "unknown arrow '" + e->text + "'");
      const auto& g = arrows[c.a.text];
      const auto& f = arrows[c.b.text];
      if (f.second != g.first)
        fail(c.a.loc, "'" + c.a.text + "' and '" + c.b.text + "' are not composable");
      const auto& r = arrows[c.c.text];
      if (r.first != f.first || r.second != g.second)
        fail(c.c.loc, "'" + c.c.text + "' does not go from " + f.first + " to " + g.second);
      if (!seen.insert({c.a.text, c.b.text}).second)
        fail(c.a.loc, "composite " + c.a.text + "." + c.b.text + " given twice");
    }
  }

  static CategoryData skeleton_data(const CategoryDecl& d) {
    std::vector<std::string> objects;
    for (const auto& o : d.objects) objects.push_back(o.text);
    std::vector<ArrowSpec> arrows;
    for (const auto& a : d.arrows) arrows.push_back({a.a.text, a.b.text, a.c.text});
    std::vector<CompositeSpec> comps;
    for (const auto& c : d.composites) comps.push_back({c.a.text, c.b.text, c.c.text});
    return category_data(d.name.text, std::move(objects), arrows, comps);
  }

  void add_category(CategoryDecl d) {
    declare(EntityKind::Category, d.name);
    check_skeleton(d);
    const auto data = skeleton_data(d);
    if (auto diag = validate_category(data); !diag.empty())
      fail_diagnostics(d.name, "category", diag);
    w_.categories_[d.name.text] = FinCategory::build(data);
    w_.category_decls_[d.name.text] = std::move(d);
  }

  void add_twocat(TwoCatDecl d) {
    const auto& n = d.skeleton.name;
    declare(EntityKind::TwoCategory, n);
    check_skeleton(d.skeleton);
    const auto sk = FinCategory::build(skeleton_data(d.skeleton));

    std::map<std::string, std::pair<int, int>> cells;  // name → (src, tgt) 1-cells
    for (int f = 0; f < sk->arrow_count(); ++f) cells["id_" + sk->arrow_name(f)] = {f, f};
    for (const auto& c : d.twocells) {
      if (cells.count(c.a.text)) fail(c.a.loc, "duplicate 2-cell '" + c.a.text + "'");
      const int s = sk->find_arrow(c.b.text), t = sk->find_arrow(c.c.text);
      if (s < 0) fail(c.b.loc, "unknown 1-cell '" + c.b.text + "'");
      if (t < 0) fail(c.c.loc, "unknown 1-cell '" + c.c.text + "'");
      if (sk->src(s) != sk->src(t) || sk->tgt(s) != sk->tgt(t))
        fail(c.a.loc, "'" + c.b.text + "' and '" + c.c.text + "' are not parallel");
      cells[c.a.text] = {s, t};
    }
    auto cell = [&](const Name& x) {
      auto it = cells.find(x.text);
      if (it == cells.end()) fail(x.loc, "unknown 2-cell '" + x.text + "'");
      return it->second;
    };
    for (const auto& v : d.vcomposites) {
      const auto b = cell(v.a), a = cell(v.b), r = cell(v.c);
      if (a.second != b.first)
        fail(v.a.loc, "'" + v.a.text + "' and '" + v.b.text + "' are not composable");
      if (r.first != a.first || r.second != b.second)
        fail(v.c.loc, "'" + v.c.text + "' has the wrong source or target");
    }
    std::vector<WhiskerSpec> left, right;
    for (const auto& x : d.whiskers) {
      cell(x.c);
      const bool a_one = sk->find_arrow(x.a.text) >= 0;
      const bool b_one = sk->find_arrow(x.b.text) >= 0;
      if (a_one && cells.count(x.b.text)) {
        left.push_back({x.a.text, x.b.text, x.c.text});
      } else if (cells.count(x.a.text) && b_one) {
        right.push_back({x.b.text, x.a.text, x.c.text});
      } else {
        fail(x.a.loc, "whisker needs a 1-cell and a 2-cell, got '" + x.a.text + "' and '" +
                          x.b.text + "'");
      }
    }
    std::vector<std::string> objects;
    for (const auto& o : d.skeleton.objects) objects.push_back(o.text);
    std::vector<ArrowSpec> ones;
    for (const auto& a : d.skeleton.arrows) ones.push_back({a.a.text, a.b.text, a.c.text});
    std::vector<CompositeSpec> comps, vcomps;
    for (const auto& c : d.skeleton.composites) comps.push_back({c.a.text, c.b.text, c.c.text});
    for (const auto& c : d.vcomposites) vcomps.push_back({c.a.text, c.b.text, c.c.text});
    std::vector<TwoCellSpec> twos;
    for (const auto& c : d.twocells) twos.push_back({c.a.text, c.b.text, c.c.text});
    const auto data =
        two_category_data(n.text, objects, ones, comps, twos, vcomps, left, right);
    if (auto diag = validate_two_category(data); !diag.empty())
      fail_diagnostics(n, "2-category", diag);
    auto a = TwoCategory::build(data);

    SigmaFamily sigma = identities_only(*a);
    for (const auto& s : d.sigma) {
      const int f = a->find_one_cell(s.text);
      if (f < 0) fail(s.loc, "unknown 1-cell '" + s.text + "' in sigma");
      sigma.cells.push_back(f);
    }
    std::sort(sigma.cells.begin(), sigma.cells.end());
    sigma.cells.erase(std::unique(sigma.cells.begin(), sigma.cells.end()), sigma.cells.end());
    w_.twocats_[n.text] = a;
    w_.sigmas_[n.text] = sigma;
    w_.twocat_decls_[n.text] = std::move(d);
  }

  // Functors and naturals ----------------------------------------------------

  Monad monad(const Name& n) const {
    auto t = find_monad(n.text);
    if (!t) fail(n.loc, "unknown monad '" + n.text + "'");
    return t;
  }

  Cat category(const CatRef& r) const {
    auto it = w_.categories_.find(r.name.text);
    if (it == w_.categories_.end()) fail(r.name.loc, "unknown category '" + r.name.text + "'");
    if (r.monad.empty()) return it->second;
    return monad(Name{r.monad, r.name.loc})->apply(it->second);
  }

  static void map_names(const std::vector<Mapping>& ms, const FinCategory& src,
                        const FinCategory& dst, bool objects, std::vector<int>& out) {
    const char* what = objects ? "object" : "arrow";
    for (const auto& m : ms) {
      const int x = objects ? src.find_object(m.from.text) : src.find_arrow(m.from.text);
      if (x < 0) fail(m.from.loc, std::string("unknown ") + what + " '" + m.from.text + "'");
      const int y = objects ? dst.find_object(m.to.text) : dst.find_arrow(m.to.text);
      if (y < 0) fail(m.to.loc, std::string("unknown ") + what + " '" + m.to.text + "'");
      if (out[x] >= 0) fail(m.from.loc, std::string(what) + " '" + m.from.text + "' mapped twice");
      out[x] = y;
    }
  }

  void add_functor(FunctorDecl d) {
    declare(EntityKind::Functor, d.name);
    const auto c = category(d.dom);
    const auto e = category(d.cod);
    Functor f{c, e, std::vector<int>(c->object_count(), -1),
              std::vector<int>(c->arrow_count(), -1)};
    map_names(d.objects, *c, *e, true, f.on_objects);
    map_names(d.arrows, *c, *e, false, f.on_arrows);
    for (int x = 0; x < c->object_count(); ++x)
      if (f.on_objects[x] < 0)
        fail(d.name.loc, "functor '" + d.name.text + "' does not map object '" +
                             c->object_name(x) + "'");
    for (int a = 0; a < c->arrow_count(); ++a) {
      if (f.on_arrows[a] >= 0) continue;
      if (!c->is_identity(a))
        fail(d.name.loc, "functor '" + d.name.text + "' does not map arrow '" +
                             c->arrow_name(a) + "'");
      f.on_arrows[a] = e->identity(f.on_objects[c->src(a)]);
    }
    if (auto diag = validate_functor(f); !diag.empty()) fail_diagnostics(d.name, "functor", diag);
    w_.functors_[d.name.text] = std::move(f);
    w_.functor_decls_[d.name.text] = std::move(d);
  }

  Functor functor(const FunctorExpr& e) const {
    switch (e.kind) {
      case FunctorExpr::Kind::Name: {
        auto it = w_.functors_.find(e.name.text);
        if (it == w_.functors_.end()) fail(e.name.loc, "unknown functor '" + e.name.text + "'");
        return it->second;
      }
      case FunctorExpr::Kind::Apply:
        return monad(e.name)->apply(functor(e.args[0]));
      case FunctorExpr::Kind::Compose: {
        auto f = functor(e.args.back());
        for (std::size_t i = e.args.size() - 1; i-- > 0;) {
          auto g = functor(e.args[i]);
          if (!same_category(g.dom, f.cod))
            fail(e.args[i].name.loc, "functors in the composite do not match");
          f = compose(g, f);
        }
        return f;
      }
    }
    return {};
  }

  void add_natural(NaturalDecl d) {
    declare(EntityKind::Natural, d.name);
    const auto f = functor(d.dom);
    const auto g = functor(d.cod);
    if (!same_category(f.dom, g.dom) || !same_category(f.cod, g.cod))
      fail(d.cod.name.loc, "source and target functors are not parallel");
    NatTrans n{f, g, std::vector<int>(f.dom->object_count(), -1)};
    for (const auto& m : d.components) {
      const int x = f.dom->find_object(m.from.text);
      if (x < 0) fail(m.from.loc, "unknown object '" + m.from.text + "'");
      const int a = f.cod->find_arrow(m.to.text);
      if (a < 0) fail(m.to.loc, "unknown arrow '" + m.to.text + "'");
      if (n.components[x] >= 0) fail(m.from.loc, "component '" + m.from.text + "' given twice");
      n.components[x] = a;
    }
    for (int x = 0; x < f.dom->object_count(); ++x)
      if (n.components[x] < 0)
        fail(d.name.loc, "natural '" + d.name.text + "' has no component at '" +
                             f.dom->object_name(x) + "'");
    if (auto diag = validate_natural(n); !diag.empty()) fail_diagnostics(d.name, "natural", diag);
    w_.naturals_[d.name.text] = std::move(n);
    w_.natural_decls_[d.name.text] = std::move(d);
  }

  // Diagrams, weights, algebras ---------------------------------------------

  void add_diagram(DiagramDecl d) {
    declare(d.weight ? EntityKind::Weight : EntityKind::Diagram, d.name);
    auto it = w_.twocats_.find(d.shape.text);
    if (it == w_.twocats_.end()) fail(d.shape.loc, "unknown 2-category '" + d.shape.text + "'");
    const auto& a = it->second;
    TwoFunctorSpec spec;
    spec.objects.resize(a->object_count());
    spec.ones.resize(a->one_cell_count());
    spec.twos.resize(a->two_cell_count());
    auto twice = [](const Name& n) { fail(n.loc, "'" + n.text + "' assigned twice"); };
    for (auto& [x, r] : d.items) {
      if (a->find_object(x.text) >= 0) {
        d.objects.emplace_back(x, r);
        continue;
      }
      if (!r.monad.empty())
        fail(r.name.loc, "'" + x.text + "' is not an object of '" + d.shape.text + "'");
      if (a->find_one_cell(x.text) >= 0)
        d.arrows.push_back({x, r.name});
      else if (a->find_two_cell(x.text) >= 0)
        d.twocells.push_back({x, r.name});
      else
        fail(x.loc, "'" + x.text + "' is not a cell of '" + d.shape.text + "'");
    }
    d.items.clear();
    for (const auto& [x, r] : d.objects) {
      const int k = a->find_object(x.text);
      if (k < 0) fail(x.loc, "unknown object '" + x.text + "'");
      if (spec.objects[k]) twice(x);
      spec.objects[k] = category(r);
    }
    for (const auto& m : d.arrows) {
      const int k = a->find_one_cell(m.from.text);
      if (k < 0) fail(m.from.loc, "unknown 1-cell '" + m.from.text + "'");
      auto f = w_.functors_.find(m.to.text);
      if (f == w_.functors_.end()) fail(m.to.loc, "unknown functor '" + m.to.text + "'");
      if (spec.ones[k]) twice(m.from);
      spec.ones[k] = f->second;
    }
    for (const auto& m : d.twocells) {
      const int k = a->find_two_cell(m.from.text);
      if (k < 0) fail(m.from.loc, "unknown 2-cell '" + m.from.text + "'");
      auto n = w_.naturals_.find(m.to.text);
      if (n == w_.naturals_.end()) fail(m.to.loc, "unknown natural '" + m.to.text + "'");
      if (spec.twos[k]) twice(m.from);
      spec.twos[k] = n->second;
    }
    for (int x = 0; x < a->object_count(); ++x)
      if (!spec.objects[x])
        fail(d.name.loc, "no category for object '" + a->object_name(x) + "'");
    try {
      w_.diagrams_[d.name.text] = complete_two_functor(a, std::move(spec));
    } catch (const ValidationError& e) {
      fail_diagnostics(d.name, d.weight ? "weight" : "diagram", e.diagnostics());
    }
    w_.shapes_[d.name.text] = d.shape.text;
    w_.diagram_decls_[d.name.text] = std::move(d);
  }

  void add_algebra(AlgebraDecl d) {
    declare(EntityKind::Algebra, d.name);
    auto k = w_.kinds_.find(d.diagram.text);
    if (k == w_.kinds_.end() || k->second != EntityKind::Diagram)
      fail(d.diagram.loc, "unknown diagram '" + d.diagram.text + "'");
    const auto& F = w_.diagrams_.at(d.diagram.text);
    const auto& shape = w_.shapes_.at(d.diagram.text);
    const auto& a = *F.dom;
    ResolvedAlgebra r;
    r.monad = monad(d.monad);
    const auto& t = *r.monad;
    if (d.omega) {
      r.omega = parse_cell_class(d.omega->text);
      if (!r.omega) fail(d.omega->loc, "omega must be s, p or l");
    }
    const auto omega = r.omega.value_or(CellClass::Lax);

    auto& ad = r.diagram;
    ad.name = d.name.text;
    ad.shape = F.dom;
    ad.sigma = w_.sigmas_.at(shape);
    ad.twos = F.on_two;
    for (auto& m : d.items) {
      if (a.find_object(m.from.text) >= 0)
        d.objects.push_back(m);
      else if (a.find_one_cell(m.from.text) >= 0)
        d.arrows.push_back(m);
      else
        fail(m.from.loc, "'" + m.from.text + "' is not an object or 1-cell of '" +
                             a.name() + "'");
    }
    d.items.clear();
    std::vector<std::optional<Functor>> structures(a.object_count());
    for (const auto& m : d.objects) {
      const int x = a.find_object(m.from.text);
      if (x < 0) fail(m.from.loc, "unknown object '" + m.from.text + "'");
      auto f = w_.functors_.find(m.to.text);
      if (f == w_.functors_.end()) fail(m.to.loc, "unknown functor '" + m.to.text + "'");
      if (structures[x]) fail(m.from.loc, "'" + m.from.text + "' assigned twice");
      structures[x] = f->second;
    }
    for (int x = 0; x < a.object_count(); ++x) {
      if (!structures[x])
        fail(d.name.loc, "no structure for object '" + a.object_name(x) + "'");
      Algebra alg{F(x), *structures[x]};
      if (auto diag = validate_algebra(t, alg); !diag.empty())
        fail(d.name.loc, "structure at '" + a.object_name(x) +
                             "' is not an algebra: " + pielift::to_string(diag));
      ad.objects.push_back(std::move(alg));
    }

    std::vector<std::optional<OmegaMorphism>> ones(a.one_cell_count());
    for (int x = 0; x < a.object_count(); ++x) {
      auto id = identity_morphism(t, ad.objects[x]);
      id.cls = omega;
      ones[a.identity(x)] = std::move(id);
    }
    for (const auto& m : d.arrows) {
      const int f = a.find_one_cell(m.from.text);
      if (f < 0) fail(m.from.loc, "unknown 1-cell '" + m.from.text + "'");
      if (a.is_identity(f)) fail(m.from.loc, "identity 1-cells carry identity cells");
      auto n = w_.naturals_.find(m.to.text);
      if (n == w_.naturals_.end()) fail(m.to.loc, "unknown natural '" + m.to.text + "'");
      if (ones[f]) fail(m.from.loc, "'" + m.from.text + "' assigned twice");
      ones[f] = OmegaMorphism{ad.objects[a.src(f)], ad.objects[a.tgt(f)], F.one(f), n->second,
                              omega};
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (int g = 0; g < a.one_cell_count(); ++g)
        for (int f = 0; f < a.one_cell_count(); ++f) {
          if (!a.composable(g, f) || !ones[g] || !ones[f] || ones[a.compose(g, f)]) continue;
          try {
            ones[a.compose(g, f)] = compose(t, *ones[g], *ones[f]);
          } catch (const std::invalid_argument&) {
            fail(d.name.loc, "cells of '" + a.one_cell_name(g) + "' and '" +
                                 a.one_cell_name(f) + "' do not compose");
          }
          grew = true;
        }
    }
    for (int f = 0; f < a.one_cell_count(); ++f) {
      if (!ones[f]) fail(d.name.loc, "no cell for 1-cell '" + a.one_cell_name(f) + "'");
      ad.ones.push_back(std::move(*ones[f]));
    }
    if (auto diag = validate_algebra_diagram(t, ad, omega); !diag.empty())
      fail_diagnostics(d.name, "algebra diagram", diag);
    w_.algebras_[d.name.text] = std::move(r);
    w_.bases_[d.name.text] = d.diagram.text;
    w_.algebra_decls_[d.name.text] = std::move(d);
  }

 private:
  Workspace& w_;
};

void parse_into(Workspace& w, const std::string& text, const std::string& file) {
  Parser p(lex(text, file));
  Loader l(w);
  while (!p.at_end()) {
    const auto kw = p.name();
    if (kw.text == "category") {
      l.add_category(p.category());
    } else if (kw.text == "twocat") {
      l.add_twocat(p.twocat());
    } else if (kw.text == "functor") {
      l.add_functor(p.functor());
    } else if (kw.text == "natural") {
      l.add_natural(p.natural());
    } else if (kw.text == "diagram" || kw.text == "weight") {
      l.add_diagram(p.diagram(kw.text == "weight"));
    } else if (kw.text == "algebra") {
      l.add_algebra(p.algebra());
    } else {
      throw ParseError(kw.loc, "expected a declaration, found '" + kw.text + "'");
    }
  }
  w.sources_.emplace_back(file, text);
}

Workspace parse_workspace(const std::string& text, const std::string& file) {
  Workspace w;
  parse_into(w, text, file);
  return w;
}

Workspace load_files(const std::vector<std::string>& paths) {
  Workspace w;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p);
    std::ostringstream s;
    s << in.rdbuf();
    parse_into(w, s.str(), p);
  }
  return w;
}

std::vector<std::string> corpus_files(const std::string& dir) {
  namespace fs = std::filesystem;
  static const std::vector<std::string> kOrder = {".2cat", ".diag", ".wt", ".alg"};
  std::vector<std::pair<std::size_t, std::string>> found;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension().string();
    auto it = std::find(kOrder.begin(), kOrder.end(), ext);
    if (it != kOrder.end())
      found.emplace_back(static_cast<std::size_t>(it - kOrder.begin()), e.path().string());
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> out;
  for (auto& [k, p] : found) out.push_back(std::move(p));
  return out;
}

}  // namespace pielift::dsl
