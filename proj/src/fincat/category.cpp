#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pielift/fincat.hpp"

namespace pielift {

std::string to_string(const Diagnostics& d) {
  std::string out;
  for (const auto& x : d) {
    if (!out.empty()) out += '\n';
    out += x.kind + ": " + x.message;
  }
  return out;
}

ValidationError::ValidationError(Diagnostics d)
    : std::runtime_error(to_string(d)), diagnostics_(std::move(d)) {}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

void mix(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  mix(h, s.size());
}

}  // namespace

Diagnostics validate_category(const CategoryData& raw) {
  Diagnostics d;
  const int n = static_cast<int>(raw.objects.size());
  const int m = static_cast<int>(raw.arrows.size());
  auto aname = [&](int a) {
    return (a >= 0 && a < m) ? raw.arrows[a].name : "#" + std::to_string(a);
  };

  std::set<std::string> seen;
  for (const auto& o : raw.objects)
    if (!seen.insert(o).second) add(d, "duplicate-object", o);
  seen.clear();
  for (const auto& a : raw.arrows)
    if (!seen.insert(a.name).second) add(d, "duplicate-arrow", a.name);

  for (const auto& a : raw.arrows)
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n)
      add(d, "bad-endpoint", "arrow " + a.name + " has an unknown endpoint");
  if (!d.empty()) return d;

  if (static_cast<int>(raw.identity.size()) != n) {
    add(d, "identity-table", "identity table size does not match objects");
    return d;
  }
  for (int x = 0; x < n; ++x) {
    const int i = raw.identity[x];
    if (i < 0 || i >= m) {
      add(d, "missing-identity", "object " + raw.objects[x]);
    } else if (raw.arrows[i].src != x || raw.arrows[i].tgt != x) {
      add(d, "bad-identity",
          raw.arrows[i].name + " is not an endo-arrow of " + raw.objects[x]);
    }
  }

  std::map<std::pair<int, int>, int> table;
  for (const auto& c : raw.composites) {
    if (c.second < 0 || c.second >= m || c.first < 0 || c.first >= m ||
        c.result < 0 || c.result >= m) {
      add(d, "bad-composite",
          "composite entry " + aname(c.second) + "." + aname(c.first) +
              " references an unknown arrow");
      continue;
    }
    const auto& g = raw.arrows[c.second];
    const auto& f = raw.arrows[c.first];
    const auto& h = raw.arrows[c.result];
    if (f.tgt != g.src) {
      add(d, "non-composable",
          "compose on non-composable pair (" + g.name + ", " + f.name + ")");
      continue;
    }
    if (!table.emplace(std::pair{c.second, c.first}, c.result).second) {
      add(d, "duplicate-composite",
          "composite " + g.name + "." + f.name + " listed twice");
      continue;
    }
    if (h.src != f.src || h.tgt != g.tgt)
      add(d, "composite-endpoints",
          g.name + "." + f.name + " = " + h.name + " has wrong endpoints");
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (raw.arrows[f].tgt == raw.arrows[g].src && !table.count({g, f}))
        add(d, "missing-composite",
            "no composite for " + raw.arrows[g].name + "." +
                raw.arrows[f].name);
  if (!d.empty()) return d;

  for (int f = 0; f < m; ++f) {
    const int s = raw.identity[raw.arrows[f].src];
    const int t = raw.identity[raw.arrows[f].tgt];
    if (table.at({t, f}) != f)
      add(d, "left-unit", raw.arrows[t].name + "." + raw.arrows[f].name +
                              " != " + raw.arrows[f].name);
    if (table.at({f, s}) != f)
      add(d, "right-unit", raw.arrows[f].name + "." + raw.arrows[s].name +
                               " != " + raw.arrows[f].name);
  }
  for (const auto& [gf, h1] : table) {
    const auto [g, f] = gf;
    for (int e = 0; e < m; ++e) {
      if (raw.arrows[e].tgt != raw.arrows[f].src) continue;
      const int fe = table.at({f, e});
      if (table.at({g, fe}) != table.at({h1, e}))
        add(d, "associativity",
            "(" + raw.arrows[g].name + "." + raw.arrows[f].name + ")." +
                raw.arrows[e].name + " differs from " + raw.arrows[g].name +
                ".(" + raw.arrows[f].name + "." + raw.arrows[e].name + ")");
    }
  }
  return d;
}

CategoryData category_data(std::string name, std::vector<std::string> objects,
                           const std::vector<ArrowSpec>& arrows,
                           const std::vector<CompositeSpec>& composites) {
  CategoryData d;
  d.name = std::move(name);
  d.objects = std::move(objects);
  std::map<std::string, int> obj, arr;
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    obj.emplace(d.objects[i], static_cast<int>(i));
  auto find = [](const std::map<std::string, int>& m, const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? -1 : it->second;
  };
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    const int x = static_cast<int>(i);
    d.identity.push_back(static_cast<int>(d.arrows.size()));
    arr.emplace("id_" + d.objects[i], static_cast<int>(d.arrows.size()));
    d.arrows.push_back({"id_" + d.objects[i], x, x});
  }
  for (const auto& a : arrows) {
    arr.emplace(a.name, static_cast<int>(d.arrows.size()));
    d.arrows.push_back({a.name, find(obj, a.src), find(obj, a.tgt)});
  }
  for (int a = 0; a < static_cast<int>(d.arrows.size()); ++a) {
    const auto& ad = d.arrows[a];
    if (ad.src < 0 || ad.tgt < 0) continue;
    d.composites.push_back({d.identity[ad.tgt], a, a});
    if (d.identity[ad.src] != a) d.composites.push_back({a, d.identity[ad.src], a});
  }
  for (const auto& c : composites)
    d.composites.push_back(
        {find(arr, c.second), find(arr, c.first), find(arr, c.result)});
  return d;
}

void FinCategory::index() {
  const int n = object_count();
  const int m = arrow_count();
  in_.assign(n, {});
  local_in_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    local_in_[a] = static_cast<int>(in_[arrows_[a].tgt].size());
    in_[arrows_[a].tgt].push_back(a);
  }
  offset_.assign(m + 1, 0);
  for (int g = 0; g < m; ++g)
    offset_[g + 1] = offset_[g] + in_[arrows_[g].src].size();
  table_.assign(offset_[m], -1);

  hom_offset_.assign(static_cast<std::size_t>(n) * n + 1, 0);
  for (const auto& a : arrows_)
    ++hom_offset_[static_cast<std::size_t>(a.src) * n + a.tgt + 1];
  for (std::size_t k = 1; k < hom_offset_.size(); ++k)
    hom_offset_[k] += hom_offset_[k - 1];
  hom_arrows_.assign(m, -1);
  std::vector<std::size_t> fill(hom_offset_.begin(), hom_offset_.end() - 1);
  for (int a = 0; a < m; ++a)
    hom_arrows_[fill[static_cast<std::size_t>(arrows_[a].src) * n +
                     arrows_[a].tgt]++] = a;

  object_index_.clear();
  arrow_index_.clear();
  for (int x = 0; x < n; ++x) object_index_.emplace(objects_[x], x);
  for (int a = 0; a < m; ++a) arrow_index_.emplace(arrows_[a].name, a);
}

void FinCategory::compute_fingerprint() {
  std::uint64_t h = kFnvOffset;
  for (const auto& o : objects_) mix(h, o);
  for (const auto& a : arrows_) {
    mix(h, a.name);
    mix(h, static_cast<std::uint64_t>(a.src));
    mix(h, static_cast<std::uint64_t>(a.tgt));
  }
  for (int i : identity_) mix(h, static_cast<std::uint64_t>(i));
  for (int v : table_) mix(h, static_cast<std::uint64_t>(v));
  fingerprint_ = h;
}

Cat FinCategory::build(const CategoryData& raw) {
  auto d = validate_category(raw);
  if (!d.empty()) throw ValidationError(std::move(d));
  std::shared_ptr<FinCategory> c(new FinCategory());
  c->name_ = raw.name;
  c->objects_ = raw.objects;
  c->arrows_ = raw.arrows;
  c->identity_ = raw.identity;
  c->index();
  for (const auto& e : raw.composites)
    c->table_[c->offset_[e.second] + c->local_in_[e.first]] = e.result;
  c->compute_fingerprint();
  return c;
}

Cat FinCategory::assemble(std::string name, std::vector<std::string> objects,
                          std::vector<ArrowDecl> arrows,
                          std::vector<int> identity,
                          const std::function<int(int, int)>& compose) {
  std::shared_ptr<FinCategory> c(new FinCategory());
  c->name_ = std::move(name);
  c->objects_ = std::move(objects);
  c->arrows_ = std::move(arrows);
  c->identity_ = std::move(identity);
  c->index();
  for (int g = 0; g < c->arrow_count(); ++g) {
    const auto& in = c->in_[c->arrows_[g].src];
    for (std::size_t k = 0; k < in.size(); ++k)
      c->table_[c->offset_[g] + k] = compose(g, in[k]);
  }
  c->compute_fingerprint();
  return c;
}

std::optional<int> FinCategory::inverse(int a) const {
  for (int b : hom(tgt(a), src(a)))
    if (compose(b, a) == identity(src(a)) && compose(a, b) == identity(tgt(a)))
      return b;
  return std::nullopt;
}

int FinCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  return it == object_index_.end() ? -1 : it->second;
}

int FinCategory::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  return it == arrow_index_.end() ? -1 : it->second;
}

CategoryData FinCategory::data() const {
  CategoryData d;
  d.name = name_;
  d.objects = objects_;
  d.arrows = arrows_;
  d.identity = identity_;
  for (int g = 0; g < arrow_count(); ++g)
    for (int f : in_[arrows_[g].src])
      d.composites.push_back({g, f, compose(g, f)});
  return d;
}

Cat FinCategory::with_provenance(std::vector<std::string> objects,
                                 std::vector<std::string> arrows) const {
  auto c = std::make_shared<FinCategory>(*this);
  c->object_provenance_ = std::move(objects);
  c->arrow_provenance_ = std::move(arrows);
  return c;
}

Cat FinCategory::renamed(std::string name) const {
  auto c = std::make_shared<FinCategory>(*this);
  c->name_ = std::move(name);
  return c;
}

bool same_category(const FinCategory& a, const FinCategory& b) {
  if (&a == &b) return true;
  return a.fingerprint_ == b.fingerprint_ && a.objects_ == b.objects_ &&
         a.arrows_ == b.arrows_ && a.identity_ == b.identity_ &&
         a.table_ == b.table_;
}

// ---------------------------------------------------------------------------

int CategoryBuilder::add_object(std::string provenance) {
  objects_.push_back("o" + std::to_string(objects_.size()));
  object_prov_.push_back(std::move(provenance));
  identity_.push_back(-1);
  return static_cast<int>(objects_.size()) - 1;
}

int CategoryBuilder::add_arrow(int src, int tgt, std::string provenance) {
  arrows_.push_back({"a" + std::to_string(arrows_.size()), src, tgt});
  arrow_prov_.push_back(std::move(provenance));
  return static_cast<int>(arrows_.size()) - 1;
}

void CategoryBuilder::set_identity(int object, int arrow) {
  identity_[object] = arrow;
}

Cat CategoryBuilder::finish(const std::function<int(int, int)>& compose) const {
  auto c = FinCategory::assemble(name_, objects_, arrows_, identity_, compose);
  return c->with_provenance(object_prov_, arrow_prov_);
}

std::string tuple_string(std::span<const int> xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

Cat terminal_category() {
  static const Cat c = FinCategory::build(
      CategoryData{"1", {"*"}, {{"id_*", 0, 0}}, {0}, {{0, 0, 0}}});
  return c;
}

Cat walking_arrow() {
  static const Cat c = FinCategory::build(CategoryData{
      "2",
      {"0", "1"},
      {{"id_0", 0, 0}, {"id_1", 1, 1}, {"u", 0, 1}},
      {0, 1},
      {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}}});
  return c;
}

Cat walking_iso() {
  static const Cat c = FinCategory::build(
      category_data("I", {"0", "1"}, {{"i", "0", "1"}, {"j", "1", "0"}},
                    {{"j", "i", "id_0"}, {"i", "j", "id_1"}}));
  return c;
}

Cat discrete_category(int n, std::string name) {
  CategoryData d;
  d.name = name.empty() ? "disc" + std::to_string(n) : std::move(name);
  for (int i = 0; i < n; ++i) {
    d.objects.push_back(std::to_string(i));
    d.arrows.push_back({"id_" + std::to_string(i), i, i});
    d.identity.push_back(i);
    d.composites.push_back({i, i, i});
  }
  return FinCategory::build(d);
}

}  // namespace pielift
