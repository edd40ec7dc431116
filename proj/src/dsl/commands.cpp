#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "pielift/acceptance.hpp"
#include "pielift/cli.hpp"
#include "pielift/pie_construct.hpp"

namespace pielift::cli {

namespace {

namespace fs = std::filesystem;
using dsl::EntityKind;
using dsl::Workspace;

// Bad arguments after parsing: unknown names, mismatched shapes and the like.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string corpus;
  std::string out;
  std::vector<std::string> inputs;
  std::string target, second;
  bool oplax = false, dual = false;
  std::string monad, omega;
};

bool is_file(const std::string& p) {
  std::error_code ec;
  return fs::is_regular_file(p, ec);
}

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  return fs::equivalent(a, b, ec);
}

Workspace load(const Args& a, const std::vector<std::string>& targets) {
  std::vector<std::string> files;
  if (!a.corpus.empty()) {
    if (!fs::is_directory(a.corpus)) throw InputError("no corpus directory " + a.corpus);
    files = dsl::corpus_files(a.corpus);
  }
  auto add = [&](const std::string& f) {
    for (const auto& g : files)
      if (same_file(f, g)) return;
    files.push_back(f);
  };
  for (const auto& f : a.inputs) {
    if (!is_file(f)) throw InputError("no such file " + f);
    add(f);
  }
  for (const auto& t : targets)
    if (is_file(t)) add(t);
  return dsl::load_files(files);
}

// A name, or a file whose declarations of kind `k` are meant.
std::vector<std::string> resolve(const Workspace& w, const std::string& arg, EntityKind k) {
  std::vector<std::string> out;
  if (is_file(arg)) {
    for (const auto& e : w.entries())
      if (e.kind == k && same_file(e.loc.file, arg)) out.push_back(e.name);
    if (out.empty())
      throw InputError(arg + " declares no " + std::string(dsl::to_string(k)));
    return out;
  }
  const auto kind = w.kind_of(arg);
  if (!kind) throw InputError("unknown name '" + arg + "'");
  if (*kind != k)
    throw InputError("'" + arg + "' is a " + std::string(dsl::to_string(*kind)) + ", not a " +
                     std::string(dsl::to_string(k)));
  return {arg};
}

std::string one(const Workspace& w, const std::string& arg, EntityKind k) {
  auto names = resolve(w, arg, k);
  if (names.size() != 1) throw InputError(arg + " declares several; name one");
  return names.front();
}

Json size_json(const Cat& c) {
  return {{"objects", c->object_count()}, {"arrows", c->arrow_count()}};
}

Json names_json(const Cat& c) {
  Json j = Json::array();
  for (int x = 0; x < c->object_count(); ++x) j.push_back(c->object_name(x));
  return j;
}

Orientation orientation(const Args& a) { return a.oplax ? Orientation::Oplax : Orientation::Lax; }

bool pie_ok(const Workspace& w, const std::string& shape) {
  return std::holds_alternative<PieStructure>(pie_analysis(*w.twocat(shape), w.sigma(shape)));
}

// Commands return the result body and whether every verdict passed.
using Outcome = std::pair<Json, bool>;

Outcome validate(const Workspace& w) {
  Json entries = Json::array();
  Json counts = Json::object();
  for (const auto& e : w.entries()) {
    entries.push_back({{"kind", dsl::to_string(e.kind)},
                       {"name", e.name},
                       {"file", e.loc.file},
                       {"line", e.loc.line}});
    counts[std::string(dsl::to_string(e.kind))] = counts.value(std::string(dsl::to_string(e.kind)), 0) + 1;
  }
  bool ok = true;
  Json laws = Json::array();
  for (const auto& n : w.names(EntityKind::Algebra)) {
    const auto& ra = w.algebra(n);
    std::vector<Cat> cats;
    for (const auto& x : ra.diagram.objects) cats.push_back(x.carrier);
    std::vector<Functor> fs;
    for (const auto& m : ra.diagram.ones) fs.push_back(m.f);
    const auto d = validate_monad(*ra.monad, cats, fs, ra.diagram.twos);
    laws.push_back({{"algebra", n}, {"monad", ra.monad->name()}, {"laws_hold", d.empty()},
                    {"diagnostics", pielift::to_string(d)}});
    ok = ok && d.empty();
  }
  Json pie = Json::object();
  for (const auto& n : w.names(EntityKind::TwoCategory)) pie[n] = pie_ok(w, n);
  return {{{"entries", entries}, {"counts", counts}, {"monad_laws", laws}, {"pie_shapes", pie}},
          ok};
}

Outcome pie_check(const Workspace& w, const Args& a) {
  Json out = Json::array();
  bool ok = true;
  for (const auto& n : resolve(w, a.target, EntityKind::TwoCategory)) {
    Json j = pie_json(*w.twocat(n), w.sigma(n));
    j["twocat"] = n;
    ok = ok && j["pie"].get<bool>();
    out.push_back(j);
  }
  return {{{"twocats", out}}, ok};
}

Outcome limit(const Workspace& w, const Args& a) {
  const auto d = one(w, a.target, EntityKind::Diagram);
  const auto& F = w.diagram(d);
  const auto& shape = w.shape_of(d);
  const auto lim = sigma_s_limit(F, w.sigma(shape), orientation(a));
  const auto& s = *F.dom;
  Json proj = Json::object(), cells = Json::object();
  for (int x = 0; x < s.object_count(); ++x) proj[s.object_name(x)] = functor_json(lim.projections[x]);
  for (int f = 0; f < s.one_cell_count(); ++f)
    if (!s.is_identity(f)) cells[s.one_cell_name(f)] = natural_json(lim.cells[f]);
  Json failed = nullptr;
  for (const auto& e : acceptance::test_vertices())
    if (!verify_universal_property(lim, e)) {
      failed = {{"name", e->name()}, {"category", functor_json(identity_functor(e))}};
      break;
    }
  Json up = {{"vertices", acceptance::test_vertices().size()},
             {"holds", failed.is_null()},
             {"first_failing_vertex", failed}};
  return {{{"diagram", d},
           {"orientation", to_string(orientation(a))},
           {"limit", {{"size", size_json(lim.L)}, {"objects", names_json(lim.L)}}},
           {"projections", proj},
           {"cells", cells},
           {"universal_property", up}},
          failed.is_null()};
}

Outcome weighted(const Workspace& w, const Args& a) {
  const auto wn = one(w, a.target, EntityKind::Weight);
  const auto dn = one(w, a.second, EntityKind::Diagram);
  if (w.shape_of(wn) != w.shape_of(dn))
    throw InputError("'" + wn + "' is on " + w.shape_of(wn) + " but '" + dn + "' is on " +
                     w.shape_of(dn));
  const auto& W = w.diagram(wn);
  const auto& F = w.diagram(dn);
  const auto wl = weighted_limit(W, F);
  const bool iso = compare_weighted_conical(W, F);
  return {{{"weight", wn},
           {"diagram", dn},
           {"limit", {{"size", size_json(wl.cat)}, {"objects", names_json(wl.cat)}}},
           {"conical_iso", iso},
           {"pie_weight", is_pie_weight(W)}},
          iso};
}

Outcome groth(const Workspace& w, const Args& a) {
  const auto wn = one(w, a.target, EntityKind::Weight);
  const auto& W = w.diagram(wn);
  const auto el = a.dual ? grothendieck_dual(W) : grothendieck(W);
  const auto& s = *W.dom;
  Json elements = Json::array();
  for (const auto& [x, y] : el.elements)
    elements.push_back({s.object_name(x), W(x)->object_name(y)});
  Json arrows = Json::array();
  for (int f = 0; f < el.el->one_cell_count(); ++f) {
    const auto& [g, v] = el.arrows[f];
    // v is an arrow of W at the target of g, in either direction
    arrows.push_back({{"name", el.el->one_cell_name(f)},
                      {"over", s.one_cell_name(g)},
                      {"element_arrow", W(s.tgt(g))->arrow_name(v)}});
  }
  Json pie = pie_json(*el.el, el.sigma);
  const bool ok = pie["pie"].get<bool>();
  return {{{"weight", wn},
           {"dual", a.dual},
           {"elements", elements},
           {"one_cells", arrows},
           {"two_cells", el.el->two_cell_count()},
           {"pie_analysis", pie}},
          ok};
}

Outcome pie_build(const Workspace& w, const Args& a) {
  const auto d = one(w, a.target, EntityKind::Diagram);
  const auto& F = w.diagram(d);
  const auto& shape = w.shape_of(d);
  const auto& sigma = w.sigma(shape);
  if (!pie_ok(w, shape))
    return {{{"diagram", d}, {"pie_analysis", pie_json(*w.twocat(shape), sigma)}}, false};
  const auto o = orientation(a);
  const auto as = build_via_pie(F, sigma, o);
  const auto lim = sigma_s_limit(F, sigma, o);
  const bool match = assembly_matches(as, lim);
  auto labels = [](const std::vector<CellPair>& ps) {
    Json j = Json::array();
    for (const auto& p : ps) j.push_back(p.label);
    return j;
  };
  return {{{"diagram", d},
           {"orientation", to_string(o)},
           {"product", size_json(as.base.cat)},
           {"inserter", size_json(as.inserter.cat)},
           {"equifier", size_json(as.final.cat)},
           {"direct", size_json(lim.L)},
           {"equifier_pairs",
            {{"sigma", labels(as.sigma_pairs)}, {"lc1", labels(as.lc1_pairs)}, {"lc2", labels(as.lc2_pairs)}}},
           {"matches_direct", match}},
          match};
}

Outcome compare(const Workspace& w, const Args& a) {
  const auto d = one(w, a.target, EntityKind::Diagram);
  const auto& F = w.diagram(d);
  const auto& shape = w.shape_of(d);
  bool ok = true;
  Json direct = Json::object();
  if (pie_ok(w, shape)) {
    for (auto o : {Orientation::Lax, Orientation::Oplax}) {
      const bool same = compare_constructions(F, w.sigma(shape), o);
      direct[std::string(to_string(o))] = same;
      ok = ok && same;
    }
  } else {
    direct = nullptr;
  }
  Json weighted = Json::array();
  for (const auto& wn : w.names(EntityKind::Weight)) {
    if (w.shape_of(wn) != shape) continue;
    const bool iso = compare_weighted_conical(w.diagram(wn), F);
    weighted.push_back({{"weight", wn}, {"iso", iso}});
    ok = ok && iso;
  }
  return {{{"diagram", d}, {"direct_vs_pie", direct}, {"weighted_vs_conical", weighted}, {"iso", ok}},
          ok};
}

Outcome lift(const Workspace& w, const Args& a) {
  const auto n = one(w, a.target, EntityKind::Algebra);
  const auto& ra = w.algebra(n);
  const auto& t = ra.monad;
  if (!a.monad.empty() && a.monad != t->name())
    throw InputError("'" + n + "' is over the monad " + t->name() + ", not " + a.monad);
  CellClass omega = ra.omega.value_or(CellClass::Lax);
  if (!a.omega.empty()) {
    const auto o = parse_cell_class(a.omega);
    if (!o) throw InputError("omega must be s, p or l");
    omega = *o;
  }
  const auto& d = ra.diagram;
  if (auto diag = validate_algebra_diagram(*t, d, omega); !diag.empty())
    throw InputError("'" + n + "' is not a diagram in T-Alg for omega " +
                     std::string(to_string(omega)) + ": " + pielift::to_string(diag));
  Json result = {{"algebra", n}, {"monad", t->name()}, {"omega", to_string(omega)}};
  LiftResult lift;
  try {
    lift = lift_limit(t, d, omega);
  } catch (const LiftError& e) {
    result["rejected"] = to_string(e.kind());
    result["message"] = e.what();
    return {result, false};
  }
  const auto& s = *d.shape;
  std::vector<Cat> cats{lift.algebra.carrier};
  for (const auto& x : d.objects) cats.push_back(x.carrier);
  std::vector<Functor> fs;
  for (const auto& m : d.ones) fs.push_back(m.f);
  for (const auto& p : lift.projections) fs.push_back(p.f);
  const bool laws = validate_monad(*t, cats, fs, d.twos).empty();
  const auto sources = acceptance::source_algebras(*t);
  Json strict = Json::array();
  for (int x : lift.strict_projections) strict.push_back(s.object_name(x));
  Json v = {{"monad_laws", laws},
            {"compatible", lift.compatible},
            {"theta_is_cone", lift.theta_is_cone},
            {"mu_matches_pasting", lift.mu_matches_pasting},
            {"mu_sigma_identities", lift.mu_sigma_identities},
            {"algebra_axioms", lift.algebra_axioms},
            {"projections_valid", lift.projections_valid},
            {"cells_are_algebra_cells", lift.cells_are_algebra_cells},
            {"base_projections_strict", lift.base_projections_strict},
            {"universal", lift.universal},
            {"strict_projections", strict}};
  bool ok = laws && lift.all_pass();
  for (auto [key, cls] : {std::pair{"detects_strictness", CellClass::Strict},
                          std::pair{"detects_pseudoness", CellClass::Pseudo}}) {
    const auto wit = detection_counterexample(*t, lift, cls, sources);
    v[key] = !wit;
    ok = ok && !wit;
    if (wit)
      result[std::string(key) + "_witness"] = {{"source", wit->source.carrier->name()},
                                               {"z", functor_json(wit->z.f)},
                                               {"z_bar", natural_json(wit->z.bar)}};
  }
  Json proj = Json::object();
  for (int x = 0; x < s.object_count(); ++x)
    proj[s.object_name(x)] = {{"functor", functor_json(lift.projections[x].f)},
                              {"bar", natural_json(lift.projections[x].bar)}};
  result["verdicts"] = v;
  result["carrier"] = {{"size", size_json(lift.algebra.carrier)},
                       {"objects", names_json(lift.algebra.carrier)}};
  result["structure"] = functor_json(lift.algebra.structure);
  result["projections"] = proj;
  result["detection_sources"] = sources.size();
  result["universal_property_scope"] =
      "checked on the vertex algebras over the terminal category and the walking arrow";
  return {result, ok};
}

Outcome check_all(const std::string& dir) {
  const auto cs = acceptance::run_all(dir);
  bool ok = true, expected = true;
  for (const auto& c : cs) {
    ok = ok && c.pass;
    expected = expected && c.pass == c.expected;
  }
  return {{{"criteria", acceptance::to_json(cs)}, {"all_pass", ok}, {"as_documented", expected}}, ok};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks PIE indexing pairs, sigma-s-limits and their lifts to algebras."};
  app.name(kToolName);
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--corpus", a.corpus, "Directory of .2cat/.diag/.wt/.alg files")
      ->envname("PIE_LIFTER_CORPUS");
  app.add_option("--out", a.out, "Write the report here instead of stdout");
  app.add_option("--input", a.inputs, "Extra input files, loaded after the corpus");

  auto* validate_cmd = app.add_subcommand("validate", "Load and validate every input");
  auto* pie_cmd = app.add_subcommand("pie-check", "PIE analysis of a 2-category");
  pie_cmd->add_option("twocat", a.target, "Name or file")->required();
  auto* limit_cmd = app.add_subcommand("limit", "The sigma-s-limit of a diagram");
  limit_cmd->add_option("diagram", a.target)->required();
  limit_cmd->add_flag("--oplax", a.oplax, "Op-lax cones");
  auto* weighted_cmd = app.add_subcommand("weighted", "Weighted limit against the conical one");
  weighted_cmd->add_option("weight", a.target)->required();
  weighted_cmd->add_option("diagram", a.second)->required();
  auto* groth_cmd = app.add_subcommand("groth", "2-category of elements of a weight");
  groth_cmd->add_option("weight", a.target)->required();
  groth_cmd->add_flag("--dual", a.dual, "The dual construction");
  auto* build_cmd = app.add_subcommand("pie-build", "Assemble the limit from P, I and E");
  build_cmd->add_option("diagram", a.target)->required();
  build_cmd->add_flag("--oplax", a.oplax, "Op-lax cones");
  auto* compare_cmd = app.add_subcommand("compare", "Direct, assembled and weighted limits");
  compare_cmd->add_option("diagram", a.target)->required();
  auto* lift_cmd = app.add_subcommand("lift", "Lift the limit to algebras");
  lift_cmd->add_option("algebra", a.target)->required();
  lift_cmd->add_option("--monad", a.monad, "Must match the algebra diagram");
  lift_cmd->add_option("--omega", a.omega, "s, p or l")->check(CLI::IsMember({"s", "p", "l"}));
  auto* all_cmd = app.add_subcommand("check-all", "Run the acceptance criteria on a corpus");
  all_cmd->add_option("dir", a.target)->required();

  std::vector<const char*> argv{kToolName};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kPass : kInputError;
  }

  auto* cmd = app.get_subcommands().front();
  Json report = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                 {"command", cmd->get_name()}};
  int code = kPass;
  try {
    std::vector<std::string> targets;
    if (!a.target.empty() && cmd != all_cmd) targets.push_back(a.target);
    if (!a.second.empty()) targets.push_back(a.second);
    if (cmd == all_cmd) {
      if (!fs::is_directory(a.target)) throw InputError("no directory " + a.target);
      a.corpus = a.target;
    }
    const Workspace w = load(a, targets);
    report["inputs"] = inputs_json(w);
    Outcome o;
    if (cmd == validate_cmd) o = validate(w);
    else if (cmd == pie_cmd) o = pie_check(w, a);
    else if (cmd == limit_cmd) o = limit(w, a);
    else if (cmd == weighted_cmd) o = weighted(w, a);
    else if (cmd == groth_cmd) o = groth(w, a);
    else if (cmd == build_cmd) o = pie_build(w, a);
    else if (cmd == compare_cmd) o = compare(w, a);
    else if (cmd == lift_cmd) o = lift(w, a);
    else o = check_all(a.target);
    report["result"] = o.first;
    report["pass"] = o.second;
    code = o.second ? kPass : kVerdictFailed;
  } catch (const dsl::ParseError& e) {
    report["error"] = {{"file", e.location().file},
                       {"line", e.location().line},
                       {"column", e.location().column},
                       {"message", e.message()}};
    err << e.what() << "\n";
    code = kInputError;
  } catch (const std::runtime_error& e) {
    report["error"] = {{"message", e.what()}};
    err << kToolName << ": " << e.what() << "\n";
    code = kInputError;
  }
  if (code == kInputError) report["pass"] = false;

  const auto text = emit_report(report);
  if (a.out.empty()) {
    out << text;
    return code;
  }
  try {
    write_atomic(a.out, text);
  } catch (const std::runtime_error& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kInputError;
  }
  return code;
}

}  // namespace pielift::cli
