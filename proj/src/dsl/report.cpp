#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

#include "pielift/cli.hpp"

namespace pielift::cli {

std::string emit_report(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const auto tmp = target.parent_path() /
                   ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << text;
    os.flush();
    if (!os) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot replace " + path);
  }
}

Json functor_json(const Functor& f) {
  Json objects = Json::object(), arrows = Json::object();
  for (int x = 0; x < f.dom->object_count(); ++x)
    objects[f.dom->object_name(x)] = f.cod->object_name(f(x));
  for (int a = 0; a < f.dom->arrow_count(); ++a)
    arrows[f.dom->arrow_name(a)] = f.cod->arrow_name(f.arrow(a));
  return {{"objects", objects}, {"arrows", arrows}};
}

Json natural_json(const NatTrans& n) {
  Json j = Json::object();
  const auto& c = *n.dom.dom;
  for (int x = 0; x < c.object_count(); ++x)
    j[c.object_name(x)] = n.dom.cod->arrow_name(n.components[x]);
  return j;
}

Json pie_json(const TwoCategory& a, const SigmaFamily& s) {
  Json j;
  Json sigma = Json::array();
  for (int f : s.cells)
    if (!a.is_identity(f)) sigma.push_back(a.one_cell_name(f));
  j["sigma"] = sigma;
  const auto p = pie_analysis(a, s);
  if (const auto* bad = std::get_if<NotPie>(&p)) {
    Json comp = Json::array();
    for (int x : bad->component) comp.push_back(a.object_name(x));
    j["pie"] = false;
    j["witness"] = {{"component", comp}, {"reason", bad->reason}};
    return j;
  }
  const auto& ps = std::get<PieStructure>(p);
  Json comps = Json::array();
  for (const auto& c : ps.components) {
    Json names = Json::array();
    for (int x : c) names.push_back(a.object_name(x));
    comps.push_back(names);
  }
  Json initials = Json::array();
  for (int x : ps.initials()) initials.push_back(a.object_name(x));
  Json canonical = Json::object();
  for (int x = 0; x < a.object_count(); ++x)
    canonical[a.object_name(x)] = a.one_cell_name(ps.canonical[x]);
  j["pie"] = true;
  j["components"] = comps;
  j["initials"] = initials;
  j["canonical"] = canonical;
  return j;
}

Json inputs_json(const dsl::Workspace& w) {
  Json j = Json::array();
  for (const auto& [file, text] : w.sources())
    j.push_back({{"file", file}, {"sha256", sha256_hex(text)}});
  return j;
}

}  // namespace pielift::cli
