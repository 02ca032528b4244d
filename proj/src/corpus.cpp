#include "nsk/corpus.hpp"

#include <algorithm>
#include <cstdlib>

#include "nsk/bound_report.hpp"
#include "nsk/error.hpp"
#include "nsk/homology.hpp"
#include "nsk/normal_surface.hpp"
#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"
#include "text_lines.hpp"

#ifndef NSK_SOURCE_DIR
#define NSK_SOURCE_DIR "."
#endif

namespace nsk {

namespace {

Expected parse_expected(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("value") || !j.contains("source"))
    throw Error(ErrorKind::Syntax, "corpus expectation " + where + " needs a value and a source tag");
  Expected e;
  e.value = j.at("value");
  e.source = j.at("source").get<std::string>();
  if (e.source != "derived" && e.source != "trivial")
    throw Error(ErrorKind::Syntax, "corpus expectation " + where + " has unknown source '" + e.source + "'");
  e.oracle = j.value("oracle", "");
  return e;
}

std::map<std::string, Expected> parse_expect_map(const nlohmann::json& j, const std::string& where) {
  std::map<std::string, Expected> out;
  for (const auto& [key, value] : j.items()) out.emplace(key, parse_expected(value, where + "." + key));
  return out;
}

class Checker {
 public:
  explicit Checker(CorpusResult& result) : result_(result) {}

  void check(const std::string& where, const std::map<std::string, Expected>& expect, const std::string& field,
             const nlohmann::json& actual) {
    auto it = expect.find(field);
    if (it == expect.end()) return;
    ++result_.checks;
    if (it->second.value != actual) result_.mismatches.push_back({where, field, it->second.value.dump(), actual.dump()});
  }

 private:
  CorpusResult& result_;
};

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  const auto path = dir / "corpus.json";
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(detail::read_file(path.string()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Syntax, path.string() + ": " + e.what());
  }
  std::vector<CorpusEntry> out;
  for (const auto& j : doc.at("entries")) {
    CorpusEntry entry;
    entry.name = j.at("name").get<std::string>();
    entry.tri = j.at("tri").get<std::string>();
    entry.description = j.value("description", "");
    entry.expect = parse_expect_map(j.at("expect"), entry.name);
    for (const auto& s : j.value("surfaces", nlohmann::json::array())) {
      CorpusSurface surface;
      surface.file = s.at("file").get<std::string>();
      surface.note = s.value("note", "");
      if (s.contains("chi")) surface.chi = parse_expected(s.at("chi"), surface.file + ".chi");
      surface.bound = parse_expect_map(s.at("bound"), surface.file);
      entry.surfaces.push_back(std::move(surface));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

CorpusResult run_entry(const std::filesystem::path& dir, const CorpusEntry& entry) {
  CorpusResult result;
  result.name = entry.name;
  Checker checker(result);
  try {
    const Triangulation tri = load_triangulation((dir / entry.tri).string());
    const SkeletonIndex sk = build_skeleton(tri);
    const TreeCertificate tree = spanning_tree_bound(sk);
    const Z2HomologyProfile homology = h1_z2_rank(tri, sk);
    checker.check(entry.name, entry.expect, "t", sk.t());
    checker.check(entry.name, entry.expect, "v", sk.v());
    checker.check(entry.name, entry.expect, "e", sk.e());
    checker.check(entry.name, entry.expect, "f", sk.f());
    checker.check(entry.name, entry.expect, "eN", tree.e_non_tree);
    checker.check(entry.name, entry.expect, "rankH1Z2", homology.rank_h1);
    checker.check(entry.name, entry.expect, "orientable", sk.orientable);

    for (const CorpusSurface& cs : entry.surfaces) {
      const SurfaceList list = load_surfaces((dir / cs.file).string());
      if (cs.chi) {
        std::int64_t chi = 0;
        for (const auto& x : list.surfaces) chi += euler_characteristic(tri, sk, x);
        checker.check(cs.file, {{"chi", *cs.chi}}, "chi", chi);
      }
      if (auto it = cs.bound.find("error"); it != cs.bound.end()) {
        std::string kind = "none";
        try {
          certify(tri, list.surfaces);
        } catch (const Error& e) {
          kind = to_string(e.kind());
        }
        checker.check(cs.file, cs.bound, "error", kind);
        continue;
      }
      const FinitenessReport r = certify(tri, list.surfaces);
      auto disks = r.bad_remnant_disks;
      std::sort(disks.begin(), disks.end());
      std::vector<std::string> flags;
      for (const auto& f : r.flags)
        if (f.kind != "claim-two-violation") flags.push_back(f.kind);
      std::sort(flags.begin(), flags.end());
      checker.check(cs.file, cs.bound, "k", r.k);
      checker.check(cs.file, cs.bound, "g", r.g);
      checker.check(cs.file, cs.bound, "b", r.b);
      checker.check(cs.file, cs.bound, "s", r.s);
      checker.check(cs.file, cs.bound, "q", r.q);
      checker.check(cs.file, cs.bound, "badRemnantDisks", disks);
      checker.check(cs.file, cs.bound, "flags", flags);
      checker.check(cs.file, cs.bound, "exitCode", r.exit_code());
    }
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

std::filesystem::path default_corpus_dir() {
  if (const char* env = std::getenv("NSK_CORPUS"); env && *env) return env;
  return std::filesystem::path(NSK_SOURCE_DIR) / "corpus";
}

}  // namespace nsk
