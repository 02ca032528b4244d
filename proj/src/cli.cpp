#include "nsk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsk/bound_report.hpp"
#include "nsk/corpus.hpp"
#include "nsk/cut_complex.hpp"
#include "nsk/enumeration.hpp"
#include "nsk/error.hpp"
#include "nsk/homology.hpp"
#include "nsk/normal_surface.hpp"
#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"

namespace nsk::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool color;

  std::string paint(const std::string& text, const char* code) const {
    return color ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
  }
  std::string status(bool ok) const { return ok ? paint("pass", "32") : paint("FAIL", "31"); }
  void warn(const std::string& msg) const { err << paint("warning", "33") << ": " << msg << '\n'; }
};

std::string edge_name(int e) {
  const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
  return std::to_string(i) + std::to_string(j);
}

void warn_about(const Context& ctx, const SkeletonIndex& sk) {
  if (!sk.orientable) ctx.warn("triangulation is not orientable");
  if (sk.has_reversed_edges()) ctx.warn("an edge is identified with itself in reverse");
}

// ---------------------------------------------------------------------------
// JSON views

json skeleton_json(const SkeletonIndex& sk) {
  json vertices = json::array();
  for (std::size_t i = 0; i < sk.v(); ++i) {
    json corners = json::array();
    for (const Corner& c : sk.vertex_orbits[i]) corners.push_back({c.tet, c.vertex});
    vertices.push_back({{"corners", corners}, {"linkEuler", sk.vertex_link_euler[i]}});
  }
  json edges = json::array();
  for (std::size_t i = 0; i < sk.e(); ++i) {
    json members = json::array();
    for (const EdgeRef& r : sk.edge_orbits[i]) members.push_back({r.tet, edge_name(r.edge)});
    edges.push_back({{"members", members},
                     {"degree", sk.edge_orbits[i].size()},
                     {"endpoints", sk.edge_endpoints[i]},
                     {"reversed", static_cast<bool>(sk.edge_reversed[i])}});
  }
  json faces = json::array();
  for (const auto& orbit : sk.face_orbits)
    faces.push_back({{orbit[0].tet, orbit[0].face}, {orbit[1].tet, orbit[1].face}});
  return {{"t", sk.t()},           {"v", sk.v()},
          {"e", sk.e()},           {"f", sk.f()},
          {"euler", sk.euler_char()}, {"orientable", sk.orientable},
          {"reversedEdges", sk.has_reversed_edges()},
          {"vertices", vertices},  {"edges", edges},
          {"faces", faces}};
}

json homology_json(const SkeletonIndex& sk, const TreeCertificate& tree, const Z2HomologyProfile& h) {
  return {{"t", sk.t()},
          {"v", sk.v()},
          {"e", sk.e()},
          {"eTree", tree.e_tree},
          {"eN", tree.e_non_tree},
          {"treeEdges", tree.tree_edges},
          {"rankH1Z2", h.rank_h1},
          {"bettiZ2", h.betti_mod2},
          {"boundaryRanks", h.boundary_ranks},
          {"bound", sk.t() + 1}};
}

json coords_json(const NormalCoordinates& x) {
  return json(std::vector<std::int64_t>(x.values().begin(), x.values().end()));
}

json surface_json(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x) {
  json j = {{"coordinates", coords_json(x)}};
  const AdmissibilityCheck adm = check_admissible(tri, x);
  const MatchingCheck match = check_matching(tri, x);
  j["admissible"] = adm.admissible;
  if (adm.first_violation) j["quadViolationTet"] = *adm.first_violation;
  j["matching"] = match.matching;
  json violations = json::array();
  for (const auto& v : match.violations)
    violations.push_back({{"faceOrbit", v.face_orbit},
                          {"tet", v.face.tet},
                          {"face", v.face.face},
                          {"vertex", v.vertex},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs}});
  j["matchingViolations"] = violations;
  if (!adm.admissible || !match.matching) return j;
  const EmbeddedSurface s = reconstruct(tri, sk, x);
  j["weight"] = s.weight;
  j["euler"] = s.euler;
  j["cells"] = {{"V", s.cells.vertices}, {"E", s.cells.edges}, {"F", s.cells.faces}};
  json comps = json::array();
  for (const auto& c : s.components) {
    json cj = {{"coordinates", coords_json(c.coords)},
               {"weight", c.weight},
               {"euler", c.euler},
               {"orientable", c.orientable},
               {"vertexLink", c.vertex_link ? json(*c.vertex_link) : json(nullptr)}};
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

json cut_json(const EmbeddedSurface& s, const CutComplex& cc) {
  json regions = json::array();
  for (const Region& r : cc.regions.regions()) {
    json rj = {{"tet", r.tet}, {"kind", to_string(r.kind)}, {"good", r.good()}};
    if (r.kind == RegionKind::TriPrism) rj["vertex"] = r.vertex;
    if (r.kind == RegionKind::TriPrism || r.kind == RegionKind::QuadPrism) rj["layer"] = r.layer;
    if (r.kind == RegionKind::TruncatedPrism) rj["side"] = r.quad_side == 0 ? "A" : "B";
    regions.push_back(rj);
  }
  json comps = json::array();
  for (const auto& c : cc.components.components)
    comps.push_back({{"regions", c.regions.size()},
                     {"good", c.good},
                     {"remnants", c.boundary_surfaces},
                     {"linkSpheres", c.link_spheres},
                     {"horizontal", c.horizontal_count},
                     {"flag", to_string(c.flag)}});
  json remnants = json::array();
  for (const auto& r : cc.remnants.remnants)
    remnants.push_back({{"component", r.component},
                        {"surfaceComponent", r.surface_component},
                        {"good", r.good},
                        {"sides", r.sides.size()},
                        {"badTriangles", r.bad_triangles},
                        {"badQuads", r.bad_quads},
                        {"euler", r.euler}});
  return {{"coordinates", coords_json(s.coords)},
          {"k", s.components.size()},
          {"regions", regions},
          {"components", comps},
          {"remnants", remnants},
          {"g", cc.remnants.g},
          {"b", cc.remnants.b},
          {"s", cc.remnants.s},
          {"q", cc.remnants.q},
          {"badPerTet", cc.remnants.bad_per_tet},
          {"audit", {{"minimum", cc.audit.minimum ? json(*cc.audit.minimum) : json(nullptr)},
                     {"violations", cc.audit.violations}}}};
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_validate(const Context& ctx, const std::string& path) {
  const Triangulation tri = load_triangulation(path);
  const SkeletonIndex sk = build_skeleton(tri);
  warn_about(ctx, sk);
  ctx.out << path << ": " << ctx.paint("valid", "32") << " closed triangulation, t = " << sk.t()
          << ", v = " << sk.v() << ", e = " << sk.e() << ", f = " << sk.f() << '\n';
  return kExitOk;
}

int cmd_skeleton(const Context& ctx, const std::string& path, bool as_json) {
  const Triangulation tri = load_triangulation(path);
  const SkeletonIndex sk = build_skeleton(tri);
  if (as_json) {
    ctx.out << skeleton_json(sk).dump(2) << '\n';
    return kExitOk;
  }
  warn_about(ctx, sk);
  ctx.out << "t = " << sk.t() << "  v = " << sk.v() << "  e = " << sk.e() << "  f = " << sk.f()
          << "  chi = " << sk.euler_char() << "  orientable = " << (sk.orientable ? "yes" : "no") << '\n';
  ctx.out << "e = t + v: " << ctx.status(sk.e() == sk.t() + sk.v()) << "   f = 2t: " << ctx.status(sk.f() == 2 * sk.t())
          << '\n';
  for (std::size_t i = 0; i < sk.v(); ++i) {
    ctx.out << "vertex " << i << ": " << sk.vertex_orbits[i].size() << " corners, link chi "
            << sk.vertex_link_euler[i] << '\n';
  }
  for (std::size_t i = 0; i < sk.e(); ++i) {
    ctx.out << "edge " << i << ": degree " << sk.edge_orbits[i].size() << ", vertices " << sk.edge_endpoints[i][0]
            << "-" << sk.edge_endpoints[i][1] << (sk.edge_reversed[i] ? ", reversed" : "") << '\n';
  }
  return kExitOk;
}

int cmd_homology(const Context& ctx, const std::string& path, bool as_json) {
  const Triangulation tri = load_triangulation(path);
  const SkeletonIndex sk = build_skeleton(tri);
  const TreeCertificate tree = spanning_tree_bound(sk);
  const Z2HomologyProfile h = h1_z2_rank(tri, sk);
  if (as_json) {
    ctx.out << homology_json(sk, tree, h).dump(2) << '\n';
    return kExitOk;
  }
  warn_about(ctx, sk);
  ctx.out << "spanning tree: " << tree.e_tree << " edges, " << tree.e_non_tree << " non-tree edges (t + 1 = "
          << sk.t() + 1 << ")\n";
  ctx.out << "rank H1(M;Z2) = " << h.rank_h1 << "   bound t + 1: " << ctx.status(h.rank_h1 <= sk.t() + 1) << '\n';
  ctx.out << "Z2 Betti numbers: " << h.betti_mod2[0] << ' ' << h.betti_mod2[1] << ' ' << h.betti_mod2[2] << ' '
          << h.betti_mod2[3] << '\n';
  return kExitOk;
}

int cmd_surface_check(const Context& ctx, const std::string& tri_path, const std::string& nsc_path, bool as_json) {
  const Triangulation tri = load_triangulation(tri_path);
  const SkeletonIndex sk = build_skeleton(tri);
  const SurfaceList list = load_surfaces(nsc_path);
  if (list.tet_count != tri.size())
    throw Error(ErrorKind::Coordinates, nsc_path + " is for " + std::to_string(list.tet_count) +
                                            " tetrahedra, triangulation has " + std::to_string(tri.size()));
  json all = json::array();
  bool ok = true;
  for (const auto& x : list.surfaces) {
    json j = surface_json(tri, sk, x);
    ok = ok && j["admissible"].get<bool>() && j["matching"].get<bool>();
    all.push_back(std::move(j));
  }
  if (as_json) {
    ctx.out << json{{"surfaces", all}}.dump(2) << '\n';
    return ok ? kExitOk : kExitInput;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const json& j = all[i];
    ctx.out << "surface " << i << ": admissible " << ctx.status(j["admissible"].get<bool>()) << ", matching "
            << ctx.status(j["matching"].get<bool>());
    if (j.contains("weight")) {
      ctx.out << ", weight " << j["weight"] << ", chi " << j["euler"] << ", " << j["components"].size()
              << " component(s)\n";
      std::size_t c = 0;
      for (const auto& cj : j["components"]) {
        ctx.out << "  component " << c++ << ": chi " << cj["euler"] << ", weight " << cj["weight"]
                << (cj["orientable"].get<bool>() ? ", orientable" : ", non-orientable");
        if (!cj["vertexLink"].is_null()) ctx.out << ", link of vertex " << cj["vertexLink"];
        ctx.out << '\n';
      }
    } else {
      ctx.out << '\n';
      if (j.contains("quadViolationTet"))
        ctx.out << "  two quad types in tetrahedron " << j["quadViolationTet"] << '\n';
      for (const auto& v : j["matchingViolations"])
        ctx.out << "  face orbit " << v["faceOrbit"] << " (tet " << v["tet"] << " face " << v["face"]
                << "), arcs about vertex " << v["vertex"] << ": " << v["lhs"] << " vs " << v["rhs"] << '\n';
    }
  }
  return ok ? kExitOk : kExitInput;
}

NormalCoordinates select_surface(const Triangulation& tri, const SurfaceList& list, std::optional<std::size_t> index,
                                 const std::string& path) {
  if (list.tet_count != tri.size())
    throw Error(ErrorKind::Coordinates, path + " is for " + std::to_string(list.tet_count) +
                                            " tetrahedra, triangulation has " + std::to_string(tri.size()));
  if (index) {
    if (*index >= list.surfaces.size())
      throw Error(ErrorKind::Coordinates, "surface index " + std::to_string(*index) + " out of range (" +
                                              std::to_string(list.surfaces.size()) + " surfaces)");
    return list.surfaces[*index];
  }
  NormalCoordinates x(tri.size());
  for (const auto& y : list.surfaces) x = haken_sum(x, y);
  return x;
}

int cmd_cut(const Context& ctx, const std::string& tri_path, const std::string& nsc_path,
            std::optional<std::size_t> index, bool as_json) {
  const Triangulation tri = load_triangulation(tri_path);
  const SkeletonIndex sk = build_skeleton(tri);
  const NormalCoordinates x = select_surface(tri, load_surfaces(nsc_path), index, nsc_path);
  const EmbeddedSurface s = reconstruct(tri, sk, x);
  const CutComplex cc = cut_along(tri, sk, s);
  if (as_json) {
    ctx.out << cut_json(s, cc).dump(2) << '\n';
    return kExitOk;
  }
  ctx.out << "regions per tetrahedron:\n";
  for (std::size_t a = 0; a < tri.size(); ++a) {
    const auto [lo, hi] = cc.regions.tet_range(a);
    std::size_t tri_prisms = 0, quad_prisms = 0, bad = 0;
    for (std::size_t r = lo; r < hi; ++r) {
      switch (cc.regions[r].kind) {
        case RegionKind::TriPrism: ++tri_prisms; break;
        case RegionKind::QuadPrism: ++quad_prisms; break;
        default: ++bad; break;
      }
    }
    ctx.out << "  tet " << a << ": " << tri_prisms << " tri-prism, " << quad_prisms << " quad-prism, " << bad
            << (x.quad_count(a) == 0 ? " truncated tetrahedron" : " truncated prism") << '\n';
  }
  ctx.out << "components of M* - S:\n";
  for (std::size_t c = 0; c < cc.components.components.size(); ++c) {
    const auto& comp = cc.components.components[c];
    ctx.out << "  " << c << ": " << (comp.good ? ctx.paint("good", "32") : ctx.paint("bad", "31")) << ", "
            << comp.regions.size() << " regions, " << comp.boundary_surfaces.size() << " remnant(s), "
            << comp.link_spheres.size() << " link sphere(s)";
    if (comp.good)
      ctx.out << ", " << (comp.horizontal_count == 2 ? "product" : "twisted") << " I-bundle";
    if (comp.flag != ProductFlag::None) ctx.out << "  [" << ctx.paint(to_string(comp.flag), "33") << "]";
    ctx.out << '\n';
  }
  ctx.out << "remnants:\n";
  for (std::size_t i = 0; i < cc.remnants.remnants.size(); ++i) {
    const Remnant& r = cc.remnants.remnants[i];
    ctx.out << "  " << i << ": component " << r.component << ", surface component " << r.surface_component << ", "
            << (r.good ? "good" : "bad") << ", chi " << r.euler << ", bad disks " << r.bad_triangles << " tri + "
            << r.bad_quads << " quad\n";
  }
  ctx.out << "k = " << s.components.size() << "  g = " << cc.remnants.g << "  b = " << cc.remnants.b
          << "  s = " << cc.remnants.s << "  q = " << cc.remnants.q << '\n';
  return kExitOk;
}

int cmd_bound(const Context& ctx, const std::string& tri_path, const std::string& nsc_path, bool as_json) {
  const Triangulation tri = load_triangulation(tri_path);
  const SurfaceList list = load_surfaces(nsc_path);
  if (list.tet_count != tri.size())
    throw Error(ErrorKind::Coordinates, nsc_path + " is for " + std::to_string(list.tet_count) +
                                            " tetrahedra, triangulation has " + std::to_string(tri.size()));
  const FinitenessReport r = certify(tri, list.surfaces);
  if (as_json) {
    ctx.out << json(r).dump(2) << '\n';
    return r.exit_code();
  }
  ctx.out << "t = " << r.t << "  v = " << r.v << "  e = " << r.e << "  eN = " << r.e_n
          << "  rank H1(M;Z2) = " << r.rank_h1 << '\n';
  ctx.out << "k = " << r.k << "  g = " << r.g << "  b = " << r.b << "  s = " << r.s << "  q = " << r.q << '\n';
  for (const LedgerLine& l : r.ledger) {
    ctx.out << "  " << std::left << std::setw(20) << l.id << std::setw(8) << (std::to_string(l.lhs))
            << std::setw(4) << to_string(l.relation) << std::setw(8) << std::to_string(l.rhs) << std::setw(15)
            << to_string(l.line_class) << ctx.status(l.pass) << '\n';
  }
  ctx.out << "bad remnants: " << r.bad_remnant_disks.size();
  if (r.audit_minimum) ctx.out << ", fewest bad disks " << *r.audit_minimum;
  ctx.out << '\n';
  for (const auto& f : r.flags) ctx.out << "flag " << ctx.paint(f.kind, "33") << ": " << f.detail << '\n';
  ctx.out << "unverified assumptions:";
  for (const auto& a : r.assumptions)
    if (!a.verified) ctx.out << ' ' << a.name;
  ctx.out << '\n';
  ctx.out << "k <= 2t: " << ctx.status(r.bound_holds)
          << (r.chain_closed ? " (forced by the chain)" : " (chain not closed on this input)") << '\n';
  return r.exit_code();
}

int cmd_enumerate(const Context& ctx, const std::string& tri_path, const EnumerationQuery& query,
                  const std::string& output) {
  const Triangulation tri = load_triangulation(tri_path);
  const SkeletonIndex sk = build_skeleton(tri);
  SurfaceList list;
  list.tet_count = tri.size();
  list.surfaces = enumerate(tri, sk, query);
  const std::string text = serialize(list);
  if (output.empty()) {
    ctx.out << text;
  } else {
    std::ofstream file(output);
    if (!file || !(file << text)) throw Error(ErrorKind::Io, "cannot write '" + output + "'");
    ctx.out << list.surfaces.size() << " surface(s) written to " << output << '\n';
  }
  return kExitOk;
}

int cmd_corpus(const Context& ctx, const std::string& dir_arg) {
  const std::filesystem::path dir = dir_arg.empty() ? default_corpus_dir() : std::filesystem::path(dir_arg);
  const auto entries = load_corpus(dir);
  std::size_t failed = 0;
  ctx.out << std::left << std::setw(20) << "entry" << std::setw(8) << "checks" << "result\n";
  for (const auto& entry : entries) {
    const CorpusResult r = run_entry(dir, entry);
    if (!r.passed()) ++failed;
    ctx.out << std::left << std::setw(20) << r.name << std::setw(8) << r.checks << ctx.status(r.passed()) << '\n';
    for (const auto& m : r.mismatches)
      ctx.out << "    " << m.where << ' ' << m.field << ": expected " << m.expected << ", got " << m.actual << '\n';
    if (r.error) ctx.out << "    error: " << *r.error << '\n';
  }
  ctx.out << entries.size() - failed << "/" << entries.size() << " entries match\n";
  return failed == 0 ? kExitOk : kExitInput;
}

std::pair<std::int64_t, std::int64_t> parse_chi_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--chi expects MIN:MAX, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, colon), hi_text = text.substr(colon + 1);
    const std::int64_t lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("");
    const std::int64_t hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--chi expects MIN:MAX, got '" + text + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
  Context ctx{out, err, options.color};

  CLI::App app{"Normal-surface toolkit for closed triangulated 3-manifolds", "nsk"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string tri_path, nsc_path, dir;

  auto* validate = app.add_subcommand("validate", "Check a .tri gluing table");
  validate->add_option("tri", tri_path, "triangulation")->required();

  auto* skeleton = app.add_subcommand("skeleton", "Vertex, edge and face orbits");
  skeleton->add_option("tri", tri_path, "triangulation")->required();
  skeleton->add_flag("--json", as_json, "emit JSON");

  auto* homology = app.add_subcommand("homology", "Spanning-tree bound and rank H1(M;Z2)");
  homology->add_option("tri", tri_path, "triangulation")->required();
  homology->add_flag("--json", as_json, "emit JSON");

  auto* surface = app.add_subcommand("surface", "Normal surface checks");
  surface->require_subcommand(1);
  auto* check = surface->add_subcommand("check", "Admissibility, matching, weight, Euler characteristic");
  check->add_option("tri", tri_path, "triangulation")->required();
  check->add_option("nsc", nsc_path, "surface file")->required();
  check->add_flag("--json", as_json, "emit JSON");

  std::optional<std::size_t> surface_index;
  auto* cut = app.add_subcommand("cut", "Cut M* along a surface");
  cut->add_option("tri", tri_path, "triangulation")->required();
  cut->add_option("nsc", nsc_path, "surface file")->required();
  cut->add_option("--surface", surface_index, "use only surface i (default: the sum of all)");
  cut->add_flag("--json", as_json, "emit JSON");

  auto* bound = app.add_subcommand("bound", "Certify the inequality chain for a surface collection");
  bound->add_option("tri", tri_path, "triangulation")->required();
  bound->add_option("nsc", nsc_path, "surface file")->required();
  bound->add_flag("--json", as_json, "emit JSON");

  EnumerationQuery query;
  bool no_links = false;
  std::string chi_text, output;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Cap-bounded search for normal surfaces");
  enumerate_cmd->add_option("tri", tri_path, "triangulation")->required();
  enumerate_cmd->add_option("--cap", query.cap, "largest coordinate")->required();
  enumerate_cmd->add_flag("--connected", query.connected, "only connected surfaces");
  enumerate_cmd->add_flag("--orientable", query.orientable, "only orientable surfaces");
  enumerate_cmd->add_flag("--no-links", no_links, "drop vertex links and their multiples");
  enumerate_cmd->add_option("--chi", chi_text, "Euler characteristic range MIN:MAX");
  enumerate_cmd->add_option("-o,--output", output, "write a .nsc file instead of stdout");

  auto* corpus = app.add_subcommand("corpus", "Run the bundled corpus and compare with its metadata");
  corpus->add_option("dir", dir, "corpus directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(ctx, tri_path);
    if (skeleton->parsed()) return cmd_skeleton(ctx, tri_path, as_json);
    if (homology->parsed()) return cmd_homology(ctx, tri_path, as_json);
    if (check->parsed()) return cmd_surface_check(ctx, tri_path, nsc_path, as_json);
    if (cut->parsed()) return cmd_cut(ctx, tri_path, nsc_path, surface_index, as_json);
    if (bound->parsed()) return cmd_bound(ctx, tri_path, nsc_path, as_json);
    if (enumerate_cmd->parsed()) {
      query.exclude_vertex_links = no_links;
      if (!chi_text.empty()) query.chi = parse_chi_range(chi_text);
      return cmd_enumerate(ctx, tri_path, query, output);
    }
    if (corpus->parsed()) return cmd_corpus(ctx, dir);
  } catch (const UsageError& e) {
    err << "nsk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "nsk: " << ctx.paint("error", "31") << " (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "nsk: " << ctx.paint("error", "31") << ": " << e.what() << '\n';
    return kExitInput;
  }
  err << "nsk: no subcommand\n";
  return kExitUsage;
}

}  // namespace nsk::cli
