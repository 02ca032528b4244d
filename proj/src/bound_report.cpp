#include "nsk/bound_report.hpp"

#include <algorithm>
#include <string>

#include "nsk/cut_complex.hpp"
#include "nsk/enumeration.hpp"
#include "nsk/error.hpp"
#include "nsk/homology.hpp"
#include "nsk/skeleton.hpp"

namespace nsk {

const char* to_string(Relation r) { return r == Relation::Equal ? "=" : "<="; }

const char* to_string(LineClass c) { return c == LineClass::Unconditional ? "unconditional" : "conditional"; }

bool FinitenessReport::unconditional_pass() const {
  return std::all_of(ledger.begin(), ledger.end(),
                     [](const LedgerLine& l) { return l.line_class == LineClass::Conditional || l.pass; });
}

bool FinitenessReport::conditional_pass() const {
  return std::all_of(ledger.begin(), ledger.end(),
                     [](const LedgerLine& l) { return l.line_class == LineClass::Unconditional || l.pass; });
}

int FinitenessReport::exit_code() const {
  if (!unconditional_pass()) return 1;
  return conditional_pass() ? 0 : 2;
}

std::vector<LedgerLine> build_ledger(const FinitenessReport& r) {
  auto line = [](std::string id, Relation rel, LineClass cls, std::int64_t lhs, std::int64_t rhs) {
    LedgerLine l{std::move(id), rel, cls, lhs, rhs, true};
    l.pass = rel == Relation::Equal ? lhs == rhs : lhs <= rhs;
    return l;
  };
  using enum Relation;
  using enum LineClass;
  return {
      line("2k = g + b", Equal, Unconditional, 2 * r.k, r.g + r.b),
      line("g <= rankH1Z2", AtMost, Conditional, r.g, r.rank_h1),
      line("rankH1Z2 <= t + 1", AtMost, Unconditional, r.rank_h1, r.t + 1),
      line("2b <= s + q", AtMost, Conditional, 2 * r.b, r.s + r.q),
      line("s <= 4t", AtMost, Unconditional, r.s, 4 * r.t),
      line("q <= 2t", AtMost, Unconditional, r.q, 2 * r.t),
      line("2k <= 4t + 1", AtMost, Conditional, 2 * r.k, 4 * r.t + 1),
      // 2k <= 4t + 1 with k an integer rounds down to k <= 2t.
      line("k <= 2t", AtMost, Conditional, r.k, 2 * r.t),
  };
}

FinitenessReport certify(const Triangulation& tri, const std::vector<NormalCoordinates>& collection) {
  NormalCoordinates x(tri.size());
  for (const auto& y : collection) {
    if (y.tet_count() != tri.size())
      throw Error(ErrorKind::Coordinates, "surface has " + std::to_string(y.values().size()) + " coordinates, expected " +
                                              std::to_string(7 * tri.size()));
    x = haken_sum(x, y);
  }
  return certify(tri, x);
}

FinitenessReport certify(const Triangulation& tri, const NormalCoordinates& x) {
  const SkeletonIndex sk = build_skeleton(tri);
  if (sk.has_reversed_edges())
    throw Error(ErrorKind::NonManifold, "an edge is identified with itself in reverse; not a closed 3-manifold");
  if (!sk.orientable) throw Error(ErrorKind::NonOrientable, "the triangulated manifold is not orientable");
  if (x.tet_count() != tri.size() || x.values().size() != kDiskTypes * tri.size())
    throw Error(ErrorKind::Coordinates, "surface has " + std::to_string(x.values().size()) + " coordinates, expected " +
                                            std::to_string(7 * tri.size()));

  const EmbeddedSurface surface = reconstruct(tri, sk, x);
  for (std::size_t c = 0; c < surface.components.size(); ++c)
    if (!surface.components[c].orientable)
      throw Error(ErrorKind::NonOrientable, "surface component " + std::to_string(c) + " is not orientable (one-sided)");

  const TreeCertificate tree = spanning_tree_bound(sk);
  const Z2HomologyProfile homology = h1_z2_rank(tri, sk);
  const CutComplex cut = cut_along(tri, sk, surface);

  FinitenessReport r;
  r.t = static_cast<std::int64_t>(sk.t());
  r.v = static_cast<std::int64_t>(sk.v());
  r.e = static_cast<std::int64_t>(sk.e());
  r.e_n = static_cast<std::int64_t>(tree.e_non_tree);
  r.rank_h1 = static_cast<std::int64_t>(homology.rank_h1);
  r.k = static_cast<std::int64_t>(surface.components.size());
  r.g = cut.remnants.g;
  r.b = cut.remnants.b;
  r.s = cut.remnants.s;
  r.q = cut.remnants.q;

  for (const auto& entry : cut.audit.bad_remnants) r.bad_remnant_disks.push_back(entry.bad_disks);
  r.audit_minimum = cut.audit.minimum;
  r.audit_passed = cut.audit.passed();

  for (std::size_t c = 0; c < cut.components.components.size(); ++c) {
    const CutComponent& comp = cut.components.components[c];
    if (comp.flag == ProductFlag::None) continue;
    std::string detail = "good component bounded by ";
    if (comp.flag == ProductFlag::ParallelSurfaces) {
      const auto& bs = cut.components.boundary_surfaces;
      detail += "sides of surface components " + std::to_string(bs[comp.boundary_surfaces[0]].surface_component) +
                " and " + std::to_string(bs[comp.boundary_surfaces[1]].surface_component);
    } else {
      detail += "a side of surface component " +
                std::to_string(cut.components.boundary_surfaces[comp.boundary_surfaces[0]].surface_component) +
                " and the link of vertex " + std::to_string(comp.link_spheres[0]);
    }
    r.flags.push_back({to_string(comp.flag), c, detail});
  }
  for (std::size_t i : cut.audit.violations) {
    const Remnant& rem = cut.remnants.remnants[i];
    r.flags.push_back({"claim-two-violation", i,
                       "bad remnant with " + std::to_string(rem.bad_disks()) + " bad disk" +
                           (rem.bad_disks() == 1 ? "" : "s")});
  }

  r.ledger = build_ledger(r);
  // Alphabetical, matching the key order of the JSON object.
  r.assumptions = {{"closed", true},        {"essential", false},   {"irreducible", false}, {"least-weight", false},
                   {"non-parallel", false}, {"orientable", true},   {"two-sided", true}};
  r.chain_closed = r.audit_passed && r.g <= r.rank_h1;
  r.bound_holds = r.k <= 2 * r.t;
  return r;
}

// ---------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json& j, const LedgerLine& l) {
  j = {{"id", l.id},
       {"relation", to_string(l.relation)},
       {"class", to_string(l.line_class)},
       {"lhs", l.lhs},
       {"rhs", l.rhs},
       {"status", l.pass ? "pass" : "fail"}};
}

void from_json(const nlohmann::json& j, LedgerLine& l) {
  l.id = j.at("id").get<std::string>();
  l.relation = j.at("relation").get<std::string>() == "=" ? Relation::Equal : Relation::AtMost;
  l.line_class = j.at("class").get<std::string>() == "conditional" ? LineClass::Conditional : LineClass::Unconditional;
  l.lhs = j.at("lhs").get<std::int64_t>();
  l.rhs = j.at("rhs").get<std::int64_t>();
  l.pass = j.at("status").get<std::string>() == "pass";
}

void to_json(nlohmann::json& j, const ReportFlag& f) {
  j = {{"kind", f.kind}, {"index", f.index}, {"detail", f.detail}};
}

void from_json(const nlohmann::json& j, ReportFlag& f) {
  f.kind = j.at("kind").get<std::string>();
  f.index = j.at("index").get<std::size_t>();
  f.detail = j.at("detail").get<std::string>();
}

void to_json(nlohmann::json& j, const FinitenessReport& r) {
  nlohmann::json assumptions = nlohmann::json::object();
  for (const auto& a : r.assumptions) assumptions[a.name] = a.verified ? "verified" : "unverified";
  j = {{"t", r.t},
       {"v", r.v},
       {"e", r.e},
       {"eN", r.e_n},
       {"rankH1Z2", r.rank_h1},
       {"k", r.k},
       {"g", r.g},
       {"b", r.b},
       {"s", r.s},
       {"q", r.q},
       {"audit",
        {{"badRemnantDisks", r.bad_remnant_disks},
         {"minimum", r.audit_minimum ? nlohmann::json(*r.audit_minimum) : nlohmann::json(nullptr)},
         {"passed", r.audit_passed}}},
       {"flags", r.flags},
       {"ledger", r.ledger},
       {"assumptions", assumptions},
       {"conclusion", {{"chainClosed", r.chain_closed}, {"boundHolds", r.bound_holds}}},
       {"exitCode", r.exit_code()}};
}

void from_json(const nlohmann::json& j, FinitenessReport& r) {
  r.t = j.at("t").get<std::int64_t>();
  r.v = j.at("v").get<std::int64_t>();
  r.e = j.at("e").get<std::int64_t>();
  r.e_n = j.at("eN").get<std::int64_t>();
  r.rank_h1 = j.at("rankH1Z2").get<std::int64_t>();
  r.k = j.at("k").get<std::int64_t>();
  r.g = j.at("g").get<std::int64_t>();
  r.b = j.at("b").get<std::int64_t>();
  r.s = j.at("s").get<std::int64_t>();
  r.q = j.at("q").get<std::int64_t>();
  const auto& audit = j.at("audit");
  r.bad_remnant_disks = audit.at("badRemnantDisks").get<std::vector<std::int64_t>>();
  r.audit_minimum.reset();
  if (!audit.at("minimum").is_null()) r.audit_minimum = audit.at("minimum").get<std::int64_t>();
  r.audit_passed = audit.at("passed").get<bool>();
  r.flags = j.at("flags").get<std::vector<ReportFlag>>();
  r.ledger = j.at("ledger").get<std::vector<LedgerLine>>();
  r.assumptions.clear();
  for (const auto& [name, status] : j.at("assumptions").items())
    r.assumptions.push_back({name, status.get<std::string>() == "verified"});
  r.chain_closed = j.at("conclusion").at("chainClosed").get<bool>();
  r.bound_holds = j.at("conclusion").at("boundHolds").get<bool>();
}

}  // namespace nsk
