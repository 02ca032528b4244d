#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nsk/cut_complex.hpp"
#include "nsk/enumeration.hpp"
#include "nsk/skeleton.hpp"
#include "support.hpp"

using namespace nsk;

namespace {

struct Instance {
  std::string name;
  Triangulation tri;
  SkeletonIndex sk;
  EmbeddedSurface surface;
  CutComplex cut;
};

Instance make(const std::string& name, const NormalCoordinates& x) {
  Triangulation tri = test::corpus_tri(name);
  SkeletonIndex sk = build_skeleton(tri);
  EmbeddedSurface s = reconstruct(tri, sk, x);
  CutComplex cc = cut_along(tri, sk, s);
  return {name, std::move(tri), std::move(sk), std::move(s), std::move(cc)};
}

NormalCoordinates one_tet(std::vector<std::int64_t> v) { return NormalCoordinates(std::move(v)); }

std::vector<std::pair<std::string, NormalCoordinates>> small_surfaces() {
  std::vector<std::pair<std::string, NormalCoordinates>> out;
  for (const auto& name : test::corpus_names())
    for (auto& x : enumerate(test::corpus_tri(name), EnumerationQuery{})) out.emplace_back(name, std::move(x));
  return out;
}

std::size_t count_kind(const RegionMap& m, std::size_t tet, RegionKind kind) {
  const auto [lo, hi] = m.tet_range(tet);
  std::size_t n = 0;
  for (std::size_t r = lo; r < hi; ++r) n += m[r].kind == kind;
  return n;
}

/// Decides good/bad from the trace on the tetrahedron boundary: a region's
/// face pieces are discs joined along edge segments; the trace is an annulus
/// exactly when the pieces and the segments joining them form a cycle
/// (pieces - segments == 0), and a disc with holes otherwise.
std::map<std::size_t, std::int64_t> trace_euler(const Instance& in) {
  std::map<std::size_t, std::int64_t> chi;
  const NormalCoordinates& x = in.surface.coords;
  for (std::size_t a = 0; a < in.tri.size(); ++a) {
    for (int f = 0; f < 4; ++f) {
      ++chi[in.cut.regions.region_of_center(a, f)];
      for (int w : face_vertices(f))
        for (std::int64_t r = 0; r < arc_count(x, a, f, w); ++r) ++chi[in.cut.regions.region_of_strip(a, f, w, r)];
    }
    for (int e = 0; e < 6; ++e) {
      const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
      const auto faces = edge_faces(i, j);
      for (std::int64_t seg = 0; seg <= edge_point_count(x, a, i, j); ++seg) {
        const std::size_t r0 = in.cut.regions.region_of_segment(a, i, j, faces[0], seg);
        const std::size_t r1 = in.cut.regions.region_of_segment(a, i, j, faces[1], seg);
        CHECK(r0 == r1);
        --chi[r0];
      }
    }
  }
  return chi;
}

}  // namespace

TEST_CASE("empty surface: one truncated tetrahedron per tetrahedron") {
  const Instance in = make("t1_l41", NormalCoordinates(1));
  REQUIRE(in.cut.regions.size() == 1);
  CHECK(in.cut.regions[0].kind == RegionKind::TruncatedTetrahedron);
  CHECK(in.cut.regions[0].disk_sides.empty());
  CHECK(in.cut.regions[0].boundary_triangles.size() == 4);
  REQUIRE(in.cut.components.components.size() == 1);
  CHECK_FALSE(in.cut.components.components[0].good);
  CHECK(in.cut.remnants.remnants.empty());
  CHECK(in.cut.remnants.g == 0);
  CHECK(in.cut.remnants.b == 0);
  CHECK(in.cut.remnants.s == 0);
  CHECK(in.cut.remnants.q == 0);
  CHECK(in.cut.audit.passed());
  CHECK(in.cut.audit.bad_remnants.empty());
}

TEST_CASE("one triangle at every corner: four prisms around a truncated tetrahedron") {
  const Instance in = make("t1_l41", one_tet({1, 1, 1, 1, 0, 0, 0}));
  CHECK(count_kind(in.cut.regions, 0, RegionKind::TriPrism) == 4);
  CHECK(count_kind(in.cut.regions, 0, RegionKind::TruncatedTetrahedron) == 1);
  const auto [lo, hi] = in.cut.regions.tet_range(0);
  for (std::size_t r = lo; r < hi; ++r) {
    const Region& region = in.cut.regions[r];
    if (region.kind != RegionKind::TruncatedTetrahedron) continue;
    CHECK(region.disk_sides.size() == 4);  // the far sides of four triangles of different types
    std::set<int> types;
    for (const auto& ds : region.disk_sides) {
      types.insert(in.surface.disks[ds.disk].type);
      CHECK(ds.side == 1);
    }
    CHECK(types.size() == 4);
  }
}

TEST_CASE("two quads: one quad prism between two truncated prisms") {
  const Instance in = make("t1_2v", one_tet({0, 0, 0, 0, 2, 0, 0}));
  CHECK(in.cut.regions.size() == 3);
  CHECK(count_kind(in.cut.regions, 0, RegionKind::QuadPrism) == 1);
  CHECK(count_kind(in.cut.regions, 0, RegionKind::TruncatedPrism) == 2);
  for (std::int64_t m = 1; m <= 5; ++m) {
    const Instance stack = make("t1_2v", one_tet({0, 0, 0, 0, m, 0, 0}));
    CHECK(stack.cut.regions.size() == static_cast<std::size_t>(m + 1));
  }
}

TEST_CASE("region census and side assignment") {
  for (const auto& [name, x] : small_surfaces()) {
    CAPTURE(name);
    CAPTURE(to_string(x));
    const Instance in = make(name, x);
    for (std::size_t a = 0; a < in.tri.size(); ++a) {
      const std::int64_t m = x.quad_count(a);
      const std::int64_t expected =
          x.triangles(a, 0) + x.triangles(a, 1) + x.triangles(a, 2) + x.triangles(a, 3) + std::max<std::int64_t>(m - 1, 0) +
          (m == 0 ? 1 : 2);
      const auto [lo, hi] = in.cut.regions.tet_range(a);
      CHECK(static_cast<std::int64_t>(hi - lo) == expected);
    }
    std::size_t sides = 0, triangles = 0;
    for (const Region& r : in.cut.regions.regions()) {
      sides += r.disk_sides.size();
      triangles += r.boundary_triangles.size();
    }
    CHECK(sides == 2 * in.surface.disks.size());
    CHECK(triangles == 4 * in.tri.size());
    std::set<std::pair<std::size_t, int>> seen;
    for (const Region& r : in.cut.regions.regions())
      for (const auto& ds : r.disk_sides) CHECK(seen.insert({ds.disk, ds.side}).second);
  }
}

TEST_CASE("structural good/bad agrees with the boundary trace") {
  for (const auto& [name, x] : small_surfaces()) {
    const Instance in = make(name, x);
    const auto chi = trace_euler(in);
    for (std::size_t r = 0; r < in.cut.regions.size(); ++r) {
      CAPTURE(r);
      CHECK(in.cut.regions[r].good() == (chi.at(r) == 0));
    }
  }
}

TEST_CASE("component goodness is the conjunction of its regions") {
  for (const auto& [name, x] : small_surfaces()) {
    const Instance in = make(name, x);
    const auto& comps = in.cut.components;
    std::vector<bool> good(comps.components.size(), true);
    for (std::size_t r = 0; r < in.cut.regions.size(); ++r)
      if (!in.cut.regions[r].good()) good[comps.component_of_region[r]] = false;
    for (std::size_t c = 0; c < good.size(); ++c) CHECK(comps.components[c].good == good[c]);
  }
}

TEST_CASE("vertex link: a flagged collar and the rest") {
  const Triangulation tri = test::corpus_tri("t2_closed");
  const SkeletonIndex sk = build_skeleton(tri);
  const Instance in = make("t2_closed", vertex_link(sk, 0));
  const auto& comps = in.cut.components.components;
  REQUIRE(comps.size() == 2);
  std::size_t collar = comps[0].good ? 0 : 1;
  CHECK(comps[collar].good);
  CHECK_FALSE(comps[1 - collar].good);
  CHECK(comps[collar].flag == ProductFlag::VertexLinkParallel);
  CHECK(comps[collar].horizontal_count == 2);
  // the collar is exactly the layer-0 TriPrisms
  std::size_t layer0 = 0;
  for (std::size_t r : comps[collar].regions) {
    CHECK(in.cut.regions[r].kind == RegionKind::TriPrism);
    CHECK(in.cut.regions[r].layer == 0);
    ++layer0;
  }
  CHECK(layer0 == sk.vertex_orbits[0].size());
}

TEST_CASE("doubled surface: a product between the copies") {
  const auto sphere = test::corpus_surfaces("t2_closed_sphere.nsc").surfaces[0];
  const Instance in = make("t2_closed", sphere.scaled(2));
  std::size_t flagged = 0;
  for (const auto& c : in.cut.components.components)
    if (c.flag == ProductFlag::ParallelSurfaces) {
      ++flagged;
      CHECK(c.good);
      CHECK(c.boundary_surfaces.size() == 2);
    }
  CHECK(flagged >= 1);
}

TEST_CASE("remnant accounting on two-sided instances") {
  for (const auto& [name, x] : small_surfaces()) {
    const Instance in = make(name, x);
    if (!in.sk.orientable) continue;
    bool two_sided = true;
    for (const auto& c : in.surface.components) two_sided = two_sided && c.orientable;
    if (!two_sided) continue;
    CAPTURE(name);
    CAPTURE(to_string(x));
    const auto& rs = in.cut.remnants;
    CHECK(rs.remnants.size() == 2 * in.surface.components.size());
    CHECK(rs.g + rs.b == 2 * static_cast<std::int64_t>(in.surface.components.size()));
    // each component of S contributes its two sides, each with the component's Euler characteristic
    std::map<std::size_t, int> per_component;
    for (const auto& r : rs.remnants) {
      ++per_component[r.surface_component];
      CHECK(r.euler == in.surface.components[r.surface_component].euler);
    }
    for (const auto& [c, n] : per_component) CHECK(n == 2);
  }
}

TEST_CASE("one-sided components leave a single remnant of twice the Euler characteristic") {
  const Instance in = make("t2_closed", NormalCoordinates(std::vector<std::int64_t>{0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0}));
  REQUIRE(in.cut.remnants.remnants.size() == 1);
  CHECK(in.cut.remnants.remnants[0].euler == 2 * in.surface.euler);
}

TEST_CASE("bad disk bounds") {
  for (const auto& [name, x] : small_surfaces()) {
    const Instance in = make(name, x);
    const auto& rs = in.cut.remnants;
    const auto t = static_cast<std::int64_t>(in.tri.size());
    for (const auto& [tris, quads] : rs.bad_per_tet) {
      CHECK(tris <= 4);
      CHECK(quads <= 2);
    }
    CHECK(rs.s <= 4 * t);
    CHECK(rs.q <= 2 * t);
    std::int64_t total = 0;
    for (const auto& r : rs.remnants) total += r.bad_disks();
    CHECK(total == rs.s + rs.q);
  }
}

TEST_CASE("sphere in S2 x S1 against the oracle values") {
  const auto sphere = test::corpus_surfaces("t2_closed_sphere.nsc").surfaces[0];
  const Instance in = make("t2_closed", sphere);
  const auto& rs = in.cut.remnants;
  CHECK(rs.g == 0);
  CHECK(rs.b == 2);
  CHECK(rs.s == 4);
  CHECK(rs.q == 4);
  CHECK(in.cut.components.components.size() == 1);
  CHECK(in.cut.audit.passed());
  CHECK(in.cut.audit.minimum == 4);
}

TEST_CASE("claim-two audit flags thin bad remnants") {
  const Instance in = make("t1_2v", one_tet({0, 0, 0, 0, 1, 0, 0}));
  CHECK_FALSE(in.cut.audit.passed());
  CHECK(in.cut.audit.violations.size() == 2);
  CHECK(in.cut.audit.minimum == 1);
  // a quad stack of height one bounds both truncated prisms
  CHECK(in.cut.remnants.q == 2);
  CHECK(in.cut.remnants.bad_per_tet[0][1] == 2);
}
