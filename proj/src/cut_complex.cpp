#include "nsk/cut_complex.hpp"

#include <algorithm>
#include <string>

#include "disjoint_sets.hpp"
#include "nsk/error.hpp"

namespace nsk {

const char* to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::TriPrism: return "TriPrism";
    case RegionKind::QuadPrism: return "QuadPrism";
    case RegionKind::TruncatedTetrahedron: return "TruncatedTetrahedron";
    case RegionKind::TruncatedPrism: return "TruncatedPrism";
  }
  return "?";
}

const char* to_string(ProductFlag flag) {
  switch (flag) {
    case ProductFlag::None: return "none";
    case ProductFlag::ParallelSurfaces: return "parallel-surfaces";
    case ProductFlag::VertexLinkParallel: return "vertex-link-parallel";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// RegionMap lookups

std::size_t RegionMap::tri_prism(std::size_t tet, int v, std::int64_t layer) const {
  return tri_first_[tet][static_cast<std::size_t>(v)] + static_cast<std::size_t>(layer);
}

std::size_t RegionMap::quad_prism(std::size_t tet, std::int64_t layer) const {
  return quad_first_[tet] + static_cast<std::size_t>(layer);
}

std::size_t RegionMap::bad_region(std::size_t tet, int v) const {
  const auto& p = profile_[tet];
  return bad_first_[tet] + (p.quads == 0 ? 0 : static_cast<std::size_t>(quad_side(p.quad_type, v)));
}

std::size_t RegionMap::region_of_side(const EmbeddedSurface& s, DiskSide side) const {
  const Disk& d = s.disks[side.disk];
  const auto& p = profile_[d.tet];
  if (is_triangle(d.type)) {
    if (side.side == 0) return tri_prism(d.tet, d.type, d.index);
    return d.index + 1 < p.triangles[static_cast<std::size_t>(d.type)] ? tri_prism(d.tet, d.type, d.index + 1)
                                                                      : bad_region(d.tet, d.type);
  }
  if (side.side == 0) return d.index >= 1 ? quad_prism(d.tet, d.index - 1) : bad_first_[d.tet];
  return d.index + 1 < p.quads ? quad_prism(d.tet, d.index) : bad_first_[d.tet] + 1;
}

std::size_t RegionMap::region_of_boundary_triangle(std::size_t tet, int vertex) const {
  return profile_[tet].triangles[static_cast<std::size_t>(vertex)] > 0 ? tri_prism(tet, vertex, 0)
                                                                       : bad_region(tet, vertex);
}

std::size_t RegionMap::region_of_strip(std::size_t tet, int face, int w, std::int64_t r) const {
  const auto& p = profile_[tet];
  const std::int64_t tw = p.triangles[static_cast<std::size_t>(w)];
  if (r < tw) return tri_prism(tet, w, r);
  if (p.quads == 0 || quad_partner(p.quad_type, face) != w)
    throw Error(ErrorKind::Internal, "strip beyond the arcs of its face");
  const std::int64_t j = r - tw;
  if (j == 0) return bad_region(tet, w);
  return quad_side(p.quad_type, w) == 0 ? quad_prism(tet, j - 1) : quad_prism(tet, p.quads - 1 - j);
}

std::size_t RegionMap::region_of_center(std::size_t tet, int face) const {
  const auto& p = profile_[tet];
  if (p.quads == 0) return bad_first_[tet];
  // The face's vertex paired with `face` is cut off by the quads; the centre
  // lies with the other two vertices.
  return bad_first_[tet] + static_cast<std::size_t>(1 - quad_side(p.quad_type, face));
}

std::size_t RegionMap::region_of_segment(std::size_t tet, int i, int j, int face, std::int64_t seg) const {
  auto arcs = [&](int w) {
    const auto& p = profile_[tet];
    std::int64_t n = p.triangles[static_cast<std::size_t>(w)];
    if (p.quads > 0 && quad_partner(p.quad_type, face) == w) n += p.quads;
    return n;
  };
  const std::int64_t ni = arcs(i), nj = arcs(j);
  if (seg < ni) return region_of_strip(tet, face, i, seg);
  if (seg == ni) return region_of_center(tet, face);
  return region_of_strip(tet, face, j, ni + nj - seg);
}

RegionMap build_regions(const Triangulation& tri, const EmbeddedSurface& surface) {
  const std::size_t t = tri.size();
  const NormalCoordinates& x = surface.coords;
  RegionMap map;
  map.profile_.resize(t);
  map.tet_first_.assign(t + 1, 0);
  map.tri_first_.resize(t);
  map.quad_first_.resize(t);
  map.bad_first_.resize(t);

  for (std::size_t a = 0; a < t; ++a) {
    auto& p = map.profile_[a];
    for (int v = 0; v < 4; ++v) p.triangles[static_cast<std::size_t>(v)] = x.triangles(a, v);
    if (auto k = x.quad_type(a)) {
      p.quad_type = *k;
      p.quads = x.quads(a, *k);
    }
    map.tet_first_[a] = map.regions_.size();
    for (int v = 0; v < 4; ++v) {
      map.tri_first_[a][static_cast<std::size_t>(v)] = map.regions_.size();
      for (std::int64_t layer = 0; layer < p.triangles[static_cast<std::size_t>(v)]; ++layer) {
        Region r;
        r.tet = a;
        r.kind = RegionKind::TriPrism;
        r.vertex = v;
        r.layer = layer;
        map.regions_.push_back(std::move(r));
      }
    }
    map.quad_first_[a] = map.regions_.size();
    for (std::int64_t layer = 0; layer + 1 < p.quads; ++layer) {
      Region r;
      r.tet = a;
      r.kind = RegionKind::QuadPrism;
      r.layer = layer;
      map.regions_.push_back(std::move(r));
    }
    map.bad_first_[a] = map.regions_.size();
    if (p.quads == 0) {
      Region r;
      r.tet = a;
      r.kind = RegionKind::TruncatedTetrahedron;
      map.regions_.push_back(std::move(r));
    } else {
      for (int side = 0; side < 2; ++side) {
        Region r;
        r.tet = a;
        r.kind = RegionKind::TruncatedPrism;
        r.quad_side = side;
        map.regions_.push_back(std::move(r));
      }
    }
  }
  map.tet_first_[t] = map.regions_.size();

  for (std::size_t d = 0; d < surface.disks.size(); ++d)
    for (int side = 0; side < 2; ++side) {
      DiskSide ds{d, side};
      map.regions_[map.region_of_side(surface, ds)].disk_sides.push_back(ds);
    }
  for (std::size_t a = 0; a < t; ++a)
    for (int v = 0; v < 4; ++v) map.regions_[map.region_of_boundary_triangle(a, v)].boundary_triangles.push_back(v);
  return map;
}

// ---------------------------------------------------------------------------
// Components of M* − S

namespace {

std::size_t side_node(DiskSide s) { return 2 * s.disk + static_cast<std::size_t>(s.side); }

}  // namespace

CutComponents assemble_components(const Triangulation& tri, const SkeletonIndex& sk, const EmbeddedSurface& surface,
                                  const RegionMap& regions) {
  const NormalCoordinates& x = surface.coords;
  detail::DisjointSets region_sets(regions.size());
  for (std::size_t orbit = 0; orbit < sk.f(); ++orbit) {
    const FaceRef rep = sk.face_orbits[orbit][0];
    const FaceGluing& g = tri.gluing(rep.tet, rep.face);
    const int other_face = g.perm[rep.face];
    region_sets.unite(regions.region_of_center(rep.tet, rep.face), regions.region_of_center(g.tet, other_face));
    for (int w : face_vertices(rep.face)) {
      const std::int64_t n = arc_count(x, rep.tet, rep.face, w);
      if (n != arc_count(x, g.tet, other_face, g.perm[w]))
        throw Error(ErrorKind::Internal, "arc intervals do not match across face orbit " + std::to_string(orbit));
      for (std::int64_t r = 0; r < n; ++r)
        region_sets.unite(regions.region_of_strip(rep.tet, rep.face, w, r),
                          regions.region_of_strip(g.tet, other_face, g.perm[w], r));
    }
  }

  CutComponents out;
  std::size_t count = 0;
  out.component_of_region = region_sets.labels(&count);
  out.components.resize(count);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    auto& c = out.components[out.component_of_region[r]];
    c.regions.push_back(r);
    c.good = c.good && regions[r].good();
  }

  // Boundary surfaces: sides facing the same way across every arc gluing.
  detail::DisjointSets side_sets(2 * surface.disks.size());
  for (const ArcGluing& arc : surface.arc_gluings) {
    const int near_a = surface.side_facing(arc.disk_a, arc.vertex_a);
    const int near_b = surface.side_facing(arc.disk_b, arc.vertex_b);
    side_sets.unite(side_node({arc.disk_a, near_a}), side_node({arc.disk_b, near_b}));
    side_sets.unite(side_node({arc.disk_a, 1 - near_a}), side_node({arc.disk_b, 1 - near_b}));
  }
  std::size_t surface_count = 0;
  auto side_label = side_sets.labels(&surface_count);
  out.boundary_surfaces.resize(surface_count);
  std::vector<bool> placed(surface_count, false);
  for (std::size_t d = 0; d < surface.disks.size(); ++d)
    for (int side = 0; side < 2; ++side) {
      DiskSide ds{d, side};
      auto& bs = out.boundary_surfaces[side_label[side_node(ds)]];
      const std::size_t comp = out.component_of_region[regions.region_of_side(surface, ds)];
      if (!placed[side_label[side_node(ds)]]) {
        placed[side_label[side_node(ds)]] = true;
        bs.cut_component = comp;
        bs.surface_component = surface.component_of[d];
      } else if (bs.cut_component != comp) {
        throw Error(ErrorKind::Internal, "a boundary surface meets two components of M* - S");
      }
      bs.sides.push_back(ds);
    }
  for (std::size_t i = 0; i < out.boundary_surfaces.size(); ++i)
    out.components[out.boundary_surfaces[i].cut_component].boundary_surfaces.push_back(i);

  for (std::size_t orbit = 0; orbit < sk.v(); ++orbit) {
    const Corner first = sk.vertex_orbits[orbit].front();
    const std::size_t comp = out.component_of_region[regions.region_of_boundary_triangle(first.tet, first.vertex)];
    for (const Corner& c : sk.vertex_orbits[orbit])
      if (out.component_of_region[regions.region_of_boundary_triangle(c.tet, c.vertex)] != comp)
        throw Error(ErrorKind::Internal, "vertex-link sphere " + std::to_string(orbit) + " meets two components");
    out.components[comp].link_spheres.push_back(orbit);
  }

  for (auto& c : out.components) {
    if (!c.good) continue;
    c.horizontal_count = c.boundary_surfaces.size() + c.link_spheres.size();
    if (c.horizontal_count == 2) {
      if (c.boundary_surfaces.size() == 2)
        c.flag = ProductFlag::ParallelSurfaces;
      else if (c.boundary_surfaces.size() == 1)
        c.flag = ProductFlag::VertexLinkParallel;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Remnants

RemnantSet collect_remnants(const Triangulation& tri, const EmbeddedSurface& surface, const RegionMap& regions,
                            const CutComponents& components) {
  RemnantSet out;
  const std::size_t t = surface.coords.tet_count();
  out.bad_per_tet.assign(t, {0, 0});

  std::vector<std::size_t> remnant_of_side(2 * surface.disks.size(), 0);
  for (std::size_t i = 0; i < components.boundary_surfaces.size(); ++i) {
    const BoundarySurface& bs = components.boundary_surfaces[i];
    Remnant r;
    r.component = bs.cut_component;
    r.surface_component = bs.surface_component;
    r.good = components.components[bs.cut_component].good;
    r.sides = bs.sides;
    for (const DiskSide& ds : bs.sides) {
      remnant_of_side[side_node(ds)] = i;
      if (regions[regions.region_of_side(surface, ds)].good()) continue;
      const Disk& d = surface.disks[ds.disk];
      if (is_triangle(d.type)) {
        ++r.bad_triangles;
        ++out.bad_per_tet[d.tet][0];
      } else {
        ++r.bad_quads;
        ++out.bad_per_tet[d.tet][1];
      }
    }
    (r.good ? out.g : out.b) += 1;
    out.s += r.bad_triangles;
    out.q += r.bad_quads;
    r.euler = static_cast<std::int64_t>(r.sides.size());
    out.remnants.push_back(std::move(r));
  }

  // Side-level cell complex of each remnant: faces are disk sides, edges are
  // arc sides, vertices are classes of (edge point, disk side).
  detail::DisjointSets corner_sets(2 * surface.point_count());
  for (const ArcGluing& arc : surface.arc_gluings) {
    const int near_a = surface.side_facing(arc.disk_a, arc.vertex_a);
    const int near_b = surface.side_facing(arc.disk_b, arc.vertex_b);
    const Perm4 p = tri.gluing(arc.side_a.tet, arc.side_a.face).perm;
    for (int x : face_vertices(arc.side_a.face)) {
      if (x == arc.vertex_a) continue;
      const std::size_t pa = surface.point_id(arc.side_a.tet, arc.vertex_a, x, arc.position);
      const std::size_t pb = surface.point_id(arc.side_b.tet, arc.vertex_b, p[x], arc.position);
      corner_sets.unite(2 * pa + static_cast<std::size_t>(near_a), 2 * pb + static_cast<std::size_t>(near_b));
      corner_sets.unite(2 * pa + static_cast<std::size_t>(1 - near_a), 2 * pb + static_cast<std::size_t>(1 - near_b));
    }
    out.remnants[remnant_of_side[side_node({arc.disk_a, near_a})]].euler -= 1;
    out.remnants[remnant_of_side[side_node({arc.disk_a, 1 - near_a})]].euler -= 1;
  }
  std::vector<bool> counted(2 * surface.point_count(), false);
  for (std::size_t a = 0; a < t; ++a)
    for (int e = 0; e < 6; ++e) {
      const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
      const std::int64_t n = edge_point_count(surface.coords, a, i, j);
      for (std::int64_t pos = 0; pos < n; ++pos) {
        const std::size_t point = surface.point_id(a, i, j, pos);
        const std::size_t disk = surface.disk_at_point(a, i, j, pos);
        for (int side = 0; side < 2; ++side) {
          const std::size_t root = corner_sets.find(2 * point + static_cast<std::size_t>(side));
          if (counted[root]) continue;
          counted[root] = true;
          out.remnants[remnant_of_side[side_node({disk, side})]].euler += 1;
        }
      }
    }
  return out;
}

ClaimTwoAudit claim_two_audit(const RemnantSet& remnants) {
  ClaimTwoAudit audit;
  for (std::size_t i = 0; i < remnants.remnants.size(); ++i) {
    const Remnant& r = remnants.remnants[i];
    if (r.good) continue;
    audit.bad_remnants.push_back({i, r.bad_disks()});
    if (!audit.minimum || r.bad_disks() < *audit.minimum) audit.minimum = r.bad_disks();
    if (r.bad_disks() < 2) audit.violations.push_back(i);
  }
  return audit;
}

CutComplex cut_along(const Triangulation& tri, const SkeletonIndex& sk, const EmbeddedSurface& surface) {
  CutComplex cc;
  cc.regions = build_regions(tri, surface);
  cc.components = assemble_components(tri, sk, surface, cc.regions);
  cc.remnants = collect_remnants(tri, surface, cc.regions, cc.components);
  cc.audit = claim_two_audit(cc.remnants);
  return cc;
}

}  // namespace nsk
