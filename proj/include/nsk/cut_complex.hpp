#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nsk/normal_surface.hpp"
#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"

namespace nsk {

// Cutting M* (M minus open vertex neighbourhoods) along an embedded normal
// surface. Inside one tetrahedron the pieces are
//   - TriPrism:   between consecutive triangles of one vertex stack, or between
//                 the vertex-link boundary triangle and the first triangle;
//   - QuadPrism:  between consecutive quads;
//   - TruncatedTetrahedron: the middle piece when the tetrahedron has no quads;
//   - TruncatedPrism: the two middle pieces on either side of the quad stack.
// Prisms are the good cells; the truncated pieces are the bad ones.

enum class RegionKind { TriPrism, QuadPrism, TruncatedTetrahedron, TruncatedPrism };

const char* to_string(RegionKind kind);

constexpr bool is_good(RegionKind kind) { return kind == RegionKind::TriPrism || kind == RegionKind::QuadPrism; }

/// Side 0 of a disk faces its cut-off vertex (triangles) or the edge ab of
/// its quad type Qab|cd ("side A"); side 1 faces away.
struct DiskSide {
  std::size_t disk = 0;
  int side = 0;
  friend bool operator==(const DiskSide&, const DiskSide&) = default;
};

struct Region {
  std::size_t tet = 0;
  RegionKind kind = RegionKind::TruncatedTetrahedron;
  int vertex = -1;          // TriPrism: the vertex stack
  std::int64_t layer = 0;   // TriPrism: 0 next to the boundary triangle; QuadPrism: between quads layer, layer+1
  int quad_side = -1;       // TruncatedPrism: 0 = side A, 1 = side B
  std::vector<DiskSide> disk_sides;
  std::vector<int> boundary_triangles;  // corners of this tet whose vertex-link triangle bounds the region

  bool good() const { return is_good(kind); }
};

/// All regions of Δ* − S, grouped per tetrahedron, with lookups from disk
/// sides, boundary triangles and face pieces to the region containing them.
class RegionMap {
 public:
  const std::vector<Region>& regions() const { return regions_; }
  std::size_t size() const { return regions_.size(); }
  const Region& operator[](std::size_t id) const { return regions_[id]; }

  /// Region ids of one tetrahedron: TriPrisms by vertex then layer, QuadPrisms
  /// by layer, then the bad region(s).
  std::pair<std::size_t, std::size_t> tet_range(std::size_t tet) const { return {tet_first_[tet], tet_first_[tet + 1]}; }

  std::size_t region_of_side(const EmbeddedSurface& s, DiskSide side) const;
  std::size_t region_of_boundary_triangle(std::size_t tet, int vertex) const;
  /// Region holding the r-th strip from vertex w on `face` (between arcs r-1 and r).
  std::size_t region_of_strip(std::size_t tet, int face, int w, std::int64_t r) const;
  /// Region holding the part of `face` beyond every arc.
  std::size_t region_of_center(std::size_t tet, int face) const;
  /// Region holding segment `seg` of edge {i, j} (segments numbered from i) inside `face`.
  std::size_t region_of_segment(std::size_t tet, int i, int j, int face, std::int64_t seg) const;

 private:
  friend RegionMap build_regions(const Triangulation&, const EmbeddedSurface&);

  std::size_t tri_prism(std::size_t tet, int v, std::int64_t layer) const;
  std::size_t quad_prism(std::size_t tet, std::int64_t layer) const;
  std::size_t bad_region(std::size_t tet, int v) const;  // bad region on vertex v's side

  struct TetProfile {
    std::array<std::int64_t, 4> triangles{};
    int quad_type = -1;
    std::int64_t quads = 0;
  };

  std::vector<TetProfile> profile_;
  std::vector<Region> regions_;
  std::vector<std::size_t> tet_first_;
  std::vector<std::array<std::size_t, 4>> tri_first_;  // first TriPrism id per vertex stack
  std::vector<std::size_t> quad_first_;
  std::vector<std::size_t> bad_first_;
};

/// Region census per tetrahedron, every disk side and boundary triangle assigned once.
RegionMap build_regions(const Triangulation& tri, const EmbeddedSurface& surface);

/// A boundary surface of a component of M* − S made of disk sides.
struct BoundarySurface {
  std::vector<DiskSide> sides;
  std::size_t surface_component = 0;  // component of S it lies on
  std::size_t cut_component = 0;
};

enum class ProductFlag {
  None,
  ParallelSurfaces,    // good component whose horizontal boundary is two remnants
  VertexLinkParallel,  // good component between a remnant and a vertex-link sphere
};

const char* to_string(ProductFlag flag);

struct CutComponent {
  std::vector<std::size_t> regions;
  bool good = true;
  std::vector<std::size_t> boundary_surfaces;  // indices into CutComplex::boundary_surfaces
  std::vector<std::size_t> link_spheres;       // vertex orbits whose ∂M* sphere bounds this component
  /// Good components only: boundary surfaces plus link spheres (1 twisted, 2 product).
  std::size_t horizontal_count = 0;
  ProductFlag flag = ProductFlag::None;
};

struct CutComponents {
  std::vector<CutComponent> components;
  std::vector<std::size_t> component_of_region;
  std::vector<BoundarySurface> boundary_surfaces;
};

/// Glues regions across face orbits piece by piece (the r-th strip from w on
/// one side meets the r-th strip from p(w) on the other, centres meet centres).
CutComponents assemble_components(const Triangulation& tri, const SkeletonIndex& sk, const EmbeddedSurface& surface,
                                  const RegionMap& regions);

struct Remnant {
  std::size_t component = 0;  // cut component
  std::size_t surface_component = 0;
  bool good = false;
  std::vector<DiskSide> sides;
  std::int64_t bad_triangles = 0;
  std::int64_t bad_quads = 0;
  std::int64_t euler = 0;  // from its own side-level cell complex
  std::int64_t bad_disks() const { return bad_triangles + bad_quads; }
};

struct RemnantSet {
  std::vector<Remnant> remnants;
  std::int64_t g = 0;
  std::int64_t b = 0;
  std::int64_t s = 0;  // bad triangle sides
  std::int64_t q = 0;  // bad quad sides
  std::vector<std::array<std::int64_t, 2>> bad_per_tet;  // [tet] -> {triangles, quads}
};

/// Remnants are the boundary surfaces of the cut components; ∂M* spheres are
/// never remnants. A disk side is bad when it bounds a bad region.
RemnantSet collect_remnants(const Triangulation& tri, const EmbeddedSurface& surface, const RegionMap& regions, const CutComponents& components);

struct ClaimTwoAudit {
  struct Entry {
    std::size_t remnant = 0;
    std::int64_t bad_disks = 0;
  };
  std::vector<Entry> bad_remnants;
  std::optional<std::int64_t> minimum;
  std::vector<std::size_t> violations;  // bad remnants with fewer than two bad disks
  bool passed() const { return violations.empty(); }
};

ClaimTwoAudit claim_two_audit(const RemnantSet& remnants);

/// The whole cut: regions, components, remnants and audit.
struct CutComplex {
  RegionMap regions;
  CutComponents components;
  RemnantSet remnants;
  ClaimTwoAudit audit;
};

CutComplex cut_along(const Triangulation& tri, const SkeletonIndex& sk, const EmbeddedSurface& surface);

}  // namespace nsk
