#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"

namespace nsk {

// Disk types per tetrahedron, in coordinate order:
//   0..3  triangle Tv cutting off vertex v
//   4     quad Q01|23,  5  quad Q02|13,  6  quad Q03|12
// Quad k (= type - 4) separates the edge {0, k+1} ("side A") from the
// complementary edge ("side B").
inline constexpr int kDiskTypes = 7;

constexpr bool is_triangle(int type) { return type < 4; }

/// The vertex paired with v by quad k.
constexpr int quad_partner(int k, int v) {
  constexpr int table[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return table[k][v];
}

/// 0 when v lies on side A of quad k (the side containing edge {0, k+1}).
constexpr int quad_side(int k, int v) { return (v == 0 || v == k + 1) ? 0 : 1; }

/// Whether quad k meets the tetrahedron edge {i, j}.
constexpr bool quad_crosses(int k, int i, int j) { return quad_partner(k, i) != j; }

/// 7t non-negative integers [T0 T1 T2 T3 Q01|23 Q02|13 Q03|12] per tetrahedron.
class NormalCoordinates {
 public:
  NormalCoordinates() = default;
  explicit NormalCoordinates(std::size_t tet_count) : values_(kDiskTypes * tet_count, 0) {}
  /// Throws Error(Coordinates) if the length is not a multiple of 7 or an entry is negative.
  explicit NormalCoordinates(std::vector<std::int64_t> values);

  std::size_t tet_count() const { return values_.size() / kDiskTypes; }
  std::span<const std::int64_t> values() const { return values_; }

  std::int64_t get(std::size_t tet, int type) const { return values_[kDiskTypes * tet + static_cast<std::size_t>(type)]; }
  void set(std::size_t tet, int type, std::int64_t value);
  std::int64_t triangles(std::size_t tet, int vertex) const { return get(tet, vertex); }
  std::int64_t quads(std::size_t tet, int k) const { return get(tet, 4 + k); }

  /// The quad type in use in `tet`, or nullopt when the quads there are all zero.
  /// Only meaningful for admissible vectors (returns the first nonzero one).
  std::optional<int> quad_type(std::size_t tet) const;
  /// Number of quads in `tet` (sum of the three quad entries).
  std::int64_t quad_count(std::size_t tet) const;

  bool is_zero() const;
  /// Total number of disks, with overflow checking.
  std::int64_t total() const;

  NormalCoordinates scaled(std::int64_t factor) const;

  friend bool operator==(const NormalCoordinates&, const NormalCoordinates&) = default;
  friend auto operator<=>(const NormalCoordinates& a, const NormalCoordinates& b) { return a.values_ <=> b.values_; }

 private:
  std::vector<std::int64_t> values_;
};

std::string to_string(const NormalCoordinates& x);

struct AdmissibilityCheck {
  bool admissible = true;
  std::optional<std::size_t> first_violation;  // tetrahedron with two quad types
};

/// Quad condition in every tetrahedron.
AdmissibilityCheck check_admissible(const NormalCoordinates& x);
/// Same, first checking that x has 7t entries for `tri` (Error(Coordinates) otherwise).
AdmissibilityCheck check_admissible(const Triangulation& tri, const NormalCoordinates& x);

/// Number of normal arcs on face `face` of `tet` cutting off vertex `w`:
/// T_w plus the quad whose trace on that face separates w.
std::int64_t arc_count(const NormalCoordinates& x, std::size_t tet, int face, int w);

/// Number of intersection points of the disks in `tet` with its edge {i, j}.
std::int64_t edge_point_count(const NormalCoordinates& x, std::size_t tet, int i, int j);

struct MatchingViolation {
  std::size_t face_orbit = 0;
  FaceRef face;         // representative side
  int vertex = 0;       // arc type on the representative side (cut-off vertex)
  std::int64_t lhs = 0;  // arcs on the representative side
  std::int64_t rhs = 0;  // arcs of the matching type on the other side
};

struct MatchingCheck {
  bool matching = true;
  std::vector<MatchingViolation> violations;
};

MatchingCheck check_matching(const Triangulation& tri, const NormalCoordinates& x);

/// |S ∩ T^1|. Throws Error(Internal) if corner counts disagree around an edge
/// orbit, which can only happen when the matching equations fail.
std::int64_t weight(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x);
std::int64_t weight(const Triangulation& tri, const NormalCoordinates& x);

/// χ = P - A + D: weight, minus one arc total per face orbit, plus disk count.
std::int64_t euler_characteristic(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x);
std::int64_t euler_characteristic(const Triangulation& tri, const NormalCoordinates& x);

// ---------------------------------------------------------------------------
// Canonical embedded realization.

struct Disk {
  std::size_t tet = 0;
  int type = 0;
  std::int64_t index = 0;  // position in its stack
};

/// One glued pair of normal arcs across a face orbit.
struct ArcGluing {
  std::size_t face_orbit = 0;
  FaceRef side_a;          // representative side of the face orbit
  FaceRef side_b;
  int vertex_a = 0;        // cut-off vertex on side a
  int vertex_b = 0;        // its image on side b
  std::int64_t position = 0;  // distance rank from the cut-off vertex
  std::size_t disk_a = 0;
  std::size_t disk_b = 0;
  /// Whether the two disks' reference boundary directions agree across the arc.
  bool same_direction = false;
};

struct CellCounts {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::int64_t euler() const { return vertices - edges + faces; }
};

struct SurfaceComponent {
  NormalCoordinates coords;
  std::vector<std::size_t> disks;
  std::int64_t weight = 0;
  std::int64_t euler = 0;  // closed formula on `coords`
  CellCounts cells;        // counted on the glued cell complex
  bool orientable = true;
  std::optional<std::size_t> vertex_link;  // vertex orbit whose link this is
};

/// Disks stack outward from their cut-off vertex (triangles) or from edge ab
/// (quads Qab|cd); arcs of one type on a face are glued in order of distance
/// from the cut-off vertex.
struct EmbeddedSurface {
  NormalCoordinates coords;
  std::vector<Disk> disks;
  std::vector<ArcGluing> arc_gluings;
  std::vector<SurfaceComponent> components;
  std::vector<std::size_t> component_of;  // per disk
  std::vector<int> orientation;            // per disk, +1/-1 relative to its reference boundary direction
  std::int64_t weight = 0;
  std::int64_t euler = 0;
  CellCounts cells;

  std::size_t disk_id(std::size_t tet, int type, std::int64_t index) const;
  /// The disk owning the r-th arc (from w) on `face` of `tet`.
  std::size_t disk_at_arc(std::size_t tet, int face, int w, std::int64_t r) const;
  /// The disk owning the point at distance rank `pos` from vertex i on edge {i, j} of `tet`.
  std::size_t disk_at_point(std::size_t tet, int i, int j, std::int64_t pos) const;
  /// Index of that point among all per-tetrahedron edge points.
  std::size_t point_id(std::size_t tet, int i, int j, std::int64_t pos) const;
  std::size_t point_count() const { return point_offset_.empty() ? 0 : point_offset_.back(); }
  /// Surface vertex (class of glued points) of a per-tetrahedron point.
  std::size_t surface_vertex(std::size_t point) const { return vertex_of_point_[point]; }

  /// Side of `disk` facing vertex w of its tetrahedron: 0 is the side toward the
  /// cut-off vertex (triangles) or toward edge ab (quads Qab|cd).
  int side_facing(std::size_t disk, int w) const;

 private:
  friend EmbeddedSurface reconstruct(const Triangulation&, const SkeletonIndex&, const NormalCoordinates&);
  std::vector<std::size_t> disk_offset_;   // [tet*7 + type], plus a final total
  std::vector<std::size_t> point_offset_;  // [tet*6 + edge], plus a final total
  std::vector<std::size_t> vertex_of_point_;
};

/// Reference boundary direction of a disk's arc on `face`: the arc cuts off some
/// vertex w and runs from the corner on edge {w, first} to the corner on {w, second}.
std::pair<int, int> arc_direction(int type, int face);

/// Largest number of disks reconstruct() will instantiate.
inline constexpr std::int64_t kMaxRealizedDisks = std::int64_t{1} << 22;

/// Throws Error(Coordinates) unless x is admissible and matching, and
/// Error(Envelope) above kMaxRealizedDisks.
EmbeddedSurface reconstruct(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x);

// ---------------------------------------------------------------------------
// .nsc files: header `surfaces n tets t`, then n lines of 7t integers.

struct SurfaceList {
  std::size_t tet_count = 0;
  std::vector<NormalCoordinates> surfaces;
};

SurfaceList parse_surfaces(std::string_view text);
std::string serialize(const SurfaceList& list);
SurfaceList load_surfaces(const std::string& path);

}  // namespace nsk
