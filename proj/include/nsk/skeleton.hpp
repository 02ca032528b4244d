#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "nsk/triangulation.hpp"

namespace nsk {

struct Corner {
  std::size_t tet = 0;
  int vertex = 0;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct EdgeRef {
  std::size_t tet = 0;
  int edge = 0;  // index into kEdgeVertices
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Vertex, edge and face orbits of a closed triangulation.
///
/// Orbits are numbered by first appearance when scanning tetrahedra in order
/// and, within a tetrahedron, vertices 0..3 / edges 01..23 / faces 0..3.
/// An edge orbit's representative is its first member, oriented from its
/// lower to its higher vertex label.
struct SkeletonIndex {
  std::size_t tet_count = 0;

  std::vector<std::array<std::size_t, 4>> vertex_of;   // [tet][vertex] -> vertex orbit
  std::vector<std::array<std::size_t, 6>> edge_of;     // [tet][edge]   -> edge orbit
  std::vector<std::array<bool, 6>> edge_flipped;       // tet edge runs against its orbit representative
  std::vector<std::array<std::size_t, 4>> face_of;     // [tet][face]   -> face orbit

  std::vector<std::vector<Corner>> vertex_orbits;
  std::vector<std::vector<EdgeRef>> edge_orbits;
  std::vector<std::array<FaceRef, 2>> face_orbits;     // [0] is the representative

  /// Vertex orbits at the tail and head of each edge orbit's representative.
  std::vector<std::array<std::size_t, 2>> edge_endpoints;
  /// Edge orbits that identify a directed edge with its own reverse.
  std::vector<bool> edge_reversed;
  /// Euler characteristic of each vertex link surface.
  std::vector<std::int64_t> vertex_link_euler;

  bool orientable = true;
  /// +1/-1 per tetrahedron; a consistent orientation when `orientable`.
  std::vector<int> orientation;

  std::size_t v() const { return vertex_orbits.size(); }
  std::size_t e() const { return edge_orbits.size(); }
  std::size_t f() const { return face_orbits.size(); }
  std::size_t t() const { return tet_count; }

  /// v - e + f - t
  std::int64_t euler_char() const {
    return static_cast<std::int64_t>(v()) - static_cast<std::int64_t>(e()) + static_cast<std::int64_t>(f()) -
           static_cast<std::int64_t>(t());
  }

  bool has_reversed_edges() const;
  /// True when no edge is self-reversed, so the table describes a closed 3-manifold.
  bool is_manifold() const { return !has_reversed_edges(); }
};

/// Computes all orbits by union-find closure under the face gluings.
///
/// Throws Error(NonManifold) when the table is disconnected or some vertex
/// link is not a 2-sphere (the message names the offending vertex orbit).
/// Self-reversed edges are accepted and reported through `edge_reversed`.
SkeletonIndex build_skeleton(const Triangulation& tri);

}  // namespace nsk
