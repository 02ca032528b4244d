#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsk/perm.hpp"

namespace nsk {

// Tetrahedron combinatorics. Face f is the face opposite vertex f; edges are
// numbered 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return i == 0 ? j - 1 : (i == 1 ? j + 1 : 5);
}

/// The three vertices of face f in increasing order.
constexpr std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> out{};
  int n = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) out[static_cast<std::size_t>(n++)] = v;
  return out;
}

/// The two faces containing the edge {i, j}.
constexpr std::array<int, 2> edge_faces(int i, int j) {
  std::array<int, 2> out{};
  int n = 0;
  for (int f = 0; f < 4; ++f)
    if (f != i && f != j) out[static_cast<std::size_t>(n++)] = f;
  return out;
}

struct FaceGluing {
  std::size_t tet = 0;
  Perm4 perm;  // source vertex labels -> target vertex labels

  friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

struct FaceRef {
  std::size_t tet = 0;
  int face = 0;

  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// A closed pseudo-triangulation given by its face-gluing table. Immutable;
/// the constructor enforces every table-level invariant.
class Triangulation {
 public:
  using Row = std::array<FaceGluing, 4>;

  /// Throws Error(InvalidGluing) on out-of-range targets, a face glued to
  /// itself, a permutation not carrying face f onto face p(f), or a missing
  /// inverse record.
  explicit Triangulation(std::vector<Row> gluings);

  std::size_t size() const { return gluings_.size(); }
  const FaceGluing& gluing(std::size_t tet, int face) const { return gluings_[tet][static_cast<std::size_t>(face)]; }
  const std::vector<Row>& gluings() const { return gluings_; }

  /// The face on the other side of (tet, face).
  FaceRef partner(std::size_t tet, int face) const {
    const auto& g = gluing(tet, face);
    return {g.tet, g.perm[face]};
  }

  /// One representative per face orbit (the lexicographically smaller side),
  /// in orbit order. This order defines face orbit indices everywhere.
  std::vector<FaceRef> face_orbit_representatives() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<Row> gluings_;
};

/// Parses the line-oriented .tri format. Throws Error(Syntax) with the line
/// number, Error(UngluedFace) for a `-` record, or the constructor's errors.
Triangulation parse_triangulation(std::string_view text);

/// Writes the .tri format; parse_triangulation(serialize(T)) == T.
std::string serialize(const Triangulation& tri);

Triangulation load_triangulation(const std::string& path);

}  // namespace nsk
