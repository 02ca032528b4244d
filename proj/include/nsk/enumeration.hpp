#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nsk/normal_surface.hpp"
#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"

namespace nsk {

/// One triangle at every corner of the vertex orbit, no quads.
NormalCoordinates vertex_link(const SkeletonIndex& sk, std::size_t orbit);

/// Entrywise sum. Throws Error(Incompatible) naming the first tetrahedron where
/// x and y use different quad types, Error(Coordinates) on length mismatch.
NormalCoordinates haken_sum(const NormalCoordinates& x, const NormalCoordinates& y);

/// True when x is c·L for some vertex link L and c >= 1.
bool is_vertex_link_multiple(const SkeletonIndex& sk, const NormalCoordinates& x);

struct EnumerationQuery {
  std::int64_t cap = 1;
  /// Per tetrahedron: -1 for no quads, 0..2 for the only quad type allowed.
  std::optional<std::vector<int>> quad_profile;
  bool connected = false;
  bool orientable = false;
  bool exclude_vertex_links = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> chi;  // inclusive range
};

inline constexpr std::size_t kMaxEnumerationTets = 3;
inline constexpr std::int64_t kMaxEnumerationCap = 2;

/// (cap+1)^(7t), the unpruned grid size (saturates at the double range).
double search_space_estimate(std::size_t tet_count, std::int64_t cap);

/// All admissible matching vectors with entries in [0, cap] that pass the
/// filters, sorted lexicographically. Includes the zero vector unless a
/// filter excludes it. Throws Error(Envelope) outside t <= 3, cap <= 2.
std::vector<NormalCoordinates> enumerate(const Triangulation& tri, const SkeletonIndex& sk,
                                         const EnumerationQuery& query);
std::vector<NormalCoordinates> enumerate(const Triangulation& tri, const EnumerationQuery& query);

}  // namespace nsk
