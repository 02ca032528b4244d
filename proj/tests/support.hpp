#pragma once

// Helpers shared by the test binaries: corpus access, random closed
// triangulations, relabelling, and small brute-force oracles that do not go
// through the library's own orbit or elimination code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nsk/error.hpp"
#include "nsk/normal_surface.hpp"
#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"

namespace nsk::test {

inline std::filesystem::path corpus_dir() { return std::filesystem::path(NSK_SOURCE_DIR) / "corpus"; }

inline Triangulation corpus_tri(const std::string& name) {
  return load_triangulation((corpus_dir() / (name + ".tri")).string());
}

inline SurfaceList corpus_surfaces(const std::string& file) {
  return load_surfaces((corpus_dir() / file).string());
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"t1_1v",    "t1_2v",  "t1_l41",        "t2_closed",
                                              "t2_s3_4v", "t2_rp3", "t2_quaternion", "t2_nonorientable"};
  return names;
}

inline std::vector<std::string> orientable_corpus_names() {
  std::vector<std::string> out;
  for (const auto& n : corpus_names())
    if (n != "t2_nonorientable") out.push_back(n);
  return out;
}

/// A random face pairing with random compatible permutations. With
/// `orientable` every gluing permutation is odd. May be invalid.
inline Triangulation random_gluing_table(std::mt19937_64& rng, std::size_t t, bool orientable) {
  std::vector<std::size_t> faces(4 * t);
  std::iota(faces.begin(), faces.end(), 0);
  std::shuffle(faces.begin(), faces.end(), rng);
  std::vector<Triangulation::Row> rows(t);
  for (std::size_t i = 0; i < faces.size(); i += 2) {
    const std::size_t a = faces[i] / 4, b = faces[i + 1] / 4;
    const int f = static_cast<int>(faces[i] % 4), g = static_cast<int>(faces[i + 1] % 4);
    // Map f -> g, the other vertices by a random bijection.
    std::array<int, 3> src{}, dst{};
    int n = 0, m = 0;
    for (int v = 0; v < 4; ++v) {
      if (v != f) src[static_cast<std::size_t>(n++)] = v;
      if (v != g) dst[static_cast<std::size_t>(m++)] = v;
    }
    std::array<int, 4> image{};
    while (true) {
      std::shuffle(dst.begin(), dst.end(), rng);
      image[static_cast<std::size_t>(f)] = g;
      for (std::size_t k = 0; k < 3; ++k) image[static_cast<std::size_t>(src[k])] = dst[k];
      if (!orientable || Perm4(image).is_odd()) break;
    }
    const Perm4 p(image);
    rows[a][static_cast<std::size_t>(f)] = {b, p};
    rows[b][static_cast<std::size_t>(g)] = {a, p.inverse()};
  }
  return Triangulation(std::move(rows));
}

/// Rejection-samples a valid closed triangulation (sphere links, connected,
/// no self-reversed edges).
inline Triangulation random_closed_triangulation(std::mt19937_64& rng, std::size_t t, bool orientable = true) {
  while (true) {
    Triangulation tri = random_gluing_table(rng, t, orientable);
    try {
      const SkeletonIndex sk = build_skeleton(tri);
      if (!sk.has_reversed_edges()) return tri;
    } catch (const Error&) {
    }
  }
}

/// Renumbers tetrahedra by `tet_map` and relabels the vertices of tetrahedron
/// a by `vertex_maps[a]` (old label -> new label).
inline Triangulation relabel(const Triangulation& tri, const std::vector<std::size_t>& tet_map,
                             const std::vector<Perm4>& vertex_maps) {
  std::vector<Triangulation::Row> rows(tri.size());
  for (std::size_t a = 0; a < tri.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = tri.gluing(a, f);
      const Perm4 p = vertex_maps[g.tet].compose(g.perm).compose(vertex_maps[a].inverse());
      rows[tet_map[a]][static_cast<std::size_t>(vertex_maps[a][f])] = {tet_map[g.tet], p};
    }
  return Triangulation(std::move(rows));
}

inline Triangulation random_relabel(const Triangulation& tri, std::mt19937_64& rng) {
  std::vector<std::size_t> tet_map(tri.size());
  std::iota(tet_map.begin(), tet_map.end(), 0);
  std::shuffle(tet_map.begin(), tet_map.end(), rng);
  std::vector<Perm4> vertex_maps;
  for (std::size_t a = 0; a < tri.size(); ++a) {
    std::array<int, 4> image{0, 1, 2, 3};
    std::shuffle(image.begin(), image.end(), rng);
    vertex_maps.emplace_back(image);
  }
  return relabel(tri, tet_map, vertex_maps);
}

// ---------------------------------------------------------------------------
// Orbit oracle: explicit breadth-first search over identification chains.

struct OrbitOracle {
  std::size_t v = 0, e = 0, f = 0;
  std::vector<std::array<std::size_t, 4>> vertex_label;  // [tet][vertex]
  std::vector<std::array<std::size_t, 6>> edge_label;    // [tet][edge index]
  std::vector<std::array<std::size_t, 4>> face_label;
};

inline OrbitOracle bfs_orbits(const Triangulation& tri) {
  const std::size_t t = tri.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  OrbitOracle o;
  o.vertex_label.assign(t, {none, none, none, none});
  o.edge_label.assign(t, {none, none, none, none, none, none});
  o.face_label.assign(t, {none, none, none, none});

  for (std::size_t a0 = 0; a0 < t; ++a0)
    for (int v0 = 0; v0 < 4; ++v0) {
      if (o.vertex_label[a0][static_cast<std::size_t>(v0)] != none) continue;
      std::vector<std::pair<std::size_t, int>> queue{{a0, v0}};
      o.vertex_label[a0][static_cast<std::size_t>(v0)] = o.v;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [a, v] = queue[head];
        for (int f = 0; f < 4; ++f) {
          if (f == v) continue;
          const FaceGluing& g = tri.gluing(a, f);
          auto& label = o.vertex_label[g.tet][static_cast<std::size_t>(g.perm[v])];
          if (label == none) {
            label = o.v;
            queue.emplace_back(g.tet, g.perm[v]);
          }
        }
      }
      ++o.v;
    }

  for (std::size_t a0 = 0; a0 < t; ++a0)
    for (int e0 = 0; e0 < 6; ++e0) {
      if (o.edge_label[a0][static_cast<std::size_t>(e0)] != none) continue;
      std::vector<std::pair<std::size_t, int>> queue{{a0, e0}};
      o.edge_label[a0][static_cast<std::size_t>(e0)] = o.e;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [a, e] = queue[head];
        const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
        for (int f = 0; f < 4; ++f) {
          if (f == i || f == j) continue;
          const FaceGluing& g = tri.gluing(a, f);
          const int image = edge_index(std::min(g.perm[i], g.perm[j]), std::max(g.perm[i], g.perm[j]));
          auto& label = o.edge_label[g.tet][static_cast<std::size_t>(image)];
          if (label == none) {
            label = o.e;
            queue.emplace_back(g.tet, image);
          }
        }
      }
      ++o.e;
    }

  for (std::size_t a = 0; a < t; ++a)
    for (int f = 0; f < 4; ++f) {
      if (o.face_label[a][static_cast<std::size_t>(f)] != none) continue;
      const FaceGluing& g = tri.gluing(a, f);
      o.face_label[a][static_cast<std::size_t>(f)] = o.f;
      o.face_label[g.tet][static_cast<std::size_t>(g.perm[f])] = o.f;
      ++o.f;
    }
  return o;
}

// ---------------------------------------------------------------------------
// Rank oracle: row reduction on byte matrices, built from the BFS labels.

inline std::size_t gf2_rank_bytes(std::vector<std::vector<std::uint8_t>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot][c]) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

/// rank H1(M; Z2) = e - rank d1 - rank d2, with d1, d2 assembled from tetrahedron 0-, 1- and 2-faces.
inline std::size_t h1_rank_oracle(const Triangulation& tri) {
  const OrbitOracle o = bfs_orbits(tri);
  std::vector<std::vector<std::uint8_t>> d1(o.v, std::vector<std::uint8_t>(o.e, 0));
  std::vector<std::vector<std::uint8_t>> d2(o.e, std::vector<std::uint8_t>(o.f, 0));
  std::vector<bool> edge_done(o.e, false), face_done(o.f, false);
  for (std::size_t a = 0; a < tri.size(); ++a) {
    for (int e = 0; e < 6; ++e) {
      const std::size_t id = o.edge_label[a][static_cast<std::size_t>(e)];
      if (edge_done[id]) continue;
      edge_done[id] = true;
      const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
      d1[o.vertex_label[a][static_cast<std::size_t>(i)]][id] ^= 1;
      d1[o.vertex_label[a][static_cast<std::size_t>(j)]][id] ^= 1;
    }
    for (int f = 0; f < 4; ++f) {
      const std::size_t id = o.face_label[a][static_cast<std::size_t>(f)];
      if (face_done[id]) continue;
      face_done[id] = true;
      const auto fv = face_vertices(f);
      for (auto [x, y] : {std::pair{fv[0], fv[1]}, std::pair{fv[0], fv[2]}, std::pair{fv[1], fv[2]}})
        d2[o.edge_label[a][static_cast<std::size_t>(edge_index(x, y))]][id] ^= 1;
    }
  }
  return o.e - gf2_rank_bytes(d1) - gf2_rank_bytes(d2);
}

// ---------------------------------------------------------------------------
// Naive enumeration oracle: every vector of the full grid, filtered directly.

inline bool naive_matching(const Triangulation& tri, const std::vector<std::int64_t>& x) {
  static constexpr int quad_of_pair[4][4] = {{-1, 0, 1, 2}, {0, -1, 2, 1}, {1, 2, -1, 0}, {2, 1, 0, -1}};
  auto arcs = [&](std::size_t a, int f, int w) {
    // arcs cutting off w on face f: the triangle at w plus the quad pairing w with f
    return x[7 * a + static_cast<std::size_t>(w)] + x[7 * a + 4 + static_cast<std::size_t>(quad_of_pair[w][f])];
  };
  for (std::size_t a = 0; a < tri.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = tri.gluing(a, f);
      for (int w = 0; w < 4; ++w)
        if (w != f && arcs(a, f, w) != arcs(g.tet, g.perm[f], g.perm[w])) return false;
    }
  return true;
}

inline bool naive_admissible(const std::vector<std::int64_t>& x) {
  for (std::size_t a = 0; a * 7 < x.size(); ++a) {
    int used = 0;
    for (std::size_t k = 4; k < 7; ++k) used += x[7 * a + k] > 0;
    if (used > 1) return false;
  }
  return true;
}

inline std::vector<std::vector<std::int64_t>> naive_enumerate(const Triangulation& tri, std::int64_t cap) {
  const std::size_t n = 7 * tri.size();
  std::vector<std::int64_t> x(n, 0);
  std::vector<std::vector<std::int64_t>> out;
  while (true) {
    if (naive_admissible(x) && naive_matching(tri, x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0 && x[i - 1] == cap) x[--i] = 0;
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

inline std::vector<std::int64_t> as_vector(const NormalCoordinates& x) { return {x.values().begin(), x.values().end()}; }

}  // namespace nsk::test
