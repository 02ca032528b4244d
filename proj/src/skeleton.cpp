#include "nsk/skeleton.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "disjoint_sets.hpp"
#include "nsk/error.hpp"

namespace nsk {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::size_t directed_node(std::size_t tet, int i, int j) {
  return tet * 16 + static_cast<std::size_t>(i * 4 + j);
}

}  // namespace

bool SkeletonIndex::has_reversed_edges() const {
  return std::find(edge_reversed.begin(), edge_reversed.end(), true) != edge_reversed.end();
}

SkeletonIndex build_skeleton(const Triangulation& tri) {
  const std::size_t t = tri.size();
  SkeletonIndex sk;
  sk.tet_count = t;

  detail::DisjointSets corners(4 * t);
  detail::DisjointSets directed(16 * t);
  for (std::size_t a = 0; a < t; ++a) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(a, f);
      for (int i : face_vertices(f)) {
        corners.unite(4 * a + static_cast<std::size_t>(i), 4 * g.tet + static_cast<std::size_t>(g.perm[i]));
        for (int j : face_vertices(f))
          if (i != j) directed.unite(directed_node(a, i, j), directed_node(g.tet, g.perm[i], g.perm[j]));
      }
    }
  }

  // Orientation by breadth-first propagation; doubles as the connectivity check.
  sk.orientation.assign(t, 0);
  sk.orientation[0] = 1;
  std::queue<std::size_t> queue;
  queue.push(0);
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop();
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(a, f);
      // Odd gluing permutations preserve the standard 0123 orientation.
      int want = g.perm.is_odd() ? sk.orientation[a] : -sk.orientation[a];
      if (sk.orientation[g.tet] == 0) {
        sk.orientation[g.tet] = want;
        queue.push(g.tet);
        ++reached;
      } else if (sk.orientation[g.tet] != want) {
        sk.orientable = false;
      }
    }
  }
  if (reached != t)
    throw Error(ErrorKind::NonManifold, "gluing table is disconnected: tetrahedron 0 reaches " +
                                            std::to_string(reached) + " of " + std::to_string(t) + " tetrahedra");

  // Vertices.
  std::size_t vcount = 0;
  auto vlabel = corners.labels(&vcount);
  sk.vertex_of.resize(t);
  sk.vertex_orbits.resize(vcount);
  for (std::size_t a = 0; a < t; ++a)
    for (int v = 0; v < 4; ++v) {
      std::size_t orbit = vlabel[4 * a + static_cast<std::size_t>(v)];
      sk.vertex_of[a][static_cast<std::size_t>(v)] = orbit;
      sk.vertex_orbits[orbit].push_back({a, v});
    }

  // Edges: an undirected orbit is a directed class together with its reverse.
  std::vector<std::size_t> orbit_of_root(16 * t, kUnset);
  sk.edge_of.resize(t);
  sk.edge_flipped.resize(t);
  std::vector<std::size_t> rep_root;
  for (std::size_t a = 0; a < t; ++a) {
    for (int e = 0; e < 6; ++e) {
      auto [lo, hi] = kEdgeVertices[static_cast<std::size_t>(e)];
      std::size_t fwd = directed.find(directed_node(a, lo, hi));
      std::size_t rev = directed.find(directed_node(a, hi, lo));
      std::size_t orbit = orbit_of_root[fwd];
      if (orbit == kUnset) {
        orbit = sk.edge_orbits.size();
        orbit_of_root[fwd] = orbit;
        orbit_of_root[rev] = orbit;
        sk.edge_orbits.emplace_back();
        sk.edge_reversed.push_back(fwd == rev);
        sk.edge_endpoints.push_back({sk.vertex_of[a][static_cast<std::size_t>(lo)],
                                     sk.vertex_of[a][static_cast<std::size_t>(hi)]});
        rep_root.push_back(fwd);
      }
      sk.edge_of[a][static_cast<std::size_t>(e)] = orbit;
      sk.edge_flipped[a][static_cast<std::size_t>(e)] = !sk.edge_reversed[orbit] && fwd != rep_root[orbit];
      sk.edge_orbits[orbit].push_back({a, e});
    }
  }

  // Faces.
  sk.face_of.assign(t, {kUnset, kUnset, kUnset, kUnset});
  for (const FaceRef& rep : tri.face_orbit_representatives()) {
    FaceRef other = tri.partner(rep.tet, rep.face);
    std::size_t orbit = sk.face_orbits.size();
    sk.face_orbits.push_back({rep, other});
    sk.face_of[rep.tet][static_cast<std::size_t>(rep.face)] = orbit;
    sk.face_of[other.tet][static_cast<std::size_t>(other.face)] = orbit;
  }

  // Vertex links: one triangle per corner, 3n/2 edges (faces pair the corner
  // edges), and one link vertex per directed-edge class leaving the orbit.
  sk.vertex_link_euler.assign(vcount, 0);
  std::vector<std::vector<std::size_t>> link_vertices(vcount);
  for (std::size_t a = 0; a < t; ++a)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) link_vertices[sk.vertex_of[a][static_cast<std::size_t>(i)]].push_back(directed.find(directed_node(a, i, j)));
  for (std::size_t orbit = 0; orbit < vcount; ++orbit) {
    auto& lv = link_vertices[orbit];
    std::sort(lv.begin(), lv.end());
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    const auto n = static_cast<std::int64_t>(sk.vertex_orbits[orbit].size());
    // 2χ = 2V - 3n + 2n
    std::int64_t twice_chi = 2 * static_cast<std::int64_t>(lv.size()) - n;
    if (twice_chi % 2 != 0)
      throw Error(ErrorKind::Internal, "vertex link of orbit " + std::to_string(orbit) + " has an odd corner count");
    sk.vertex_link_euler[orbit] = twice_chi / 2;
  }
  for (std::size_t orbit = 0; orbit < vcount; ++orbit) {
    if (sk.vertex_link_euler[orbit] != 2) {
      const Corner& c = sk.vertex_orbits[orbit].front();
      throw Error(ErrorKind::NonManifold,
                  "vertex orbit " + std::to_string(orbit) + " (tet " + std::to_string(c.tet) + " vertex " +
                      std::to_string(c.vertex) + ") has a link with Euler characteristic " +
                      std::to_string(sk.vertex_link_euler[orbit]) + ", not a 2-sphere");
    }
  }
  return sk;
}

}  // namespace nsk
