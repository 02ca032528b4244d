#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "nsk/error.hpp"
#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"
#include "support.hpp"

using namespace nsk;

namespace {

// Same partition, regardless of numbering.
template <typename A, typename B>
bool same_partition(const std::vector<A>& lhs, const std::vector<B>& rhs) {
  std::map<A, B> forward;
  std::map<B, A> backward;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    auto [f, fi] = forward.emplace(lhs[i], rhs[i]);
    auto [b, bi] = backward.emplace(rhs[i], lhs[i]);
    if (f->second != rhs[i] || b->second != lhs[i]) return false;
  }
  return true;
}

void check_against_bfs(const Triangulation& tri) {
  const SkeletonIndex sk = build_skeleton(tri);
  const test::OrbitOracle o = test::bfs_orbits(tri);
  CHECK(sk.v() == o.v);
  CHECK(sk.e() == o.e);
  CHECK(sk.f() == o.f);
  std::vector<std::size_t> lv, rv, le, re, lf, rf;
  for (std::size_t a = 0; a < tri.size(); ++a) {
    for (std::size_t i = 0; i < 4; ++i) {
      lv.push_back(sk.vertex_of[a][i]);
      rv.push_back(o.vertex_label[a][i]);
      lf.push_back(sk.face_of[a][i]);
      rf.push_back(o.face_label[a][i]);
    }
    for (std::size_t i = 0; i < 6; ++i) {
      le.push_back(sk.edge_of[a][i]);
      re.push_back(o.edge_label[a][i]);
    }
  }
  CHECK(same_partition(lv, rv));
  CHECK(same_partition(le, re));
  CHECK(same_partition(lf, rf));
}

}  // namespace

TEST_CASE("corpus skeletons satisfy the closed-manifold identities") {
  for (const auto& name : test::corpus_names()) {
    CAPTURE(name);
    const SkeletonIndex sk = build_skeleton(test::corpus_tri(name));
    CHECK(sk.f() == 2 * sk.t());
    CHECK(sk.e() == sk.t() + sk.v());
    CHECK(sk.euler_char() == 0);
    CHECK_FALSE(sk.has_reversed_edges());
    for (auto chi : sk.vertex_link_euler) CHECK(chi == 2);
  }
}

TEST_CASE("t2_closed orbit counts") {
  const SkeletonIndex sk = build_skeleton(test::corpus_tri("t2_closed"));
  CHECK(sk.v() == 1);
  CHECK(sk.e() == 3);
  CHECK(sk.orientable);
}

TEST_CASE("union-find orbits agree with breadth-first orbits") {
  for (const auto& name : test::corpus_names()) {
    CAPTURE(name);
    check_against_bfs(test::corpus_tri(name));
  }
  std::mt19937_64 rng(11);
  for (std::size_t t = 1; t <= 5; ++t)
    for (int i = 0; i < 6; ++i) check_against_bfs(test::random_closed_triangulation(rng, t, i % 2 == 0));
}

TEST_CASE("orbit structure is consistent") {
  const Triangulation tri = test::corpus_tri("t2_s3_4v");
  const SkeletonIndex sk = build_skeleton(tri);
  std::size_t corners = 0, edges = 0;
  for (const auto& orbit : sk.vertex_orbits) corners += orbit.size();
  for (const auto& orbit : sk.edge_orbits) edges += orbit.size();
  CHECK(corners == 4 * tri.size());
  CHECK(edges == 6 * tri.size());
  for (std::size_t i = 0; i < sk.f(); ++i) {
    const auto [x, y] = sk.face_orbits[i];
    CHECK(tri.partner(x.tet, x.face) == y);
    CHECK(x < y);
  }
}

TEST_CASE("orientability") {
  CHECK(build_skeleton(test::corpus_tri("t2_closed")).orientable);
  CHECK_FALSE(build_skeleton(test::corpus_tri("t2_nonorientable")).orientable);
  const SkeletonIndex sk = build_skeleton(test::corpus_tri("t2_quaternion"));
  // every gluing relates opposite orientations
  const Triangulation tri = test::corpus_tri("t2_quaternion");
  for (std::size_t a = 0; a < tri.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = tri.gluing(a, f);
      CHECK((sk.orientation[a] == sk.orientation[g.tet]) == g.perm.is_odd());
    }
}

TEST_CASE("non-sphere vertex link is rejected") {
  // valid table, but the single vertex link has Euler characteristic 0
  const Triangulation tri = parse_triangulation("tets 1\n0:1203 0:2013 0:0231 0:0312\n");
  try {
    build_skeleton(tri);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonManifold);
    CHECK(std::string(e.what()).find("vertex") != std::string::npos);
  }
}

TEST_CASE("self-reversed edges are accepted and flagged") {
  const SkeletonIndex sk = build_skeleton(parse_triangulation("tets 1\n0:1032 0:1032 0:1032 0:1032\n"));
  CHECK(sk.has_reversed_edges());
  CHECK_FALSE(sk.is_manifold());
  CHECK(std::count(sk.edge_reversed.begin(), sk.edge_reversed.end(), true) >= 1);
}

TEST_CASE("disconnected tables are rejected") {
  const Triangulation tri =
      parse_triangulation("tets 2\n0:1023 0:1023 0:0132 0:0132\n1:1023 1:1023 1:0132 1:0132\n");
  CHECK_THROWS_AS(build_skeleton(tri), Error);
}

TEST_CASE("relabelling preserves orbit counts") {
  std::mt19937_64 rng(5);
  for (const auto& name : test::corpus_names()) {
    const Triangulation tri = test::corpus_tri(name);
    const SkeletonIndex a = build_skeleton(tri);
    for (int i = 0; i < 5; ++i) {
      const SkeletonIndex b = build_skeleton(test::random_relabel(tri, rng));
      CHECK(a.v() == b.v());
      CHECK(a.e() == b.e());
      CHECK(a.orientable == b.orientable);
    }
  }
}
