// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "nsk/bound_report.hpp"
#include "nsk/cli.hpp"
#include "nsk/cut_complex.hpp"
#include "nsk/enumeration.hpp"
#include "nsk/error.hpp"
#include "nsk/homology.hpp"
#include "nsk/skeleton.hpp"
#include "support.hpp"

using namespace nsk;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<std::pair<std::string, Triangulation>> inputs(bool orientable_only) {
  std::vector<std::pair<std::string, Triangulation>> out;
  for (const auto& name : orientable_only ? test::orientable_corpus_names() : test::corpus_names())
    out.emplace_back(name, test::corpus_tri(name));
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const std::size_t t = 1 + static_cast<std::size_t>(i) % 6;
    const bool orientable = orientable_only || i % 4 != 3;
    out.emplace_back("random#" + std::to_string(i) + " t=" + std::to_string(t),
                     test::random_closed_triangulation(rng, t, orientable));
  }
  return out;
}

/// Every surface of every orientable corpus entry with t <= 2, cap 1.
std::vector<std::tuple<std::string, Triangulation, NormalCoordinates>> small_surfaces() {
  std::vector<std::tuple<std::string, Triangulation, NormalCoordinates>> out;
  for (const auto& name : test::orientable_corpus_names()) {
    const Triangulation tri = test::corpus_tri(name);
    if (tri.size() > 2) continue;
    for (auto& x : enumerate(tri, EnumerationQuery{.cap = 1})) out.emplace_back(name, tri, std::move(x));
  }
  return out;
}

bool two_sided(const EmbeddedSurface& s) {
  return std::all_of(s.components.begin(), s.components.end(), [](const auto& c) { return c.orientable; });
}

std::string label(const std::string& name, const NormalCoordinates& x) { return name + " [" + to_string(x) + "]"; }

void skeleton_identities() {
  std::size_t count = 0;
  for (const auto& [name, tri] : inputs(false)) {
    const auto start = std::chrono::steady_clock::now();
    const SkeletonIndex sk = build_skeleton(tri);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(sk.e() == sk.t() + sk.v(), name + ": e != t + v");
    expect(sk.f() == 2 * sk.t(), name + ": f != 2t");
    expect(sk.euler_char() == 0, name + ": chi != 0");
    expect(secs < 1.0, name + ": skeleton took over 1 s");
    ++count;
  }
  expect(count >= 58, "fewer than 50 random instances");
}

void homology_bound() {
  for (const auto& [name, tri] : inputs(false)) {
    const SkeletonIndex sk = build_skeleton(tri);
    const TreeCertificate tree = spanning_tree_bound(sk);
    const Z2HomologyProfile h = h1_z2_rank(tri, sk);
    expect(tree.e_non_tree == sk.t() + 1, name + ": e_N != t + 1");
    expect(h.rank_h1 <= sk.t() + 1, name + ": rank exceeds t + 1");
    expect(h.rank_h1 == test::h1_rank_oracle(tri), name + ": rank disagrees with the oracle");
  }
}

void euler_and_corners() {
  for (const auto& name : test::corpus_names()) {
    const Triangulation tri = test::corpus_tri(name);
    const SkeletonIndex sk = build_skeleton(tri);
    for (const auto& x : enumerate(tri, sk, EnumerationQuery{.cap = 1})) {
      const EmbeddedSurface s = reconstruct(tri, sk, x);
      expect(s.euler == s.cells.euler(), label(name, x) + ": closed formula != cell count");
      // points on one edge orbit are counted the same from every corner
      for (std::size_t e = 0; e < sk.e(); ++e) {
        std::optional<std::int64_t> seen;
        for (const auto& ref : sk.edge_orbits[e]) {
          const auto [i, j] = kEdgeVertices[static_cast<std::size_t>(ref.edge)];
          const std::int64_t n = edge_point_count(x, ref.tet, i, j);
          expect(!seen || *seen == n, label(name, x) + ": edge weight differs around an orbit");
          seen = n;
        }
      }
    }
  }
}

void bad_disk_bounds() {
  for (const auto& [name, tri, x] : small_surfaces()) {
    const SkeletonIndex sk = build_skeleton(tri);
    const CutComplex cc = cut_along(tri, sk, reconstruct(tri, sk, x));
    const auto t = static_cast<std::int64_t>(tri.size());
    for (const auto& [tris, quads] : cc.remnants.bad_per_tet)
      expect(tris <= 4 && quads <= 2, label(name, x) + ": per-tetrahedron bad count above (4, 2)");
    expect(cc.remnants.s <= 4 * t, label(name, x) + ": s > 4t");
    expect(cc.remnants.q <= 2 * t, label(name, x) + ": q > 2t");
  }
}

void remnant_count() {
  std::size_t checked = 0;
  for (const auto& [name, tri, x] : small_surfaces()) {
    const SkeletonIndex sk = build_skeleton(tri);
    const EmbeddedSurface s = reconstruct(tri, sk, x);
    if (!two_sided(s)) continue;
    const CutComplex cc = cut_along(tri, sk, s);
    const auto k = static_cast<std::int64_t>(s.components.size());
    expect(static_cast<std::int64_t>(cc.remnants.remnants.size()) == 2 * k, label(name, x) + ": remnants != 2k");
    expect(cc.remnants.g + cc.remnants.b == 2 * k, label(name, x) + ": g + b != 2k");
    ++checked;
  }
  expect(checked > 0, "no two-sided instances");
}

void parallelism_flags() {
  const Triangulation tri = test::corpus_tri("t2_closed");
  const SkeletonIndex sk = build_skeleton(tri);
  const NormalCoordinates sphere = test::corpus_surfaces("t2_closed_sphere.nsc").surfaces[0];
  auto flags = [&](const NormalCoordinates& x) {
    std::map<ProductFlag, std::size_t> n;
    for (const auto& c : cut_along(tri, sk, reconstruct(tri, sk, x)).components.components) ++n[c.flag];
    return n;
  };
  expect(flags(sphere.scaled(2))[ProductFlag::ParallelSurfaces] == 1, "two spheres: expected one parallel-surfaces flag");
  expect(flags(sphere)[ProductFlag::ParallelSurfaces] == 0, "one sphere flagged as parallel");
  expect(flags(vertex_link(sk, 0))[ProductFlag::VertexLinkParallel] == 1, "vertex link: collar not flagged");
}

void certificate_chain() {
  const Triangulation tri = test::corpus_tri("t2_closed");
  const NormalCoordinates sphere = test::corpus_surfaces("t2_closed_sphere.nsc").surfaces[0];
  const FinitenessReport good = certify(tri, sphere);
  expect(good.exit_code() == 0 && good.chain_closed && good.bound_holds, "curated sphere does not close the chain");
  const FinitenessReport five = certify(tri, sphere.scaled(5));
  expect(five.exit_code() == 2 && five.unconditional_pass(), "five spheres: expected a conditional failure only");
  expect(!five.flags.empty(), "five spheres: no flags");
  const std::string dir = test::corpus_dir().string() + "/";
  std::ostringstream out, err;
  expect(cli::run({"bound", dir + "t2_closed.tri", dir + "t2_closed_sphere.nsc"}, out, err) == 0, "cli: curated exit != 0");
  expect(cli::run({"bound", dir + "t2_closed.tri", dir + "t2_closed_sphere_x5.nsc"}, out, err) == 2, "cli: x5 exit != 2");
}

void enumeration_oracle() {
  for (const auto& name : test::corpus_names()) {
    const Triangulation tri = test::corpus_tri(name);
    if (tri.size() != 1) continue;
    auto want = test::naive_enumerate(tri, 1);
    std::sort(want.begin(), want.end());
    const auto a = enumerate(tri, EnumerationQuery{.cap = 1});
    const auto b = enumerate(tri, EnumerationQuery{.cap = 1});
    expect(a == b, name + ": enumeration not deterministic");
    std::vector<std::vector<std::int64_t>> got;
    for (const auto& x : a) got.push_back(test::as_vector(x));
    expect(got == want, name + ": enumeration differs from the 128-vector oracle");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"skeleton identities e = t + v, f = 2t, chi = 0 (corpus + 60 random, each < 1 s)", skeleton_identities},
      {"spanning-tree bound e_N = t + 1 and rank H1(M;Z2) against the oracle", homology_bound},
      {"Euler characteristic formula and edge weights on enumerated surfaces", euler_and_corners},
      {"bad disks per tetrahedron <= (4, 2), s <= 4t, q <= 2t", bad_disk_bounds},
      {"two-sided surfaces leave 2k remnants", remnant_count},
      {"parallelism flags for doubled spheres and link collars", parallelism_flags},
      {"certificate chain: curated sphere exits 0, five copies exit 2", certificate_chain},
      {"t = 1, cap 1 enumeration equals the exhaustive oracle", enumeration_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      why = f.what;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (why.empty() ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    if (!why.empty()) std::cout << ": " << why;
    std::cout << '\n';
    failed += !why.empty();
  }
  return failed == 0 ? 0 : 1;
}
