#include "nsk/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "nsk/checked.hpp"
#include "nsk/error.hpp"

namespace nsk {

NormalCoordinates vertex_link(const SkeletonIndex& sk, std::size_t orbit) {
  if (orbit >= sk.v())
    throw Error(ErrorKind::Coordinates,
                "vertex orbit " + std::to_string(orbit) + " out of range (" + std::to_string(sk.v()) + " vertices)");
  NormalCoordinates x(sk.t());
  for (const Corner& c : sk.vertex_orbits[orbit]) x.set(c.tet, c.vertex, x.get(c.tet, c.vertex) + 1);
  return x;
}

NormalCoordinates haken_sum(const NormalCoordinates& x, const NormalCoordinates& y) {
  if (x.tet_count() != y.tet_count())
    throw Error(ErrorKind::Coordinates, "cannot add surfaces over " + std::to_string(x.tet_count()) + " and " +
                                            std::to_string(y.tet_count()) + " tetrahedra");
  std::vector<std::int64_t> sum(x.values().size());
  for (std::size_t a = 0; a < x.tet_count(); ++a) {
    const auto qx = x.quad_type(a), qy = y.quad_type(a);
    if (qx && qy && *qx != *qy)
      throw Error(ErrorKind::Incompatible, "quad types Q" + std::to_string(*qx) + " and Q" + std::to_string(*qy) +
                                               " meet in tetrahedron " + std::to_string(a));
  }
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = checked_add(x.values()[i], y.values()[i]);
  return NormalCoordinates(std::move(sum));
}

bool is_vertex_link_multiple(const SkeletonIndex& sk, const NormalCoordinates& x) {
  if (x.is_zero() || x.tet_count() != sk.t()) return false;
  for (std::size_t orbit = 0; orbit < sk.v(); ++orbit) {
    const NormalCoordinates link = vertex_link(sk, orbit);
    const Corner c = sk.vertex_orbits[orbit].front();
    const std::int64_t factor = x.get(c.tet, c.vertex) / link.get(c.tet, c.vertex);
    if (factor >= 1 && link.scaled(factor) == x) return true;
  }
  return false;
}

double search_space_estimate(std::size_t tet_count, std::int64_t cap) {
  return std::pow(static_cast<double>(cap) + 1.0, 7.0 * static_cast<double>(tet_count));
}

namespace {

class Search {
 public:
  Search(const Triangulation& tri, std::int64_t cap) : tri_(tri), cap_(cap), x_(tri.size()) {}

  void run_profile(const std::vector<int>& profile) {
    profile_ = &profile;
    tet(0);
  }

  std::vector<NormalCoordinates> take() { return std::move(found_); }

 private:
  void tet(std::size_t a) {
    if (a == tri_.size()) {
      found_.push_back(x_);
      return;
    }
    const int k = (*profile_)[a];
    for (int qt = 0; qt < 3; ++qt) x_.set(a, 4 + qt, 0);
    const std::int64_t quad_lo = k < 0 ? 0 : 1;
    const std::int64_t quad_hi = k < 0 ? 0 : cap_;
    for (std::int64_t m = quad_lo; m <= quad_hi; ++m) {
      if (k >= 0) x_.set(a, 4 + k, m);
      for (std::int64_t t0 = 0; t0 <= cap_; ++t0)
        for (std::int64_t t1 = 0; t1 <= cap_; ++t1)
          for (std::int64_t t2 = 0; t2 <= cap_; ++t2)
            for (std::int64_t t3 = 0; t3 <= cap_; ++t3) {
              x_.set(a, 0, t0);
              x_.set(a, 1, t1);
              x_.set(a, 2, t2);
              x_.set(a, 3, t3);
              if (faces_match(a)) tet(a + 1);
            }
    }
    for (int type = 0; type < kDiskTypes; ++type) x_.set(a, type, 0);
  }

  // Matching on every face of `a` whose partner tetrahedron is already bound.
  bool faces_match(std::size_t a) const {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = tri_.gluing(a, f);
      if (g.tet > a) continue;
      for (int w : face_vertices(f))
        if (arc_count(x_, a, f, w) != arc_count(x_, g.tet, g.perm[f], g.perm[w])) return false;
    }
    return true;
  }

  const Triangulation& tri_;
  std::int64_t cap_;
  NormalCoordinates x_;
  const std::vector<int>* profile_ = nullptr;
  std::vector<NormalCoordinates> found_;
};

bool passes_filters(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x,
                    const EnumerationQuery& query) {
  if (query.exclude_vertex_links && is_vertex_link_multiple(sk, x)) return false;
  if (query.chi) {
    const std::int64_t chi = euler_characteristic(tri, sk, x);
    if (chi < query.chi->first || chi > query.chi->second) return false;
  }
  if (query.connected || query.orientable) {
    const EmbeddedSurface s = reconstruct(tri, sk, x);
    if (query.connected && s.components.size() != 1) return false;
    if (query.orientable)
      for (const auto& c : s.components)
        if (!c.orientable) return false;
  }
  return true;
}

}  // namespace

std::vector<NormalCoordinates> enumerate(const Triangulation& tri, const SkeletonIndex& sk,
                                         const EnumerationQuery& query) {
  const std::size_t t = tri.size();
  if (query.cap < 0) throw Error(ErrorKind::Envelope, "cap must be non-negative");
  if (t > kMaxEnumerationTets || query.cap > kMaxEnumerationCap) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", search_space_estimate(t, query.cap));
    throw Error(ErrorKind::Envelope, "enumeration supports t <= " + std::to_string(kMaxEnumerationTets) +
                                         " and cap <= " + std::to_string(kMaxEnumerationCap) + "; requested t = " +
                                         std::to_string(t) + ", cap = " + std::to_string(query.cap) +
                                         " (search space about " + buf + " vectors)");
  }
  if (query.quad_profile) {
    if (query.quad_profile->size() != t)
      throw Error(ErrorKind::Coordinates, "quad profile has " + std::to_string(query.quad_profile->size()) +
                                              " entries for " + std::to_string(t) + " tetrahedra");
    for (int k : *query.quad_profile)
      if (k < -1 || k > 2) throw Error(ErrorKind::Coordinates, "quad profile entries must be -1, 0, 1 or 2");
  }

  Search search(tri, query.cap);
  if (query.quad_profile) {
    search.run_profile(*query.quad_profile);
  } else {
    // Every assignment of {none, Q0, Q1, Q2} to the tetrahedra.
    std::vector<int> profile(t, -1);
    while (true) {
      search.run_profile(profile);
      std::size_t a = 0;
      while (a < t && profile[a] == 2) profile[a++] = -1;
      if (a == t) break;
      ++profile[a];
    }
  }

  std::vector<NormalCoordinates> out;
  for (auto& x : search.take())
    if (passes_filters(tri, sk, x, query)) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalCoordinates> enumerate(const Triangulation& tri, const EnumerationQuery& query) {
  return enumerate(tri, build_skeleton(tri), query);
}

}  // namespace nsk
