#include "nsk/normal_surface.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "disjoint_sets.hpp"
#include "nsk/checked.hpp"
#include "nsk/error.hpp"
#include "text_lines.hpp"

namespace nsk {

// ---------------------------------------------------------------------------
// NormalCoordinates

NormalCoordinates::NormalCoordinates(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.size() % kDiskTypes != 0)
    throw Error(ErrorKind::Coordinates,
                "coordinate vector length " + std::to_string(values_.size()) + " is not a multiple of 7");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] < 0)
      throw Error(ErrorKind::Coordinates, "coordinate " + std::to_string(i) + " is negative");
}

void NormalCoordinates::set(std::size_t tet, int type, std::int64_t value) {
  if (value < 0) throw Error(ErrorKind::Coordinates, "coordinates must be non-negative");
  values_[kDiskTypes * tet + static_cast<std::size_t>(type)] = value;
}

std::optional<int> NormalCoordinates::quad_type(std::size_t tet) const {
  for (int k = 0; k < 3; ++k)
    if (quads(tet, k) != 0) return k;
  return std::nullopt;
}

std::int64_t NormalCoordinates::quad_count(std::size_t tet) const {
  return checked_add(checked_add(quads(tet, 0), quads(tet, 1)), quads(tet, 2));
}

bool NormalCoordinates::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t NormalCoordinates::total() const {
  std::int64_t sum = 0;
  for (std::int64_t v : values_) sum = checked_add(sum, v);
  return sum;
}

NormalCoordinates NormalCoordinates::scaled(std::int64_t factor) const {
  if (factor < 0) throw Error(ErrorKind::Coordinates, "scale factor must be non-negative");
  NormalCoordinates out = *this;
  for (auto& v : out.values_) v = checked_mul(v, factor);
  return out;
}

std::string to_string(const NormalCoordinates& x) {
  std::ostringstream out;
  for (std::size_t i = 0; i < x.values().size(); ++i) out << (i ? " " : "") << x.values()[i];
  return out.str();
}

// ---------------------------------------------------------------------------
// Admissibility, arcs, matching

AdmissibilityCheck check_admissible(const NormalCoordinates& x) {
  for (std::size_t a = 0; a < x.tet_count(); ++a) {
    int used = 0;
    for (int k = 0; k < 3; ++k) used += x.quads(a, k) != 0;
    if (used > 1) return {false, a};
  }
  return {};
}

AdmissibilityCheck check_admissible(const Triangulation& tri, const NormalCoordinates& x) {
  if (x.tet_count() != tri.size())
    throw Error(ErrorKind::Coordinates, "coordinate vector has " + std::to_string(x.values().size()) +
                                            " entries, expected " + std::to_string(kDiskTypes * tri.size()));
  return check_admissible(x);
}

std::int64_t arc_count(const NormalCoordinates& x, std::size_t tet, int face, int w) {
  // The quad whose trace on `face` cuts off w is the one pairing w with `face`.
  int k = 0;
  while (quad_partner(k, face) != w) ++k;
  return checked_add(x.triangles(tet, w), x.quads(tet, k));
}

std::int64_t edge_point_count(const NormalCoordinates& x, std::size_t tet, int i, int j) {
  std::int64_t n = checked_add(x.triangles(tet, i), x.triangles(tet, j));
  for (int k = 0; k < 3; ++k)
    if (quad_crosses(k, i, j)) n = checked_add(n, x.quads(tet, k));
  return n;
}

MatchingCheck check_matching(const Triangulation& tri, const NormalCoordinates& x) {
  if (x.tet_count() != tri.size())
    throw Error(ErrorKind::Coordinates, "coordinate vector does not match the triangulation size");
  MatchingCheck out;
  const auto reps = tri.face_orbit_representatives();
  for (std::size_t orbit = 0; orbit < reps.size(); ++orbit) {
    const FaceRef rep = reps[orbit];
    const FaceGluing& g = tri.gluing(rep.tet, rep.face);
    for (int w : face_vertices(rep.face)) {
      std::int64_t lhs = arc_count(x, rep.tet, rep.face, w);
      std::int64_t rhs = arc_count(x, g.tet, g.perm[rep.face], g.perm[w]);
      if (lhs != rhs) out.violations.push_back({orbit, rep, w, lhs, rhs});
    }
  }
  out.matching = out.violations.empty();
  return out;
}

std::int64_t weight(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x) {
  if (x.tet_count() != tri.size())
    throw Error(ErrorKind::Coordinates, "coordinate vector does not match the triangulation size");
  std::int64_t total = 0;
  for (std::size_t orbit = 0; orbit < sk.e(); ++orbit) {
    const auto& members = sk.edge_orbits[orbit];
    auto count_at = [&](const EdgeRef& ref) {
      auto [i, j] = kEdgeVertices[static_cast<std::size_t>(ref.edge)];
      return edge_point_count(x, ref.tet, i, j);
    };
    const std::int64_t n = count_at(members.front());
    for (const EdgeRef& ref : members)
      if (count_at(ref) != n)
        throw Error(ErrorKind::Internal, "corner counts differ around edge orbit " + std::to_string(orbit) +
                                             " (matching equations do not hold)");
    total = checked_add(total, n);
  }
  return total;
}

std::int64_t weight(const Triangulation& tri, const NormalCoordinates& x) { return weight(tri, build_skeleton(tri), x); }

std::int64_t euler_characteristic(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x) {
  std::int64_t arcs = 0;
  for (const auto& orbit : sk.face_orbits) {
    const FaceRef rep = orbit[0];
    for (int w : face_vertices(rep.face)) arcs = checked_add(arcs, arc_count(x, rep.tet, rep.face, w));
  }
  return checked_add(checked_sub(weight(tri, sk, x), arcs), x.total());
}

std::int64_t euler_characteristic(const Triangulation& tri, const NormalCoordinates& x) {
  return euler_characteristic(tri, build_skeleton(tri), x);
}

// ---------------------------------------------------------------------------
// Embedded realization

std::pair<int, int> arc_direction(int type, int face) {
  if (is_triangle(type)) {
    // Boundary cycle through the edges {v,u1} -> {v,u2} -> {v,u3}.
    auto u = face_vertices(type);
    if (face == u[2]) return {u[0], u[1]};
    if (face == u[0]) return {u[1], u[2]};
    return {u[2], u[0]};
  }
  // Quad {a,b}|{c,d}: boundary cycle ac -> ad -> bd -> bc.
  const int k = type - 4;
  const int a = 0, b = k + 1;
  int c = -1, d = -1;
  for (int v = 1; v < 4; ++v)
    if (v != b) (c < 0 ? c : d) = v;
  if (face == b) return {c, d};
  if (face == c) return {a, b};
  if (face == a) return {d, c};
  return {b, a};
}

std::size_t EmbeddedSurface::disk_id(std::size_t tet, int type, std::int64_t index) const {
  return disk_offset_[kDiskTypes * tet + static_cast<std::size_t>(type)] + static_cast<std::size_t>(index);
}

std::size_t EmbeddedSurface::disk_at_arc(std::size_t tet, int face, int w, std::int64_t r) const {
  const std::int64_t tri_count = coords.triangles(tet, w);
  if (r < tri_count) return disk_id(tet, w, r);
  int k = 0;
  while (quad_partner(k, face) != w) ++k;
  const std::int64_t m = coords.quads(tet, k);
  const std::int64_t j = r - tri_count;
  return disk_id(tet, 4 + k, quad_side(k, w) == 0 ? j : m - 1 - j);
}

std::size_t EmbeddedSurface::disk_at_point(std::size_t tet, int i, int j, std::int64_t pos) const {
  const std::int64_t ti = coords.triangles(tet, i);
  if (pos < ti) return disk_id(tet, i, pos);
  std::int64_t crossing = 0;
  int k_cross = -1;
  for (int k = 0; k < 3; ++k)
    if (quad_crosses(k, i, j) && coords.quads(tet, k) > 0) {
      crossing = coords.quads(tet, k);
      k_cross = k;
    }
  if (pos < ti + crossing) {
    const std::int64_t q = pos - ti;
    return disk_id(tet, 4 + k_cross, quad_side(k_cross, i) == 0 ? q : crossing - 1 - q);
  }
  const std::int64_t n = edge_point_count(coords, tet, i, j);
  return disk_id(tet, j, n - 1 - pos);
}

std::size_t EmbeddedSurface::point_id(std::size_t tet, int i, int j, std::int64_t pos) const {
  const std::size_t slot = 6 * tet + static_cast<std::size_t>(edge_index(i, j));
  const std::size_t n = point_offset_[slot + 1] - point_offset_[slot];
  const auto p = static_cast<std::size_t>(pos);
  return point_offset_[slot] + (i < j ? p : n - 1 - p);
}

int EmbeddedSurface::side_facing(std::size_t disk, int w) const {
  const Disk& d = disks[disk];
  return is_triangle(d.type) ? 0 : quad_side(d.type - 4, w);
}

namespace {

std::optional<std::size_t> matching_link(const SkeletonIndex& sk, const NormalCoordinates& c) {
  for (std::size_t orbit = 0; orbit < sk.v(); ++orbit) {
    NormalCoordinates link(sk.t());
    for (const Corner& corner : sk.vertex_orbits[orbit])
      link.set(corner.tet, corner.vertex, link.get(corner.tet, corner.vertex) + 1);
    if (link == c) return orbit;
  }
  return std::nullopt;
}

}  // namespace

EmbeddedSurface reconstruct(const Triangulation& tri, const SkeletonIndex& sk, const NormalCoordinates& x) {
  if (auto adm = check_admissible(tri, x); !adm.admissible)
    throw Error(ErrorKind::Coordinates,
                "quad condition fails in tetrahedron " + std::to_string(*adm.first_violation));
  if (auto mc = check_matching(tri, x); !mc.matching) {
    const auto& v = mc.violations.front();
    throw Error(ErrorKind::Coordinates, "matching equation fails on face orbit " + std::to_string(v.face_orbit) +
                                            " arc type " + std::to_string(v.vertex) + " (" + std::to_string(v.lhs) +
                                            " vs " + std::to_string(v.rhs) + ")");
  }
  const std::int64_t disk_total = x.total();
  if (disk_total > kMaxRealizedDisks)
    throw Error(ErrorKind::Envelope, "surface has " + std::to_string(disk_total) + " disks; realization is limited to " +
                                         std::to_string(kMaxRealizedDisks));

  const std::size_t t = tri.size();
  EmbeddedSurface s;
  s.coords = x;

  s.disk_offset_.assign(kDiskTypes * t + 1, 0);
  for (std::size_t a = 0; a < t; ++a)
    for (int type = 0; type < kDiskTypes; ++type) {
      const std::size_t slot = kDiskTypes * a + static_cast<std::size_t>(type);
      s.disk_offset_[slot + 1] = s.disk_offset_[slot] + static_cast<std::size_t>(x.get(a, type));
      for (std::int64_t i = 0; i < x.get(a, type); ++i) s.disks.push_back({a, type, i});
    }
  s.point_offset_.assign(6 * t + 1, 0);
  for (std::size_t a = 0; a < t; ++a)
    for (int e = 0; e < 6; ++e) {
      auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
      const std::size_t slot = 6 * a + static_cast<std::size_t>(e);
      s.point_offset_[slot + 1] = s.point_offset_[slot] + static_cast<std::size_t>(edge_point_count(x, a, i, j));
    }

  // Arc gluings, one per pair of matched arcs on each face orbit.
  detail::DisjointSets disk_sets(s.disks.size());
  detail::DisjointSets point_sets(s.point_count());
  for (std::size_t orbit = 0; orbit < sk.f(); ++orbit) {
    const FaceRef rep = sk.face_orbits[orbit][0];
    const FaceGluing& g = tri.gluing(rep.tet, rep.face);
    const FaceRef other{g.tet, g.perm[rep.face]};
    for (int w : face_vertices(rep.face)) {
      const int w_img = g.perm[w];
      const std::int64_t n = arc_count(x, rep.tet, rep.face, w);
      for (std::int64_t r = 0; r < n; ++r) {
        ArcGluing arc;
        arc.face_orbit = orbit;
        arc.side_a = rep;
        arc.side_b = other;
        arc.vertex_a = w;
        arc.vertex_b = w_img;
        arc.position = r;
        arc.disk_a = s.disk_at_arc(rep.tet, rep.face, w, r);
        arc.disk_b = s.disk_at_arc(other.tet, other.face, w_img, r);
        auto dir_a = arc_direction(s.disks[arc.disk_a].type, rep.face);
        auto dir_b = arc_direction(s.disks[arc.disk_b].type, other.face);
        arc.same_direction = g.perm[dir_a.first] == dir_b.first;
        disk_sets.unite(arc.disk_a, arc.disk_b);
        s.arc_gluings.push_back(arc);
      }
    }
    // Points on the three edges of the face.
    auto vs = face_vertices(rep.face);
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 3; ++q) {
        const int i = vs[p], j = vs[q];
        const std::int64_t n = edge_point_count(x, rep.tet, i, j);
        if (n != edge_point_count(x, other.tet, g.perm[i], g.perm[j]))
          throw Error(ErrorKind::Internal, "edge point counts differ across face orbit " + std::to_string(orbit));
        for (std::int64_t pos = 0; pos < n; ++pos)
          point_sets.unite(s.point_id(rep.tet, i, j, pos), s.point_id(other.tet, g.perm[i], g.perm[j], pos));
      }
  }

  // Connected components, numbered by their smallest disk.
  std::size_t component_count = 0;
  s.component_of = disk_sets.labels(&component_count);
  s.components.resize(component_count);
  for (auto& c : s.components) c.coords = NormalCoordinates(t);
  for (std::size_t d = 0; d < s.disks.size(); ++d) {
    auto& c = s.components[s.component_of[d]];
    c.disks.push_back(d);
    c.coords.set(s.disks[d].tet, s.disks[d].type, c.coords.get(s.disks[d].tet, s.disks[d].type) + 1);
  }

  // Orientation: glued disks must traverse their shared arc in opposite directions.
  std::vector<std::vector<std::size_t>> arcs_of(s.disks.size());
  for (std::size_t i = 0; i < s.arc_gluings.size(); ++i) {
    arcs_of[s.arc_gluings[i].disk_a].push_back(i);
    arcs_of[s.arc_gluings[i].disk_b].push_back(i);
  }
  s.orientation.assign(s.disks.size(), 0);
  for (auto& c : s.components) {
    std::queue<std::size_t> queue;
    s.orientation[c.disks.front()] = 1;
    queue.push(c.disks.front());
    while (!queue.empty()) {
      std::size_t d = queue.front();
      queue.pop();
      for (std::size_t i : arcs_of[d]) {
        const ArcGluing& arc = s.arc_gluings[i];
        const std::size_t other = arc.disk_a == d ? arc.disk_b : arc.disk_a;
        const int want = arc.same_direction ? -s.orientation[d] : s.orientation[d];
        if (s.orientation[other] == 0) {
          s.orientation[other] = want;
          queue.push(other);
        } else if (s.orientation[other] != want) {
          c.orientable = false;
        }
      }
    }
  }

  // Cell counts on the glued complex.
  std::size_t vertex_count = 0;
  s.vertex_of_point_ = point_sets.labels(&vertex_count);
  std::vector<std::size_t> component_of_vertex(vertex_count, 0);
  for (std::size_t a = 0; a < t; ++a)
    for (int e = 0; e < 6; ++e) {
      auto [i, j] = kEdgeVertices[static_cast<std::size_t>(e)];
      const std::int64_t n = edge_point_count(x, a, i, j);
      for (std::int64_t pos = 0; pos < n; ++pos)
        component_of_vertex[s.vertex_of_point_[s.point_id(a, i, j, pos)]] = s.component_of[s.disk_at_point(a, i, j, pos)];
    }
  s.cells = {static_cast<std::int64_t>(vertex_count), static_cast<std::int64_t>(s.arc_gluings.size()),
             static_cast<std::int64_t>(s.disks.size())};
  for (std::size_t v = 0; v < vertex_count; ++v) ++s.components[component_of_vertex[v]].cells.vertices;
  for (const auto& arc : s.arc_gluings) ++s.components[s.component_of[arc.disk_a]].cells.edges;
  for (auto& c : s.components) c.cells.faces = static_cast<std::int64_t>(c.disks.size());

  s.weight = weight(tri, sk, x);
  s.euler = euler_characteristic(tri, sk, x);
  for (auto& c : s.components) {
    c.weight = weight(tri, sk, c.coords);
    c.euler = euler_characteristic(tri, sk, c.coords);
    c.vertex_link = matching_link(sk, c.coords);
  }
  return s;
}

// ---------------------------------------------------------------------------
// .nsc

SurfaceList parse_surfaces(std::string_view text) {
  detail::LineReader reader(text);
  auto header = reader.next();
  if (!header) throw Error(ErrorKind::Syntax, "empty input, expected 'surfaces n tets t'");
  auto words = detail::split_words(header->text);
  if (words.size() != 4 || words[0] != "surfaces" || words[2] != "tets")
    throw Error(ErrorKind::Syntax, "expected 'surfaces n tets t'", header->number);
  const std::size_t n = detail::parse_size(words[1], header->number);
  SurfaceList out;
  out.tet_count = detail::parse_size(words[3], header->number);
  if (out.tet_count == 0) throw Error(ErrorKind::Syntax, "tetrahedron count must be positive", header->number);
  const std::size_t width = kDiskTypes * out.tet_count;
  for (std::size_t s = 0; s < n; ++s) {
    auto line = reader.next();
    if (!line)
      throw Error(ErrorKind::Syntax, "expected " + std::to_string(n) + " surface lines, found " + std::to_string(s));
    auto entries = detail::split_words(line->text);
    if (entries.size() != width)
      throw Error(ErrorKind::Coordinates,
                  "expected " + std::to_string(width) + " coordinates, found " + std::to_string(entries.size()),
                  line->number);
    std::vector<std::int64_t> values;
    values.reserve(width);
    for (auto word : entries) {
      std::int64_t v = detail::parse_int64(word, line->number);
      if (v < 0) throw Error(ErrorKind::Coordinates, "negative coordinate " + std::string(word), line->number);
      values.push_back(v);
    }
    out.surfaces.emplace_back(std::move(values));
  }
  if (auto extra = reader.next())
    throw Error(ErrorKind::Syntax, "unexpected data after the last surface", extra->number);
  return out;
}

std::string serialize(const SurfaceList& list) {
  std::ostringstream out;
  out << "surfaces " << list.surfaces.size() << " tets " << list.tet_count << '\n';
  for (const auto& s : list.surfaces) out << to_string(s) << '\n';
  return out.str();
}

SurfaceList load_surfaces(const std::string& path) { return parse_surfaces(detail::read_file(path)); }

}  // namespace nsk
